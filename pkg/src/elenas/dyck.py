"""Dyck path analytics and the glove bijection with planted plane trees."""

from __future__ import annotations

from math import comb
from typing import Iterator

from .core import DEFAULT_LIMITS, DyckPath, LimitExceeded, Tree


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def altitude_profile(p: DyckPath) -> list[int]:
    out = []
    h = 0
    for s in p.steps:
        h += 1 if s == "U" else -1
        out.append(h)
    return out


def valleys(p: DyckPath) -> list[int]:
    """Altitudes of the valleys (a Down step directly followed by an Up step)."""
    alt = altitude_profile(p)
    s = p.steps
    return [alt[i] for i in range(len(s) - 1) if s[i] == "D" and s[i + 1] == "U"]


def is_nondecreasing(p: DyckPath) -> bool:
    v = valleys(p)
    return all(x <= y for x, y in zip(v, v[1:]))


def dyck_to_tree(p: DyckPath) -> Tree:
    # each U opens a child of the current node, each D closes it
    stack: list[list[Tree]] = [[]]
    for s in p.steps:
        if s == "U":
            stack.append([])
        else:
            node = Tree(tuple(stack.pop()))
            stack[-1].append(node)
    return Tree(tuple(stack[0]))


def tree_to_dyck(t: Tree) -> DyckPath:
    out: list[str] = []
    todo: list[Tree | None] = list(reversed(t.children))
    while todo:
        node = todo.pop()
        if node is None:
            out.append("D")
            continue
        out.append("U")
        todo.append(None)
        todo.extend(reversed(node.children))
    return DyckPath("".join(out))


def enumerate_dyck_paths(n: int, limit: int = DEFAULT_LIMITS.dyck) -> Iterator[DyckPath]:
    """All Dyck paths of semilength ``n`` in lexicographic order with U < D."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > limit:
        raise LimitExceeded(f"semilength {n} exceeds the enumeration limit {limit}")

    def rec(prefix: str, ups: int, downs: int):
        if downs == n:
            yield prefix
            return
        if ups < n:
            yield from rec(prefix + "U", ups + 1, downs)
        if downs < ups:
            yield from rec(prefix + "D", ups, downs + 1)

    for w in rec("", 0, 0):
        yield DyckPath(w)


def enumerate_trees(size: int, limit: int = DEFAULT_LIMITS.dyck + 1) -> Iterator[Tree]:
    """All planted plane trees with ``size`` nodes, via the glove bijection."""
    if size < 1:
        raise ValueError("a tree has at least one node")
    yield from map(dyck_to_tree, enumerate_dyck_paths(size - 1, limit=limit - 1))
