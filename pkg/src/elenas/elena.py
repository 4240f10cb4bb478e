"""Elenas: conversions between words, trees and nondecreasing Dyck paths.

An Elena is a rightmost branch (the spine) carrying chains as non-last
children.  The word ``(a p_5 p_3 p_1)(a p_4)(a)(a p_3 p_1 p_1) a`` reads the
spine from the root upwards: every ``a`` is a spine node, every ``p_m`` a chain
of ``m`` nodes hanging off the spine node that precedes it.
"""

from __future__ import annotations

from typing import Iterator

from .core import (
    DEFAULT_LIMITS,
    LEAF,
    DyckPath,
    ElenaWord,
    LimitExceeded,
    NotElenaShape,
    NotNondecreasing,
    Tree,
    chain,
    is_chain,
)
from .dyck import dyck_to_tree, is_nondecreasing, tree_to_dyck


def word_to_tree(w: ElenaWord) -> Tree:
    node = LEAF
    for block in reversed(w.blocks):
        node = Tree(tuple(chain(m) for m in block) + (node,))
    return node


def is_elena_shape(t: Tree) -> bool:
    while t.children:
        if not all(is_chain(c) for c in t.children[:-1]):
            return False
        t = t.children[-1]
    return True


def tree_to_word(t: Tree) -> ElenaWord:
    blocks = []
    while t.children:
        attached = t.children[:-1]
        if not all(is_chain(c) for c in attached):
            raise NotElenaShape("non-chain subtree hangs off the rightmost branch")
        blocks.append(tuple(c.size for c in attached))
        t = t.children[-1]
    return ElenaWord(tuple(blocks))


def word_to_dyck(w: ElenaWord) -> DyckPath:
    return tree_to_dyck(word_to_tree(w))


def dyck_to_word(p: DyckPath) -> ElenaWord:
    if not is_nondecreasing(p):
        raise NotNondecreasing(f"valley altitudes decrease in {p.steps!r}")
    return tree_to_word(dyck_to_tree(p))


def _token_key(m: int) -> str:
    return f"p{m}"


def enumerate_elenas(n: int, limit: int = DEFAULT_LIMITS.words) -> Iterator[ElenaWord]:
    """Every Elena word of size ``n``, sorted by its text rendering."""
    if n < 1:
        raise ValueError("Elenas have at least one node")
    if n > limit:
        raise LimitExceeded(f"size {n} exceeds the enumeration limit {limit}")

    # After the leading 'a', the rest is a token sequence of weight n - 1 that
    # ends in 'a'.  Tokens are tried in string order: 'a' < 'p1' < 'p10' < 'p2'.
    def rest(r: int) -> Iterator[list]:
        if r == 0:
            yield []
            return
        for m in sorted(range(0, r), key=lambda k: "a" if k == 0 else _token_key(k)):
            if m == 0:
                for tail in rest(r - 1):
                    yield ["a"] + tail
            else:
                for tail in rest(r - m):
                    yield [m] + tail

    for toks in rest(n - 1):
        yield ElenaWord(_blocks_from_tokens(toks))


def _blocks_from_tokens(toks: list) -> tuple[tuple[int, ...], ...]:
    # toks follow the root 'a'; a trailing 'a' terminates the word
    if not toks:
        return ()
    blocks: list[list[int]] = [[]]
    for t in toks[:-1]:
        if t == "a":
            blocks.append([])
        else:
            blocks[-1].append(t)
    return tuple(tuple(b) for b in blocks)


def count_elenas(n: int) -> int:
    """Number of Elenas with ``n`` nodes: [z^n] z(1-2z)/(1-3z+z^2)."""
    if n < 1:
        raise ValueError("n must be positive")
    seq = [0, 1, 1, 2]
    if n < 4:
        return seq[n]
    a, b = 1, 2
    for _ in range(4, n + 1):
        a, b = b, 3 * b - a
    return b


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a
