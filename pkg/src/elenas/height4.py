"""Bijection between Elenas and planted plane trees of height at most 4.

The terminating ``a`` becomes the root, each ``(a p*)`` factor a child of the
root, and each ``p_m`` inside it a node with ``m - 1`` leaves below.
"""

from __future__ import annotations

from .core import LEAF, ElenaWord, TooTall, Tree


def interpret_path(m: int) -> Tree:
    if m < 1:
        raise ValueError("a path has at least one node")
    return Tree((LEAF,) * (m - 1))


def elena_to_height4(w: ElenaWord) -> Tree:
    return Tree(tuple(Tree(tuple(interpret_path(m) for m in block)) for block in w.blocks))


def height4_to_elena(t: Tree) -> ElenaWord:
    if t.height > 4:
        raise TooTall(f"tree has height {t.height}, at most 4 allowed")
    return ElenaWord(
        tuple(tuple(p.degree + 1 for p in block.children) for block in t.children)
    )
