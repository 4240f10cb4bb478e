"""Per-tree statistics and exhaustive aggregates over all Elenas of a size.

These are the brute-force side of every generating-function check: every
number here comes from walking actual trees.
"""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass, fields

from .core import DEFAULT_LIMITS, ElenaWord, LimitExceeded, StatRecord, Tree
from .elena import enumerate_elenas, word_to_tree
from .genfunc import BivariateSeries

STAT_FIELDS = (
    "root_degree",
    "leaves",
    "paths",
    "spine_nodes",
    "path_nodes",
    "psi",
    "path_length",
    "height_total",
)

CSV_HEADER = ("n", "count") + STAT_FIELDS


def _walk(t: Tree) -> tuple[int, int, int]:
    """Return (leaves, psi, path_length) with the root at depth 1."""
    leaves = psi = path_length = 0
    # (node, depth); the subtree size of a node is its size, cached on the tree
    stack = [(t, 1)]
    while stack:
        node, depth = stack.pop()
        psi += node.size
        path_length += depth
        if not node.children:
            leaves += 1
        stack.extend((c, depth + 1) for c in node.children)
    return leaves, psi, path_length


def tree_stats(w: ElenaWord) -> StatRecord:
    t = word_to_tree(w)
    leaves, psi, path_length = _walk(t)
    return StatRecord(
        root_degree=t.degree,
        leaves=leaves,
        height=t.height,
        psi=psi,
        path_length=path_length,
        paths=sum(len(b) for b in w.blocks),
        spine_nodes=len(w.blocks) + 1,
        path_nodes=sum(sum(b) for b in w.blocks),
    )


@dataclass(frozen=True)
class AggregateRow:
    n: int
    count: int
    root_degree: int
    leaves: int
    paths: int
    spine_nodes: int
    path_nodes: int
    psi: int
    path_length: int
    height_total: int

    def totals(self) -> dict[str, int]:
        return {k: getattr(self, k) for k in STAT_FIELDS}

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


def aggregate(n: int, limit: int = DEFAULT_LIMITS.words) -> AggregateRow:
    sums = dict.fromkeys(STAT_FIELDS, 0)
    count = 0
    for w in enumerate_elenas(n, limit=limit):
        s = tree_stats(w)
        count += 1
        sums["root_degree"] += s.root_degree
        sums["leaves"] += s.leaves
        sums["paths"] += s.paths
        sums["spine_nodes"] += s.spine_nodes
        sums["path_nodes"] += s.path_nodes
        sums["psi"] += s.psi
        sums["path_length"] += s.path_length
        sums["height_total"] += s.height
    return AggregateRow(n=n, count=count, **sums)


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow([getattr(r, f.name) for f in fields(r)])
    return buf.getvalue()


def brute_D(nz: int, limit: int = DEFAULT_LIMITS.bivariate) -> BivariateSeries:
    """Exact distribution of psi: coefficient [z^n u^k] counts Elenas of size n with psi = k."""
    if nz > limit:
        raise LimitExceeded(f"z-order {nz} exceeds the bivariate limit {limit}")
    nu = nz * (nz + 1) // 2
    grid = [[0] * (nu + 1) for _ in range(nz + 1)]
    for n in range(1, nz + 1):
        for w in enumerate_elenas(n, limit=max(limit, nz)):
            grid[n][tree_stats(w).psi] += 1
    return BivariateSeries(grid)
