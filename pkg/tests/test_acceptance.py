"""Exit criteria.  Each test is one criterion (criterion 8 is split per
statistic); the pass/fail lines are printed in the pytest summary."""

import math
import subprocess
import sys
import time

import pytest

from elenas.core import parse_dyck, parse_elena_word, parse_tree, render_tree
from elenas.dyck import (
    dyck_to_tree,
    enumerate_dyck_paths,
    enumerate_trees,
    is_nondecreasing,
    tree_to_dyck,
    valleys,
)
from elenas.elena import count_elenas, enumerate_elenas, fibonacci, is_elena_shape, word_to_tree
from elenas.genfunc import (
    asymptotics_report,
    catalog,
    count_ratio_deviation,
    height_total_series,
    q_series,
    series,
    RationalGF,
    verify_descendants_equation,
    verify_master_equation,
    verify_master_equation_w1,
)
from elenas.height4 import elena_to_height4, height4_to_elena
from elenas.stats import STAT_FIELDS, aggregate, brute_D, tree_stats

SQRT5 = math.sqrt(5)


@pytest.mark.criterion("1  counting (values, enumeration n<=14, F(2n-3) n<=50, Dyck filter n<=11, < 60 s)")
def test_counting():
    t0 = time.perf_counter()
    assert [count_elenas(n) for n in range(1, 9)] == [1, 1, 2, 5, 13, 34, 89, 233]
    for n in range(1, 15):
        assert sum(1 for _ in enumerate_elenas(n)) == count_elenas(n)
    for n in range(2, 51):
        assert count_elenas(n) == fibonacci(2 * n - 3)
    for n in range(0, 12):
        assert sum(1 for p in enumerate_dyck_paths(n) if is_nondecreasing(p)) == count_elenas(n + 1)
    assert time.perf_counter() - t0 < 60


@pytest.mark.criterion("2  glove bijection round trips and Figure 1")
def test_glove_bijection():
    for n in range(0, 11):
        for p in enumerate_dyck_paths(n):
            assert tree_to_dyck(dyck_to_tree(p)) == p
    for size in range(1, 12):
        for t in enumerate_trees(size):
            assert dyck_to_tree(tree_to_dyck(t)) == t
    fig1 = parse_dyck("UDUUDUUDUDDD")
    assert render_tree(dyck_to_tree(fig1)) == "(()(()(()())))"
    assert valleys(fig1) == [0, 1, 2]


FIGURE7 = [
    ("a a a a", "(()()())"),
    ("a p2 a", "(((())))"),
    ("a p1 a a", "((())())"),
    ("a p1 p1 a", "((()()))"),
    ("a a p1 a", "(()(()))"),
]


@pytest.mark.criterion("3  height<=4 bijection: set equality n<=12, Figure 7, round trips")
def test_height4_bijection():
    for n in range(1, 13):
        image = [elena_to_height4(w) for w in enumerate_elenas(n)]
        assert all(height4_to_elena(t) == w for t, w in zip(image, enumerate_elenas(n)))
        target = {t for t in enumerate_trees(n) if t.height <= 4}
        assert len(set(image)) == len(image)
        assert set(image) == target
        assert all(elena_to_height4(height4_to_elena(t)) == t for t in target)
    for word, tree in FIGURE7:
        assert render_tree(elena_to_height4(parse_elena_word(word))) == tree
        assert str(height4_to_elena(parse_tree(tree))) == word


@pytest.mark.criterion("4  three-way shape equality n<=12")
def test_shape_characterization():
    for n in range(1, 13):
        a = {word_to_tree(w) for w in enumerate_elenas(n)}
        b = {t for t in enumerate_trees(n) if is_elena_shape(t)}
        c = {dyck_to_tree(p) for p in enumerate_dyck_paths(n - 1) if is_nondecreasing(p)}
        assert a == b == c
        assert len(a) == count_elenas(n)


@pytest.mark.criterion("5  brute-force totals = series coefficients, 8 statistics, n<=14, < 5 min")
def test_statistics_oracle():
    t0 = time.perf_counter()
    cat = catalog(14)
    heights = height_total_series(14)
    rows = {n: aggregate(n) for n in range(1, 15)}
    for n, row in rows.items():
        assert row.count == cat["count"].coefficients[n]
        for k in STAT_FIELDS:
            want = heights[n] if k == "height_total" else cat[k].coefficients[n]
            assert getattr(row, k) == want, (n, k)
    r4 = rows[4]
    assert (r4.root_degree, r4.leaves, r4.paths, r4.spine_nodes, r4.psi, r4.height_total) == (9, 10, 5, 14, 42, 15)
    assert time.perf_counter() - t0 < 300


@pytest.mark.criterion("6  descendants equation Nz=8; master equation Nz=30,Nw=10; w=1 instance Nz=50")
def test_functional_equations():
    assert all(v.passed for v in verify_descendants_equation(8, brute_D(8)))
    q = q_series(8)
    assert q.at_y1() == series(RationalGF((0, 1), (1, -1)), 8)
    assert q.dy_at_1() == series(RationalGF((0, 1), (1, -3, 3, -1)), 8)
    assert verify_master_equation(30, 10).passed
    assert verify_master_equation_w1(50).passed


@pytest.mark.criterion("7  psi = path_length for every Elena of size <= 14")
def test_psi_equals_path_length():
    for n in range(1, 15):
        for w in enumerate_elenas(n):
            s = tree_stats(w)
            assert s.psi == s.path_length, str(w)


def _report(n, height=False):
    return {r.statistic: r for r in asymptotics_report(n, height=height)}


@pytest.mark.criterion("8a root degree average within 1e-6 of (3+sqrt5)/2 at n=100")
def test_root_degree_constant():
    assert _report(100)["root_degree"].deviation < 1e-6
    assert abs(float(_report(100)["root_degree"].convergent) - (3 + SQRT5) / 2) < 1e-6


_LINEAR = [
    ("leaves", 1 / SQRT5),
    ("paths", 1 / SQRT5),
    ("spine_nodes", (5 - SQRT5) / 10),
    ("path_nodes", (5 + SQRT5) / 10),
    ("descendants", (5 - SQRT5) / 20),
]


@pytest.mark.parametrize(
    "stat,const",
    [pytest.param(s, c, marks=pytest.mark.criterion(f"8b {s}: successive difference within 1e-8 at n=100"))
     for s, c in _LINEAR],
)
def test_linear_constants(stat, const):
    row = _report(100)[stat]
    assert abs(float(row.convergent) - const) < 1e-8
    assert row.deviation < 1e-8


@pytest.mark.criterion("8c nodes per path slope ratio within 1e-8 of (1+sqrt5)/2 at n=100")
def test_nodes_per_path_constant():
    row = _report(100)["nodes_per_path"]
    assert abs(float(row.convergent) - (1 + SQRT5) / 2) < 1e-8


@pytest.mark.criterion("8d height difference within 1e-3 of (5-sqrt5)/10 at n=500 and closer than at n=100")
def test_height_constant():
    late = _report(500, height=True)["height"].deviation
    early = _report(100, height=True)["height"].deviation
    assert late < 1e-3
    assert late < early


@pytest.mark.criterion("8e |[z^n]E / ((1-2/sqrt5) alpha^2n) - 1| < 1e-10 at n=40")
def test_count_asymptotic():
    assert count_ratio_deviation(40) < 1e-10


@pytest.mark.criterion("9  `verify --max-n 12` exits 0 in < 10 min, byte-deterministic output")
def test_cli_verify():
    cmd = [sys.executable, "-m", "elenas", "verify", "--max-n", "12"]
    t0 = time.perf_counter()
    procs = [subprocess.Popen(cmd, stdout=subprocess.PIPE, stderr=subprocess.PIPE) for _ in range(2)]
    outs = [p.communicate() for p in procs]
    elapsed = time.perf_counter() - t0
    sys.stdout.write(outs[0][0].decode())
    assert outs[0][0] == outs[1][0]
    assert elapsed < 600
    assert all(p.returncode == 0 for p in procs), outs[0][0].decode().splitlines()[-1]
