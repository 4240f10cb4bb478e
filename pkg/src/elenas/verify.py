"""The full cross-check suite run by ``elenas verify``.

Each check yields a :class:`CheckResult`; a failing check names the module,
the operation, the size involved and the first offending value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .core import ElenaError, parse_dyck, parse_elena_word, parse_tree, render_tree
from .dyck import (
    catalan,
    dyck_to_tree,
    enumerate_dyck_paths,
    enumerate_trees,
    is_nondecreasing,
    tree_to_dyck,
    valleys,
)
from .elena import (
    count_elenas,
    dyck_to_word,
    enumerate_elenas,
    fibonacci,
    is_elena_shape,
    tree_to_word,
    word_to_dyck,
    word_to_tree,
)
from .genfunc import (
    E,
    asymptotics_report,
    catalog,
    count_ratio_deviation,
    height_total_series,
    iter_eh,
    iter_uh,
    series,
    verify_descendants_equation,
    verify_master_equation,
    verify_master_equation_w1,
)
from .height4 import elena_to_height4, height4_to_elena
from .stats import STAT_FIELDS, tree_stats

FIGURE1_PATH = "UDUUDUUDUDDD"
FIGURE1_TREE = "(()(()(()())))"
FIGURE1_WORD = "a p1 a p1 a p1 a"

# (word, Elena tree, height-restricted tree) for the five Elenas of size 4
FIGURE7 = (
    ("a a a a", "(((())))", "(()()())"),
    ("a p2 a", "((())())", "(((())))"),
    ("a p1 a a", "(()(()))", "((())())"),
    ("a p1 p1 a", "(()()())", "((()()))"),
    ("a a p1 a", "((()()))", "(()(()))"),
)

# (statistic, n, tolerance) for the limiting constants
ASYMPTOTIC_CHECKS = (
    ("root_degree", 100, 1e-6),
    ("leaves", 100, 1e-8),
    ("paths", 100, 1e-8),
    ("spine_nodes", 100, 1e-8),
    ("path_nodes", 100, 1e-8),
    ("descendants", 100, 1e-8),
    ("nodes_per_path", 100, 1e-8),
    ("height", 500, 1e-3),
)


class CheckFailed(Exception):
    pass


@dataclass(frozen=True)
class CheckResult:
    module: str
    operation: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.module}.{self.operation}: {self.detail}"


@dataclass
class SuiteConfig:
    max_n: int = 12  # exhaustive tree/path range: trees of size <= max_n
    stats_max_n: int = 14  # Elena enumeration range for statistics
    descendants_order: int = 8
    master_nz: int = 30
    master_nw: int = 10
    w1_order: int = 50
    fibonacci_max_n: int = 50
    asymptotics: bool = True
    skip: set[str] = field(default_factory=set)


def _expect(cond: bool, msg: str):
    if not cond:
        raise CheckFailed(msg)


def _check(module: str, operation: str, fn: Callable[[], str]) -> CheckResult:
    try:
        detail = fn()
    except (CheckFailed, ElenaError, AssertionError) as exc:
        return CheckResult(module, operation, False, str(exc))
    return CheckResult(module, operation, True, detail)


# ---------------------------------------------------------------------------


def _counting(cfg: SuiteConfig) -> str:
    first = [count_elenas(n) for n in range(1, 9)]
    _expect(first == [1, 1, 2, 5, 13, 34, 89, 233], f"n=1..8: got {first}")
    for n in range(4, cfg.fibonacci_max_n + 1):
        _expect(count_elenas(n) == 3 * count_elenas(n - 1) - count_elenas(n - 2), f"n={n}: recurrence")
    for n in range(2, cfg.fibonacci_max_n + 1):
        _expect(count_elenas(n) == fibonacci(2 * n - 3), f"n={n}: {count_elenas(n)} != F_{2 * n - 3}")
    return f"first values, recurrence and F(2n-3) for n <= {cfg.fibonacci_max_n}"


def _enumeration_counts(cfg: SuiteConfig) -> str:
    for n in range(1, cfg.stats_max_n + 1):
        words = [str(w) for w in enumerate_elenas(n, limit=cfg.stats_max_n)]
        _expect(len(words) == count_elenas(n), f"n={n}: {len(words)} words, expected {count_elenas(n)}")
        _expect(words == sorted(set(words)), f"n={n}: words not distinct and sorted")
    return f"n <= {cfg.stats_max_n}"


def _nondecreasing_counts(cfg: SuiteConfig) -> str:
    top = cfg.max_n - 1
    for n in range(0, top + 1):
        k = sum(1 for p in enumerate_dyck_paths(n, limit=top) if is_nondecreasing(p))
        _expect(k == count_elenas(n + 1), f"n={n}: {k} nondecreasing paths, expected {count_elenas(n + 1)}")
    return f"semilength <= {top}"


def _dyck_enumeration(cfg: SuiteConfig) -> str:
    top = cfg.max_n - 2
    for n in range(0, top + 1):
        paths = [p.steps for p in enumerate_dyck_paths(n, limit=top)]
        _expect(len(paths) == catalan(n), f"n={n}: {len(paths)} paths, expected Catalan {catalan(n)}")
        _expect(paths == sorted(set(paths), key=lambda s: s.replace("U", "0").replace("D", "1")),
                f"n={n}: paths not distinct or not in U<D order")
    return f"semilength <= {top}"


def _glove_paths(cfg: SuiteConfig) -> str:
    top = cfg.max_n - 2
    for n in range(0, top + 1):
        for p in enumerate_dyck_paths(n, limit=top):
            back = tree_to_dyck(dyck_to_tree(p))
            _expect(back == p, f"n={n}: {p.steps} -> {back.steps}")
    return f"all paths of length <= {2 * top}"


def _glove_trees(cfg: SuiteConfig) -> str:
    top = cfg.max_n - 1
    for size in range(1, top + 1):
        seen = set()
        for t in enumerate_trees(size, limit=top):
            text = render_tree(t)
            _expect(text not in seen, f"size={size}: duplicate tree {text}")
            seen.add(text)
            _expect(dyck_to_tree(tree_to_dyck(t)) == t, f"size={size}: {text}")
    return f"all trees of size <= {top}"


def _figure1() -> str:
    p = parse_dyck(FIGURE1_PATH)
    t = dyck_to_tree(p)
    _expect(render_tree(t) == FIGURE1_TREE, f"tree {render_tree(t)}")
    _expect(valleys(p) == [0, 1, 2], f"valleys {valleys(p)}")
    _expect(is_nondecreasing(p), "not nondecreasing")
    _expect(str(dyck_to_word(p)) == FIGURE1_WORD, f"word {dyck_to_word(p)}")
    return f"{FIGURE1_PATH} -> {FIGURE1_TREE}, valleys [0, 1, 2]"


def _height4_sets(cfg: SuiteConfig) -> str:
    for n in range(1, cfg.max_n + 1):
        image = []
        for w in enumerate_elenas(n, limit=cfg.max_n):
            t = elena_to_height4(w)
            _expect(t.size == n, f"n={n}: {w} maps to size {t.size}")
            _expect(height4_to_elena(t) == w, f"n={n}: round trip of {w}")
            image.append(render_tree(t))
        image_set = set(image)
        _expect(len(image_set) == len(image), f"n={n}: map not injective")
        target = {render_tree(t) for t in enumerate_trees(n, limit=cfg.max_n) if t.height <= 4}
        _expect(image_set == target, f"n={n}: image differs from height<=4 trees, "
                                     f"first extra {sorted(image_set ^ target)[:1]}")
        for text in target:
            t = parse_tree(text)
            _expect(elena_to_height4(height4_to_elena(t)) == t, f"n={n}: round trip of {text}")
    return f"image = height<=4 trees for n <= {cfg.max_n}"


def _figure7() -> str:
    for word, elena, h4 in FIGURE7:
        w = parse_elena_word(word)
        _expect(render_tree(word_to_tree(w)) == elena, f"{word}: Elena {render_tree(word_to_tree(w))}")
        _expect(render_tree(elena_to_height4(w)) == h4, f"{word}: height-4 {render_tree(elena_to_height4(w))}")
        _expect(height4_to_elena(parse_tree(h4)) == w, f"{word}: inverse")
    return "five pairs"


def _shape_sets(cfg: SuiteConfig) -> str:
    for n in range(1, cfg.max_n + 1):
        from_words = {render_tree(word_to_tree(w)) for w in enumerate_elenas(n, limit=cfg.max_n)}
        from_shape = {render_tree(t) for t in enumerate_trees(n, limit=cfg.max_n) if is_elena_shape(t)}
        from_paths = {
            render_tree(dyck_to_tree(p))
            for p in enumerate_dyck_paths(n - 1, limit=cfg.max_n)
            if is_nondecreasing(p)
        }
        _expect(from_words == from_shape, f"n={n}: word trees != shape-predicate trees")
        _expect(from_words == from_paths, f"n={n}: word trees != nondecreasing-path trees")
    return f"three-way equality for n <= {cfg.max_n}"


def _word_round_trips(cfg: SuiteConfig) -> str:
    for n in range(1, cfg.stats_max_n + 1):
        for w in enumerate_elenas(n, limit=cfg.stats_max_n):
            _expect(tree_to_word(word_to_tree(w)) == w, f"n={n}: {w} via tree")
            p = word_to_dyck(w)
            _expect(is_nondecreasing(p), f"n={n}: {w} gives a decreasing path")
            _expect(dyck_to_word(p) == w, f"n={n}: {w} via path")
            _expect(parse_elena_word(str(w)) == w, f"n={n}: codec {w}")
    return f"n <= {cfg.stats_max_n}"


def _stats_vs_series(cfg: SuiteConfig) -> str:
    top = cfg.stats_max_n
    cat = catalog(top)
    heights = height_total_series(top)
    expected = {k: cat[k].coefficients for k in STAT_FIELDS if k in cat}
    expected["height_total"] = heights
    for n in range(1, top + 1):
        totals = dict.fromkeys(STAT_FIELDS, 0)
        count = 0
        for w in enumerate_elenas(n, limit=top):
            s = tree_stats(w)
            _expect(s.psi == s.path_length, f"n={n}: {w} psi {s.psi} != path_length {s.path_length}")
            _expect(s.spine_nodes + s.path_nodes == n, f"n={n}: {w} spine + path nodes")
            _expect(s.leaves == s.paths + 1, f"n={n}: {w} leaves != paths + 1")
            count += 1
            for k in STAT_FIELDS:
                totals[k] += s.height if k == "height_total" else getattr(s, k)
        _expect(count == cat["count"].coefficients[n], f"n={n}: count {count}")
        for k in STAT_FIELDS:
            _expect(totals[k] == expected[k][n], f"n={n}: {k} brute {totals[k]} != series {expected[k][n]}")
    return f"count + 8 statistics, n <= {top}; psi = path_length per tree"


def _height_series(cfg: SuiteConfig) -> str:
    top = cfg.master_nz
    e = series(E, top)
    prev = None
    for h, (eh, uh) in enumerate(zip(iter_eh(top), iter_uh(top))):
        if h > top:
            break
        _expect([a - b for a, b in zip(e, eh)] == uh, f"h={h}: E - E_h != U_h")
        if prev is not None:
            _expect(all(a <= b for a, b in zip(prev, eh)), f"h={h}: E_h not monotone")
        _expect(eh[: h + 1] == e[: h + 1], f"h={h}: E_h differs from E below z^{h + 1}")
        prev = eh
    return f"two routes agree for h <= {top}"


def _derivative() -> str:
    cat = catalog(30)
    d = cat["count_derivative"].coefficients
    e = series(E, 31)
    for n in range(30):
        _expect(d[n] == (n + 1) * e[n + 1], f"n={n}: dE/dz coefficient")
    return "dE/dz against (n+1)[z^(n+1)]E, n < 30"


def _descendants(cfg: SuiteConfig) -> str:
    verdicts = verify_descendants_equation(cfg.descendants_order)
    return "; ".join(v.name for v in verdicts) + f" at Nz={cfg.descendants_order}"


def _master(cfg: SuiteConfig) -> str:
    v = verify_master_equation(cfg.master_nz, cfg.master_nw)
    return f"exact on {v.detail}"


def _master_w1(cfg: SuiteConfig) -> str:
    v = verify_master_equation_w1(cfg.w1_order)
    return f"exact on {v.detail}"


def _asymptotic(stat: str, n: int, tol: float) -> Callable[[], str]:
    def run() -> str:
        rows = {r.statistic: r for r in asymptotics_report(n, height=stat == "height")}
        dev = rows[stat].deviation
        _expect(dev < tol, f"n={n}: deviation {dev:.3e} >= {tol:.0e}")
        if stat == "height":
            early = {r.statistic: r for r in asymptotics_report(100)}["height"].deviation
            _expect(dev < early, f"n={n}: deviation {dev:.3e} not below n=100 value {early:.3e}")
        return f"n={n}: deviation {dev:.3e} < {tol:.0e}"

    return run


def _count_ratio() -> str:
    dev = count_ratio_deviation(40)
    _expect(dev < 1e-10, f"n=40: deviation {dev:.3e}")
    return f"n=40: deviation {dev:.3e} < 1e-10"


def run_suite(cfg: SuiteConfig | None = None) -> Iterator[CheckResult]:
    cfg = cfg or SuiteConfig()
    checks: list[tuple[str, str, Callable[[], str]]] = [
        ("elena", "count_elenas", lambda: _counting(cfg)),
        ("elena", "enumerate_elenas", lambda: _enumeration_counts(cfg)),
        ("dyck", "is_nondecreasing", lambda: _nondecreasing_counts(cfg)),
        ("dyck", "enumerate_dyck_paths", lambda: _dyck_enumeration(cfg)),
        ("dyck", "dyck_to_tree", lambda: _glove_paths(cfg)),
        ("dyck", "tree_to_dyck", lambda: _glove_trees(cfg)),
        ("dyck", "figure1", _figure1),
        ("height4", "elena_to_height4", lambda: _height4_sets(cfg)),
        ("height4", "figure7", _figure7),
        ("elena", "is_elena_shape", lambda: _shape_sets(cfg)),
        ("elena", "round_trips", lambda: _word_round_trips(cfg)),
        ("stats", "aggregate", lambda: _stats_vs_series(cfg)),
        ("genfunc", "uh_series", lambda: _height_series(cfg)),
        ("genfunc", "count_derivative", _derivative),
        ("genfunc", "verify_descendants_equation", lambda: _descendants(cfg)),
        ("genfunc", "verify_master_equation", lambda: _master(cfg)),
        ("genfunc", "verify_master_equation_w1", lambda: _master_w1(cfg)),
    ]
    if cfg.asymptotics:
        checks.append(("genfunc", "count_asymptotic", _count_ratio))
        for stat, n, tol in ASYMPTOTIC_CHECKS:
            checks.append(("genfunc", f"asymptotics_report[{stat}]", _asymptotic(stat, n, tol)))
    for module, op, fn in checks:
        if op in cfg.skip:
            continue
        yield _check(module, op, fn)
