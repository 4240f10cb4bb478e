"""Exact generating functions for Elenas and their statistics.

Everything is integer arithmetic on truncated power series.  Rational
generating functions are expanded through the linear recurrence of their
denominator; bivariate series are dense coefficient grids.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .core import DEFAULT_LIMITS, BudgetExceeded, IdentityViolated

Poly = Sequence[int]

# ---------------------------------------------------------------------------
# integer polynomials


def poly_mul(a: Poly, b: Poly) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_pow(a: Poly, k: int) -> list[int]:
    out = [1]
    for _ in range(k):
        out = poly_mul(out, a)
    return out


def _trim(p: Poly) -> tuple[int, ...]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


@dataclass(frozen=True)
class RationalGF:
    """numerator / denominator with integer coefficients, denominator(0) == 1."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def __post_init__(self):
        num = _trim(self.numerator)
        den = _trim(self.denominator)
        if not den or den[0] not in (1, -1):
            raise ValueError("denominator constant term must be +1 or -1")
        if den[0] == -1:
            num = tuple(-c for c in num)
            den = tuple(-c for c in den)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def from_factors(cls, num: Sequence[Poly], den: Sequence[Poly]) -> RationalGF:
        n, d = [1], [1]
        for f in num:
            n = poly_mul(n, f)
        for f in den:
            d = poly_mul(d, f)
        return cls(tuple(n), tuple(d))


def series(g: RationalGF, order: int) -> list[int]:
    """Coefficients of z^0 .. z^order."""
    return divide_series(list(g.numerator), g.denominator, order)


def divide_series(num: Sequence[int], den: Poly, order: int) -> list[int]:
    """Truncated expansion of num/den for a denominator with constant term 1."""
    if den[0] != 1:
        raise ValueError("denominator constant term must be 1")
    taps = [(k, c) for k, c in enumerate(den) if k and c]
    out = [0] * (order + 1)
    for n in range(order + 1):
        c = num[n] if n < len(num) else 0
        for k, d in taps:
            if k > n:
                break
            c -= d * out[n - k]
        out[n] = c
    return out


# ---------------------------------------------------------------------------
# catalog of closed forms

Q3 = (1, -3, 1)  # 1 - 3z + z^2, the denominator shared by every Elena series

E = RationalGF.from_factors([(0, 1), (1, -2)], [Q3])


@dataclass(frozen=True)
class SeriesTable:
    name: str
    description: str
    gf: RationalGF
    coefficients: tuple[int, ...]


_CATALOG = (
    ("count", "number of Elenas of size n", [(0, 1), (1, -2)], [Q3]),
    (
        "nondecreasing_dyck",
        "nondecreasing Dyck paths of length 2n, empty path included",
        [(1, -2)],
        [Q3],
    ),
    (
        "count_derivative",
        "d/dz of the counting series",
        [(1, -4, 5)],
        [Q3, Q3],
    ),
    (
        "root_degree",
        "total root degree over Elenas of size n",
        [(0, 0, 1), (1, -1), (1, -1)],
        [(1, -2), Q3],
    ),
    ("leaves", "total number of leaves", [(0, 1, -5, 8, -3)], [Q3, Q3]),
    ("paths", "total number of attached paths", [(0, 0, 0, 1), (1, -1)], [Q3, Q3]),
    ("spine_nodes", "total number of nodes on the rightmost branch", [(0, 1), (1, -2), (1, -2)], [Q3, Q3]),
    ("path_nodes", "total number of nodes lying in attached paths", [(0, 0, 0, 1)], [Q3, Q3]),
    (
        "psi",
        "total over trees of the summed subtree sizes (descendants)",
        [(0, 1, -7, 20, -26, 11)],
        [(1, -1), Q3, Q3, Q3],
    ),
    (
        "path_length",
        "total over trees of the summed node depths (ascendants)",
        [(0, 1, -7, 20, -26, 11)],
        [(1, -1), Q3, Q3, Q3],
    ),
)


def catalog(order: int = 14) -> dict[str, SeriesTable]:
    out = {}
    for name, desc, num, den in _CATALOG:
        gf = RationalGF.from_factors(num, den)
        out[name] = SeriesTable(name, desc, gf, tuple(series(gf, order)))
    return out


# ---------------------------------------------------------------------------
# height


def _times_z_one_minus_z(s: Sequence[int], order: int) -> list[int]:
    # z(1 - z) * s
    out = [0] * (order + 1)
    for n in range(1, order + 1):
        out[n] = s[n - 1] - (s[n - 2] if n >= 2 else 0)
    return out


def _height_den(h: int) -> list[int]:
    # 1 - 2z + z^h
    d = [0] * (max(h, 1) + 1)
    d[0] += 1
    d[1] -= 2
    d[h] += 1
    return d


def iter_eh(order: int) -> Iterator[list[int]]:
    """Yield E_0, E_1, E_2, ... (Elenas of height <= h), truncated at ``order``."""
    eh = [0] * (order + 1)
    h = 0
    while True:
        yield eh
        h += 1
        nxt = divide_series(_times_z_one_minus_z(eh, order), _height_den(h), order)
        if order >= 1:
            nxt[1] += 1
        eh = nxt


def iter_uh(order: int) -> Iterator[list[int]]:
    """Yield U_0 = E, U_1, ... (Elenas of height > h) by the difference recursion."""
    forcing = divide_series([0, 0, 1, -1], Q3, order)  # z^2 (1-z) / (1-3z+z^2)
    uh = series(E, order)
    h = 0
    while True:
        yield uh
        h += 1
        rhs = _times_z_one_minus_z(uh, order)
        for n in range(h, order + 1):
            rhs[n] += forcing[n - h]
        uh = divide_series(rhs, _height_den(h), order)


def eh_series(h: int, order: int) -> list[int]:
    if h < 0:
        raise ValueError("h must be nonnegative")
    it = iter_eh(order)
    for _ in range(h):
        next(it)
    return next(it)


def uh_series(h: int, order: int) -> list[int]:
    """U_h by two routes, E - E_h and the difference recursion; raises if they differ."""
    if h < 0:
        raise ValueError("h must be nonnegative")
    e = series(E, order)
    via_diff = None
    for k, (eh, uh) in enumerate(zip(iter_eh(order), iter_uh(order))):
        via_diff = uh
        if k == h:
            break
    via_eh = [x - y for x, y in zip(e, eh)]
    _assert_equal(f"U_{h}", via_eh, via_diff)
    return via_diff


@lru_cache(maxsize=8)
def height_total_series(order: int) -> tuple[int, ...]:
    """[z^n] sum_h U_h: total height over all Elenas of size n, for n <= order."""
    e = series(E, order)
    total = [0] * (order + 1)
    # U_h has valuation h + 1, so h < order suffices
    for h, (eh, uh) in enumerate(zip(iter_eh(order), iter_uh(order))):
        if h >= order:
            break
        for n in range(h + 1, order + 1):
            if e[n] - eh[n] != uh[n]:
                raise IdentityViolated(f"U_{h}", n, e[n] - eh[n], uh[n])
            total[n] += uh[n]
    return tuple(total)


def _assert_equal(name, expected: Sequence, actual: Sequence):
    for i, (x, y) in enumerate(zip(expected, actual)):
        if x != y:
            raise IdentityViolated(name, i, x, y)
    if len(expected) != len(actual):
        raise IdentityViolated(name, min(len(expected), len(actual)), len(expected), len(actual))


# ---------------------------------------------------------------------------
# bivariate series


class BivariateSeries:
    """Truncated series sum c[i][j] z^i y^j with 0 <= i <= nz, 0 <= j <= ny.

    Every operation keeps only coefficients it can compute exactly from the
    operands' boxes; since all exponents are nonnegative, truncation never
    leaks error into the kept box.
    """

    __slots__ = ("_c",)

    def __init__(self, grid: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in grid)
        if not rows or len({len(r) for r in rows}) != 1 or not rows[0]:
            raise ValueError("grid must be a nonempty rectangle")
        self._c = rows

    @classmethod
    def zeros(cls, nz: int, ny: int) -> BivariateSeries:
        return cls([[0] * (ny + 1) for _ in range(nz + 1)])

    @classmethod
    def from_z_series(cls, s: Sequence[int], nz: int, ny: int) -> BivariateSeries:
        g = [[0] * (ny + 1) for _ in range(nz + 1)]
        for i in range(min(nz + 1, len(s))):
            g[i][0] = s[i]
        return cls(g)

    @classmethod
    def monomial(cls, i: int, j: int, nz: int, ny: int, coeff: int = 1) -> BivariateSeries:
        g = [[0] * (ny + 1) for _ in range(nz + 1)]
        if i <= nz and j <= ny:
            g[i][j] = coeff
        return cls(g)

    @property
    def nz(self) -> int:
        return len(self._c) - 1

    @property
    def ny(self) -> int:
        return len(self._c[0]) - 1

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if 0 <= i <= self.nz and 0 <= j <= self.ny:
            return self._c[i][j]
        return 0

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._c

    def __eq__(self, other):
        return isinstance(other, BivariateSeries) and self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"BivariateSeries(nz={self.nz}, ny={self.ny})"

    def _box(self, other: BivariateSeries) -> tuple[int, int]:
        return min(self.nz, other.nz), min(self.ny, other.ny)

    def __add__(self, other: BivariateSeries) -> BivariateSeries:
        nz, ny = self._box(other)
        return BivariateSeries(
            [[self._c[i][j] + other._c[i][j] for j in range(ny + 1)] for i in range(nz + 1)]
        )

    def __sub__(self, other: BivariateSeries) -> BivariateSeries:
        return self + other.scale(-1)

    def scale(self, k: int) -> BivariateSeries:
        return BivariateSeries([[k * x for x in r] for r in self._c])

    def __mul__(self, other: BivariateSeries) -> BivariateSeries:
        nz, ny = self._box(other)
        out = [[0] * (ny + 1) for _ in range(nz + 1)]
        for i1 in range(nz + 1):
            r1 = self._c[i1]
            for j1 in range(ny + 1):
                a = r1[j1]
                if not a:
                    continue
                for i2 in range(nz + 1 - i1):
                    r2 = other._c[i2]
                    row = out[i1 + i2]
                    for j2 in range(ny + 1 - j1):
                        b = r2[j2]
                        if b:
                            row[j1 + j2] += a * b
        return BivariateSeries(out)

    def mul_z_poly(self, p: Poly) -> BivariateSeries:
        out = [[0] * (self.ny + 1) for _ in range(self.nz + 1)]
        for k, c in enumerate(p):
            if not c:
                continue
            for i in range(self.nz + 1 - k):
                src, dst = self._c[i], out[i + k]
                for j in range(self.ny + 1):
                    dst[j] += c * src[j]
        return BivariateSeries(out)

    def div_z_poly(self, p: Poly) -> BivariateSeries:
        """Divide by a z-polynomial with constant term 1."""
        cols = [divide_series([r[j] for r in self._c], p, self.nz) for j in range(self.ny + 1)]
        return BivariateSeries([[cols[j][i] for j in range(self.ny + 1)] for i in range(self.nz + 1)])

    def shift(self, dz: int, dy: int) -> BivariateSeries:
        """Multiply by z^dz y^dy."""
        out = [[0] * (self.ny + 1) for _ in range(self.nz + 1)]
        for i in range(self.nz + 1 - dz):
            for j in range(self.ny + 1 - dy):
                out[i + dz][j + dy] = self._c[i][j]
        return BivariateSeries(out)

    def subs_z_zy(self) -> BivariateSeries:
        """f(z y, y): z^i y^j -> z^i y^(i+j)."""
        out = [[0] * (self.ny + 1) for _ in range(self.nz + 1)]
        for i in range(self.nz + 1):
            for j in range(self.ny + 1 - i):
                out[i][i + j] = self._c[i][j]
        return BivariateSeries(out)

    def subs_y_zy(self) -> BivariateSeries:
        """f(z, z y): z^i y^j -> z^(i+j) y^j."""
        out = [[0] * (self.ny + 1) for _ in range(self.nz + 1)]
        for i in range(self.nz + 1):
            for j in range(min(self.ny, self.nz - i) + 1):
                out[i + j][j] = self._c[i][j]
        return BivariateSeries(out)

    def geometric(self) -> BivariateSeries:
        """1 / (1 - self) for a series without z^0 terms."""
        if any(self._c[0]):
            raise ValueError("geometric() needs a series divisible by z")
        nz, ny = self.nz, self.ny
        out = [[0] * (ny + 1) for _ in range(nz + 1)]
        out[0][0] = 1
        for i in range(1, nz + 1):
            row = out[i]
            for k in range(1, i + 1):
                s, r = self._c[k], out[i - k]
                for j1 in range(ny + 1):
                    if s[j1]:
                        for j2 in range(ny + 1 - j1):
                            row[j1 + j2] += s[j1] * r[j2]
        return BivariateSeries(out)

    def at_y1(self) -> list[int]:
        return [sum(r) for r in self._c]

    def at_y_eq_z(self) -> list[int]:
        """f(z, z) truncated at z^nz."""
        out = [0] * (self.nz + 1)
        for i in range(self.nz + 1):
            for j in range(min(self.ny, self.nz - i) + 1):
                out[i + j] += self._c[i][j]
        return out

    def dy_at_1(self) -> list[int]:
        return [sum(j * c for j, c in enumerate(r)) for r in self._c]

    def first_difference(self, other: BivariateSeries):
        """First (i, j, mine, theirs) on the common box where the grids differ, else None."""
        nz, ny = self._box(other)
        for i in range(nz + 1):
            for j in range(ny + 1):
                if self._c[i][j] != other._c[i][j]:
                    return i, j, self._c[i][j], other._c[i][j]
        return None


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool
    checked: int
    detail: str = ""


def _check_grid(name: str, lhs: BivariateSeries, rhs: BivariateSeries) -> int:
    diff = lhs.first_difference(rhs)
    if diff is not None:
        i, j, a, b = diff
        raise IdentityViolated(name, (i, j), b, a)
    nz, ny = lhs._box(rhs)
    return (nz + 1) * (ny + 1)


# ---------------------------------------------------------------------------
# height: the master equation for sum_h U_h w^h


def height_grid(nz: int, nw: int, uh: Sequence[Sequence[int]] | None = None) -> BivariateSeries:
    """Coefficient [z^n w^h] = [z^n] U_h."""
    if uh is None:
        uh = [u for _, u in zip(range(nw + 1), iter_uh(nz))]
    return BivariateSeries([[uh[h][n] for h in range(nw + 1)] for n in range(nz + 1)])


def verify_master_equation(nz: int, nw: int, uh: Sequence[Sequence[int]] | None = None) -> Verdict:
    """(1-2z) U(z,w) + U(z,zw) == 2z(1-z)(1-2z)/Q3 + z^3 w (1-z)/(Q3 (1-wz)) + wz(1-z) U(z,w)."""
    u = height_grid(nz, nw, uh)
    lhs = u.mul_z_poly([1, -2]) + u.subs_y_zy()
    a = BivariateSeries.from_z_series(series(RationalGF.from_factors([(0, 2), (1, -1), (1, -2)], [Q3]), nz), nz, nw)
    b0 = BivariateSeries.from_z_series(series(RationalGF((0, 0, 0, 1, -1), Q3), nz), nz, nw)
    geo = BivariateSeries.monomial(1, 1, nz, nw).geometric()  # 1 / (1 - wz)
    b = (b0 * geo).shift(0, 1)
    c = u.mul_z_poly([0, 1, -1]).shift(0, 1)
    checked = _check_grid("master equation", lhs, a + b + c)
    return Verdict("master equation", True, checked, f"z^0..z^{nz} x w^0..w^{nw}")


def verify_master_equation_w1(nz: int, uh: Sequence[Sequence[int]] | None = None) -> Verdict:
    """(1-3z+z^2) U(z,1) + U(z,z) == z(2-6z+5z^2)/(1-3z+z^2) through z^nz."""
    if uh is None:
        uh = [u for _, u in zip(range(nz + 1), iter_uh(nz))]
    u = height_grid(nz, nz, uh)
    u1 = u.at_y1()
    lhs = [x + y for x, y in zip(poly_mul(Q3, u1)[: nz + 1], u.at_y_eq_z())]
    rhs = series(RationalGF((0, 2, -6, 5), Q3), nz)
    _assert_equal("master equation at w=1", rhs, lhs)
    return Verdict("master equation at w=1", True, nz + 1, f"z^0..z^{nz}")


# ---------------------------------------------------------------------------
# descendants: the functional equation for D(z,u) = sum z^|t| u^psi(t)


def q_series(nz: int) -> BivariateSeries:
    """sum_{m>=1} z^m u^(m(m+1)/2), truncated at u^(nz(nz+1)/2)."""
    nu = nz * (nz + 1) // 2
    g = [[0] * (nu + 1) for _ in range(nz + 1)]
    for m in range(1, nz + 1):
        g[m][m * (m + 1) // 2] = 1
    return BivariateSeries(g)


def verify_descendants_equation(nz: int, d: BivariateSeries | None = None) -> list[Verdict]:
    """Check D = zu + zu D(zu,u) / (1 - Q(zu,u)) against the exhaustive psi distribution."""
    if d is None:
        from .stats import brute_D

        d = brute_D(nz)
    q = q_series(nz)
    _assert_equal("Q(z,1)", [0] + [1] * nz, q.at_y1())
    _assert_equal("dQ/du at u=1", series(RationalGF((0, 1), poly_pow((1, -1), 3)), nz), q.dy_at_1())
    _assert_equal("D(z,1)", series(E, nz), d.at_y1())
    zu = BivariateSeries.monomial(1, 1, d.nz, d.ny)
    rhs = zu + zu * d.subs_z_zy() * q.subs_z_zy().geometric()
    checked = _check_grid("descendants equation", d, rhs)
    return [
        Verdict("Q(z,1) = z/(1-z)", True, nz + 1),
        Verdict("dQ/du(z,1) = z/(1-z)^3", True, nz + 1),
        Verdict("D(z,1) = E(z)", True, nz + 1),
        Verdict("descendants equation", True, checked, f"z^0..z^{d.nz} x u^0..u^{d.ny}"),
    ]


# ---------------------------------------------------------------------------
# averages and asymptotics

STATISTICS = (
    "root_degree",
    "leaves",
    "paths",
    "spine_nodes",
    "path_nodes",
    "nodes_per_path",
    "descendants",
    "ascendants",
    "height",
)


def _check_budget(n: int, budget: int):
    if n > budget:
        raise BudgetExceeded(f"n = {n} exceeds the series budget {budget}")


def _averages(n: int, cat: dict[str, Sequence[int]], heights: Sequence[int] | None) -> dict[str, Fraction | None]:
    c = cat["count"][n]
    out: dict[str, Fraction | None] = {}
    for k in ("root_degree", "leaves", "paths", "spine_nodes", "path_nodes"):
        out[k] = Fraction(cat[k][n], c)
    p = cat["paths"][n]
    out["nodes_per_path"] = Fraction(cat["path_nodes"][n], p) if p else None
    out["descendants"] = Fraction(cat["psi"][n], n * c)
    out["ascendants"] = Fraction(cat["path_length"][n], n * c)
    out["height"] = Fraction(heights[n], c) if heights is not None else None
    return out


def _catalog_lists(order: int) -> dict[str, Sequence[int]]:
    return {name: t.coefficients for name, t in catalog(order).items()}


def averages_table(n: int, height: bool = True, budget: int = DEFAULT_LIMITS.series) -> dict[str, Fraction | None]:
    """Exact average of each statistic over all Elenas of size n."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_budget(n, budget)
    return _averages(n, _catalog_lists(n), height_total_series(n) if height else None)


def constants(prec: int = 40) -> dict[str, Decimal]:
    """Limiting constants: the limit of the average (root degree, nodes per path)
    or of its growth per unit of n (all other statistics)."""
    with localcontext() as ctx:
        ctx.prec = prec
        s5 = Decimal(5).sqrt()
        return {
            "root_degree": (3 + s5) / 2,
            "leaves": 1 / s5,
            "paths": 1 / s5,
            "spine_nodes": (5 - s5) / 10,
            "path_nodes": (5 + s5) / 10,
            "nodes_per_path": (1 + s5) / 2,
            "descendants": (5 - s5) / 20,
            "ascendants": (5 - s5) / 20,
            "height": (5 - s5) / 10,
        }


@dataclass(frozen=True)
class AsymptoticRow:
    statistic: str
    convergent: Fraction
    constant: Decimal
    deviation: float


def _to_decimal(x: Fraction) -> Decimal:
    return Decimal(x.numerator) / Decimal(x.denominator)


def asymptotics_report(n: int, height: bool = True, budget: int = DEFAULT_LIMITS.series) -> list[AsymptoticRow]:
    """Distance of each statistic's convergent at size n from its limiting constant.

    Root degree uses the average itself; nodes per path uses the ratio of the
    per-step increments of path nodes and paths; every other statistic uses
    the increment avg(n) - avg(n-1).
    """
    if n < 4:
        raise ValueError("n must be at least 4")
    _check_budget(n, budget)
    cat = _catalog_lists(n)
    heights = height_total_series(n) if height else None
    now = _averages(n, cat, heights)
    before = _averages(n - 1, cat, heights)
    consts = constants()
    rows = []
    with localcontext() as ctx:
        ctx.prec = 40
        for k in STATISTICS:
            if k == "height" and not height:
                continue
            if k == "root_degree":
                conv = now[k]
            elif k == "nodes_per_path":
                conv = (now["path_nodes"] - before["path_nodes"]) / (now["paths"] - before["paths"])
            else:
                conv = now[k] - before[k]
            dev = abs(_to_decimal(conv) - consts[k])
            rows.append(AsymptoticRow(k, conv, consts[k], float(dev)))
    return rows


def count_ratio_deviation(n: int) -> float:
    """|[z^n]E / ((1 - 2/sqrt5) alpha^(2n)) - 1|."""
    with localcontext() as ctx:
        ctx.prec = 60
        s5 = Decimal(5).sqrt()
        alpha = (1 + s5) / 2
        main = (1 - 2 / s5) * alpha ** (2 * n)
        return float(abs(Decimal(series(E, n)[n]) / main - 1))
