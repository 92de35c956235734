"""Even positive-definite quadratic forms: Gram validation, level, exact
theta series by lattice-point enumeration, minima, and the minimum bound
check.

Q_A(x) = x^T A x for an integer symmetric matrix A with even diagonal, so
Q_A takes even values on integer vectors.  The theta series counts exact
representation numbers: entry n is #{x in Z^v : Q_A(x) = 2n}.

Enumeration works through an exact rational LDL^T decomposition of A,
Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2, walking coordinates from the
last to the first with exact integer interval bounds at every layer (no
floating point anywhere, so no boundary misses).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

from qgap.series import QSeries

__all__ = [
    "D4",
    "E8",
    "GramMatrix",
    "direct_sum",
    "level",
    "load_gram",
    "min_represented",
    "parse_gram",
    "theta",
    "theta_qseries",
    "verify_theorem51",
]

#: Gram matrix of the D4 root lattice (determinant 4, level 2).
D4 = (
    (2, -1, 0, 0),
    (-1, 2, -1, -1),
    (0, -1, 2, 0),
    (0, -1, 0, 2),
)

#: Gram matrix of the E8 root lattice (even unimodular).
E8 = (
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, 0),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, -1),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, 0, 0, -1, 0, 0, 2),
)


def _leading_minors(rows: tuple[tuple[int, ...], ...]) -> list[int]:
    """All leading principal minors, by fraction-free (Bareiss) elimination."""
    n = len(rows)
    m = [list(r) for r in rows]
    minors = []
    prev = 1
    for k in range(n):
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        minors.append(pivot if k == 0 else m[k][k])
        prev = m[k][k]
        if prev == 0:
            # remaining minors are computed directly; only happens on
            # non-positive-definite input
            for kk in range(k + 1, n):
                minors.append(_det([r[: kk + 1] for r in rows[: kk + 1]]))
            break
    # Bareiss keeps m[k][k] equal to the k-th leading minor
    return minors[:n]


def _det(rows) -> int:
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class GramMatrix:
    """Validated Gram matrix: integer, symmetric, even diagonal, positive
    definite."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n == 0:
            raise ValueError("empty matrix")
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError("entries must be integers")
        for i in range(n):
            if rows[i][i] % 2 != 0:
                raise ValueError(f"diagonal entry a[{i}][{i}] = {rows[i][i]} is odd")
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"not symmetric at ({i},{j})")
        minors = _leading_minors(rows)
        for k, mk in enumerate(minors):
            if mk <= 0:
                raise ValueError(
                    f"not positive definite: leading minor {k + 1} is {mk}"
                )

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def det(self) -> int:
        return _det(self.entries)

    def value(self, x) -> int:
        """Q_A(x) = x^T A x."""
        n = self.rank
        return sum(self.entries[i][j] * x[i] * x[j] for i in range(n) for j in range(n))


def validate(rows) -> GramMatrix:
    """Spec-facing constructor name."""
    return GramMatrix(tuple(tuple(r) for r in rows))


def direct_sum(a: GramMatrix, b: GramMatrix) -> GramMatrix:
    """Block-diagonal sum of two forms."""
    n, m = a.rank, b.rank
    rows = []
    for i in range(n):
        rows.append(tuple(a.entries[i]) + (0,) * m)
    for i in range(m):
        rows.append((0,) * n + tuple(b.entries[i]))
    return GramMatrix(tuple(rows))


def _inverse(gram: GramMatrix) -> list[list[Fraction]]:
    n = gram.rank
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(gram.entries)]
    for col in range(n):
        pivot_row = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[pivot_row] = m[pivot_row], m[col]
        inv = Fraction(1, 1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def level(gram: GramMatrix) -> int:
    """Smallest positive N with N*A^-1 integral and even on the diagonal:
    the lcm of the denominators of the entries of A^-1 and of half its
    diagonal entries."""
    inv = _inverse(gram)
    n = gram.rank
    dens = []
    for i in range(n):
        for j in range(n):
            dens.append(inv[i][j].denominator)
        dens.append((inv[i][i] / 2).denominator)
    return lcm(*dens)


def _ldl(gram: GramMatrix):
    """d, u with Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2."""
    n = gram.rank
    m = [[Fraction(x) for x in row] for row in gram.entries]
    d = []
    u = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        di = m[i][i]
        d.append(di)
        for j in range(i + 1, n):
            u[i][j] = m[i][j] / di
        for j in range(i + 1, n):
            for k in range(j, n):
                m[j][k] -= m[i][j] * m[i][k] / di
                m[k][j] = m[j][k]
    return d, u


def _interval(c: Fraction, bound: Fraction) -> range:
    """Integers t with (t + c)^2 <= bound, exactly."""
    if bound < 0:
        return range(0)
    p, q = c.numerator, c.denominator
    u, w = bound.numerator, bound.denominator
    # (t*q + p)^2 <= u*q^2/w  <=>  |t*q + p| <= isqrt(floor(u*q^2/w))
    y = isqrt(u * q * q // w)
    lo = -((y + p) // q)
    hi = (y - p) // q
    return range(lo, hi + 1)


def theta(gram: GramMatrix, n_max: int) -> list[int]:
    """Representation counts: entry n is #{x : Q_A(x) = 2n}, 0 <= n <= n_max."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    n = gram.rank
    d, u = _ldl(gram)
    counts = [0] * (n_max + 1)
    budget = Fraction(2 * n_max)
    x = [0] * n

    def walk(i: int, remaining: Fraction):
        if i < 0:
            used = budget - remaining
            counts[int(used) // 2] += 1
            return
        c = sum(u[i][j] * x[j] for j in range(i + 1, n))
        for t in _interval(c, remaining / d[i]):
            x[i] = t
            walk(i - 1, remaining - d[i] * (t + c) ** 2)
        x[i] = 0

    walk(n - 1, budget)
    return counts


def theta_qseries(gram: GramMatrix, n_max: int) -> QSeries:
    """The theta series as a QSeries in q (coefficient of q^n counts
    vectors of value 2n)."""
    return QSeries(0, theta(gram, n_max))


def min_represented(gram: GramMatrix) -> int:
    """Smallest positive even value represented: found by expanding the
    theta series out to half the smallest diagonal entry (Q(e_i) = a_ii
    guarantees termination there)."""
    cap = min(gram.entries[i][i] for i in range(gram.rank)) // 2
    counts = theta(gram, cap)
    for m, c in enumerate(counts):
        if m > 0 and c > 0:
            return 2 * m
    raise AssertionError("positive-definite form must represent its diagonal")


def verify_theorem51(gram: GramMatrix) -> dict:
    """Minimum bound for forms of level <= 2 in v = 0 mod 4 variables:
    min <= 2 + v/4 when 8 | v, min <= 2 + v/2 when v = 4 mod 8."""
    v = gram.rank
    if v % 4 != 0:
        raise ValueError(f"bound applies when 4 | v; rank is {v}")
    lv = level(gram)
    if lv > 2:
        raise ValueError(f"bound applies to level <= 2 forms; level is {lv}")
    bound = 2 + v // 4 if v % 8 == 0 else 2 + v // 2
    m = min_represented(gram)
    return {
        "rank": v,
        "level": lv,
        "min": m,
        "bound": bound,
        "verdict": "PASS" if m <= bound else "FAIL",
    }


def parse_gram(text: str, source: str = "<gram>") -> GramMatrix:
    """Gram file format: first data line is the rank v, then v lines of v
    integers; '#' starts a comment."""
    rows = []
    v = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            values = [int(x) for x in parts]
        except ValueError:
            raise ValueError(f"{source}:{lineno}: not integers: {line!r}") from None
        if v is None:
            if len(values) != 1:
                raise ValueError(f"{source}:{lineno}: expected the rank alone")
            v = values[0]
            if v < 1:
                raise ValueError(f"{source}:{lineno}: rank must be >= 1")
            continue
        if len(values) != v:
            raise ValueError(
                f"{source}:{lineno}: expected {v} entries, got {len(values)}"
            )
        rows.append(tuple(values))
    if v is None:
        raise ValueError(f"{source}: empty file")
    if len(rows) != v:
        raise ValueError(f"{source}: expected {v} rows, got {len(rows)}")
    try:
        return GramMatrix(tuple(rows))
    except ValueError as exc:
        raise ValueError(f"{source}: {exc}") from None


def load_gram(path) -> GramMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_gram(fh.read(), source=str(path))
