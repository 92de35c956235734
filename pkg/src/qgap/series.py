"""Truncated Laurent series in q with exact rational coefficients.

A QSeries stores the coefficients of q^valuation ... q^(reach-1).  ``reach``
is the first exponent whose coefficient is NOT guaranteed correct: every
operation propagates it pessimistically from its operands, and asking for a
coefficient at or beyond reach raises ReachError instead of silently
returning zero.  Below the valuation all coefficients are exactly zero.

Coefficients are exact ints or fractions.Fraction; a Fraction that reduces
to an integer is stored as an int (this is invisible: both are exact
rationals and compare equal).  Floats are rejected.

Multiplication is schoolbook convolution.  Series at the scale this package
targets are a few thousand terms at most, and bignum coefficient growth
dominates the cost anyway.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping

__all__ = ["QSeries", "ReachError", "product_expand", "neg_power_einf4"]


class ReachError(LookupError):
    """A coefficient beyond the justified truncation order was requested."""


def _norm_coeff(c):
    if isinstance(c, bool):
        raise TypeError("bool is not a series coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"exact coefficients only (int or Fraction), got {type(c).__name__}")


class QSeries:
    """Immutable truncated Laurent series.

    Invariants: the first stored coefficient is nonzero unless the series is
    identically zero up to reach (then no coefficients are stored and
    valuation == reach); reach == valuation + number of stored coefficients.
    """

    __slots__ = ("_val", "_coeffs", "_reach")

    def __init__(self, valuation: int, coeffs: Iterable):
        coeffs = [_norm_coeff(c) for c in coeffs]
        reach = valuation + len(coeffs)
        lead = 0
        while lead < len(coeffs) and coeffs[lead] == 0:
            lead += 1
        coeffs = coeffs[lead:]
        valuation += lead
        self._val = valuation if coeffs else reach
        self._coeffs = tuple(coeffs)
        self._reach = reach

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, reach: int) -> "QSeries":
        """The series known to vanish at every exponent below ``reach``."""
        return cls(reach, [])

    @classmethod
    def one(cls, window: int) -> "QSeries":
        """The constant 1, justified for ``window`` coefficients."""
        return cls.monomial(0, window)

    @classmethod
    def monomial(cls, exponent: int, window: int) -> "QSeries":
        """q^exponent with ``window`` justified coefficients."""
        if window < 1:
            raise ValueError("window must be >= 1")
        return cls(exponent, [1] + [0] * (window - 1))

    # -- inspection --------------------------------------------------------

    @property
    def valuation(self) -> int:
        """Exponent of the first nonzero coefficient (== reach if zero)."""
        return self._val

    @property
    def reach(self) -> int:
        return self._reach

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def pole_order(self) -> int:
        """Order of the pole at infinity: max(0, -valuation)."""
        return 0 if self.is_zero else max(0, -self._val)

    @property
    def window(self) -> int:
        """Number of justified coefficients starting at the valuation."""
        return self._reach - self._val

    def coeff(self, n: int):
        """Coefficient of q^n.  Exact zero below the valuation; ReachError
        at or beyond reach."""
        if n >= self._reach:
            raise ReachError(
                f"coefficient of q^{n} is beyond the justified reach {self._reach}"
            )
        if n < self._val:
            return 0
        return self._coeffs[n - self._val]

    @property
    def constant_term(self):
        return self.coeff(0)

    def coefficients(self, count: int | None = None) -> list:
        """The first ``count`` coefficients from the valuation (all if None)."""
        if count is None:
            return list(self._coeffs)
        if count > self.window:
            raise ReachError(
                f"{count} coefficients requested but only {self.window} are justified"
            )
        out = list(self._coeffs[:count])
        out.extend([0] * (count - len(out)))
        return out

    def first_nonzero_index(self, start: int = 1) -> int | None:
        """Smallest exponent n >= start with a nonzero (justified)
        coefficient, or None if all justified coefficients from start on
        vanish."""
        for n in range(max(start, self._val), self._reach):
            if self._coeffs[n - self._val] != 0:
                return n
        return None

    def agrees_with(self, other: "QSeries", upto: int | None = None) -> bool:
        """Coefficientwise equality on the shared justified range
        (optionally capped at exponent ``upto`` exclusive)."""
        end = min(self._reach, other._reach)
        if upto is not None:
            end = min(end, upto)
        start = min(self._val, other._val)
        return all(self.coeff(n) == other.coeff(n) for n in range(start, end))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self._val == other._val
            and self._coeffs == other._coeffs
            and self._reach == other._reach
        )

    __hash__ = None

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self._coeffs[:8]):
            if c == 0:
                continue
            n = self._val + i
            if n == 0:
                terms.append(f"{c}")
            elif n == 1:
                terms.append(f"{c}*q")
            else:
                terms.append(f"{c}*q^{n}")
        body = " + ".join(terms) if terms else "0"
        return f"QSeries({body} + O(q^{self._reach}))"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._add_constant(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        reach = min(self._reach, other._reach)
        val = min(self._val, other._val, reach)
        out = [0] * (reach - val)
        for term in (self, other):
            base = term._val - val
            for i, c in enumerate(term._coeffs):
                pos = base + i
                if pos < len(out):
                    out[pos] = out[pos] + c
        return QSeries(val, out)

    __radd__ = __add__

    def _add_constant(self, c):
        if c == 0:
            return self
        if self._reach <= 0:
            raise ReachError("cannot add a constant: exponent 0 is beyond reach")
        val = min(self._val, 0)
        out = [0] * (self._reach - val)
        for i, x in enumerate(self._coeffs):
            out[self._val - val + i] = x
        out[-val] = out[-val] + c
        return QSeries(val, out)

    def __neg__(self):
        return QSeries(self._val, [-c for c in self._coeffs]) if self._coeffs \
            else QSeries.zero(self._reach)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._add_constant(-other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return QSeries.zero(self._reach)
            return QSeries(self._val, [c * other for c in self._coeffs]) \
                if self._coeffs else QSeries.zero(self._reach)
        if not isinstance(other, QSeries):
            return NotImplemented
        reach = min(self._reach + other._val, other._reach + self._val)
        val = self._val + other._val
        n_out = reach - val
        if n_out <= 0 or not self._coeffs or not other._coeffs:
            return QSeries.zero(reach)
        out = [0] * n_out
        b = other._coeffs
        for i, a in enumerate(self._coeffs):
            if i >= n_out:
                break
            if a == 0:
                continue
            lim = min(len(b), n_out - i)
            for j in range(lim):
                if b[j] != 0:
                    out[i + j] += a * b[j]
        return QSeries(val, out)

    __rmul__ = __mul__

    def invert(self) -> "QSeries":
        """Multiplicative inverse, justified on the same-size window.

        Requires a nonzero leading coefficient (in particular, at least one
        justified coefficient).
        """
        if not self._coeffs:
            raise ZeroDivisionError("cannot invert a series that is zero up to reach")
        u = self._coeffs
        n = len(u)
        u0 = u[0]
        monic = u0 == 1
        w = [1 if monic else _norm_coeff(Fraction(1, 1) / u0)]
        for m in range(1, n):
            s = 0
            for k in range(1, m + 1):
                if u[k] != 0:
                    s += u[k] * w[m - k]
            w.append(-s if monic else _norm_coeff(Fraction(-s, 1) / u0))
        return QSeries(-self._val, w)

    def __pow__(self, e: int) -> "QSeries":
        if not isinstance(e, int):
            raise TypeError("series powers must be integers")
        if e == 0:
            return QSeries.one(max(self.window, 1))
        base = self.invert() if e < 0 else self
        e = abs(e)
        result = None
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def root(self, m: int) -> "QSeries":
        """The monic m-th root: b with b**m == self, requiring m | valuation
        and a monic unit part (leading coefficient exactly 1)."""
        if m < 1:
            raise ValueError("root index must be a positive integer")
        if not self._coeffs:
            raise ZeroDivisionError("cannot take a root of a series that is zero up to reach")
        if self._val % m != 0:
            raise ValueError(f"valuation {self._val} is not divisible by {m}")
        if self._coeffs[0] != 1:
            raise ValueError("root requires a monic unit part (leading coefficient 1)")
        u = self._coeffs
        n = len(u)
        b = [1]
        # from m*u*D(b) = D(u)*b with D = q d/dq:
        #   m*k*b_k = sum_{i=1..k} (i - m*(k-i)) u_i b_{k-i}
        for k in range(1, n):
            s = 0
            for i in range(1, k + 1):
                ui = u[i] if i < n else 0
                if ui != 0:
                    s += (i - m * (k - i)) * ui * b[k - i]
            b.append(_norm_coeff(Fraction(s, m * k)))
        return QSeries(self._val // m, b)

    def q_derivative(self) -> "QSeries":
        """The operator q d/dq (= d/d log q): coefficient of q^n becomes n*c_n."""
        if not self._coeffs:
            return QSeries.zero(self._reach)
        out = [(self._val + i) * c for i, c in enumerate(self._coeffs)]
        return QSeries(self._val, out)

    def rescale(self, N: int) -> "QSeries":
        """Substitute q -> q^N.  Exponent n maps to N*n; the gaps in between
        are exact zeros, so the reach scales to N*(reach-1)+1."""
        if N < 1:
            raise ValueError("rescale factor must be a positive integer")
        if N == 1:
            return self
        new_reach = N * (self._reach - 1) + 1
        if not self._coeffs:
            return QSeries.zero(new_reach)
        out = [0] * (new_reach - N * self._val)
        for i, c in enumerate(self._coeffs):
            out[N * i] = c
        return QSeries(N * self._val, out)

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^k (exact: shifts valuation and reach)."""
        s = QSeries.__new__(QSeries)
        s._val = self._val + k
        s._coeffs = self._coeffs
        s._reach = self._reach + k
        return s


def product_expand(exponents, prec: int) -> QSeries:
    """Expand prod_{n>=1} (1 - q^n)^{e_n} to ``prec`` coefficients.

    ``exponents`` is a callable n -> e_n or a mapping (missing keys mean 0);
    it is consulted for 1 <= n < prec.  Uses the classical recursion for
    coefficients of q-products (Apostol, Introduction to Analytic Number
    Theory, Theorem 14.8): with g(k) = -sum_{d|k} d*e_d,

        n*p(n) = sum_{k=1..n} g(k) p(n-k),   p(0) = 1.
    """
    if prec <= 0:
        raise ValueError(f"prec must be >= 1, got {prec}")
    if isinstance(exponents, Mapping):
        table = exponents
        efun: Callable[[int], int] = lambda n: table.get(n, 0)
    else:
        efun = exponents
    e = [0] * prec
    for n in range(1, prec):
        en = efun(n)
        if not isinstance(en, int):
            raise TypeError("product exponents must be integers")
        e[n] = en
    g = [0] * prec
    for d in range(1, prec):
        if e[d]:
            de = d * e[d]
            for k in range(d, prec, d):
                g[k] -= de
    p = [1] + [0] * (prec - 1)
    for n in range(1, prec):
        s = 0
        for k in range(1, n + 1):
            if g[k] and p[n - k]:
                s += g[k] * p[n - k]
        q, r = divmod(s, n)
        if r:
            raise ArithmeticError("non-integral product coefficient; exponent data invalid")
        p[n] = q
    return QSeries(0, p)


def neg_power_einf4(s: int, prec: int) -> QSeries:
    """E_{inf,4}^(-s) as q^(-s) * sum R(n) q^n via the divisor-sum recursion

        R(0) = 1,   R(n) = (8s/n) * sum_{a=1..n} sigma_alt_1(a) R(n-a),

    where sigma_alt_1(a) = sum_{d|a} (-1)^d d.  R(n) has sign (-1)^n.
    """
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if prec <= 0:
        raise ValueError(f"prec must be >= 1, got {prec}")
    salt = [0] * prec
    for d in range(1, prec):
        v = -d if d % 2 else d
        for k in range(d, prec, d):
            salt[k] += v
    R = [1] + [0] * (prec - 1)
    for n in range(1, prec):
        t = 0
        for a in range(1, n + 1):
            if salt[a] and R[n - a]:
                t += salt[a] * R[n - a]
        q, r = divmod(8 * s * t, n)
        if r:
            raise ArithmeticError("non-integral coefficient in E_{inf,4} power recursion")
        R[n] = q
    return QSeries(-s, R)
