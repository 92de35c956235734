"""Exact scalar kernel: p-adic orders, digit sums, divisor sums, Bernoulli
numbers, and the Moebius function.

All values are exact; the only non-integers returned are `fractions.Fraction`
instances.  The single deliberate exception is INFINITE (= ``math.inf``),
used as the p-adic order of zero.  It never enters series arithmetic.

Bernoulli convention: here every B_k is positive, defined through

    x / (e^x - 1) = 1 - x/2 + sum_{k>=1} (-1)^{k+1} B_k x^{2k} / (2k)!

so B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ...  This differs from the modern
signed convention B_2 = 1/30, B_4 = -1/30; conversion is
B_k(here) = |B_{2k}(modern)|.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "INFINITE",
    "alpha_coeff",
    "bernoulli",
    "digit_sum",
    "divisors",
    "largest_digit",
    "moebius",
    "ord_p",
    "sigma",
    "sigma_alt",
    "sigma_odd",
    "sigma_star",
]

#: p-adic order of zero.  Compares greater than every finite order.
INFINITE = math.inf


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def ord_p(x, p: int):
    """Exact p-adic order of a rational x; INFINITE for x = 0.

    For x = n/d in lowest terms this is ord_p(n) - ord_p(d), so the result
    is a (possibly negative) integer for every nonzero rational.
    """
    if not _is_prime(p):
        raise ValueError(f"ord_p requires a prime p, got {p}")
    x = Fraction(x)
    if x == 0:
        return INFINITE
    num = abs(x.numerator)
    a = 0
    while num % p == 0:
        num //= p
        a += 1
    den = x.denominator
    while den % p == 0:
        den //= p
        a -= 1
    return a


def digit_sum(n: int, b: int) -> int:
    """Sum of the base-b digits of a positive integer."""
    if n <= 0:
        raise ValueError(f"digit_sum requires n >= 1, got {n}")
    if b < 2:
        raise ValueError(f"digit_sum requires base >= 2, got {b}")
    total = 0
    while n:
        n, r = divmod(n, b)
        total += r
    return total


def largest_digit(n: int, b: int) -> int:
    """Largest base-b digit of a positive integer."""
    if n <= 0:
        raise ValueError(f"largest_digit requires n >= 1, got {n}")
    if b < 2:
        raise ValueError(f"largest_digit requires base >= 2, got {b}")
    best = 0
    while n:
        n, r = divmod(n, b)
        if r > best:
            best = r
    return best


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n >= 1, by trial division up to sqrt(n)."""
    if n <= 0:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def sigma(n: int, alpha: int) -> int:
    """Divisor power sum: sum of d^alpha over positive divisors d of n."""
    if n <= 0:
        raise ValueError(f"sigma requires n >= 1, got {n}")
    if alpha < 0:
        raise ValueError(f"sigma requires alpha >= 0, got {alpha}")
    return sum(d**alpha for d in divisors(n))


def sigma_odd(n: int) -> int:
    """Sum of the odd positive divisors of n."""
    if n <= 0:
        raise ValueError(f"sigma_odd requires n >= 1, got {n}")
    return sum(d for d in divisors(n) if d % 2 == 1)


def sigma_alt(n: int, k: int) -> int:
    """Sign-alternating divisor sum: sum of (-1)^d d^k over d | n."""
    if n <= 0:
        raise ValueError(f"sigma_alt requires n >= 1, got {n}")
    return sum((-(d**k) if d % 2 else d**k) for d in divisors(n))


def sigma_star(n: int, N: int, k: int) -> int:
    """Restricted divisor sum: sum of d^k over d | n with N not dividing n/d."""
    if n <= 0:
        raise ValueError(f"sigma_star requires n >= 1, got {n}")
    if N < 2:
        raise ValueError(f"sigma_star requires N >= 2, got {N}")
    return sum(d**k for d in divisors(n) if (n // d) % N != 0)


@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    """B_k in the all-positive convention (B_1 = 1/6, B_2 = 1/30, ...).

    Computed by exact power-series division of x by e^x - 1, truncated
    beyond degree 2k.
    """
    if k < 1:
        raise ValueError(f"bernoulli requires k >= 1, got {k}")
    m = 2 * k
    # unit part of (e^x - 1)/x, coefficients 1/(i+1)!
    unit = [Fraction(1, math.factorial(i + 1)) for i in range(m + 1)]
    inv = [Fraction(1)]
    for n in range(1, m + 1):
        inv.append(-sum(unit[i] * inv[n - i] for i in range(1, n + 1)))
    b = (-1) ** (k + 1) * inv[m] * math.factorial(m)
    return b


def alpha_coeff(h: int):
    """Eisenstein coefficient alpha_h = (-1)^{h/2} (2h) / B_{h/2}; alpha_0 = 0.

    Returns an int when the value is integral (all h <= 10), a Fraction
    otherwise (first at h = 12: 65520/691).
    """
    if h < 0 or h % 2 != 0:
        raise ValueError(f"alpha_coeff requires even h >= 0, got {h}")
    if h == 0:
        return 0
    k = h // 2
    g = Fraction((-1) ** k * 4 * k) / bernoulli(k)
    return int(g) if g.denominator == 1 else g


def moebius(n: int) -> int:
    """Moebius function: (-1)^(number of prime factors), 0 if n not squarefree."""
    if n <= 0:
        raise ValueError(f"moebius requires n >= 1, got {n}")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result
