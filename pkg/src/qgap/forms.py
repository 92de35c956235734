"""Series expansions for the generator catalog, bases of the level-1 and
level-2 spaces, and evaluation of parsed expressions.

All builders take a ``window``: the number of justified coefficients from
the valuation.  Every construction here preserves windows (a product of
series with window L has window L), so evaluating a monomial expression at
window L yields exactly L justified coefficients from its leading term.

Expansions are memoized per (generator, window); QSeries values are
immutable, so the memo is safe for concurrent readers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from qgap.arith import alpha_coeff, sigma, sigma_alt, sigma_odd, sigma_star
from qgap.catalog import FormExpr, Generator, dim_m
from qgap.exprs import parse_expr
from qgap.series import QSeries, product_expand

__all__ = [
    "basis_m1",
    "basis_m2",
    "delta",
    "delta2",
    "delta_quotient",
    "delta_quotient_root",
    "dim_m",
    "eisenstein_en_inf",
    "eisenstein_g",
    "eval_expr",
    "factor_power",
    "generator_series",
    "identity_checks",
    "j2",
    "j_invariant",
    "level2_eisenstein",
    "m2",
]


def eisenstein_g(h: int, prec: int) -> QSeries:
    """Level-one Eisenstein series 1 + alpha_h * sum sigma_{h-1}(n) q^n.

    h = 2 is admitted (the quasi-modular weight-2 series, alpha_2 = -24);
    h = 0 gives the constant 1.
    """
    if h < 0 or h % 2 != 0:
        raise ValueError(f"eisenstein_g needs even h >= 0, got {h}")
    if h == 0:
        return QSeries.one(prec)
    a = alpha_coeff(h)
    return QSeries(0, [1] + [a * sigma(n, h - 1) for n in range(1, prec)])


def delta(prec: int) -> QSeries:
    """The weight-12 cusp form q * prod (1-q^n)^24."""
    if prec < 1:
        raise ValueError("prec must be >= 1")
    return product_expand(lambda n: 24, prec).shift(1)


def j_invariant(prec: int) -> QSeries:
    """The modular invariant G4^3 / Delta (valuation -1, monic)."""
    return generator_series(Generator("j"), prec)


def level2_eisenstein(prec: int) -> tuple[QSeries, QSeries, QSeries]:
    """The three level-two generators (E_gamma2, E_04, E_inf4)."""
    return (
        generator_series(Generator("Egamma2"), prec),
        generator_series(Generator("E04"), prec),
        generator_series(Generator("Einf4"), prec),
    )


def eisenstein_en_inf(N: int, k: int, prec: int) -> QSeries:
    """E_{N,inf,k} = sum sigma*_{N,k-1}(n) q^n, vanishing at infinity only."""
    return generator_series(Generator("E", (N, k)), prec)


def delta2(prec: int) -> QSeries:
    return generator_series(Generator("Delta2"), prec)


def j2(prec: int) -> QSeries:
    return generator_series(Generator("j2"), prec)


def m2(prec: int) -> QSeries:
    """The hauptmodul shift j2 - 64 (equals E04/Einf4)."""
    return j2(prec) - 64


def delta_quotient(N: int, prec: int) -> QSeries:
    """phi_N = Delta(Nz)/Delta(z); valuation N-1."""
    return generator_series(Generator("phi", (N,)), prec)


def delta_quotient_root(N: int, prec: int) -> QSeries:
    """Phi_N = phi_N^(1/(N-1)): phi_2 itself at N=2, sqrt(phi_3) at N=3."""
    return generator_series(Generator("Phi", (N,)), prec)


def t_series(level: int, h: int, prec: int) -> QSeries:
    """The weight (2-h) pole-at-infinity series used in the vanishing and
    gap arguments: level 1 pairs an Eisenstein factor with Delta^-r, level 2
    pairs E_gamma2 (squared for h = 2 mod 4) and E_04 with a power of
    1/E_inf4."""
    if level == 1:
        return generator_series(Generator("T", (h,)), prec)
    if level == 2:
        return generator_series(Generator("T2", (h,)), prec)
    raise ValueError(f"t_series exists at levels 1 and 2, not {level}")


@lru_cache(maxsize=None)
def generator_series(gen: Generator, window: int) -> QSeries:
    """Expansion of a catalog generator with ``window`` justified
    coefficients from its valuation."""
    if window < 1:
        raise ValueError("window must be >= 1")
    kind, p = gen.kind, gen.params

    if kind == "G":
        return eisenstein_g(p[0], window)
    if kind == "Delta":
        return product_expand(lambda n: 24, window).shift(1)
    if kind == "j":
        g4 = generator_series(Generator("G", (4,)), window)
        return g4**3 * generator_series(Generator("Delta"), window).invert()
    if kind == "Egamma2":
        return QSeries(0, [1] + [24 * sigma_odd(n) for n in range(1, window)])
    if kind == "E04":
        return QSeries(0, [1] + [16 * sigma_alt(n, 3) for n in range(1, window)])
    if kind == "Einf4":
        return QSeries(1, [sigma_star(n, 2, 3) for n in range(1, window + 1)])
    if kind == "E":
        N, k = p
        if (N, k) == (2, 4):
            return generator_series(Generator("Einf4"), window)
        return QSeries(1, [sigma_star(n, N, k - 1) for n in range(1, window + 1)])
    if kind == "Delta2":
        return (
            generator_series(Generator("E04"), window)
            * generator_series(Generator("Einf4"), window)
        )
    if kind == "j2":
        eg = generator_series(Generator("Egamma2"), window)
        return eg * eg * generator_series(Generator("Einf4"), window).invert()
    if kind == "phi":
        N = p[0]
        dl = generator_series(Generator("Delta"), window)
        return dl.rescale(N) * dl.invert()
    if kind == "Phi":
        N = p[0]
        phi = generator_series(Generator("phi", (N,)), window)
        return phi if N == 2 else phi.root(2)
    if kind == "S":
        n, d = p
        g4 = generator_series(Generator("G", (4,)), window)
        g6 = generator_series(Generator("G", (6,)), window)
        blend = Fraction(n, d) * g4**3 + Fraction(d - n, d) * g6**2
        return generator_series(Generator("Delta"), window) * blend
    if kind == "T":
        h = p[0]
        r = dim_m(1, h)
        eis_weight = 0 if h % 12 == 2 else 14 - (h % 12)
        tail = generator_series(Generator("Delta"), window) ** (-r)
        if eis_weight == 0:
            return tail
        return generator_series(Generator("G", (eis_weight,)), window) * tail
    if kind == "T2":
        h = p[0]
        r = dim_m(2, h)
        eg = generator_series(Generator("Egamma2"), window)
        e04 = generator_series(Generator("E04"), window)
        einf = generator_series(Generator("Einf4"), window)
        if h % 4 == 0:
            return eg * e04 * einf ** (-r)
        return eg * eg * e04 * einf ** (-(1 + r))
    raise AssertionError(f"unhandled generator kind {kind!r}")


@lru_cache(maxsize=None)
def factor_power(gen: Generator, exponent: int, window: int) -> QSeries:
    """Cached gen**exponent at the given window."""
    return generator_series(gen, window) ** exponent


def eval_expr(expr: FormExpr | str, prec: int) -> QSeries:
    """Evaluate a monomial expression with ``prec`` justified coefficients
    from its valuation.

    The internal window is prec + (total pole order contributed by the
    factors) + 1, rounded up to a multiple of 32 so that batch evaluations
    share cached factor powers; window-preserving arithmetic then guarantees
    at least prec justified coefficients, so a reach failure here is a
    defect, not an input problem.
    """
    if isinstance(expr, str):
        expr = parse_expr(expr)
    if prec < 1:
        raise ValueError("prec must be >= 1")
    margin = sum(max(0, -e * g.valuation) for g, e in expr.factors)
    window = -(-(prec + margin + 1) // 32) * 32
    acc = None
    for gen, e in expr.factors:
        piece = factor_power(gen, e, window)
        acc = piece if acc is None else acc * piece
    assert acc.window >= prec, "reach propagation failure (defect)"
    return acc


def basis_m2(h: int, prec: int) -> list[QSeries]:
    """Monic triangular basis of the level-2 weight-h space: powers of j2
    times E_inf4^(r-1), with an E_gamma2 factor when h = 2 mod 4.  The d-th
    element has valuation r-1-d, so valuations run over 0..r-1."""
    if h <= 0 or h % 2 != 0:
        raise ValueError(f"basis_m2 needs even h > 0, got {h}")
    r = dim_m(2, h)
    window = prec + r + 2
    ej2 = generator_series(Generator("j2"), window)
    einf = generator_series(Generator("Einf4"), window)
    tail = einf ** (r - 1)
    if h % 4 != 0:
        tail = generator_series(Generator("Egamma2"), window) * tail
    basis = []
    jpow = QSeries.one(window)
    for _ in range(r):
        basis.append(jpow * tail)
        jpow = jpow * ej2
    return basis


def basis_m1(h: int, prec: int) -> list[QSeries]:
    """Monic triangular basis of the level-1 weight-h space: Delta^d times
    the monomial G4^a G6^b of weight h - 12d (b in {0,1} fixed by h mod 4).
    The d-th element has valuation d."""
    if h < 4 or h % 2 != 0:
        raise ValueError(f"basis_m1 needs even h >= 4, got {h}")
    r = dim_m(1, h)
    window = prec + r + 2
    g4 = generator_series(Generator("G", (4,)), window)
    g6 = generator_series(Generator("G", (6,)), window)
    dl = generator_series(Generator("Delta"), window)
    basis = []
    dpow = QSeries.one(window)
    for d in range(r):
        w = h - 12 * d
        b = 0 if w % 4 == 0 else 1
        a = (w - 6 * b) // 4
        basis.append(dpow * g4**a * g6**b)
        dpow = dpow * dl
    return basis


def identity_checks(prec: int = 200) -> list[tuple[str, bool]]:
    """The structural series identities among the generators, each checked
    to ``prec`` coefficients with exact equality."""
    eg, e04, einf = level2_eisenstein(prec + 2)
    g4 = eisenstein_g(4, prec + 2)
    results = []

    results.append(("G4 = E04 + 256*Einf4", g4.agrees_with(e04 + 256 * einf, upto=prec)))
    results.append(
        ("Egamma2^2 = E04 + 64*Einf4", (eg * eg).agrees_with(e04 + 64 * einf, upto=prec))
    )

    product_form = product_expand(
        lambda n: 8 if n % 2 == 0 else -8, prec + 1
    ).shift(1)
    results.append(
        ("Einf4 = q*prod (1-q^even)^8 (1-q^odd)^-8",
         einf.agrees_with(product_form, upto=prec))
    )

    mm = m2(prec + 2)
    results.append(
        ("m2 = E04/Einf4", (mm * einf).agrees_with(e04, upto=prec))
    )
    results.append(("j2 = m2 + 64", j2(prec + 2).agrees_with(mm + 64, upto=prec)))

    dj2 = j2(prec + 2).q_derivative()
    rhs = -(eg * e04 * einf.invert())
    results.append(("D(j2) = -Egamma2*E04/Einf4", dj2.agrees_with(rhs, upto=prec)))

    return results
