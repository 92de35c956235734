from fractions import Fraction

import pytest

from qgap.catalog import Generator, dim_m
from qgap.forms import (
    basis_m1,
    basis_m2,
    delta,
    delta2,
    delta_quotient,
    delta_quotient_root,
    eisenstein_en_inf,
    eisenstein_g,
    eval_expr,
    identity_checks,
    j2,
    j_invariant,
    level2_eisenstein,
    m2,
    t_series,
)
from qgap.series import QSeries


class TestEisensteinG:
    def test_g4(self):
        g4 = eisenstein_g(4, 4)
        assert g4.coefficients() == [1, 240, 2160, 6720]

    def test_g6(self):
        g6 = eisenstein_g(6, 3)
        assert g6.coefficients() == [1, -504, -16632]

    def test_g2(self):
        g2 = eisenstein_g(2, 3)
        assert g2.coefficients() == [1, -24, -72]

    def test_g0_is_one(self):
        assert eisenstein_g(0, 5).agrees_with(QSeries.one(5))

    def test_g12_rational(self):
        g12 = eisenstein_g(12, 2)
        assert g12.coeff(1) == Fraction(65520, 691)

    def test_rejects_odd(self):
        with pytest.raises(ValueError):
            eisenstein_g(5, 3)


class TestDeltaAndJ:
    def test_delta_leading(self):
        d = delta(6)
        assert d.valuation == 1
        assert d.coeff(1) == 1
        assert d.coeff(2) == -24

    def test_delta_inverse_round_trip(self):
        d = delta(10)
        assert (d * d.invert()).agrees_with(QSeries.one(1), upto=8)

    def test_j_expansion(self):
        j = j_invariant(4)
        assert j.valuation == -1
        assert j.coeff(-1) == 1
        assert j.coeff(0) == 744
        assert j.coeff(1) == 196884
        assert j.coeff(2) == 21493760


class TestLevel2Generators:
    def test_egamma2(self):
        eg, _, _ = level2_eisenstein(4)
        assert eg.coefficients() == [1, 24, 24, 96]

    def test_e04(self):
        _, e04, _ = level2_eisenstein(4)
        assert e04.coefficients() == [1, -16, 112, -448]

    def test_einf4(self):
        _, _, einf = level2_eisenstein(4)
        assert einf.valuation == 1
        assert einf.coefficients() == [1, 8, 28, 64]

    def test_e2inf4_alias(self):
        assert eisenstein_en_inf(2, 4, 10) == level2_eisenstein(10)[2]

    def test_e3inf6(self):
        e = eisenstein_en_inf(3, 6, 3)
        assert e.coeff(1) == 1
        assert e.coeff(3) == 243  # divisors 1 (excluded: 3 | 3) and 3

    def test_integrality(self):
        for s in level2_eisenstein(40):
            assert all(isinstance(c, int) for c in s.coefficients())


class TestDerivedForms:
    def test_delta2_is_cusp_like(self):
        d2 = delta2(5)
        assert d2.valuation == 1
        assert d2.coeff(1) == 1

    def test_j2_constant_term(self):
        assert j2(3).coeff(-1) == 1
        assert j2(3).coeff(0) == 40

    def test_m2_constant_term(self):
        assert m2(3).coeff(0) == -24

    def test_phi2(self):
        phi2 = delta_quotient(2, 5)
        assert phi2.valuation == 1
        # Delta(2z)/Delta(z) recomputed directly
        d = delta(12)
        assert phi2.agrees_with(d.rescale(2) * d.invert())

    def test_phi3_valuation(self):
        assert delta_quotient(3, 4).valuation == 2

    def test_phi_root_round_trips(self):
        assert delta_quotient_root(2, 6) == delta_quotient(2, 6)
        big = delta_quotient_root(3, 8)
        assert big.valuation == 1
        assert (big * big).agrees_with(delta_quotient(3, 8))

    def test_s_family(self):
        s22 = eval_expr("S(2,2)", 4)  # Delta * G4^3 = Delta * j * Delta = ...
        assert s22.valuation == 1
        assert s22.coeff(1) == 1
        s12 = eval_expr("S(1,2)", 4)
        assert s12.coeff(1) == 1


class TestTSeries:
    def test_t2_8_shape(self):
        t = t_series(2, 8, 5)
        assert t.valuation == -3  # r(2,8) = 3
        assert t.coeff(-3) == 1

    def test_t2_weights(self):
        for h in range(4, 42, 2):
            g = Generator("T2", (h,))
            assert g.weight == 2 - h

    def test_t_level1_h14_is_delta_inverse(self):
        t = t_series(1, 14, 4)
        d_inv = delta(6).invert()
        assert t.agrees_with(d_inv)

    def test_t_level1_valuation(self):
        for h in (4, 8, 12, 16, 24, 36):
            t = t_series(1, h, 3)
            assert t.valuation == -dim_m(1, h)

    def test_t_normalized(self):
        for h in (4, 10, 12, 26):
            assert t_series(1, h, 2).coeff(-dim_m(1, h)) == 1
        for h in (4, 6, 8, 10):
            t = t_series(2, h, 2)
            assert t.coeff(t.valuation) == 1

    def test_domain_guards(self):
        with pytest.raises(ValueError):
            t_series(1, 2, 3)
        with pytest.raises(ValueError):
            t_series(2, 0, 3)
        with pytest.raises(ValueError):
            t_series(3, 8, 3)


class TestDimensions:
    def test_spec_values(self):
        assert dim_m(1, 12) == 2
        assert dim_m(1, 14) == 1
        assert dim_m(2, 8) == 3

    def test_level1_table(self):
        expected = {0: 1, 2: 0, 4: 1, 6: 1, 8: 1, 10: 1, 12: 2, 14: 1,
                    16: 2, 18: 2, 20: 2, 22: 2, 24: 3, 26: 2}
        for h, r in expected.items():
            assert dim_m(1, h) == r

    def test_level2_table(self):
        for h in range(0, 42, 2):
            assert dim_m(2, h) == h // 4 + 1

    def test_rejects_odd(self):
        with pytest.raises(ValueError):
            dim_m(1, 7)


class TestBases:
    def test_basis_m2_4(self):
        b = basis_m2(4, 6)
        assert len(b) == 2
        # j2 * Einf4 = Egamma2^2
        eg = level2_eisenstein(8)[0]
        assert b[1].agrees_with(eg * eg, upto=6)

    def test_basis_m2_2(self):
        b = basis_m2(2, 6)
        assert len(b) == 1
        assert b[0].agrees_with(level2_eisenstein(8)[0], upto=6)

    def test_basis_m2_valuations_triangular(self):
        for h in (4, 6, 8, 12, 20, 26, 40):
            b = basis_m2(h, 4)
            vals = sorted(s.valuation for s in b)
            assert vals == list(range(dim_m(2, h)))
            for s in b:
                assert s.valuation >= 0  # holomorphic

    def test_basis_m1_valuations_triangular(self):
        for h in (4, 12, 14, 24, 26, 36):
            b = basis_m1(h, 4)
            vals = sorted(s.valuation for s in b)
            assert vals == list(range(dim_m(1, h)))


class TestEvalExpr:
    def test_delta_inverse(self):
        s = eval_expr("Delta^-1", 5)
        assert s.valuation == -1
        assert s.coefficients(5) == [1, 24, 324, 3200, 25650]

    def test_j2_definition(self):
        assert eval_expr("Egamma2^2 * Einf4^-1", 3).agrees_with(j2(3), upto=2)

    def test_g4(self):
        assert eval_expr("G(4)", 2).coefficients(2) == [1, 240]

    def test_window_guarantee(self):
        for text, prec in [("j^3 Delta^-2", 7), ("T2(20)", 4), ("phi(3)^-5", 9)]:
            s = eval_expr(text, prec)
            assert s.window >= prec

    def test_accepts_parsed_expr(self):
        from qgap.exprs import parse_expr

        e = parse_expr("Delta^-2")
        assert eval_expr(e, 3).coeff(0) == 1224


class TestIdentities:
    def test_all_pass_at_200(self):
        for name, ok in identity_checks(200):
            assert ok, name
