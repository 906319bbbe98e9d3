from fractions import Fraction

import pytest

from twobridge.cfrac import EvenCF, PositiveCF, eval_cf, positive_cf, tau, type_sequence
from twobridge.errors import HypothesisViolated, WrongOrientation
from twobridge.jones import (_t_pow, boundary_coefficients, degree_and_sign,
                             f_recursive, jones_direct, jones_recursive,
                             jones_via_f, mirror, oriented_even_cf,
                             skein_constants, specialized_f_even,
                             specialized_f_positive, volume_bounds)
from twobridge.laurent import HLPoly, q_integer, specialize_y, t_power
from twobridge.snake import f_polynomial, snake_from_even
from twobridge.verify import even_lists

P = HLPoly.parse

TREFOIL = P("t^(-1) + t^(-3) - t^(-4)")
FIGURE8 = P("t^(2) - t^(1) + 1 - t^(-1) + t^(-2)")
V_2_2_m2_4 = P("t^(1) - 2 + 4*t^(-1) - 4*t^(-2) + 5*t^(-3) - 5*t^(-4)"
               " + 3*t^(-5) - 2*t^(-6) + t^(-7)")


class TestSkeinConstants:
    def test_values(self):
        eps, eps_bar, unknot, two_unknots = skein_constants()
        assert eps == P("t^(-3/2) - t^(-1/2)")
        assert eps_bar == P("t^(3/2) - t^(1/2)")
        assert unknot == HLPoly.one()
        assert two_unknots == P("-t^(1/2) - t^(-1/2)")

    def test_two_unknots_from_skein(self):
        eps, _, _, two_unknots = skein_constants()
        assert eps * two_unknots == 1 - t_power(-2)  # (1 - t^-2)/eps, exactly

    def test_bar_compatibility(self):
        eps, eps_bar, _, _ = skein_constants()
        assert eps_bar == t_power(2) * (-eps)
        assert eps.bar() == eps_bar


class TestRecursiveEngine:
    def test_trefoil(self):
        assert jones_recursive(EvenCF((-2, 2))).poly == TREFOIL

    def test_hopf_links(self):
        assert jones_recursive(EvenCF((2,))).poly == P("-t^(5/2) - t^(1/2)")
        assert jones_recursive(EvenCF((-2,))).poly == P("-t^(-1/2) - t^(-5/2)")

    def test_seven_crossings(self):
        res = jones_recursive(EvenCF((2, 2, -2, 4)))
        assert res.poly == V_2_2_m2_4
        assert res.degree == 1
        assert res.leading_sign == 1

    def test_normalization_invariant(self):
        for entries in [(2,), (-2, 2), (2, 2, -2, 4), (4, -2), (-6, 4, -2)]:
            res = jones_recursive(EvenCF(entries))
            rebuilt = res.leading_sign * _t_pow(res.degree) * res.normalized
            assert rebuilt == res.poly
            assert res.normalized.coeff(0) == 1
            assert res.normalized.degree() == 0


class TestDegreeAndSign:
    def test_examples(self):
        assert degree_and_sign(EvenCF((2, 2, -2, 4))) == (Fraction(1), 1)
        assert degree_and_sign(EvenCF((-2, 2))) == (Fraction(-1), 1)
        assert degree_and_sign(EvenCF((2,))) == (Fraction(5, 2), -1)

    def test_matches_recursive_engine(self):
        for entries in even_lists(10, max_abs=4):
            cf = EvenCF(entries)
            j, delta = degree_and_sign(cf)
            lead_exp, lead_coeff = jones_recursive(cf).poly.leading_term()
            assert (j, delta) == (lead_exp, lead_coeff), entries


def _prefix_data(entries, i):
    """Degree and leading sign of the recursion at depth i entries removed."""
    if len(entries) - i >= 1:
        poly = jones_recursive(EvenCF(entries[:len(entries) - i])).poly
    elif len(entries) - i == 0:
        poly = HLPoly.one()
    else:
        poly = P("-t^(1/2) - t^(-1/2)")
    return poly.leading_term()


class TestRecursionBookkeeping:
    """Degree and sign relations between V_m, V_(m-1), V_(m-2)."""

    def test_degree_steps(self):
        for entries in even_lists(10, max_abs=4):
            ts = [-1, *type_sequence(EvenCF(entries)).types]
            (j0, d0), (j1, d1), (j2, d2) = (_prefix_data(entries, i)
                                            for i in range(3))
            bm = abs(entries[-1])
            bm1 = abs(entries[-2]) if len(entries) >= 2 else None
            # degree of V_m against V_(m-1)
            if ts[-1] == -1:
                assert j0 == j1 - Fraction(1, 2)
            elif ts[-2] == -1:
                assert j0 == j1 + bm + Fraction(1, 2)
            else:
                assert j0 == j1 + bm - Fraction(1, 2)
            # degree of V_m against V_(m-2)
            if ts[-1] == -1:
                if ts[-2] == -1:
                    assert j0 == j2 - 1
                elif ts[-3] == -1:
                    assert j0 == j2 + bm1
                else:
                    assert j0 == j2 + bm1 - 1
            else:
                if ts[-2] == -1:
                    assert j0 == j2 + bm
                elif ts[-3] == -1:
                    assert j0 == j2 + bm + bm1
                else:
                    assert j0 == j2 + bm + bm1 - 1
            # degree never exceeds the max of the two source terms
            if ts[-1] == -1:
                hi = max(j2 - bm, j1 - Fraction(1, 2))
                assert j0 <= hi
                if j2 - bm != j1 - Fraction(1, 2):
                    assert j0 == hi
            else:
                hi = max(j2 + bm, j1 - Fraction(1, 2) + bm)
                assert j0 <= hi
                if j2 + bm != j1 - Fraction(1, 2) + bm:
                    assert j0 == hi

    def test_sign_steps(self):
        for entries in even_lists(10, max_abs=4):
            ts = [-1, *type_sequence(EvenCF(entries)).types]
            (_, d0), (_, d1), (_, d2) = (_prefix_data(entries, i)
                                         for i in range(3))
            if ts[-1] == -1:
                assert d0 == -d1
                if ts[-2] == -1:
                    assert d0 == d2
                else:
                    assert d0 == (d2 if ts[-3] == -1 else -d2)
            else:
                if ts[-2] == -1:
                    assert d0 == -d1 and d0 == d2
                else:
                    assert d0 == d1
                    assert d0 == (-d2 if ts[-3] == -1 else d2)


class TestSpecializedF:
    def test_positive_examples(self):
        assert specialized_f_positive(PositiveCF((1, 2))) == P("1 - t^(-1) - t^(-3)")
        assert specialized_f_positive(PositiveCF((2, 2))) == P(
            "1 - t^(-1) + t^(-2) - t^(-3) + t^(-4)")
        coeffs = [1, 1, 3, 4, 5, 5, 5, 4, 2, 1]
        want = HLPoly({-2 * i: c * (1 if i % 2 == 0 else -1)
                       for i, c in enumerate(coeffs)})
        assert specialized_f_positive(PositiveCF((3, 2, 4))) == want

    def test_even_examples(self):
        assert specialized_f_even(EvenCF((2, -2))) == P("1 - t^(-1) - t^(-3)")
        assert specialized_f_even(EvenCF((-2, 2))) == P("-t^(-3) + t^(-2) + 1")
        assert specialized_f_even(EvenCF((4,))) == P("1 + t^(-2) - t^(-3) + t^(-4)")
        assert specialized_f_even(EvenCF((-4,))) == P("t^(-4) + t^(-2) - t^(-1) + 1")
        assert specialized_f_even(EvenCF((4, -2))) == P(
            "1 - t^(-1) + t^(-2) - 2*t^(-3) + t^(-4) - t^(-5)")
        assert specialized_f_even(EvenCF((-4, 2))) == P(
            "-t^(-5) + t^(-4) - t^(-3) + 2*t^(-2) - t^(-1) + 1")

    def test_named_coincidences(self):
        assert specialized_f_even(EvenCF((-2, 2))) == specialized_f_positive(
            PositiveCF((3,)))
        assert specialized_f_even(EvenCF((-4,))) == specialized_f_positive(
            PositiveCF((1, 3)))
        assert specialized_f_even(EvenCF((-4, 2))) == specialized_f_positive(
            PositiveCF((1, 2, 2)))

    def test_shape(self):
        for entries in [(2, 1, 2), (3, 3), (2, 2, 2, 2), (5,)]:
            cf = PositiveCF(entries)
            F = specialized_f_positive(cf)
            assert F.coeff(0) == 1 and F.degree() == 0
            low, c = F.trailing_term()
            assert low == -(cf.d + 1)
            assert c == (1 if cf.d % 2 else -1)

    def test_reflection_identity(self):
        from twobridge.laurent import q_power
        for entries in [(2, 2), (3, 1, 2), (2, 1, 2, 3), (4, 3), (5,)]:
            cf = PositiveCF(entries)
            other = PositiveCF((1, entries[0] - 1) + entries[1:])
            lhs = specialized_f_positive(cf)
            rhs = q_power(cf.d + 1) * specialized_f_positive(other).bar()
            assert lhs == rhs


class TestFRecursive:
    def test_single_entry(self):
        assert f_recursive(EvenCF((2,))) == P("1 + t^(-2)")

    def test_examples(self):
        assert f_recursive(EvenCF((4, -2))) == specialized_f_even(EvenCF((4, -2)))
        assert f_recursive(EvenCF((2, 2, -2, 4))) == specialized_f_positive(
            PositiveCF((2, 1, 2, 3)))

    def test_orientation_guard(self):
        with pytest.raises(WrongOrientation):
            f_recursive(EvenCF((-2, 2)))

    def test_agrees_with_definition(self):
        for entries in even_lists(10, max_abs=6):
            if entries[0] < 0:
                continue
            cf = EvenCF(entries)
            assert f_recursive(cf) == specialized_f_even(cf), entries


class TestViaF:
    def test_examples(self):
        assert jones_via_f(EvenCF((-2, 2))).poly == TREFOIL
        assert jones_via_f(EvenCF((2,))).poly == P("-t^(5/2) - t^(1/2)")
        assert jones_via_f(EvenCF((2, -2))).poly == P("t^(1) + t^(3) - t^(4)")


class TestDirect:
    def test_figure_eight(self):
        assert jones_direct(PositiveCF((2, 2))).poly == FIGURE8

    def test_four_crossing_link(self):
        assert jones_direct(PositiveCF((4,))).poly == P(
            "-t^(9/2) - t^(5/2) + t^(3/2) - t^(1/2)")

    def test_twenty_crossing_link(self):
        res = jones_direct(PositiveCF((2, 3, 4, 5, 6)))
        coeffs = [1, -3, 7, -15, 27, -44, 63, -83, 101, -111, 113, -106,
                  92, -73, 54, -36, 22, -12, 6, -2, 1]
        got = [res.normalized.coeff(-e) for e in range(20, -1, -1)]
        assert got == coeffs

    def test_odd_fraction_keeps_link_orientation(self):
        # 3/1 has no even expansion; the partner 3/2 describes the mirror,
        # so the oriented expansion is the negated one and V is the trefoil.
        assert oriented_even_cf(Fraction(3, 1)).entries == (-2, 2)
        assert jones_direct(PositiveCF((3,))).poly == TREFOIL
        assert jones_direct(PositiveCF((5,))).poly == P(
            "t^(-2) + t^(-4) - t^(-5) + t^(-6) - t^(-7)")

    def test_normalized_is_generating_function(self):
        for entries in [(2, 2), (3,), (2, 1, 2, 3), (3, 2, 4)]:
            cf = PositiveCF(entries)
            assert jones_direct(cf).normalized == specialized_f_positive(cf)

    def test_agrees_with_recursion_on_link_fractions(self):
        from twobridge.cfrac import even_cf_for_link
        from twobridge.verify import positive_lists
        for entries in positive_lists(14, max_entry=9):
            cf = PositiveCF(entries)
            r = cf.value()
            if r == 1 or (r.numerator * r.denominator) % 2:
                continue
            direct = jones_direct(cf)
            recursive = jones_recursive(even_cf_for_link(r))
            assert direct.poly == recursive.poly, entries
            assert direct.normalized == specialized_f_positive(cf), entries


class TestMirror:
    def test_four_crossings(self):
        v4 = jones_direct(PositiveCF((4,)))
        assert mirror(v4).poly == jones_recursive(EvenCF((-4,))).poly

    def test_involution(self):
        res = jones_recursive(EvenCF((2, 2, -2, 4)))
        assert mirror(mirror(res)).poly == res.poly

    def test_trefoil_pair(self):
        assert mirror(jones_recursive(EvenCF((-2, 2)))).poly == P(
            "t^(1) + t^(3) - t^(4)")

    def test_entrywise_negation_mirrors(self):
        for entries in even_lists(8, max_abs=4):
            cf = EvenCF(entries)
            lhs = jones_recursive(cf.mirrored()).poly
            assert lhs == jones_recursive(cf).poly.bar(), entries


class TestBoundaryCoefficients:
    def test_examples(self):
        assert boundary_coefficients(PositiveCF((3, 2, 4))) == (1, 1, 3, 4, 2, 1)
        assert boundary_coefficients(PositiveCF((2, 3, 4, 5, 6))) == (1, 2, 6, 7, 3, 1)
        assert boundary_coefficients(PositiveCF((3, 3, 3, 3))) == (1, 2, 5, 5, 2, 1)

    def test_hypothesis_guard(self):
        with pytest.raises(HypothesisViolated):
            boundary_coefficients(PositiveCF((1, 3)))
        with pytest.raises(HypothesisViolated):
            boundary_coefficients(PositiveCF((3, 1)))


class TestVolumeBounds:
    def test_values(self):
        assert volume_bounds(PositiveCF((3, 3, 3))) == (0.35367, 30 * 1.0149 * 2)
        assert volume_bounds(PositiveCF((3, 3))) == (0.0, 30 * 1.0149)
        assert volume_bounds(PositiveCF((3, 4, 5, 3))) == (
            0.35367 * 2, 30 * 1.0149 * 3)

    def test_hypothesis_guard(self):
        with pytest.raises(HypothesisViolated):
            volume_bounds(PositiveCF((3, 2, 3)))


class TestKnotVsLinkGrid:
    def test_grid_parity(self):
        for entries in even_lists(8, max_abs=4):
            cf = EvenCF(entries)
            p = abs(eval_cf(entries).numerator)
            poly = jones_recursive(cf).poly
            is_knot = p % 2 == 1
            assert (cf.m % 2 == 0) == is_knot
            assert poly.grid_is_integer() == is_knot, entries
