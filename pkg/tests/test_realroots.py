"""Root counting, isolation, algebraic numbers, exact sign and order."""

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import _oracles
from hawaii.polys import Poly
from hawaii.realroots import (
    NEG_INF,
    POS_INF,
    AlgebraicNumber,
    cauchy_bound,
    compare,
    count_roots,
    isolate_roots,
    isolate_squarefree,
    sign_at,
    simplest_between,
    sturm_chain,
)

Z = Poly.x()


def poly_of(*coeffs):
    return Poly(coeffs)


def sqrt2() -> AlgebraicNumber:
    return AlgebraicNumber(poly_of(-2, 0, 1), Fraction(1), Fraction(2))


small_coeffs = st.integers(min_value=-30, max_value=30)
int_polys = st.lists(small_coeffs, min_size=1, max_size=8).map(
    lambda cs: Poly(cs)
).filter(lambda p: not p.is_zero)


class TestSturmChain:
    def test_variation_example(self):
        chain = sturm_chain(poly_of(-1, 0, 1))

        def var_at(x):
            signs = [p.sign_at(x) for p in chain]
            out, prev = 0, 0
            for s in signs:
                if s:
                    if prev and s != prev:
                        out += 1
                    prev = s
            return out

        assert var_at(Fraction(-2)) - var_at(Fraction(0)) == 1

    def test_no_real_roots(self):
        f = poly_of(1, 0, 1)
        assert count_roots(f) == 0
        assert count_roots(f, Fraction(-100), Fraction(100)) == 0

    def test_cubic_full_count(self):
        assert count_roots(poly_of(0, -1, 0, 1), Fraction(-2), Fraction(2)) == 3

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            sturm_chain(Poly.zero())


class TestCountRoots:
    def test_quadratic_on_line(self):
        assert count_roots(poly_of(2, 0, -2)) == 2

    def test_open_subinterval(self):
        assert count_roots(poly_of(0, -1, 0, 1), Fraction(1, 2), Fraction(2)) == 1

    def test_open_excludes_endpoints(self):
        f = poly_of(0, -1, 0, 1)  # roots -1, 0, 1
        assert count_roots(f, Fraction(0), Fraction(1)) == 0
        assert count_roots(f, Fraction(-1), Fraction(1)) == 1
        assert count_roots(f, Fraction(-2), Fraction(1)) == 2

    def test_multiplicity(self):
        f = (Z - Poly.constant(1)) ** 3 * (Z + Poly.constant(2))
        assert count_roots(f) == 2
        assert count_roots(f, with_multiplicity=True) == 4
        assert count_roots(f, Fraction(0), Fraction(5), with_multiplicity=True) == 3

    def test_half_lines(self):
        f = poly_of(0, -1, 0, 1)
        assert count_roots(f, Fraction(-1, 2), POS_INF) == 2
        assert count_roots(f, NEG_INF, Fraction(-1, 2)) == 1

    def test_malformed_range(self):
        f = poly_of(-1, 0, 1)
        with pytest.raises(ValueError):
            count_roots(f, Fraction(1), Fraction(1))
        with pytest.raises(ValueError):
            count_roots(f, Fraction(2), Fraction(1))
        with pytest.raises(ValueError):
            count_roots(f, POS_INF, NEG_INF)

    def test_constant(self):
        assert count_roots(poly_of(5)) == 0
        with pytest.raises(ValueError):
            count_roots(Poly.zero())

    @given(int_polys)
    @settings(max_examples=150, deadline=None)
    def test_against_companion_oracle(self, f):
        expected = _oracles.real_root_count(f.coeffs)
        assume(expected is not None)
        assert count_roots(f, with_multiplicity=True) == expected

    @given(int_polys)
    @settings(max_examples=80, deadline=None)
    def test_splitting_additivity(self, f):
        assume(f.degree and f.degree > 0)
        mid = Fraction(1, 3)
        assume(f.eval(mid) != 0)
        whole = count_roots(f, with_multiplicity=True)
        left = count_roots(f, NEG_INF, mid, with_multiplicity=True)
        right = count_roots(f, mid, POS_INF, with_multiplicity=True)
        assert whole == left + right


class TestIsolation:
    def test_double_zero_root(self):
        roots = isolate_roots((Z**2) * (Z**2 + Poly.constant(1)))
        assert len(roots) == 1
        x, mult = roots[0]
        assert mult == 2
        assert x.is_rational and x.value == 0

    def test_exact_rational_roots(self):
        roots = isolate_roots(Z * (Z**2 - Poly.constant(Fraction(1, 4))))
        vals = [(x.value, m) for x, m in roots]
        assert vals == [
            (Fraction(-1, 2), 1),
            (Fraction(0), 1),
            (Fraction(1, 2), 1),
        ]

    def test_nondyadic_rational_recognized(self):
        roots = isolate_roots(poly_of(-1, 3) * poly_of(-1, 7))
        assert [(x.value, m) for x, m in roots] == [
            (Fraction(1, 7), 1),
            (Fraction(1, 3), 1),
        ]

    def test_sqrt2_pair(self):
        roots = isolate_roots(poly_of(-2, 0, 1))
        assert len(roots) == 2
        neg, pos = roots.numbers()
        assert not neg.is_rational and not pos.is_rational
        assert neg.hi <= pos.lo
        p = pos.refine(Fraction(1, 10**6))
        assert abs(float(p.mid()) - 1.4142135623730951) < 1e-6
        n = neg.refine(Fraction(1, 10**6))
        assert abs(float(n.mid()) + 1.4142135623730951) < 1e-6

    def test_ordering_across_factors(self):
        f = (Z**2 - Poly.constant(2)) * (Z - Poly.constant(1)) ** 2
        roots = isolate_roots(f)
        mids = [x.mid() for x, _ in roots]
        assert mids == sorted(mids)
        assert [m for _, m in roots] == [1, 2, 1]

    @given(int_polys)
    @settings(max_examples=100, deadline=None)
    def test_isolation_matches_count(self, f):
        roots = isolate_roots(f)
        assert roots.total_multiplicity() == count_roots(f, with_multiplicity=True)
        for (a, _), (b, _) in zip(roots, roots[1:]):
            assert compare(a, b) < 0

    @given(int_polys)
    @settings(max_examples=60, deadline=None)
    def test_isolating_intervals_certify(self, f):
        for x, _ in isolate_roots(f):
            if x.is_rational:
                assert f.eval(x.value) == 0
            else:
                assert count_roots(x.minpoly, x.lo, x.hi) == 1
                assert x.minpoly.sign_at(x.lo) != 0
                assert x.minpoly.sign_at(x.hi) != 0


class TestRefine:
    def test_sqrt2(self):
        x = sqrt2().refine(Fraction(1, 1000))
        assert x.width() <= Fraction(1, 1000)
        assert x.lo < Fraction(1414214, 1000000) < x.hi + Fraction(1, 1000)
        assert x.lo <= Fraction(141422, 100000)

    def test_rational_unchanged(self):
        x = AlgebraicNumber.from_rational(Fraction(3, 7))
        assert x.refine(Fraction(1, 10**9)) is x

    def test_quartic_near_0_4547246059(self):
        # positive root of 212 z^4 - 39 z^2 - 1
        f = poly_of(-1, 0, -39, 0, 212)
        pos = [x for x in isolate_squarefree(f) if x.lo >= 0]
        assert len(pos) == 1
        b = pos[0].refine(Fraction(1, 10**10))
        target = Fraction("0.4547246059")
        assert b.lo - Fraction(1, 10**9) <= target <= b.hi + Fraction(1, 10**9)

    def test_refine_width_zero_rejected(self):
        with pytest.raises(ValueError):
            sqrt2().refine(0)


class TestSignAt:
    def test_positive_definite(self):
        f = poly_of(1, 0, 1)
        assert sign_at(f, sqrt2()) == 1
        assert sign_at(f, AlgebraicNumber.from_rational(Fraction(-5))) == 1

    def test_zero_at_own_root(self):
        assert sign_at(poly_of(-2, 0, 1), sqrt2()) == 0

    def test_negative(self):
        assert sign_at(poly_of(2, 0, -2), sqrt2()) == -1

    def test_rational_point(self):
        x = AlgebraicNumber.from_rational(Fraction(1, 2))
        assert sign_at(poly_of(-1, 0, 4), x) == 0

    @given(int_polys, int_polys)
    @settings(max_examples=60, deadline=None)
    def test_multiplicative(self, f, g):
        x = sqrt2()
        assert sign_at(f * g, x) == sign_at(f, x) * sign_at(g, x)

    def test_sign_at_shared_factor_root(self):
        # f shares the factor z^2 - 2 but is presented inside a product
        f = poly_of(-2, 0, 1) * poly_of(3, 1)
        assert sign_at(f, sqrt2()) == 0


class TestCompare:
    def test_sqrt2_vs_three_halves(self):
        assert compare(sqrt2(), AlgebraicNumber.from_rational(Fraction(3, 2))) == -1

    def test_same_number_different_presentation(self):
        a = sqrt2()
        b = AlgebraicNumber(poly_of(-4, 0, 0, 0, 1), Fraction(1), Fraction(3, 2))
        assert compare(a, b) == 0
        assert compare(b, a) == 0

    def test_roots_of_quadratic_ordered(self):
        roots = isolate_squarefree(poly_of(-1, 0, 1))
        assert [x.value for x in roots] == [Fraction(-1), Fraction(1)]

    def test_negated_pair(self):
        neg, pos = isolate_squarefree(poly_of(-2, 0, 1))
        assert compare(neg, pos) == -1
        assert compare(pos, neg) == 1
        assert compare(pos, pos) == 0

    def test_total_order_consistent_with_midpoints(self):
        xs = isolate_squarefree(poly_of(-2, 0, 1)) + [
            AlgebraicNumber.from_rational(Fraction(0)),
            AlgebraicNumber.from_rational(Fraction(7, 5)),
        ] + isolate_squarefree(poly_of(-3, 0, 1))
        refined = [x if x.is_rational else x.refine(Fraction(1, 10**9)) for x in xs]
        order = sorted(range(len(xs)), key=lambda i: refined[i].mid())
        for a, b in zip(order, order[1:]):
            assert compare(xs[a], xs[b]) == -1

    def test_close_but_distinct(self):
        a = AlgebraicNumber(poly_of(-2, 0, 10**12), Fraction(0), Fraction(1))
        b = AlgebraicNumber(poly_of(-2000001, 0, 10**18), Fraction(0), Fraction(1))
        # sqrt(2e-12) vs sqrt(2.000001e-12): equal to 9+ digits
        assert compare(a, b) == -1


class TestAlgebraicEndpoints:
    def test_algebraic_endpoint_matches_rational(self):
        f = poly_of(0, -1, 0, 1) * poly_of(-4, 1)  # roots -1, 0, 1, 4
        s = sqrt2()
        assert count_roots(f, s, POS_INF) == 1
        assert count_roots(f, NEG_INF, s) == 3
        assert count_roots(f, AlgebraicNumber.from_rational(Fraction(-1)), s) == 2

    def test_endpoint_is_a_root(self):
        f = poly_of(-2, 0, 1) * poly_of(0, 1)  # roots -sqrt2, 0, sqrt2
        s = sqrt2()
        assert count_roots(f, NEG_INF, s) == 2
        assert count_roots(f, s, POS_INF) == 0
        neg = isolate_squarefree(poly_of(-2, 0, 1))[0]
        assert count_roots(f, neg, s) == 1
        assert count_roots(f, neg, s, with_multiplicity=True) == 1

    def test_both_algebraic_with_multiplicity(self):
        f = (Z**2) * (Z**2 - Poly.constant(3))
        neg, pos = isolate_squarefree(poly_of(-2, 0, 1))
        assert count_roots(f, neg, pos, with_multiplicity=True) == 2
        assert count_roots(f, neg, pos) == 1


class TestHelpers:
    def test_cauchy_bound(self):
        f = poly_of(-6, 1, 2)
        b = cauchy_bound(f)
        for x, _ in isolate_roots(f):
            r = x.refine(Fraction(1, 100))
            assert -b < r.lo and r.hi < b

    def test_simplest_between(self):
        # closed-interval semantics: 1/2 beats 1/3 when it is attainable
        assert simplest_between(Fraction(1, 4), Fraction(1, 2)) == Fraction(1, 2)
        assert simplest_between(Fraction(1, 4), Fraction(49, 100)) == Fraction(1, 3)
        assert simplest_between(Fraction(-1, 3), Fraction(1, 7)) == 0
        assert simplest_between(Fraction(5, 2), Fraction(7, 2)) == 3
        assert simplest_between(Fraction(2, 5), Fraction(2, 5)) == Fraction(2, 5)

    @given(
        st.fractions(min_value=-8, max_value=8, max_denominator=40),
        st.fractions(min_value=-8, max_value=8, max_denominator=40),
    )
    @settings(max_examples=120, deadline=None)
    def test_simplest_is_minimal(self, a, b):
        lo, hi = min(a, b), max(a, b)
        s = simplest_between(lo, hi)
        assert lo <= s <= hi
        for den in range(1, s.denominator):
            lo_num = lo * den
            k = lo_num.numerator // lo_num.denominator
            for num in (k, k + 1):
                cand = Fraction(num, den)
                assert not (lo <= cand <= hi) or cand == s

    def test_invalid_construction(self):
        with pytest.raises(ValueError):
            # both roots of z^2 - 2 inside
            AlgebraicNumber(poly_of(-2, 0, 1), Fraction(-2), Fraction(2))
        with pytest.raises(ValueError):
            # left endpoint is a root
            AlgebraicNumber(poly_of(-4, 0, 1), Fraction(2), Fraction(3))
        with pytest.raises(ValueError):
            # not square-free
            AlgebraicNumber(poly_of(1, -2, 1), Fraction(0), Fraction(2))
        with pytest.raises(ValueError):
            # constant minpoly
            AlgebraicNumber(poly_of(7), Fraction(0), Fraction(1))

    def test_rational_point_needs_root(self):
        with pytest.raises(ValueError):
            AlgebraicNumber(poly_of(-2, 0, 1), Fraction(1), Fraction(1))
