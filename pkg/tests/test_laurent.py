import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qchar.laurent import (ONE, V, ZERO, IntPoly, LaurentPoly, NonExactDivision, cyclotomic, divides,
                           divisors, exact_div, mod_cyclotomic, qbinom, qfact, qint)

from .strategies import laurent, nonzero_laurent

P = LaurentPoly.parse


def at(p: LaurentPoly, x: Fraction) -> Fraction:
    return sum(Fraction(c) * x**e for e, c in p.items())


def qint_value(n: int, x: Fraction) -> Fraction:
    return (x**n - x**-n) / (x - 1 / x)


def qbinom_value(n: int, r: int, x: Fraction) -> Fraction:
    out = Fraction(1)
    for i in range(r):
        out *= qint_value(n - i, x) / qint_value(i + 1, x)
    return out


SAMPLE_POINTS = [Fraction(2), Fraction(3, 2), Fraction(-5, 3)]


def cyclotomic_numeric(l: int) -> list[int]:
    coeffs = [complex(1)]
    for k in range(1, l + 1):
        if math.gcd(k, l) == 1:
            z = cmath.exp(2j * cmath.pi * k / l)
            coeffs = [a - z * b for a, b in zip([0] + coeffs, coeffs + [0])]
    return [round(c.real) for c in coeffs]


class TestLaurentPoly:
    def test_canonical_sparse(self):
        p = LaurentPoly({0: 0, 2: 3, -1: 0})
        assert p.coeffs == {2: 3}
        assert (V - V).coeffs == {}
        assert ZERO == 0 and ONE == 1

    def test_render_order(self):
        assert str(P("v^-2 + 1 + v^2")) == "v^2 + 1 + v^-2"
        assert str(ZERO) == "0"
        assert str(-V + 3) == "-v + 3"
        assert str(LaurentPoly({1: 2, -3: -4})) == "2*v - 4*v^-3"

    @given(laurent)
    def test_parse_roundtrip(self, p):
        assert P(str(p)) == p

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            P("v^^2")

    @given(laurent, laurent, laurent)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == ZERO
        assert a * ONE == a

    @given(laurent, laurent)
    def test_multiplication_matches_evaluation(self, a, b):
        x = Fraction(3, 2)
        assert at(a * b, x) == at(a, x) * at(b, x)

    @given(laurent)
    def test_bar_is_involution(self, p):
        assert p.bar().bar() == p

    def test_hashable(self):
        assert len({P("v + 1"), P("1 + v"), P("v")}) == 2


class TestQuantumNumbers:
    def test_qint_examples(self):
        assert qint(0, 1) == ZERO
        assert qint(3, 1) == P("v^2 + 1 + v^-2")
        assert qint(-2, 1) == P("-v - v^-1")
        assert qint(2, 3) == P("v^3 + v^-3")

    def test_qfact_examples(self):
        assert qfact(0, 1) == ONE
        assert qfact(2, 1) == V + V**-1
        assert qfact(3, 1) == (V + V**-1) * P("v^2 + 1 + v^-2")

    def test_qbinom_examples(self):
        assert qbinom(5, 0, 1) == ONE
        assert qbinom(2, 1, 1) == V + V**-1
        assert qbinom(4, 2, 1) == P("v^4 + v^2 + 2 + v^-2 + v^-4")
        assert qbinom(-1, 2, 1) == ONE

    @pytest.mark.parametrize("n", range(-12, 13))
    def test_qint_against_closed_form(self, n):
        for x in SAMPLE_POINTS:
            assert at(qint(n), x) == qint_value(n, x)

    def test_qint_at_one_is_n(self):
        assert all(qint(n).value_at_one() == n for n in range(-10, 11))

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_qbinom_against_ratio(self, d):
        for n in range(-10, 11):
            for r in range(7):
                num = ONE
                for i in range(r):
                    num = num * qint(n - i, d)
                assert qbinom(n, r, d) == exact_div(num, qfact(r, d))
                x = Fraction(3, 2)
                assert at(qbinom(n, r, d), x) == qbinom_value(n, r, x**d)

    @given(st.integers(-20, 20), st.integers(-20, 20), st.integers(0, 10))
    def test_product_identity(self, a, b, c):
        assert qint(a) * qint(b) == qint(a - c) * qint(b - c) + qint(a + b - c) * qint(c)

    @given(st.integers(-15, 15), st.integers(0, 8))
    def test_qbinom_bar_invariant(self, n, r):
        assert qbinom(n, r).bar() == qbinom(n, r)


class TestExactDivision:
    def test_examples(self):
        assert exact_div(P("v^2 - v^-2"), V - V**-1) == V + V**-1
        x = P("3*v^4 - v^-2 + 7")
        assert exact_div(x, ONE) == x
        with pytest.raises(NonExactDivision):
            exact_div(V + 1, V - 1)

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            exact_div(ONE, ZERO)

    @given(laurent, nonzero_laurent)
    def test_divides_products(self, a, b):
        assert exact_div(a * b, b) == a
        assert divides(b, a * b)

    @given(nonzero_laurent, st.integers(-5, 5))
    def test_units(self, b, k):
        unit = LaurentPoly.monomial(k, -1)
        assert exact_div(b, unit) * unit == b


class TestCyclotomic:
    def test_examples(self):
        assert cyclotomic(1).to_laurent() == V - 1
        assert cyclotomic(3).to_laurent() == P("v^2 + v + 1")
        assert cyclotomic(6).to_laurent() == P("v^2 - v + 1")

    @pytest.mark.parametrize("l", range(1, 31))
    def test_against_numeric_roots(self, l):
        assert list(cyclotomic(l).coeffs) == cyclotomic_numeric(l)
        assert cyclotomic(l).degree == sum(math.gcd(k, l) == 1 for k in range(1, l + 1))

    def test_product_over_divisors(self):
        for n in range(1, 61):
            prod = ONE
            for d in divisors(n):
                prod = prod * cyclotomic(d).to_laurent()
            assert prod == LaurentPoly({n: 1, 0: -1})

    def test_int_poly(self):
        assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
        assert IntPoly([]).is_zero() and IntPoly([0]) == 0
        with pytest.raises(ValueError):
            IntPoly.from_laurent(V**-1)


class TestModCyclotomic:
    def test_examples(self):
        assert mod_cyclotomic(V**3, 3) == IntPoly([1])
        assert mod_cyclotomic(qint(4), 4).is_zero()
        assert mod_cyclotomic(V**-1, 5) == IntPoly([-1, -1, -1, -1])

    @given(laurent, st.integers(1, 12))
    def test_canonical_and_congruent(self, a, l):
        r = mod_cyclotomic(a, l)
        assert r.degree < cyclotomic(l).degree
        # a - r must be a multiple of sigma_l
        assert divides(cyclotomic(l).to_laurent(), a - r.to_laurent())

    @given(laurent, laurent, st.integers(1, 12))
    def test_multiplicative(self, a, b, l):
        lhs = mod_cyclotomic(a * b, l)
        rhs = mod_cyclotomic(mod_cyclotomic(a, l).to_laurent() * mod_cyclotomic(b, l).to_laurent(), l)
        assert lhs == rhs

    @given(laurent, st.integers(3, 12))
    def test_matches_evaluation_at_primitive_root(self, a, l):
        z = cmath.exp(2j * cmath.pi / l)
        want = sum(c * z**e for e, c in a.items())
        got = sum(c * z**e for e, c in enumerate(mod_cyclotomic(a, l).coeffs))
        assert abs(want - got) < 1e-6 * (1 + sum(abs(c) for _, c in a.items()))

    def test_quantum_integer_factorization(self):
        # sigma_l | [n] exactly when l >= 3 and l | 2n
        for n in range(1, 25):
            for l in range(3, 30):
                assert mod_cyclotomic(qint(n), l).is_zero() == ((2 * n) % l == 0)
