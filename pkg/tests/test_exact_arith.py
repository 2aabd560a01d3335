import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eqehrhart.exact_arith import (CyclotomicValue, IntPolynomial, PoleError, RationalFunction,
                                   cyclotomic_polynomial, poly_series_quotient,
                                   rational_function_eval_at_one)

T = IntPolynomial([0, 1])
ONE_MINUS_T = IntPolynomial([1, -1])


def test_series_of_inverse_square():
    assert poly_series_quotient(IntPolynomial([1]), ONE_MINUS_T ** 2, 4) == [1, 2, 3, 4]


def test_series_of_cube_dilates():
    assert poly_series_quotient(IntPolynomial([1, 1, 1, 1]), ONE_MINUS_T ** 4, 3) == [1, 5, 15]


def test_series_of_zero_numerator():
    assert poly_series_quotient(IntPolynomial(), ONE_MINUS_T, 5) == [0] * 5


def test_series_rejects_zero_constant_term():
    with pytest.raises(ZeroDivisionError):
        poly_series_quotient(IntPolynomial([1]), T, 3)


def test_eval_at_one_after_cancellation():
    f = RationalFunction.from_factored(IntPolynomial([1, 0, -1]), [(1, 1)])
    assert f.is_polynomial() and rational_function_eval_at_one(f) == 2


def test_eval_at_one_with_one_plus_t():
    f = RationalFunction(IntPolynomial([1, 3, 8, 3, 1]), extra=IntPolynomial([1, 1]))
    assert f.eval_at_one() == 8


def test_eval_at_one_pole():
    f = RationalFunction.from_factored(ONE_MINUS_T, [(1, 2)])
    with pytest.raises(PoleError):
        f.eval_at_one()


def test_cyclotomic_examples():
    z6 = CyclotomicValue.zeta(6)
    assert z6 + CyclotomicValue.zeta(6, 5) == CyclotomicValue.rational(1)
    i = CyclotomicValue.zeta(4)
    assert i * i == CyclotomicValue.rational(-1)
    assert CyclotomicValue.zeta(3).conjugate() == CyclotomicValue.zeta(3, 2)


def test_cyclotomic_mixed_orders_lift():
    assert CyclotomicValue.zeta(2) == CyclotomicValue.rational(-1)
    assert CyclotomicValue.zeta(3) * CyclotomicValue.zeta(6, 2) == CyclotomicValue.zeta(3, 2)
    assert CyclotomicValue.zeta(12, 3) == CyclotomicValue.zeta(4)


def test_cyclotomic_polynomial_small():
    assert cyclotomic_polynomial(1) == IntPolynomial([-1, 1])
    assert cyclotomic_polynomial(6) == IntPolynomial([1, -1, 1])
    assert cyclotomic_polynomial(12) == IntPolynomial([1, 0, -1, 0, 1])


def test_canonical_form_cancels_cyclotomic_factors():
    # (1 + t)(1 - t) / (1 - t^2)(1 - t) = 1/(1 - t)
    num = IntPolynomial([1, 1]) * ONE_MINUS_T
    f = RationalFunction.from_factored(num, [(2, 1), (1, 1)])
    assert f == RationalFunction.from_factored(IntPolynomial([1]), [(1, 1)])
    assert f.render() == "1/(1 - t)"


def test_reciprocal():
    f = RationalFunction.from_factored(IntPolynomial([1, 1]), [(1, 3)])
    g = f.reciprocal(3)
    assert g == RationalFunction.from_factored(IntPolynomial([0, 0, 0, 0, 0, -1, -1]), [(1, 3)])
    assert RationalFunction(IntPolynomial([1, 4, 1])).reciprocal_equals(2)


small_ints = st.integers(min_value=-6, max_value=6)


@settings(max_examples=60, deadline=None)
@given(st.lists(small_ints, min_size=1, max_size=6),
       st.lists(st.tuples(st.integers(1, 4), st.integers(1, 3)), max_size=3))
def test_series_round_trip(num, powers):
    f = RationalFunction.from_factored(IntPolynomial(num), powers)
    k = max(f.numerator.degree, 0) + 5
    coeffs = f.series(k)
    back = IntPolynomial(coeffs) * f.denominator()
    assert [back[i] for i in range(k)] == [f.numerator[i] for i in range(k)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12]),
       st.lists(st.tuples(st.integers(0, 11), st.integers(-3, 3)), min_size=1, max_size=4),
       st.lists(st.tuples(st.integers(0, 11), st.integers(-3, 3)), min_size=1, max_size=4))
def test_cyclotomic_matches_complex_evaluation(n, a, b):
    def build(terms):
        v = CyclotomicValue.rational(0, n)
        z = 0
        for k, c in terms:
            v = v + CyclotomicValue.zeta(n, k) * CyclotomicValue.rational(c)
            z += c * cmath.exp(2j * cmath.pi * k / n)
        return v, z

    x, zx = build(a)
    y, zy = build(b)
    assert abs((x * y).to_complex() - zx * zy) < 1e-9
    assert abs((x + y).to_complex() - (zx + zy)) < 1e-9
    assert abs(x.conjugate().to_complex() - zx.conjugate()) < 1e-9
    assert (x - x).is_zero()


def test_rational_coordinates_are_exact():
    half = CyclotomicValue.rational(Fraction(1, 2), 4)
    assert (half + half).as_rational() == 1
