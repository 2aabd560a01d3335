from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import pytest

from eqehrhart.ehrhart import (QuasiPolynomial, ehrhart_series, eulerian_polynomial,
                               hstar_data, quasi_polynomial, reciprocity_check)
from eqehrhart.exact_arith import IntPolynomial
from eqehrhart.gallery import bad_reflexive_Z2, kv_hstar, pip_family
from eqehrhart.polytope import RationalPolytope

SQUARE = RationalPolytope([(0, 0), (1, 0), (0, 1), (1, 1)])
HEXAGON = RationalPolytope([(1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1)])
TRIANGLE = RationalPolytope([(0, 0), (1, 0), (0, 1)])


def test_square_series():
    S = ehrhart_series(SQUARE)
    assert S.period == 1 and S.hstar() == IntPolynomial([1, 1])
    assert S.rational_function().render() == "(1 + t)/(1 - 3t + 3t^2 - t^3)"


def test_point_series():
    S = ehrhart_series(RationalPolytope([(0, 0)]))
    assert S.hstar() == IntPolynomial([1])
    assert S.rational_function().render() == "1/(1 - t)"


def test_fixed_polytope_of_bad_reflexive_example():
    inst = bad_reflexive_Z2()
    G = inst.group
    c = next(c for c in range(G.num_classes) if c != 0)
    S = inst.series[c]
    assert S.period == 2 and S.dim == 2
    assert S.numerator == IntPolynomial([1, 1]) * IntPolynomial([1, 0, 6, 0, 1])


def test_hypercube_quasi_polynomial():
    for d in (1, 2, 3):
        cube = RationalPolytope([tuple((k >> i) & 1 for i in range(d)) for k in range(2 ** d)])
        qp = quasi_polynomial(cube)
        assert qp.period == 1
        assert all(qp(m) == (m + 1) ** d for m in range(8))


def test_half_segment_period_two():
    qp = quasi_polynomial(RationalPolytope([(0,), (Fraction(1, 2),)]))
    assert qp.period == 2
    assert qp.constituents[0] == (1, Fraction(1, 2))
    assert qp.constituents[1] == (Fraction(1, 2), Fraction(1, 2))


@pytest.mark.parametrize("n", [2, 3])
def test_pip_family_counts(n):
    ex = pip_family(n)
    qp = quasi_polynomial(ex.fixed)
    assert qp.period == 1 and ex.fixed.denominator() == n
    assert all(qp(m) == comb(m + n, n) + comb(m, n) for m in range(21))


def test_quasi_polynomial_minimal_period():
    q = QuasiPolynomial([[1, 1], [1, 1], [1, 1]])
    assert q.minimal().period == 1 and q.is_polynomial()
    assert q == QuasiPolynomial([[1, 1]])


def test_reciprocity():
    for P in (SQUARE, HEXAGON, TRIANGLE, RationalPolytope([(0,), (Fraction(1, 2),)])):
        assert reciprocity_check(P) == (True, None)
    qp = quasi_polynomial(SQUARE)
    assert qp(-1) == 0
    assert quasi_polynomial(HEXAGON)(-1) == 1
    tri = quasi_polynomial(TRIANGLE)
    assert tri(-2) == 0 and tri(-3) == 1


def test_eulerian_polynomials():
    assert eulerian_polynomial(1) == IntPolynomial([1])
    assert eulerian_polynomial(2) == IntPolynomial([1, 1])
    assert eulerian_polynomial(4) == IntPolynomial([1, 11, 11, 1])
    for d in range(1, 6):
        counts = [0] * d
        for p in permutations(range(d)):
            counts[sum(p[i] > p[i + 1] for i in range(d - 1))] += 1
        assert eulerian_polynomial(d) == IntPolynomial(counts)


def test_hstar_data_invariants():
    for P in (SQUARE, HEXAGON, TRIANGLE, RationalPolytope([(0, 0, 0), (1, 0, 0), (0, 1, 0),
                                                         (1, 1, 3)])):
        data = hstar_data(P)
        h = [data.hstar[i] for i in range(P.dim + 1)]
        assert h[0] == 1 and all(x >= 0 for x in h)
        assert h[1] == P.count_lattice_points(1) - P.dim - 1
        assert h[P.dim] == P.count_lattice_points(1, interior=True)
        assert 0 <= h[P.dim] <= h[1]
        assert sum(h) == factorial(P.dim) * P.normalized_volume()
        assert data.hstar[data.degree] == P.count_lattice_points(data.codegree, interior=True)


@pytest.mark.parametrize("k", [1, 2])
def test_hstar_sum_of_cross_polytopes(k):
    assert sum(kv_hstar(k).coeffs) == (2 * k + 1) * comb(2 * k, k)
