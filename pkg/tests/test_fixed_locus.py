from fractions import Fraction

import pytest

from eqehrhart.fixed_locus import (NotInvariant, check_invariant, fixed_polytope,
                                   fixed_subspace_dimension)
from eqehrhart.gallery import cycle_type, hexagon_Z6, hypercube_instance, induced_permutation, pip_family
from eqehrhart.lattice_group import AffineLatticeAutomorphism as A
from eqehrhart.polytope import RationalPolytope

SQUARE = RationalPolytope([(0, 0), (1, 0), (0, 1), (1, 1)])


def test_identity_fixes_everything():
    rec = fixed_polytope(SQUARE, A.identity(2))
    assert rec.polytope.vertices == SQUARE.vertices and rec.fixed_dim == 2


def test_fixed_subspace_dimensions():
    assert fixed_subspace_dimension(A.identity(3)) == 3
    assert fixed_subspace_dimension(A([[-1, 0], [0, 1]], [-1, 0])) == 1
    assert fixed_subspace_dimension(A([[0, 1], [-1, 1]])) == 0


def test_reflection_of_square():
    tau = A([[-1, 0], [0, 1]], [-1, 0])
    rec = fixed_polytope(SQUARE, tau)
    assert sorted(rec.polytope.vertices) == [(Fraction(1, 2), 0), (Fraction(1, 2), 1)]
    assert rec.denominator == 2 and rec.index == 2 and not rec.is_lattice()


def test_not_invariant():
    with pytest.raises(NotInvariant) as info:
        check_invariant(SQUARE, A([[0, 1], [-1, 1]]))
    assert info.value.vertex is not None


@pytest.mark.parametrize("d", [2, 3, 4])
def test_hypercube_fixed_polytopes_are_cubes(d):
    inst = hypercube_instance(d, "S")
    G = inst.group
    corners = [v for v in inst.P.vertices]
    for c in range(G.num_classes):
        g = G.representative(c)
        rec = inst.fixed[c]
        r = len(cycle_type(induced_permutation(g, [tuple(int(i == j) for j in range(d))
                                                   for i in range(d)])))
        assert rec.dim == r and rec.polytope.num_vertices == 2 ** r and rec.is_lattice()
    assert len(corners) == 2 ** d


@pytest.mark.parametrize("n", [2, 3])
def test_cycle_on_reflexive_simplex(n):
    ex = pip_family(n)
    assert ex.fixed.denominator() == n and ex.fixed.dim == n and ex.fixed.is_simplex()


def test_fixed_invariants_on_hexagon():
    inst = hexagon_Z6()
    G = inst.group
    for c in range(G.num_classes):
        rec = inst.fixed[c]
        order = G.element_order(G.representatives[c])
        assert rec.dim == rec.fixed_dim
        assert order % rec.index == 0
        assert all((order * x).denominator == 1 for v in rec.polytope.vertices for x in v)
