from fractions import Fraction
from math import comb

import pytest

from eqehrhart.equivariant import (EquivariantInstance, NotASimplex, box_points_hstar, chi_mP,
                                   chi_star_mP, criteria_consistent, criterion_all_fixed_lattice,
                                   criterion_bad_element, criterion_face_fixed_points,
                                   equivariant_hstar, equivariant_reciprocity_check,
                                   fixed_route_cross_check, free_sum_identity_check,
                                   leading_coefficients, orbit_quasipolynomials,
                                   palindrome_reflexive_check, phi_at_one, product_instance)
from eqehrhart.exact_arith import CyclotomicValue, IntPolynomial, RationalFunction
from eqehrhart.fixed_locus import NotInvariant
from eqehrhart.gallery import (bad_reflexive_Z2, bad_square_Z2, cross_family, hexagon_Z6,
                               hypercube_instance, interval_instance, standard_reflexive_simplex)
from eqehrhart.lattice_group import AffineLatticeAutomorphism as A


def values(cf):
    return [v.as_rational() for v in cf.values]


def trivial(verts):
    return EquivariantInstance(verts, [A.identity(len(verts[0]))])


def sym_simplex(n):
    """Standard simplex conv{e_1..e_n} in Z^n under coordinate permutations."""
    verts = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    swap = [[int(j == (1 - i if i < 2 else i)) for j in range(n)] for i in range(n)]
    cycle = [[int(j == (i - 1) % n) for j in range(n)] for i in range(n)]
    return EquivariantInstance(verts, [A(swap), A(cycle)])


def test_chi_of_square_under_swap():
    inst = hypercube_instance(2, "S")
    assert values(chi_mP(inst, 3)) == [16, 4]
    assert chi_mP(inst, 0) == inst.group.trivial_character()
    assert chi_mP(inst, 3, route="enumerate") == chi_mP(inst, 3)


def test_chi_of_hexagon():
    inst = hexagon_Z6()
    vals = values(chi_mP(inst, 1))
    assert vals[0] == 7 and all(v == 1 for v in vals[1:])
    assert values(chi_star_mP(inst, 1)) == [1] * 6


def test_not_invariant_instance():
    with pytest.raises(NotInvariant):
        EquivariantInstance([(0, 0), (1, 0), (0, 1), (1, 1)], [A([[0, 1], [-1, 1]])])


def test_hexagon_hstar():
    inst = hexagon_Z6()
    H = equivariant_hstar(inst)
    assert H.is_polynomial and H.degree == 2 and H.effective
    g = inst.group.class_of[inst.group.index[inst.expected["generator"]]]
    assert H.per_class[g] == RationalFunction(IntPolynomial([1, -1, 1]))
    assert values(H.coefficients[0]) == [1] * 6


def test_square_under_signed_permutations_is_not_polynomial():
    inst = hypercube_instance(2, "B")
    H = equivariant_hstar(inst)
    assert not H.is_polynomial
    assert H.per_class == inst.expected["phi_breakdown"]
    assert any(f.render() == "(1 + t^2)/(1 + t)" for f in H.per_class)


def test_trivial_group_gives_hstar():
    inst = trivial([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 3)])
    H = equivariant_hstar(inst)
    assert H.per_class == [RationalFunction(inst.hstar_ordinary)]
    assert inst.hstar_ordinary == IntPolynomial([1, 0, 2])


def test_phi_at_one():
    inst = hexagon_Z6()
    res = phi_at_one(inst)
    vals = values(res.closed_form)
    assert vals[0] == 6 and sorted(vals[1:]) == [1, 1, 3, 3, 4]
    g = inst.group.class_of[inst.group.index[inst.expected["generator"]]]
    assert vals[g] == 1 and res.integral and res.nonnegative
    bad = phi_at_one(bad_reflexive_Z2())
    assert values(bad.closed_form) == [12, 4]
    square = trivial([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert values(phi_at_one(square).closed_form) == [2]


@pytest.mark.parametrize("make", [hexagon_Z6, lambda: hypercube_instance(3, "S"),
                                  lambda: hypercube_instance(2, "B"), bad_reflexive_Z2])
def test_reciprocity(make):
    inst = make()
    assert equivariant_reciprocity_check(inst).ok
    assert fixed_route_cross_check(inst).ok


def test_reciprocity_hexagon_half_turn_by_hand():
    inst = hexagon_Z6()
    half = inst.group.class_of[inst.group.index[A([[-1, 0], [0, -1]])]]
    assert inst.quasi_polynomials[half](-1) == 1
    assert chi_star_mP(inst, 1)[half].as_rational() == 1


def test_cube_reciprocity_at_two():
    inst = hypercube_instance(3, "S")
    d = inst.d
    star = chi_star_mP(inst, 2)
    for c in range(inst.num_classes):
        lhs = (-1) ** d * inst.quasi_polynomials[c](-2)
        assert lhs == star[c].as_rational() * inst.det_char[c].as_rational()


def test_leading_coefficients_of_square():
    lc = leading_coefficients(hypercube_instance(2, "S"))
    assert lc.ok and values(lc.top) == [1, 0]
    assert values(lc.second[0]) == [2, 1] and values(lc.second[1]) == [2, 1]


def test_leading_coefficients_with_fixed_point_free_reflection():
    inst = bad_square_Z2()
    lc = leading_coefficients(inst)
    assert lc.ok
    assert values(lc.second[0])[1] == 1 and values(lc.second[1])[1] == 0


def test_orbit_counts_are_partitions():
    inst = sym_simplex(3)
    orb = orbit_quasipolynomials(inst, horizon=4)
    assert orb.ok

    def partitions_at_most(m, parts):
        if m == 0:
            return 1
        if parts == 0:
            return 0
        return sum(partitions_at_most(m - k * parts, parts - 1) for k in range(m // parts + 1))

    assert all(orb.orbits(m) == partitions_at_most(m, 3) for m in range(11))


def test_orbit_counts_of_hexagon():
    orb = orbit_quasipolynomials(hexagon_Z6())
    assert orb.ok and orb.orbits(0) == 1 and orb.orbits(1) == 2


def test_orbits_for_trivial_group():
    inst = trivial([(0, 0), (2, 0), (0, 1)])
    orb = orbit_quasipolynomials(inst)
    assert orb.orbits == inst.quasi_polynomials[0]


def test_box_points():
    inst = standard_reflexive_simplex(2)
    assert box_points_hstar(inst).per_class == equivariant_hstar(inst).per_class
    assert box_points_hstar(inst).per_class[0] == RationalFunction(IntPolynomial([1, 1, 1, 1]))
    uni = trivial([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert box_points_hstar(uni).per_class == [RationalFunction(IntPolynomial([1]))]
    sym = sym_simplex(4)
    assert all(f == RationalFunction(IntPolynomial([1])) for f in box_points_hstar(sym).per_class)
    with pytest.raises(NotASimplex):
        box_points_hstar(hexagon_Z6())


def test_criteria():
    hexagon = hexagon_Z6()
    a, b, c = (criterion_all_fixed_lattice(hexagon), criterion_bad_element(hexagon),
               criterion_face_fixed_points(hexagon))
    assert a.applies and not b.applies and c.applies and criteria_consistent(a, b, c)
    square = bad_square_Z2()
    a, b, c = (criterion_all_fixed_lattice(square), criterion_bad_element(square),
               criterion_face_fixed_points(square))
    assert not a.applies and b.applies and b.witness == 1 and not c.applies
    assert criteria_consistent(a, b, c)
    cs = cross_family(0, 3)
    assert criterion_face_fixed_points(cs).applies
    triv = trivial([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 3)])
    assert criterion_all_fixed_lattice(triv).applies


def test_pyramid_keeps_phi():
    base = equivariant_hstar(bad_square_Z2())
    pyr = equivariant_hstar(bad_square_Z2(pyramid=True))
    assert base.per_class == pyr.per_class and not pyr.is_polynomial
    # no element of the pyramid satisfies the index bound, yet phi is not a polynomial
    assert not criterion_bad_element(bad_square_Z2(pyramid=True)).applies


def test_free_sums():
    assert free_sum_identity_check(cross_family(1, 2), interval_instance()).ok
    line = EquivariantInstance([(-1,), (1,)], [A.identity(1)])
    assert free_sum_identity_check(line, line).ok
    S = product_instance(line, line, "free_sum")
    assert S.hstar_ordinary == IntPolynomial([1, 2, 1])


def test_palindrome_conditions():
    rep = palindrome_reflexive_check(hexagon_Z6())
    assert rep.agree and all(rep.conditions.values()) and rep.codegree == 1
    rep = palindrome_reflexive_check(trivial([(0, 0), (1, 0), (0, 1), (1, 1)]))
    assert rep.agree and all(rep.conditions.values()) and rep.codegree == 2
    # h* = 1 + t is palindromic: twice this triangle is a translate of a reflexive one
    rep = palindrome_reflexive_check(trivial([(0, 0), (1, 0), (0, 2)]))
    assert rep.agree and all(rep.conditions.values())
    rep = palindrome_reflexive_check(trivial([(0, 0), (1, 0), (0, 3)]))
    assert rep.agree and not any(rep.conditions.values())


def test_threads_do_not_change_results(monkeypatch):
    serial = equivariant_hstar(hypercube_instance(3, "S")).per_class
    monkeypatch.setenv("EQEHRHART_THREADS", "4")
    assert equivariant_hstar(hypercube_instance(3, "S")).per_class == serial


def test_non_full_dimensional_instance_matches_reduced_one():
    lifted = EquivariantInstance([(1, 0, 0), (0, 1, 0), (0, 0, 1)],
                                 [A([[0, 0, 1], [1, 0, 0], [0, 1, 0]])])
    assert lifted.d == 2 and lifted.group.order == 3
    assert equivariant_hstar(lifted).is_polynomial
    assert lifted.hstar_ordinary == IntPolynomial([1])
