from math import comb

import pytest

from eqehrhart.ehrhart import eulerian_polynomial
from eqehrhart.equivariant import equivariant_hstar
from eqehrhart.exact_arith import IntPolynomial, RationalFunction
from eqehrhart.gallery import (GALLERY, bad_reflexive_Z2, centrally_symmetric_hstar,
                               character_degree, cross_family, cycle_type, gallery_instance,
                               hypercube_char_formula, hypercube_instance, marked_tableaux,
                               marked_tableaux_polynomial, partition_label, partitions,
                               pascal_partial_sums, pip_family, symmetric_character)
from eqehrhart.lattice_group import character_table


def test_partitions_and_labels():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partition_label((2, 1)) == "(2,1)"
    assert cycle_type([1, 0, 2]) == (2, 1)


def test_murnaghan_nakayama():
    assert [symmetric_character((2, 1), mu) for mu in [(1, 1, 1), (2, 1), (3,)]] == [2, 0, -1]
    assert [character_degree(lam) for lam in partitions(4)] == [1, 3, 2, 3, 1]
    assert sum(character_degree(lam) ** 2 for lam in partitions(5)) == 120


@pytest.mark.parametrize("d", [2, 3, 4])
def test_symmetric_table_agrees_with_generic_table(d):
    inst = hypercube_instance(d, "S")
    generic = character_table(inst.group)
    assert {tuple(ch.values) for ch in inst.table} == {tuple(ch.values) for ch in generic}


def test_marked_tableaux_examples():
    assert marked_tableaux_polynomial((2,)) == IntPolynomial([1, 1])
    assert sorted(t.index for t in marked_tableaux((2,))) == [0, 1]
    assert marked_tableaux_polynomial((2, 1)) == IntPolynomial([0, 1])
    for d in range(2, 6):
        assert marked_tableaux_polynomial((1,) * d) == IntPolynomial()


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_hook_polynomial(d):
    want = IntPolynomial.monomial(1, d - 2) * IntPolynomial([1, 1]) ** (d - 3)
    assert marked_tableaux_polynomial((d - 1, 1)) == want


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_eulerian_refinement(d):
    total = IntPolynomial()
    for lam in partitions(d):
        total = total + marked_tableaux_polynomial(lam) * character_degree(lam)
    assert total == eulerian_polynomial(d)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_trivial_isotypic_component_of_cube(d):
    assert marked_tableaux_polynomial((d,)) == IntPolynomial([1, 1]) ** (d - 1)


def test_marked_tableau_rules():
    for lam in partitions(4):
        for mt in marked_tableaux(lam):
            T = mt.entries
            assert all(row[i] <= row[i + 1] for row in T for i in range(len(row) - 1))
            assert all(T[r][c] < T[r + 1][c] for r in range(len(T) - 1) for c in range(len(T[r + 1])))
            counts = {}
            for row in T:
                for v in row:
                    counts[v] = counts.get(v, 0) + 1
            assert all(1 <= f <= counts[j] - 1 for j, f in mt.marking)


def test_cube_product_formula():
    assert hypercube_char_formula(2, (1, 1)) == IntPolynomial([1, 1])
    assert hypercube_char_formula(3, (2, 1)) == IntPolynomial([1, 2, 1])
    assert hypercube_char_formula(3, (3,)) == IntPolynomial([1, 1, 1])


def test_cube_phi_at_transposition():
    inst = hypercube_instance(3, "S")
    H = equivariant_hstar(inst)
    sizes = inst.group.class_sizes
    c = sizes.index(3)
    assert H.per_class[c] == RationalFunction(IntPolynomial([1, 2, 1]))


def test_pascal_partial_sums():
    assert pascal_partial_sums(4, 2) == 16
    assert pascal_partial_sums(5, 2) == 22
    for d in range(11):
        assert pascal_partial_sums(d, 0) == 1
        for i in range(d + 1):
            pascal_partial_sums(d, i)  # raises when the three routes disagree


def test_centrally_symmetric_closed_forms():
    assert centrally_symmetric_hstar(1, 2) == IntPolynomial([1, 4, 1])
    assert centrally_symmetric_hstar(2, 4) == IntPolynomial([1, 6, 16, 6, 1])
    assert cross_family(1, 2).hstar_ordinary == IntPolynomial([1, 4, 1])


def test_bad_reflexive_data():
    inst = bad_reflexive_Z2()
    assert inst.hstar_ordinary == IntPolynomial([1, 5, 5, 1])
    a, b = inst.expected["components"]
    H = equivariant_hstar(inst)
    assert H.per_class == [a + b, a - b]


@pytest.mark.parametrize("n", [2, 3])
def test_pip_family(n):
    ex = pip_family(n)
    assert all(ex.fixed.count_lattice_points(m) == comb(m + n, n) + comb(m, n) for m in range(8))


def test_registry():
    assert set(GALLERY) == {"hexagon", "bad_square", "bad_reflexive", "hypercube", "simplex", "cross"}
    inst = gallery_instance("hypercube", {"d": "2", "group": "B"})
    assert inst.group.order == 8
    with pytest.raises(KeyError):
        gallery_instance("nope")
    with pytest.raises(ValueError):
        gallery_instance("cross", {"k": "1"})
