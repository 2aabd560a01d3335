"""Acceptance criteria.  Each test records one PASS/FAIL line (with timing),
printed at the end of the module; run with ``pytest tests/test_acceptance.py``."""

import random
import time
from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb

import numpy as np
import pytest

from eqehrhart.equivariant import (EquivariantInstance, box_points_hstar, criterion_bad_element,
                                   equivariant_hstar, phi_at_one)
from eqehrhart.ehrhart import eulerian_polynomial, quasi_polynomial
from eqehrhart.exact_arith import CyclotomicValue, IntPolynomial, RationalFunction
from eqehrhart.gallery import (bad_reflexive_Z2, cross_family, cycle_type, default_gallery,
                               hexagon_Z6, hypercube_instance, induced_permutation,
                               marked_tableaux_polynomial, partition_label, partitions,
                               pascal_partial_sums, pip_family, standard_reflexive_simplex,
                               character_degree)
from eqehrhart.lattice_group import AffineLatticeAutomorphism
from eqehrhart.properties import run_property_suite

LINES: dict[int, str] = {}


@pytest.fixture(scope="module", autouse=True)
def summary(request):
    yield
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")
    write = reporter.write_line if reporter else print
    write("")
    for n in sorted(LINES):
        write(LINES[n])


class Criterion:
    """Times a criterion and records its line whether the body passes or not."""

    def __init__(self, number: int, title: str, limit: float):
        self.number, self.title, self.limit = number, title, limit
        self.notes: list[str] = []
        self.unmet: list[str] = []  # sub-items asserted by a strict xfail test instead

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        seconds = time.perf_counter() - self.start
        ok = exc_type is None and seconds < self.limit and not self.unmet
        reason = ""
        if self.unmet:
            reason = ": unmet " + "; ".join(self.unmet)
        if exc_type is not None:
            reason = f": {exc_type.__name__} {exc}".rstrip()
        elif seconds >= self.limit:
            reason = f": over the {self.limit:g} s limit"
        notes = f" [{'; '.join(self.notes)}]" if self.notes else ""
        previous = LINES.get(self.number)
        if previous is None or previous.startswith("PASS") or not ok:
            LINES[self.number] = (f"{'PASS' if ok else 'FAIL'}  criterion {self.number}: "
                                  f"{self.title} ({seconds:.2f} s){reason}{notes}")
        if exc_type is None:
            assert seconds < self.limit, f"took {seconds:.2f} s"
        return False


def rf(coeffs):
    return RationalFunction(IntPolynomial(coeffs))


def class_of(inst, g):
    return inst.group.class_of[inst.group.index[g]]


def cf_values(cf):
    return [v.as_rational() for v in cf.values]


# --------------------------------------------------------------------------


def test_hexagon_under_rotation():
    with Criterion(1, "hexagon under Z/6", 1.0):
        inst = hexagon_Z6()
        sigma = AffineLatticeAutomorphism([[0, 1], [-1, 1]])
        s = class_of(inst, sigma)
        H = equivariant_hstar(inst)
        tab = H.table
        chi = next(ch for ch in tab if ch[s] == CyclotomicValue.zeta(6, 1))
        one = inst.group.trivial_character()
        powers = [one]
        for _ in range(5):
            powers.append(powers[-1] * chi)
        assert H.is_polynomial and H.degree == 2
        assert H.coefficients[0] == one and H.coefficients[2] == one
        assert H.coefficients[1] == one + powers[2] + powers[3] + powers[4]
        assert H.per_class[s] == rf([1, -1, 1])
        at_one = phi_at_one(inst, H).closed_form
        want = one * 3 + powers[2] + powers[3] + powers[4]
        assert [v.as_rational() for v in at_one.values] == \
            [v.as_rational() for v in want.values]


def test_square_under_signed_permutations():
    with Criterion(2, "unit square under B_2", 1.0):
        inst = hypercube_instance(2, "B")
        H = equivariant_hstar(inst)
        assert not H.is_polynomial
        corners = inst.P.vertices
        for c in range(inst.num_classes):
            g = inst.group.representative(c)
            perm = induced_permutation(g, corners)
            eps = (-1) ** sum(n - 1 for n in cycle_type(perm))
            e = eps * g.determinant()
            want = rf([1, e]) + RationalFunction(IntPolynomial([0, 0, 1 - e]),
                                                 extra=IntPolynomial([1, 1]))
            assert H.per_class[c] == want
        swap = AffineLatticeAutomorphism([[0, 1], [1, 0]])
        for g in (AffineLatticeAutomorphism.identity(2), swap):
            assert H.per_class[class_of(inst, g)] == rf([1, 1])


def test_bad_reflexive_polytope():
    with Criterion(3, "reflexive 3-polytope under Z/2", 5.0) as crit:
        inst = bad_reflexive_Z2()
        assert inst.hstar_ordinary == IntPolynomial([1, 5, 5, 1])
        H = equivariant_hstar(inst)
        one_plus_t = IntPolynomial([1, 1])
        a = RationalFunction(IntPolynomial([1, 3, 8, 3, 1]), extra=one_plus_t)
        b = RationalFunction(IntPolynomial([0, 3, 2, 3]), extra=one_plus_t)
        assert not H.is_polynomial
        assert H.per_class == [a + b, a - b]
        witness = criterion_bad_element(inst, H)
        if not witness.applies:
            # asserted by test_bad_reflexive_witness (strict xfail)
            crit.unmet.append(f"index/dimension witness ({witness.detail})")


@pytest.mark.xfail(strict=True, reason="ind(P_tau) = 1 here, so the index/dimension bound "
                                       "(dim P_tau > d) cannot hold; see the decision ledger")
def test_bad_reflexive_witness():
    inst = bad_reflexive_Z2()
    rec = inst.fixed[1]
    assert rec.index == 1 and rec.dim == 2 and rec.denominator == 2
    assert criterion_bad_element(inst).applies


# d = 2, 3, 4: coefficient -> {partition: multiplicity}
EXPANSIONS = {
    2: [{"(2)": 1}, {"(2)": 1}],
    3: [{"(3)": 1}, {"(3)": 2, "(2,1)": 1}, {"(3)": 1}],
    4: [{"(4)": 1}, {"(4)": 3, "(3,1)": 2, "(2,2)": 1}, {"(4)": 3, "(3,1)": 2, "(2,2)": 1},
        {"(4)": 1}],
}


@pytest.mark.parametrize("d", [2, 3, 4])
def test_hypercube_under_symmetric_group(d):
    with Criterion(4, "hypercube under Sym_d, d = 2, 3, 4", 60.0):
        inst = hypercube_instance(d, "S")
        H = equivariant_hstar(inst)
        tab = H.table
        assert H.is_polynomial and H.degree == d - 1
        for i, row in enumerate(EXPANSIONS[d]):
            m = tab.decompose(H.coefficients[i])
            assert {tab.labels[j]: m[j].as_rational() for j in range(len(tab))
                    if m[j].as_rational()} == row
        basis = [tuple(int(i == j) for j in range(d)) for i in range(d)]
        for c in range(inst.num_classes):
            mu = cycle_type(induced_permutation(inst.group.representative(c), basis))
            want = eulerian_polynomial(len(mu))
            for part in mu:
                want = want * IntPolynomial([1] * part)
            assert H.per_class[c] == RationalFunction(want)
        total = IntPolynomial()
        for lam in partitions(d):
            j = tab.labels.index(partition_label(lam))
            iso = IntPolynomial([tab.decompose(H.coefficients[i])[j].as_rational()
                                 for i in range(H.degree + 1)])
            assert iso == marked_tableaux_polynomial(lam)
            total = total + iso * character_degree(lam)
        descents = [0] * d
        for p in permutations(range(d)):
            descents[sum(p[i] > p[i + 1] for i in range(d - 1))] += 1
        assert total == IntPolynomial(descents)


@pytest.mark.parametrize("n", [2, 3])
def test_standard_reflexive_simplex(n):
    with Criterion(5, "standard reflexive simplex, n = 2, 3", 30.0):
        inst = standard_reflexive_simplex(n)
        want = rf([1] * (2 * n))
        H = equivariant_hstar(inst)
        assert H.is_polynomial and all(f == want for f in H.per_class)
        assert box_points_hstar(inst).per_class == H.per_class
        ex = pip_family(n)
        assert ex.fixed.denominator() == n
        assert [ex.fixed.count_lattice_points(m) for m in range(21)] == \
            [comb(m + n, n) + comb(m, n) for m in range(21)]
        assert quasi_polynomial(ex.fixed).minimal().period == 1


CROSS = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 4), (1, 3), (1, 4)]


def test_centrally_symmetric():
    with Criterion(6, "centrally symmetric V(2k, d)", 60.0):
        one_plus_t = IntPolynomial([1, 1])
        for k, d in CROSS:
            inst = cross_family(k, d)
            h = IntPolynomial()
            for i in range(k + 1):
                h = h + IntPolynomial.monomial(i, comb(2 * i, i)) * one_plus_t ** (d - 2 * i)
            assert inst.hstar_ordinary == h
            H = equivariant_hstar(inst)
            tab = H.table
            sign = next(j for j in range(2) if tab[j] != inst.group.trivial_character())
            for i in range(d + 1):
                m = tab.decompose(H.coefficients[i])
                assert m[1 - sign].as_rational() == Fraction(h[i] + comb(d, i), 2)
                assert m[sign].as_rational() == Fraction(h[i] - comb(d, i), 2)
                assert h[i] >= comb(d, i)
        for d in range(11):
            for i in range(d // 2 + 1):
                assert pascal_partial_sums(d, i) == sum(comb(d + 1, j) for j in range(i + 1))


def test_property_suites():
    with Criterion(7, "property suites on the gallery", 600.0) as crit:
        failures = []
        for inst in default_gallery():
            for r in run_property_suite(inst):
                if not r.ok:
                    failures.append(f"{inst.name}: {r.name}: {r.detail}")
        crit.notes.append(f"{len(default_gallery())} instances")
        assert not failures, failures


# --------------------------------------------------------------------------
# independent oracle: hull by brute force, counting by numpy, interpolation


def _facets(points: np.ndarray) -> list[tuple[np.ndarray, int]]:
    d = points.shape[1]
    out = set()
    for combo in combinations(range(len(points)), d):
        base = points[combo[0]]
        rows = points[list(combo[1:])] - base
        normal = np.array([(-1) ** j * round(np.linalg.det(np.delete(rows, j, axis=1)))
                           if d > 1 else 1 for j in range(d)], dtype=np.int64)
        if not normal.any():
            continue
        normal //= np.gcd.reduce(np.abs(normal))
        values = points @ normal
        c = int(base @ normal)
        if (values <= c).all():
            out.add((tuple(normal), c))
        elif (values >= c).all():
            out.add((tuple(-normal), -c))
    return [(np.array(a), c) for a, c in out]


def _brute_counts(points: np.ndarray, top: int) -> list[int]:
    facets = _facets(points)
    A = np.array([a for a, _ in facets])
    b = np.array([c for _, c in facets])
    counts = []
    for m in range(top + 1):
        lo, hi = m * points.min(axis=0), m * points.max(axis=0)
        grid = np.stack(np.meshgrid(*[np.arange(l, h + 1) for l, h in zip(lo, hi)],
                                    indexing="ij"), axis=-1).reshape(-1, points.shape[1])
        counts.append(int(((grid @ A.T) <= m * b).all(axis=1).sum()))
    return counts


def _interpolated_hstar(counts: list[int], d: int) -> IntPolynomial:
    """Fit a degree-d polynomial through f(0..d), verify f(d+1), expand in binomials."""
    xs = range(d + 1)
    poly = [Fraction(0)] * (d + 1)
    for i in xs:
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in xs:
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= j * basis[k + 1]
            denom *= i - j
        for k in range(d + 1):
            poly[k] += counts[i] * basis[k] / denom
    value = sum(c * (d + 1) ** k for k, c in enumerate(poly))
    assert value == counts[d + 1], "counts are not polynomial"
    # h*_i = sum_j (-1)^(i-j) C(d+1, i-j) f(j)
    f = [sum(c * m ** k for k, c in enumerate(poly)) for m in range(d + 1)]
    h = [sum((-1) ** (i - j) * comb(d + 1, i - j) * f[j] for j in range(i + 1))
         for i in range(d + 1)]
    assert all(x.denominator == 1 for x in h)
    return IntPolynomial([int(x) for x in h])


def _random_polytopes(count: int, seed: int = 20260101):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.choice([1, 2, 3])
        pts = np.array([[rng.randint(-3, 3) for _ in range(d)]
                        for _ in range(rng.randint(d + 1, d + 4))], dtype=np.int64)
        if np.linalg.matrix_rank(pts[1:] - pts[0]) == d:
            out.append(pts)
    return out


def test_trivial_group_regression():
    with Criterion(8, "trivial group on random lattice polytopes", 60.0) as crit:
        dims = []
        for pts in _random_polytopes(10):
            d = pts.shape[1]
            dims.append(d)
            inst = EquivariantInstance([tuple(int(x) for x in p) for p in pts], [], rank=d)
            H = equivariant_hstar(inst)
            assert H.per_class == [RationalFunction(inst.hstar_ordinary)]
            assert inst.hstar_ordinary == _interpolated_hstar(_brute_counts(pts, d + 1), d)
        crit.notes.append(f"dimensions {dims}")
