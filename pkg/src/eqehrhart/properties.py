"""The property suite run by ``eqehrhart check``.

Each check returns a :class:`PropertyResult`; a falsified property carries a
witness in its detail string.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .equivariant import (DEFAULT_ROW_BUDGET, EquivariantHStar, EquivariantInstance,
                          InternalMismatch, NotASimplex, box_points_hstar, chi_mP,
                          chi_star_mP, criteria_consistent, criterion_all_fixed_lattice,
                          criterion_bad_element, criterion_face_fixed_points,
                          equivariant_hstar, equivariant_reciprocity_check,
                          fixed_route_cross_check, free_sum_identity_check, leading_coefficients,
                          orbit_quasipolynomials, palindrome_reflexive_check,
                          permutation_character_of_points, phi_at_one)
from .exact_arith import IntPolynomial, RationalFunction
from .lattice_group import ClassFunction, multiplicities_effective


@dataclass
class PropertyResult:
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0


def _run(name, fn) -> PropertyResult:
    start = time.perf_counter()
    try:
        out = fn()
        if isinstance(out, tuple):
            ok, detail = out
        else:
            ok, detail = bool(out), ""
    except InternalMismatch as exc:
        ok, detail = False, f"internal mismatch: {exc}"
    return PropertyResult(name, bool(ok), detail, time.perf_counter() - start)


def _fixed_loci(inst: EquivariantInstance):
    G = inst.group
    problems = []
    for c in range(G.num_classes):
        rec = inst.fixed[c]
        g_idx = G.representatives[c]
        order = G.element_order(g_idx)
        if rec.dim != rec.fixed_dim:
            problems.append(f"class {c}: dim P_g {rec.dim} != dim M^g {rec.fixed_dim}")
        if any((order * x).denominator != 1 for v in rec.polytope.vertices for x in v):
            problems.append(f"class {c}: ord(g) P_g is not a lattice polytope")
        if order % rec.index:
            problems.append(f"class {c}: index does not divide the order")
        if rec.fixed_dim == inst.d - 1 and (rec.index not in (1, 2) or order != 2):
            problems.append(f"class {c}: reflection with index {rec.index}, order {order}")
    return not problems, "; ".join(problems)


def _phi_basic(inst: EquivariantInstance, H: EquivariantHStar):
    phi0 = H.series_coefficient(0)
    if phi0 != inst.group.trivial_character():
        return False, f"phi_0 = {phi0.render()}"
    phi1 = H.series_coefficient(1)
    if not inst.table.is_effective(phi1):
        return False, f"phi_1 = {phi1.render()} is not effective"
    if H.is_polynomial and inst.d >= 1:
        phid = H.series_coefficient(inst.d)
        if not inst.table.is_effective(phid) or not inst.table.is_effective(phi1 - phid):
            return False, "phi_1 >= phi_d >= 0 fails"
    return True, ""


def _phi_top(inst: EquivariantInstance, H: EquivariantHStar):
    if not H.is_polynomial:
        return True, "not applicable (phi is not a polynomial)"
    s = H.degree
    l = inst.d + 1 - s
    pts = inst.P.lattice_points(l, interior=True)
    direct = permutation_character_of_points(inst, pts, l)
    if direct != H.coefficients[s]:
        return False, f"phi_s = {H.coefficients[s].render()} but chi*_lP = {direct.render()}"
    return True, f"s = {s}, l = {l}"


def _trivial_restriction(inst: EquivariantInstance, H: EquivariantHStar):
    return H.per_class[0] == RationalFunction(inst.hstar_ordinary), ""


def _phi_at_one(inst: EquivariantInstance, H: EquivariantHStar):
    res = phi_at_one(inst, H)
    detail = f"phi[1] = {res.closed_form.render()}; integral: {res.integral}"
    return res.nonnegative, detail


def _criteria(inst: EquivariantInstance, H: EquivariantHStar):
    a = criterion_all_fixed_lattice(inst, H)
    b = criterion_bad_element(inst, H)
    c = criterion_face_fixed_points(inst, H)
    ok = criteria_consistent(a, b, c)
    return ok, (f"all P_g lattice: {a.applies}; bad element: {b.applies} ({b.detail}); "
                f"face fixed points: {c.applies}")


def _multiples(inst: EquivariantInstance):
    e, n = inst.group.exponent, inst.group.order
    a = inst.dilate(e)
    if not all(rec.is_lattice() for rec in a.fixed):
        return False, f"some P_g of {e}P is not a lattice polytope"
    b = inst.dilate(n)
    v = criterion_face_fixed_points(b, check_effective=False)
    if not v.applies:
        return False, f"{n}P: {v.detail}"
    return True, f"exponent {e}, order {n}"


def _centrally_symmetric(inst: EquivariantInstance, H: EquivariantHStar):
    d = inst.d
    h = inst.hstar_ordinary
    tab = inst.table
    sign = next(i for i in range(len(tab)) if tab[i] != inst.group.trivial_character())
    for i, cf in enumerate(H.coefficients):
        m = tab.decompose(cf)
        want_triv = Fraction(h[i] + comb(d, i), 2)
        want_sign = Fraction(h[i] - comb(d, i), 2)
        if m[0].as_rational() != want_triv or m[sign].as_rational() != want_sign:
            return False, f"phi_{i} multiplicities {[x.render() for x in m]}"
        if h[i] < comb(d, i):
            return False, f"h*_{i} < C(d, i)"
    for m in range(0, 6):
        f = inst.P.count_lattice_points(m)
        L = chi_mP(inst, m)
        want = tab[0] * Fraction(f + 1, 2) + tab[sign] * Fraction(f - 1, 2)
        if L != want:
            return False, f"L({m}) = {L.render()}"
    return True, ""


def is_centrally_symmetric(inst: EquivariantInstance) -> bool:
    G = inst.group
    if G.order != 2:
        return False
    g = G.elements[1]
    d = inst.d
    return not any(g.translation) and all(g.linear[i][j] == -int(i == j)
                                          for i in range(d) for j in range(d))


def run_property_suite(inst: EquivariantInstance, budget: int = DEFAULT_ROW_BUDGET
                       ) -> list[PropertyResult]:
    H = equivariant_hstar(inst)
    results = [
        _run("fixed loci", lambda: _fixed_loci(inst)),
        _run("fixed-point counts by two routes",
             lambda: (lambda r: (r.ok, r.detail))(fixed_route_cross_check(inst, budget))),
        _run("equivariant reciprocity",
             lambda: (lambda r: (r.ok, r.detail))(equivariant_reciprocity_check(inst, H, budget))),
        _run("phi_0 = 1, phi_1 effective", lambda: _phi_basic(inst, H)),
        _run("top coefficient is chi* of lP", lambda: _phi_top(inst, H)),
        _run("trivial subgroup gives h*", lambda: _trivial_restriction(inst, H)),
        _run("leading coefficients",
             lambda: (lambda r: (r.ok, r.detail))(leading_coefficients(inst))),
        _run("phi[1] closed form = limit", lambda: _phi_at_one(inst, H)),
        _run("orbit quasi-polynomials",
             lambda: (lambda r: (r.ok, r.detail))(orbit_quasipolynomials(inst))),
        _run("palindromic iff reflexive translate", lambda: (
            lambda r: (r.agree, str(r.conditions)))(palindrome_reflexive_check(inst, H))),
        _run("criteria consistent", lambda: _criteria(inst, H)),
        _run("dilates by exponent and order", lambda: _multiples(inst)),
    ]
    if inst.P.is_simplex():
        results.append(_run("box points give phi",
                            lambda: (box_points_hstar(inst).per_class == H.per_class, "")))
    if is_centrally_symmetric(inst):
        results.append(_run("centrally symmetric formulas", lambda: _centrally_symmetric(inst, H)))
    from .gallery import gallery_checks
    for name, fn in gallery_checks(inst):
        results.append(_run(name, fn))
    return results
