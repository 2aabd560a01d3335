"""Equivariant Ehrhart theory of a polytope under a finite group.

For every conjugacy class with representative ``g`` the pipeline is

    P_g  ->  Ehrhart series of P_g  ->  phi[t](g) = (1 - t) det(I - rho(g) t) * series

followed by assembly into class functions.  ``chi_mP(g)`` is the number of
lattice points of ``mP_g``; it is also recomputed by enumerating ``mP`` and
keeping the points fixed by ``g``.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Callable, Sequence

from .ehrhart import (EhrhartSeries, QuasiPolynomial, ehrhart_series, quasi_polynomial)
from .exact_arith import CyclotomicValue, IntPolynomial, RationalFunction, lcm
from .fixed_locus import (FixedPolytopeRecord, NotInvariant, barycenter, check_invariant,
                          fixed_polytope, fixed_polytope_of)
from .intlinalg import integer_solutions, inverse, solve
from .lattice_group import (DEFAULT_GROUP_CAP, AffineLatticeAutomorphism, CharacterTable,
                            ClassFunction, FiniteMatrixGroup, character_table, det_character,
                            det_one_minus_t, generate_group, multiplicities_effective,
                            table_from_values)
from .polytope import RationalPolytope

THREADS_ENV = "EQEHRHART_THREADS"

# work budget (kernel rows per conjugacy class) for identities checked by enumeration
DEFAULT_ROW_BUDGET = 6_000_000
# lattice points tested one by one when enumerating mP directly
DEFAULT_POINT_BUDGET = 400_000


class InternalMismatch(ArithmeticError):
    """Two independent computations of the same quantity disagree."""


class NotASimplex(ValueError):
    pass


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _one_minus_t() -> IntPolynomial:
    return IntPolynomial([1, -1])


# --------------------------------------------------------------------------
# instances


class EquivariantInstance:
    """A lattice polytope with a finite group acting on it (up to translation).

    The polytope is given in ``Z^n`` together with generators
    ``u -> A u - w``.  When the polytope is not full dimensional it is
    re-expressed in a lattice basis of its affine span, so the group acts on
    a lattice of rank ``dim P``.
    """

    def __init__(self, vertices: Sequence[Sequence], generators: Sequence[AffineLatticeAutomorphism],
                 rank: int | None = None, cap: int = DEFAULT_GROUP_CAP,
                 table: CharacterTable | Sequence[Sequence] | None = None,
                 labels: Sequence[str] | None = None, name: str | None = None):
        pts = [tuple(Fraction(x) for x in v) for v in vertices]
        n = rank if rank is not None else len(pts[0])
        self.name = name
        self.ambient = RationalPolytope(pts, n)
        self.ambient_generators = list(generators)
        for g in self.ambient_generators:
            if g.rank != n:
                raise ValueError("generator rank differs from the lattice rank")
            check_invariant(self.ambient, g)
        self._reduce()
        self.group: FiniteMatrixGroup = generate_group(self.generators, rank=self.d, cap=cap)
        for g in self.generators:
            check_invariant(self.P, g)
        self._table_input = table
        self._labels = labels
        self.expected: dict = {}
        self.params: dict = {}

    def use_table(self, table: CharacterTable) -> None:
        """Replace the character table (skips the Dixon-Schneider computation)."""
        self._table_input = table
        self.__dict__.pop("table", None)

    def _reduce(self) -> None:
        P0 = self.ambient
        n = P0.ambient_dim
        if P0.is_full_dimensional():
            self.P = P0
            self.generators = self.ambient_generators
            self.base_point = tuple([0] * n)
            self.basis = [[int(i == j) for j in range(n)] for i in range(n)]
            return
        E = [a for a, _ in P0.equations]
        sol = integer_solutions(E, [c for _, c in P0.equations], n)
        if sol is None:
            raise ValueError("the affine span of the polytope contains no lattice point")
        # prefer a vertex as base point when one is integral
        base = next((v for v in P0.vertices if all(x.denominator == 1 for x in v)),
                    tuple(Fraction(x) for x in sol[0]))
        cols, piv_rows, sub_inv = P0._span_lattice
        D = len(cols)

        def coords(x):
            t = [Fraction(x[i]) - base[i] for i in piv_rows]
            return tuple(sum(sub_inv[j][k] * t[k] for k in range(D)) for j in range(D))

        gens = []
        for g in self.ambient_generators:
            lin = []
            images = [coords([base[i] + sum(g.linear[i][k] * col[k] for k in range(n))
                              for i in range(n)]) for col in cols]
            for j in range(D):
                lin.append([images[k][j] for k in range(D)])
            shift = coords(g.apply(base))
            if any(x.denominator != 1 for row in lin for x in row) or \
                    any(x.denominator != 1 for x in shift):
                raise ValueError("group action does not preserve the affine lattice of P")
            gens.append(AffineLatticeAutomorphism(lin, [-x for x in shift]))
        self.P = RationalPolytope([coords(v) for v in P0.vertices], D)
        self.generators = gens
        self.base_point = base
        self.basis = cols

    # ------------------------------------------------------------------

    @property
    def d(self) -> int:
        return self.P.dim

    @property
    def num_classes(self) -> int:
        return self.group.num_classes

    def _map_classes(self, fn: Callable[[int], object]) -> list:
        k = self.group.num_classes
        threads = _thread_count()
        if threads == 1 or k == 1:
            return [fn(c) for c in range(k)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, range(k)))

    @cached_property
    def fixed(self) -> list[FixedPolytopeRecord]:
        return self._map_classes(lambda c: fixed_polytope(self.P, self.group.representative(c)))

    @cached_property
    def series(self) -> list[EhrhartSeries]:
        return self._map_classes(lambda c: ehrhart_series(self.fixed[c].polytope))

    @cached_property
    def quasi_polynomials(self) -> list[QuasiPolynomial]:
        return [quasi_polynomial(self.fixed[c].polytope, self.series[c])
                for c in range(self.num_classes)]

    @cached_property
    def det_polys(self) -> list[IntPolynomial]:
        return [det_one_minus_t(self.group.representative(c)) for c in range(self.num_classes)]

    @cached_property
    def perp_polys(self) -> list[IntPolynomial]:
        """``det(I - rho(g) t)`` restricted to the complement of the fixed space."""
        out = []
        for c in range(self.num_classes):
            k = self.fixed[c].fixed_dim
            q = self.det_polys[c].exact_div(_one_minus_t() ** k)
            if q is None:
                raise InternalMismatch("(1 - t)^dim M^g does not divide det(I - rho(g) t)")
            out.append(q)
        return out

    @cached_property
    def det_char(self) -> ClassFunction:
        return det_character(self.group)

    @cached_property
    def table(self) -> CharacterTable:
        t = self._table_input
        if t is None:
            tab = character_table(self.group)
        elif isinstance(t, CharacterTable):
            tab = t
        else:
            tab = table_from_values(self.group, t)
        if self._labels is not None and len(self._labels) == len(tab):
            tab = tab.relabel(self._labels)
        return tab

    @cached_property
    def hstar_ordinary(self) -> IntPolynomial:
        return ehrhart_series(self.P).hstar()

    def dilate(self, m: int) -> "EquivariantInstance":
        """Same group acting on ``mP`` (translations scale with ``m``)."""
        gens = [AffineLatticeAutomorphism(g.linear, [m * w for w in g.translation])
                for g in self.generators]
        return EquivariantInstance([[m * x for x in v] for v in self.P.vertices], gens,
                                   rank=self.d, name=f"{m}*{self.name}" if self.name else None)

    def verification_horizon(self) -> int:
        """``(d + 1) * exponent + 2``."""
        return (self.d + 1) * self.group.exponent + 2

    def class_horizon(self, c: int, interior: bool = False,
                      budget: int = DEFAULT_ROW_BUDGET, polytope: RationalPolytope | None = None
                      ) -> int:
        """Largest ``m`` up to the verification horizon affordable within ``budget``.

        Never less than ``(dim P_g + 1) * den(P_g)``, which already pins down
        the Ehrhart series of ``P_g``.
        """
        Q = polytope if polytope is not None else self.fixed[c].polytope
        H = self.verification_horizon()
        floor_m = min(H, (Q.dim + 1) * Q.denominator() + 1)
        spent = 0
        m = 0
        while m < H:
            cost = Q.scan_cost(m + 1)
            if spent + cost > budget and m >= floor_m:
                break
            spent += cost
            m += 1
        return m

    def __repr__(self) -> str:
        return (f"EquivariantInstance({self.name or ''} d={self.d}, |G|={self.group.order}, "
                f"classes={self.num_classes})")


# --------------------------------------------------------------------------
# counting functions


def _fixed_count(inst: EquivariantInstance, pts, g: AffineLatticeAutomorphism, m: int) -> int:
    return sum(1 for u in pts if g.apply_dilate(u, m) == u)


def chi_mP(inst: EquivariantInstance, m: int, route: str = "fixed") -> ClassFunction:
    """``chi_{mP}``: lattice points of ``mP`` fixed by each class representative.

    ``route`` is ``"fixed"`` (count points of ``mP_g``), ``"enumerate"``
    (enumerate ``mP`` and test each point) or ``"both"`` (cross-checked).
    """
    return _chi(inst, m, False, route)


def chi_star_mP(inst: EquivariantInstance, m: int, route: str = "fixed") -> ClassFunction:
    """Permutation character on the interior lattice points of ``mP`` (``m >= 1``)."""
    if m < 1:
        raise ValueError("interior characters need m >= 1")
    return _chi(inst, m, True, route)


def _chi(inst: EquivariantInstance, m: int, interior: bool, route: str) -> ClassFunction:
    if m < 0:
        raise ValueError("m must be nonnegative")
    G = inst.group
    vals_fixed = vals_enum = None
    if route in ("fixed", "both"):
        vals_fixed = [inst.fixed[c].polytope.count_lattice_points(m, interior)
                      for c in range(G.num_classes)]
    if route in ("enumerate", "both"):
        pts = inst.P.lattice_points(m, interior)
        vals_enum = [_fixed_count(inst, pts, G.representative(c), m)
                     for c in range(G.num_classes)]
    if route not in ("fixed", "enumerate", "both"):
        raise ValueError(f"unknown route {route!r}")
    if vals_fixed is not None and vals_enum is not None and vals_fixed != vals_enum:
        raise InternalMismatch(f"fixed-point counts disagree at m={m}: {vals_fixed} vs {vals_enum}")
    return ClassFunction(G, vals_fixed if vals_fixed is not None else vals_enum)


def permutation_character_of_points(inst: EquivariantInstance, pts, m: int) -> ClassFunction:
    G = inst.group
    return ClassFunction(G, [_fixed_count(inst, pts, G.representative(c), m)
                             for c in range(G.num_classes)])


# --------------------------------------------------------------------------
# phi[t]


@dataclass
class EquivariantHStar:
    """``phi[t]`` class by class, with its polynomial/effectiveness verdicts."""

    group: FiniteMatrixGroup
    per_class: list[RationalFunction]
    table: CharacterTable | None = None
    coefficients: list[ClassFunction] | None = None
    multiplicities: list[list[CyclotomicValue]] | None = None
    effective: bool | None = None
    extra: dict = field(default_factory=dict)

    @property
    def is_polynomial(self) -> bool:
        return all(f.is_polynomial() for f in self.per_class)

    @property
    def degree(self) -> int | None:
        if not self.is_polynomial:
            return None
        return max(f.numerator.degree for f in self.per_class)

    def value(self, c: int) -> RationalFunction:
        return self.per_class[c]

    def series_coefficient(self, i: int) -> ClassFunction:
        """``phi_i`` from the power-series expansion (defined in every case)."""
        return ClassFunction(self.group, [f.series(i + 1)[i] for f in self.per_class])

    def common_denominator(self) -> RationalFunction:
        facs: dict[int, int] = {}
        extra = IntPolynomial.one()
        for f in self.per_class:
            for k, e in f.factors.items():
                facs[k] = max(facs.get(k, 0), e)
            if f.extra != IntPolynomial.one():
                extra = extra * f.extra
        return RationalFunction(IntPolynomial.one(), facs, extra)

    def isotypic_numerators(self) -> tuple[IntPolynomial, list[list[CyclotomicValue]]]:
        """Common denominator ``D`` and, per irreducible, numerator coefficients over ``D``.

        ``phi[t] = sum_j (sum_i n_{j,i} t^i) / D(t) * chi_j``.
        """
        if self.table is None:
            raise ValueError("a character table is required")
        den_rf = self.common_denominator()
        den = den_rf.denominator()
        nums = []
        for f in self.per_class:
            q = (f * RationalFunction(den)).as_polynomial()
            nums.append(q)
        width = max(p.degree for p in nums) + 1 if nums else 0
        out = [[] for _ in range(len(self.table))]
        for i in range(width):
            cf = ClassFunction(self.group, [p[i] for p in nums])
            for j, m in enumerate(self.table.decompose(cf)):
                out[j].append(m)
        return den, out


def equivariant_hstar(inst: EquivariantInstance, with_table: bool = True) -> EquivariantHStar:
    """``phi[t](g) = (1 - t) det(I - rho(g) t) * EhrhartSeries(P_g)``, canonicalised."""
    per_class = []
    for c in range(inst.num_classes):
        series = inst.series[c].rational_function()
        factor = RationalFunction(inst.det_polys[c] * _one_minus_t())
        per_class.append(series * factor)
    out = EquivariantHStar(inst.group, per_class)
    if with_table:
        out.table = inst.table
    if out.is_polynomial:
        deg = out.degree
        out.coefficients = [ClassFunction(inst.group, [f.numerator[i] for f in per_class])
                            for i in range(deg + 1)]
        if out.table is not None:
            out.multiplicities = [out.table.decompose(cf) for cf in out.coefficients]
            out.effective = all(multiplicities_effective(m) for m in out.multiplicities)
    else:
        out.effective = False
    return out


@dataclass
class PhiAtOne:
    closed_form: ClassFunction
    limit: ClassFunction
    nonnegative: bool
    integral: bool


def phi_at_one(inst: EquivariantInstance, hstar: EquivariantHStar | None = None) -> PhiAtOne:
    """``phi[1]`` by the volume formula and as the limit of ``phi[t](g)``; must agree."""
    H = hstar or equivariant_hstar(inst, with_table=False)
    closed, limit = [], []
    for c in range(inst.num_classes):
        rec = inst.fixed[c]
        Pg = rec.polytope
        if Pg.dim != rec.fixed_dim:
            raise InternalMismatch(f"dim P_g = {Pg.dim} but dim M^g = {rec.fixed_dim}")
        value = Fraction(factorial(Pg.dim)) * Pg.normalized_volume() * \
            inst.perp_polys[c](1) / rec.index
        closed.append(value)
        limit.append(H.per_class[c].eval_at_one())
    if closed != limit:
        raise InternalMismatch(f"phi[1] closed form {closed} differs from the limit {limit}")
    cf = ClassFunction(inst.group, closed)
    return PhiAtOne(cf, ClassFunction(inst.group, limit),
                    nonnegative=all(v >= 0 for v in closed),
                    integral=all(Fraction(v).denominator == 1 for v in closed))


# --------------------------------------------------------------------------
# reciprocity and leading terms


@dataclass
class CheckResult:
    ok: bool
    detail: str = ""
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


def equivariant_reciprocity_check(inst: EquivariantInstance, hstar: EquivariantHStar | None = None,
                                  budget: int = DEFAULT_ROW_BUDGET) -> CheckResult:
    """``(-1)^d L(-m)(g) = chi*_{mP}(g) det(rho(g))`` and the series form, per class."""
    H = hstar or equivariant_hstar(inst, with_table=False)
    d = inst.d
    horizons = []
    for c in range(inst.num_classes):
        qp = inst.quasi_polynomials[c]
        Pg = inst.fixed[c].polytope
        det_g = inst.det_char[c].as_rational()
        top = inst.class_horizon(c, interior=True, budget=budget)
        horizons.append(top)
        interior = [Pg.count_lattice_points(m, interior=True) for m in range(1, top + 1)]
        for m in range(1, top + 1):
            if (-1) ** d * qp(-m) != interior[m - 1] * det_g:
                return CheckResult(False, f"class {c}, m={m}", (m, c))
        # sum_{m>=1} chi*_{mP} t^m = t^{d+1} phi[1/t] / ((1 - t) det(I - rho t))
        rhs = H.per_class[c].reciprocal(d + 1) * RationalFunction(
            IntPolynomial.one(), extra=inst.det_polys[c] * _one_minus_t())
        coeffs = rhs.series(top + 1)
        if coeffs[0] != 0 or list(coeffs[1:]) != interior:
            return CheckResult(False, f"series form fails for class {c}", (None, c))
    return CheckResult(True, f"checked m <= {horizons} (full horizon "
                             f"{inst.verification_horizon()})", horizons)


def fixed_route_cross_check(inst: EquivariantInstance, budget: int = DEFAULT_ROW_BUDGET,
                            point_budget: int = DEFAULT_POINT_BUDGET) -> CheckResult:
    """Counting points of ``mP_g`` equals counting ``g``-fixed points of ``mP``.

    The enumeration route visits every lattice point of ``mP`` in Python, so
    it stops once ``point_budget`` points have been tested (but always covers
    ``m <= 2``).
    """
    top = inst.class_horizon(0, budget=budget // 2, polytope=inst.P)
    spent = 0
    last = 0
    for m in range(0, top + 1):
        size = inst.P.count_lattice_points(m) * inst.num_classes
        if m > 2 and spent + size > point_budget:
            break
        spent += size
        for interior in (False, True):
            if interior and m == 0:
                continue
            try:
                _chi(inst, m, interior, "both")
            except InternalMismatch as exc:
                return CheckResult(False, str(exc), m)
        last = m
    return CheckResult(True, f"checked m <= {last}", last)


@dataclass
class LeadingCoefficients:
    top: ClassFunction
    second: dict[int, ClassFunction]
    ok: bool
    detail: str = ""


def leading_coefficients(inst: EquivariantInstance) -> LeadingCoefficients:
    """``L_d = vol(P)/|G| chi_st`` and the period-two structure of ``L_{d-1}``."""
    d = inst.d
    G = inst.group
    qps = inst.quasi_polynomials
    problems = []
    top_vals = []
    for c in range(G.num_classes):
        vals = {qps[c].coefficient(d, m) for m in range(qps[c].period)}
        if len(vals) != 1:
            problems.append(f"L_d varies with m on class {c}")
        top_vals.append(vals.pop())
    top = ClassFunction(G, top_vals)
    expected_top = G.regular_character() * (inst.P.normalized_volume() / G.order)
    if top != expected_top:
        problems.append("L_d differs from vol(P)/|G| chi_st")
    second = {}
    for parity in (0, 1):
        vals = []
        for c in range(G.num_classes):
            qp = qps[c]
            span = lcm(qp.period, 2)
            got = {qp.coefficient(d - 1, m) for m in range(parity, span, 2)} if d >= 1 else {0}
            if len(got) != 1:
                problems.append(f"L_(d-1) on class {c} is not 2-periodic")
            value = got.pop()
            rec = inst.fixed[c]
            if c == 0:
                expected = value  # s(P)/2 by definition of the surface area
            elif rec.fixed_dim == d - 1:
                m_rep = parity if parity else 2
                expected = rec.polytope.normalized_volume() if m_rep % rec.index == 0 else 0
            else:
                expected = 0
            if value != expected:
                problems.append(f"L_(d-1)({parity} mod 2) on class {c}: {value} != {expected}")
            vals.append(value)
        second[parity] = ClassFunction(G, vals)
    return LeadingCoefficients(top, second, not problems, "; ".join(problems))


@dataclass
class OrbitQuasiPolynomials:
    orbits: QuasiPolynomial
    det_twisted: QuasiPolynomial
    interior_orbits: QuasiPolynomial
    interior_det_twisted: QuasiPolynomial
    ok: bool
    detail: str = ""


def _reflect(qp: QuasiPolynomial, sign: int) -> QuasiPolynomial:
    """``m -> sign * qp(-m)`` as a quasi-polynomial."""
    s = qp.period
    cons = []
    for i in range(s):
        g = qp.constituents[(-i) % s]
        cons.append([sign * c * (-1) ** j for j, c in enumerate(g)])
    return QuasiPolynomial(cons).minimal()


def orbit_quasipolynomials(inst: EquivariantInstance, horizon: int | None = None
                           ) -> OrbitQuasiPolynomials:
    """``<chi_mP, 1>``, ``<chi_mP, det>`` and the interior variants as quasi-polynomials."""
    G = inst.group
    d = inst.d
    zero = QuasiPolynomial([[0]])
    f, ft = zero, zero
    for c in range(G.num_classes):
        w = Fraction(G.class_sizes[c], G.order)
        det_g = inst.det_char[c].as_rational()
        f = f.combine(inst.quasi_polynomials[c], 1, w)
        ft = ft.combine(inst.quasi_polynomials[c], 1, w * det_g)
    f, ft = f.minimal(), ft.minimal()
    f_int = _reflect(ft, (-1) ** d)  # <chi*, 1> = (-1)^d ftilde(-m)
    ft_int = _reflect(f, (-1) ** d)
    problems = []
    if f(0) != 1:
        problems.append("f_{P/G}(0) != 1")
    top = horizon if horizon is not None else min(inst.verification_horizon(), 12)
    triv, detc = G.trivial_character(), inst.det_char
    for m in range(1, top + 1):
        star = chi_star_mP(inst, m)
        plain = chi_mP(inst, m)
        if plain.inner(triv) != f(m):
            problems.append(f"orbit count differs at m={m}")
        if star.inner(detc) != ft_int(m) or star.inner(triv) != f_int(m):
            problems.append(f"orbit reciprocity fails at m={m}")
    return OrbitQuasiPolynomials(f, ft, f_int, ft_int, not problems, "; ".join(problems))


# --------------------------------------------------------------------------
# simplices


def box_points(inst: EquivariantInstance) -> list[tuple[int, ...]]:
    """Lattice points ``sum a_i (v_i, 1)`` with ``0 <= a_i < 1`` in ``M + Z``."""
    P = inst.P
    if not P.is_simplex() or not P.is_full_dimensional():
        raise NotASimplex("box points need a full-dimensional simplex")
    d = inst.d
    V = [[P.vertices[j][i] for j in range(d + 1)] for i in range(d)] + [[1] * (d + 1)]
    Vinv = inverse(V)
    gens = []
    for j in range(d + 1):
        col = [Vinv[i][j] for i in range(d + 1)]
        gens.append(tuple(x - (x.numerator // x.denominator) for x in col))
    zero = tuple(Fraction(0) for _ in range(d + 1))
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = tuple((x + y) - ((x + y).numerator // (x + y).denominator) for x, y in zip(a, g))
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    pts = []
    for a in seen:
        x = [sum(V[i][j] * a[j] for j in range(d + 1)) for i in range(d + 1)]
        pts.append(tuple(int(v) for v in x))
    return sorted(pts, key=lambda p: (p[-1], p))


def box_points_hstar(inst: EquivariantInstance) -> EquivariantHStar:
    """``phi_i`` as the permutation character on box points at height ``i``."""
    pts = box_points(inst)
    G = inst.group
    top = max(p[-1] for p in pts)
    coefficients = []
    for i in range(top + 1):
        layer = [p[:-1] for p in pts if p[-1] == i]
        coefficients.append(permutation_character_of_points(inst, layer, i))
    per_class = [RationalFunction(IntPolynomial([cf[c].as_rational() for cf in coefficients]))
                 for c in range(G.num_classes)]
    out = EquivariantHStar(G, per_class, coefficients=coefficients)
    return out


# --------------------------------------------------------------------------
# polynomiality and effectiveness criteria


@dataclass
class Verdict:
    applies: bool
    consistent: bool
    detail: str = ""
    witness: object = None


def criterion_all_fixed_lattice(inst: EquivariantInstance,
                                hstar: EquivariantHStar | None = None) -> Verdict:
    """If every ``P_g`` is a lattice polytope, ``phi`` is a polynomial with
    ``phi(g) = h*_{P_g}(t) det(I - rho(g) t)`` on the fixed-space complement."""
    if not all(rec.is_lattice() for rec in inst.fixed):
        bad = next(c for c, rec in enumerate(inst.fixed) if not rec.is_lattice())
        return Verdict(False, True, f"P_g is not a lattice polytope for class {bad}", bad)
    H = hstar or equivariant_hstar(inst, with_table=False)
    for c in range(inst.num_classes):
        expected = inst.series[c].hstar() * inst.perp_polys[c]
        if H.per_class[c] != RationalFunction(expected):
            return Verdict(True, False, f"class {c}: phi differs from h*_(P_g) det_perp", c)
    return Verdict(True, True, "every P_g is a lattice polytope; phi is a polynomial")


def criterion_bad_element(inst: EquivariantInstance,
                          hstar: EquivariantHStar | None = None) -> Verdict:
    """An element ``g`` with ``r = ind(P_g)``, ``r P_g`` integral and
    ``dim P_g > (d - r + 1)/r`` forces a non-polynomial ``phi``."""
    d = inst.d
    witness = None
    for c in range(inst.num_classes):
        rec = inst.fixed[c]
        g = inst.group.representative(c)
        r = rec.index
        lattice_multiple = all((r * x).denominator == 1 for v in rec.polytope.vertices for x in v)
        if lattice_multiple and rec.polytope.dim * r > d - r + 1:
            witness = (c, f"ind(P_g) = {r}, dim P_g = {rec.polytope.dim}")
            break
        if rec.fixed_dim == d - 1:
            A_minus_I = [[g.linear[i][j] - int(i == j) for j in range(d)] for i in range(d)]
            if integer_solutions(A_minus_I, list(g.translation), d) is None:
                witness = (c, "reflection without fixed points in M x 1")
                break
    if witness is None:
        return Verdict(False, True, "no element satisfies the index/dimension bound")
    H = hstar or equivariant_hstar(inst, with_table=False)
    consistent = not H.is_polynomial
    return Verdict(True, consistent, f"class {witness[0]}: {witness[1]}", witness[0])


def _has_lattice_point(Q: RationalPolytope) -> bool:
    if any(all(x.denominator == 1 for x in v) for v in Q.vertices):
        return True
    return Q.count_lattice_points(1) > 0


def face_stabilizer(inst: EquivariantInstance, face: frozenset) -> list[AffineLatticeAutomorphism]:
    verts = {inst.P.vertices[i] for i in face}
    return [g for g in inst.group.elements if {g.apply(v) for v in verts} == verts]


def criterion_face_fixed_points(inst: EquivariantInstance,
                                hstar: EquivariantHStar | None = None,
                                check_effective: bool = True) -> Verdict:
    """Every face of dimension > 1 holds a lattice point fixed by its stabiliser
    (then ``phi`` is effective)."""
    P = inst.P
    for face, dim in P.face_lattice:
        if dim <= 1:
            continue
        Q = P.face_polytope(face)
        stab = face_stabilizer(inst, face)
        if not _has_lattice_point(fixed_polytope_of(Q, stab)):
            return Verdict(False, True, f"face {sorted(face)} has no stabiliser-fixed lattice point",
                           sorted(face))
    if not check_effective:
        return Verdict(True, True, "every face of dimension > 1 has a fixed lattice point")
    H = hstar or equivariant_hstar(inst)
    if H.table is None:
        H.table = inst.table
    consistent = H.is_polynomial and (H.effective if H.effective is not None
                                      else all(H.table.is_effective(cf) for cf in H.coefficients))
    return Verdict(True, bool(consistent), "effective guaranteed")


def criteria_consistent(poly: Verdict, bad: Verdict, face: Verdict) -> bool:
    """No instance may be both guaranteed polynomial and witnessed non-polynomial."""
    guaranteed = poly.applies or face.applies
    return poly.consistent and bad.consistent and face.consistent and not (guaranteed and bad.applies)


# --------------------------------------------------------------------------
# products, free sums, reflexivity


def _block_element(g: AffineLatticeAutomorphism, h: AffineLatticeAutomorphism
                   ) -> AffineLatticeAutomorphism:
    a, b = g.rank, h.rank
    lin = [list(r) + [0] * b for r in g.linear] + [[0] * a + list(r) for r in h.linear]
    return AffineLatticeAutomorphism(lin, list(g.translation) + list(h.translation))


def _split_element(x: AffineLatticeAutomorphism, a: int):
    lin = x.linear
    g = AffineLatticeAutomorphism([r[:a] for r in lin[:a]], x.translation[:a])
    h = AffineLatticeAutomorphism([r[a:] for r in lin[a:]], x.translation[a:])
    return g, h


def product_instance(I1: EquivariantInstance, I2: EquivariantInstance, kind: str
                     ) -> EquivariantInstance:
    """``P x Q`` or ``P (+) Q`` under ``G x H``."""
    a, b = I1.d, I2.d
    gens = [_block_element(g, AffineLatticeAutomorphism.identity(b)) for g in I1.generators] + \
           [_block_element(AffineLatticeAutomorphism.identity(a), h) for h in I2.generators]
    if kind == "product":
        verts = [tuple(p) + tuple(q) for p in I1.P.vertices for q in I2.P.vertices]
    elif kind == "free_sum":
        if any(any(g.translation) for g in I1.generators + I2.generators):
            raise ValueError("free sums need linear actions fixing the origin")
        verts = [tuple(p) + (0,) * b for p in I1.P.vertices] + \
                [(0,) * a + tuple(q) for q in I2.P.vertices]
    else:
        raise ValueError(f"unknown construction {kind!r}")
    return EquivariantInstance(verts, gens, rank=a + b)


def free_sum_identity_check(I1: EquivariantInstance, I2: EquivariantInstance,
                            product_terms: int = 4) -> CheckResult:
    """``phi_{P (+) Q} = phi_P phi_Q`` and ``chi_{m(P x Q)} = chi_{mP} chi_{mQ}`` on ``G x H``."""
    if not I1.P.is_reflexive():
        return CheckResult(False, "first polytope is not reflexive")
    origin = tuple([0] * I2.d)
    if not I2.P.contains(origin, strict=True):
        return CheckResult(False, "second polytope must contain the origin in its interior")
    S = product_instance(I1, I2, "free_sum")
    H1 = equivariant_hstar(I1, with_table=False)
    H2 = equivariant_hstar(I2, with_table=False)
    HS = equivariant_hstar(S, with_table=False)
    for c in range(S.num_classes):
        g, h = _split_element(S.group.representative(c), I1.d)
        c1 = I1.group.class_of[I1.group.index[g]]
        c2 = I2.group.class_of[I2.group.index[h]]
        if HS.per_class[c] != H1.per_class[c1] * H2.per_class[c2]:
            return CheckResult(False, f"free-sum identity fails on class {c}", c)
    R = product_instance(I1, I2, "product")
    for m in range(product_terms + 1):
        chi = chi_mP(R, m)
        for c in range(R.num_classes):
            g, h = _split_element(R.group.representative(c), I1.d)
            c1 = I1.group.class_of[I1.group.index[g]]
            c2 = I2.group.class_of[I2.group.index[h]]
            if chi[c] != chi_mP(I1, m)[c1] * chi_mP(I2, m)[c2]:
                return CheckResult(False, f"product identity fails at m={m}, class {c}", (m, c))
    return CheckResult(True, "free-sum and product identities hold")


@dataclass
class PalindromeReport:
    conditions: dict[str, bool]
    degree: int
    codegree: int

    @property
    def agree(self) -> bool:
        return len(set(self.conditions.values())) == 1


def palindrome_reflexive_check(inst: EquivariantInstance, hstar: EquivariantHStar | None = None,
                               horizon: int | None = None) -> PalindromeReport:
    """Evaluate the five equivalent reflexivity conditions independently."""
    P = inst.P
    H = hstar or equivariant_hstar(inst, with_table=False)
    h = inst.hstar_ordinary
    s = h.degree
    d = inst.d
    l = d + 1 - s
    top = horizon if horizon is not None else min(inst.verification_horizon(), l + 6)
    cond = {}
    cond["phi_palindromic"] = all(f.reciprocal_equals(s) for f in H.per_class)
    ok = True
    for m in range(l, top + 1):
        if chi_star_mP(inst, m) != chi_mP(inst, m - l):
            ok = False
            break
    cond["interior_character_shift"] = ok
    cond["interior_count_shift"] = all(P.count_lattice_points(m, interior=True) ==
                                       P.count_lattice_points(m - l) for m in range(l, top + 1))
    cond["hstar_palindromic"] = h.is_palindromic(s)
    cond["translate_reflexive"] = P.dilate(l).is_translate_of_reflexive()
    return PalindromeReport(cond, s, l)
