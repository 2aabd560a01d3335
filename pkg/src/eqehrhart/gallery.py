"""Worked examples: hypercubes, the hexagon, reflections without fixed points,
the standard reflexive simplex and the centrally symmetric polytopes ``V(2k, d)``.

Every constructor returns an :class:`EquivariantInstance` whose ``expected``
dict holds the reference values used by the acceptance suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

from .ehrhart import eulerian_polynomial
from .equivariant import EquivariantInstance, equivariant_hstar, free_sum_identity_check
from .exact_arith import CyclotomicValue, IntPolynomial, RationalFunction
from .lattice_group import AffineLatticeAutomorphism, CharacterTable, table_from_values
from .polytope import RationalPolytope

# --------------------------------------------------------------------------
# partitions and symmetric-group characters


def partitions(n: int, largest: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of ``n`` in reverse lexicographic order: ``(n), (n-1, 1), ...``."""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            out.append((k,) + rest)
    return out


def partition_label(lam: Sequence[int]) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


@lru_cache(maxsize=None)
def _mn(beta: frozenset, mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        if b - r >= 0 and b - r not in beta:
            between = sum(1 for x in beta if b - r < x < b)
            total += (-1) ** between * _mn((beta - {b}) | {b - r}, rest)
    return total


def symmetric_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """``chi^lam`` at cycle type ``mu`` by the Murnaghan-Nakayama rule."""
    k = len(lam)
    beta = frozenset(lam[i] + (k - 1 - i) for i in range(k))
    return _mn(beta, tuple(sorted(mu, reverse=True)))


def cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if not seen[i]:
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                n += 1
            out.append(n)
    return tuple(sorted(out, reverse=True))


def induced_permutation(g: AffineLatticeAutomorphism, points: Sequence[Sequence]) -> list[int]:
    pts = [tuple(p) for p in points]
    where = {p: i for i, p in enumerate(pts)}
    return [where[tuple(g.apply(p))] for p in pts]


def symmetric_group_table(inst: EquivariantInstance, points: Sequence[Sequence], d: int
                          ) -> CharacterTable:
    """Character table of a group acting as ``Sym_d`` on ``points``, labelled by partitions."""
    G = inst.group
    types = [cycle_type(induced_permutation(G.representative(c), points))
             for c in range(G.num_classes)]
    lams = partitions(d)
    rows = [[symmetric_character(lam, mu) for mu in types] for lam in lams]
    return table_from_values(G, rows, [partition_label(lam) for lam in lams])


# --------------------------------------------------------------------------
# instance constructors


def _perm_matrix(perm: Sequence[int]) -> list[list[int]]:
    d = len(perm)
    a = [[0] * d for _ in range(d)]
    for i, j in enumerate(perm):
        a[j][i] = 1
    return a


def _sym_generators(d: int) -> list[list[int]]:
    if d < 2:
        return []
    swap = [1, 0] + list(range(2, d))
    cycle = [(i + 1) % d for i in range(d)]
    return [swap] if d == 2 else [swap, cycle]


def _cube_symmetry(linear: list[list[int]]) -> AffineLatticeAutomorphism:
    # u -> A u - w maps [0,1]^d to itself once rows with a -1 are shifted by 1
    w = [-1 if any(x < 0 for x in row) else 0 for row in linear]
    return AffineLatticeAutomorphism(linear, w)


def hypercube_instance(d: int, group: str = "S") -> EquivariantInstance:
    """``[0,1]^d`` under ``Sym_d`` (``group="S"``) or signed permutations (``"B"``)."""
    verts = [tuple((k >> i) & 1 for i in range(d)) for k in range(2 ** d)]
    gens = [_cube_symmetry(_perm_matrix(p)) for p in _sym_generators(d)]
    if group == "B":
        flip = [[(-1 if i == j == 0 else int(i == j)) for j in range(d)] for i in range(d)]
        gens.append(_cube_symmetry(flip))
    elif group != "S":
        raise ValueError("group must be 'S' or 'B'")
    name = f"hypercube(d={d}, {'Sym' if group == 'S' else 'B'})"
    inst = EquivariantInstance(verts, gens, rank=d, name=name)
    inst.params = {"example": "hypercube", "d": d, "group": group}
    if group == "S":
        basis = [tuple(int(i == j) for j in range(d)) for i in range(d)]
        inst.use_table(symmetric_group_table(inst, basis, d))
        inst.expected = {"hstar": eulerian_polynomial(d),
                         "isotypic": hypercube_isotypic(d)}
        expansion = _CUBE_EXPANSIONS.get(d)
        if expansion is not None:
            inst.expected["phi_expansion"] = expansion
    else:
        inst.expected = {"hstar": eulerian_polynomial(d)}
        if d == 2:
            inst.expected["phi_breakdown"] = _breakdown_expected(inst)
    return inst


# coefficient -> {partition label: multiplicity}
_CUBE_EXPANSIONS = {
    2: [{"(2)": 1}, {"(2)": 1}],
    3: [{"(3)": 1}, {"(3)": 2, "(2,1)": 1}, {"(3)": 1}],
    4: [{"(4)": 1}, {"(4)": 3, "(3,1)": 2, "(2,2)": 1},
        {"(4)": 3, "(3,1)": 2, "(2,2)": 1}, {"(4)": 1}],
}


def _vertex_sign(inst: EquivariantInstance, c: int) -> int:
    perm = induced_permutation(inst.group.representative(c), inst.P.vertices)
    return (-1) ** sum(n - 1 for n in cycle_type(perm))


def _breakdown_expected(inst: EquivariantInstance) -> list[RationalFunction]:
    """``1 + e det t + (1 - e det) t^2/(1 + t)`` with ``e`` the sign on the four vertices."""
    out = []
    one_plus_t = IntPolynomial([1, 1])
    for c in range(inst.num_classes):
        e = _vertex_sign(inst, c) * inst.group.representative(c).determinant()
        poly = RationalFunction(IntPolynomial([1, e]))
        frac = RationalFunction(IntPolynomial([0, 0, 1 - e]), extra=one_plus_t)
        out.append(poly + frac)
    return out


def hexagon_Z6() -> EquivariantInstance:
    """Hexagon ``conv{+-(1,0), +-(0,1), +-(1,1)}`` under a rotation of order 6."""
    verts = [(1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1)]
    sigma = AffineLatticeAutomorphism([[0, 1], [-1, 1]])
    inst = EquivariantInstance(verts, [sigma], rank=2, name="hexagon_Z6")
    inst.params = {"example": "hexagon"}
    inst.expected = {
        "generator": sigma,
        # rows phi_0, phi_1, phi_2; columns 1, chi, ..., chi^5 with chi(sigma) = zeta_6
        "multiplicities": [[1, 0, 0, 0, 0, 0], [1, 0, 1, 1, 1, 0], [1, 0, 0, 0, 0, 0]],
        "phi_at_generator": IntPolynomial([1, -1, 1]),
        "phi_at_one_multiplicities": [3, 0, 1, 1, 1, 0],
    }
    return inst


_REFLECTION_Z3 = [[-1, 0, 1], [0, 1, 0], [0, 0, 1]]


def bad_square_Z2(pyramid: bool = False) -> EquivariantInstance:
    """The unit square at height one in ``Z^3`` under a reflection without fixed
    lattice points; with ``pyramid=True`` the origin is added as an apex."""
    verts = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
    if pyramid:
        verts.append((0, 0, 0))
    tau = AffineLatticeAutomorphism(_REFLECTION_Z3)
    inst = EquivariantInstance(verts, [tau], rank=3,
                               name="bad_square_Z2" + ("_pyramid" if pyramid else ""))
    inst.params = {"example": "bad_square", "pyramid": int(pyramid)}
    inst.expected = {"polynomial": False}
    return inst


def bad_reflexive_Z2() -> EquivariantInstance:
    """Reflexive 3-polytope ``conv{+-(0,0,1), +-(1,0,1), +-(0,1,1), +-(1,1,1)}`` under the same reflection."""
    base = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
    verts = base + [tuple(-x for x in v) for v in base]
    tau = AffineLatticeAutomorphism(_REFLECTION_Z3)
    inst = EquivariantInstance(verts, [tau], rank=3, name="bad_reflexive_Z2")
    inst.params = {"example": "bad_reflexive"}
    a = IntPolynomial([1, 3, 8, 3, 1])
    b = IntPolynomial([0, 3, 2, 3])
    one_plus_t = IntPolynomial([1, 1])
    inst.expected = {
        "hstar": IntPolynomial([1, 5, 5, 1]),
        # trivial and sign components of phi, each over 1 + t
        "components": (RationalFunction(a, extra=one_plus_t), RationalFunction(b, extra=one_plus_t)),
        "fixed_series": RationalFunction(IntPolynomial([1, 0, 6, 0, 1]),
                                         extra=IntPolynomial([1, -1, -2, 2, 1, -1])),
    }
    return inst


def standard_reflexive_simplex(n: int) -> EquivariantInstance:
    """Simplex on the images of ``e_1..e_2n`` in ``Z^2n / Z(1,...,1)`` under ``Sym_2n``.

    The quotient is given the basis ``e_1..e_{2n-1}``, so ``e_2n`` becomes ``-(1,...,1)``.
    """
    N = 2 * n
    D = N - 1
    images = [tuple(int(i == j) for j in range(D)) for i in range(D)] + [tuple([-1] * D)]

    def matrix(perm):
        cols = [images[perm[i]] for i in range(D)]
        return [[cols[j][i] for j in range(D)] for i in range(D)]

    gens = [AffineLatticeAutomorphism(matrix(p)) for p in _sym_generators(N)]
    inst = EquivariantInstance(images, gens, rank=D, name=f"standard_reflexive_simplex(n={n})")
    inst.params = {"example": "simplex", "n": n}
    inst.use_table(symmetric_group_table(inst, images, N))
    inst.expected = {"phi": IntPolynomial([1] * N)}
    return inst


@dataclass
class PIPExample:
    instance: EquivariantInstance
    element: AffineLatticeAutomorphism
    fixed: RationalPolytope
    n: int

    def expected_count(self, m: int) -> int:
        return comb(m + self.n, self.n) + comb(m, self.n)


def pip_family(n: int) -> PIPExample:
    """The fixed polytope of an ``n``-cycle on the standard reflexive simplex of ``Sym_2n``."""
    from .fixed_locus import fixed_polytope
    inst = standard_reflexive_simplex(n)
    perm = [(i + 1) % n if i < n else i for i in range(2 * n)]
    D = 2 * n - 1
    images = [tuple(int(i == j) for j in range(D)) for i in range(D)] + [tuple([-1] * D)]
    cols = [images[perm[i]] for i in range(D)]
    g = AffineLatticeAutomorphism([[cols[j][i] for j in range(D)] for i in range(D)])
    return PIPExample(inst, g, fixed_polytope(inst.P, g).polytope, n)


def cross_family(k: int, d: int) -> EquivariantInstance:
    """``V(2k, d) = conv{+-e_i, +-(e_1 + ... + e_2k)}`` under ``-I``."""
    if not 0 <= 2 * k <= d:
        raise ValueError("need 0 <= 2k <= d")
    verts = []
    for i in range(d):
        e = tuple(int(i == j) for j in range(d))
        verts += [e, tuple(-x for x in e)]
    if k:
        s = tuple(int(j < 2 * k) for j in range(d))
        verts += [s, tuple(-x for x in s)]
    minus = AffineLatticeAutomorphism([[-int(i == j) for j in range(d)] for i in range(d)])
    inst = EquivariantInstance(verts, [minus], rank=d, name=f"cross_family(k={k}, d={d})")
    inst.params = {"example": "cross", "k": k, "d": d}
    h = centrally_symmetric_hstar(k, d)
    inst.expected = {"hstar": h, "phi": centrally_symmetric_phi(h, d)}
    return inst


def interval_instance() -> EquivariantInstance:
    """``[-1, 1]`` under ``-1``."""
    return EquivariantInstance([(-1,), (1,)], [AffineLatticeAutomorphism([[-1]])], rank=1,
                               name="interval")


# --------------------------------------------------------------------------
# closed forms


def centrally_symmetric_hstar(k: int, d: int) -> IntPolynomial:
    """``sum_{i<=k} C(2i, i) t^i (1 + t)^(d - 2i)``."""
    one_plus_t = IntPolynomial([1, 1])
    out = IntPolynomial()
    for i in range(k + 1):
        out = out + IntPolynomial.monomial(i, comb(2 * i, i)) * one_plus_t ** (d - 2 * i)
    return out


def centrally_symmetric_phi(h: IntPolynomial, d: int) -> list[tuple]:
    """``(trivial, sign)`` multiplicities of each ``phi_i``: ``((h_i + C(d,i))/2, (h_i - C(d,i))/2)``."""
    out = []
    for i in range(max(h.degree, d) + 1):
        a, b = h[i] + comb(d, i), h[i] - comb(d, i)
        out.append((a // 2, b // 2) if a % 2 == 0 else (a / 2, b / 2))
    return out


def hypercube_char_formula(d: int, mu: Sequence[int]) -> IntPolynomial:
    """``phi(g) = A(r; t) prod_i (1 + ... + t^(mu_i - 1))`` for ``g`` of cycle type ``mu``."""
    if sum(mu) != d:
        raise ValueError("cycle type must partition d")
    out = eulerian_polynomial(len(mu))
    for m in mu:
        out = out * IntPolynomial([1] * m)
    return out


def pascal_partial_sums(d: int, i: int) -> int:
    """``T(d, i)``; the defining expansion, the recurrence and ``sum_{j<=i} C(d+1, j)`` must agree."""
    if i < 0 or i > d:
        return 0
    if 2 * i > d:
        i = d - i
    by_definition = _pascal_definition(d)[i]
    by_recurrence = _pascal_recurrence(d, i)
    closed = sum(comb(d + 1, j) for j in range(i + 1))
    if not by_definition == by_recurrence == closed:
        raise ArithmeticError(f"T({d},{i}): {by_definition}, {by_recurrence}, {closed}")
    return closed


def _pascal_definition(d: int) -> IntPolynomial:
    one_minus_t = IntPolynomial([1, -1])
    out = IntPolynomial()
    for j in range(d + 1):
        out = out + IntPolynomial.monomial(j, comb(d + 1, j) * 2 ** j) * one_minus_t ** (d - j)
    return out


@lru_cache(maxsize=None)
def _pascal_recurrence(d: int, i: int) -> int:
    if i < 0:
        return 0
    if 2 * i > d:
        return _pascal_recurrence(d, d - i)
    if d == 0:
        return 1
    if 2 * i == d:
        k = i
        return 2 * _pascal_recurrence(2 * k - 1, k - 1) + comb(2 * k, k)
    return _pascal_recurrence(d - 1, i) + _pascal_recurrence(d - 1, i - 1)


def kv_hstar(k: int) -> IntPolynomial:
    """``h*`` of ``V(2k, 2k)`` from the partial sums: coefficient ``T(2k, i)``."""
    return IntPolynomial([pascal_partial_sums(2 * k, i) for i in range(2 * k + 1)])


# --------------------------------------------------------------------------
# marked tableaux


@dataclass(frozen=True)
class MarkedTableau:
    shape: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]
    marking: tuple[tuple[int, int], ...]  # (j, f(j)) for j in S+(T)

    @property
    def index(self) -> int:
        return sum(f for _, f in self.marking)


def _tableaux(shape: Sequence[int], top: int):
    """Fillings with entries in ``0..top``, rows weakly and columns strictly increasing."""
    cells = [(r, c) for r, n in enumerate(shape) for c in range(n)]
    grid = [[0] * n for n in shape]

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[k]
        lo = 0
        if c > 0:
            lo = grid[r][c - 1]
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, top + 1):
            grid[r][c] = v
            yield from fill(k + 1)

    yield from fill(0)


def marked_tableaux(shape: Sequence[int]) -> list[MarkedTableau]:
    d = sum(shape)
    out = []
    for T in _tableaux(shape, d):
        counts: dict[int, int] = {}
        for row in T:
            for v in row:
                if v > 0:
                    counts[v] = counts.get(v, 0) + 1
        k = len(counts)
        if set(counts) != set(range(1, k + 1)):
            continue
        choices = [[(j, f) for f in range(1, counts[j])] for j in range(1, k + 1)]
        for marking in _product(choices):
            out.append(MarkedTableau(tuple(shape), T, tuple(marking)))
    return out


def _product(choices):
    if not choices:
        yield ()
        return
    for first in choices[0]:
        for rest in _product(choices[1:]):
            yield (first,) + rest


def marked_tableaux_polynomial(shape: Sequence[int]) -> IntPolynomial:
    """``P_lam(t) = sum over marked tableaux of t^index``."""
    coeffs: dict[int, int] = {}
    for mt in marked_tableaux(shape):
        coeffs[mt.index] = coeffs.get(mt.index, 0) + 1
    top = max(coeffs, default=-1)
    return IntPolynomial([coeffs.get(i, 0) for i in range(top + 1)])


def hypercube_isotypic(d: int) -> dict[str, IntPolynomial]:
    return {partition_label(lam): marked_tableaux_polynomial(lam) for lam in partitions(d)}


def character_degree(lam: Sequence[int]) -> int:
    return symmetric_character(lam, (1,) * sum(lam))


# --------------------------------------------------------------------------
# registry used by the command line


def _int(params, key, default=None):
    if key in params:
        return int(params[key])
    if default is None:
        raise ValueError(f"missing parameter {key!r}")
    return default


GALLERY = {
    "hexagon": lambda p: hexagon_Z6(),
    "bad_square": lambda p: bad_square_Z2(bool(_int(p, "pyramid", 0))),
    "bad_reflexive": lambda p: bad_reflexive_Z2(),
    "hypercube": lambda p: hypercube_instance(_int(p, "d"), str(p.get("group", "S"))),
    "simplex": lambda p: standard_reflexive_simplex(_int(p, "n")),
    "cross": lambda p: cross_family(_int(p, "k"), _int(p, "d")),
}


def gallery_instance(name: str, params: dict | None = None) -> EquivariantInstance:
    if name not in GALLERY:
        raise KeyError(f"unknown example {name!r}; choose from {sorted(GALLERY)}")
    return GALLERY[name](params or {})


def default_gallery() -> list[EquivariantInstance]:
    """The instances swept by the property suite."""
    out = [hexagon_Z6(), bad_square_Z2(), bad_square_Z2(pyramid=True), bad_reflexive_Z2(),
           hypercube_instance(2, "B")]
    out += [hypercube_instance(d) for d in (2, 3, 4)]
    out += [standard_reflexive_simplex(n) for n in (2, 3)]
    out += [cross_family(k, d) for k, d in ((0, 2), (0, 3), (0, 4), (1, 2), (2, 4), (1, 3), (1, 4))]
    return out


# --------------------------------------------------------------------------
# example-specific checks for the property suite


def _hexagon_checks(inst):
    H = equivariant_hstar(inst)
    got = [[m.as_rational() for m in H.table.decompose(cf)] for cf in H.coefficients]
    c = inst.group.class_of[inst.group.index[inst.expected["generator"]]]
    # columns of the expected matrix are powers of the character sending the generator to zeta_6
    order = [next(j for j in range(len(H.table)) if H.table[j][c] == CyclotomicValue.zeta(6, k))
             for k in range(6)]
    want = inst.expected["multiplicities"]
    ok = all(got[i][order[k]] == want[i][k] for i in range(3) for k in range(6))
    ok = ok and H.per_class[c] == RationalFunction(inst.expected["phi_at_generator"])
    return ok, f"multiplicities {[[str(x) for x in row] for row in got]}"


def _hypercube_checks(inst):
    d = inst.params["d"]
    H = equivariant_hstar(inst)
    G = inst.group
    basis = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    for c in range(G.num_classes):
        mu = cycle_type(induced_permutation(G.representative(c), basis))
        if H.per_class[c] != RationalFunction(hypercube_char_formula(d, mu)):
            return False, f"class {c} (cycle type {mu}) differs from the product formula"
    iso = inst.expected["isotypic"]
    degree = H.degree
    for j, label in enumerate(H.table.labels):
        poly = IntPolynomial([H.table.decompose(H.coefficients[i])[j].as_rational()
                              for i in range(degree + 1)])
        if poly != iso[label]:
            return False, f"isotypic component {label}: {poly} != {iso[label]}"
    total = IntPolynomial()
    for lam in partitions(d):
        total = total + marked_tableaux_polynomial(lam) * character_degree(lam)
    if total != eulerian_polynomial(d):
        return False, "dimension sums differ from the Eulerian numbers"
    expansion = inst.expected.get("phi_expansion")
    if expansion is not None:
        for i, row in enumerate(expansion):
            m = H.table.decompose(H.coefficients[i])
            for j, label in enumerate(H.table.labels):
                if m[j].as_rational() != row.get(label, 0):
                    return False, f"phi_{i} differs from the reference expansion at {label}"
    return True, ""


def _breakdown_checks(inst):
    H = equivariant_hstar(inst)
    if H.per_class != inst.expected["phi_breakdown"]:
        return False, "per-class values differ from the closed formula"
    S = hypercube_instance(2, "S")
    HS = equivariant_hstar(S)
    for c in range(S.num_classes):
        g = S.group.representative(c)
        cb = inst.group.class_of[inst.group.index[g]]
        if HS.per_class[c] != H.per_class[cb] or HS.per_class[c] != RationalFunction(IntPolynomial([1, 1])):
            return False, "restriction to Sym_2 is not 1 + t"
    return True, ""


def _bad_reflexive_checks(inst):
    H = equivariant_hstar(inst)
    a, b = inst.expected["components"]
    tau = 1  # the only non-identity class
    ok = inst.hstar_ordinary == inst.expected["hstar"] and H.per_class[0] == a + b \
        and H.per_class[tau] == a - b
    return ok, ""


def _simplex_checks(inst):
    n = inst.params["n"]
    H = equivariant_hstar(inst)
    want = RationalFunction(inst.expected["phi"])
    if any(f != want for f in H.per_class):
        return False, "phi differs from 1 + t + ... + t^(2n-1)"
    pip = pip_family(n)
    bad = [m for m in range(21) if pip.fixed.count_lattice_points(m) != pip.expected_count(m)]
    if bad:
        return False, f"fixed-polytope counts differ at m = {bad}"
    from .ehrhart import quasi_polynomial
    return quasi_polynomial(pip.fixed).period == 1, "minimal period of the fixed polytope"


def _cross_checks(inst):
    k, d = inst.params["k"], inst.params["d"]
    if inst.hstar_ordinary != inst.expected["hstar"]:
        return False, f"h* = {inst.hstar_ordinary}"
    if d - 2 * k >= 1 and d >= 2:
        first = cross_family(k, 2 * k) if k else interval_instance()
        second = cross_family(0, d - 2 * k) if k else cross_family(0, d - 1)
        res = free_sum_identity_check(first, second)
        if not res.ok:
            return False, res.detail
        base = equivariant_hstar(first)
        mine = equivariant_hstar(inst)
        extra = IntPolynomial([1, 1]) ** (d - 2 * k - (0 if k else 1))
        for c in range(inst.num_classes):
            if mine.per_class[c] != base.per_class[c] * RationalFunction(extra):
                return False, f"phi differs from phi_V(2k,2k) (1 + t)^(d - 2k) on class {c}"
    return True, ""


def gallery_checks(inst):
    """Checks tied to a named example (empty for other instances)."""
    example = inst.params.get("example")
    if example == "hexagon":
        return [("hexagon reference values", lambda: _hexagon_checks(inst))]
    if example == "hypercube" and inst.params["group"] == "S":
        return [("hypercube formulas and marked tableaux", lambda: _hypercube_checks(inst))]
    if example == "hypercube" and inst.params["d"] == 2:
        return [("square under B_2", lambda: _breakdown_checks(inst))]
    if example == "bad_reflexive":
        return [("rational components over 1 + t", lambda: _bad_reflexive_checks(inst))]
    if example == "simplex":
        return [("standard reflexive simplex and PIP", lambda: _simplex_checks(inst))]
    if example == "cross":
        return [("V(2k, d) formulas and free sums", lambda: _cross_checks(inst))]
    return []
