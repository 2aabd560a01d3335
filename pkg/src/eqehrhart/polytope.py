"""Exact rational polytopes given by points, with lattice-point enumeration.

Facets are found by brute force over affinely independent subsets of the
input points, working in a coordinate projection that is injective on the
affine span.  Lattice points of a dilate ``mQ`` are enumerated in an integer
parametrisation ``x = x0 + K y`` of ``aff(mQ) & Z^n``: a box scan over all but
the last ``y`` coordinate, with the last coordinate read off as an interval.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import ceil, floor, gcd, prod
from typing import Iterable, Sequence

import numpy as np

from .exact_arith import lcm
from .intlinalg import (det, integer_solutions, inverse, lll_reduce, nullspace, primitive,
                        rank, rref, solve)

Point = tuple  # tuple of Fraction

# rows handled per vectorised block in the counting kernel
_BLOCK_ROWS = 1 << 18


class NotFullDimensional(ValueError):
    pass


class EmptyPolytope(ValueError):
    pass


def _as_point(v: Iterable) -> Point:
    return tuple(Fraction(x) for x in v)


def _is_integral(v: Sequence[Fraction]) -> bool:
    return all(Fraction(x).denominator == 1 for x in v)


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


class RationalPolytope:
    """Convex hull of finitely many rational points in ``Q^n``.

    ``vertices`` holds the extreme points only, in the order they first occur
    in the input.  Inequalities are ``a . x <= b`` with ``a`` a primitive
    integer vector; equations ``e . x == c`` cut out the affine span.
    """

    def __init__(self, points: Iterable[Iterable], ambient_dim: int | None = None):
        pts: list[Point] = []
        seen = set()
        for p in points:
            q = _as_point(p)
            if q not in seen:
                seen.add(q)
                pts.append(q)
        if not pts:
            raise EmptyPolytope("a polytope needs at least one point")
        n = len(pts[0]) if ambient_dim is None else ambient_dim
        if any(len(p) != n for p in pts):
            raise ValueError("points of mixed dimension")
        self.ambient_dim = n
        self._counts: dict[tuple[int, bool], int] = {}
        base = pts[0]
        diffs = [[p[i] - base[i] for i in range(n)] for p in pts[1:]]
        reduced, pivots = rref(diffs) if diffs else ([], [])
        self.dim = len(pivots)
        self._pivots = pivots
        # affine span equations: normals orthogonal to all differences
        normals = nullspace(reduced[: self.dim], n) if self.dim else \
            [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        self.equations: list[tuple[list[int], Fraction]] = []
        for v in normals:
            a = primitive(v)
            self.equations.append((a, _dot(a, base)))
        self._find_facets(pts)

    # ------------------------------------------------------------------
    # construction

    def _project(self, p: Point) -> list[Fraction]:
        return [p[i] for i in self._pivots]

    def _find_facets(self, pts: list[Point]) -> None:
        D = self.dim
        n = self.ambient_dim
        if D == 0:
            self.vertices = [pts[0]]
            self.inequalities: list[tuple[list[int], Fraction]] = []
            self.facet_vertex_sets: list[frozenset] = []
            return
        proj = [self._project(p) for p in pts]
        scale = lcm(*(x.denominator for p in proj for x in p))
        ipts = [[int(x * scale) for x in p] for p in proj]
        found: dict[tuple, None] = {}
        for combo in combinations(range(len(ipts)), D):
            p0 = ipts[combo[0]]
            rows = [[ipts[i][j] - p0[j] for j in range(D)] for i in combo[1:]]
            normal = []
            for j in range(D):
                minor = [r[:j] + r[j + 1:] for r in rows]
                normal.append((-1) ** j * int(det(minor)) if minor else 1)
            g = 0
            for x in normal:
                g = gcd(g, x)
            if g == 0:
                continue
            normal = [x // g for x in normal]
            c = _dot(normal, p0)
            vals = [_dot(normal, q) - c for q in ipts]
            if all(v <= 0 for v in vals):
                pass
            elif all(v >= 0 for v in vals):
                normal = [-x for x in normal]
                c = -c
            else:
                continue
            found[(tuple(normal), c)] = None
        facets = list(found)
        # vertices: points whose tight facet normals span Q^D
        vertex_idx = []
        for i, q in enumerate(ipts):
            tight = [list(nm) for nm, c in facets if _dot(nm, q) == c]
            if len(tight) >= D and rank(tight) == D:
                vertex_idx.append(i)
        self.vertices = [pts[i] for i in vertex_idx]
        self.inequalities = []
        self.facet_vertex_sets = []
        for nm, c in facets:
            a = [0] * n
            for j, piv in enumerate(self._pivots):
                a[piv] = nm[j]
            self.inequalities.append((a, Fraction(c, scale)))
            self.facet_vertex_sets.append(frozenset(
                k for k, i in enumerate(vertex_idx) if _dot(nm, ipts[i]) == c))
        order = sorted(range(len(facets)), key=lambda k: (self.inequalities[k][0],
                                                          self.inequalities[k][1]))
        self.inequalities = [self.inequalities[k] for k in order]
        self.facet_vertex_sets = [self.facet_vertex_sets[k] for k in order]

    # ------------------------------------------------------------------
    # basic invariants

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def is_simplex(self) -> bool:
        return self.num_vertices == self.dim + 1

    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    def is_lattice(self) -> bool:
        return all(_is_integral(v) for v in self.vertices)

    def denominator(self) -> int:
        return lcm(*(x.denominator for v in self.vertices for x in v))

    @cached_property
    def _span_lattice(self):
        """Integer kernel ``K`` of the equations and the pivot-row inverse."""
        E = [a for a, _ in self.equations]
        n = self.ambient_dim
        if E:
            sol = integer_solutions(E, [0] * len(E), n)
            kernel = sol[1]
        else:
            kernel = [[int(i == j) for j in range(n)] for i in range(n)]
        kernel = lll_reduce(kernel) if kernel else []
        # K has columns = kernel vectors; choose D independent rows for inversion
        cols = kernel
        D = len(cols)
        if D:
            rows_mat = [[cols[j][i] for j in range(D)] for i in range(n)]
            _, piv_rows = rref([list(r) for r in zip(*rows_mat)])
            sub = [rows_mat[i] for i in piv_rows]
            sub_inv = inverse(sub)
        else:
            piv_rows, sub_inv = [], []
        return cols, piv_rows, sub_inv

    def index(self) -> int:
        """Least ``m >= 1`` such that ``aff(mQ)`` contains a lattice point."""
        E = [a for a, _ in self.equations]
        rhs = [c for _, c in self.equations]
        bound = self.denominator()
        for m in range(1, bound + 1):
            if integer_solutions(E, [m * c for c in rhs], self.ambient_dim) is not None:
                return m
        raise ArithmeticError("index exceeds the denominator")

    def contains(self, x: Sequence, strict: bool = False) -> bool:
        """Membership (relative interior when ``strict``)."""
        x = _as_point(x)
        if any(_dot(a, x) != c for a, c in self.equations):
            return False
        if strict:
            return all(_dot(a, x) < b for a, b in self.inequalities)
        return all(_dot(a, x) <= b for a, b in self.inequalities)

    # ------------------------------------------------------------------
    # faces

    @cached_property
    def face_lattice(self) -> list[tuple[frozenset, int]]:
        """All faces as ``(vertex index set, dimension)`` including empty and P."""
        top = frozenset(range(self.num_vertices))
        faces = {top}
        frontier = set(self.facet_vertex_sets)
        while frontier:
            faces |= frontier
            nxt = set()
            for f in frontier:
                for g in self.facet_vertex_sets:
                    h = f & g
                    if h not in faces:
                        nxt.add(h)
            frontier = nxt
        faces.add(frozenset())
        out = [(f, self._face_dim(f)) for f in faces]
        out.sort(key=lambda fd: (fd[1], sorted(fd[0])))
        return out

    def _face_dim(self, f: frozenset) -> int:
        if not f:
            return -1
        idx = sorted(f)
        base = self.vertices[idx[0]]
        diffs = [[self.vertices[i][k] - base[k] for k in range(self.ambient_dim)] for i in idx[1:]]
        return rank(diffs) if diffs else 0

    def faces(self, dim: int | None = None) -> list[frozenset]:
        return [f for f, d in self.face_lattice if dim is None or d == dim]

    def face_polytope(self, f: Iterable[int]) -> "RationalPolytope":
        return RationalPolytope([self.vertices[i] for i in sorted(f)], self.ambient_dim)

    # ------------------------------------------------------------------
    # lattice points

    def _dilate_system(self, m: int, strict: bool):
        """Integer data for ``mQ & Z^n``, or None when the affine span misses Z^n."""
        cols, piv_rows, sub_inv = self._span_lattice
        E = [a for a, _ in self.equations]
        n = self.ambient_dim
        if E:
            sol = integer_solutions(E, [m * c for c in (c for _, c in self.equations)], n)
            if sol is None:
                return None
            x0 = sol[0]
        else:
            x0 = [0] * n
        D = len(cols)
        alphas, rhs = [], []
        for a, b in self.inequalities:
            alpha = [_dot(a, col) for col in cols]
            r = m * b - _dot(a, x0)
            bound = (ceil(r) - 1) if strict else floor(r)
            alphas.append(alpha)
            rhs.append(bound)
        # bounding box of the vertices in y coordinates
        lo, hi = [], []
        ys = []
        for v in self.vertices:
            t = [m * v[i] - x0[i] for i in piv_rows]
            ys.append([_dot(sub_inv[j], t) for j in range(D)])
        for j in range(D):
            lo.append(ceil(min(y[j] for y in ys)))
            hi.append(floor(max(y[j] for y in ys)))
        return x0, cols, alphas, rhs, lo, hi

    def _scan(self, m: int, strict: bool, collect: bool):
        if m == 0:
            if strict:
                return (0, []) if collect else 0
            origin = [tuple([0] * self.ambient_dim)]
            return (1, origin) if collect else 1
        if self.dim == 0:
            p = [m * x for x in self.vertices[0]]
            if _is_integral(p):
                return (1, [tuple(int(x) for x in p)]) if collect else 1
            return (0, []) if collect else 0
        system = self._dilate_system(m, strict)
        if system is None:
            return (0, []) if collect else 0
        x0, cols, alphas, rhs, lo, hi = system
        return _count_box(x0, cols, alphas, rhs, lo, hi, collect)

    def count_lattice_points(self, m: int = 1, interior: bool = False) -> int:
        if m < 0:
            raise ValueError("dilation factor must be nonnegative")
        key = (m, interior)
        if key not in self._counts:
            self._counts[key] = self._scan(m, interior, False)
        return self._counts[key]

    def scan_cost(self, m: int) -> int:
        """Rows the counting kernel visits for ``mQ`` (a work estimate)."""
        if m == 0 or self.dim == 0:
            return 1
        system = self._dilate_system(m, False)
        if system is None:
            return 1
        lo, hi = system[4], system[5]
        return prod(max(h - l + 1, 0) for l, h in zip(lo[:-1], hi[:-1]))

    def lattice_points(self, m: int = 1, interior: bool = False) -> list[tuple[int, ...]]:
        """Lattice points of ``mQ`` (relative interior when ``interior``), sorted."""
        if m < 0:
            raise ValueError("dilation factor must be nonnegative")
        _, pts = self._scan(m, interior, True)
        return sorted(pts)

    def interior_lattice_points(self, m: int = 1) -> list[tuple[int, ...]]:
        if m < 1:
            raise ValueError("interior points need m >= 1")
        return self.lattice_points(m, interior=True)

    # ------------------------------------------------------------------
    # volume

    def triangulation(self) -> list[list[int]]:
        """Pulling triangulation: simplices as lists of vertex indices."""
        faces = self.face_lattice

        def subfaces(f: frozenset, d: int) -> list[frozenset]:
            return [g for g, e in faces if e == d - 1 and g < f]

        def tri(f: frozenset, d: int) -> list[list[int]]:
            if d == 0:
                return [[min(f)]]
            apex = min(f)
            out = []
            for g in subfaces(f, d):
                if apex in g:
                    continue
                for s in tri(g, d - 1):
                    out.append([apex] + s)
            return out

        return tri(frozenset(range(self.num_vertices)), self.dim)

    def _span_coordinates(self, v: Sequence) -> list[Fraction]:
        """Coordinates of a direction vector in the kernel lattice basis."""
        cols, piv_rows, sub_inv = self._span_lattice
        t = [v[i] for i in piv_rows]
        return [_dot(sub_inv[j], t) for j in range(len(cols))]

    def normalized_volume(self) -> Fraction:
        """Volume inside the affine span, a fundamental cell of its lattice having volume 1."""
        D = self.dim
        if D == 0:
            return Fraction(1)
        total = Fraction(0)
        fact = prod(range(1, D + 1))
        for simplex in self.triangulation():
            base = self.vertices[simplex[0]]
            rows = [self._span_coordinates([self.vertices[i][k] - base[k]
                                            for k in range(self.ambient_dim)])
                    for i in simplex[1:]]
            total += abs(Fraction(det(rows)))
        return total / fact

    # ------------------------------------------------------------------
    # reflexivity

    def is_reflexive(self) -> bool:
        """Full-dimensional lattice polytope with every facet ``a . x <= 1``."""
        if not self.is_full_dimensional():
            raise NotFullDimensional("reflexivity needs a full-dimensional polytope")
        if not self.is_lattice():
            return False
        return all(b == 1 for _, b in self.inequalities)

    def is_translate_of_reflexive(self) -> bool:
        """Shift by the unique interior lattice point (if any) and test reflexivity."""
        if not self.is_full_dimensional():
            raise NotFullDimensional("reflexivity needs a full-dimensional polytope")
        if not self.is_lattice():
            return False
        inner = self.interior_lattice_points(1)
        if len(inner) != 1:
            return False
        return self.translate([-x for x in inner[0]]).is_reflexive()

    # ------------------------------------------------------------------
    # constructions

    def translate(self, v: Sequence) -> "RationalPolytope":
        return RationalPolytope([[x + y for x, y in zip(p, v)] for p in self.vertices],
                                self.ambient_dim)

    def dilate(self, m) -> "RationalPolytope":
        return RationalPolytope([[m * x for x in p] for p in self.vertices], self.ambient_dim)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPolytope):
            return NotImplemented
        return sorted(self.vertices) == sorted(other.vertices)

    def __hash__(self):
        return hash(tuple(sorted(self.vertices)))

    def __repr__(self) -> str:
        return f"RationalPolytope(dim={self.dim}, vertices={len(self.vertices)})"


def _count_box(x0, cols, alphas, rhs, lo, hi, collect: bool):
    """Count (and optionally list) integer ``y`` in the box with ``alpha . y <= rhs``."""
    D = len(cols)
    if any(l > h for l, h in zip(lo, hi)):
        return (0, []) if collect else 0
    A = np.array(alphas, dtype=np.int64).reshape(len(alphas), D)
    R = np.array(rhs, dtype=np.int64)
    last = A[:, D - 1]
    zero, pos, neg = last == 0, last > 0, last < 0
    Kmat = np.array(cols, dtype=np.int64).T  # n x D
    x0v = np.array(x0, dtype=np.int64)
    total = 0
    points: list[tuple[int, ...]] = []

    def block(prefix: list[int], grid: np.ndarray):
        nonlocal total
        # grid: rows of coordinates for y[len(prefix) : D-1]
        if prefix:
            head = np.broadcast_to(np.array(prefix, dtype=np.int64), (grid.shape[0], len(prefix)))
            rows = np.hstack([head, grid]) if grid.shape[1] else head.copy()
        else:
            rows = grid
        S = rows @ A[:, : D - 1].T if D > 1 else np.zeros((rows.shape[0], len(alphas)), np.int64)
        slack = R[None, :] - S
        ok = np.all(slack[:, zero] >= 0, axis=1)
        if pos.any():
            upper = np.min(np.floor_divide(slack[:, pos], last[pos][None, :]), axis=1)
        else:
            upper = np.full(rows.shape[0], hi[D - 1], dtype=np.int64)
        if neg.any():
            lower = np.max(-np.floor_divide(slack[:, neg], -last[neg][None, :]), axis=1)
        else:
            lower = np.full(rows.shape[0], lo[D - 1], dtype=np.int64)
        counts = np.where(ok, np.maximum(upper - lower + 1, 0), 0)
        total += int(counts.sum())
        if collect and counts.any():
            sel = counts > 0
            reps = counts[sel]
            base_rows = np.repeat(rows[sel], reps, axis=0)
            starts = np.repeat(lower[sel], reps)
            offsets = np.arange(int(reps.sum())) - np.repeat(np.cumsum(reps) - reps, reps)
            ylast = (starts + offsets)[:, None]
            y = np.hstack([base_rows, ylast])
            x = y @ Kmat.T + x0v[None, :]
            points.extend(tuple(int(v) for v in row) for row in x)

    def recurse(prefix: list[int]):
        k = len(prefix)
        remaining = D - 1 - k
        size = 1
        for j in range(k, D - 1):
            size *= hi[j] - lo[j] + 1
        if size <= _BLOCK_ROWS or remaining <= 1:
            axes = [np.arange(lo[j], hi[j] + 1, dtype=np.int64) for j in range(k, D - 1)]
            if axes:
                mesh = np.meshgrid(*axes, indexing="ij")
                grid = np.stack([g.ravel() for g in mesh], axis=1)
            else:
                grid = np.zeros((1, 0), dtype=np.int64)
            block(prefix, grid)
            return
        for v in range(lo[k], hi[k] + 1):
            recurse(prefix + [v])

    recurse([])
    return (total, points) if collect else total


# --------------------------------------------------------------------------
# membership by convex combinations (independent of the facet description)


def in_convex_hull(points: Sequence[Sequence], x: Sequence) -> bool:
    """Exact test whether ``x`` is a convex combination of ``points``.

    Uses Caratheodory: ``x`` lies in the hull iff it lies in some simplex
    spanned by affinely independent points, found by solving barycentric
    systems.
    """
    pts = [_as_point(p) for p in points]
    x = _as_point(x)
    n = len(x)
    base = pts[0]
    dim = rank([[p[i] - base[i] for i in range(n)] for p in pts[1:]]) if len(pts) > 1 else 0
    for combo in combinations(range(len(pts)), dim + 1):
        # sum l_i p_i = x, sum l_i = 1
        a = [[pts[i][r] for i in combo] for r in range(n)] + [[1] * (dim + 1)]
        b = list(x) + [1]
        lam = solve(a, b)
        if lam is None:
            continue
        if rank([[pts[i][r] - pts[combo[0]][r] for r in range(n)] for i in combo[1:]]) != dim:
            continue
        if all(v >= 0 for v in lam):
            return True
    return False


# --------------------------------------------------------------------------
# constructions


def product(P: RationalPolytope, Q: RationalPolytope) -> RationalPolytope:
    return RationalPolytope([tuple(p) + tuple(q) for p in P.vertices for q in Q.vertices])


def free_sum(P: RationalPolytope, Q: RationalPolytope) -> RationalPolytope:
    """``conv(P x 0, 0 x Q)``; both polytopes must contain their origin."""
    zp = (Fraction(0),) * P.ambient_dim
    zq = (Fraction(0),) * Q.ambient_dim
    if not P.contains(zp) or not Q.contains(zq):
        raise ValueError("free sum needs both polytopes to contain the origin")
    return RationalPolytope([tuple(p) + zq for p in P.vertices] +
                            [zp + tuple(q) for q in Q.vertices])


def pyramid(P: RationalPolytope) -> RationalPolytope:
    """Convex hull of ``P x {1}`` and the origin of the lifted lattice."""
    return RationalPolytope([tuple(p) + (Fraction(1),) for p in P.vertices] +
                            [(Fraction(0),) * (P.ambient_dim + 1)])


def dilate(P: RationalPolytope, m) -> RationalPolytope:
    return P.dilate(m)


def facet_description(P: RationalPolytope):
    return P.inequalities, P.equations


def lattice_points(P: RationalPolytope, m: int = 1):
    return P.lattice_points(m)


def interior_lattice_points(P: RationalPolytope, m: int = 1):
    return P.interior_lattice_points(m)


def normalized_volume(P: RationalPolytope) -> Fraction:
    return P.normalized_volume()


def is_reflexive(P: RationalPolytope) -> bool:
    return P.is_reflexive()
