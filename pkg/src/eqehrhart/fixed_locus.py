"""Fixed polytopes ``P_g = {u in P : g u = u}`` via orbit barycenters of vertices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .intlinalg import fixed_space_dimension
from .lattice_group import AffineLatticeAutomorphism
from .polytope import RationalPolytope


class NotInvariant(ValueError):
    """A group element does not permute the vertices of the polytope."""

    def __init__(self, message: str, element=None, vertex=None):
        super().__init__(message)
        self.element = element
        self.vertex = vertex


@dataclass(frozen=True)
class FixedPolytopeRecord:
    element: AffineLatticeAutomorphism
    polytope: RationalPolytope
    fixed_dim: int
    index: int
    denominator: int

    @property
    def dim(self) -> int:
        return self.polytope.dim

    def is_lattice(self) -> bool:
        return self.denominator == 1


def check_invariant(P: RationalPolytope, g: AffineLatticeAutomorphism) -> None:
    """Raise :class:`NotInvariant` unless ``g`` permutes the vertices of ``P``."""
    verts = set(P.vertices)
    for v in P.vertices:
        if g.apply(v) not in verts:
            raise NotInvariant(f"{g!r} sends vertex {list(map(str, v))} outside the vertex set",
                               element=g, vertex=v)


def vertex_orbits(P: RationalPolytope, elements: Iterable[AffineLatticeAutomorphism]
                  ) -> list[list[tuple]]:
    """Orbits of the vertices under the group generated by ``elements``."""
    gens = list(elements)
    remaining = list(P.vertices)
    seen = set()
    orbits = []
    for v in remaining:
        if v in seen:
            continue
        orbit = [v]
        seen.add(v)
        stack = [v]
        while stack:
            u = stack.pop()
            for g in gens:
                w = g.apply(u)
                if w not in seen:
                    seen.add(w)
                    orbit.append(w)
                    stack.append(w)
        orbits.append(orbit)
    return orbits


def barycenter(points: Sequence[Sequence]) -> tuple:
    n = len(points)
    return tuple(sum((Fraction(p[i]) for p in points), Fraction(0)) / n
                 for i in range(len(points[0])))


def fixed_polytope_of(P: RationalPolytope, elements: Iterable[AffineLatticeAutomorphism]
                      ) -> RationalPolytope:
    """Points of ``P`` fixed by every element: hull of vertex-orbit barycenters."""
    gens = list(elements)
    for g in gens:
        check_invariant(P, g)
    return RationalPolytope([barycenter(o) for o in vertex_orbits(P, gens)], P.ambient_dim)


def fixed_subspace_dimension(g: AffineLatticeAutomorphism) -> int:
    """``dim M^g``: nullity of ``rho(g) - I`` over Q."""
    return fixed_space_dimension([list(r) for r in g.linear])


def fixed_polytope(P: RationalPolytope, g: AffineLatticeAutomorphism) -> FixedPolytopeRecord:
    Pg = fixed_polytope_of(P, [g])
    return FixedPolytopeRecord(element=g, polytope=Pg, fixed_dim=fixed_subspace_dimension(g),
                               index=Pg.index(), denominator=Pg.denominator())
