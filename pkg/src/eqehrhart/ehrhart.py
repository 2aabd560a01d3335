"""Classical Ehrhart theory of rational polytopes.

The Ehrhart series of ``Q`` with denominator ``r`` and dimension ``D`` is
``N(t) / (1 - t**r)**(D + 1)`` with ``deg N < r (D + 1)``.  The numerator is
recovered from ``r (D + 1)`` lattice-point counts and checked against ``r``
further counts.  Quasi-polynomials are interpolated from the exact series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_arith import IntPolynomial, RationalFunction, divisors, poly_series_quotient
from .intlinalg import solve
from .polytope import RationalPolytope


class VerificationMismatch(ArithmeticError):
    """A recomputed count disagrees with the value predicted by the series."""


@dataclass(frozen=True)
class EhrhartSeries:
    dim: int
    period: int
    numerator: IntPolynomial
    counts: tuple  # f(0), f(1), ... used to build and verify the series

    def rational_function(self) -> RationalFunction:
        return RationalFunction.from_factored(self.numerator, [(self.period, self.dim + 1)])

    def coefficients(self, k: int) -> list[int]:
        return poly_series_quotient(self.numerator, [(self.period, self.dim + 1)], k)

    def hstar(self) -> IntPolynomial:
        """``h*`` for lattice polytopes (period one)."""
        if self.period != 1:
            raise ValueError("h* is defined for lattice polytopes; use the rational form")
        return self.numerator


def ehrhart_series(Q: RationalPolytope) -> EhrhartSeries:
    r = Q.denominator()
    D = Q.dim
    n_fit = r * (D + 1)
    counts = [Q.count_lattice_points(m) for m in range(n_fit + r)]
    prefix = IntPolynomial(counts[:n_fit])
    den = (IntPolynomial.one() - IntPolynomial.monomial(r)) ** (D + 1)
    prod = prefix * den
    numerator = IntPolynomial([prod[i] for i in range(n_fit)])
    predicted = poly_series_quotient(numerator, den, n_fit + r)
    if predicted != counts:
        bad = next(m for m, (a, b) in enumerate(zip(predicted, counts)) if a != b)
        raise VerificationMismatch(f"series predicts {predicted[bad]} points at m={bad}, "
                                   f"enumeration found {counts[bad]}")
    return EhrhartSeries(D, r, numerator, tuple(counts))


class QuasiPolynomial:
    """``f(m) = g_{m mod s}(m)`` with rational polynomials ``g_i`` (ascending coefficients)."""

    def __init__(self, constituents: Sequence[Sequence]):
        cons = [tuple(Fraction(c) for c in g) for g in constituents]
        width = max((len(g) for g in cons), default=0)
        cons = [g + (Fraction(0),) * (width - len(g)) for g in cons]
        while width and all(g[-1] == 0 for g in cons):
            cons = [g[:-1] for g in cons]
            width -= 1
        self.constituents = cons
        self.period = len(cons)

    @property
    def degree(self) -> int:
        return max((len(g) - 1 for g in self.constituents if any(g)), default=-1)

    def __call__(self, m: int) -> Fraction:
        g = self.constituents[m % self.period]
        acc = Fraction(0)
        for c in reversed(g):
            acc = acc * m + c
        return acc

    def coefficient(self, i: int, m: int) -> Fraction:
        """Coefficient of ``m**i`` in the constituent used at ``m``."""
        g = self.constituents[m % self.period]
        return g[i] if i < len(g) else Fraction(0)

    def minimal(self) -> "QuasiPolynomial":
        for s in divisors(self.period):
            if all(self.constituents[i] == self.constituents[i % s] for i in range(self.period)):
                return QuasiPolynomial(self.constituents[:s])
        return self

    def is_polynomial(self) -> bool:
        return self.minimal().period == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuasiPolynomial):
            return NotImplemented
        a, b = self.minimal(), other.minimal()
        return a.constituents == b.constituents

    def combine(self, other: "QuasiPolynomial", a, b) -> "QuasiPolynomial":
        """``a * self + b * other`` on the common period."""
        from .exact_arith import lcm
        s = lcm(self.period, other.period)
        cons = []
        for i in range(s):
            g1 = self.constituents[i % self.period]
            g2 = other.constituents[i % other.period]
            w = max(len(g1), len(g2))
            g1 = g1 + (Fraction(0),) * (w - len(g1))
            g2 = g2 + (Fraction(0),) * (w - len(g2))
            cons.append([a * x + b * y for x, y in zip(g1, g2)])
        return QuasiPolynomial(cons)

    def __repr__(self) -> str:
        return f"QuasiPolynomial(period={self.period}, constituents={self.render()})"

    def render(self, var: str = "m") -> list[str]:
        out = []
        for g in self.constituents:
            text = ""
            for i, c in enumerate(g):
                if not c:
                    continue
                mag = abs(c)
                coef = f"{mag.numerator}" if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
                term = coef if i == 0 else f"{coef}*{var}" + (f"^{i}" if i > 1 else "")
                if not text:
                    text = ("-" if c < 0 else "") + term
                else:
                    text += (" - " if c < 0 else " + ") + term
            out.append(text or "0")
        return out


def interpolate(points: Sequence[tuple[int, Fraction]]) -> list[Fraction]:
    """Coefficients of the unique polynomial of degree < len(points) through them."""
    k = len(points)
    a = [[Fraction(x) ** j for j in range(k)] for x, _ in points]
    sol = solve(a, [y for _, y in points])
    if sol is None:
        raise ArithmeticError("interpolation nodes are not distinct")
    return sol


def quasi_polynomial_from_values(values: Sequence, period: int, degree: int) -> QuasiPolynomial:
    """Interpolate each residue class from ``values[m]``, ``m = 0, 1, ...``.

    Needs ``period * (degree + 1)`` values; any further values are checked.
    """
    cons = []
    for i in range(period):
        nodes = [(m, Fraction(values[m])) for m in range(i, len(values), period)]
        if len(nodes) < degree + 1:
            raise ValueError("not enough values to interpolate")
        g = interpolate(nodes[: degree + 1])
        for m, y in nodes[degree + 1:]:
            if sum(c * Fraction(m) ** j for j, c in enumerate(g)) != y:
                raise VerificationMismatch(f"residue {i} is not polynomial of degree {degree}")
        cons.append(g)
    return QuasiPolynomial(cons).minimal()


def quasi_polynomial(Q: RationalPolytope, series: EhrhartSeries | None = None) -> QuasiPolynomial:
    S = series or ehrhart_series(Q)
    r, D = S.period, S.dim
    values = S.coefficients(r * (D + 2))
    qp = quasi_polynomial_from_values(values, r, D)
    if qp(0) != 1:
        raise VerificationMismatch("quasi-polynomial does not take the value 1 at 0")
    return qp


def reciprocity_check(Q: RationalPolytope, horizon: int | None = None
                      ) -> tuple[bool, int | None]:
    """``f(-m) == (-1)**dim * interior count of mQ`` for ``m = 1..horizon``."""
    qp = quasi_polynomial(Q)
    D = Q.dim
    r = Q.denominator()
    H = horizon if horizon is not None else (D + 1) * r + 2
    for m in range(1, H + 1):
        if qp(-m) * (-1) ** D != Q.count_lattice_points(m, interior=True):
            return False, m
    return True, None


@dataclass(frozen=True)
class HStarData:
    hstar: IntPolynomial
    dim: int

    @property
    def degree(self) -> int:
        return self.hstar.degree

    @property
    def codegree(self) -> int:
        return self.dim + 1 - self.degree


def hstar_data(P: RationalPolytope) -> HStarData:
    if not P.is_lattice():
        raise ValueError("h* data needs a lattice polytope")
    return HStarData(ehrhart_series(P).hstar(), P.dim)


def eulerian_polynomial(d: int) -> IntPolynomial:
    """``A(d; t) = sum_i A(d, i) t**i`` with ``A(d, i)`` permutations with ``i`` descents."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    row = [1]
    for n in range(1, d + 1):
        new = [0] * n
        for k in range(n):
            left = (k + 1) * row[k] if k < len(row) else 0
            right = (n - k) * row[k - 1] if 0 < k <= len(row) else 0
            new[k] = left + right
        row = new
    return IntPolynomial(row)
