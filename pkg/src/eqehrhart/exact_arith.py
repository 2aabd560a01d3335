"""Exact scalar and univariate polynomial arithmetic.

Rationals are :class:`fractions.Fraction`.  Polynomials are immutable
ascending coefficient tuples wrapped in :class:`IntPolynomial`.  Rational
functions keep their denominators as products of cyclotomic factors, which
covers every denominator of the form ``(1 - t**a)**b``.  Character values live
in :class:`CyclotomicValue`.
"""

from __future__ import annotations

import cmath
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Fraction",
    "IntPolynomial",
    "RationalFunction",
    "CyclotomicValue",
    "PoleError",
    "cyclotomic_polynomial",
    "cyclotomic_factor",
    "poly_series_quotient",
    "rational_function_eval_at_one",
    "divisors",
    "euler_phi",
    "lcm",
    "render_fraction",
]


class PoleError(ArithmeticError):
    """Raised when a rational function is evaluated at one of its poles."""


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def render_fraction(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _trim(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Univariate polynomial in ``t`` with integer coefficients, ascending order.

    Coefficients may temporarily be Fractions (e.g. after scalar division);
    ``is_integral`` tells which case applies.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = []
        for a in coeffs:
            a = Fraction(a) if not isinstance(a, int) else a
            if isinstance(a, Fraction) and a.denominator == 1:
                a = a.numerator
            c.append(a)
        object.__setattr__(self, "coeffs", _trim(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls([1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(a, int) for a in self.coeffs)

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        if isinstance(other, (list, tuple)):
            other = IntPolynomial(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.render()

    def render(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mag = abs(a)
            if i == 0:
                body = render_fraction(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{render_fraction(mag)}{mono}"
            parts.append(("-" if a < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other) -> "IntPolynomial":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-a for a in self.coeffs)

    def __sub__(self, other) -> "IntPolynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "IntPolynomial":
        return _as_poly(other) - self

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, (int, Fraction)):
            return IntPolynomial(a * other for a in self.coeffs)
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        out = IntPolynomial.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quot = [0] * max(0, len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = Fraction(c, lead) if not isinstance(c, Fraction) else c / lead
            if q.denominator == 1:
                q = q.numerator
            quot[i - dq] = q
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] -= q * b
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial | None":
        q, r = self.divmod(other)
        return q if r.is_zero() else None

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def reversed(self, degree: int | None = None) -> "IntPolynomial":
        """``t**degree * p(1/t)``; ``degree`` defaults to the actual degree."""
        n = self.degree if degree is None else degree
        if n < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        return IntPolynomial(self[n - i] for i in range(n + 1))

    def shift(self, k: int) -> "IntPolynomial":
        if k >= 0:
            return IntPolynomial([0] * k + list(self.coeffs))
        if any(self.coeffs[:-k]):
            raise ValueError("negative shift would drop nonzero terms")
        return IntPolynomial(self.coeffs[-k:])

    def substitute_power(self, r: int) -> "IntPolynomial":
        """``p(t**r)``."""
        out = [0] * (r * self.degree + 1) if self.coeffs else []
        for i, a in enumerate(self.coeffs):
            out[r * i] = a
        return IntPolynomial(out)

    def lowest_degree(self) -> int:
        for i, a in enumerate(self.coeffs):
            if a != 0:
                return i
        return -1

    def is_palindromic(self, degree: int | None = None) -> bool:
        n = self.degree if degree is None else degree
        return all(self[i] == self[n - i] for i in range(n + 1))


def _as_poly(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return IntPolynomial([x])
    return IntPolynomial(x)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial Phi_n(t), monic."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    p = IntPolynomial([-1] + [0] * (n - 1) + [1])
    for k in divisors(n)[:-1]:
        q = p.exact_div(cyclotomic_polynomial(k))
        assert q is not None
        p = q
    return p


@lru_cache(maxsize=None)
def cyclotomic_factor(k: int) -> IntPolynomial:
    """Denominator building block: ``1 - t`` for k = 1, Phi_k(t) otherwise.

    With this normalisation ``1 - t**a`` is the product of the factors over
    the divisors of ``a``, and every factor has constant term 1.
    """
    if k == 1:
        return IntPolynomial([1, -1])
    return cyclotomic_polynomial(k)


def _expand_factors(factors: Mapping[int, int]) -> IntPolynomial:
    out = IntPolynomial.one()
    for k in sorted(factors):
        out = out * cyclotomic_factor(k) ** factors[k]
    return out


def poly_series_quotient(num, den, k: int) -> list:
    """First ``k`` power-series coefficients of ``num / den``.

    ``den`` is an :class:`IntPolynomial`, or an iterable of ``(a, b)`` pairs
    standing for ``prod (1 - t**a)**b``.
    """
    num = _as_poly(num)
    if not isinstance(den, IntPolynomial):
        d = IntPolynomial.one()
        for a, b in den:
            if a < 1 or b < 0:
                raise ValueError("denominator factor (1 - t^a)^b needs a >= 1, b >= 0")
            d = d * (IntPolynomial.one() - IntPolynomial.monomial(a)) ** b
        den = d
    c0 = den[0]
    if c0 == 0:
        raise ZeroDivisionError("denominator has zero constant term")
    out = []
    for i in range(k):
        acc = num[i]
        for j in range(1, min(i, den.degree) + 1):
            acc -= den[j] * out[i - j]
        q = Fraction(acc) / c0
        out.append(q.numerator if q.denominator == 1 else q)
    return out


class RationalFunction:
    """``numerator / (extra * prod_k c_k**e_k)`` in canonical form.

    ``c_k`` is :func:`cyclotomic_factor`.  Construction cancels every
    cyclotomic factor of the denominator that divides the numerator exactly,
    so two equal rational functions have equal canonical data whenever their
    denominators are products of cyclotomic factors.
    """

    __slots__ = ("numerator", "factors", "extra")

    def __init__(self, numerator, factors: Mapping[int, int] | None = None,
                 extra: IntPolynomial | None = None):
        num = _as_poly(numerator)
        facs = Counter({k: e for k, e in (factors or {}).items() if e})
        ext = _as_poly(extra) if extra is not None else IntPolynomial.one()
        if ext.is_zero():
            raise ZeroDivisionError("zero denominator")
        # peel cyclotomic factors off the extra polynomial
        for k in range(1, 4 * max(ext.degree, 1) + 2):
            if ext.degree <= 0:
                break
            while ext.degree > 0:
                q = ext.exact_div(cyclotomic_factor(k))
                if q is None:
                    break
                ext = q
                facs[k] += 1
        if ext.degree == 0 and ext[0] != 1:
            num = num * Fraction(1, ext[0])
            ext = IntPolynomial.one()
        if num.is_zero():
            facs = Counter()
            ext = IntPolynomial.one()
        for k in sorted(facs):
            while facs[k] > 0:
                q = num.exact_div(cyclotomic_factor(k))
                if q is None:
                    break
                num = q
                facs[k] -= 1
        self_facs = {k: e for k, e in sorted(facs.items()) if e > 0}
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "factors", self_facs)
        object.__setattr__(self, "extra", ext)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def from_factored(cls, numerator, powers: Iterable[tuple[int, int]] = (),
                      extra: IntPolynomial | None = None) -> "RationalFunction":
        """Build ``numerator / (extra * prod (1 - t**a)**b)``."""
        facs: Counter = Counter()
        for a, b in powers:
            if a < 1 or b < 0:
                raise ValueError("denominator factor (1 - t^a)^b needs a >= 1, b >= 0")
            for k in divisors(a):
                facs[k] += b
        return cls(numerator, facs, extra)

    @classmethod
    def polynomial(cls, p) -> "RationalFunction":
        return cls(p)

    def denominator(self) -> IntPolynomial:
        return _expand_factors(self.factors) * self.extra

    def is_polynomial(self) -> bool:
        return not self.factors and self.extra == IntPolynomial.one()

    def as_polynomial(self) -> IntPolynomial:
        if not self.is_polynomial():
            raise ValueError("rational function is not a polynomial")
        return self.numerator

    def series(self, k: int) -> list:
        return poly_series_quotient(self.numerator, self.denominator(), k)

    def pole_order_at_one(self) -> int:
        return self.factors.get(1, 0) + (1 if self.extra(1) == 0 else 0)

    def eval_at_one(self) -> Fraction:
        if self.factors.get(1, 0) or self.extra(1) == 0:
            raise PoleError("pole at t = 1")
        return Fraction(self.numerator(1)) / self.denominator()(1)

    def __mul__(self, other) -> "RationalFunction":
        if isinstance(other, (int, Fraction, IntPolynomial)):
            return RationalFunction(self.numerator * other, self.factors, self.extra)
        facs = Counter(self.factors)
        facs.update(other.factors)
        return RationalFunction(self.numerator * other.numerator, facs,
                                self.extra * other.extra)

    __rmul__ = __mul__

    def __add__(self, other) -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            other = RationalFunction(_as_poly(other))
        keys = set(self.factors) | set(other.factors)
        common = {k: max(self.factors.get(k, 0), other.factors.get(k, 0)) for k in keys}
        a = self.numerator * _expand_factors(
            {k: common[k] - self.factors.get(k, 0) for k in keys}) * other.extra
        b = other.numerator * _expand_factors(
            {k: common[k] - other.factors.get(k, 0) for k in keys}) * self.extra
        return RationalFunction(a + b, common, self.extra * other.extra)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.numerator, self.factors, self.extra)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-other if isinstance(other, RationalFunction) else -_as_poly(other))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            try:
                other = RationalFunction(_as_poly(other))
            except (TypeError, ValueError):
                return NotImplemented
        return self.numerator * other.denominator() == other.numerator * self.denominator()

    def __hash__(self):
        return hash((self.numerator, tuple(self.factors.items()), self.extra))

    def reciprocal_equals(self, s: int) -> bool:
        """Whether ``f(t) == t**s * f(1/t)`` as rational functions."""
        n = self.numerator
        if n.is_zero():
            return True
        d = self.denominator()
        shift = s - n.degree + d.degree
        lhs = n * d.reversed()
        rhs = n.reversed() * d
        if shift >= 0:
            rhs = rhs.shift(shift)
        else:
            lhs = lhs.shift(-shift)
        return lhs == rhs

    def reciprocal(self, s: int) -> "RationalFunction":
        """``t**s * f(1/t)``; needs ``s`` large enough to stay a power series."""
        n = self.numerator
        if n.is_zero():
            return self
        d = self.denominator()
        shift = s - n.degree + d.degree
        if shift < 0:
            raise ValueError("t**s * f(1/t) has a pole at t = 0")
        sign = -1 if self.factors.get(1, 0) % 2 else 1
        return RationalFunction(n.reversed().shift(shift) * sign, self.factors,
                                self.extra.reversed())

    def render(self, var: str = "t") -> str:
        if self.is_polynomial():
            return self.numerator.render(var)
        num, den = self.numerator, self.denominator()
        top = num.render(var) if num.degree <= 0 else f"({num.render(var)})"
        bottom = den.render(var) if den.degree <= 0 else f"({den.render(var)})"
        return f"{top}/{bottom}"

    __str__ = render

    def __repr__(self) -> str:
        return f"RationalFunction({self.render()})"


def rational_function_eval_at_one(f: RationalFunction) -> Fraction:
    return f.eval_at_one()


# --------------------------------------------------------------------------
# cyclotomic field elements


@lru_cache(maxsize=None)
def _power_reduction(n: int, j: int) -> tuple:
    """Coordinates of zeta_n**j on the power basis 1, zeta, ..., zeta**(phi-1)."""
    phi = cyclotomic_polynomial(n)
    _, r = IntPolynomial.monomial(j % n).divmod(phi)
    deg = phi.degree
    return tuple(Fraction(r[i]) for i in range(deg))


class CyclotomicValue:
    """Element of Q(zeta_N) on the power basis modulo Phi_N."""

    __slots__ = ("order", "coords")

    def __init__(self, order: int, coords: Sequence):
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        deg = cyclotomic_polynomial(order).degree
        c = [Fraction(x) for x in coords]
        if len(c) > deg:
            poly = IntPolynomial(c)
            _, r = poly.divmod(cyclotomic_polynomial(order))
            c = [Fraction(r[i]) for i in range(deg)]
        c = c + [Fraction(0)] * (deg - len(c))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coords", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicValue is immutable")

    @classmethod
    def rational(cls, x, order: int = 1) -> "CyclotomicValue":
        return cls(order, [Fraction(x)])

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> "CyclotomicValue":
        return cls(order, _power_reduction(order, k % order))

    @classmethod
    def from_exponents(cls, order: int, multiplicities: Mapping[int, int] | Sequence[int]
                       ) -> "CyclotomicValue":
        """``sum_k m_k * zeta_order**k``."""
        items = multiplicities.items() if isinstance(multiplicities, Mapping) \
            else enumerate(multiplicities)
        deg = cyclotomic_polynomial(order).degree
        acc = [Fraction(0)] * deg
        for k, m in items:
            if m:
                for i, c in enumerate(_power_reduction(order, k % order)):
                    acc[i] += m * c
        return cls(order, acc)

    def lift(self, order: int) -> "CyclotomicValue":
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} to {order}")
        if order == self.order:
            return self
        return _sum_scaled(order, order // self.order, self.coords)

    def _common(self, other) -> tuple["CyclotomicValue", "CyclotomicValue"]:
        if not isinstance(other, CyclotomicValue):
            other = CyclotomicValue.rational(other, self.order)
        if other.order == self.order:
            return self, other
        n = lcm(self.order, other.order)
        return self.lift(n), other.lift(n)

    def __add__(self, other) -> "CyclotomicValue":
        a, b = self._common(other)
        return CyclotomicValue(a.order, [x + y for x, y in zip(a.coords, b.coords)])

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicValue":
        return CyclotomicValue(self.order, [-x for x in self.coords])

    def __sub__(self, other) -> "CyclotomicValue":
        a, b = self._common(other)
        return CyclotomicValue(a.order, [x - y for x, y in zip(a.coords, b.coords)])

    def __rsub__(self, other) -> "CyclotomicValue":
        return (-self) + other

    def __mul__(self, other) -> "CyclotomicValue":
        if isinstance(other, (int, Fraction)):
            return CyclotomicValue(self.order, [x * other for x in self.coords])
        a, b = self._common(other)
        prod = [Fraction(0)] * (2 * len(a.coords))
        for i, x in enumerate(a.coords):
            if x:
                for j, y in enumerate(b.coords):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicValue(a.order, prod)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "CyclotomicValue":
        if isinstance(other, (int, Fraction)):
            return CyclotomicValue(self.order, [Fraction(x) / other for x in self.coords])
        return NotImplemented

    def conjugate(self) -> "CyclotomicValue":
        return _sum_scaled(self.order, -1, self.coords)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CyclotomicValue.rational(other, self.order)
        if not isinstance(other, CyclotomicValue):
            return NotImplemented
        a, b = self._common(other)
        return a.coords == b.coords

    def __hash__(self):
        r = self.as_rational()
        if r is not None:
            return hash(r)
        return hash((self.order, self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def as_rational(self) -> Fraction | None:
        if any(self.coords[1:]):
            return None
        return self.coords[0]

    def is_rational_integer(self) -> bool:
        r = self.as_rational()
        return r is not None and r.denominator == 1

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * z ** i for i, c in enumerate(self.coords))

    def render(self) -> str:
        r = self.as_rational()
        if r is not None:
            return render_fraction(r)
        poly = IntPolynomial(self.coords)
        return poly.render(f"z{self.order}")

    def __repr__(self) -> str:
        return f"CyclotomicValue({self.order}, {self.render()})"

    __str__ = render


def _sum_scaled(order: int, step: int, coords) -> CyclotomicValue:
    """``sum_i coords[i] * zeta_order**(step*i)``."""
    acc = {}
    for i, c in enumerate(coords):
        if c:
            k = (step * i) % order
            acc[k] = acc.get(k, 0) + c
    return CyclotomicValue.from_exponents(order, acc)
