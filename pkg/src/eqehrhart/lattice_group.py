"""Finite groups of affine lattice automorphisms and their class functions.

An element acts on ``M = Z^d`` by ``u -> A u - w``.  Lifting to
``M' = M + Z`` gives the linear map ``(u, h) -> (A u - h w, h)``, so a polytope
invariant up to translation sits at height one and is permuted honestly.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import combinations
from math import isqrt
from typing import Callable, Hashable, Iterable, Sequence

from .exact_arith import CyclotomicValue, IntPolynomial, lcm
from .intlinalg import det, det_one_minus_tA, fixed_space_dimension

DEFAULT_GROUP_CAP = 10000
DEFAULT_TABLE_CAP = 2000


class ClosureExceeded(RuntimeError):
    """The generated group is infinite or larger than the cap."""


class NonInvertibleGenerator(ValueError):
    pass


class CapExceeded(RuntimeError):
    """Group too large for the character-table computation."""


class AffineLatticeAutomorphism:
    """``u -> linear @ u - translation`` with integer data."""

    __slots__ = ("linear", "translation", "_hash")

    def __init__(self, linear: Sequence[Sequence[int]], translation: Sequence[int] | None = None):
        lin = tuple(tuple(int(x) for x in row) for row in linear)
        d = len(lin)
        if any(len(row) != d for row in lin):
            raise ValueError("linear part must be square")
        tr = tuple(int(x) for x in translation) if translation is not None else (0,) * d
        if len(tr) != d:
            raise ValueError("translation length must match the lattice rank")
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "translation", tr)
        object.__setattr__(self, "_hash", hash((lin, tr)))

    def __setattr__(self, name, value):
        raise AttributeError("AffineLatticeAutomorphism is immutable")

    @classmethod
    def identity(cls, d: int) -> "AffineLatticeAutomorphism":
        return cls([[int(i == j) for j in range(d)] for i in range(d)])

    @property
    def rank(self) -> int:
        return len(self.linear)

    def lifted(self) -> list[list[int]]:
        d = self.rank
        rows = [list(row) + [-self.translation[i]] for i, row in enumerate(self.linear)]
        rows.append([0] * d + [1])
        return rows

    def apply(self, u: Sequence) -> tuple:
        return tuple(sum(a * x for a, x in zip(row, u)) - w
                     for row, w in zip(self.linear, self.translation))

    def apply_linear(self, u: Sequence) -> tuple:
        return tuple(sum(a * x for a, x in zip(row, u)) for row in self.linear)

    def apply_dilate(self, u: Sequence, m) -> tuple:
        """Action on the slice at height ``m`` of the lift."""
        return tuple(sum(a * x for a, x in zip(row, u)) - m * w
                     for row, w in zip(self.linear, self.translation))

    def __mul__(self, other: "AffineLatticeAutomorphism") -> "AffineLatticeAutomorphism":
        # (self * other)(u) = self(other(u))
        a, b = self.linear, other.linear
        d = len(a)
        prod = [[sum(a[i][k] * b[k][j] for k in range(d)) for j in range(d)] for i in range(d)]
        shift = [sum(a[i][k] * other.translation[k] for k in range(d)) + self.translation[i]
                 for i in range(d)]
        return AffineLatticeAutomorphism(prod, shift)

    def __eq__(self, other) -> bool:
        return (isinstance(other, AffineLatticeAutomorphism)
                and self.linear == other.linear and self.translation == other.translation)

    def __hash__(self) -> int:
        return self._hash

    def is_identity(self) -> bool:
        return self == AffineLatticeAutomorphism.identity(self.rank)

    def determinant(self) -> int:
        return int(det([list(r) for r in self.linear]))

    def __repr__(self) -> str:
        return f"AffineLatticeAutomorphism({[list(r) for r in self.linear]}, {list(self.translation)})"


class FiniteMatrixGroup:
    """A finite group given by closure of generators, with conjugacy classes.

    Elements are ordered by breadth-first closure from the identity; class
    representatives are the least element index in each class.
    """

    def __init__(self, elements: list[AffineLatticeAutomorphism],
                 generators: list[AffineLatticeAutomorphism]):
        self.elements = elements
        self.generators = generators
        self.rank = elements[0].rank
        self.index = {g: i for i, g in enumerate(elements)}
        self.identity_index = 0
        self.order = len(elements)
        self._inverse = [self.index[_inverse(g, self)] for g in elements]
        self._orders = [self._element_order(i) for i in range(self.order)]
        self.exponent = lcm(*self._orders)
        self.classes = self._conjugacy_classes()
        self.class_of = [0] * self.order
        for c, members in enumerate(self.classes):
            for i in members:
                self.class_of[i] = c
        self.representatives = [members[0] for members in self.classes]
        self.class_sizes = [len(members) for members in self.classes]
        self._power_classes: dict[int, list[int]] = {}

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def multiply(self, i: int, j: int) -> int:
        return self.index[self.elements[i] * self.elements[j]]

    def inverse(self, i: int) -> int:
        return self._inverse[i]

    def element_order(self, i: int) -> int:
        return self._orders[i]

    def _element_order(self, i: int) -> int:
        g = self.elements[i]
        x, k = g, 1
        while not x.is_identity():
            x = x * g
            k += 1
        return k

    def power_class(self, c: int, k: int) -> int:
        """Class of ``g**k`` for the representative ``g`` of class ``c``."""
        if c not in self._power_classes:
            g = self.elements[self.representatives[c]]
            x = AffineLatticeAutomorphism.identity(self.rank)
            out = []
            for _ in range(self.element_order(self.representatives[c])):
                out.append(self.class_of[self.index[x]])
                x = x * g
            self._power_classes[c] = out
        powers = self._power_classes[c]
        return powers[k % len(powers)]

    def _conjugacy_classes(self) -> list[list[int]]:
        seen = [False] * self.order
        classes = []
        gens = [(s, _inverse(s, self)) for s in self.generators]
        for i in range(self.order):
            if seen[i]:
                continue
            orbit = {i}
            queue = deque([i])
            seen[i] = True
            while queue:
                x = self.elements[queue.popleft()]
                for s, s_inv in gens:
                    j = self.index[s * x * s_inv]
                    if not seen[j]:
                        seen[j] = True
                        orbit.add(j)
                        queue.append(j)
            classes.append(sorted(orbit))
        return classes

    def inverse_class(self, c: int) -> int:
        return self.class_of[self.inverse(self.representatives[c])]

    def representative(self, c: int) -> AffineLatticeAutomorphism:
        return self.elements[self.representatives[c]]

    def constant(self, value) -> "ClassFunction":
        return ClassFunction(self, [value] * self.num_classes)

    def trivial_character(self) -> "ClassFunction":
        return self.constant(1)

    def regular_character(self) -> "ClassFunction":
        return ClassFunction(self, [self.order] + [0] * (self.num_classes - 1))

    def __repr__(self) -> str:
        return f"FiniteMatrixGroup(order={self.order}, classes={self.num_classes})"


def _inverse(g: AffineLatticeAutomorphism, group: FiniteMatrixGroup | None = None
             ) -> AffineLatticeAutomorphism:
    if group is not None and hasattr(group, "_inverse") and g in group.index:
        return group.elements[group._inverse[group.index[g]]]
    x, prev = g, AffineLatticeAutomorphism.identity(g.rank)
    while not x.is_identity():
        prev = x
        x = x * g
    return prev


def _generator_order(g: AffineLatticeAutomorphism, cap: int) -> int:
    x, k = g, 1
    while not x.is_identity():
        if k >= cap:
            raise ClosureExceeded(f"generator {g!r} has order exceeding {cap}")
        x = x * g
        k += 1
    return k


def generate_group(generators: Iterable[AffineLatticeAutomorphism], rank: int | None = None,
                   cap: int = DEFAULT_GROUP_CAP) -> FiniteMatrixGroup:
    """Close ``generators`` under multiplication (breadth first from the identity)."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    gens = list(generators)
    if rank is None:
        if not gens:
            raise ValueError("rank required for an empty generator list")
        rank = gens[0].rank
    for g in gens:
        if g.rank != rank:
            raise ValueError("generators of mixed rank")
        if abs(g.determinant()) != 1:
            raise NonInvertibleGenerator(f"generator {g!r} is not invertible over Z")
        _generator_order(g, cap)
    ident = AffineLatticeAutomorphism.identity(rank)
    elements = [ident]
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = x * s
            if y not in seen:
                if len(elements) >= cap:
                    raise ClosureExceeded(f"group closure exceeds {cap} elements")
                seen.add(y)
                elements.append(y)
                queue.append(y)
    return FiniteMatrixGroup(elements, gens)


def conjugacy_classes(group: FiniteMatrixGroup) -> list[list[int]]:
    return group.classes


def exponent(group: FiniteMatrixGroup) -> int:
    return group.exponent


def _as_cyclotomic(x) -> CyclotomicValue:
    if isinstance(x, CyclotomicValue):
        return x
    return CyclotomicValue.rational(Fraction(x))


class ClassFunction:
    """Cyclotomic-valued function on the conjugacy classes of a group."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteMatrixGroup, values: Sequence):
        if len(values) != group.num_classes:
            raise ValueError("one value per conjugacy class required")
        self.group = group
        self.values = tuple(_as_cyclotomic(v) for v in values)

    def __getitem__(self, c: int) -> CyclotomicValue:
        return self.values[c]

    def __len__(self) -> int:
        return len(self.values)

    def degree(self) -> CyclotomicValue:
        return self.values[0]

    def _check(self, other: "ClassFunction"):
        if other.group is not self.group:
            raise ValueError("class functions on different groups")

    def __add__(self, other) -> "ClassFunction":
        if not isinstance(other, ClassFunction):
            other = self.group.constant(other)
        self._check(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    __radd__ = __add__

    def __neg__(self) -> "ClassFunction":
        return ClassFunction(self.group, [-a for a in self.values])

    def __sub__(self, other) -> "ClassFunction":
        return self + (-other)

    def __mul__(self, other) -> "ClassFunction":
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.group, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.group, [a * other for a in self.values])

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "ClassFunction":
        return ClassFunction(self.group, [a / scalar for a in self.values])

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.group, [a.conjugate() for a in self.values])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group is other.group and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def inner(self, other: "ClassFunction") -> CyclotomicValue:
        """``<self, other> = 1/|G| sum_g self(g) conj(other(g))``."""
        self._check(other)
        acc = CyclotomicValue.rational(0)
        for size, a, b in zip(self.group.class_sizes, self.values, other.values):
            acc = acc + a * b.conjugate() * size
        return acc / self.group.order

    def is_rational_valued(self) -> bool:
        return all(v.as_rational() is not None for v in self.values)

    def as_rationals(self) -> list[Fraction]:
        out = []
        for v in self.values:
            r = v.as_rational()
            if r is None:
                raise ValueError("class function is not rational valued")
            out.append(r)
        return out

    def render(self) -> list[str]:
        return [v.render() for v in self.values]

    def __repr__(self) -> str:
        return f"ClassFunction({self.render()})"


def det_character(group: FiniteMatrixGroup) -> ClassFunction:
    """``g -> det(rho(g))``, checked against ``(-1)**(d - dim M^g)``."""
    d = group.rank
    vals = []
    for c in range(group.num_classes):
        g = group.representative(c)
        value = g.determinant()
        fixed = fixed_space_dimension([list(r) for r in g.linear])
        if value != (-1) ** (d - fixed):
            raise ArithmeticError(f"determinant {value} inconsistent with fixed dimension {fixed}")
        vals.append(value)
    return ClassFunction(group, vals)


def permutation_character(group: FiniteMatrixGroup, points: Iterable[Hashable],
                          action: Callable[[AffineLatticeAutomorphism, Hashable], Hashable]
                          ) -> ClassFunction:
    """Number of points fixed by each class representative."""
    pts = list(points)
    vals = []
    for c in range(group.num_classes):
        g = group.representative(c)
        vals.append(sum(1 for p in pts if action(g, p) == p))
    return ClassFunction(group, vals)


def count_orbits(group: FiniteMatrixGroup, points: Iterable[Hashable],
                 action: Callable[[AffineLatticeAutomorphism, Hashable], Hashable]) -> int:
    """Orbit count by direct search (used to cross-check Burnside)."""
    remaining = set(points)
    orbits = 0
    while remaining:
        p = remaining.pop()
        orbits += 1
        stack = [p]
        while stack:
            q = stack.pop()
            for s in group.generators:
                r = action(s, q)
                if r in remaining:
                    remaining.discard(r)
                    stack.append(r)
    return orbits


def exterior_power_traces(a: Sequence[Sequence[int]]) -> list[int]:
    """``tr(wedge^i a)`` for ``i = 0..d``, as sums of principal minors."""
    d = len(a)
    out = [1]
    for i in range(1, d + 1):
        total = 0
        for idx in combinations(range(d), i):
            total += det([[a[r][c] for c in idx] for r in idx])
        out.append(int(total))
    return out


def det_one_minus_t(g: AffineLatticeAutomorphism) -> IntPolynomial:
    return det_one_minus_tA([list(r) for r in g.linear])


# --------------------------------------------------------------------------
# character tables


class CharacterTable:
    """Irreducible characters of a finite group, in a fixed deterministic order."""

    def __init__(self, group: FiniteMatrixGroup, characters: Sequence[ClassFunction],
                 labels: Sequence[str] | None = None, check: bool = True):
        self.group = group
        self.characters = list(characters)
        if labels is None:
            labels = [f"chi{i}[{_degree_label(ch)}]" for i, ch in enumerate(self.characters)]
        self.labels = list(labels)
        if check:
            self.verify()

    @property
    def class_sizes(self) -> list[int]:
        return self.group.class_sizes

    def __len__(self) -> int:
        return len(self.characters)

    def __getitem__(self, i: int) -> ClassFunction:
        return self.characters[i]

    def verify(self) -> None:
        k = self.group.num_classes
        if len(self.characters) != k:
            raise ValueError(f"expected {k} irreducible characters, got {len(self.characters)}")
        for i in range(k):
            for j in range(i, k):
                ip = self.characters[i].inner(self.characters[j])
                if ip != (1 if i == j else 0):
                    raise ValueError(f"characters {i} and {j} are not orthonormal")
        if sum(ch.degree() * ch.degree() for ch in self.characters) != self.group.order:
            raise ValueError("squared degrees do not sum to the group order")

    def decompose(self, f: ClassFunction) -> list[CyclotomicValue]:
        return [f.inner(ch) for ch in self.characters]

    def is_effective(self, f: ClassFunction) -> bool:
        return multiplicities_effective(self.decompose(f))

    def relabel(self, labels: Sequence[str]) -> "CharacterTable":
        return CharacterTable(self.group, self.characters, labels, check=False)


def multiplicities_effective(mults: Sequence[CyclotomicValue]) -> bool:
    for m in mults:
        r = m.as_rational()
        if r is None or r.denominator != 1 or r < 0:
            return False
    return True


def decompose(f: ClassFunction, table: CharacterTable) -> tuple[list[CyclotomicValue], bool]:
    mults = table.decompose(f)
    return mults, multiplicities_effective(mults)


def _degree_label(ch: ClassFunction) -> str:
    return ch.degree().render()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % p for p in range(2, isqrt(n) + 1))


def _primitive_root(p: int) -> int:
    phi = p - 1
    factors = [q for q in range(2, phi + 1) if phi % q == 0 and _is_prime(q)]
    for g in range(2, p):
        if all(pow(g, phi // q, p) != 1 for q in factors):
            return g
    return 1


def _nullspace_mod_p(a: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    m = [[x % p for x in row] for row in a]
    piv = []
    r = 0
    for c in range(ncols):
        s = next((i for i in range(r, len(m)) if m[i][c]), None)
        if s is None:
            continue
        m[r], m[s] = m[s], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        piv.append(c)
        r += 1
    basis = []
    for f in range(ncols):
        if f in piv:
            continue
        v = [0] * ncols
        v[f] = 1
        for i, c in enumerate(piv):
            v[c] = -m[i][f] % p
        basis.append(v)
    return basis


def _class_structure_constants(group: FiniteMatrixGroup) -> list[list[list[int]]]:
    """``a[j][r][s] = #{x in C_j : x^-1 z_s in C_r}`` for the representative ``z_s``."""
    k = group.num_classes
    a = [[[0] * k for _ in range(k)] for _ in range(k)]
    for s in range(k):
        z = group.representatives[s]
        for j in range(k):
            for x in group.classes[j]:
                y = group.multiply(group.inverse(x), z)
                a[j][group.class_of[y]][s] += 1
    return a


def character_table(group: FiniteMatrixGroup, cap: int = DEFAULT_TABLE_CAP) -> CharacterTable:
    """Irreducible characters by the Dixon-Schneider method.

    Common eigenvectors of the class-multiplication matrices are found over a
    prime field ``F_p`` with ``p = 1 mod exponent`` and lifted to exact
    cyclotomic values through eigenvalue multiplicities.
    """
    if group.order > cap:
        raise CapExceeded(f"group order {group.order} exceeds character-table cap {cap}")
    n_exp = group.exponent
    k = group.num_classes
    bound = 2 * isqrt(group.order) + 2
    p = n_exp + 1
    while not (_is_prime(p) and p > bound):
        p += n_exp
    consts = _class_structure_constants(group)

    # split F_p^k into common eigenspaces
    spaces = [[[int(i == j) for j in range(k)] for i in range(k)]]  # lists of basis vectors
    for j in range(k):
        if all(len(b) == 1 for b in spaces):
            break
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            cols = len(basis)
            found = []
            total = 0
            for lam in range(p):
                # (A_j - lam I) B y = 0
                mat = [[(sum(consts[j][r][s] * basis[c][s] for s in range(k))
                         - lam * basis[c][r]) % p for c in range(cols)] for r in range(k)]
                null = _nullspace_mod_p(mat, cols, p)
                if null:
                    vecs = [[sum(y[c] * basis[c][s] for c in range(cols)) % p for s in range(k)]
                            for y in null]
                    found.append(vecs)
                    total += len(vecs)
                    if total == cols:
                        break
            if total != cols:
                raise ArithmeticError("class matrices failed to diagonalize mod p")
            new_spaces.extend(found)
        spaces = new_spaces
    if not all(len(b) == 1 for b in spaces):
        raise ArithmeticError("common eigenspaces are not one-dimensional")

    h = group.class_sizes
    inv_cls = [group.inverse_class(c) for c in range(k)]
    z = _primitive_root(p)
    zeta_e = pow(z, (p - 1) // n_exp, p)
    characters = []
    for (w,) in spaces:
        w0inv = pow(w[0], p - 2, p)
        w = [x * w0inv % p for x in w]
        denom = sum(w[c] * w[inv_cls[c]] * pow(h[c], p - 2, p) for c in range(k)) % p
        deg_sq = group.order * pow(denom, p - 2, p) % p
        deg = next(d for d in range(1, isqrt(group.order) + 1) if d * d % p == deg_sq)
        vals_mod = [deg * w[c] * pow(h[c], p - 2, p) % p for c in range(k)]
        values = []
        key = [deg]
        for c in range(k):
            order = group.element_order(group.representatives[c])
            zeta_o = pow(zeta_e, n_exp // order, p)
            mults = {}
            for e in range(order):
                acc = 0
                for i in range(order):
                    acc += vals_mod[group.power_class(c, i)] * pow(zeta_o, (-i * e) % order, p)
                m = acc * pow(order, p - 2, p) % p
                if m > deg:
                    raise ArithmeticError("eigenvalue multiplicity out of range")
                if m:
                    mults[e * (n_exp // order)] = m
            values.append(CyclotomicValue.from_exponents(n_exp, mults))
            key.append(tuple(sorted(e for e, m in mults.items() for _ in range(m))))
        # degree first, then eigenvalue exponents class by class
        characters.append((ClassFunction(group, values), tuple(key)))
    characters.sort(key=lambda item: item[1])
    return CharacterTable(group, [ch for ch, _ in characters])


def table_from_values(group: FiniteMatrixGroup, rows: Sequence[Sequence[CyclotomicValue]],
                      labels: Sequence[str] | None = None) -> CharacterTable:
    """User-supplied table (rows indexed like ``group.classes``); verified on load."""
    return CharacterTable(group, [ClassFunction(group, r) for r in rows], labels)
