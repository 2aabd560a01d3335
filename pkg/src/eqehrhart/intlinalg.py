"""Small exact linear algebra over Z and Q.

Matrices are lists of row lists.  Everything here is meant for desk-scale
sizes (a handful of rows and columns), so the code favours clarity over
asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .exact_arith import IntPolynomial

Matrix = list[list]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    cols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(len(b))) for j in range(cols)] for row in a]


def matvec(a: Matrix, v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    m = [[Fraction(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    return len(rref(a)[1])


def nullspace(a: Matrix, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{x : a x = 0}`` over Q."""
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    if not a:
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    m, piv = rref(a)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = -m[i][f]
        basis.append(v)
    return basis


def solve(a: Matrix, b: Sequence) -> list[Fraction] | None:
    """One rational solution of ``a x = b`` or None."""
    n = len(a[0]) if a else 0
    aug = [list(row) + [bb] for row, bb in zip(a, b)]
    m, piv = rref(aug)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for i, p in enumerate(piv):
        x[p] = m[i][n]
    return x


def det(a: Matrix):
    """Determinant by fraction-free Bareiss elimination (exact)."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if p is None:
                return 0
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num / prev if isinstance(num, Fraction) or isinstance(prev, Fraction) \
                    else num // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    m, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in m]


def charpoly(a: Matrix) -> IntPolynomial:
    """``det(t I - a)`` via Faddeev-LeVerrier."""
    n = len(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        am = matmul(a, mk)
        mk = [[am[i][j] + (coeffs[n - k + 1] if i == j else 0) for j in range(n)]
              for i in range(n)]
        amk = matmul(a, mk)
        coeffs[n - k] = -sum(amk[i][i] for i in range(n)) / k
    return IntPolynomial(coeffs)


def det_one_minus_tA(a: Matrix) -> IntPolynomial:
    """``det(I - t a)``, the reversal of the characteristic polynomial."""
    n = len(a)
    return charpoly(a).reversed(n) if n else IntPolynomial.one()


def fixed_space_dimension(a: Matrix) -> int:
    """Nullity of ``a - I`` over Q."""
    n = len(a)
    return n - rank([[a[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)])


def primitive(v: Sequence) -> list[int]:
    """Scale a rational vector to a primitive integer vector (same direction)."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def column_echelon(c: Matrix, ncols: int) -> tuple[Matrix, Matrix, int]:
    """Unimodular ``u`` with ``c u = h`` in column echelon form.

    Returns ``(h, u, rank)``; the first ``rank`` columns of ``h`` carry the
    pivots (row indices strictly increasing), the remaining ones are zero.
    """
    h = [list(row) for row in c]
    u = identity(ncols)
    rows = len(h)
    col = 0
    for r in range(rows):
        if col == ncols:
            break
        for j in range(col + 1, ncols):
            a, b = h[r][col], h[r][j]
            if b == 0:
                continue
            g, x, y = _xgcd(a, b)
            p, q = a // g, b // g
            # [col, j] <- [col, j] @ [[x, -q], [y, p]]  (determinant 1)
            for mat in (h, u):
                for row in mat:
                    s, t = row[col], row[j]
                    row[col], row[j] = x * s + y * t, -q * s + p * t
        if h[r][col] != 0:
            if h[r][col] < 0:
                for mat in (h, u):
                    for row in mat:
                        row[col] = -row[col]
            col += 1
    return h, u, col


def integer_solutions(c: Matrix, b: Sequence, ncols: int
                      ) -> tuple[list[int], list[list[int]]] | None:
    """Integer solutions of ``c x = b`` as ``x0 + span_Z(kernel)``.

    ``c`` must have integer entries, ``b`` may be rational.  Returns None when
    no integer solution exists.
    """
    if not c:
        return [0] * ncols, [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    h, u, rk = column_echelon(c, ncols)
    z = [0] * ncols
    piv_rows = []
    k = 0
    for r in range(len(h)):
        if k < rk and h[r][k] != 0:
            piv_rows.append(r)
            k += 1
    for k, r in enumerate(piv_rows):
        acc = Fraction(b[r]) - sum(h[r][j] * z[j] for j in range(k))
        q = acc / h[r][k]
        if q.denominator != 1:
            return None
        z[k] = int(q)
    # remaining rows must be consistent
    for r in range(len(h)):
        if sum(h[r][j] * z[j] for j in range(rk)) != Fraction(b[r]):
            return None
    x0 = [sum(u[i][j] * z[j] for j in range(ncols)) for i in range(ncols)]
    kernel = [[u[i][j] for i in range(ncols)] for j in range(rk, ncols)]
    return x0, kernel


def lll_reduce(basis: list[list[int]], delta: Fraction = Fraction(3, 4)) -> list[list[int]]:
    """LLL-reduce a list of linearly independent integer vectors (exact)."""
    b = [list(v) for v in basis]
    n = len(b)
    if n <= 1:
        return b

    def dot(x, y):
        return sum(p * q for p, q in zip(x, y))

    def gram_schmidt():
        bstar, mu = [], [[Fraction(0)] * n for _ in range(n)]
        norms = []
        for i in range(n):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                mu[i][j] = dot(b[i], bstar[j]) / norms[j]
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
            bstar.append(v)
            norms.append(dot(v, v))
        return mu, norms

    mu, norms = gram_schmidt()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                mu, norms = gram_schmidt()
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            mu, norms = gram_schmidt()
            k = max(k - 1, 1)
    return b
