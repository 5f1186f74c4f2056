"""Exact linear algebra over the rationals.

Vectors are tuples of :class:`fractions.Fraction`; matrices are tuples of
row tuples. Everything here is pure and never rounds.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import InputError

Vector = tuple
Matrix = tuple

ZERO = Fraction(0)
ONE = Fraction(1)


def Q(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {x!r}") from exc
    if hasattr(x, "p") and hasattr(x, "q"):  # sympy Rational
        return Fraction(int(x.p), int(x.q))
    if hasattr(x, "numerator") and hasattr(x, "denominator") and not isinstance(x, float):
        return Fraction(int(x.numerator), int(x.denominator))
    raise InputError(f"not a rational: {x!r}")


def fmt(q) -> str:
    q = Q(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def vec(xs: Iterable) -> Vector:
    return tuple(Q(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vec(r) for r in rows)


def zeros(m: int, n: int | None = None) -> Matrix:
    n = m if n is None else n
    return tuple((ZERO,) * n for _ in range(m))


def identity(m: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(m)) for i in range(m))


def unit(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def elementary(m: int, i: int, j: int) -> Matrix:
    """The matrix unit E_ij (0-based)."""
    return tuple(tuple(ONE if (r, c) == (i, j) else ZERO for c in range(m)) for r in range(m))


def diag(entries: Sequence) -> Matrix:
    m = len(entries)
    return tuple(tuple(Q(entries[i]) if i == j else ZERO for j in range(m)) for i in range(m))


# -- vectors ---------------------------------------------------------------

def vadd(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vscale(c, x: Vector) -> Vector:
    c = Q(c)
    return tuple(c * a for a in x)


def dot(x: Vector, y: Vector) -> Fraction:
    total = ZERO
    for a, b in zip(x, y):
        if a and b:
            total += a * b
    return total


def is_zero(x) -> bool:
    if x and isinstance(x[0], tuple):
        return all(is_zero(r) for r in x)
    return all(a == 0 for a in x)


def lincomb(coeffs: Sequence, vectors: Sequence[Vector], n: int | None = None) -> Vector:
    if n is None:
        n = len(vectors[0]) if vectors else 0
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, a in enumerate(v):
                if a:
                    out[i] += c * a
    return tuple(out)


def normalize_first_nonzero(x: Vector) -> Vector:
    for a in x:
        if a:
            return tuple(b / a for b in x)
    raise InputError("zero vector cannot be normalized")


# -- matrices --------------------------------------------------------------

def shape(a: Matrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    ncols = len(b[0]) if b else 0
    out = []
    for r in a:
        acc = [ZERO] * ncols
        for x, brow in zip(r, b):
            if x:
                for j, y in enumerate(brow):
                    if y:
                        acc[j] += x * y
        out.append(tuple(acc))
    return tuple(out)


def matvec(a: Matrix, x: Vector) -> Vector:
    return tuple(dot(r, x) for r in a)


def madd(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vadd(r, s) for r, s in zip(a, b))


def msub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vsub(r, s) for r, s in zip(a, b))


def mscale(c, a: Matrix) -> Matrix:
    return tuple(vscale(c, r) for r in a)


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), ZERO)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return msub(matmul(a, b), matmul(b, a))


def mpow(a: Matrix, k: int) -> Matrix:
    out = identity(len(a))
    for _ in range(k):
        out = matmul(out, a)
    return out


def flatten(a: Matrix) -> Vector:
    return tuple(x for r in a for x in r)


def unflatten(x: Vector, m: int) -> Matrix:
    return tuple(tuple(x[i * m:(i + 1) * m]) for i in range(m))


def is_nilpotent(a: Matrix) -> bool:
    m = len(a)
    return is_zero(mpow(a, m)) if m else True


def is_upper_triangular(a: Matrix, strict: bool = False) -> bool:
    for i, r in enumerate(a):
        for j in range(i + 1 if strict else i):
            if r[j]:
                return False
        if strict and r[i]:
            return False
    return True


def is_diagonal(a: Matrix) -> bool:
    return all(a[i][j] == 0 for i in range(len(a)) for j in range(len(a)) if i != j)


def nilpotent_exp(n: Matrix, t=ONE) -> Matrix:
    """exp(t*n) for nilpotent n, as a terminating series."""
    m = len(n)
    t = Q(t)
    out = [list(r) for r in identity(m)]
    term = identity(m)
    k = 1
    while True:
        term = mscale(t / k, matmul(term, n))
        if is_zero(term):
            break
        for i in range(m):
            for j in range(m):
                out[i][j] += term[i][j]
        k += 1
        if k > m + 1:
            raise InputError("matrix is not nilpotent")
    return tuple(tuple(r) for r in out)


def unipotent_log(u: Matrix) -> Matrix | None:
    """log(u) for unipotent u, or None if u is not unipotent."""
    m = len(u)
    x = msub(u, identity(m))
    if not is_nilpotent(x):
        return None
    out = zeros(m)
    power = identity(m)
    for k in range(1, m + 1):
        power = matmul(power, x)
        if is_zero(power):
            break
        sign = ONE if k % 2 else -ONE
        out = madd(out, mscale(sign / k, power))
    return out


# -- elimination -----------------------------------------------------------

def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row-echelon form with zero rows dropped, plus pivot columns."""
    a = [list(map(Q, r)) for r in rows]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pv = a[r][c]
        if pv != 1:
            a[r] = [x / pv for x in a[r]]
        row = a[r]
        for i in range(len(a)):
            if i != r:
                f = a[i][c]
                if f:
                    a[i] = [x - f * y for x, y in zip(a[i], row)]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return tuple(tuple(x) for x in a[:r]), tuple(pivots)


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(a: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """Basis of {x : a x = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    r, pivots = rref(a, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, p in zip(r, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def left_nullspace(a: Matrix) -> list[Vector]:
    return nullspace(transpose(a), len(a))


def solve(a: Matrix, b: Vector) -> Vector | None:
    """Some x with a x = b, or None when inconsistent."""
    n = len(a[0]) if a else 0
    aug = [tuple(r) + (bi,) for r, bi in zip(a, b)]
    r, pivots = rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [ZERO] * n
    for row, p in zip(r, pivots):
        x[p] = row[n]
    return tuple(x)


def coordinates_in(basis: Matrix, v: Vector) -> Vector | None:
    """Coefficients c with sum c_i basis_i = v, or None if v is outside the span."""
    if not basis:
        return () if is_zero(v) else None
    return solve(transpose(basis), v)


def det(a: Matrix) -> Fraction:
    m = [list(r) for r in a]
    n = len(m)
    d = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        pv = m[c][c]
        d *= pv
        for i in range(c + 1, n):
            f = m[i][c] / pv
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [tuple(r) + identity(n)[i] for i, r in enumerate(a)]
    r, pivots = rref(aug, 2 * n)
    if tuple(pivots[:n]) != tuple(range(n)) or len(pivots) < n:
        raise InputError("matrix is singular")
    return tuple(tuple(row[n:]) for row in r)


def span_basis(vectors: Iterable[Vector], n: int) -> Matrix:
    return rref(list(vectors), n)[0]


def intersect_spans(a: Matrix, b: Matrix, n: int) -> Matrix:
    """RREF basis of span(a) ∩ span(b)."""
    if not a or not b:
        return ()
    # x = sum c_i a_i = sum d_j b_j  <=>  [a; -b]^T (c, d) = 0
    system = transpose(tuple(a) + tuple(vscale(-1, r) for r in b))
    kernel = nullspace(system, len(a) + len(b))
    vecs = [lincomb(k[:len(a)], a, n) for k in kernel]
    return span_basis(vecs, n)


def charpoly_coeffs(a: Matrix) -> tuple[Fraction, ...]:
    """Characteristic polynomial det(xI - a), highest degree first (Faddeev-LeVerrier)."""
    n = len(a)
    coeffs = [ONE]
    m = zeros(n)
    c = ONE
    for k in range(1, n + 1):
        m = madd(matmul(a, m), mscale(c, identity(n)))
        c = -trace(matmul(a, m)) / k
        coeffs.append(c)
    return tuple(coeffs)


# -- integer lattices ------------------------------------------------------

def primitive_integer(x: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to a primitive integer vector (sign kept)."""
    x = vec(x)
    if is_zero(x):
        raise InputError("zero vector has no primitive form")
    den = lcm(*(a.denominator for a in x))
    ints = [int(a * den) for a in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints)


def integer_column_reduce(w: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Column-style Hermite reduction: returns (w u, u) with u unimodular.

    The nonzero columns of ``w u`` come first and form a lower-echelon block.
    """
    r = len(w)
    m = len(w[0]) if r else 0
    h = [list(map(int, row)) for row in w]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def colop(j, k, q):  # col_j -= q * col_k
        for row in h:
            row[j] -= q * row[k]
        for row in u:
            row[j] -= q * row[k]

    def swap(j, k):
        for row in h:
            row[j], row[k] = row[k], row[j]
        for row in u:
            row[j], row[k] = row[k], row[j]

    c = 0
    for i in range(r):
        if c >= m:
            break
        while True:
            nz = [j for j in range(c, m) if h[i][j] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda j: abs(h[i][j]))
            swap(c, piv)
            done = True
            for j in range(c + 1, m):
                if h[i][j]:
                    colop(j, c, h[i][j] // h[i][c])
                    if h[i][j]:
                        done = False
            if done:
                break
        if any(h[i][j] for j in range(c, m)):
            c += 1
    return h, u


def integer_kernel(w: Sequence[Sequence[int]], m: int | None = None) -> list[tuple[int, ...]]:
    """A Z-basis of {c in Z^m : w c = 0}; the result spans a saturated lattice."""
    if not w:
        m = m or 0
        return [tuple(1 if i == j else 0 for j in range(m)) for i in range(m)]
    h, u = integer_column_reduce(w)
    m = len(u)
    zero_cols = [j for j in range(m) if all(row[j] == 0 for row in h)]
    return [tuple(u[i][j] for i in range(m)) for j in zero_cols]


def saturated_basis(vectors: Sequence[Sequence], m: int) -> list[tuple[int, ...]]:
    """Z-basis of span_Q(vectors) ∩ Z^m."""
    basis = span_basis([vec(v) for v in vectors], m)
    if not basis:
        return []
    annihilator = nullspace(basis, m)
    if not annihilator:
        return [tuple(1 if i == j else 0 for j in range(m)) for i in range(m)]
    ints = [primitive_integer(a) for a in annihilator]
    return integer_kernel(ints, m)


def integer_right_inverse(w: Sequence[Sequence[int]]) -> list[list[Fraction]] | None:
    """An integer matrix c with w c = I when the rows of w span a saturated lattice."""
    r = len(w)
    h, u = integer_column_reduce(w)
    block = tuple(tuple(Fraction(h[i][j]) for j in range(r)) for i in range(r))
    if det(block) not in (1, -1):
        return None
    binv = inverse(block)
    m = len(u)
    ucols = tuple(tuple(Fraction(u[i][j]) for j in range(r)) for i in range(m))
    return [list(row) for row in matmul(ucols, binv)]
