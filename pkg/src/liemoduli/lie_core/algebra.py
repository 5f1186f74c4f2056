"""Finite-dimensional Lie algebras over Q given by structure constants."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from ..errors import InputError, StructureError
from ..linalg import (
    ONE,
    ZERO,
    Matrix,
    Vector,
    Q,
    commutator,
    det,
    flatten,
    is_zero,
    matmul,
    rref,
    trace,
    transpose,
    vadd,
    vscale,
)


def _sparse(coeffs) -> dict[int, Fraction]:
    if isinstance(coeffs, Mapping):
        items = coeffs.items()
    else:
        items = coeffs
    out: dict[int, Fraction] = {}
    for k, c in items:
        c = Q(c)
        if c:
            out[int(k)] = out.get(int(k), ZERO) + c
    return {k: c for k, c in out.items() if c}


class LieAlgebra:
    """A Lie algebra on a named basis with exact rational structure constants.

    ``brackets`` maps index pairs ``(i, j)`` with ``i < j`` to the coordinates
    of ``[b_i, b_j]``, either as ``{k: c}`` or as a sequence of ``(k, c)``.
    Pairs not listed bracket to zero. The Jacobi identity is verified for
    every basis triple and, when ``matrices`` are given, each structure
    constant is checked against the matrix commutator.
    """

    def __init__(
        self,
        name: str,
        basis_names: Sequence[str],
        brackets: Mapping,
        matrices: Sequence[Sequence[Sequence]] | None = None,
    ):
        self._name = str(name)
        self._basis_names = tuple(str(b) for b in basis_names)
        n = len(self._basis_names)
        if n == 0:
            raise InputError("a Lie algebra needs a nonempty basis")
        if len(set(self._basis_names)) != n:
            raise InputError("basis names must be distinct")
        sc: dict[tuple[int, int], dict[int, Fraction]] = {}
        for key, coeffs in brackets.items():
            i, j = (int(key[0]), int(key[1]))
            if not (0 <= i < j < n):
                raise StructureError(f"bracket index pair {key!r} must satisfy 0 <= i < j < {n}")
            if (i, j) in sc:
                raise StructureError(f"bracket pair {key!r} listed twice")
            terms = _sparse(coeffs)
            if any(not (0 <= k < n) for k in terms):
                raise StructureError(f"bracket [{i},{j}] refers to an index outside the basis")
            if terms:
                sc[(i, j)] = terms
        self._sc = dict(sorted(sc.items()))
        self._table = [[(ZERO,) * n for _ in range(n)] for _ in range(n)]
        for (i, j), terms in self._sc.items():
            v = tuple(terms.get(k, ZERO) for k in range(n))
            self._table[i][j] = v
            self._table[j][i] = vscale(-1, v)
        self._ad_basis = tuple(
            tuple(tuple(self._table[i][j][r] for j in range(n)) for r in range(n)) for i in range(n)
        )
        self._check_jacobi()

        self._matrices = None
        if matrices is not None:
            mats = tuple(tuple(tuple(Q(x) for x in row) for row in m) for m in matrices)
            if len(mats) != n:
                raise InputError(f"expected {n} realization matrices, got {len(mats)}")
            m = len(mats[0])
            if any(len(a) != m or any(len(r) != m for r in a) for a in mats):
                raise InputError("realization matrices must all be square of the same size")
            self._matrices = mats
            self._m = m
            flat = [flatten(a) for a in mats]
            aug = [tuple(f) + tuple(ONE if k == i else ZERO for k in range(n)) for i, f in enumerate(flat)]
            red, piv = rref(aug, m * m + n)
            if len(piv) < n or piv[n - 1] >= m * m:
                raise InputError("realization matrices are linearly dependent")
            self._coord_rows = tuple(r[: m * m] for r in red)
            self._coord_transform = tuple(r[m * m:] for r in red)
            self._coord_pivots = piv
            for i in range(n):
                for j in range(i + 1, n):
                    lhs = commutator(mats[i], mats[j])
                    rhs = self.realize(self._table[i][j])
                    if lhs != rhs:
                        raise StructureError(
                            f"matrix commutator of {self._basis_names[i]}, {self._basis_names[j]} "
                            "disagrees with the structure constants"
                        )
        self._killing = None

    # -- basic data ---------------------------------------------------------

    @property
    def name(self) -> str:
        return self._name

    @property
    def dim(self) -> int:
        return len(self._basis_names)

    @property
    def basis_names(self) -> tuple[str, ...]:
        return self._basis_names

    @property
    def structure_constants(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        return {k: dict(v) for k, v in self._sc.items()}

    @property
    def matrices(self):
        return self._matrices

    @property
    def matrix_size(self) -> int | None:
        return self._m if self._matrices is not None else None

    @property
    def has_realization(self) -> bool:
        return self._matrices is not None

    def __repr__(self):
        return f"LieAlgebra({self._name!r}, dim={self.dim})"

    def _key(self):
        return (self._name, self._basis_names, tuple((k, tuple(sorted(v.items()))) for k, v in self._sc.items()),
                self._matrices)

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def basis_vector(self, i) -> Vector:
        if isinstance(i, str):
            try:
                i = self._basis_names.index(i)
            except ValueError:
                raise InputError(f"{self._name} has no basis element {i!r}") from None
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    def element(self, **coeffs) -> Vector:
        """Coordinates from keyword coefficients, e.g. ``sl2.element(h=1, e=-2)``."""
        out = [ZERO] * self.dim
        for name, c in coeffs.items():
            out[self._basis_names.index(name)] += Q(c)
        return tuple(out)

    # -- bracket and adjoint -------------------------------------------------

    def _check_vector(self, x) -> Vector:
        x = tuple(Q(a) for a in x)
        if len(x) != self.dim:
            raise InputError(f"expected a vector of length {self.dim}, got {len(x)}")
        return x

    def bracket(self, x, y) -> Vector:
        x = self._check_vector(x)
        y = self._check_vector(y)
        n = self.dim
        out = [ZERO] * n
        for i, a in enumerate(x):
            if not a:
                continue
            row = self._table[i]
            for j, b in enumerate(y):
                if not b or i == j:
                    continue
                c = a * b
                for k, s in enumerate(row[j]):
                    if s:
                        out[k] += c * s
        return tuple(out)

    def basis_bracket(self, i: int, j: int) -> Vector:
        return self._table[i][j]

    def ad(self, x) -> Matrix:
        """Matrix of y -> [x, y] acting on coordinate columns."""
        x = self._check_vector(x)
        n = self.dim
        out = [[ZERO] * n for _ in range(n)]
        for i, a in enumerate(x):
            if not a:
                continue
            adi = self._ad_basis[i]
            for r in range(n):
                row = adi[r]
                orow = out[r]
                for j in range(n):
                    if row[j]:
                        orow[j] += a * row[j]
        return tuple(tuple(r) for r in out)

    def killing_matrix(self) -> Matrix:
        """Gram matrix of the Killing form on the basis."""
        if self._killing is None:
            n = self.dim
            self._killing = tuple(
                tuple(trace(matmul(self._ad_basis[i], self._ad_basis[j])) for j in range(n)) for i in range(n)
            )
        return self._killing

    def killing_form(self, x, y) -> Fraction:
        x = self._check_vector(x)
        y = self._check_vector(y)
        k = self.killing_matrix()
        return sum((a * k[i][j] * b for i, a in enumerate(x) if a for j, b in enumerate(y) if b), ZERO)

    def is_semisimple(self) -> bool:
        """Cartan's criterion: the Killing form is nondegenerate."""
        return det(self.killing_matrix()) != 0

    def _check_jacobi(self):
        n = self.dim
        for i, j, k in combinations(range(n), 3):
            t1 = self.bracket(self._table[i][j], self.basis_vector(k))
            t2 = self.bracket(self._table[j][k], self.basis_vector(i))
            t3 = self.bracket(self._table[k][i], self.basis_vector(j))
            if not is_zero(vadd(vadd(t1, t2), t3)):
                names = self._basis_names
                raise StructureError(f"Jacobi identity fails on ({names[i]}, {names[j]}, {names[k]})")

    # -- matrix realization --------------------------------------------------

    def _require_realization(self):
        if self._matrices is None:
            raise InputError(f"{self._name} has no matrix realization")

    def realize(self, x) -> Matrix:
        self._require_realization()
        x = self._check_vector(x)
        m = self._m
        out = [[ZERO] * m for _ in range(m)]
        for c, a in zip(x, self._matrices):
            if c:
                for r in range(m):
                    for s in range(m):
                        if a[r][s]:
                            out[r][s] += c * a[r][s]
        return tuple(tuple(r) for r in out)

    def coordinates(self, a: Matrix) -> Vector | None:
        """Coordinates of the matrix a in the realization, or None if a is outside it."""
        self._require_realization()
        m = self._m
        if len(a) != m or any(len(r) != m for r in a):
            raise InputError(f"expected a {m}x{m} matrix")
        v = flatten(tuple(tuple(Q(x) for x in r) for r in a))
        d = [v[p] for p in self._coord_pivots]
        recon = [ZERO] * (m * m)
        for c, row in zip(d, self._coord_rows):
            if c:
                for k, x in enumerate(row):
                    if x:
                        recon[k] += c * x
        if tuple(recon) != v:
            return None
        n = self.dim
        out = [ZERO] * n
        for c, row in zip(d, self._coord_transform):
            if c:
                for k in range(n):
                    out[k] += c * row[k]
        return tuple(out)


def bracket(L: LieAlgebra, x, y) -> Vector:
    return L.bracket(x, y)


def killing_form(L: LieAlgebra, x, y) -> Fraction:
    """trace(ad x ∘ ad y) from the structure constants."""
    return L.killing_form(x, y)


def from_matrices(name: str, basis_names: Sequence[str], matrices: Sequence[Matrix]) -> LieAlgebra:
    """Build the structure constants of a matrix Lie algebra from its basis."""
    mats = tuple(tuple(tuple(Q(x) for x in r) for r in a) for a in matrices)
    n = len(mats)
    flat = tuple(flatten(a) for a in mats)
    cols = transpose(flat)
    from ..linalg import solve

    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            c = flatten(commutator(mats[i], mats[j]))
            if is_zero(c):
                continue
            coeffs = solve(cols, c)
            if coeffs is None:
                raise InputError(f"{name}: span of the matrices is not closed under commutator")
            brackets[(i, j)] = {k: v for k, v in enumerate(coeffs) if v}
    return LieAlgebra(name, basis_names, brackets, mats)


def conjugate_structure(L: LieAlgebra, change: Matrix, name: str | None = None) -> LieAlgebra:
    """The same algebra on the basis b'_i = sum_j change[i][j] b_j."""
    from ..linalg import inverse, matvec

    n = L.dim
    rows = tuple(tuple(Q(x) for x in r) for r in change)
    inv_t = transpose(inverse(rows))
    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            v = L.bracket(rows[i], rows[j])
            c = matvec(inv_t, v)
            if not is_zero(c):
                brackets[(i, j)] = {k: x for k, x in enumerate(c) if x}
    mats = None
    if L.has_realization:
        mats = [L.realize(r) for r in rows]
    return LieAlgebra(name or f"{L.name}'", [f"b{i}" for i in range(n)], brackets, mats)
