"""Subalgebras in canonical echelon form, and the series built from them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import NotSubalgebraError
from ..linalg import Matrix, Vector, Q, ZERO, intersect_spans, is_zero, lincomb, rref
from .algebra import LieAlgebra


class Subalgebra:
    """A bracket-closed subspace of ``ambient``.

    The basis is stored in reduced row-echelon form, so two Subalgebras of the
    same ambient are equal exactly when their ``basis`` tuples agree.
    """

    __slots__ = ("_ambient", "_basis", "_pivots")

    def __init__(self, ambient: LieAlgebra, rows: Iterable[Sequence] = (), *, check: bool = True):
        rows = [tuple(Q(x) for x in r) for r in rows]
        for r in rows:
            if len(r) != ambient.dim:
                raise NotSubalgebraError(f"row of length {len(r)} in an algebra of dimension {ambient.dim}")
        basis, pivots = rref(rows, ambient.dim)
        self._ambient = ambient
        self._basis = basis
        self._pivots = pivots
        if check:
            for i in range(len(basis)):
                for j in range(i + 1, len(basis)):
                    if not self.contains(ambient.bracket(basis[i], basis[j])):
                        raise NotSubalgebraError(
                            f"span is not closed under the bracket of {ambient.name} "
                            f"(rows {i} and {j})"
                        )

    @property
    def ambient(self) -> LieAlgebra:
        return self._ambient

    @property
    def basis(self) -> Matrix:
        return self._basis

    basis_matrix = basis

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    @property
    def dim(self) -> int:
        return len(self._basis)

    def __len__(self):
        return self.dim

    def __repr__(self):
        return f"Subalgebra({self._ambient.name}, dim={self.dim})"

    def __eq__(self, other):
        return (
            isinstance(other, Subalgebra)
            and self._ambient == other._ambient
            and self._basis == other._basis
        )

    def __hash__(self):
        return hash((self._ambient.name, self._basis))

    def contains(self, v) -> bool:
        v = tuple(Q(x) for x in v)
        return lincomb([v[p] for p in self._pivots], self._basis, self._ambient.dim) == v

    def __contains__(self, v):
        return self.contains(v)

    def issubset(self, other: "Subalgebra") -> bool:
        return all(other.contains(r) for r in self._basis)

    __le__ = issubset

    def coordinates(self, v) -> Vector:
        """Coordinates of v in this subalgebra's echelon basis."""
        v = tuple(Q(x) for x in v)
        if not self.contains(v):
            raise NotSubalgebraError("vector does not lie in the subalgebra")
        return tuple(v[p] for p in self._pivots)

    def element(self, coeffs: Sequence) -> Vector:
        return lincomb([Q(c) for c in coeffs], self._basis, self._ambient.dim)

    def matrices(self) -> tuple[Matrix, ...]:
        return tuple(self._ambient.realize(r) for r in self._basis)

    def ad(self, x) -> Matrix:
        """Matrix of ad x restricted to this subalgebra, in its own basis."""
        cols = [self.coordinates(self._ambient.bracket(x, b)) for b in self._basis]
        k = self.dim
        return tuple(tuple(cols[j][i] for j in range(k)) for i in range(k))

    def intrinsic(self, name: str | None = None) -> LieAlgebra:
        """This subalgebra as an abstract Lie algebra on its echelon basis."""
        k = self.dim
        brackets = {}
        for i in range(k):
            for j in range(i + 1, k):
                c = self.coordinates(self._ambient.bracket(self._basis[i], self._basis[j]))
                if not is_zero(c):
                    brackets[(i, j)] = {a: x for a, x in enumerate(c) if x}
        mats = self.matrices() if self._ambient.has_realization else None
        return LieAlgebra(name or f"sub({self._ambient.name})", [f"x{i}" for i in range(k)], brackets, mats)

    def gram(self, form=None) -> Matrix:
        """Gram matrix of a bilinear form (default: ambient Killing form) on the basis."""
        form = form or self._ambient.killing_form
        b = self._basis
        return tuple(tuple(form(x, y) for y in b) for x in b)

    @property
    def point(self):
        from ..grassmann import SubspacePoint

        return SubspacePoint.from_echelon(self._ambient.dim, self._basis, self._pivots)

    def is_ideal_of(self, other: "Subalgebra") -> bool:
        return self.issubset(other) and all(
            self.contains(self._ambient.bracket(x, y)) for x in other.basis for y in self._basis
        )


def full(L: LieAlgebra) -> Subalgebra:
    return Subalgebra(L, [L.basis_vector(i) for i in range(L.dim)], check=False)


def zero(L: LieAlgebra) -> Subalgebra:
    return Subalgebra(L, [], check=False)


def span(L: LieAlgebra, vectors: Iterable[Sequence]) -> Subalgebra:
    """The subalgebra with the given spanning set (must already be closed)."""
    return Subalgebra(L, vectors)


def bracket_span(L: LieAlgebra, a: Sequence[Vector], b: Sequence[Vector]) -> Matrix:
    return rref([L.bracket(x, y) for x in a for y in b], L.dim)[0]


def generated(L: LieAlgebra, vectors: Iterable[Sequence]) -> Subalgebra:
    """The smallest subalgebra containing ``vectors``."""
    basis = rref([tuple(Q(x) for x in v) for v in vectors], L.dim)[0]
    while True:
        brackets = [L.bracket(basis[i], basis[j]) for i in range(len(basis)) for j in range(i + 1, len(basis))]
        new = rref(list(basis) + brackets, L.dim)[0]
        if len(new) == len(basis):
            return Subalgebra(L, new, check=False)
        basis = new


def intersection(h1: Subalgebra, h2: Subalgebra) -> Subalgebra:
    return Subalgebra(h1.ambient, intersect_spans(h1.basis, h2.basis, h1.ambient.dim), check=False)


def from_matrices(L: LieAlgebra, matrices: Iterable[Matrix]) -> Subalgebra:
    """Subalgebra spanned by matrices lying in the realization of L."""
    rows = []
    for a in matrices:
        c = L.coordinates(a)
        if c is None:
            raise NotSubalgebraError(f"matrix is not in the realization of {L.name}")
        rows.append(c)
    return Subalgebra(L, rows)


@dataclass(frozen=True)
class RadicalSeries:
    derived: tuple[Subalgebra, ...]
    lower_central: tuple[Subalgebra, ...]
    is_solvable: bool
    is_nilpotent: bool


def derived_subalgebra(h: Subalgebra) -> Subalgebra:
    return Subalgebra(h.ambient, bracket_span(h.ambient, h.basis, h.basis), check=False)


def radical_series(h: Subalgebra) -> RadicalSeries:
    """Derived and lower central series, each run until it stabilizes."""
    L = h.ambient
    derived = [h]
    while True:
        nxt = derived_subalgebra(derived[-1])
        if nxt == derived[-1]:
            break
        derived.append(nxt)
    lower = [h]
    while True:
        nxt = Subalgebra(L, bracket_span(L, h.basis, lower[-1].basis), check=False)
        if nxt == lower[-1]:
            break
        lower.append(nxt)
    return RadicalSeries(
        derived=tuple(derived),
        lower_central=tuple(lower),
        is_solvable=derived[-1].dim == 0,
        is_nilpotent=lower[-1].dim == 0,
    )


def is_solvable(h: Subalgebra) -> bool:
    return radical_series(h).is_solvable


def centralizer(h: Subalgebra, elements: Sequence[Vector]) -> Subalgebra:
    """Elements of h commuting with every given element."""
    from ..linalg import nullspace, transpose

    L = h.ambient
    k = h.dim
    if not elements or k == 0:
        return h
    # columns: [x, b_j] for each element x stacked
    rows = []
    for x in elements:
        cols = [L.bracket(x, b) for b in h.basis]
        rows.extend(transpose(tuple(cols)))
    kernel = nullspace(rows, k)
    return Subalgebra(L, [h.element(c) for c in kernel], check=False)


def zero_vector(L: LieAlgebra) -> Vector:
    return (ZERO,) * L.dim
