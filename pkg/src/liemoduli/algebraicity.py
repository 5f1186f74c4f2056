"""Algebraic hulls, replicas, torus directions and line orbits.

Everything here assumes rational spectra. A semisimple matrix whose
eigenvalues are not all rational makes the replica computation raise
UnsupportedError; no number-field arithmetic is attempted.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .errors import InputError, PreconditionError, UnsupportedError
from .grassmann import PolynomialPath, SubspacePoint
from .lie_core.algebra import LieAlgebra
from .lie_core.jordan import jordan_decompose
from .lie_core.subalgebra import Subalgebra, generated
from .linalg import (
    Matrix,
    Vector,
    Q,
    charpoly_coeffs,
    det,
    diag,
    identity,
    inverse,
    is_diagonal,
    is_zero,
    matmul,
    mscale,
    msub,
    nullspace,
    primitive_integer,
    rank,
    span_basis,
    transpose,
)
from .polynomials import from_descending, rational_roots


# -- weight vectors --------------------------------------------------------

@dataclass(frozen=True)
class WeightVector:
    """A cocharacter direction of the diagonal torus, kept primitive.

    Rational input is scaled to the primitive integer vector with first
    nonzero entry positive.
    """

    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(Q(x) for x in self.weights)
        if not w or is_zero(w):
            raise InputError("zero weight vector is not a torus direction")
        p = primitive_integer(w)
        if next(x for x in p if x) < 0:
            p = tuple(-x for x in p)
        object.__setattr__(self, "weights", p)

    @property
    def m(self) -> int:
        return len(self.weights)

    def matrix(self) -> Matrix:
        return diag(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __len__(self):
        return len(self.weights)


def torus_direction_is_algebraic(w) -> bool:
    """Integral directions are tangent to one-parameter subgroups; always True.

    Exists to normalize the direction and to reject the zero vector.
    """
    WeightVector(tuple(w))
    return True


def torus_killing_regular(directions: Iterable, ambient: LieAlgebra) -> bool:
    """Is the Killing form nondegenerate on the span of the diagonal directions?"""
    coords = []
    for w in directions:
        w = w if isinstance(w, WeightVector) else WeightVector(tuple(w))
        c = ambient.coordinates(w.matrix())
        if c is None:
            raise InputError(f"diag{w.weights} is not in {ambient.name}")
        coords.append(c)
    basis = span_basis(coords, ambient.dim)
    gram = tuple(tuple(ambient.killing_form(x, y) for y in basis) for x in basis)
    return det(gram) != 0 if gram else True


def torus_killing_gram(directions: Iterable, ambient: LieAlgebra) -> Matrix:
    ws = [w if isinstance(w, WeightVector) else WeightVector(tuple(w)) for w in directions]
    coords = [ambient.coordinates(w.matrix()) for w in ws]
    if any(c is None for c in coords):
        raise InputError(f"some direction is not in {ambient.name}")
    return tuple(tuple(ambient.killing_form(x, y) for y in coords) for x in coords)


# -- replicas and hulls ----------------------------------------------------

def rational_eigenbasis(s: Matrix) -> tuple[Matrix, tuple[Fraction, ...]]:
    """Columns of P are eigenvectors of s, with eigenvalues in the same order.

    Raises UnsupportedError for an irrational spectrum and
    PreconditionError when s is not diagonalizable.
    """
    m = len(s)
    roots = rational_roots(from_descending(charpoly_coeffs(s)))
    if roots is None:
        raise UnsupportedError("matrix has eigenvalues outside Q")
    cols, values = [], []
    for lam in sorted(roots):
        for v in nullspace(msub(s, mscale(lam, identity(m))), m):
            cols.append(v)
            values.append(lam)
    if len(cols) != m:
        raise PreconditionError("matrix is not semisimple")
    return transpose(tuple(cols)), tuple(values)


def replica_span_of_semisimple(s) -> tuple[Matrix, ...]:
    """Basis of the replica space of a semisimple matrix with rational spectrum.

    Replicas are the matrices diagonal in an eigenbasis of s whose eigenvalue
    tuples satisfy every Q-linear relation among the eigenvalues of s.
    """
    s = tuple(tuple(Q(x) for x in r) for r in s)
    m = len(s)
    if is_zero(s):
        return ()
    p, lam = rational_eigenbasis(s)
    relations = nullspace((lam,), m)
    tuples = nullspace(relations, m) if relations else [tuple(1 if i == j else 0 for j in range(m)) for i in range(m)]
    pinv = inverse(p)
    return tuple(matmul(matmul(p, diag(mu)), pinv) for mu in tuples)


@dataclass(frozen=True)
class HullWitness:
    """The first basis element whose Jordan parts or replicas left the input."""

    element: Vector
    part: str
    escaped: Vector

    def __str__(self):
        from .linalg import fmt

        e = ", ".join(fmt(x) for x in self.element)
        return f"{self.part} of ({e}) is not in the input"


@dataclass(frozen=True)
class HullResult:
    hull: Subalgebra
    is_algebraic: bool
    witness: HullWitness | None = None
    rounds: int = field(default=0, compare=False)


def _parts(L: LieAlgebra, x: Vector) -> list[tuple[str, Vector]]:
    a = L.realize(x)
    jp = jordan_decompose(a)
    out = []
    for label, m in (("semisimple part", jp.semisimple_part), ("nilpotent part", jp.nilpotent_part)):
        c = L.coordinates(m)
        if c is None:
            raise UnsupportedError(f"{label} of an element falls outside the realization of {L.name}")
        out.append((label, c))
    try:
        replicas = replica_span_of_semisimple(jp.semisimple_part)
    except UnsupportedError as exc:
        raise UnsupportedError(f"element {tuple(str(v) for v in x)} has irrational spectrum") from exc
    for r in replicas:
        c = L.coordinates(r)
        if c is None:
            raise UnsupportedError(f"a replica falls outside the realization of {L.name}")
        out.append(("replica", c))
    return out


def algebraic_hull(h: Subalgebra) -> HullResult:
    """Smallest subalgebra containing h that is closed under Jordan parts and replicas."""
    L = h.ambient
    if not L.has_realization:
        raise PreconditionError(f"{L.name} has no matrix realization")
    current = h
    witness = None
    rounds = 0
    while True:
        rounds += 1
        new = []
        for b in current.basis:
            for label, v in _parts(L, b):
                if not current.contains(v):
                    new.append(v)
                    if witness is None:
                        witness = HullWitness(b, label, v)
        if not new:
            break
        current = generated(L, list(current.basis) + new)
    return HullResult(current, current == h, witness, rounds)


def is_algebraic(h: Subalgebra) -> bool:
    return algebraic_hull(h).is_algebraic


# -- lines in sl2 and orbit dimensions ------------------------------------

class LineOrbit(str, enum.Enum):
    SEMISIMPLE = "semisimple"
    NILPOTENT = "nilpotent"


def _line_vector(p) -> Vector:
    if isinstance(p, SubspacePoint):
        if p.k != 1:
            raise InputError(f"expected a line, got a {p.k}-dimensional subspace")
        return p.basis_matrix[0]
    v = tuple(Q(x) for x in p)
    if is_zero(v):
        raise InputError("zero vector does not span a line")
    return v


def classify_line_sl2(p, L: LieAlgebra | None = None) -> LineOrbit:
    """Orbit type of a line in sl2 from the determinant of a spanning matrix."""
    from .lie_core.builtins import sl2

    L = L or sl2()
    x = _line_vector(p)
    if len(x) != L.dim or L.matrix_size != 2:
        raise InputError("classify_line_sl2 needs a line in a 2x2 realization of sl2")
    return LineOrbit.NILPOTENT if det(L.realize(x)) == 0 else LineOrbit.SEMISIMPLE


def orbit_dimension_projective(x, L: LieAlgebra) -> int:
    """dim([g, x] + Q x) - 1: the dimension of the orbit of the line [x]."""
    x = _line_vector(x)
    if len(x) != L.dim:
        raise InputError(f"vector of length {len(x)} in an algebra of dimension {L.dim}")
    rows = [L.bracket(L.basis_vector(i), x) for i in range(L.dim)] + [x]
    return rank(rows) - 1


# -- discreteness of torus directions -------------------------------------

def primitive_directions(m: int, height: int) -> list[tuple[int, ...]]:
    """Primitive w in Z^m, sum zero, max |w_i| <= height, first nonzero positive."""
    out = []
    for w in product(range(-height, height + 1), repeat=m):
        if sum(w) != 0 or not any(w):
            continue
        try:
            p = WeightVector(w).weights
        except InputError:
            continue
        if p == w:
            out.append(w)
    return out


@dataclass(frozen=True)
class DirectionScan:
    """Primitive torus directions of a family of lines at sample parameters.

    ``forced_constant`` records the counting argument: a family of degree d
    meets a fixed line at most d times unless it is that line everywhere, so
    more than d·|window| samples inside the window force a single direction.
    """

    directions: tuple[tuple[int, ...], ...]
    within_window: bool
    window_size: int
    degree: int
    forced_constant: bool
    constant: bool

    @property
    def consistent(self) -> bool:
        return not (self.within_window and self.forced_constant) or self.constant


def direction_scan(path: PolynomialPath, L: LieAlgebra, samples: Sequence, height: int) -> DirectionScan:
    """Read off the primitive weight direction of each diagonal fiber."""
    if path.k != 1:
        raise InputError("direction_scan needs a family of lines")
    m = L.matrix_size
    dirs = []
    for t in samples:
        row = path.evaluate(t)[0]
        if is_zero(row):
            raise InputError(f"family vanishes at t = {t}")
        a = L.realize(row)
        if not is_diagonal(a):
            raise InputError(f"fiber at t = {t} is not diagonal")
        dirs.append(WeightVector(tuple(a[i][i] for i in range(m))).weights)
    window = primitive_directions(m, height)
    inside = all(max(abs(x) for x in d) <= height for d in dirs)
    deg = path.degree
    forced = len(samples) > max(deg, 1) * len(window)
    return DirectionScan(tuple(dirs), inside, len(window), deg, forced, len(set(dirs)) <= 1)


__all__ = [
    "DirectionScan",
    "HullResult",
    "HullWitness",
    "LineOrbit",
    "WeightVector",
    "algebraic_hull",
    "classify_line_sl2",
    "direction_scan",
    "is_algebraic",
    "orbit_dimension_projective",
    "primitive_directions",
    "rational_eigenbasis",
    "replica_span_of_semisimple",
    "torus_direction_is_algebraic",
    "torus_killing_gram",
    "torus_killing_regular",
]
