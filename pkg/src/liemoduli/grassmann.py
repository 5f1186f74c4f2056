"""Points and polynomial curves in Gr(k, n), Plücker coordinates, limits.

A point is stored twice over: as the reduced row-echelon basis of the
subspace and as its Plücker vector (maximal minors in lexicographic column
order, scaled so the first nonzero entry is 1). Each determines the other.

Limits of a polynomial path t -> span(rows(t)) are computed on the Plücker
polynomials: divide out their common factor, then either evaluate (finite
parameter) or keep the coefficients of the top common degree (t -> oo,
i.e. substitute t = 1/s and set s = 0).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

from sympy import Poly, QQ, Symbol
from sympy.polys.rings import ring

from .errors import DegenerateParameterError, InputError, RankError
from .linalg import (
    ONE,
    ZERO,
    Matrix,
    Q,
    Vector,
    det,
    is_zero,
    lincomb,
    matvec,
    normalize_first_nonzero,
    rref,
)
from .lie_core.algebra import LieAlgebra
from .polynomials import coefficients, evaluate, poly

INFINITY = "inf"
Parameter = Union[Fraction, str]


def parse_parameter(x) -> Parameter:
    if isinstance(x, str) and x.strip().lower() in ("inf", "oo", "infinity", "+inf"):
        return INFINITY
    if isinstance(x, float) and math.isinf(x) and x > 0:
        return INFINITY
    return Q(x)


def parameter_sort_key(p: Parameter):
    return (1, 0) if p == INFINITY else (0, p)


def format_parameter(p: Parameter) -> str:
    from .linalg import fmt

    return INFINITY if p == INFINITY else fmt(p)


def _signed(index: Sequence[int]) -> tuple[int, tuple[int, ...] | None]:
    """Sign of the sorting permutation and the sorted tuple (None if repeated)."""
    idx = list(index)
    if len(set(idx)) != len(idx):
        return 0, None
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign, tuple(sorted(idx))


def _minors(rows: Matrix, n: int, k: int) -> tuple[Fraction, ...]:
    return tuple(det(tuple(tuple(r[c] for c in cols) for r in rows)) for cols in combinations(range(n), k))


@dataclass(frozen=True)
class SubspacePoint:
    """A k-dimensional subspace of Q^n (a point of Gr(k, n))."""

    ambient_dim: int
    k: int
    basis_matrix: Matrix
    pluecker: tuple[Fraction, ...]

    @classmethod
    def from_echelon(cls, n: int, basis: Matrix, pivots=None) -> "SubspacePoint":
        k = len(basis)
        p = _minors(basis, n, k) if k else (ONE,)
        return cls(n, k, tuple(basis), normalize_first_nonzero(p))

    @classmethod
    def from_pluecker(cls, n: int, k: int, coords: Sequence) -> "SubspacePoint":
        """Rebuild the subspace from a (decomposable) Plücker vector."""
        coords = tuple(Q(c) for c in coords)
        subsets = list(combinations(range(n), k))
        if len(coords) != len(subsets):
            raise InputError(f"expected {len(subsets)} Plücker coordinates for Gr({k}, {n})")
        if is_zero(coords):
            raise RankError("zero Plücker vector")
        table = dict(zip(subsets, coords))
        i0 = next(s for s in subsets if table[s] != 0)
        p0 = table[i0]
        rows = []
        for r in range(k):
            row = []
            for j in range(n):
                idx = i0[:r] + (j,) + i0[r + 1:]
                sign, key = _signed(idx)
                row.append(ZERO if key is None else sign * table[key] / p0)
            rows.append(tuple(row))
        pt = canonicalize(rows)
        if pt.pluecker != normalize_first_nonzero(coords):
            raise InputError("Plücker vector is not decomposable")
        return pt

    def contains(self, v) -> bool:
        v = tuple(Q(x) for x in v)
        piv = self.pivots
        return lincomb([v[p] for p in piv], self.basis_matrix, self.ambient_dim) == v

    @property
    def pivots(self) -> tuple[int, ...]:
        out = []
        for r in self.basis_matrix:
            out.append(next(i for i, x in enumerate(r) if x != 0))
        return tuple(out)

    def pluecker_table(self) -> dict[tuple[int, ...], Fraction]:
        return dict(zip(combinations(range(self.ambient_dim), self.k), self.pluecker))

    def __repr__(self):
        from .linalg import fmt

        rows = "; ".join(" ".join(fmt(x) for x in r) for r in self.basis_matrix)
        return f"SubspacePoint(n={self.ambient_dim}, k={self.k}, [{rows}])"


def canonicalize(m: Sequence[Sequence], ambient_dim: int | None = None) -> SubspacePoint:
    """Reduced row-echelon basis and normalized Plücker vector of span(rows of m)."""
    rows = [tuple(Q(x) for x in r) for r in m]
    if ambient_dim is None:
        if not rows:
            raise InputError("cannot infer the ambient dimension of an empty matrix")
        ambient_dim = len(rows[0])
    if any(len(r) != ambient_dim for r in rows):
        raise InputError("rows have inconsistent lengths")
    basis, pivots = rref(rows, ambient_dim)
    if len(basis) != len(rows):
        raise RankError(f"matrix has rank {len(basis)} < {len(rows)} rows")
    return SubspacePoint.from_echelon(ambient_dim, basis, pivots)


def is_lie_subalgebra(p: SubspacePoint, L: LieAlgebra) -> bool:
    """Is the subspace closed under the bracket of L?"""
    if p.ambient_dim != L.dim:
        raise InputError(f"point lives in dimension {p.ambient_dim}, algebra has dimension {L.dim}")
    b = p.basis_matrix
    return all(p.contains(L.bracket(b[i], b[j])) for i in range(len(b)) for j in range(i + 1, len(b)))


def pluecker_relation_index_pairs(n: int, k: int):
    for small in combinations(range(n), k - 1):
        for big in combinations(range(n), k + 1):
            yield small, big


def pluecker_relations_hold(p: SubspacePoint) -> bool:
    """Every quadratic Plücker relation vanishes on p's coordinates."""
    n, k = p.ambient_dim, p.k
    if k in (0, n):
        return True
    table = p.pluecker_table()

    def coord(idx):
        sign, key = _signed(idx)
        return ZERO if key is None else sign * table[key]

    for small, big in pluecker_relation_index_pairs(n, k):
        total = ZERO
        for l, j in enumerate(big):
            term = coord(small + (j,)) * coord(big[:l] + big[l + 1:])
            total += term if l % 2 == 0 else -term
        if total != 0:
            return False
    return True


# -- the equations of Lambda -------------------------------------------------

@dataclass(frozen=True)
class PolynomialSystem:
    """Polynomials in the Plücker coordinates whose common zeros on Gr(k, n) form Λ."""

    n: int
    k: int
    variables: tuple[tuple[int, ...], ...]
    pluecker_relations: tuple[Poly, ...]
    bracket_conditions: tuple[Poly, ...]

    @property
    def polynomials(self) -> tuple[Poly, ...]:
        return self.pluecker_relations + self.bracket_conditions

    def evaluate(self, f: Poly, coords: Sequence) -> Fraction:
        values = [Q(c) for c in coords]
        total = ZERO
        for monom, c in f.terms():
            term = Q(c)
            for v, e in zip(values, monom):
                if e:
                    term *= v ** e
            total += term
        return total

    def vanishes_at(self, point: SubspacePoint | Sequence) -> bool:
        coords = point.pluecker if isinstance(point, SubspacePoint) else point
        return all(self.evaluate(f, coords) == 0 for f in self.polynomials)


def lambda_equations(L: LieAlgebra, k: int) -> PolynomialSystem:
    """Plücker relations plus bracket-closure conditions for k-planes in L.

    For a decomposable k-vector w spanning W, the contractions of w against
    (k-1)-subsets of the dual basis span W, and z lies in W iff z ∧ w = 0.
    So W is a subalgebra iff [x_J, x_J'] ∧ w = 0 for all pairs of
    contractions; each component of that (k+1)-vector is a cubic form.
    """
    n = L.dim
    if not 1 <= k <= n:
        raise InputError(f"k must satisfy 1 <= k <= {n}")
    subsets = list(combinations(range(n), k))
    names = ["p_" + "_".join(map(str, sub)) for sub in subsets]
    # sparse ring arithmetic is far cheaper than Poly with many generators
    R, *gens = ring(names, QQ)
    var = dict(zip(subsets, gens))
    zero = R.zero

    def coord(idx):
        sign, key = _signed(idx)
        if key is None:
            return zero
        return var[key] if sign > 0 else -var[key]

    relations = []
    if 1 < k < n:
        for small, big in pluecker_relation_index_pairs(n, k):
            total = zero
            for l, j in enumerate(big):
                term = coord(small + (j,)) * coord(big[:l] + big[l + 1:])
                total = total + term if l % 2 == 0 else total - term
            relations.append(total)

    conditions = []
    if 1 < k < n:
        spanning = []
        for J in combinations(range(n), k - 1):
            spanning.append([coord(J + (j,)) for j in range(n)])
        table = [[L.basis_bracket(a, b) for b in range(n)] for a in range(n)]
        for x_i in range(len(spanning)):
            for y_i in range(x_i + 1, len(spanning)):
                x, y = spanning[x_i], spanning[y_i]
                z = [zero] * n
                for a in range(n):
                    if not x[a]:
                        continue
                    for b in range(n):
                        if a == b or not y[b]:
                            continue
                        prod = x[a] * y[b]
                        for c, s in enumerate(table[a][b]):
                            if s:
                                z[c] = z[c] + prod * QQ(s.numerator, s.denominator)
                for K in combinations(range(n), k + 1):
                    total = zero
                    for l, c in enumerate(K):
                        if not z[c]:
                            continue
                        term = z[c] * coord(K[:l] + K[l + 1:])
                        total = total + term if l % 2 == 0 else total - term
                    conditions.append(total)
    symbols = [Symbol(name) for name in names]
    return PolynomialSystem(n, k, tuple(subsets), _dedupe(relations, symbols), _dedupe(conditions, symbols))


def _dedupe(polys, symbols):
    seen = set()
    out = []
    for f in polys:
        if not f:
            continue
        g = f.monic()
        key = tuple(sorted(g.terms()))
        if key not in seen:
            seen.add(key)
            out.append(Poly.from_dict(dict(g), *symbols, domain=QQ))
    return tuple(out)


# -- polynomial paths ------------------------------------------------------

def _poly_det(m: list[list[Poly]]) -> Poly:
    """Fraction-free (Bareiss) determinant over Q[t]."""
    k = len(m)
    if k == 0:
        return None
    a = [row[:] for row in m]
    sign = 1
    prev = None
    for c in range(k - 1):
        p = next((i for i in range(c, k) if not a[i][c].is_zero), None)
        if p is None:
            return a[0][0] * 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        for i in range(c + 1, k):
            for j in range(c + 1, k):
                num = a[i][j] * a[c][c] - a[i][c] * a[c][j]
                a[i][j] = num if prev is None else num.exquo(prev)
        prev = a[c][c]
    d = a[k - 1][k - 1]
    return d if sign > 0 else -d


@dataclass(frozen=True)
class PolynomialPath:
    """t -> span of the rows of a k×n matrix of polynomials in t.

    ``entries[r][c]`` holds the ascending coefficients of one polynomial.
    """

    parameter: str
    entries: tuple[tuple[tuple[Fraction, ...], ...], ...]
    ambient_dim: int

    @classmethod
    def from_coefficients(cls, entries, parameter: str = "t", ambient_dim: int | None = None) -> "PolynomialPath":
        rows = []
        for r in entries:
            row = []
            for c in r:
                cs = [Q(x) for x in (c if isinstance(c, (list, tuple)) else [c])]
                while len(cs) > 1 and cs[-1] == 0:
                    cs.pop()
                row.append(tuple(cs) or (ZERO,))
            rows.append(tuple(row))
        if ambient_dim is None:
            if not rows:
                raise InputError("empty path needs an explicit ambient dimension")
            ambient_dim = len(rows[0])
        if any(len(r) != ambient_dim for r in rows):
            raise InputError("path rows have inconsistent lengths")
        return cls(parameter, tuple(rows), ambient_dim)

    @classmethod
    def constant(cls, rows, parameter: str = "t", ambient_dim: int | None = None) -> "PolynomialPath":
        return cls.from_coefficients([[(x,) for x in r] for r in rows], parameter, ambient_dim)

    @classmethod
    def from_layers(cls, layers: Sequence[Matrix], parameter: str = "t") -> "PolynomialPath":
        """Path sum_d t^d layers[d]; all layers are k×n rational matrices."""
        k, n = len(layers[0]), len(layers[0][0]) if layers[0] else 0
        entries = [[tuple(Q(layers[d][r][c]) for d in range(len(layers))) for c in range(n)] for r in range(k)]
        return cls.from_coefficients(entries, parameter, n)

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return self.ambient_dim

    @property
    def degree(self) -> int:
        return max((len(c) - 1 for r in self.entries for c in r), default=0)

    def evaluate(self, t) -> Matrix:
        t = Q(t)
        out = []
        for r in self.entries:
            row = []
            for cs in r:
                v = ZERO
                for c in reversed(cs):
                    v = v * t + c
                row.append(v)
            out.append(tuple(row))
        return tuple(out)

    def polys(self) -> list[list[Poly]]:
        gen = Symbol(self.parameter)
        return [[poly(cs, gen) for cs in r] for r in self.entries]

    def pluecker_polys(self) -> list[Poly]:
        """Maximal minors of the path, in lexicographic column order."""
        gen = Symbol(self.parameter)
        k, n = self.k, self.n
        if k == 0:
            return [poly([1], gen)]
        ps = self.polys()
        return [_poly_det([[ps[r][c] for c in cols] for r in range(k)]) for cols in combinations(range(n), k)]

    def is_generic_rank(self) -> bool:
        return any(not p.is_zero for p in self.pluecker_polys())

    def map_rows(self, linear: Matrix) -> "PolynomialPath":
        """Apply a linear map (acting on coordinate columns) to every row."""
        layers = [self._layer(d) for d in range(self.degree + 1)]
        new = [tuple(matvec(linear, row) for row in layer) for layer in layers]
        return PolynomialPath.from_layers(new, self.parameter)

    def _layer(self, d: int) -> Matrix:
        return tuple(tuple(cs[d] if d < len(cs) else ZERO for cs in r) for r in self.entries)


def adjoint_path(L: LieAlgebra, rows: Sequence[Vector], nilpotent: Vector, parameter: str = "t") -> PolynomialPath:
    """Rows of Ad(exp(t N)) applied to ``rows``: sum_k t^k/k! (ad N)^k x."""
    adn = L.ad(nilpotent)
    layers = [tuple(tuple(Q(x) for x in r) for r in rows)]
    fact = 1
    for d in range(1, L.dim + 2):
        nxt = tuple(matvec(adn, r) for r in layers[-1])
        if is_zero(nxt) if nxt else True:
            break
        layers.append(nxt)
        fact *= d
    if len(layers) > L.dim + 1:
        raise InputError("element is not ad-nilpotent")
    scaled = []
    fact = 1
    for d, layer in enumerate(layers):
        if d:
            fact *= d
        scaled.append(tuple(tuple(x / fact for x in r) for r in layer))
    return PolynomialPath.from_layers(scaled, parameter)


def limit_of_path(path: PolynomialPath, at) -> SubspacePoint:
    """The limit in Gr(k, n) of span(rows(t)) as t -> at (a rational or ``"inf"``)."""
    at = parse_parameter(at)
    k, n = path.k, path.n
    if k == 0:
        return SubspacePoint(n, 0, (), (ONE,))
    ps = path.pluecker_polys()
    nonzero = [p for p in ps if not p.is_zero]
    if not nonzero:
        raise RankError("all Plücker polynomials of the path vanish identically")
    g = nonzero[0]
    for p in nonzero[1:]:
        g = g.gcd(p)
    reduced = [p if p.is_zero else p.exquo(g) for p in ps]
    if at == INFINITY:
        top = max(p.degree() for p in reduced if not p.is_zero)
        vec = [ZERO if p.is_zero or p.degree() < top else coefficients(p)[top] for p in reduced]
    else:
        vec = [evaluate(p, at) for p in reduced]
    return SubspacePoint.from_pluecker(n, k, vec)


def evaluate_path_point(path: PolynomialPath, t) -> SubspacePoint:
    """The fiber at a finite parameter, requiring full rank there."""
    try:
        return canonicalize(path.evaluate(t), path.n)
    except RankError as exc:
        raise DegenerateParameterError(f"path drops rank at t = {t}", parameter=Q(t)) from exc


__all__ = [
    "INFINITY",
    "PolynomialPath",
    "PolynomialSystem",
    "SubspacePoint",
    "adjoint_path",
    "canonicalize",
    "evaluate_path_point",
    "is_lie_subalgebra",
    "lambda_equations",
    "limit_of_path",
    "parse_parameter",
    "pluecker_relations_hold",
]
