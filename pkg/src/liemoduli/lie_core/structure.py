"""Radicals, Levi classes and ranks of subalgebras."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple

from ..errors import InputError, PreconditionError, UnsupportedError
from ..linalg import (
    Matrix,
    Vector,
    ZERO,
    charpoly_coeffs,
    det,
    is_nilpotent,
    is_zero,
    matmul,
    nullspace,
    rref,
    solve,
    trace,
    transpose,
    vscale,
)
from .algebra import LieAlgebra
from .subalgebra import Subalgebra, derived_subalgebra, intersection, radical_series

# Largest ambient dimension accepted by the Levi catalog (covers sl3 and gl3).
CATALOG_AMBIENT_BOUND = 9


@dataclass(frozen=True, order=True)
class SemisimpleClass:
    """Isomorphism class (over the algebraic closure) of a semisimple algebra."""

    label: str
    dim: int
    rank: int

    def __str__(self):
        return self.label


CATALOG: dict[str, SemisimpleClass] = {
    c.label: c
    for c in (
        SemisimpleClass("0", 0, 0),
        SemisimpleClass("A1", 3, 1),
        SemisimpleClass("A1+A1", 6, 2),
        SemisimpleClass("A2", 8, 2),
    )
}

_BY_FINGERPRINT = {(c.dim, c.rank): c for c in CATALOG.values()}

# Pairs (a, b) with an injective homomorphism a -> b. A1+A1 and A2 are
# recorded as mutually non-comparable: sl2 x sl2 has no faithful 3-dim
# representation, so it does not embed in sl3.
INJECTIONS = frozenset(
    {
        ("0", "0"), ("0", "A1"), ("0", "A1+A1"), ("0", "A2"),
        ("A1", "A1"), ("A1", "A1+A1"), ("A1", "A2"),
        ("A1+A1", "A1+A1"),
        ("A2", "A2"),
    }
)


def semisimple_class(label) -> SemisimpleClass:
    if isinstance(label, SemisimpleClass):
        label = label.label
    try:
        return CATALOG[label]
    except KeyError:
        raise InputError(f"unknown semisimple class {label!r}; catalog is {sorted(CATALOG)}") from None


def semisimple_class_leq(a, b) -> bool:
    """True iff the catalog records an injection a -> b."""
    return (semisimple_class(a).label, semisimple_class(b).label) in INJECTIONS


# -- Killing-form radicals -------------------------------------------------

def unipotent_radical_via_killing(h: Subalgebra, s_ambient: LieAlgebra | None = None) -> Subalgebra:
    """Kernel of x -> kappa(x, .)|_h, with kappa the Killing form of the ambient.

    For algebraic solvable h inside a semisimple ambient this is the
    unipotent radical of h.
    """
    L = h.ambient
    if s_ambient is not None and s_ambient != L:
        raise InputError("subalgebra does not live in the given ambient algebra")
    if not L.is_semisimple():
        raise PreconditionError(f"Killing form of {L.name} is degenerate")
    gram = h.gram()
    kernel = nullspace(gram, h.dim)
    return Subalgebra(L, [h.element(c) for c in kernel])


def intrinsic_killing_gram(h: Subalgebra) -> Matrix:
    ads = [h.ad(b) for b in h.basis]
    return tuple(tuple(trace(matmul(a, b)) for b in ads) for a in ads)


def solvable_radical(h: Subalgebra) -> Subalgebra:
    """Orthogonal complement of [h, h] under the Killing form of h itself."""
    if h.dim == 0:
        return h
    d = derived_subalgebra(h)
    ads = [h.ad(b) for b in h.basis]
    dads = [h.ad(x) for x in d.basis]
    gram = tuple(tuple(trace(matmul(a, b)) for b in dads) for a in ads)
    if not dads:
        return h
    kernel = nullspace(transpose(gram), h.dim)
    return Subalgebra(h.ambient, [h.element(c) for c in kernel], check=False)


def nilpotent_ideal(h: Subalgebra) -> Subalgebra:
    """Kernel of the trace form tr(XY) of the realization, restricted to h.

    For solvable h over Q this is the set of nilpotent elements of h: in a
    triangular basis tr(XY) pairs diagonals, and a rational diagonal that is
    orthogonal to itself vanishes.
    """
    mats = h.matrices()
    gram = tuple(tuple(trace(matmul(a, b)) for b in mats) for a in mats)
    kernel = nullspace(gram, h.dim)
    return Subalgebra(h.ambient, [h.element(c) for c in kernel], check=False)


def rank_of_solvable(h: Subalgebra) -> int:
    """Dimension of a maximal torus of a solvable subalgebra."""
    if not radical_series(h).is_solvable:
        raise PreconditionError("rank_of_solvable needs a solvable subalgebra")
    L = h.ambient
    if L.is_semisimple():
        return h.dim - unipotent_radical_via_killing(h).dim
    if not L.has_realization:
        raise PreconditionError(f"{L.name} is neither semisimple nor realized by matrices")
    return h.dim - nilpotent_ideal(h).dim


# -- Levi classes ----------------------------------------------------------

def _complement(h: Subalgebra, sub: Subalgebra) -> list[Vector]:
    basis = list(sub.basis)
    chosen = []
    n = h.ambient.dim
    for b in h.basis:
        if len(rref(basis + chosen + [b], n)[1]) > len(basis) + len(chosen):
            chosen.append(b)
    return chosen


def _quotient(h: Subalgebra, rad: Subalgebra) -> LieAlgebra:
    L = h.ambient
    comp = _complement(h, rad)
    full_basis = list(rad.basis) + comp
    cols = transpose(tuple(full_basis))
    r = rad.dim
    d = len(comp)
    brackets = {}
    for i in range(d):
        for j in range(i + 1, d):
            coeffs = solve(cols, L.bracket(comp[i], comp[j]))
            q = coeffs[r:]
            if not is_zero(q):
                brackets[(i, j)] = {k: x for k, x in enumerate(q) if x}
    return LieAlgebra("quotient", [f"q{i}" for i in range(d)], brackets)


def _zero_multiplicity(coeffs) -> int:
    k = 0
    for c in reversed(coeffs):
        if c != 0:
            break
        k += 1
    return k


def semisimple_rank(S: LieAlgebra, trials: int = 8, seed: int = 0) -> int:
    """Minimal nullity of ad x over candidate x (basis, sums, seeded random)."""
    n = S.dim
    rng = random.Random(seed)
    candidates = [S.basis_vector(i) for i in range(n)]
    candidates.append(tuple(1 for _ in range(n)))
    candidates += [tuple(rng.randint(-9, 9) for _ in range(n)) for _ in range(trials)]
    best = n
    for x in candidates:
        if is_zero(x):
            continue
        best = min(best, _zero_multiplicity(charpoly_coeffs(S.ad(x))))
    return best


class LeviResult(NamedTuple):
    semisimple_class: SemisimpleClass
    complement: Subalgebra | None


def find_sl2_triple(h: Subalgebra, avoid: Subalgebra | None = None):
    """Search h for (e, hh, f) with [hh,e]=2e, [hh,f]=-2f, [e,f]=hh.

    Candidates for e are basis vectors of h and [h, h] and small
    combinations of the latter. hh and f are then found by linear solves.
    Returns None when no candidate completes.
    """
    L = h.ambient
    n = L.dim
    d = derived_subalgebra(h)
    cands = list(d.basis) + list(h.basis)
    db = list(d.basis)
    for i in range(len(db)):
        for j in range(i + 1, len(db)):
            cands.append(tuple(a + b for a, b in zip(db[i], db[j])))
            cands.append(tuple(a - b for a, b in zip(db[i], db[j])))
    hb = h.basis
    for e in cands:
        if is_zero(e) or (avoid is not None and avoid.contains(e)):
            continue
        if not is_nilpotent(h.ad(e)):
            continue
        # hh = [e, y] with [hh, e] = 2e
        cols_e = [L.bracket(L.bracket(e, b), e) for b in hb]
        y = solve(transpose(tuple(cols_e)), vscale(2, e))
        if y is None:
            continue
        hh = L.bracket(e, h.element(y))
        # f with [e, f] = hh and [hh, f] + 2 f = 0
        rows_a = [L.bracket(e, b) for b in hb]
        rows_b = [tuple(x + 2 * z for x, z in zip(L.bracket(hh, b), b)) for b in hb]
        system = transpose(tuple(rows_a)) + transpose(tuple(rows_b))
        rhs = tuple(hh) + (ZERO,) * n
        c = solve(system, rhs)
        if c is None:
            continue
        f = h.element(c)
        if (
            L.bracket(hh, e) == vscale(2, e)
            and L.bracket(hh, f) == vscale(-2, f)
            and L.bracket(e, f) == hh
            and not is_zero(hh)
        ):
            return e, hh, f
    return None


def levi_semisimple_class(h: Subalgebra) -> LeviResult:
    """Class of a Levi factor of h, and an explicit Levi subalgebra when found."""
    L = h.ambient
    if L.dim > CATALOG_AMBIENT_BOUND:
        raise UnsupportedError(
            f"Levi catalog supports ambient dimension <= {CATALOG_AMBIENT_BOUND}, got {L.dim}"
        )
    rad = solvable_radical(h)
    d = h.dim - rad.dim
    if d == 0:
        return LeviResult(CATALOG["0"], Subalgebra(L, [], check=False))
    S = _quotient(h, rad)
    if not S.is_semisimple():
        raise UnsupportedError("quotient by the radical has degenerate Killing form")
    fp = (d, semisimple_rank(S))
    cls = _BY_FINGERPRINT.get(fp)
    if cls is None:
        raise UnsupportedError(f"semisimple quotient with (dim, rank) = {fp} is outside the catalog")
    if rad.dim == 0:
        return LeviResult(cls, h)
    der = derived_subalgebra(h)
    if der.dim == d and intersection(der, rad).dim == 0:
        return LeviResult(cls, der)
    if cls.label == "A1":
        triple = find_sl2_triple(h, avoid=rad)
        if triple is not None:
            return LeviResult(cls, Subalgebra(L, list(triple)))
    return LeviResult(cls, None)


def killing_kernel_codimension(h: Subalgebra) -> int:
    return h.dim - unipotent_radical_via_killing(h).dim


def is_nondegenerate(gram: Matrix) -> bool:
    return det(gram) != 0 if gram else True


__all__ = [
    "CATALOG",
    "CATALOG_AMBIENT_BOUND",
    "INJECTIONS",
    "LeviResult",
    "SemisimpleClass",
    "find_sl2_triple",
    "intrinsic_killing_gram",
    "levi_semisimple_class",
    "nilpotent_ideal",
    "rank_of_solvable",
    "semisimple_class",
    "semisimple_class_leq",
    "semisimple_rank",
    "solvable_radical",
    "unipotent_radical_via_killing",
]
