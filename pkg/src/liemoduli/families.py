"""One-parameter families of subalgebras and their fiberwise invariants."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count
from typing import Any, Callable, Sequence

from .errors import (
    InputError,
    InterpolationError,
    NonFlatIntersectionError,
    NotSubalgebraError,
    PreconditionError,
    RankError,
)
from .grassmann import (
    Parameter,
    PolynomialPath,
    canonicalize,
    evaluate_path_point,
    format_parameter,
    is_lie_subalgebra,
    limit_of_path,
    parameter_sort_key,
    parse_parameter,
)
from .lie_core.algebra import LieAlgebra
from .lie_core.structure import SemisimpleClass, levi_semisimple_class, rank_of_solvable, semisimple_class_leq
from .lie_core.subalgebra import Subalgebra, intersection, radical_series
from .linalg import Q, ZERO, nullspace, rank


@dataclass(frozen=True)
class SubalgebraFamily:
    """A curve of k-dimensional subalgebras: fibers of ``path`` at parameters."""

    path: PolynomialPath
    ambient: LieAlgebra
    samples: tuple[Fraction, ...]
    limit_points: tuple[Parameter, ...] = ()

    def __post_init__(self):
        if self.path.n != self.ambient.dim:
            raise InputError(f"path lives in dimension {self.path.n}, {self.ambient.name} has {self.ambient.dim}")
        object.__setattr__(self, "samples", tuple(sorted(Q(t) for t in self.samples)))
        pts = sorted({parse_parameter(p) for p in self.limit_points}, key=parameter_sort_key)
        object.__setattr__(self, "limit_points", tuple(pts))

    @property
    def k(self) -> int:
        return self.path.k

    def validate(self) -> "SubalgebraFamily":
        """Check every sample fiber has full rank and is a subalgebra."""
        for t in self.samples:
            evaluate_family(self, t)
        return self


def make_family(path: PolynomialPath, ambient: LieAlgebra, samples: Sequence, limit_points: Sequence = ()) -> SubalgebraFamily:
    return SubalgebraFamily(path, ambient, tuple(samples), tuple(limit_points)).validate()


def evaluate_family(f: SubalgebraFamily, t) -> Subalgebra:
    """The fiber at a finite parameter where the path has full rank."""
    t = Q(t)
    point = evaluate_path_point(f.path, t)
    if not is_lie_subalgebra(point, f.ambient):
        raise NotSubalgebraError(f"fiber at t = {format_parameter(t)} is not closed under the bracket")
    return Subalgebra(f.ambient, point.basis_matrix, check=False)


def limit_fiber(f: SubalgebraFamily, at) -> Subalgebra:
    point = limit_of_path(f.path, at)
    if not is_lie_subalgebra(point, f.ambient):
        raise NotSubalgebraError(f"limit at {format_parameter(parse_parameter(at))} is not a subalgebra")
    return Subalgebra(f.ambient, point.basis_matrix, check=False)


def fibers(f: SubalgebraFamily) -> list[tuple[Parameter, Subalgebra, bool]]:
    """(parameter, fiber, is_limit) over samples then limit points."""
    out = [(t, evaluate_family(f, t), False) for t in f.samples]
    out += [(p, limit_fiber(f, p), True) for p in f.limit_points]
    return out


# -- semicontinuity --------------------------------------------------------

def _leq(a, b) -> bool:
    if isinstance(a, SemisimpleClass) or isinstance(b, SemisimpleClass):
        return semisimple_class_leq(a, b)
    return a <= b


@dataclass(frozen=True)
class SemicontinuityReport:
    """Values of an invariant along a family and the lower-semicontinuity verdict.

    ``special`` holds the limit points and any sample whose value differs
    from the generic one; the verdict holds iff each of them is <= generic.
    """

    invariant: str
    generic: Any
    special: tuple[tuple[Parameter, Any], ...]
    values: tuple[tuple[Parameter, Any], ...] = ()
    verdict: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "special", tuple(self.special.items()) if isinstance(self.special, dict) else tuple(self.special))
        object.__setattr__(self, "verdict", all(_leq(v, self.generic) for _, v in self.special))

    def special_values(self) -> dict:
        return dict(self.special)


def generic_value(values: Sequence):
    """Most frequent value; a tie between distinct values is ill-posed."""
    if not values:
        raise InputError("no samples to determine a generic value")
    counts = Counter(values).most_common()
    if len(counts) > 1 and counts[0][1] == counts[1][1]:
        raise InputError(f"samples do not single out a generic value: {counts[0][0]} and {counts[1][0]} tie")
    return counts[0][0]


def _scan(f: SubalgebraFamily, name: str, measure: Callable[[Subalgebra, Parameter], Any]) -> SemicontinuityReport:
    sample_vals = []
    for t in f.samples:
        sample_vals.append((t, measure(evaluate_family(f, t), t)))
    limit_vals = [(p, measure(limit_fiber(f, p), p)) for p in f.limit_points]
    gen = generic_value([v for _, v in sample_vals])
    special = [(t, v) for t, v in sample_vals if v != gen] + limit_vals
    return SemicontinuityReport(name, gen, tuple(special), tuple(sample_vals + limit_vals))


def rank_scan(f: SubalgebraFamily) -> SemicontinuityReport:
    def measure(h: Subalgebra, p):
        if not radical_series(h).is_solvable:
            raise PreconditionError(f"fiber at {format_parameter(p)} is not solvable")
        return rank_of_solvable(h)

    return _scan(f, "rank", measure)


def semisimple_class_scan(f: SubalgebraFamily) -> SemicontinuityReport:
    return _scan(f, "semisimple_class", lambda h, p: levi_semisimple_class(h).semisimple_class)


# -- unipotent-radical subfamily -------------------------------------------

def _candidate_parameters(path: PolynomialPath, avoid: set):
    """Deterministic stream of parameters where the path keeps full rank."""
    for i in count():
        for t in ((Fraction(i),) if i == 0 else (Fraction(i), Fraction(-i), Fraction(1, i + 1))):
            if t in avoid:
                continue
            if rank(path.evaluate(t)) == path.k:
                yield t


def _annihilator(rows, n: int):
    return nullspace(rows, n) if rows else [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]


def _fit_rows(constraints: list[tuple[Fraction, list]], n: int, d: int) -> list[tuple]:
    """All polynomial vectors of degree <= d with p(t) in W_t at the fit points.

    Unknowns are the coefficients c[j][e] of t^e in entry j, flattened
    entry-major; each annihilator row a of W_t gives sum_j a_j p_j(t) = 0.
    """
    eqs = []
    for t, ann in constraints:
        powers = [t ** e for e in range(d + 1)]
        for a in ann:
            eqs.append(tuple(a[j] * powers[e] for j in range(n) for e in range(d + 1)))
    return nullspace(eqs, n * (d + 1)) if eqs else _annihilator([], n * (d + 1))


def _as_path(sol, n: int, d: int) -> list[tuple]:
    return [tuple(sol[j * (d + 1) + e] for e in range(d + 1)) for j in range(n)]


def unipotent_radical_family(f: SubalgebraFamily, u: Subalgebra) -> SubalgebraFamily:
    """Fiberwise intersection with u, rebuilt as a polynomial family.

    Intersections are exact at every sample and limit point; their
    dimension must not jump. The polynomial path is recovered by solving for
    polynomial rows of degree <= the input degree that lie in the fiber at
    fit points, then checked at held-out parameters.
    """
    L = f.ambient
    if u.ambient != L:
        raise InputError("u lives in a different algebra")
    if not radical_series(u).is_nilpotent:
        raise PreconditionError("u must be a nilpotent subalgebra")
    dims: dict[str, int] = {}
    cuts: dict = {}
    for p, fib, _ in fibers(f):
        cut = intersection(fib, u)
        cuts[p] = cut
        dims[format_parameter(p)] = cut.dim
    if len(set(dims.values())) > 1:
        jumps = ", ".join(f"{k}: {v}" for k, v in dims.items())
        raise NonFlatIntersectionError(f"intersection dimension jumps along the family ({jumps})", dims)
    r = next(iter(dims.values())) if dims else intersection(evaluate_family(f, 0), u).dim
    n = L.dim
    if r == 0:
        empty = PolynomialPath(f.path.parameter, (), n)
        return SubalgebraFamily(empty, L, f.samples, f.limit_points)

    D = max(f.path.degree, 0)
    need = (f.k + 2) * (D + 1) + n + 1
    fit = list(f.samples)
    stream = _candidate_parameters(f.path, set(fit))
    while len(fit) < need:
        fit.append(next(stream))
    held_out = [next(stream) for _ in range(3)]
    constraints = []
    for t in fit:
        cut = intersection(evaluate_family(f, t), u)
        constraints.append((t, _annihilator(list(cut.basis), n)))

    probe = fit[-1]
    for d in range(D + 1):
        sols = _fit_rows(constraints, n, d)
        chosen, at_probe = [], []
        for s in sols:
            entries = _as_path(s, n, d)
            row = tuple(sum((c * probe ** e for e, c in enumerate(cs)), ZERO) for cs in entries)
            if rank(at_probe + [row]) > len(at_probe):
                chosen.append(entries)
                at_probe.append(row)
            if len(chosen) == r:
                break
        if len(chosen) < r:
            continue
        path = PolynomialPath.from_coefficients(chosen, f.path.parameter, n)
        if _verify(path, f, u, held_out + list(f.samples), r):
            return SubalgebraFamily(path, L, f.samples, f.limit_points)
    raise InterpolationError(f"no polynomial path of degree <= {D} reproduces the intersections")


def _verify(path: PolynomialPath, f: SubalgebraFamily, u: Subalgebra, params, r: int) -> bool:
    for t in params:
        rows = path.evaluate(t)
        if rank(rows) != r:
            return False
        cut = intersection(evaluate_family(f, t), u)
        if canonicalize(rows, path.n).basis_matrix != cut.basis:
            return False
    for p in f.limit_points:
        cut = intersection(limit_fiber(f, p), u)
        if limit_of_path(path, p).basis_matrix != cut.basis:
            return False
    return True


# -- flatness proxy --------------------------------------------------------

def flatness_proxy(f, samples: Sequence | None = None, limit_points: Sequence | None = None) -> bool:
    """Constant fiber dimension over all samples and limit points.

    Accepts a SubalgebraFamily or a bare PolynomialPath (with an explicit
    sample schedule). A sample where the path drops rank is a dimension
    jump in the naive pointwise fiber and makes the proxy fail.
    """
    if isinstance(f, SubalgebraFamily):
        path = f.path
        samples = f.samples if samples is None else samples
        limit_points = f.limit_points if limit_points is None else limit_points
    else:
        path = f
        samples = samples or ()
        limit_points = limit_points or ()
    k = path.k
    for t in samples:
        if rank(path.evaluate(Q(t))) != k:
            return False
    for p in limit_points:
        try:
            if limit_of_path(path, p).k != k:
                return False
        except RankError:
            return False
    return True


def conjugate_family(f: SubalgebraFamily, g) -> SubalgebraFamily:
    """Apply a fixed automorphism (matrix acting on coordinates) to every fiber."""
    g = tuple(tuple(Q(x) for x in r) for r in g)
    return SubalgebraFamily(f.path.map_rows(g), f.ambient, f.samples, f.limit_points)


__all__ = [
    "SemicontinuityReport",
    "SubalgebraFamily",
    "conjugate_family",
    "evaluate_family",
    "fibers",
    "flatness_proxy",
    "generic_value",
    "limit_fiber",
    "make_family",
    "rank_scan",
    "semisimple_class_scan",
    "unipotent_radical_family",
]
