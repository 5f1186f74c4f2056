"""Components glued along closed subsets, and a finite slice of lines in sl3.

Components are described by a representative, an invariant signature and a
membership predicate on points; closed subsets F_YX are predicates too, and
identification maps h_YX act on points. Identification of registered points
is kept in a union-find.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from networkx.utils import UnionFind

from .algebraicity import orbit_dimension_projective, primitive_directions
from .errors import InputError, MembershipError
from .grassmann import PolynomialPath, SubspacePoint, adjoint_path, canonicalize, limit_of_path
from .lie_core.algebra import LieAlgebra
from .lie_core.builtins import sl3
from .lie_core.jordan import is_semisimple_matrix
from .linalg import Q, diag, elementary, inverse, madd, matmul, nilpotent_exp, rank, trace

Point = SubspacePoint
Predicate = Callable[[SubspacePoint], bool]
PointMap = Callable[[SubspacePoint], SubspacePoint]


class ComponentKind(str, enum.Enum):
    NILPOTENT = "nilpotent-orbit-closure"
    SEMISIMPLE = "semisimple-orbit-closure"
    EXPLICIT = "explicit-subvariety"


@dataclass(frozen=True)
class Component:
    id: str
    kind: ComponentKind
    representative: SubspacePoint
    signature: tuple
    dim: int
    predicate: Predicate = field(compare=False, repr=False, default=None)
    boundary: tuple[SubspacePoint, ...] = field(default=(), compare=False)

    def contains(self, p: SubspacePoint) -> bool:
        if self.predicate is None:
            return p == self.representative or p in self.boundary
        return bool(self.predicate(p))

    def sample_points(self) -> tuple[SubspacePoint, ...]:
        return (self.representative,) + tuple(b for b in self.boundary if b != self.representative)


def _identity_map(p: SubspacePoint) -> SubspacePoint:
    return p


@dataclass(frozen=True)
class Overlap:
    """F_YX as a predicate on points of X, and h_YX : F_YX -> Y."""

    closed: Predicate
    map: PointMap = _identity_map


class GluingPattern:
    """Components plus overlap data keyed by ordered pairs (X, Y) of ids.

    A missing pair means F_YX is empty.
    """

    def __init__(self, components: Iterable[Component] = (), overlaps: dict | None = None):
        self.components: dict[str, Component] = {}
        for c in components:
            if c.id in self.components:
                raise InputError(f"duplicate component id {c.id!r}")
            self.components[c.id] = c
        self.overlaps: dict[tuple[str, str], Overlap] = dict(overlaps or {})

    @classmethod
    def by_intersection(cls, components: Iterable[Component]) -> "GluingPattern":
        """F_YX = X ∩ Y with identity maps: components glued along common points."""
        pattern = cls(components)
        for x in pattern.components.values():
            pattern._glue_identity(x)
        return pattern

    def _glue_identity(self, x: Component):
        for y in self.components.values():
            self.overlaps[(x.id, y.id)] = Overlap(_both(x, y))
            self.overlaps[(y.id, x.id)] = Overlap(_both(y, x))

    def add_component(self, c: Component, glue: bool = True):
        if c.id in self.components:
            raise InputError(f"duplicate component id {c.id!r}")
        self.components[c.id] = c
        if glue:
            self._glue_identity(c)

    def overlap(self, x: str, y: str) -> Overlap | None:
        return self.overlaps.get((x, y))

    def in_overlap(self, x: str, y: str, p: SubspacePoint) -> bool:
        o = self.overlaps.get((x, y))
        return o is not None and bool(o.closed(p))

    def ids(self) -> list[str]:
        return sorted(self.components)

    def sample_pool(self) -> list[tuple[str, SubspacePoint]]:
        pool = []
        for cid in self.ids():
            for p in self.components[cid].sample_points():
                pool.append((cid, p))
        return pool


def _both(x: Component, y: Component) -> Predicate:
    return lambda p: x.contains(p) and y.contains(p)


# -- validation -------------------------------------------------------------

@dataclass(frozen=True)
class AxiomCheck:
    axiom: str  # "identity" | "cocycle" | "symmetry"
    components: tuple[str, ...]
    point: SubspacePoint | None
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[AxiomCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for c in self.checks:
            out[c.axiom] = out.get(c.axiom, 0) + 1
        return out


def _pick(points: list, k: int, rng: random.Random) -> list:
    if len(points) <= k:
        return points
    idx = sorted(rng.sample(range(len(points)), k))
    return [points[i] for i in idx]


def validate_pattern(p: GluingPattern, samples: int = 4, seed: int = 0) -> ValidationReport:
    """Check identity, cocycle and symmetry on sampled points of each overlap."""
    if samples < 1:
        raise InputError("samples must be positive")
    rng = random.Random(seed)
    pool = [pt for _, pt in p.sample_pool()]
    unique = sorted(set(pool), key=lambda q: (q.k, q.pluecker))
    checks: list[AxiomCheck] = []
    ids = p.ids()
    for x in ids:
        cx = p.components[x]
        own = [q for q in unique if cx.contains(q)]
        o = p.overlap(x, x)
        for q in _pick(own, samples, rng):
            if o is None or not o.closed(q):
                checks.append(AxiomCheck("identity", (x,), q, False, "F_XX does not contain a point of X"))
            elif o.map(q) != q:
                checks.append(AxiomCheck("identity", (x,), q, False, "h_XX moves a point"))
            else:
                checks.append(AxiomCheck("identity", (x,), q, True))
    for x in ids:
        for y in ids:
            oyx = p.overlap(x, y)
            if oyx is None or x == y:
                continue
            pts = _pick([q for q in unique if p.components[x].contains(q) and oyx.closed(q)], samples, rng)
            oxy = p.overlap(y, x)
            for q in pts:
                img = oyx.map(q)
                ok = oxy is not None and oxy.closed(img) and oxy.map(img) == q
                checks.append(AxiomCheck("symmetry", (x, y), q, ok, "" if ok else "h_XY(h_YX(x)) != x"))
            for z in ids:
                ozy, ozx = p.overlap(y, z), p.overlap(x, z)
                if ozy is None or ozx is None:
                    continue
                for q in pts:
                    if not ozx.closed(q):
                        continue
                    img = oyx.map(q)
                    if not ozy.closed(img):
                        continue
                    ok = ozy.map(img) == ozx.map(q)
                    checks.append(AxiomCheck("cocycle", (x, y, z), q, ok, "" if ok else "h_ZY h_YX != h_ZX"))
    return ValidationReport(tuple(checks))


# -- the bouquet -----------------------------------------------------------

def _key(cid: str, p: SubspacePoint):
    return (cid, p.k, p.pluecker)


class Bouquet:
    """A gluing pattern plus the equivalence classes of registered points."""

    def __init__(self, pattern: GluingPattern | None = None):
        self.pattern = pattern or GluingPattern()
        self._uf = UnionFind()
        self._points: dict = {}
        self._least: dict = {}
        self.validation: ValidationReport | None = None

    @classmethod
    def empty(cls) -> "Bouquet":
        return cls(GluingPattern())

    def add_component(self, c: Component, glue: bool = True):
        self.pattern.add_component(c, glue)

    def _node(self, cid: str, p: SubspacePoint):
        k = _key(cid, p)
        if k not in self._points:
            self._points[k] = (cid, p)
            self._uf[k]
            self._least[k] = k
        return k

    def _union(self, a, b):
        ra, rb = self._uf[a], self._uf[b]
        if ra == rb:
            return
        least = min(self._least[ra], self._least[rb])
        self._uf.union(a, b)
        self._least[self._uf[a]] = least

    def _component(self, cid: str) -> Component:
        try:
            return self.pattern.components[cid]
        except KeyError:
            raise MembershipError(f"unknown component {cid!r}") from None

    def register(self, cid: str, p: SubspacePoint):
        """Add a point of component cid and glue it along every overlap containing it."""
        if not self._component(cid).contains(p):
            raise MembershipError(f"point is not in component {cid!r}")
        todo = [(cid, p)]
        seen = set()
        while todo:
            x, q = todo.pop()
            k = self._node(x, q)
            if k in seen:
                continue
            seen.add(k)
            for y in self.pattern.ids():
                o = self.pattern.overlap(x, y)
                if o is not None and o.closed(q):
                    img = o.map(q)
                    self._union(k, self._node(y, img))
                    todo.append((y, img))

    def registered(self) -> list[tuple[str, SubspacePoint]]:
        return [self._points[k] for k in sorted(self._points)]

    def identify(self, pt: tuple[str, SubspacePoint]) -> tuple[str, SubspacePoint]:
        """Canonical (least) representative of the class of (component id, point)."""
        cid, p = pt
        if not self._component(cid).contains(p):
            raise MembershipError(f"point is not in component {cid!r}")
        # walk the h-maps without touching the union-find
        best = None
        todo, seen = [(cid, p)], set()
        while todo:
            x, q = todo.pop()
            k = _key(x, q)
            if k in seen:
                continue
            seen.add(k)
            cand = self._least[self._uf[k]] if k in self._points else k
            best = cand if best is None or cand < best else best
            for y in self.pattern.ids():
                o = self.pattern.overlap(x, y)
                if o is not None and o.closed(q):
                    todo.append((y, o.map(q)))
        if best in self._points:
            return self._points[best]
        return _point_of(best, self, cid, p)

    def components(self) -> list[Component]:
        return [self.pattern.components[c] for c in self.pattern.ids()]

    def components_containing(self, p: SubspacePoint) -> list[str]:
        return [c.id for c in self.components() if c.contains(p)]


def _point_of(key, b: Bouquet, cid: str, p: SubspacePoint):
    # an unregistered class: rebuild the point from its key by walking again
    todo, seen = [(cid, p)], set()
    while todo:
        x, q = todo.pop()
        k = _key(x, q)
        if k == key:
            return (x, q)
        if k in seen:
            continue
        seen.add(k)
        for y in b.pattern.ids():
            o = b.pattern.overlap(x, y)
            if o is not None and o.closed(q):
                todo.append((y, o.map(q)))
    return (cid, p)


def identify(b: Bouquet, pt: tuple[str, SubspacePoint]) -> tuple[str, SubspacePoint]:
    return b.identify(pt)


def components_of(b: Bouquet) -> list[Component]:
    return b.components()


# -- lines in sl3 ----------------------------------------------------------

def _invariants(L: LieAlgebra, p: SubspacePoint):
    y = L.realize(p.basis_matrix[0])
    y2 = matmul(y, y)
    return y, trace(y2), trace(matmul(y2, y))


def _is_nilpotent_line(L: LieAlgebra, p: SubspacePoint) -> bool:
    _, p2, p3 = _invariants(L, p)
    return p2 == 0 and p3 == 0


def weyl_class(w: Sequence[int]) -> tuple[int, ...]:
    """Canonical representative under coordinate permutations and global sign."""
    a = tuple(sorted(w, reverse=True))
    b = tuple(sorted((-x for x in w), reverse=True))
    return max(a, b)


def sl3_directions(height: int) -> list[tuple[int, ...]]:
    """Weyl classes of primitive (a, b, c), a + b + c = 0, max |.| <= height."""
    if height < 1:
        raise InputError("height must be >= 1")
    return sorted({weyl_class(w) for w in primitive_directions(3, height)}, reverse=True)


def _is_regular(w) -> bool:
    return len(set(w)) == len(w)


def _semisimple_predicate(L: LieAlgebra, w: tuple[int, ...]) -> Predicate:
    s = diag(w)
    s2 = matmul(s, s)
    q2, q3 = trace(s2), trace(matmul(s2, s))
    regular = _is_regular(w)

    def pred(p: SubspacePoint) -> bool:
        if p.k != 1 or p.ambient_dim != L.dim:
            return False
        y, p2, p3 = _invariants(L, p)
        if p2 == 0 and p3 == 0:
            return regular or rank(y) <= 1
        if p2 ** 3 * q3 ** 2 != p3 ** 2 * q2 ** 3:
            return False
        return regular or is_semisimple_matrix(y)

    return pred


def _nilpotent_predicate(L: LieAlgebra, max_rank: int) -> Predicate:
    def pred(p: SubspacePoint) -> bool:
        if p.k != 1 or p.ambient_dim != L.dim:
            return False
        y, p2, p3 = _invariants(L, p)
        return p2 == 0 and p3 == 0 and rank(y) <= max_rank

    return pred


def _root_vector_paths(L: LieAlgebra, x) -> list[PolynomialPath]:
    names = ["E12", "E13", "E23", "E21", "E31", "E32"]
    gens = [L.basis_vector(n) for n in names]
    gens.append(tuple(a + b for a, b in zip(L.basis_vector("E12"), L.basis_vector("E23"))))
    gens.append(tuple(a + b for a, b in zip(L.basis_vector("E21"), L.basis_vector("E32"))))
    return [adjoint_path(L, [x], n) for n in gens]


def _cocharacter_path(L: LieAlgebra, w: tuple[int, ...]) -> PolynomialPath | None:
    """t -> Ad(diag(t, 1, 1/t)) Ad(u) s, with u upper unipotent chosen to clear E13.

    The E12 and E23 parts grow like t and the diagonal stays bounded, so the
    limit at infinity is a regular nilpotent line when s is regular.
    """
    a, b, c = w
    if a == c:
        return None
    # u = exp(E12 + E23 + g E13): E13 entry of Ad(u) s is g (c - a) + (a - 2b + c) / 2
    gamma = Q(-(a - 2 * b + c)) / (2 * (c - a))
    m = madd(madd(elementary(3, 0, 1), elementary(3, 1, 2)), tuple(tuple(Q(gamma if (i, j) == (0, 2) else 0) for j in range(3)) for i in range(3)))
    u = nilpotent_exp(m, 1)
    x = matmul(matmul(u, diag(w)), inverse(u))
    if x[0][2] != 0:
        return None
    # entries (i, j) scale like t^(j - i) under the cocharacter (-1 for i > j vanish: x is upper)
    coords_by_degree: dict[int, list] = {}
    for i in range(3):
        for j in range(3):
            if x[i][j]:
                coords_by_degree.setdefault(j - i, []).append((i, j, x[i][j]))
    top = max(coords_by_degree)
    layers = []
    for d in range(top + 1):
        mat_d = [[0] * 3 for _ in range(3)]
        for i, j, v in coords_by_degree.get(d, []):
            mat_d[i][j] = v
        layers.append((L.coordinates(tuple(map(tuple, mat_d))),))
    return PolynomialPath.from_layers(layers)


def boundary_points(L: LieAlgebra, w: tuple[int, ...]) -> tuple[SubspacePoint, ...]:
    """Nilpotent limits at infinity of degenerations of the line through diag(w)."""
    x = L.coordinates(diag(w))
    paths = _root_vector_paths(L, x)
    cp = _cocharacter_path(L, w)
    if cp is not None:
        paths.append(cp)
    out = []
    for path in paths:
        if path.degree == 0:
            continue
        lim = limit_of_path(path, "inf")
        if _is_nilpotent_line(L, lim) and lim not in out:
            out.append(lim)
    return tuple(sorted(out, key=lambda p: p.pluecker))


def semisimple_component(L: LieAlgebra, w: Sequence[int]) -> Component:
    w = weyl_class(tuple(int(x) for x in w))
    rep = canonicalize([L.coordinates(diag(w))], L.dim)
    cid = "S(" + ",".join(str(x) for x in w) + ")"
    return Component(
        cid,
        ComponentKind.SEMISIMPLE,
        rep,
        ("semisimple", w),
        orbit_dimension_projective(rep, L),
        _semisimple_predicate(L, w),
        boundary_points(L, w),
    )


def nilpotent_components(L: LieAlgebra) -> list[Component]:
    reg = tuple(a + b for a, b in zip(L.basis_vector("E12"), L.basis_vector("E23")))
    mn = L.basis_vector("E13")
    out = []
    for cid, x, partition, max_rank in (("N(3)", reg, (3,), 2), ("N(2,1)", mn, (2, 1), 1)):
        rep = canonicalize([x], L.dim)
        others = [canonicalize([L.basis_vector(n)], L.dim) for n in ("E12", "E13", "E23")]
        boundary = tuple(q for q in others if q != rep) if max_rank == 2 else ()
        out.append(
            Component(
                cid, ComponentKind.NILPOTENT, rep, ("nilpotent", partition),
                orbit_dimension_projective(rep, L), _nilpotent_predicate(L, max_rank), boundary,
            )
        )
    return out


def rebuild_sl3_component(cid: str, kind, representative: SubspacePoint, signature, dim: int,
                          boundary: Sequence[SubspacePoint] = ()) -> Component:
    """A component of lines in sl3 with its predicate recovered from the signature.

    Unknown signatures keep a finite predicate: the representative and boundary points.
    """
    kind = ComponentKind(kind)
    L = sl3()
    sig = tuple(signature)
    pred = None
    if representative.ambient_dim == L.dim and len(sig) == 2:
        tag, data = sig[0], tuple(int(x) for x in sig[1])
        if kind is ComponentKind.SEMISIMPLE and tag == "semisimple" and len(data) == 3 and sum(data) == 0:
            pred = _semisimple_predicate(L, weyl_class(data))
        elif kind is ComponentKind.NILPOTENT and tag == "nilpotent" and data in ((3,), (2, 1)):
            pred = _nilpotent_predicate(L, 2 if data == (3,) else 1)
        sig = (tag, data)
    return Component(cid, kind, representative, sig, int(dim), pred, tuple(boundary))


def classify_fibers(b: Bouquet, path: PolynomialPath, parameters: Sequence) -> list[tuple]:
    """(parameter, fiber, ids of components containing it) for each parameter.

    Limit points are accepted alongside rational parameters.
    """
    out = []
    for t in parameters:
        fiber = limit_of_path(path, t)
        out.append((t, fiber, b.components_containing(fiber)))
    return out


def assemble_sl3_slice(height: int, samples: int = 4, seed: int = 0) -> Bouquet:
    """Nilpotent orbit closures plus one semisimple component per Weyl class of directions."""
    L = sl3()
    comps = nilpotent_components(L) + [semisimple_component(L, w) for w in sl3_directions(height)]
    b = Bouquet(GluingPattern.by_intersection(comps))
    for c in b.components():
        for p in c.sample_points():
            b.register(c.id, p)
    b.validation = validate_pattern(b.pattern, samples, seed)
    return b


__all__ = [
    "AxiomCheck",
    "Bouquet",
    "Component",
    "ComponentKind",
    "GluingPattern",
    "Overlap",
    "ValidationReport",
    "assemble_sl3_slice",
    "boundary_points",
    "classify_fibers",
    "components_of",
    "identify",
    "nilpotent_components",
    "rebuild_sl3_component",
    "semisimple_component",
    "sl3_directions",
    "validate_pattern",
    "weyl_class",
]
