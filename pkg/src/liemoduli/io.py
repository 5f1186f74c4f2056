"""JSON encoding of algebras, subspaces, families, groups and bouquets.

Rationals are strings in lowest terms ("p/q", or "p" when q = 1). Floats
are refused on input since they are not exact. ``dumps`` sorts keys so the
same object always serializes to the same bytes.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .bouquet import Bouquet, Component, GluingPattern, Overlap, rebuild_sl3_component
from .errors import InputError
from .families import SemicontinuityReport, SubalgebraFamily, make_family
from .grassmann import INFINITY, PolynomialPath, SubspacePoint, adjoint_path, canonicalize, format_parameter
from .integration import GroupCheckReport, ParametrizedGroup, SemisimpleFactor, TorusFactor, UnipotentFactor
from .lie_core.algebra import LieAlgebra
from .lie_core.builtins import BUILTIN_ALGEBRAS, builtin
from .lie_core.structure import SemisimpleClass
from .linalg import Q, fmt


def rat(x) -> Fraction:
    if isinstance(x, float):
        raise InputError(f"floating-point value {x!r}; write rationals as \"p/q\" strings")
    return Q(x)


def rat_vector(xs) -> tuple[Fraction, ...]:
    if not isinstance(xs, (list, tuple)):
        raise InputError(f"expected a list of rationals, got {type(xs).__name__}")
    return tuple(rat(x) for x in xs)


def rat_matrix(rows) -> tuple:
    if not isinstance(rows, (list, tuple)):
        raise InputError("expected a list of rows")
    return tuple(rat_vector(r) for r in rows)


def encode(obj: Any) -> Any:
    """Plain JSON data for Fractions, tuples, enums and the package's value types."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return fmt(obj)
    if isinstance(obj, SubspacePoint):
        return point_to_json(obj)
    if isinstance(obj, SemisimpleClass):
        return obj.label
    if isinstance(obj, dict):
        return {str(encode(k)): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]
    if hasattr(obj, "value") and isinstance(obj.value, str):
        return obj.value
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_json(source) -> Any:
    """Parse a path, or inline JSON text starting with '{' or '['."""
    text = str(source)
    if text.lstrip()[:1] in "{[":
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad inline JSON: {exc}") from exc
    path = Path(text)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {text}: {exc.strerror}") from exc
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"{text}: bad JSON: {exc}") from exc


def _require(obj: dict, key: str, what: str):
    if not isinstance(obj, dict):
        raise InputError(f"{what} must be a JSON object")
    if key not in obj:
        raise InputError(f"{what} is missing {key!r}")
    return obj[key]


# -- algebras --------------------------------------------------------------

def algebra_to_json(L: LieAlgebra) -> dict:
    brackets = [[i, j, [[k, fmt(c)] for k, c in sorted(terms.items())]] for (i, j), terms in L.structure_constants.items()]
    out = {"name": L.name, "dim": L.dim, "basis": list(L.basis_names), "brackets": brackets}
    if L.has_realization:
        out["matrices"] = encode(L.matrices)
    return out


def algebra_from_json(obj: dict) -> LieAlgebra:
    name = _require(obj, "name", "algebra")
    basis = _require(obj, "basis", "algebra")
    dim = obj.get("dim", len(basis))
    if not isinstance(basis, list) or dim != len(basis):
        raise InputError(f"algebra {name!r}: dim {dim} does not match {len(basis)} basis names")
    brackets = {}
    for entry in obj.get("brackets", []):
        if not (isinstance(entry, list) and len(entry) == 3):
            raise InputError(f"bracket entry {entry!r} must be [i, j, [[k, c], ...]]")
        i, j, terms = entry
        if not (isinstance(i, int) and isinstance(j, int)):
            raise InputError(f"bracket indices must be integers: {entry!r}")
        if (i, j) in brackets:
            raise InputError(f"bracket pair ({i}, {j}) listed twice")
        brackets[(i, j)] = [(int(k), rat(c)) for k, c in terms]
    mats = obj.get("matrices")
    return LieAlgebra(name, basis, brackets, [rat_matrix(m) for m in mats] if mats is not None else None)


def resolve_algebra(source) -> LieAlgebra:
    """A built-in name, a path to algebra JSON, or an already parsed object."""
    if isinstance(source, LieAlgebra):
        return source
    if isinstance(source, dict):
        return algebra_from_json(source)
    if isinstance(source, str) and source in BUILTIN_ALGEBRAS:
        return builtin(source)
    return algebra_from_json(load_json(source))


# -- subspaces -------------------------------------------------------------

def point_to_json(p: SubspacePoint) -> dict:
    return {"ambient_dim": p.ambient_dim, "k": p.k, "rows": encode(p.basis_matrix)}


def point_from_json(obj: dict) -> SubspacePoint:
    n = _require(obj, "ambient_dim", "subspace")
    rows = rat_matrix(_require(obj, "rows", "subspace"))
    p = canonicalize(rows, n)
    if "k" in obj and obj["k"] != p.k:
        raise InputError(f"subspace claims k = {obj['k']} but its rows have rank {p.k}")
    return p


def span_rows(obj: dict, L: LieAlgebra | None) -> tuple:
    """Spanning rows of a span file: coordinate ``rows``, ``matrices`` or named ``elements``."""
    if not isinstance(obj, dict):
        raise InputError("span must be a JSON object")
    if "rows" in obj:
        return rat_matrix(obj["rows"])
    if L is None:
        raise InputError("span given by matrices or elements needs an algebra")
    if "matrices" in obj:
        out = []
        for m in obj["matrices"]:
            c = L.coordinates(rat_matrix(m))
            if c is None:
                raise InputError(f"matrix {m!r} is not in {L.name}")
            out.append(c)
        return tuple(out)
    if "elements" in obj:
        out = []
        for e in obj["elements"]:
            if not isinstance(e, dict):
                raise InputError("each element must map basis names to coefficients")
            v = [Fraction(0)] * L.dim
            for name, c in e.items():
                if name not in L.basis_names:
                    raise InputError(f"{L.name} has no basis element {name!r}")
                v[L.basis_names.index(name)] += rat(c)
            out.append(tuple(v))
        return tuple(out)
    raise InputError("span needs one of 'rows', 'matrices' or 'elements'")


# -- families ----------------------------------------------------------------

def path_to_json(path: PolynomialPath) -> dict:
    return {"parameter": path.parameter, "ambient_dim": path.n, "entries": encode(path.entries)}


def path_from_json(obj: dict, L: LieAlgebra | None = None) -> PolynomialPath:
    """Coefficient lists per entry, or an ``adjoint`` block {rows, nilpotent}."""
    parameter = obj.get("parameter", "t")
    if not isinstance(parameter, str):
        raise InputError("parameter name must be a string")
    if "adjoint" in obj:
        if L is None:
            raise InputError("an adjoint family needs an algebra")
        adj = obj["adjoint"]
        rows = span_rows(adj, L)
        nil = _require(adj, "nilpotent", "adjoint block")
        nil = span_rows({"elements": [nil]} if isinstance(nil, dict) else {"rows": [nil]}, L)[0]
        return adjoint_path(L, rows, nil, parameter)
    entries = _require(obj, "entries", "family")
    if not isinstance(entries, list):
        raise InputError("entries must be a list of rows")
    parsed = [[rat_vector(c) if isinstance(c, list) else (rat(c),) for c in r] for r in entries]
    n = obj.get("ambient_dim", L.dim if L is not None else None)
    return PolynomialPath.from_coefficients(parsed, parameter, n)


def family_to_json(f: SubalgebraFamily) -> dict:
    out = path_to_json(f.path)
    out["algebra"] = f.ambient.name
    out["samples"] = encode(f.samples)
    out["limit_points"] = [format_parameter(p) for p in f.limit_points]
    return out


def family_from_json(obj: dict, L: LieAlgebra) -> SubalgebraFamily:
    path = path_from_json(obj, L)
    samples = [rat(t) for t in obj.get("samples", [])]
    limits = obj.get("limit_points", [])
    if not isinstance(limits, list):
        raise InputError("limit_points must be a list")
    return make_family(path, L, samples, [x if isinstance(x, str) else rat(x) for x in limits])


def _invariant(v):
    # ranks stay JSON integers, like every other dimension or count
    return v if isinstance(v, int) else encode(v)


def report_to_json(r: SemicontinuityReport) -> dict:
    return {
        "invariant": r.invariant,
        "generic": _invariant(r.generic),
        "special": [[format_parameter(p), _invariant(v)] for p, v in r.special],
        "values": [[format_parameter(p), _invariant(v)] for p, v in r.values],
        "verdict": r.verdict,
    }


# -- groups ------------------------------------------------------------------

def factor_to_json(f) -> dict:
    if isinstance(f, UnipotentFactor):
        return {"kind": f.kind, "generator": encode(f.generator)}
    if isinstance(f, TorusFactor):
        return {"kind": f.kind, "weight": list(f.weight.weights), "frame": encode(f.frame)}
    if isinstance(f, SemisimpleFactor):
        out = {"kind": f.kind, "label": f.label, "size": f.size}
        if f.is_ambient:
            out["form"] = "big-cell"
        else:
            out.update(e=encode(f.e), h=encode(f.h), f=encode(f.f), weight=list(f.weight.weights), frame=encode(f.frame))
        return out
    raise TypeError(f"unknown factor {f!r}")


def group_to_json(g: ParametrizedGroup) -> dict:
    return {
        "ambient": g.ambient.name,
        "matrix_size": g.m,
        "arity": g.arity,
        "factors": [factor_to_json(f) for f in g.factors],
        "frame": encode(g.frame),
        "torus_weights": [list(w.weights) for w in g.torus_weights],
    }


def group_check_to_json(r: GroupCheckReport) -> dict:
    return {
        "trials": r.trials,
        "seed": r.seed,
        "status": r.status,
        "checks": r.checks,
        "counterexample": encode(r.counterexample),
    }


# -- bouquets ---------------------------------------------------------------

def component_to_json(c: Component) -> dict:
    return {
        "id": c.id,
        "kind": c.kind.value,
        "representative": point_to_json(c.representative),
        "signature": encode(c.signature),
        "dim": c.dim,
        "boundary": [point_to_json(p) for p in c.boundary],
    }


def bouquet_to_json(b: Bouquet) -> dict:
    """Components, overlaps restricted to registered points, and the identification classes."""
    pattern = b.pattern
    registered = b.registered()
    points = sorted({p for _, p in registered}, key=lambda q: (q.k, q.pluecker))
    overlaps = []
    for x in pattern.ids():
        for y in pattern.ids():
            o = pattern.overlap(x, y)
            if o is None:
                continue
            inside = [p for p in points if pattern.components[x].contains(p) and o.closed(p)]
            entry = {"source": x, "target": y, "points": [point_to_json(p) for p in inside]}
            moved = [(p, o.map(p)) for p in inside if o.map(p) != p]
            if moved:
                entry["images"] = [[point_to_json(p), point_to_json(q)] for p, q in moved]
            overlaps.append(entry)
    classes: dict = {}
    for cid, p in registered:
        rep = b.identify((cid, p))
        classes.setdefault((rep[0], rep[1].pluecker), []).append([cid, point_to_json(p)])
    out = {
        "components": [component_to_json(c) for c in b.components()],
        "overlaps": overlaps,
        "identifications": [members for _, members in sorted(classes.items())],
    }
    if b.validation is not None:
        out["validation"] = {"passed": b.validation.passed, "counts": b.validation.counts()}
    return out


def _finite_overlap(points, images) -> Overlap:
    keys = {p.pluecker: p for p in points}
    table = {p.pluecker: q for p, q in images}

    def closed(p: SubspacePoint) -> bool:
        return keys.get(p.pluecker) == p

    def move(p: SubspacePoint) -> SubspacePoint:
        return table.get(p.pluecker, p)

    return Overlap(closed, move)


def bouquet_from_json(obj: dict) -> Bouquet:
    """Rebuild a bouquet; overlaps become finite predicates over the listed points."""
    comps = []
    for c in _require(obj, "components", "bouquet"):
        comps.append(
            rebuild_sl3_component(
                _require(c, "id", "component"),
                _require(c, "kind", "component"),
                point_from_json(_require(c, "representative", "component")),
                c.get("signature", ()),
                c.get("dim", 0),
                [point_from_json(p) for p in c.get("boundary", [])],
            )
        )
    pattern = GluingPattern(comps)
    for o in obj.get("overlaps", []):
        x, y = _require(o, "source", "overlap"), _require(o, "target", "overlap")
        if x not in pattern.components or y not in pattern.components:
            raise InputError(f"overlap ({x}, {y}) names an unknown component")
        pts = [point_from_json(p) for p in o.get("points", [])]
        imgs = [(point_from_json(a), point_from_json(b)) for a, b in o.get("images", [])]
        pattern.overlaps[(x, y)] = _finite_overlap(pts, imgs)
    b = Bouquet(pattern)
    for members in obj.get("identifications", []):
        for cid, p in members:
            if cid not in pattern.components:
                raise InputError(f"identification names an unknown component {cid!r}")
            b.register(cid, point_from_json(p))
    return b


__all__ = [
    "INFINITY",
    "algebra_from_json",
    "algebra_to_json",
    "bouquet_from_json",
    "bouquet_to_json",
    "dumps",
    "encode",
    "family_from_json",
    "family_to_json",
    "group_check_to_json",
    "group_to_json",
    "load_json",
    "path_from_json",
    "path_to_json",
    "point_from_json",
    "point_to_json",
    "rat",
    "report_to_json",
    "resolve_algebra",
    "span_rows",
]
