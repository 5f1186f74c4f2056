"""Command-line front end: every report is sorted-key JSON on stdout (or --out).

Exit statuses: 0 success, 1 negative verdict or failed check, 2 bad input,
3 outside the supported catalog. On 2 and 3 the only output is a JSON error
object on stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import io
from .algebraicity import algebraic_hull, classify_line_sl2, orbit_dimension_projective
from .bouquet import assemble_sl3_slice, validate_pattern
from .errors import CheckFailure, InputError, LieError, UnsupportedError
from .families import SubalgebraFamily, flatness_proxy, limit_fiber, rank_scan, semisimple_class_scan
from .grassmann import canonicalize, format_parameter, is_lie_subalgebra, limit_of_path, parameter_sort_key, parse_parameter
from .integration import group_axiom_sample_check, integrate_algebraic
from .lie_core.builtins import sl2
from .lie_core.jordan import jordan_decompose
from .lie_core.structure import levi_semisimple_class, nilpotent_ideal, rank_of_solvable, unipotent_radical_via_killing
from .lie_core.subalgebra import Subalgebra
from .linalg import nullspace, rank

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    algebra: str | None = None
    span: str | None = None
    family: str | None = None
    matrix: str | None = None
    bouquet: str | None = None
    at: str = "inf"
    height: int = 1
    trials: int = 100
    samples: int = 4
    seed: int = 0
    out: str | None = None
    extra: dict = field(default_factory=dict)


class _Fail(Exception):
    def __init__(self, status: int, kind: str, message: str):
        super().__init__(message)
        self.status, self.kind = status, kind


# -- input helpers ---------------------------------------------------------

def _need(cfg: RunConfig, name: str) -> str:
    value = getattr(cfg, name)
    if value is None:
        raise InputError(f"{cfg.command} needs --{name}")
    return value


def _algebra(cfg: RunConfig, data: dict | None = None, default=None):
    if cfg.algebra is not None:
        return io.resolve_algebra(cfg.algebra)
    if isinstance(data, dict) and "algebra" in data:
        return io.resolve_algebra(data["algebra"])
    if default is not None:
        return default
    raise InputError(f"{cfg.command} needs --algebra (or an 'algebra' entry in the input file)")


def _span(cfg: RunConfig, default_algebra=None):
    data = io.load_json(_need(cfg, "span"))
    L = _algebra(cfg, data, default_algebra)
    rows = io.span_rows(data, L)
    if any(len(r) != L.dim for r in rows):
        raise InputError(f"span rows must have length {L.dim} for {L.name}")
    return L, rows


def _subalgebra(cfg: RunConfig) -> Subalgebra:
    L, rows = _span(cfg)
    return Subalgebra(L, rows)


def _line(cfg: RunConfig, default_algebra=None):
    L, rows = _span(cfg, default_algebra)
    p = canonicalize(rows, L.dim)
    if p.k != 1:
        raise InputError(f"{cfg.command} needs a line, got a {p.k}-dimensional span")
    return L, p


def _family(cfg: RunConfig) -> SubalgebraFamily:
    data = io.load_json(_need(cfg, "family"))
    return io.family_from_json(data, _algebra(cfg, data))


def _rows(rows) -> list:
    return io.encode(rows)


# -- subcommands -----------------------------------------------------------

def cmd_check_subalgebra(cfg):
    L, rows = _span(cfg)
    p = canonicalize(rows, L.dim)
    ok = is_lie_subalgebra(p, L)
    return {"algebra": L.name, "dim": p.k, "is_subalgebra": ok, "span": io.point_to_json(p)}, ok


def cmd_hull(cfg):
    h = _subalgebra(cfg)
    r = algebraic_hull(h)
    report = {
        "algebra": h.ambient.name,
        "input_dim": h.dim,
        "hull_dim": r.hull.dim,
        "hull": _rows(r.hull.basis),
        "is_algebraic": r.is_algebraic,
        "witness": None if r.witness is None else str(r.witness),
    }
    return report, r.is_algebraic


def cmd_killing(cfg):
    if cfg.span is None:
        L = _algebra(cfg)
        gram = L.killing_matrix()
        return {"algebra": L.name, "gram": _rows(gram), "is_semisimple": L.is_semisimple()}, True
    h = _subalgebra(cfg)
    gram = h.gram()
    kernel = [h.element(c) for c in nullspace(gram, h.dim)]
    kernel = Subalgebra(h.ambient, kernel, check=False)
    return {"algebra": h.ambient.name, "gram": _rows(gram), "kernel": _rows(kernel.basis), "kernel_dim": kernel.dim}, True


def cmd_levi(cfg):
    h = _subalgebra(cfg)
    r = levi_semisimple_class(h)
    comp = None if r.complement is None else _rows(r.complement.basis)
    return {"algebra": h.ambient.name, "class": r.semisimple_class.label, "levi": comp}, True


def cmd_rank(cfg):
    h = _subalgebra(cfg)
    rk = rank_of_solvable(h)
    u = unipotent_radical_via_killing(h) if h.ambient.is_semisimple() else nilpotent_ideal(h)
    return {"algebra": h.ambient.name, "rank": rk, "unipotent_radical": _rows(u.basis)}, True


def cmd_jordan(cfg):
    if cfg.matrix is not None:
        m = io.rat_matrix(io.load_json(cfg.matrix))
    else:
        L, rows = _span(cfg)
        if len(rows) != 1:
            raise InputError("jordan takes a single element")
        m = L.realize(rows[0])
    jp = jordan_decompose(m)
    return {
        "matrix": _rows(m),
        "semisimple": _rows(jp.semisimple_part),
        "nilpotent": _rows(jp.nilpotent_part),
        "semisimple_polynomial": io.encode(jp.semisimple_polynomial),
    }, True


def cmd_limit(cfg):
    f = _family(cfg)
    at = parse_parameter(cfg.at)
    p = limit_of_path(f.path, at)
    ok = is_lie_subalgebra(p, f.ambient)
    report = {"algebra": f.ambient.name, "at": format_parameter(at), "limit": io.point_to_json(p), "is_subalgebra": ok}
    if ok and f.ambient.has_realization:
        report["is_algebraic"] = algebraic_hull(limit_fiber(f, at)).is_algebraic
    return report, ok


def cmd_scan_rank(cfg):
    r = rank_scan(_family(cfg))
    return io.report_to_json(r), r.verdict


def cmd_scan_levi(cfg):
    r = semisimple_class_scan(_family(cfg))
    return io.report_to_json(r), r.verdict


def cmd_flatness(cfg):
    # no fiber validation here: a rank drop is what the proxy reports
    data = io.load_json(_need(cfg, "family"))
    L = _algebra(cfg, data) if (cfg.algebra or "algebra" in data) else None
    path = io.path_from_json(data, L)
    samples = [io.rat(t) for t in data.get("samples", [])]
    limits = sorted({parse_parameter(x if isinstance(x, str) else io.rat(x)) for x in data.get("limit_points", [])},
                    key=parameter_sort_key)
    dims = [[format_parameter(t), rank(path.evaluate(t))] for t in sorted(samples)]
    for p in limits:
        try:
            dims.append([format_parameter(p), limit_of_path(path, p).k])
        except InputError:
            dims.append([format_parameter(p), 0])
    flat = flatness_proxy(path, samples, limits)
    return {"k": path.k, "flat": flat, "fiber_dims": dims}, flat


def cmd_integrate(cfg):
    g = integrate_algebraic(_subalgebra(cfg))
    return io.group_to_json(g), True


def cmd_group_check(cfg):
    g = integrate_algebraic(_subalgebra(cfg))
    r = group_axiom_sample_check(g, cfg.trials, cfg.seed)
    if r.status == "unsupported":
        raise UnsupportedError(r.counterexample["reason"])
    return io.group_check_to_json(r), r.passed


def cmd_orbit_dim(cfg):
    L, p = _line(cfg)
    return {"algebra": L.name, "line": io.point_to_json(p), "orbit_dim": orbit_dimension_projective(p, L)}, True


def cmd_classify_sl2(cfg):
    L, p = _line(cfg, sl2())
    return {"line": io.point_to_json(p), "orbit": classify_line_sl2(p, L).value}, True


def cmd_sl3_slice(cfg):
    if cfg.height < 1:
        raise InputError("--height must be >= 1")
    b = assemble_sl3_slice(cfg.height, cfg.samples, cfg.seed)
    return io.bouquet_to_json(b), b.validation.passed


def cmd_validate_bouquet(cfg):
    b = io.bouquet_from_json(io.load_json(_need(cfg, "bouquet")))
    r = validate_pattern(b.pattern, cfg.samples, cfg.seed)
    failures = [
        {"axiom": c.axiom, "components": list(c.components), "point": None if c.point is None else io.point_to_json(c.point), "detail": c.detail}
        for c in r.failures
    ]
    return {"passed": r.passed, "counts": r.counts(), "failures": failures, "samples": cfg.samples, "seed": cfg.seed}, r.passed


COMMANDS: dict[str, tuple[Callable, str]] = {
    "check-subalgebra": (cmd_check_subalgebra, "is the span closed under the bracket"),
    "hull": (cmd_hull, "algebraic hull of a subalgebra"),
    "killing": (cmd_killing, "Killing Gram matrix of the algebra, or of a span with its kernel"),
    "levi": (cmd_levi, "semisimple class of a Levi factor"),
    "rank": (cmd_rank, "rank and unipotent radical of a solvable subalgebra"),
    "jordan": (cmd_jordan, "Jordan-Chevalley parts of a matrix"),
    "limit": (cmd_limit, "limit of a family at a parameter"),
    "scan-rank": (cmd_scan_rank, "rank along a family"),
    "scan-levi": (cmd_scan_levi, "semisimple class along a family"),
    "flatness": (cmd_flatness, "constant fiber dimension along a family"),
    "integrate": (cmd_integrate, "parametrized group of an algebraic subalgebra"),
    "group-check": (cmd_group_check, "sampled group axioms of the integrated group"),
    "orbit-dim": (cmd_orbit_dim, "dimension of the orbit of a line"),
    "classify-sl2": (cmd_classify_sl2, "orbit type of a line in sl2"),
    "sl3-slice": (cmd_sl3_slice, "assemble the slice of lines in sl3 up to a height"),
    "validate-bouquet": (cmd_validate_bouquet, "check the gluing axioms of a bouquet file"),
}


# -- plumbing --------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Fail(EXIT_INPUT, "UsageError", message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--algebra", help="built-in name (sl2, sl3, gl3, ...) or algebra JSON path")
    common.add_argument("--span", help="span JSON: rows, matrices or named elements")
    common.add_argument("--family", help="family JSON")
    common.add_argument("--matrix", help="matrix JSON (path or inline)")
    common.add_argument("--bouquet", help="bouquet JSON")
    common.add_argument("--at", default="inf", help="parameter value or 'inf' (default inf)")
    common.add_argument("--height", type=int, default=1)
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--samples", type=int, default=4, help="sample points per overlap")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write the report here instead of stdout")
    parser = _Parser(prog="liemoduli", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text, description=help_text)
    return parser


def parse_config(argv: Sequence[str]) -> RunConfig:
    ns = build_parser().parse_args(list(argv))
    return RunConfig(**{k: v for k, v in vars(ns).items()})


def run(cfg: RunConfig) -> tuple[int, str]:
    """Exit status and report text; raises _Fail on the error paths."""
    handler = COMMANDS[cfg.command][0]
    try:
        report, ok = handler(cfg)
    except UnsupportedError as exc:
        raise _Fail(EXIT_UNSUPPORTED, type(exc).__name__, str(exc)) from exc
    except InputError as exc:
        raise _Fail(EXIT_INPUT, type(exc).__name__, str(exc)) from exc
    except CheckFailure as exc:
        return EXIT_FALSE, io.dumps({"error": type(exc).__name__, "message": str(exc), "details": io.encode(getattr(exc, "dimensions", None))})
    except LieError as exc:
        raise _Fail(EXIT_INPUT, type(exc).__name__, str(exc)) from exc
    return (EXIT_OK if ok else EXIT_FALSE), io.dumps(report)


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
        status, text = run(cfg)
    except _Fail as exc:
        sys.stderr.write(json.dumps({"error": exc.kind, "message": str(exc), "status": exc.status}, sort_keys=True) + "\n")
        return exc.status
    if cfg.out:
        try:
            with open(cfg.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            sys.stderr.write(json.dumps({"error": "OutputError", "message": str(exc), "status": EXIT_INPUT}, sort_keys=True) + "\n")
            return EXIT_INPUT
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
