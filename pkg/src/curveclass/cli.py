"""Command-line front end.

Exit codes: 0 success, 2 invalid input (including empty families in
``classify``), 3 an internal identity failed.  Errors are printed to
stdout as a JSON object {"error": {"type": ..., "message": ...}}.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence

from . import criteria
from .criteria import EngineConfig, Property
from .curves import ParamCurve
from .errors import CurveClassError, InternalInconsistency
from .grassmann import Integrability, frame_of, integrability_check, recover_underlying
from .invariants import (
    ClassTriple,
    DeltaKappa,
    NodalCuspidal,
    arithmetic_genus,
    dual_triple,
    from_nodal_cuspidal,
    raw_delta_kappa,
    to_class_triple,
)
from .io import curve_to_dict, dumps, frame_from_dict, curve_from_dict, load_json, vector_to_json

EXIT_OK, EXIT_INVALID, EXIT_INTERNAL = 0, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _error(kind: str, message: str, **extra) -> dict:
    return {"error": {"type": kind, "message": message, **extra}}


def _table(header: Sequence[str], rows: List[Sequence]) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# triples


def _triple_from_args(args) -> ClassTriple:
    groups = {
        "g,c": (args.g, args.c),
        "n,k": (args.n, args.k),
        "delta,kappa": (args.delta, args.kappa),
    }
    given = [name for name, vals in groups.items() if any(v is not None for v in vals)]
    if len(given) != 1:
        raise UsageError("give exactly one of --g/--c, --n/--k, --delta/--kappa together with --d")
    name = given[0]
    a, b = groups[name]
    if a is None or b is None:
        raise UsageError(f"both values of the {name} pair are required")
    if args.d < 1:
        raise UsageError("--d must be at least 1")
    if name == "g,c":
        return ClassTriple(args.d, a, b)
    if name == "n,k":
        return to_class_triple(from_nodal_cuspidal(NodalCuspidal(args.d, a, b)))
    return to_class_triple(DeltaKappa(args.d, a, b))


def _add_triple_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--d", type=int, required=True, help="degree")
    for flag, help_ in (("g", "geometric genus"), ("c", "class"), ("n", "virtual nodes"),
                        ("k", "virtual cusps"), ("delta", "delta invariant"), ("kappa", "kappa invariant")):
        p.add_argument(f"--{flag}", type=int, help=help_)


def _report_table(report: criteria.CriteriaReport) -> str:
    t = report.triple
    head = (f"d={t.d} g={t.g} c={t.c}  delta={report.delta} kappa={report.kappa}  "
            f"nodes={report.nodes} cusps={report.cusps}  expected_dim={report.expected_dim}\n")
    rows = []
    for prop, v in report.verdicts.items():
        certs = ", ".join(f"{c.criterion.id}[{c.mode.value}]" for c in v.certificates) or "-"
        rows.append((prop.value, v.kind.value, "yes" if v.conditional else "no", certs))
    return head + _table(("property", "verdict", "conditional", "certificates"), rows)


def cmd_classify(args, out) -> int:
    t = _triple_from_args(args)
    report = criteria.evaluate(t, EngineConfig(args.lrq_exponent))
    if report.is_empty:
        out.write(dumps({**_error("EMPTY", f"V{t} is empty: {report.empty_reason}"),
                         "report": report.to_dict()}))
        return EXIT_INVALID
    out.write(_report_table(report) if args.format == "table" else dumps(report.to_dict()))
    return EXIT_OK


def cmd_strata(args, out) -> int:
    graph = criteria.strata_graph(args.d, config=EngineConfig(args.lrq_exponent))
    out.write(graph.to_dot() if args.format == "dot" else dumps(graph.to_dict()))
    return EXIT_OK


def _invariants(t: ClassTriple) -> dict:
    delta, kappa = raw_delta_kappa(t)
    nodes = cusps = None
    if 0 <= 2 * delta <= kappa <= 3 * delta:
        nodes, cusps = 3 * delta - kappa, kappa - 2 * delta
    return {"d": t.d, "g": t.g, "c": t.c, "delta": delta, "kappa": kappa,
            "nodes": nodes, "cusps": cusps, "arithmetic_genus": arithmetic_genus(t.d)}


def cmd_dual_triple(args, out) -> int:
    t = _triple_from_args(args)
    if t.c < 1:
        raise UsageError("the class must be at least 1 to dualize")
    out.write(dumps({"triple": _invariants(t), "dual": _invariants(dual_triple(t))}))
    return EXIT_OK


# --------------------------------------------------------------------------
# curves


def _curve(path: str) -> ParamCurve:
    return curve_from_dict(load_json(path))


def cmd_associated(args, out) -> int:
    curve = _curve(args.input)
    assoc = curve.associated(args.k)
    out.write(dumps({
        "ambient_dim": assoc.ambient_dim,
        "k": assoc.k,
        "degree": assoc.degree,
        "index_sets": [list(ix) for ix in assoc.index_sets],
        "plucker": vector_to_json(assoc.plucker),
        "relations_hold": assoc.relations_hold(),
    }))
    return EXIT_OK


def cmd_pluecker_check(args, out) -> int:
    curve = _curve(args.input)
    degrees = curve.degree_sequence()
    betas = curve.total_ramification()
    residuals = curve.plucker_residuals()
    profile = curve.ramification_profile()
    points = [{"point": [str(a), str(b)], "betas": bs} for (a, b), bs in profile.at_points.items()]
    if args.format == "table":
        rows = [(k, degrees[k], betas[k], residuals[k]) for k in range(curve.ambient_dim)]
        out.write(_table(("k", "d_k", "beta_k", "residual"), rows))
    else:
        out.write(dumps({"degrees": degrees, "betas": betas, "residuals": residuals,
                         "ramification_points": points, "passed": not any(residuals)}))
    return EXIT_OK if not any(residuals) else EXIT_INTERNAL


def cmd_dual(args, out) -> int:
    curve = _curve(args.input)
    dual = curve.dual()
    if args.check:
        sym = curve.duality_symmetry_check()
        orth = curve.orthogonality_check()
        out.write(dumps({
            "dual": curve_to_dict(dual),
            "bidual": curve.bidual_check(),
            "degree_residuals": sym.degree_residuals,
            "beta_residuals": sym.beta_residuals,
            "orthogonal_raw": orth.passed,
            "orthogonal_reduced": orth.reduced_passed,
        }))
    else:
        out.write(dumps(curve_to_dict(dual)))
    return EXIT_OK


def cmd_integrable(args, out) -> int:
    data = load_json(args.input)
    if isinstance(data, dict) and "coords" in data:
        if args.k is None:
            raise UsageError("a curve file needs --k to build its osculating frame")
        frame = frame_of(curve_from_dict(data), args.k)
    else:
        frame = frame_from_dict(data)
    verdict = integrability_check(frame)
    result = {"verdict": verdict.value}
    if args.recover:
        result["recovered"] = (curve_to_dict(recover_underlying(frame))
                               if verdict is Integrability.INTEGRABLE else None)
    out.write(dumps(result))
    return EXIT_OK


def cmd_implicitize(args, out) -> int:
    curve = _curve(args.input)
    if curve.ambient_dim != 2:
        raise UsageError("implicitize needs a plane curve")
    eq = curve.implicitize()
    terms = []
    for mono, coef in eq.ordered_terms(("x0", "x1", "x2")):
        exps = dict(mono)
        terms.append({"exponents": [exps.get(v, 0) for v in ("x0", "x1", "x2")], "coefficient": str(coef)})
    out.write(dumps({"degree": eq.degree(), "equation": str(eq), "terms": terms}))
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    if args.d_from < 5:
        raise UsageError("--from must be at least 5")
    rows = criteria.dual_sweep(args.d_from, args.d_to, args.step)
    if args.format == "table":
        out.write(_table(
            ("d", "k", "d_dual", "g", "n_dual", "k_dual", "lrq", "k*<3d*", "4n*+9k*<(d*+3)^2"),
            [(r.d, r.k, r.d_dual, r.g, r.n_dual, r.k_dual, r.lrq_primal,
              r.dual_cusp_bound, r.dual_quadratic_bound) for r in rows]))
    else:
        out.write(dumps([r.to_dict() for r in rows]))
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="curveclass", description="Equiclassical families of plane curves and rational curves in P^n.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="run the criteria catalog on a family")
    _add_triple_args(p)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--lrq-exponent", type=int, choices=(2, 3), default=2)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("strata", help="stratification graph for one degree")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--lrq-exponent", type=int, choices=(2, 3), default=2)
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("dual-triple", help="invariants of the dual family")
    _add_triple_args(p)
    p.set_defaults(func=cmd_dual_triple)

    p = sub.add_parser("associated", help="Plücker coordinates of an associated curve")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_associated)

    p = sub.add_parser("pluecker-check", help="degree sequence, ramification and Plücker residuals")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_pluecker_check)

    p = sub.add_parser("dual", help="dual curve")
    p.add_argument("--input", required=True)
    p.add_argument("--check", action="store_true", help="also run the duality checks")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("integrable", help="integrability of a frame (or of an osculating frame)")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--recover", action="store_true", help="recover the underlying curve")
    p.set_defaults(func=cmd_integrable)

    p = sub.add_parser("implicitize", help="implicit equation of a plane curve")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_implicitize)

    p = sub.add_parser("sweep", help="dual invariants of the maximal-cusp strata")
    p.add_argument("--from", dest="d_from", type=int, required=True)
    p.add_argument("--to", dest="d_to", type=int, required=True)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_sweep)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        out.write(dumps(_error("usage", str(exc))))
    except InternalInconsistency as exc:
        out.write(dumps(_error(type(exc).__name__, str(exc))))
        return EXIT_INTERNAL
    except (CurveClassError, ValueError) as exc:
        out.write(dumps(_error(type(exc).__name__, str(exc))))
    return EXIT_INVALID


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(argv))
