"""Command-line front end.

    newtonideal analyze "x^6, x^2*y, x*y^2, y^6"
    newtonideal fiber "x^8,x^6*y,x^2*y^7,y^12" --hilbert 4 --json

Exit status: 0 on success, 1 on a computation error (including an exceeded
bound, or a failed property under ``verify``), 2 on a parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import closure, fiber, invariants, newton, reduction
from .ideal import MonomialIdeal, format_ideal, format_monomial, parse, to_json_obj

COMMANDS = ("analyze", "reduce", "closure", "fiber", "verify")


@dataclass(frozen=True)
class AnalysisRequest:
    command: str
    ideal: MonomialIdeal
    hilbert: int = fiber.DEFAULT_HILBERT_BOUND
    binomial_bound: int = fiber.DEFAULT_BINOMIAL_BOUND
    cutoff: int = 20
    as_json: bool = False
    names: tuple = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if min(self.hilbert, self.binomial_bound, self.cutoff) < 1:
            raise ValueError("bounds must be positive")


def _face_json(face, index):
    return {
        "verts": sorted(index[v] for v in face.vertices),
        "normal": list(face.certificate.normal),
        "offset": face.certificate.offset,
        "dim": face.dim,
    }


def analyze(req: AnalysisRequest) -> dict:
    ideal = req.ideal
    if ideal.is_zero:
        raise ValueError("zero ideal has no Newton polyhedron")
    if ideal.is_unit:
        raise ValueError("unit ideal has no proper reduction")
    poly = newton.extreme_points(ideal)
    J = reduction.minimal_monomial_reduction(ideal)
    return {
        "ideal": to_json_obj(ideal),
        "ext": [list(v) for v in poly.vertices],
        "J": to_json_obj(J),
        "slope_p": reduction.kodiyalam_slope(ideal),
        "spread_ell": fiber.analytic_spread(ideal),
        "max_compact_faces": len(newton.maximal_compact_faces(poly)),
        "face_report": newton.face_report(poly),
    }


def reduce_(req: AnalysisRequest) -> dict:
    ideal = req.ideal
    if ideal.is_unit:
        raise ValueError("unit ideal has no proper reduction")
    rep = reduction.reduction_report(ideal)
    return {
        "ideal": to_json_obj(ideal),
        "J": to_json_obj(rep.J),
        "slope_p": rep.slope_p,
        "is_extremal_input": rep.is_extremal_input,
        "ext_count": rep.ext_count,
        "reduction_number": reduction.reduction_number(ideal, rep.J, req.cutoff),
        "cutoff": req.cutoff,
    }


def closure_(req: AnalysisRequest) -> dict:
    ideal = req.ideal
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("closure report needs a nonzero proper ideal")
    rep = closure.closure_report(ideal)
    cert = closure.normality_certificate(ideal)
    return {
        "ideal": to_json_obj(ideal),
        "closure": to_json_obj(rep.closure),
        "was_closed": rep.was_closed,
        "normality": {
            "spread_ell": cert.spread_ell,
            "checked_powers": [[a, ok] for a, ok in cert.checked_powers],
            "verdict": cert.verdict,
            "witness": cert.witness,
        },
    }


def fiber_(req: AnalysisRequest) -> dict:
    ideal = req.ideal
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("fiber report needs a nonzero proper ideal")
    rep = fiber.fiber_report(ideal, req.hilbert, req.binomial_bound)
    index = {a: i for i, a in enumerate(rep.J.gens)}
    intersection = fiber.monomial_prime_intersection(rep.primes, len(rep.J.gens))
    return {
        "ideal": to_json_obj(ideal),
        "J": to_json_obj(rep.J),
        "max_compact_faces": [_face_json(f, index) for f in rep.max_compact_faces],
        "primes": [
            {
                "face": list(p.face_indices),
                "P": list(p.monomial_part),
                "B": [[list(u), list(v)] for u, v in p.binomial_part],
                "binomial_bound": p.degree_bound,
            }
            for p in rep.primes
        ],
        "monomial_intersection": to_json_obj(intersection),
        "spread_ell": rep.spread_ell,
        "is_domain": rep.is_domain,
        "reduced": {
            "verdict": "Reduced" if rep.reduced_verdict.reduced else "NotReduced",
            "degree": rep.reduced_verdict.degree,
            "hilbert_bound": req.hilbert,
        },
        "hilbert_actual": list(rep.hilbert_actual),
        "hilbert_reduced": list(rep.hilbert_reduced),
    }


def verify(req: AnalysisRequest) -> dict:
    ideal = req.ideal
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("verify needs a nonzero proper ideal")
    results = invariants.run_all(ideal, req.hilbert)
    return {
        "ideal": to_json_obj(ideal),
        "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
        "all_passed": all(r.passed for r in results),
    }


HANDLERS = {"analyze": analyze, "reduce": reduce_, "closure": closure_,
            "fiber": fiber_, "verify": verify}


# --- text rendering --------------------------------------------------------

def _ideal_text(obj, names):
    return format_ideal(MonomialIdeal(obj["n"], [tuple(g) for g in obj["gens"]]), names)


def _ymono(vec):
    return format_monomial(vec, [f"y{i + 1}" for i in range(len(vec))])


def render_text(command: str, report: dict, names=None) -> str:
    lines = [f"ideal: {_ideal_text(report['ideal'], names)}"]
    if command == "analyze":
        lines += [
            f"extreme points ({len(report['ext'])}): "
            + ", ".join(format_monomial(v, names) for v in report["ext"]),
            f"minimal reduction J: {_ideal_text(report['J'], names)}",
            f"Kodiyalam slope p: {report['slope_p']}",
            f"analytic spread l: {report['spread_ell']}",
            f"maximal compact faces: {report['max_compact_faces']}",
            "compact faces:",
        ]
        verts = report["face_report"]["vertices"]
        for f in report["face_report"]["faces"]:
            pts = ", ".join(format_monomial(verts[i], names) for i in f["verts"])
            mark = " (maximal)" if f["maximal"] else ""
            lines.append(f"  dim {f['dim']}: {{{pts}}} normal {tuple(f['normal'])} "
                         f"offset {f['offset']}{mark}")
    elif command == "reduce":
        lines += [
            f"minimal reduction J: {_ideal_text(report['J'], names)}",
            f"extremal input: {report['is_extremal_input']}",
            f"|ext(I)|: {report['ext_count']}",
            f"Kodiyalam slope p: {report['slope_p']}",
            f"reduction number w.r.t. J: {report['reduction_number']}",
        ]
    elif command == "closure":
        norm = report["normality"]
        verdict = norm["verdict"]
        if norm["witness"] is not None:
            verdict += f"(a={norm['witness']}): I^{norm['witness']} is not integrally closed"
        checked = ", ".join(f"a={a}:{'closed' if ok else 'not closed'}"
                            for a, ok in norm["checked_powers"]) or "none needed"
        lines += [
            f"integral closure: {_ideal_text(report['closure'], names)}",
            f"integrally closed: {report['was_closed']}",
            f"analytic spread l: {norm['spread_ell']}",
            f"powers checked: {checked}",
            f"normality: {verdict}",
        ]
    elif command == "fiber":
        red = report["reduced"]
        lines += [
            f"extremal ideal J: {_ideal_text(report['J'], names)}",
            f"maximal compact faces: {len(report['max_compact_faces'])}",
        ]
        for p in report["primes"]:
            gens = [f"y{j + 1}" for j in p["P"]]
            bins = [f"{_ymono(u)}-{_ymono(v)}" for u, v in p["B"]]
            lines.append(f"  prime for face {{{', '.join(f'y{j + 1}' for j in p['face'])}}}: "
                         f"P=({', '.join(gens)}) B=({', '.join(bins)}) "
                         f"[binomials up to degree {p['binomial_bound']}]")
        inter = report["monomial_intersection"]
        lines += [
            "intersection of monomial parts: "
            + (", ".join(_ymono(g) for g in inter["gens"]) or "0"),
            f"analytic spread l: {report['spread_ell']}",
            f"fiber ring is a domain: {report['is_domain']}",
            f"hilbert (actual):  {report['hilbert_actual']}",
            f"hilbert (reduced): {report['hilbert_reduced']}",
            f"reducedness: {red['verdict']}({red['degree']}) "
            f"[compared through degree {red['hilbert_bound']}]",
        ]
    elif command == "verify":
        for c in report["checks"]:
            detail = f" ({c['detail']})" if c["detail"] else ""
            lines.append(f"{'PASS' if c['passed'] else 'FAIL'} {c['name']}{detail}")
    return "\n".join(lines)


def run(req: AnalysisRequest):
    """Return (exit_code, report dict or None, error message or None)."""
    try:
        report = HANDLERS[req.command](req)
    except reduction.CutoffExceeded as exc:
        return 1, None, f"bound exceeded: {exc}"
    except ValueError as exc:
        return 1, None, f"error: {exc}"
    if req.command == "verify" and not report["all_passed"]:
        return 1, report, None
    return 0, report, None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="newtonideal",
                                     description="Convex-geometric invariants of monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("ideal", help='generators such as "x^2, x*y, y^2"; "-" reads stdin')
        p.add_argument("--vars", help="comma-separated variable names, or the number of variables")
        p.add_argument("--hilbert", type=int, default=fiber.DEFAULT_HILBERT_BOUND, metavar="K")
        p.add_argument("--binomial-bound", type=int, default=fiber.DEFAULT_BINOMIAL_BOUND,
                       metavar="D")
        p.add_argument("--cutoff", type=int, default=20, metavar="M")
        p.add_argument("--json", action="store_true")
    return parser


def _parse_ideal(text, vars_opt):
    if vars_opt is None:
        return parse(text), None
    if vars_opt.strip().isdigit():
        return parse(text, n=int(vars_opt)), None
    names = [v.strip() for v in vars_opt.split(",") if v.strip()]
    return parse(text, names=names), names


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    text = sys.stdin.read() if args.ideal == "-" else args.ideal
    try:
        ideal, names = _parse_ideal(text.strip(), args.vars)
    except ValueError as exc:  # ParseError, or names inconsistent with --vars
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    try:
        req = AnalysisRequest(args.command, ideal, args.hilbert, args.binomial_bound,
                              args.cutoff, args.json, tuple(names) if names else None)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    code, report, error = run(req)
    if error:
        print(error, file=sys.stderr)
        return code
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(render_text(args.command, report, names))
    return code


if __name__ == "__main__":
    sys.exit(main())
