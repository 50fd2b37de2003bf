"""Command-line front end: ``ntheta {dedekind,lens,chain,alexander,selftest}``.

Exit codes: 0 success, 1 usage error, 2 precondition/validation failure,
3 internal contract violation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import alexander, dedekind, lens, surgery
from .exactnum import EXACT_LIMIT, NotRationalError
from .selftest import run_selftest

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_CONTRACT = 0, 1, 2, 3

FUNCTIONALS = ("evaluate", "weight", "theta", "gamma", "induce", "validate")


class CommandError(Exception):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CommandError(f"usage error: {message}", EXIT_USAGE)


@dataclass
class Command:
    name: str
    args: dict[str, Any] = field(default_factory=dict)
    json: bool = False
    decimal: int | None = None


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer {text!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--decimal", type=_int, metavar="N", help="append an N-digit decimal approximation")

    parser = _Parser(prog="ntheta", description="Exact Casson-Walker / NTheta calculator")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("dedekind", parents=[common], help="Dedekind sum s(q, p)")
    p.add_argument("--p", type=_int, required=True)
    p.add_argument("--q", type=_int, required=True)
    p.add_argument("--method", choices=("sawtooth", "cotangent"), default="sawtooth")

    p = sub.add_parser("lens", parents=[common], help="NTheta of the lens space L(p, q)")
    p.add_argument("--p", type=_int, required=True)
    p.add_argument("--q", type=_int, required=True)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--alpha", type=_int)
    which.add_argument("--all", action="store_true")
    p.add_argument("--mode", choices=("auto", "exact", "float"), default="auto")
    p.add_argument("--exact", action="store_true", help=f"force exact mode above p = {EXACT_LIMIT}")
    p.add_argument("--route", choices=("eta_pipeline", "closed_form"), default="eta_pipeline")

    p = sub.add_parser("chain", parents=[common], help="run a surgery chain file")
    p.add_argument("path")

    p = sub.add_parser("alexander", parents=[common], help="Alexander polynomial functionals")
    p.add_argument("--poly", required=True, help="exp2:value pairs, e.g. 2:1,0:-1,-2:1")
    p.add_argument("--functional", choices=FUNCTIONALS, default="evaluate")
    p.add_argument("--i", type=_int, help="Spin^c label for theta")
    p.add_argument("--d", type=_int, help="divisibility for induce")
    p.add_argument("--k", type=_int, help="|Tors H_1(X)| for induce")

    p = sub.add_parser("selftest", parents=[common], help="run the invariant suite")
    p.add_argument("--depth", choices=("small", "full"), default="small")
    return parser


def parse_args(argv: list[str]) -> Command:
    """Parse and validate; raises CommandError (exit 1 usage, 2 validation)."""
    ns = _build_parser().parse_args(argv)
    cmd = Command(ns.command, json=ns.json, decimal=ns.decimal)
    if ns.decimal is not None and ns.decimal < 0:
        raise CommandError("usage error: --decimal must be non-negative", EXIT_USAGE)

    if ns.command in ("dedekind", "lens"):
        if ns.p < 1:
            raise CommandError(f"invalid input: p must be positive, got {ns.p}", EXIT_INVALID)
        if ns.p > 1 and math.gcd(ns.p, ns.q % ns.p) != 1:
            raise CommandError(f"invalid input: gcd(p, q) != 1 for p={ns.p}, q={ns.q}", EXIT_INVALID)
        cmd.args.update(p=ns.p, q=ns.q)
    if ns.command == "dedekind":
        cmd.args["method"] = ns.method
    elif ns.command == "lens":
        if ns.alpha is not None and not 0 <= ns.alpha < ns.p:
            raise CommandError(f"invalid input: alpha must lie in 0..{ns.p - 1}, got {ns.alpha}", EXIT_INVALID)
        mode = ns.mode
        if ns.exact:
            if mode == "float":
                raise CommandError("usage error: --exact conflicts with --mode float", EXIT_USAGE)
            mode = "exact"
        elif mode == "auto":
            mode = "exact" if ns.p <= EXACT_LIMIT else "float"
        if ns.alpha is not None and mode == "float":
            # single-label queries use the exact per-label routes
            mode = "exact"
        cmd.args.update(alpha=ns.alpha, all=ns.all, mode=mode, route=ns.route)
    elif ns.command == "chain":
        cmd.args["path"] = ns.path
    elif ns.command == "alexander":
        try:
            poly = alexander.parse_poly(ns.poly)
        except alexander.AlexanderInputError as exc:
            raise CommandError(f"invalid input: {exc}", EXIT_INVALID) from None
        if ns.functional == "theta" and ns.i is None:
            raise CommandError("usage error: --functional theta requires --i", EXIT_USAGE)
        if ns.functional == "induce" and (ns.d is None or ns.k is None):
            raise CommandError("usage error: --functional induce requires --d and --k", EXIT_USAGE)
        cmd.args.update(poly=poly, functional=ns.functional, i=ns.i, d=ns.d, k=ns.k)
    elif ns.command == "selftest":
        cmd.args["depth"] = ns.depth
    return cmd


def format_decimal(r: Fraction, digits: int) -> str:
    scaled = round(Fraction(r) * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"


def format_rational(r, decimal: int | None = None) -> str:
    """``num/den`` in lowest terms, or a bare integer."""
    if isinstance(r, float):
        return repr(r)
    r = Fraction(r)
    text = str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"
    if decimal is not None:
        text += f" ~ {format_decimal(r, decimal)}"
    return text


def _run_dedekind(a) -> dict:
    f = dedekind.dedekind_sum if a["method"] == "sawtooth" else dedekind.dedekind_sum_cotangent
    return {"p": a["p"], "q": a["q"], "method": a["method"], "s": f(a["q"], a["p"])}


def _run_lens(a) -> dict:
    L = lens.LensSpec(a["p"], a["q"])
    if not a["all"]:
        alpha = a["alpha"]
        return {
            "p": L.p,
            "q": L.q,
            "alpha": alpha,
            "route": a["route"],
            "eta_dirac": lens.eta_dirac(L, alpha),
            "eta_sign": lens.eta_signature(L),
            "corr_y": lens.corr_y(L, alpha),
            "ntheta": lens.ntheta_lens(L, alpha, a["route"]),
        }
    rep = lens.ntheta_spectrum(L, mode=a["mode"])
    return {
        "p": L.p,
        "q": L.q,
        "mode": rep.mode,
        "eta_sign": rep.eta_sign,
        "spectrum": [
            {"alpha": e.alpha, "eta_dirac": e.eta_dirac, "corr_y": e.corr_y, "ntheta": e.ntheta}
            for e in rep.entries
        ],
        "total": rep.total,
        "total_check": rep.total_check,
    }


def _run_chain(a) -> dict:
    try:
        with open(a["path"], encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise CommandError(f"invalid input: cannot read {a['path']}: {exc.strerror}", EXIT_INVALID) from None
    except json.JSONDecodeError as exc:
        raise CommandError(f"invalid input: malformed chain file: {exc}", EXIT_INVALID) from None
    report = surgery.run_chain(surgery.steps_from_json(doc))
    if report.lambda_ != 2 * report.lambda_prime / report.h1_order:
        raise lens.ContractViolation("lambda != 2 lambda' / |H_1|")  # pragma: no cover
    return {
        "lambda_prime": report.lambda_prime,
        "h1_order": report.h1_order,
        "lambda": report.lambda_,
        "ntheta_total": report.ntheta_total,
        "trace": [{"lambda_prime": s.lambda_prime, "h1_order": s.h1_order} for s in report.trace],
    }


def _run_alexander(a) -> dict:
    A, fn = a["poly"], a["functional"]
    out: dict[str, Any] = {"poly": alexander.format_poly(A), "functional": fn}
    if fn == "validate":
        v = alexander.validate(A)
        out["valid"] = v is None
        if v is not None:
            out["violation"] = v.kind
            out["message"] = v.message
        return out
    if fn == "evaluate":
        out["value"] = alexander.evaluate_at_one(A)
    elif fn == "weight":
        out["value"] = alexander.surgery_weight(A)
    elif fn == "theta":
        out["i"] = a["i"]
        out["value"] = alexander.theta_zero_surgery(A, a["i"])
    elif fn == "gamma":
        out["value"] = alexander.gamma_of(A)
    elif fn == "induce":
        out.update(d=a["d"], k=a["k"])
        out["value"] = alexander.format_poly(alexander.induce_knot_complement_poly(A, a["d"], a["k"]))
    return out


def _run_selftest(a) -> dict:
    summary = run_selftest(a["depth"])
    return {
        "depth": summary.depth,
        "ok": summary.ok,
        "checks": [
            {"name": c.name, "cases": c.cases, "failures": c.failures, "first_failure": c.first_failure}
            for c in summary.checks
        ],
    }


RUNNERS = {
    "dedekind": _run_dedekind,
    "lens": _run_lens,
    "chain": _run_chain,
    "alexander": _run_alexander,
    "selftest": _run_selftest,
}


def _jsonable(value, decimal):
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return format_rational(value) if isinstance(value, Fraction) else value
    if isinstance(value, dict):
        out = {}
        for k, v in value.items():
            out[k] = _jsonable(v, decimal)
            if decimal is not None and isinstance(v, Fraction):
                out[f"{k}_decimal"] = format_decimal(v, decimal)
        return out
    if isinstance(value, list):
        return [_jsonable(v, decimal) for v in value]
    return value


def _text(value, decimal, indent: str = "") -> list[str]:
    lines = []
    for k, v in value.items():
        if isinstance(v, list):
            lines.append(f"{indent}{k}:")
            for item in v:
                if isinstance(item, dict):
                    lines.append(indent + "  - " + ", ".join(
                        f"{ik}={_scalar(iv, decimal)}" for ik, iv in item.items()
                    ))
                else:
                    lines.append(f"{indent}  - {_scalar(item, decimal)}")
        else:
            lines.append(f"{indent}{k}: {_scalar(v, decimal)}")
    return lines


def _scalar(v, decimal) -> str:
    if isinstance(v, (Fraction, float)):
        return format_rational(v, decimal)
    if v is None:
        return "-"
    return str(v)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cmd = parse_args(argv)
        result = RUNNERS[cmd.name](cmd.args)
    except CommandError as exc:
        print(exc, file=sys.stderr)
        return exc.exit_code
    except (lens.ContractViolation, NotRationalError) as exc:
        print(f"internal contract violation: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID

    if cmd.json:
        print(json.dumps({"command": cmd.name, **_jsonable(result, cmd.decimal)}, indent=2))
    else:
        print("\n".join(_text(result, cmd.decimal)))
    if cmd.name == "selftest" and not result["ok"]:
        for c in result["checks"]:
            if c["failures"]:
                print(f"FAILED {c['name']}: {c['first_failure']}", file=sys.stderr)
        return EXIT_CONTRACT
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
