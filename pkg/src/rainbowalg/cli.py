"""Command-line entry point.

Every invocation prints exactly one JSON report on stdout. Exit codes:
0 verdict produced, 2 parse/usage error, 3 precondition gate (diameter,
disconnected), 4 budget exceeded, 5 algebraic verdict disagrees with the
brute-force oracle.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import oracle
from .encoders import encode
from .errors import BudgetExceededError, DiameterGateError, FieldError, PreconditionError, RainbowAlgError
from .graph import Graph, parse_dimacs
from .membership import DEFAULT_TERM_CAP, rc2_membership
from .nulla import Certificate, search_certificate, verify_certificate
from .poly import Field, MonomialOrder, PolySystem, roots_of_unity

EXIT_OK, EXIT_USAGE, EXIT_GATE, EXIT_BUDGET, EXIT_DISCREPANCY = 0, 2, 3, 4, 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _emit({"error": {"type": "usage", "message": message}})
        raise SystemExit(EXIT_USAGE)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--order", choices=["lex", "grlex", "grevlex"], default="grlex")
    p.add_argument("--max-degree", type=int, default=None,
                   help="certificate degree cap (default: n(d-1), at least 1)")
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET,
                   help="maximum assignments any brute-force search may enumerate")
    p.add_argument("--field", type=int, default=None, help="prime characteristic override")
    p.add_argument("--term-cap", type=int, default=DEFAULT_TERM_CAP)
    p.add_argument("--timing", action="store_true", help="add wall time to the report")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="rainbowalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("encode", parents=[common], help="graph -> polynomial system JSON")
    p.add_argument("--problem", required=True, choices=["vcolor", "stable", "rc2", "rck"])
    p.add_argument("--k", type=int, default=None)
    p.add_argument("graph")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("nulla", parents=[common], help="certificate search on a system JSON")
    p.add_argument("system")
    p.add_argument("--witness-search", action="store_true")
    p.add_argument("-o", "--output", default=None, help="write the certificate JSON here")

    p = sub.add_parser("verify", parents=[common], help="check a certificate against a system")
    p.add_argument("--cert", required=True)
    p.add_argument("system")

    p = sub.add_parser("membership", parents=[common], help="decide rc <= 2 by ideal membership")
    p.add_argument("graph")
    p.add_argument("--emit-remainder", action="store_true")

    p = sub.add_parser("oracle", parents=[common], help="brute-force ground truth")
    p.add_argument("--problem", required=True, choices=["rc", "rc-at-most", "chromatic", "stable-count"])
    p.add_argument("--k", type=int, default=None)
    p.add_argument("graph")

    p = sub.add_parser("pipeline", parents=[common], help="encode, decide, and cross-check")
    p.add_argument("--problem", required=True, choices=["rc2", "rck", "vcolor", "stable", "membership"])
    p.add_argument("--k", type=int, default=None)
    p.add_argument("graph")
    return parser


def _emit(report: dict):
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=False) + "\n")


def _digest(*paths: str) -> str:
    h = hashlib.sha256()
    for path in paths:
        h.update(Path(path).read_bytes())
    return h.hexdigest()


def _load_graph(path: str) -> Graph:
    return parse_dimacs(Path(path).read_text())


def _load_system(path: str) -> PolySystem:
    try:
        return PolySystem.from_json(json.loads(Path(path).read_text()))
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise FieldError(f"{path}: not a polynomial system JSON ({exc})") from None


def _field(args) -> Field | None:
    return Field(args.field) if args.field is not None else None


def _need_k(args):
    if args.k is None:
        raise FieldError(f"--k is required for problem {args.problem}")


def cmd_encode(args) -> tuple[dict, int]:
    if args.problem != "rc2":
        _need_k(args)
    sys_ = encode(args.problem, _load_graph(args.graph), args.k, _field(args))
    data = sys_.to_json()
    out = {"field": data["field"], "vars": data["vars"], "equations": len(sys_),
           "maxDegree": sys_.max_degree}
    if args.output:
        Path(args.output).write_text(json.dumps(data, indent=1) + "\n")
        out["output"] = args.output
    else:
        out["system"] = data
    return out, EXIT_OK


def cmd_nulla(args) -> tuple[dict, int]:
    sys_ = _load_system(args.system)
    cap = args.max_degree if args.max_degree is not None else "auto"
    outcome = search_certificate(sys_, cap, witness_search=args.witness_search, budget=args.budget)
    out = outcome.to_json()
    if args.output and outcome.certificate is not None:
        Path(args.output).write_text(json.dumps(outcome.certificate.to_json(), indent=1) + "\n")
        out["output"] = args.output
    return out, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    sys_ = _load_system(args.system)
    cert = Certificate.from_json(json.loads(Path(args.cert).read_text()), sys_)
    return {"valid": verify_certificate(sys_, cert), "degree": cert.degree}, EXIT_OK


def cmd_membership(args) -> tuple[dict, int]:
    verdict = rc2_membership(_load_graph(args.graph), MonomialOrder(args.order), args.term_cap)
    return verdict.to_json(args.emit_remainder), EXIT_OK


def cmd_oracle(args) -> tuple[dict, int]:
    g = _load_graph(args.graph)
    if args.problem == "rc":
        return {"value": oracle.rc_exact(g, args.budget)}, EXIT_OK
    _need_k(args)
    if args.problem == "rc-at-most":
        value = oracle.rc_at_most(g, args.k, args.budget)
    elif args.problem == "chromatic":
        value = oracle.chromatic_feasible(g, args.k, args.budget)
    else:
        value = oracle.stable_set_count(g, args.k, args.budget)
    return {"value": value}, EXIT_OK


def _witness_colors(sys_: PolySystem, witness) -> list[int]:
    if sys_.problem == "rck":
        roots = roots_of_unity(sys_.field.char, sys_.k)
        return [roots.index(v) for v in witness]
    return list(witness)


def cmd_pipeline(args) -> tuple[dict, int]:
    g = _load_graph(args.graph)
    out: dict = {}
    if args.problem == "membership":
        verdict = rc2_membership(g, MonomialOrder(args.order), args.term_cap)
        rc = oracle.rc_exact(g, args.budget)
        out.update(verdict.to_json())
        out["oracle"] = {"rc": rc}
        out["agree"] = verdict.rc_at_least_3 == (rc >= 3)
        return out, EXIT_OK if out["agree"] else EXIT_DISCREPANCY

    if args.problem != "rc2":
        _need_k(args)
    k = 2 if args.problem == "rc2" else args.k
    try:
        sys_ = encode(args.problem, g, k, _field(args))
    except DiameterGateError as exc:
        out["algebraic"] = "infeasible"
        out["reason"] = str(exc)
        sys_ = None
    if sys_ is not None:
        cap = args.max_degree if args.max_degree is not None else "auto"
        outcome = search_certificate(sys_, cap, witness_search=True, budget=args.budget)
        out["algebraic"] = {"certificate": "infeasible", "witness": "feasible",
                            "exhausted": "undecided"}[outcome.kind]
        if outcome.certificate is not None:
            out["certificateDegree"] = outcome.certificate.degree
            out["certificateValid"] = verify_certificate(sys_, outcome.certificate)
        if outcome.witness is not None:
            out["witness"] = list(outcome.witness)

    if args.problem == "rc2":
        rc = oracle.rc_exact(g, args.budget)
        out["oracle"] = {"rc": rc}
        expected_feasible = rc <= 2
    elif args.problem == "rck":
        expected_feasible = oracle.rc_at_most(g, k, args.budget)
        out["oracle"] = {"rcAtMostK": expected_feasible}
    elif args.problem == "vcolor":
        expected_feasible = oracle.chromatic_feasible(g, k, args.budget)
        out["oracle"] = {"chromaticFeasible": expected_feasible}
    else:
        count = oracle.stable_set_count(g, k, args.budget)
        expected_feasible = count > 0
        out["oracle"] = {"stableSetCount": count}

    if sys_ is not None and out.get("witness") is not None and args.problem in ("rc2", "rck"):
        colors = _witness_colors(sys_, out["witness"])
        out["witnessRainbow"] = oracle.rainbow_connected(g, colors, k)
    if out["algebraic"] == "undecided":
        out["agree"] = None
        return out, EXIT_OK
    out["agree"] = (out["algebraic"] == "feasible") == expected_feasible
    if out.get("certificateValid") is False or out.get("witnessRainbow") is False:
        out["agree"] = False
    return out, EXIT_OK if out["agree"] else EXIT_DISCREPANCY


COMMANDS = {
    "encode": cmd_encode,
    "nulla": cmd_nulla,
    "verify": cmd_verify,
    "membership": cmd_membership,
    "oracle": cmd_oracle,
    "pipeline": cmd_pipeline,
}


def _inputs(args) -> list[str]:
    paths = [getattr(args, name) for name in ("cert", "graph", "system") if getattr(args, name, None)]
    return [p for p in paths if Path(p).is_file()]


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    config = {key: value for key, value in sorted(vars(args).items())
              if key not in ("command", "graph", "system", "cert", "output", "timing")}
    report: dict = {"command": ["rainbowalg", *argv], "config": config}
    start = time.perf_counter()
    try:
        report["inputDigest"] = _digest(*_inputs(args))
        payload, code = COMMANDS[args.command](args)
        report.update(payload)
    except OSError as exc:
        report["error"], code = {"type": "io", "message": str(exc)}, EXIT_USAGE
    except PreconditionError as exc:
        report["error"], code = {"type": "precondition", "message": str(exc)}, EXIT_GATE
    except BudgetExceededError as exc:
        report["error"], code = {"type": "budget", "message": str(exc)}, EXIT_BUDGET
    except (RainbowAlgError, ValueError) as exc:
        report["error"], code = {"type": "usage", "message": str(exc)}, EXIT_USAGE
    if args.timing:
        report["wallTime"] = round(time.perf_counter() - start, 6)
    report["exitCode"] = code
    _emit(report)
    return code


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
