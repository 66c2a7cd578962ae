"""Command-line front end.

Commands: analyze, constants, verify-penrose, verify-inequalities,
verify-polymer, examples.  Output is JSON (default) or CSV on standard
output, byte-stable for fixed seed and inputs; timing fields are
stripped for that reason.  Exit codes: 0 success, 1 a verification
failed (the failing instances are serialized), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .bounds import f_lambda_variational, g_ratio, kstar_lambda, kstar_psi, sokal_K
from .errors import TutteZeroError
from .graph import load_graph
from .verify import (
    verify_constants,
    verify_counting,
    verify_f_properties,
    verify_f_routes,
    verify_gkfp_pair,
    verify_parallel_reduction,
    verify_penrose_chains,
    verify_penrose_partition,
    verify_polymer_identity,
    verify_zero_free,
)
from .zeros import analyze, example_suite

HARD_MAX_VERTICES = 12
HARD_MAX_EDGES = 24


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tuttezero",
        description="Partition-function zeros of small weighted graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="PATH", help="graph file (JSON or edge list)")
    common.add_argument("--seed", type=int, default=0, metavar="N")
    common.add_argument("--max-vertices", type=int, default=None, metavar="N")
    common.add_argument("--max-edges", type=int, default=None, metavar="N")
    common.add_argument("--psi", type=float, default=1.0, metavar="X")
    common.add_argument("--lambda", dest="lam", type=float, default=1.0, metavar="X")
    common.add_argument("--beta", type=float, default=1.0, metavar="X")
    common.add_argument("--format", dest="output_format", choices=("json", "csv"),
                        default="json")
    common.add_argument("--a", type=float, default=None, metavar="X",
                        help="interpolation parameter in [0, 1]")
    for name in ("analyze", "constants", "verify-penrose", "verify-inequalities",
                 "verify-polymer", "examples"):
        sub.add_parser(name, parents=[common])
    return parser


def _strip_timing(obj):
    if isinstance(obj, dict):
        return {k: _strip_timing(v) for k, v in obj.items() if k != "elapsed"}
    if isinstance(obj, list):
        return [_strip_timing(v) for v in obj]
    return obj


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(_strip_timing(obj), sort_keys=True, indent=2) + "\n")


def _emit_kv_csv(obj: dict) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "value"])
    flat = _strip_timing(obj)

    def walk(prefix, value):
        if isinstance(value, dict):
            for k in sorted(value):
                walk(f"{prefix}.{k}" if prefix else str(k), value[k])
        elif isinstance(value, list):
            writer.writerow([prefix, json.dumps(value, sort_keys=True)])
        else:
            writer.writerow([prefix, value])

    walk("", flat)
    sys.stdout.write(buf.getvalue())


def _emit_harness_csv(results: list[dict]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["name", "passed", "checked", "failure_count", "failures"])
    for r in results:
        writer.writerow([
            r["name"], r["passed"], r["checked"], r.get("failure_count", 0),
            json.dumps(r.get("failures", [])),
        ])
    sys.stdout.write(buf.getvalue())


def _cap(args) -> tuple[int, int]:
    mv = args.max_vertices
    me = args.max_edges
    if mv is not None and not 1 <= mv <= HARD_MAX_VERTICES:
        raise SystemExit(_usage(f"--max-vertices must be in 1..{HARD_MAX_VERTICES}"))
    if me is not None and not 1 <= me <= HARD_MAX_EDGES:
        raise SystemExit(_usage(f"--max-edges must be in 1..{HARD_MAX_EDGES}"))
    return mv, me


def _usage(msg: str) -> int:
    sys.stderr.write(f"tuttezero: error: {msg}\n")
    return 2


def _finish_verify(results: list[dict], args) -> int:
    report = {"seed": args.seed, "results": results,
              "passed": all(r["passed"] for r in results)}
    if args.output_format == "csv":
        _emit_harness_csv(results)
    else:
        _emit_json(report)
    return 0 if report["passed"] else 1


def _cmd_analyze(args) -> int:
    if not args.input:
        return _usage("analyze requires --input PATH")
    mv, me = _cap(args)
    try:
        g = load_graph(args.input)
    except OSError as exc:
        return _usage(f"cannot read {args.input}: {exc}")
    except (TutteZeroError, ValueError, KeyError, json.JSONDecodeError) as exc:
        return _usage(f"bad graph input: {exc}")
    if g.n > (mv or HARD_MAX_VERTICES) or g.m > (me or HARD_MAX_EDGES):
        return _usage(
            f"graph size {g.n} vertices / {g.m} edges exceeds the cap "
            f"({mv or HARD_MAX_VERTICES} / {me or HARD_MAX_EDGES})"
        )
    rep = analyze(g)
    out = rep.to_json()
    out["seed"] = args.seed
    if args.a is not None:
        if not 0.0 <= args.a <= 1.0:
            return _usage("--a must be in [0, 1]")
        r = rep.bounds.radius_interpolated
        out["radius_interpolated_at_a"] = None if r is None else r(args.a)
    if args.output_format == "csv":
        _emit_kv_csv(out)
    else:
        _emit_json(out)
    return 0


def _cmd_constants(args) -> int:
    if args.psi <= 0:
        return _usage("--psi must be positive")
    if not 0.0 <= args.lam <= 1.0:
        return _usage("--lambda must be in [0, 1]")
    if args.beta <= 0:
        return _usage("--beta must be positive")
    out = {
        "seed": args.seed,
        "psi": args.psi,
        "lambda": args.lam,
        "beta": args.beta,
        "K": sokal_K(),
        "kstar_psi": kstar_psi(args.psi),
        "kstar_lambda": kstar_lambda(args.lam),
        "f_lambda_beta": f_lambda_variational(args.lam, args.beta),
        "g_ratio": g_ratio(args.lam) if args.lam > 0 else None,
    }
    if args.output_format == "csv":
        _emit_kv_csv(out)
    else:
        _emit_json(out)
    return 0


def _cmd_verify_penrose(args) -> int:
    mv, _ = _cap(args)
    results = [
        verify_penrose_partition(mv or 6),
        verify_penrose_chains(min(mv or 5, 5), draws=100, seed=args.seed),
    ]
    return _finish_verify(results, args)


def _cmd_verify_inequalities(args) -> int:
    mv, _ = _cap(args)
    results = [
        verify_constants(),
        verify_f_routes(),
        verify_f_properties(),
        verify_parallel_reduction(seed=args.seed),
        verify_counting(mv or 6, seed=args.seed),
    ]
    return _finish_verify(results, args)


def _cmd_verify_polymer(args) -> int:
    mv, _ = _cap(args)
    results = [
        verify_polymer_identity(mv or 7, min(mv or 4, 4), seed=args.seed),
        verify_gkfp_pair(),
    ]
    return _finish_verify(results, args)


def _cmd_examples(args) -> int:
    suite = example_suite(args.seed)
    if args.output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([
            "name", "n", "m", "q_max", "radius_general", "radius_simple",
            "general_disc_verified", "simple_disc_verified", "commentary",
        ])
        for rec in suite:
            rep = rec["report"]
            writer.writerow([
                rec["name"], rep["n"], rep["m"], rep["q_max"],
                rep["bounds"]["radius_general"], rep["bounds"]["radius_simple"],
                rep["general_disc_verified"], rep["simple_disc_verified"],
                json.dumps(_strip_timing(rec["commentary"]), sort_keys=True),
            ])
        sys.stdout.write(buf.getvalue())
    else:
        _emit_json({"seed": args.seed, "examples": suite})
    return 0


_COMMANDS = {
    "analyze": _cmd_analyze,
    "constants": _cmd_constants,
    "verify-penrose": _cmd_verify_penrose,
    "verify-inequalities": _cmd_verify_inequalities,
    "verify-polymer": _cmd_verify_polymer,
    "examples": _cmd_examples,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        code = _COMMANDS[args.command](args)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
    except TutteZeroError as exc:
        sys.stderr.write(f"tuttezero: verification error: {exc}\n")
        code = 1
    return code


if __name__ == "__main__":
    sys.exit(main())
