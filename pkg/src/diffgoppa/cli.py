"""Command-line front end.

Exit status: 0 success, 2 verification failure (witness in the report),
1 input error with a machine-readable {"error": {...}} object on stderr.
All numeric output is exact; reports never contain floats.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import io as dio
from .code import (
    build_code,
    dual_code_residue,
    h_dual_linear,
    min_distance,
    verify_duality,
)
from .design import (
    SearchConfig,
    achieve_block_distance,
    nmds_g4,
    realize_linear_code,
    roth_lempel,
    search_parameters,
    strong_obstruction,
)
from .errors import DiffGoppaError, InputError

DEFAULT_SEED = 20240
DEFAULT_BUDGET = 10**6


def _budget(args):
    if args.budget is not None:
        return args.budget
    env = os.environ.get("DIFFGOPPA_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}", path=path)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}", path=path)


def _emit(text, args):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_matrix(M, args, block_sizes=None, extra=None):
    if args.format == "csv":
        _emit(dio.matrix_to_csv(M), args)
    elif args.format == "pretty":
        _emit(dio.matrix_to_pretty(M, block_sizes), args)
    else:
        obj = dio.matrix_to_json(M)
        if block_sizes:
            obj["blocks"] = list(block_sizes)
        if extra:
            obj.update(extra)
        _emit(json.dumps(obj, indent=2) + "\n", args)
    if getattr(args, "figure", None):
        from .plots import render_matrix_figure
        render_matrix_figure(M, args.figure, block_sizes)


def _emit_json(obj, args):
    if args.format == "pretty":
        _emit(json.dumps(obj, indent=2, sort_keys=True) + "\n", args)
    else:
        _emit(json.dumps(obj, indent=2) + "\n", args)


def cmd_build(args):
    spec = dio.spec_from_json(_read_json(args.spec))
    code = build_code(spec)
    _emit_matrix(code.generator, args, code.block_sizes)
    return 0


def cmd_distance(args):
    spec = dio.spec_from_json(_read_json(args.spec))
    code = build_code(spec)
    report = min_distance(code, args.metric, _budget(args), args.method)
    _emit_json({"metric": report.metric, "value": report.value,
                "method": report.method, "enumerated": report.enumerated}, args)
    return 0


def cmd_dual(args):
    spec = dio.spec_from_json(_read_json(args.spec))
    if args.method == "linear":
        M = h_dual_linear(build_code(spec))
        _emit_matrix(M, args, spec.divisor.block_sizes)
    else:
        dual = dual_code_residue(spec)
        _emit_matrix(dual.generator, args, dual.block_sizes)
    return 0


def cmd_verify_duality(args):
    spec = dio.spec_from_json(_read_json(args.spec))
    report = verify_duality(spec)
    _emit_json(report, args)
    return 0 if report["passes"] else 2


def cmd_act(args):
    spec = dio.spec_from_json(_read_json(args.spec))
    from .taylor import act_on_code
    code = build_code(spec)
    elements_json = _read_json(args.elements)
    elements = [dio.taylor_from_json(spec.field, e) for e in elements_json]
    moved = act_on_code(code, elements)
    _emit_matrix(moved.generator, args, moved.block_sizes)
    return 0


def cmd_sparsify(args):
    spec = dio.spec_from_json(_read_json(args.spec))
    new_spec, certificate = achieve_block_distance(spec, _budget(args))
    _emit_json({"spec": dio.spec_to_json(new_spec),
                "certificate": certificate}, args)
    return 0 if certificate["achieved"] else 2


def cmd_search(args):
    spec = dio.spec_from_json(_read_json(args.spec))
    if args.target_distance is None:
        raise InputError("search requires --target-distance")
    config = SearchConfig(target_distance=args.target_distance,
                          trials=args.trials, seed=args.seed,
                          method=args.method if args.method != "exhaustive"
                          else "exhaustive", budget=_budget(args))
    _, report = search_parameters(spec, config)
    _emit_json(report, args)
    return 0


def cmd_realize(args):
    obj = _read_json(args.matrix)
    M = dio.matrix_from_json(None, obj)
    spec = realize_linear_code(M)
    _emit_json(dio.spec_to_json(spec), args)
    return 0


def cmd_obstruction(args):
    result = strong_obstruction(args.q, args.n, args.k)
    out = {"t": result["t"], "admissible": result["admissible"],
           "witness": dio.spec_to_json(result["witness"])
           if result["witness"] is not None else None}
    _emit_json(out, args)
    return 0


def cmd_named(args):
    if args.name == "roth_lempel":
        if args.k is None:
            raise InputError("roth_lempel requires --k")
        M = roth_lempel(args.k, args.q)
    elif args.name == "nmds_g4":
        M = nmds_g4(args.q)
    else:
        raise InputError(f"unknown named matrix {args.name!r}", name=args.name)
    _emit_matrix(M, args)
    return 0


def cmd_export(args):
    obj = _read_json(args.matrix)
    M = dio.matrix_from_json(None, obj)
    _emit_matrix(M, args, tuple(obj.get("blocks", ())) or None)
    return 0


def make_parser():
    parser = argparse.ArgumentParser(
        prog="diffgoppa",
        description="Differential Goppa codes: construction, duality, "
                    "distance design")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, spec=True):
        if spec:
            p.add_argument("spec", help="path to a code spec JSON file")
        p.add_argument("--format", choices=["json", "csv", "pretty"],
                       default="json")
        p.add_argument("--out", help="write the report to a file")
        p.add_argument("--figure", help="render a matrix figure to this path")
        p.add_argument("--budget", type=int, default=None)
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("build", help="generator matrix of a spec")
    common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("distance", help="minimum distance in a chosen metric")
    common(p)
    p.add_argument("--metric", choices=["hamming", "block", "rt", "rank"],
                   default="hamming")
    p.add_argument("--method", choices=["exhaustive", "minor-certificate"],
                   default="exhaustive")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("dual", help="dual code generator")
    common(p)
    p.add_argument("--method", choices=["residue", "linear"], default="residue")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("verify-duality", help="run all duality sub-checks")
    common(p)
    p.set_defaults(func=cmd_verify_duality)

    p = sub.add_parser("act", help="apply Taylor elements blockwise")
    common(p)
    p.add_argument("--elements", required=True,
                   help="JSON file with one {a, sigma} object per block")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("sparsify",
                       help="units achieving Hamming = block distance")
    common(p)
    p.set_defaults(func=cmd_sparsify)

    p = sub.add_parser("search", help="randomized unit search for a target distance")
    common(p)
    p.add_argument("--target-distance", type=int, default=None)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--method", choices=["exhaustive", "minors"],
                   default="exhaustive")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("realize", help="spec realizing an arbitrary linear code")
    p.add_argument("matrix", help="path to a matrix JSON file")
    common(p, spec=False)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("obstruction", help="strong-code numerical obstruction")
    common(p, spec=False)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_obstruction)

    p = sub.add_parser("named", help="matrices from the literature")
    common(p, spec=False)
    p.add_argument("--name", choices=["roth_lempel", "nmds_g4"], required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=cmd_named)

    p = sub.add_parser("export", help="re-emit a matrix in another format")
    p.add_argument("matrix", help="path to a matrix JSON file")
    common(p, spec=False)
    p.set_defaults(func=cmd_export)

    return parser


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DiffGoppaError as exc:
        payload = {"error": {"code": exc.code, "message": exc.message,
                             "context": {k: repr(v) for k, v in exc.context.items()}}}
        sys.stderr.write(json.dumps(payload) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
