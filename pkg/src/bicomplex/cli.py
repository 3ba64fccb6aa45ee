"""``bch`` command line tool.

Every subcommand reads one JSON document from a file (or ``-`` for stdin)
and prints a JSON response with a ``status`` field.  Exit codes: 0 success,
1 domain error (null-cone, not self-adjoint, no convergence, ...), 2 bad
input.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import operators as ops
from . import scalar as sc
from . import serialize as ser
from . import tmodule as tm
from . import verify as vf
from .errors import BicomplexError, DimensionError, MetricError, NotSelfAdjointError

DEFAULT_TOL = 1e-10

EXIT_OK, EXIT_DOMAIN, EXIT_INPUT = 0, 1, 2


def _default_tol() -> float:
    env = os.environ.get("BCH_TOL")
    if env is None:
        return DEFAULT_TOL
    try:
        tol = float(env)
    except ValueError:
        raise ser.InputError(f"BCH_TOL is not a number: {env!r}") from None
    if not (math.isfinite(tol) and tol >= 0):
        raise ser.InputError(f"BCH_TOL must be a finite non-negative number, got {env!r}")
    return tol


def _read(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ser.InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ser.InputError(f"invalid JSON: {exc}") from None


def cmd_info(args) -> dict:
    w = ser.parse_bicomplex(_read(args.input))
    p1, p2 = sc.to_idempotent(w)
    out = {
        "input": w,
        "conjugates": {str(k): sc.bc_conj(w, k) for k in range(4)},
        "mod_sq_i1": sc.mod_sq_i1(w),
        "mod_sq_i2": sc.mod_sq_i2(w),
        "mod_sq_j": sc.mod_sq_j(w),
        "mod1": sc.mod1(w),
        "mod3": sc.mod3(w),
        "idempotent": [p1, p2],
        "null_cone": sc.is_null_cone(w, args.tol),
    }
    if not out["null_cone"]:
        out["inverse"] = sc.bc_inv(w, args.tol)
    elif args.require_inverse:
        sc.bc_inv(w, args.tol)
    return out


def _pair_doc(doc, parse):
    if not isinstance(doc, dict) or "x" not in doc or "y" not in doc:
        raise ser.InputError('expected {"x": ..., "y": ...}')
    return parse(doc["x"]), parse(doc["y"])


def cmd_dot(args) -> dict:
    doc = _read(args.input)
    x, y = _pair_doc(doc, ser.parse_tvector)
    if doc.get("metric") is None:
        return {"dot": tm.dot(x, y)}
    m = ser.parse_split_metric(doc["metric"])
    return {"dot": tm.dot_split(x, y, m), "closed": tm.is_closed(m, args.tol)}


def cmd_norm(args) -> dict:
    doc = _read(args.input)
    if isinstance(doc, dict):
        x, y = _pair_doc(doc, ser.parse_tvector)
        return {"norm_x": tm.norm(x), "norm_y": tm.norm(y), "distance": tm.distance(x, y)}
    return {"norm": tm.norm(ser.parse_tvector(doc))}


def cmd_angle(args) -> dict:
    x, y = _pair_doc(_read(args.input), ser.parse_hvector)
    ang = tm.hyperbolic_angle(x, y, args.tol)
    return {"angle": ang, "theta1": ang.a, "theta2": ang.b, "hyp_dot": tm.hyp_dot(x, y)}


def cmd_adjoint(args) -> dict:
    a = ser.parse_tmatrix(_read(args.input))
    return {"adjoint": ops.adjoint(a)}


def cmd_selfadjoint(args) -> dict:
    a = ser.parse_tmatrix(_read(args.input))
    ok = ops.is_self_adjoint(a, args.tol)
    if not ok:
        if args.strict:
            raise NotSelfAdjointError("operator differs from its adjoint")
        return {"self_adjoint": False}
    check = ops.selfadjoint_spectrum_check(a, args.tol)
    return {"self_adjoint": True, "max_imag": check.max_imag,
            "all_hyperbolic": check.all_hyperbolic}


def cmd_eig(args) -> dict:
    a = ser.parse_tmatrix(_read(args.input))
    return {"report": ops.bicomplex_eig(a, args.pairing, args.tol)}


def cmd_verify(args) -> dict:
    if args.samples < 1:
        raise ser.InputError("--samples must be positive")
    results = vf.run_all(args.samples, args.seed)
    out = {"suites": [{"name": r.name, "samples": r.samples, "max_error": r.max_error,
                       "tol": r.tol, "passed": r.passed} for r in results]}
    out["passed"] = all(r.passed for r in results)
    return out


class VerificationFailed(BicomplexError):
    code = "verification_failed"


def _text(obj, indent: str = "") -> list[str]:
    lines = []
    for key, val in obj.items():
        if isinstance(val, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_text(val, indent + "  "))
        else:
            lines.append(f"{indent}{key}: {ser.dumps(val)}")
    return lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bch", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None,
                        help="tolerance (default 1e-10, or $BCH_TOL)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, needs_input=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if needs_input:
            p.add_argument("input", help="JSON file, or - for stdin")
        p.set_defaults(func=func)
        return p

    p = add("info", cmd_info, "conjugates, moduli, idempotent form and inverse of a scalar")
    p.add_argument("--require-inverse", action="store_true",
                   help="fail with exit 1 when the input is a zero divisor")
    add("dot", cmd_dot, "bicomplex scalar product of two kets")
    add("norm", cmd_norm, "norm of a ket, or norms and distance of a pair")
    add("angle", cmd_angle, "hyperbolic angle between two hyperbolic vectors")
    add("adjoint", cmd_adjoint, "bicomplex adjoint of a matrix")
    p = add("selfadjoint", cmd_selfadjoint, "self-adjointness test and spectrum check")
    p.add_argument("--strict", action="store_true",
                   help="fail with exit 1 when the matrix is not self-adjoint")
    p = add("eig", cmd_eig, "bicomplex eigenpairs")
    p.add_argument("--pairing", choices=("diagonal", "full"), default="diagonal")
    p = add("verify", cmd_verify, "oracle differential verification", needs_input=False)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "text":
        print("\n".join(_text(doc)))
    else:
        print(ser.dumps(doc))


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.tol is None:
            args.tol = _default_tol()
        elif not (math.isfinite(args.tol) and args.tol >= 0):
            raise ser.InputError("--tol must be a finite non-negative number")
        result = args.func(args)
        if args.command == "verify" and not result["passed"]:
            raise VerificationFailed("oracle differential check exceeded tolerance")
    except BicomplexError as exc:
        status = EXIT_INPUT if isinstance(exc, (DimensionError, MetricError)) else EXIT_DOMAIN
        _emit({"status": "error", "error": {"code": exc.code, "message": str(exc)}}, args.format)
        return status
    except (ser.InputError, TypeError, ValueError) as exc:
        _emit({"status": "error", "error": {"code": "input_error", "message": str(exc)}},
              args.format)
        return EXIT_INPUT
    _emit({"status": "ok", **result}, args.format)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
