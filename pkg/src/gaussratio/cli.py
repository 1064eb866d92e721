"""Command-line surface: JSON results on stdout, CSV plot data on request.

Commands: eval-ratio, eval-2f1, cfrac, classify, runckel, boundary,
integral-rep, verify-example, moments.  Every JSON document has the shape
{"command", "inputs", "result", "diagnostics"} and validates against the
checked-in output_schema.json.  Exit codes: 0 success, 2 precondition
failure (named), 1 internal error, 64 usage errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import cfrac_engine, integral_rep, nevanlinna, shift_engine
from .errors import GaussRatioError, PreconditionFailed
from .hyp2f1_core import Params, hyp2f1
from .shift_engine import derive_shifts

USAGE_EXIT = 64
PRECONDITION_EXIT = 2
INTERNAL_EXIT = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(USAGE_EXIT)


def _build_parser() -> _Parser:
    parser = _Parser(prog="gaussratio",
                     description="Ratios of Gauss hypergeometric functions "
                                 "with integer parameter shifts")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, shifts=False, z=False):
        sp.add_argument("--a", type=float, required=True)
        sp.add_argument("--b", type=float, required=True)
        sp.add_argument("--c", type=float, required=True)
        if shifts:
            sp.add_argument("--n1", type=int, default=0)
            sp.add_argument("--n2", type=int, default=0)
            sp.add_argument("--m", type=int, default=0)
        if z:
            sp.add_argument("--z", type=float, default=None,
                            help="real z shorthand")
            sp.add_argument("--z-re", type=float, default=None)
            sp.add_argument("--z-im", type=float, default=0.0)
        sp.add_argument("--tol", type=float, default=None)
        sp.add_argument("--max-nodes", type=int, default=512)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--threads", type=int, default=1)
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--output", type=str, default=None)

    sp = sub.add_parser("eval-ratio", help="R(z) by the 2F1 ratio")
    add_common(sp, shifts=True, z=True)
    sp = sub.add_parser("eval-2f1", help="2F1(a,b;c;z) in the cut plane")
    add_common(sp, z=True)
    sp = sub.add_parser("cfrac", help="Gauss C-fraction coefficients/value")
    add_common(sp, z=True)
    sp.add_argument("--kind", choices=("011", "010"), default="011")
    sp.add_argument("--count", type=int, default=12)
    sp = sub.add_parser("classify", help="Nevanlinna classification")
    add_common(sp, shifts=True)
    sp = sub.add_parser("runckel", help="zero-free-region check")
    add_common(sp)
    sp = sub.add_parser("boundary", help="branch-cut density Im R(x+i0)")
    add_common(sp, shifts=True)
    sp.add_argument("--x", type=float, default=None)
    sp.add_argument("--bank", choices=("upper", "lower"), default="upper")
    sp.add_argument("--x-min", type=float, default=None)
    sp.add_argument("--x-max", type=float, default=None)
    sp.add_argument("--count", type=int, default=200)
    sp = sub.add_parser("integral-rep", help="evaluate the integral representation")
    add_common(sp, shifts=True, z=True)
    sp.add_argument("--n-override", type=int, default=None)
    sp = sub.add_parser("verify-example", help="verify one worked example")
    sp.add_argument("index", type=int)
    sp.add_argument("--a", type=float, default=None)
    sp.add_argument("--b", type=float, default=None)
    sp.add_argument("--c", type=float, default=None)
    sp.add_argument("--tol", type=float, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("json",), default="json")
    sp = sub.add_parser("moments", help="moment identity check")
    add_common(sp, shifts=True)
    sp.add_argument("--which", choices=("z0", "z1", "z01"), default="z0")
    return parser


def _default_tol(args) -> float:
    if getattr(args, "tol", None) is not None:
        return args.tol
    env = os.environ.get("GRL_TOL")
    if env:
        try:
            return float(env)
        except ValueError:
            pass
    return 1e-8


def _zvalue(args) -> complex:
    if args.z is not None:
        z = complex(args.z, args.z_im or 0.0)
    elif args.z_re is None:
        raise PreconditionFailed("z", "missing --z or --z-re")
    else:
        z = complex(args.z_re, args.z_im)
    if z.imag == 0.0 and z.real >= 1.0:
        raise PreconditionFailed("z off [1, oo)", f"z = {z.real} lies on the branch cut")
    return z


def _cplx(v: complex) -> dict:
    return {"re": float(v.real), "im": float(v.imag)}


def _document(command, inputs, result, error_estimate=None, nodes=None,
              warnings=()) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "result": result,
        "diagnostics": {
            "error_estimate": error_estimate,
            "nodes": nodes,
            "warnings": list(warnings),
        },
    }


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")


def _params(args) -> Params:
    return Params(args.a, args.b, args.c)


def _run_eval_ratio(args):
    tol = _default_tol(args)
    z = _zvalue(args)
    p = _params(args)
    s = derive_shifts(args.n1, args.n2, args.m)
    val = shift_engine.ratio_value(p, s, z, min(tol, 1e-12))
    inputs = {"a": args.a, "b": args.b, "c": args.c, "n1": args.n1,
              "n2": args.n2, "m": args.m, "z": _cplx(z), "tol": tol}
    return _document("eval-ratio", inputs, _cplx(val))


def _run_eval_2f1(args):
    tol = _default_tol(args)
    z = _zvalue(args)
    val = hyp2f1(_params(args), z, min(tol, 1e-12))
    inputs = {"a": args.a, "b": args.b, "c": args.c, "z": _cplx(z), "tol": tol}
    return _document("eval-2f1", inputs, _cplx(val))


def _run_cfrac(args):
    tol = _default_tol(args)
    p = _params(args)
    frac = (cfrac_engine.gauss_cfrac_011(p) if args.kind == "011"
            else cfrac_engine.gauss_cfrac_010(p))
    count = args.count
    if frac.terminating:
        count = min(count, frac.terminal_index + 1)
    alphas = [float(frac[i]) for i in range(count)]
    result = {"alphas": alphas, "terminating": frac.terminating}
    nodes = None
    warnings = []
    if args.z is not None or args.z_re is not None:
        z = _zvalue(args)
        diag = {}
        val = cfrac_engine.eval_cfrac(frac, z, tol, diagnostics=diag)
        result["value"] = _cplx(val)
        nodes = diag.get("depth")
        warnings = diag.get("warnings", [])
    inputs = {"a": args.a, "b": args.b, "c": args.c, "kind": args.kind,
              "count": args.count, "tol": tol}
    return _document("cfrac", inputs, result, nodes=nodes, warnings=warnings)


def _run_classify(args):
    p = _params(args)
    s = derive_shifts(args.n1, args.n2, args.m)
    inputs = {"a": args.a, "b": args.b, "c": args.c, "n1": args.n1,
              "n2": args.n2, "m": args.m}
    if (s.n1, s.n2, s.m) == (0, 1, 1):
        cls = nevanlinna.classify_gauss_ratio(p)
        result = {"epsilon": cls.epsilon, "kappa": cls.kappa,
                  "lambda": cls.lam, "is_rational": cls.is_rational}
        if cls.is_rational:
            result["degree"] = cls.degree
            result["z_degree"] = cls.z_degree
        return _document("classify", inputs, result)
    sign = nevanlinna.bp_sign_on_unit_interval(p, s)
    member = {"nonneg": "R", "nonpos": "-R",
              "sign_changing": "neither", "identically_zero": "rational"}
    result = {"bp_sign": sign.value, "s_union_member": member[sign.value]}
    return _document("classify", inputs, result)


def _run_runckel(args):
    report = nevanlinna.runckel_check(_params(args))
    inputs = {"a": args.a, "b": args.b, "c": args.c}
    result = {"satisfied": report.satisfied,
              "which_condition": report.which_condition.value,
              "details": report.details}
    return _document("runckel", inputs, result)


def _write_density_csv(args, p, s) -> dict:
    if args.output is None:
        raise PreconditionFailed("output", "--format csv requires --output PATH")
    tol = _default_tol(args)
    rows = []
    if args.count > 0 and args.x_min is not None and args.x_max is not None \
            and args.x_min <= args.x_max:
        if args.count == 1:
            xs = [args.x_min]
        else:
            step = (args.x_max - args.x_min) / (args.count - 1)
            xs = [args.x_min + i * step for i in range(args.count)]
        for x in xs:
            rows.append((x, shift_engine.boundary_im(p, s, x, args.bank, tol)))
    try:
        with open(args.output, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["x", "value"])
            writer.writerows((repr(x), repr(v)) for x, v in rows)
    except OSError as exc:
        raise GaussRatioError(f"cannot write {args.output}: {exc}") from exc
    inputs = {"a": args.a, "b": args.b, "c": args.c, "n1": args.n1,
              "n2": args.n2, "m": args.m, "x_min": args.x_min,
              "x_max": args.x_max, "count": args.count, "bank": args.bank}
    return _document("boundary", inputs,
                     {"rows": len(rows), "path": args.output})


def _run_boundary(args):
    p = _params(args)
    s = derive_shifts(args.n1, args.n2, args.m)
    if args.format == "csv" or args.x_min is not None:
        return _write_density_csv(args, p, s)
    if args.x is None:
        raise PreconditionFailed("x", "missing --x (or an --x-min/--x-max range)")
    tol = _default_tol(args)
    val = shift_engine.boundary_im(p, s, args.x, args.bank, tol)
    inputs = {"a": args.a, "b": args.b, "c": args.c, "n1": args.n1,
              "n2": args.n2, "m": args.m, "x": args.x, "bank": args.bank,
              "tol": tol}
    return _document("boundary", inputs, val)


def _run_integral_rep(args):
    tol = _default_tol(args)
    z = _zvalue(args)
    p = _params(args)
    s = derive_shifts(args.n1, args.n2, args.m)
    rep = integral_rep.build_representation(p, s, n_override=args.n_override)
    out = integral_rep.eval_representation(rep, z, tol)
    inputs = {"a": args.a, "b": args.b, "c": args.c, "n1": args.n1,
              "n2": args.n2, "m": args.m, "z": _cplx(z), "tol": tol}
    result = {"value": _cplx(out.value), "N": rep.N,
              "Q": list(rep.Q.coeffs), "B": rep.density.B,
              "P_r": list(rep.density.P_r.coeffs)}
    return _document("integral-rep", inputs, result,
                     error_estimate=out.abs_error_estimate,
                     nodes=out.nodes_used)


def _run_verify_example(args):
    tol = args.tol if args.tol is not None else 1e-8
    p = None
    if args.a is not None and args.b is not None and args.c is not None:
        p = Params(args.a, args.b, args.c)
    report = integral_rep.verify_example(args.index, p=p, tol=tol)
    inputs = {"index": args.index,
              "a": report.params[0], "b": report.params[1], "c": report.params[2]}
    result = {
        "shifts": list(report.shifts),
        "N": report.n_used,
        "z_grid": [_cplx(z) for z in report.z_grid],
        "rel_errors": list(report.rel_errors),
        "max_rel_error": report.max_rel_error,
        "bp_rel_error": report.bp_rel_error,
        "passed": report.passed,
    }
    return _document("verify-example", inputs, result,
                     error_estimate=report.max_rel_error,
                     warnings=report.notes)


def _run_moments(args):
    p = _params(args)
    s = derive_shifts(args.n1, args.n2, args.m)
    rep = integral_rep.build_representation(p, s)
    lhs, rhs = integral_rep.moment_identity_check(rep, args.which)
    inputs = {"a": args.a, "b": args.b, "c": args.c, "n1": args.n1,
              "n2": args.n2, "m": args.m, "which": args.which}
    rel = abs(lhs - rhs) / max(abs(rhs), 1e-300)
    return _document("moments", inputs,
                     {"lhs": lhs, "rhs": rhs, "rel_error": rel})


_RUNNERS = {
    "eval-ratio": _run_eval_ratio,
    "eval-2f1": _run_eval_2f1,
    "cfrac": _run_cfrac,
    "classify": _run_classify,
    "runckel": _run_runckel,
    "boundary": _run_boundary,
    "integral-rep": _run_integral_rep,
    "verify-example": _run_verify_example,
    "moments": _run_moments,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    runner = _RUNNERS[args.command]
    try:
        doc = runner(args)
    except PreconditionFailed as exc:
        inputs = {k: v for k, v in vars(args).items()
                  if k != "command" and v is not None}
        _emit(_document(args.command, inputs, None,
                        warnings=[f"precondition failed: {exc.condition}: {exc}"]))
        return PRECONDITION_EXIT
    except GaussRatioError as exc:
        sys.stderr.write(f"gaussratio: {type(exc).__name__}: {exc}\n")
        return INTERNAL_EXIT
    except ValueError as exc:
        sys.stderr.write(f"gaussratio: {exc}\n")
        return INTERNAL_EXIT
    _emit(doc)
    return 0


if __name__ == "__main__":
    sys.exit(main())
