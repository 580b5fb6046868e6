"""Command-line front end.

Subcommands: rk, coeffs, verify, verify-shifted, radial-ft, sphere-ft,
duality.  Reports are JSON (field names mirroring VerificationReport,
floats with 17 significant digits, complex values as [re, im] pairs) or CSV
plot data; identical argv produces byte-identical output.  Exit status: 0
when every checked residual is within tolerance, 2 on a residual failure,
1 on usage, parse, or work-cap errors.

GUINAND_WORKCAP overrides the enumeration and table caps.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import os
import sys
from fractions import Fraction

from . import atoms, coeffs, formulas, radial, sumsq
from .errors import ParseError, QuadratureError, WorkCapExceeded
from .schwartz import GaussPoly, parse
from .util import rel_diff


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1, not argparse's default 2
        raise _UsageError(message)


def _fmt_float(x: float) -> str:
    if x != x or x in (float("inf"), float("-inf")):
        raise ValueError(f"non-finite value {x} in report")
    return format(x, ".17g")


def _to_json(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, complex):
        return f"[{_fmt_float(obj.real)}, {_fmt_float(obj.imag)}]"
    if isinstance(obj, str):
        return '"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(obj, dict):
        inner = ", ".join(f"{_to_json(str(key))}: {_to_json(val)}"
                          for key, val in obj.items())
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _write(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_csv(args, header, rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    _write(args, buf.getvalue())


def _parse_phi(expr: str) -> GaussPoly:
    phi = parse(expr).value
    if not phi.is_odd():
        print("notice: expression is not odd; replacing phi by its odd part "
              "phi(t) - phi(-t)", file=sys.stderr)
        phi = phi.odd_part()
    return phi


def _parse_vector(text: str) -> tuple:
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"bad vector {text!r}: {exc}") from None


def _parse_grid(args) -> list[float]:
    if args.t is not None and args.t_grid is not None:
        raise _UsageError("give either --t or --t-grid, not both")
    if args.t is not None:
        return [args.t]
    if args.t_grid is None:
        raise _UsageError("one of --t or --t-grid is required")
    try:
        a, b, step = (float(x) for x in args.t_grid.split(":"))
    except ValueError:
        raise _UsageError(f"bad --t-grid {args.t_grid!r}; expected a:b:step") from None
    if step <= 0 or b < a:
        raise _UsageError("grid requires a <= b and step > 0")
    count = int(math.floor((b - a) / step + 1e-9)) + 1
    return [a + i * step for i in range(count)]


def _workcap() -> int | None:
    raw = os.environ.get("GUINAND_WORKCAP")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"GUINAND_WORKCAP must be an integer, got {raw!r}") from None


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def _cmd_rk(args) -> int:
    cap = _workcap()
    kwargs = {"table_cap": cap} if cap is not None else {}
    table = sumsq.rk_table(args.k, args.nmax, **kwargs)
    if args.format == "csv":
        _write_csv(args, ["n", "r_k"], list(enumerate(table.counts)))
    else:
        _write(args, _to_json({"k": table.k, "max_n": table.max_n,
                               "counts": list(table.counts)}) + "\n")
    return 0


def _cmd_coeffs(args) -> int:
    a = coeffs.alpha(args.k)
    bs = coeffs.betas(args.k)
    if args.format == "exact":
        lines = [f"alpha({args.k}) = {a}"]
        lines += [f"beta({j},{args.k}) = {b}" for j, b in enumerate(bs)]
        _write(args, "\n".join(lines) + "\n")
    elif args.format == "float":
        lines = [f"alpha({args.k}) = {_fmt_float(a.to_float())}"]
        lines += [f"beta({j},{args.k}) = {_fmt_float(b.to_float())}"
                  for j, b in enumerate(bs)]
        _write(args, "\n".join(lines) + "\n")
    else:
        obj = {"k": args.k,
               "alpha": {"num": a.num, "den": a.den, "pi_power": a.pi_power},
               "beta": [{"j": j, "num": b.num, "den": b.den,
                         "pi_power": b.pi_power} for j, b in enumerate(bs)]}
        _write(args, _to_json(obj) + "\n")
    return 0


def _cmd_verify(args) -> int:
    phi = _parse_phi(args.phi)
    report = formulas.verify(args.k, phi, args.nmax, args.tol)
    if args.format == "csv":
        rows = [(row["n"], row["r_k"],
                 _fmt_float(row["lhs_term"].real), _fmt_float(row["lhs_term"].imag),
                 _fmt_float(row["rhs_term"].real), _fmt_float(row["rhs_term"].imag),
                 _fmt_float(row["lhs_partial"].real), _fmt_float(row["lhs_partial"].imag),
                 _fmt_float(row["rhs_partial"].real), _fmt_float(row["rhs_partial"].imag))
                for row in formulas.shell_table(args.k, phi, args.nmax)]
        _write_csv(args, ["n", "r_k", "lhs_term_re", "lhs_term_im",
                          "rhs_term_re", "rhs_term_im", "lhs_partial_re",
                          "lhs_partial_im", "rhs_partial_re", "rhs_partial_im"],
                   rows)
    else:
        _write(args, _to_json(report.to_dict()) + "\n")
    return 0 if report.rel_residual <= args.tol else 2


def _cmd_verify_shifted(args) -> int:
    phi = _parse_phi(args.phi)
    eta = _parse_vector(args.eta)
    xi = _parse_vector(args.xi)
    cap = _workcap()
    kwargs = {"cap": cap} if cap is not None else {}
    report = formulas.verify_shifted(args.k, eta, xi, phi, args.r_time,
                                     args.r_freq, args.tol, **kwargs)
    _write(args, _to_json(report.to_dict()) + "\n")
    return 0 if report.rel_residual <= args.tol else 2


def _cmd_duality(args) -> int:
    phi = _parse_phi(args.phi)
    hat_phi = atoms.pair(atoms.sigma_k_hat(args.k, args.nmax), phi)
    sig_psi = atoms.pair(atoms.sigma_k(args.k, args.nmax), phi.fourier())
    rel = rel_diff(hat_phi, sig_psi)
    obj = {"k": args.k, "N": args.nmax,
           "pair_sigma_hat_phi": hat_phi, "pair_sigma_phi_hat": sig_psi,
           "abs_diff": abs(hat_phi - sig_psi), "rel_diff": rel}
    _write(args, _to_json(obj) + "\n")
    return 0 if rel <= args.tol else 2


def _cmd_radial_ft(args) -> int:
    f = parse(args.f).value
    if not f.is_even():
        print("notice: expression is not even; replacing f by its even part",
              file=sys.stderr)
        f = f - f.odd_part().scale(0.5)
    methods = args.methods.split(",")
    rows = []
    for t in _parse_grid(args):
        for method in methods:
            if method == "closed":
                value = (radial.radial_ft_zero(f, args.k) if t == 0
                         else radial.radial_ft_closed(f, args.k, t))
            elif method == "quadrature":
                value = radial.radial_ft_quadrature(f, args.k, t, args.tol)
            elif method == "zero":
                value = radial.radial_ft_zero(f, args.k)
            else:
                raise _UsageError(f"unknown radial method {method!r}")
            rows.append((args.k, t, method, value))
    if args.format == "csv":
        _write_csv(args, ["k", "t", "method", "value_re", "value_im"],
                   [(k, _fmt_float(t), m, _fmt_float(v.real), _fmt_float(v.imag))
                    for k, t, m, v in rows])
    else:
        _write(args, _to_json([{"k": k, "t": t, "method": m, "value": v}
                               for k, t, m, v in rows]) + "\n")
    return 0


def _cmd_sphere_ft(args) -> int:
    methods = args.methods.split(",")
    for m in methods:
        if m not in radial.SPHERE_METHODS:
            raise _UsageError(f"unknown sphere method {m!r}; choose from "
                              f"{sorted(radial.SPHERE_METHODS)}")
    values = radial.grid_rows([args.k], _parse_grid(args), methods)
    if args.format == "csv":
        _write_csv(args, ["k", "t", "method", "value"],
                   [(v.k, _fmt_float(v.t), v.method, _fmt_float(v.value))
                    for v in values])
    else:
        _write(args, _to_json([{"k": v.k, "t": v.t, "method": v.method,
                                "value": v.value} for v in values]) + "\n")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="guinand",
                     description="Verify summation formulas with nodes at "
                                 "+-sqrt(n) and sum-of-squares weights.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--output", default=None, help="write to file instead of stdout")

    p = sub.add_parser("rk", help="sum-of-squares table r_k(n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    add_common(p)
    p.set_defaults(fn=_cmd_rk)

    p = sub.add_parser("coeffs", help="exact alpha and beta coefficients")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=["exact", "float", "json"], default="exact")
    add_common(p)
    p.set_defaults(fn=_cmd_coeffs)

    p = sub.add_parser("verify", help="two-sided check of the summation identity")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--phi", required=True, help="odd test function expression")
    p.add_argument("--nmax", type=int, default=formulas.DEFAULT_N)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    add_common(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("verify-shifted", help="shifted-lattice identity check")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eta", required=True, help="comma-separated rationals")
    p.add_argument("--xi", required=True, help="comma-separated rationals")
    p.add_argument("--phi", required=True)
    p.add_argument("--r-time", type=float, default=6.0, dest="r_time")
    p.add_argument("--r-freq", type=float, default=6.0, dest="r_freq")
    p.add_argument("--tol", type=float, default=1e-8)
    add_common(p)
    p.set_defaults(fn=_cmd_verify_shifted)

    p = sub.add_parser("duality", help="pair sigma_k_hat against phi vs "
                                       "sigma_k against the transform of phi")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--nmax", type=int, default=formulas.DEFAULT_N)
    p.add_argument("--tol", type=float, default=1e-9)
    add_common(p)
    p.set_defaults(fn=_cmd_duality)

    p = sub.add_parser("radial-ft", help="odd-dimension radial transform of an even f")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--f", required=True, help="even test function expression")
    p.add_argument("--t", type=float, default=None)
    p.add_argument("--t-grid", default=None, dest="t_grid", help="a:b:step")
    p.add_argument("--methods", default="closed",
                   help="comma list from closed,quadrature,zero")
    p.add_argument("--tol", type=float, default=1e-10, help="quadrature tolerance")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    add_common(p)
    p.set_defaults(fn=_cmd_radial_ft)

    p = sub.add_parser("sphere-ft", help="sphere surface-measure transform profile")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=float, default=None)
    p.add_argument("--t-grid", default=None, dest="t_grid", help="a:b:step")
    p.add_argument("--methods", default="closed,bessel,recurrence,besselpoly")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    add_common(p)
    p.set_defaults(fn=_cmd_sphere_ft)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"parse error at byte {exc.offset}: {exc.reason}", file=sys.stderr)
        return 1
    except WorkCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except QuadratureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
