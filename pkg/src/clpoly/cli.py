"""Command-line front end: ``clpoly <command> [options]``.

Exit codes: 0 success, 2 bad input, 3 domain error, 4 internal invariant
violation.  Every command prints plain text by default, a JSON report with
``--json`` and, where the result is a table, CSV with ``--csv``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction
from typing import Any, Callable, Optional, Sequence

from . import __version__
from .cl import cl_detect, cl_from_cs, cl_roots
from .cone import appendix_compare, describe_cone, vertex_identity_check
from .errors import DomainError, InvariantViolation
from .families import bounds_row, degree10_family, omega_witness, prop36_order_check
from .hstar import HStarVector, diamond_check, hibi_check, hstar_from_poly, poly_from_hstar
from .interlace import interlace_suite
from .poly import ParseError, Poly, parse_rational, parse_rational_list

DIGITS_ENV = "CLPOLY_DIGITS"
DEFAULT_DIGITS = 6


class Table:
    """Tabular result: rendered as CSV under ``--csv``."""

    def __init__(self, header: Sequence[str], rows: Sequence[Sequence[Any]]):
        self.header = list(header)
        self.rows = [list(r) for r in rows]


def q(x: Fraction) -> str:
    """Exact rational as a string."""
    return str(x)


def _default_digits() -> int:
    raw = os.environ.get(DIGITS_ENV)
    if raw is None:
        return DEFAULT_DIGITS
    try:
        value = int(raw)
    except ValueError:
        raise ParseError(f"{DIGITS_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ParseError(f"{DIGITS_ENV} must be non-negative")
    return value


def parse_degrees(text: str) -> list[int]:
    """``"2..10,20,30"`` style degree lists."""
    out: list[int] = []
    pos = 0
    for piece in text.split(","):
        s = piece.strip()
        try:
            if ".." in s:
                a, b = s.split("..")
                lo, hi = int(a), int(b)
                if hi < lo:
                    raise ValueError
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(s))
        except ValueError:
            raise ParseError(f"bad degree entry {s!r}", pos) from None
        pos += len(piece) + 1
    return out


# -- commands -------------------------------------------------------------------

def _input_poly(args) -> tuple[Poly, dict]:
    given = [n for n in ("coeffs", "cs", "hstar") if getattr(args, n) is not None]
    if len(given) != 1:
        raise ParseError("give exactly one of --coeffs, --cs, --hstar")
    if args.coeffs is not None:
        p = Poly(parse_rational_list(args.coeffs))
        if p.is_zero():
            raise ParseError("zero polynomial")
        return p, {"coeffs": [q(c) for c in p.coeffs]}
    if args.hstar is not None:
        h = parse_rational_list(args.hstar)
        return poly_from_hstar(HStarVector.of(h)), {"hstar": [q(c) for c in h]}
    cs = parse_rational_list(args.cs) if args.cs.strip() else []
    parity = "odd" if args.odd else "even"
    scale = parse_rational(args.scale)
    _, p = cl_from_cs(scale, parity, cs)
    return p, {"cs": [q(c) for c in cs], "parity": parity, "scale": q(scale)}


def cmd_analyze(args, digits: int):
    p, inputs = _input_poly(args)
    form = cl_detect(p)
    dia = diamond_check(p)
    res: dict[str, Any] = {
        "polynomial": p.to_string("z"),
        "degree": p.degree,
        "coefficients": [q(c) for c in p.coeffs],
        "is_cl": bool(form),
        "hstar": [q(h) for h in dia.hstar.h],
        "palindromic": dia.palindromic,
        "nonnegative": dia.nonnegative,
        "diamond": dia.diamond,
        "hibi": hibi_check(dia.hstar),
    }
    if form:
        rep = cl_roots(form)
        res["cl"] = {
            "scale": q(form.scale),
            "parity": form.parity,
            "c_poly": [q(c) for c in form.c_poly.coeffs],
        }
        res["roots"] = [
            {"real": "-0.5", "imag": text, "multiplicity": r.multiplicity}
            for text, r in zip(rep.decimals(digits), rep.roots)
        ]
        res["max_imag"] = res["roots"][-1]["imag"] if res["roots"] else None
    else:
        res["cl"] = {"reason": form.reason}
    return inputs, res


def cmd_hstar(args, digits: int):
    if args.inverse is not None:
        h = parse_rational_list(args.inverse)
        p = poly_from_hstar(HStarVector.of(h))
        return {"hstar": [q(x) for x in h]}, {
            "polynomial": p.to_string("z"),
            "coefficients": [q(c) for c in p.coeffs],
        }
    if args.coeffs is None:
        raise ParseError("give --coeffs or --inverse")
    p = Poly(parse_rational_list(args.coeffs))
    if p.is_zero():
        raise ParseError("zero polynomial")
    hv = hstar_from_poly(p, args.degree)
    dia = diamond_check(p) if args.degree is None else None
    res: dict[str, Any] = {"hstar": [q(x) for x in hv.h]}
    if dia is not None:
        res.update(palindromic=dia.palindromic, nonnegative=dia.nonnegative, diamond=dia.diamond)
    return {"coeffs": [q(c) for c in p.coeffs], "degree": args.degree}, res


def cmd_bounds(args, digits: int):
    ds = parse_degrees(args.degrees)
    if any(d < 1 for d in ds):
        raise DomainError("degrees must be at least 1")
    rows = [bounds_row(d) for d in ds]
    rendered = [r.render(digits) for r in rows]
    header = ["d", "alpha_tilde", "beta_sr", "d2_over_pi", "d_times_d_minus_half"]
    table = Table(header, [[r[k] for k in header] for r in rendered])
    return {"degrees": ds}, {"rows": rendered, "_table": table}


def _ineq_json(ineq) -> dict:
    return {"normal": list(ineq.normal), "offset": ineq.offset}


def cmd_cone(args, digits: int):
    d = args.degree
    if d < 2:
        raise DomainError("cone descriptions need degree at least 2")
    comparison = appendix_compare(d) if args.check_appendix else None
    desc = describe_cone(d)
    ident = vertex_identity_check(d)
    res: dict[str, Any] = {
        "inequalities": [_ineq_json(x) for x in desc.inequalities],
        "vertices": [[q(x) for x in v.v] for v in desc.vertices],
        "is_lattice": desc.is_lattice,
        "vertex_to_basis": [i for _, i in ident.matches],
        "bijection": ident.bijection,
    }
    if comparison is not None:
        res["reference"] = {
            "match": comparison.match,
            "inequalities_match": comparison.inequalities_match,
            "vertices_match": comparison.vertices_match,
        }
    rows = [
        ["inequality", k, " ".join(map(str, x.normal)), x.offset] for k, x in enumerate(desc.inequalities)
    ] + [["vertex", k, " ".join(q(c) for c in v.v), ""] for k, v in enumerate(desc.vertices)]
    res["_table"] = Table(["kind", "index", "vector", "offset"], rows)
    return {"degree": d, "check_appendix": bool(args.check_appendix)}, res


def cmd_interlace(args, digits: int):
    rows = interlace_suite(args.dmax)
    header = ["d", "consecutive", "shifted_sum", "shifted_sum_is_cl"]
    return {"dmax": args.dmax}, {
        "rows": rows,
        "all_pass": all(r["consecutive"] and r["shifted_sum"] for r in rows),
        "_table": Table(header, [[r[k] for k in header] for r in rows]),
    }


def cmd_omega(args, digits: int):
    t0 = parse_rational(args.target)
    w = omega_witness(args.degree, t0)
    return {"degree": args.degree, "target": q(t0)}, {
        "c": q(w.c),
        "polynomial": w.poly.to_string("z"),
        "coefficients": [q(c) for c in w.poly.coeffs],
        "is_cl": w.is_cl,
        "diamond": w.diamond,
        "vanishes_at_target": w.vanishes,
    }


def cmd_families(args, digits: int):
    if args.prop36:
        if args.degree is None:
            raise ParseError("--prop36 needs --degree")
        if not 2 <= args.degree <= 10:
            raise DomainError("order checks cover 2 <= d <= 10")
        rep = prop36_order_check(args.degree)
        vals = rep.decimals(digits)
        return {"prop36": True, "degree": args.degree}, {
            "chain": [{"label": lab, "value": v} for lab, v in zip(rep.labels, vals)],
            "holds": rep.holds,
            "skipped": list(rep.skipped),
            "_table": Table(["label", "value"], list(zip(rep.labels, vals))),
        }
    ms = parse_degrees(args.m) if args.m else list(range(2, 15))
    rows = []
    for m in ms:
        r = degree10_family(m)
        rows.append({
            "m": m,
            "is_cl": r.is_cl,
            "diamond": r.diamond,
            "max_imag": None if r.max_imag is None else r.max_imag.decimal(digits),
            "exceeds_sr": r.exceeds_sr,
        })
    header = ["m", "is_cl", "diamond", "max_imag", "exceeds_sr"]
    return {"degree10": True, "m": ms}, {
        "rows": rows,
        "_table": Table(header, [[r[k] for k in header] for r in rows]),
    }


COMMANDS: dict[str, Callable] = {
    "analyze": cmd_analyze,
    "hstar": cmd_hstar,
    "bounds": cmd_bounds,
    "cone": cmd_cone,
    "interlace": cmd_interlace,
    "omega": cmd_omega,
    "families": cmd_families,
}


# -- plumbing ---------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report")
    fmt.add_argument("--csv", action="store_true", help="CSV table (tabular commands)")
    common.add_argument("--deterministic", action="store_true", help="omit timing")
    common.add_argument("--digits", type=int, default=None, help=f"decimal places (default ${DIGITS_ENV} or {DEFAULT_DIGITS})")

    parser = _Parser(prog="clpoly", description="Exact analysis of CL-polynomials.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="full report for one polynomial")
    p.add_argument("--coeffs", help="ascending coefficients, e.g. 1,1,1 for z^2+z+1")
    p.add_argument("--cs", help="c-values of the factored form")
    par = p.add_mutually_exclusive_group()
    par.add_argument("--even", action="store_true")
    par.add_argument("--odd", action="store_true")
    p.add_argument("--scale", default="1")
    p.add_argument("--hstar", help="h*-vector; the polynomial is reconstructed")

    p = sub.add_parser("hstar", parents=[common], help="h*-vector of a polynomial, or its inverse")
    p.add_argument("--coeffs")
    p.add_argument("--degree", type=int, default=None, help="ambient degree (default: polynomial degree)")
    p.add_argument("--inverse", help="h*-vector to turn back into a polynomial")

    p = sub.add_parser("bounds", parents=[common], help="extremal imaginary parts by degree")
    p.add_argument("--degrees", required=True, help="e.g. 2..10,20,30")

    p = sub.add_parser("cone", parents=[common], help="(♦) region in Vieta coordinates")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--check-appendix", action="store_true", help="compare with bundled reference data")

    p = sub.add_parser("interlace", parents=[common], help="interlacing of p_0^d and its neighbours")
    p.add_argument("--dmax", type=int, required=True)

    p = sub.add_parser("omega", parents=[common], help="witness polynomial with a root at -1/2 + t i")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--target", required=True, help="rational t, e.g. 2 or 7/3")

    p = sub.add_parser("families", parents=[common], help="order checks and the degree-10 family")
    p.add_argument("--prop36", action="store_true", help="extremal-root order chain at --degree")
    p.add_argument("--degree", type=int)
    p.add_argument("--m", help="parameters of the degree-10 family, e.g. 2..14")
    return parser


def _public(results: dict) -> dict:
    return {k: v for k, v in results.items() if not k.startswith("_")}


def render_text(command: str, inputs: dict, results: dict) -> str:
    lines = [f"command: {command}"]
    for k, v in inputs.items():
        lines.append(f"input {k}: {_plain(v)}")
    table = results.get("_table")
    for k, v in _public(results).items():
        if k == "rows" and table is not None:
            continue
        lines.append(f"{k}: {_plain(v)}")
    if table is not None:
        lines.append(_csv(table).rstrip("\n").replace(",", "  "))
    return "\n".join(lines) + "\n"


def _plain(v) -> str:
    if isinstance(v, list):
        return "(" + ", ".join(_plain(x) for x in v) + ")"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}={_plain(x)}" for k, x in v.items()) + "}"
    if v is None:
        return "-"
    return str(v)


def _csv(table: Table) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(table.header)
    for row in table.rows:
        w.writerow(["" if x is None else x for x in row])
    return buf.getvalue()


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    command = next((a for a in argv if a in COMMANDS), None)
    try:
        args = build_parser().parse_args(argv)
        digits = args.digits if args.digits is not None else _default_digits()
        if digits < 0:
            raise ParseError("--digits must be non-negative")
        start = time.perf_counter()
        inputs, results = COMMANDS[args.command](args, digits)
        elapsed = time.perf_counter() - start
    except ParseError as exc:
        return _fail(command, want_json, "ParseError", str(exc), 2)
    except (DomainError, ValueError) as exc:
        return _fail(command, want_json, type(exc).__name__, str(exc), 3)
    except InvariantViolation as exc:
        return _fail(command, want_json, type(exc).__name__, str(exc), 4)

    if args.json:
        report = {
            "command": args.command,
            "inputs": inputs,
            "results": _public(results),
            "precision": digits,
            "version": __version__,
        }
        if not args.deterministic:
            report["timing"] = round(elapsed, 6)
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    elif args.csv:
        table = results.get("_table")
        if table is None:
            return _fail(args.command, False, "ParseError", f"{args.command} has no tabular output", 2)
        sys.stdout.write(_csv(table))
    else:
        sys.stdout.write(render_text(args.command, inputs, results))
    return 0


def _fail(command, want_json: bool, kind: str, message: str, code: int) -> int:
    if want_json:
        payload = {"command": command, "error": {"type": kind, "message": message, "exit_code": code}, "version": __version__}
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    print(f"clpoly: {kind}: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
