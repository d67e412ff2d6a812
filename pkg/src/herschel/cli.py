"""``herschel`` command-line tool.

Exit codes: 0 success, 1 usage or parse error, 2 domain error,
3 convergence failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

import mpmath

from . import polylogarithm as pl
from . import sequences as seq
from .errors import ConvergenceError, DomainError
from .polynomial import RationalPolynomial, format_rational
from .zero_differences import TableCapError, shared_table, stirling2

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3

FORMATS = ("plain", "csv", "json")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")
_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_REAL_RE = re.compile(rf"^[+-]?{_NUM}$")
_IMAG_RE = re.compile(rf"^(?P<im>[+-]?(?:{_NUM})?)[ij]$")
_FULL_RE = re.compile(rf"^(?P<re>[+-]?{_NUM})(?P<im>[+-](?:{_NUM})?)[ij]$")


def parse_rational(text: str) -> Fraction:
    """``"p/q"`` or an integer."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def parse_complex(text: str) -> complex:
    """``"a+bi"``, ``"a-bi"``, ``"a"`` or ``"bi"`` with decimal parts."""
    compact = text.strip().replace(" ", "")
    if _REAL_RE.match(compact):
        return complex(float(compact), 0.0)
    m = _FULL_RE.match(compact) or _IMAG_RE.match(compact)
    if not m:
        raise ValueError(f"not a complex number: {text!r}")
    re_part = float(m.group("re")) if "re" in m.groupdict() else 0.0
    im_text = m.group("im")
    im_part = float(im_text + "1") if im_text in ("", "+", "-") else float(im_text)
    return complex(re_part, im_part)


def _rational_arg(text):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _complex_arg(text):
    try:
        return parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _nonneg_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


# -- formatting --------------------------------------------------------------

def format_complex(z, digits: int = 17) -> str:
    """``re±imi`` with ``digits`` significant digits; real part only if ``im == 0``."""
    z = mpmath.mpmathify(z)
    re_s = mpmath.nstr(mpmath.re(z), digits)
    im = mpmath.im(z)
    if im == 0:
        return re_s
    sign = "-" if im < 0 else "+"
    return f"{re_s}{sign}{mpmath.nstr(abs(im), digits)}i"


def _json_scalar(v):
    if isinstance(v, RationalPolynomial):
        return [format_rational(c) for c in v.coeffs] or ["0"]
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else format_rational(v)
    return v


def _text_scalar(v) -> str:
    if isinstance(v, RationalPolynomial):
        return v.format("x")
    if isinstance(v, Fraction):
        return format_rational(v)
    return str(v)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _emit(out, fmt, command, inputs, plain, csv_header, csv_rows, result, **extra):
    if fmt == "plain":
        text = plain
    elif fmt == "csv":
        text = _csv_text(csv_header, csv_rows)
    else:
        doc = {"command": command, "inputs": inputs, "result": result}
        doc.update(extra)
        text = json.dumps(doc, sort_keys=False)
    out.write(text + "\n")


# -- commands ----------------------------------------------------------------

def _scalar_family(func, name, first=0):
    def run(args, out):
        ns = range(first, args.n + 1) if args.table else [args.n]
        values = [(n, func(n)) for n in ns]
        if args.table:
            plain = "\n".join(f"{n} {_text_scalar(v)}" for n, v in values)
            result = [_json_scalar(v) for _, v in values]
        else:
            plain = _text_scalar(values[0][1])
            result = _json_scalar(values[0][1])
        _emit(out, args.format, name, {"n": args.n}, plain, ["n", "value"],
              [[n, _text_scalar(v)] for n, v in values], result)
    return run


def _genocchi(n):
    if n < 1:
        raise DomainError("Genocchi numbers start at n = 1")
    return seq.genocchi(n)


def cmd_diff_table(args, out):
    table = shared_table()
    n_max = args.n
    rows = [list(table.row(n)) + [0] * (n_max - n) for n in range(n_max + 1)]
    plain = "\n".join(" ".join(str(v) for v in table.row(n)) for n in range(n_max + 1))
    _emit(out, args.format, "diff-table", {"n_max": n_max}, plain,
          ["n"] + [f"j{j}" for j in range(n_max + 1)],
          [[n] + r for n, r in enumerate(rows)],
          [list(table.row(n)) for n in range(n_max + 1)])


def cmd_stirling2(args, out):
    n = args.n
    if args.j is not None:
        v = stirling2(n, args.j)
        _emit(out, args.format, "stirling2", {"n": n, "j": args.j}, str(v),
              ["n", "j", "value"], [[n, args.j, v]], v)
        return
    row = [stirling2(n, j) for j in range(n + 1)]
    _emit(out, args.format, "stirling2", {"n": n}, " ".join(map(str, row)),
          ["n"] + [f"j{j}" for j in range(n + 1)], [[n] + row], row)


def _poly_command(name, build, var_name, drop_constant):
    def run(args, out):
        n = args.n
        poly = build(n)
        inputs = {"n": n}
        if args.at is not None:
            inputs["at"] = format_rational(args.at)
            v = poly(args.at)
            _emit(out, args.format, name, inputs, format_rational(v), ["n", "at", "value"],
                  [[n, format_rational(args.at), format_rational(v)]], _json_scalar(v))
            return
        start = 1 if drop_constant and n >= 1 else 0
        coeffs = [poly.coeff(k) for k in range(start, n + 1)]
        _emit(out, args.format, name, inputs, poly.format(var_name),
              ["n"] + [f"c{k}" for k in range(start, n + 1)],
              [[n] + [format_rational(c) for c in coeffs]],
              [format_rational(poly.coeff(k)) for k in range(n + 1)])
    return run


def cmd_carlitz_h(args, out):
    lam = args.at
    v = seq.carlitz_h(args.n, lam)
    _emit(out, args.format, "carlitz-h", {"n": args.n, "at": format_rational(lam)},
          format_rational(v), ["n", "at", "value"],
          [[args.n, format_rational(lam), format_rational(v)]], _json_scalar(v))


def cmd_polylog(args, out, err):
    req = pl.PolylogRequest(
        s=args.s, x=args.x, rel_tol=args.rel_tol, max_terms=args.max_terms,
        radius_guard=args.radius_guard, precision_bits=args.precision_bits,
    )
    res = pl.polylog_eval(req)
    inputs = {"s": format_complex(args.s), "x": format_complex(args.x)}
    ok = res.status == pl.CONVERGED
    if ok or args.format == "json":
        value = res.value_mp if res.value_mp is not None else res.value
        text = format_complex(value) if ok or res.status == pl.TRUNCATED else "nan"
        result = ({"re": res.value.real, "im": res.value.imag}
                  if res.status != pl.OUTSIDE_GUARD else None)
        _emit(out, args.format, "polylog", inputs, text,
              ["s", "x", "value", "error_estimate", "terms_used", "status"],
              [[inputs["s"], inputs["x"], text, repr(res.abs_error_estimate),
                res.terms_used, res.status]],
              result, error_estimate=res.abs_error_estimate,
              terms_used=res.terms_used, status=res.status)
    if not ok:
        err.write(f"herschel: polylog {res.status} after {res.terms_used} terms "
                  f"(error estimate {res.abs_error_estimate!r})\n")
        return EXIT_CONVERGENCE
    return EXIT_OK


def cmd_selfcheck(args, out):
    from .selfcheck import run_all

    results = run_all()
    failed = 0
    for name, ok, detail in results:
        failed += not ok
        line = f"{'PASS' if ok else 'FAIL'} {name}"
        out.write(line + (f": {detail}" if detail and not ok else "") + "\n")
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return EXIT_OK if failed == 0 else EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="herschel",
                     description="Exact sequences and polylogarithms via Herschel's theorem.")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, help_text, with_n=True, **kw):
        p = sub.add_parser(name, parents=[common], help=help_text, **kw)
        if with_n:
            p.add_argument("n", type=_nonneg_int)
        return p

    add("diff-table", "rows 0..n of Δ^j 0^n")
    p = add("stirling2", "Stirling numbers of the second kind S(n, j)")
    p.add_argument("j", type=_nonneg_int, nargs="?")
    for name, help_text in (("bernoulli", "Bernoulli number B_n"),
                            ("genocchi", "Genocchi number G_n"),
                            ("euler-number", "Euler number E_n = 2^n E_n(1/2)")):
        p = add(name, help_text)
        p.add_argument("--table", action="store_true", help="print every index up to n")
    for name, help_text in (("euler-poly", "Euler polynomial E_n(x)"),
                            ("eulerian", "Eulerian polynomial A_n(λ)")):
        p = add(name, help_text)
        p.add_argument("--at", type=_rational_arg, help="evaluate at this rational")
    p = add("carlitz-h", "Carlitz number H_n(λ)")
    p.add_argument("--at", type=_rational_arg, required=True, help="rational λ, not 0 or 1")
    p = add("polylog", "Li_s(x) on the cut plane", with_n=False)
    p.add_argument("--s", type=_complex_arg, required=True)
    p.add_argument("--x", type=_complex_arg, required=True)
    p.add_argument("--rel-tol", type=_positive_float, default=1e-15)
    p.add_argument("--max-terms", type=_nonneg_int, default=200)
    p.add_argument("--radius-guard", type=_positive_float, default=0.99)
    p.add_argument("--precision-bits", type=_nonneg_int, default=None)
    add("selfcheck", "run the built-in oracle and identity checks", with_n=False)
    return parser


_HANDLERS = {
    "diff-table": cmd_diff_table,
    "stirling2": cmd_stirling2,
    "bernoulli": _scalar_family(seq.bernoulli, "bernoulli"),
    "genocchi": _scalar_family(_genocchi, "genocchi", first=1),
    "euler-number": _scalar_family(seq.euler_number, "euler-number"),
    "euler-poly": _poly_command("euler-poly", seq.euler_polynomial, "x", False),
    "eulerian": _poly_command("eulerian", seq.eulerian_polynomial, "x", True),
    "carlitz-h": cmd_carlitz_h,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"herschel: {exc}\n")
        return EXIT_USAGE
    try:
        if args.command == "polylog":
            return cmd_polylog(args, out, err)
        if args.command == "selfcheck":
            return cmd_selfcheck(args, out)
        return _HANDLERS[args.command](args, out) or EXIT_OK
    except (DomainError, TableCapError) as exc:
        err.write(f"herschel: {exc}\n")
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        err.write(f"herschel: {exc}\n")
        return EXIT_CONVERGENCE
    except ValueError as exc:
        err.write(f"herschel: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
