"""Command-line front end: ``nfe table | eval | solve | verify | spiral``.

Every ``cmd_*`` function returns the rendered output (and, for ``verify``,
the exit status) so it can be used without going through :func:`main`.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import analytic
from .complexvalue import parse_complex
from .errors import DomainError, IoError, NfeError, ParseError
from .golden import GoldenNumber, golden_to_float, parse_golden
from .sequence import (
    NfeCoefficients,
    NfeSequence,
    evaluate_exact,
    generate_recurrence,
    principal_exact,
    solve_coefficients,
)
from .spiral import build_spiral

FORMATS = ("text", "csv", "json")
SUITES = ("recurrence", "principal", "binet")


class _DecimalCell(float):
    """Float that renders with 12 significant digits in tables."""

    def __str__(self):
        return f"{float(self):.12g}"


def _complex_text(z: complex) -> str:
    return f"{z.real:.15g}{z.imag:+.15g}i"


def _text_table(headers, rows) -> str:
    """Space-aligned table; numeric columns are right-justified."""
    numeric = [
        all(isinstance(row[k], (int, float)) for row in rows) for k in range(len(headers))
    ]
    cells = [list(headers)] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(headers))]
    lines = []
    for r in cells:
        parts = [
            cell.rjust(widths[k]) if numeric[k] else cell.ljust(widths[k])
            for k, cell in enumerate(r)
        ]
        lines.append("  ".join(parts).rstrip())
    return "\n".join(lines) + "\n"


def _csv_table(headers, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue()


def _render(headers, rows, fmt: str, json_rows=None) -> str:
    if fmt == "text":
        return _text_table(headers, rows)
    if fmt == "csv":
        return _csv_table(headers, rows)
    if fmt == "json":
        payload = json_rows if json_rows is not None else [dict(zip(headers, r)) for r in rows]
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


# table


TABLE_HEADERS = ("n", "phi_exponent", "negafibonacci_form", "decimal")


def table_rows(n_min: int, n_max: int) -> list[tuple[int, int, str, float]]:
    if n_min > n_max:
        raise ValueError("--min must not exceed --max")
    rows = []
    for n in range(n_min, n_max + 1):
        value = principal_exact(n)
        rows.append((n, 1 - n, str(value), golden_to_float(value)))
    return rows


def cmd_table(n_min: int = -8, n_max: int = 8, fmt: str = "text") -> str:
    """Powers of phi in negaFibonacci form, one row per sequence index."""
    rows = table_rows(n_min, n_max)
    shown = [(n, e, form, _DecimalCell(x)) for n, e, form, x in rows]
    json_rows = [dict(zip(TABLE_HEADERS, r)) for r in rows]
    return _render(TABLE_HEADERS, shown, fmt, json_rows)


# eval


def _parse_coefficient(text: str):
    try:
        return parse_golden(text)
    except ParseError:
        pass
    try:
        return parse_complex(text)
    except ParseError:
        raise ParseError(f"{text!r} is neither a GoldenNumber nor a complex literal") from None


def _parse_index(text: str):
    s = text.strip()
    try:
        return int(s)
    except ValueError:
        return parse_complex(s)


def cmd_eval(eta: str, gamma: str, n: str, fmt: str = "text", numeric: bool = False) -> str:
    """Evaluate the closed form; exact for integer ``n`` and exact coefficients."""
    e, g, idx = _parse_coefficient(eta), _parse_coefficient(gamma), _parse_index(n)
    exact_coeffs = isinstance(e, GoldenNumber) and isinstance(g, GoldenNumber)
    if isinstance(idx, int) and not numeric:
        if not exact_coeffs:
            raise DomainError("exact evaluation needs GoldenNumber coefficients (use --numeric)")
        value = evaluate_exact(NfeCoefficients(eta=e, gamma=g), idx)
        row = {"path": "exact", "eta": str(e), "gamma": str(g), "n": str(idx),
               "value": str(value), "decimal": golden_to_float(value)}
        if fmt == "text":
            return f"{value}\n"
        headers = list(row)
        return _render(headers, [[row[h] for h in headers]], fmt, row)
    coeffs = NfeCoefficients.of(e, g)
    z = analytic.evaluate_complex(coeffs, complex(idx))
    row = {"path": "complex", "eta": str(eta).strip(), "gamma": str(gamma).strip(),
           "n": str(n).strip(), "re": z.real, "im": z.imag}
    if fmt == "text":
        return _complex_text(z) + "\n"
    headers = list(row)
    return _render(headers, [[row[h] for h in headers]], fmt, row)


# solve


SOLVE_HEADERS = ("k", "recurrence", "closed_form", "match")


def cmd_solve(omega1: str, omega2: str, fmt: str = "text", terms: int = 10) -> str:
    """Coefficients for the given initial values plus a recurrence cross-check."""
    w1, w2 = parse_golden(omega1), parse_golden(omega2)
    coeffs = solve_coefficients(w1, w2)
    seq = NfeSequence(w1, w2)
    rows = []
    for k, term in enumerate(generate_recurrence(seq, terms), start=1):
        closed = evaluate_exact(coeffs, k)
        rows.append((k, str(term), str(closed), "yes" if closed == term else "no"))
    if fmt == "json":
        payload = {
            "eta": str(coeffs.eta),
            "gamma": str(coeffs.gamma),
            "check": [dict(zip(SOLVE_HEADERS, (k, r, c, m == "yes"))) for k, r, c, m in rows],
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        head = _csv_table(("coefficient", "value"), [("eta", str(coeffs.eta)), ("gamma", str(coeffs.gamma))])
        return head + "\n" + _csv_table(SOLVE_HEADERS, rows)
    head = f"eta   = {coeffs.eta}\ngamma = {coeffs.gamma}\n\n"
    return head + _text_table(SOLVE_HEADERS, rows)


# verify


VERIFY_HEADERS = ("suite", "cases", "max_residual", "tol", "failures", "status")


def run_suites(
    suite: str = "all",
    domain: analytic.EvaluationDomain | None = None,
    tol: float = analytic.DEFAULT_TOL,
    pairs: int = 100,
    seed: int = 0,
    binet_range: tuple[int, int] = (-70, 70),
) -> list[analytic.VerificationReport]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    domain = domain or analytic.default_domain()
    names = SUITES if suite == "all" else (suite,)
    reports = []
    for name in names:
        if name == "recurrence":
            coeffs = analytic.random_coefficients(pairs, seed)
            reports.append(analytic.verify_recurrence(coeffs, domain, tol))
        elif name == "principal":
            reports.append(analytic.verify_principal_equivalence(domain, tol))
        else:
            reports.append(analytic.verify_binet(*binet_range, tol=tol))
    return reports


def cmd_verify(suite: str = "all", domain=None, tol: float = analytic.DEFAULT_TOL,
               fmt: str = "text", **options) -> tuple[int, str]:
    """Run verification suites; exit status is 0 iff no suite has failures."""
    if not tol > 0:
        raise ValueError("--tol must be positive")
    reports = run_suites(suite, domain, tol, **options)
    rows = [
        (r.name, r.cases, f"{r.max_residual:.3e}", f"{r.tol:.1e}", len(r.failures),
         "pass" if r.passed else "FAIL")
        for r in reports
    ]
    status = int(any(not r.passed for r in reports))
    if fmt == "json":
        payload = [
            {"suite": r.name, "cases": r.cases, "max_residual": r.max_residual, "tol": r.tol,
             "failures": len(r.failures), "status": "pass" if r.passed else "FAIL"}
            for r in reports
        ]
        return status, json.dumps(payload, indent=2) + "\n"
    out = _render(VERIFY_HEADERS, rows, fmt)
    if fmt == "text":
        for r in reports:
            for f in r.failures[:5]:
                out += f"  {r.name}: n={_complex_text(f.point)} residual={f.residual:.3e} {f.detail}\n"
            if len(r.failures) > 5:
                out += f"  {r.name}: ... {len(r.failures) - 5} more failures\n"
    return status, out


# spiral


def spiral_csv(model) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("segment_index", "t", "x", "y"))
    for idx, t, x, y in model.polyline():
        writer.writerow((int(idx), repr(float(t)), repr(float(x)), repr(float(y))))
    buf.write("\n")
    writer.writerow(("index", "exact_length", "decimal_length"))
    for seg in model.segments:
        writer.writerow((seg.index, str(seg.length_exact), repr(seg.radius)))
    return buf.getvalue()


def spiral_svg(model, width: int = 800) -> str:
    x0, y0, x1, y1 = model.bounds()
    # SVG y grows downwards
    top, bottom = -y1, -y0
    w, h = x1 - x0, bottom - top
    mx, my = 0.05 * w, 0.05 * h
    vb = (x0 - mx, top - my, w + 2 * mx, h + 2 * my)
    height = max(1, round(width * vb[3] / vb[2]))
    stroke = 0.004 * max(vb[2], vb[3])
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="{" ".join(f"{v:.12g}" for v in vb)}">',
    ]
    for seg in model.segments:
        _, xs, ys = seg.sample(model.points_per_arc)
        coords = [f"{x + 0.0:.12g} {-y + 0.0:.12g}" for x, y in zip(xs, ys)]
        d = "M " + coords[0] + "".join(" L " + c for c in coords[1:])
        lines.append(
            f'  <path id="segment-{seg.index}" d="{d}" fill="none" stroke="black" '
            f'stroke-width="{stroke:.6g}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def cmd_spiral(segments: int, points_per_arc: int = 64, fmt: str = "csv") -> str:
    model = build_spiral(segments, points_per_arc)
    if fmt == "csv":
        return spiral_csv(model)
    if fmt == "svg":
        return spiral_svg(model)
    raise ValueError("spiral output format must be csv or svg")


# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nfe", description="negaFibonacci-esque sequence toolkit")
    parser.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt_parent = argparse.ArgumentParser(add_help=False)
    fmt_parent.add_argument("--format", dest="fmt", choices=FORMATS, default=argparse.SUPPRESS)

    p = sub.add_parser("table", parents=[fmt_parent], help="powers of phi in negaFibonacci form")
    p.add_argument("--min", dest="n_min", type=int, default=-8)
    p.add_argument("--max", dest="n_max", type=int, default=8)

    p = sub.add_parser("eval", parents=[fmt_parent], help="evaluate Omega_{eta,gamma}(n)")
    p.add_argument("--eta", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--n", required=True)
    p.add_argument("--numeric", action="store_true", help="force the complex double-precision path")

    p = sub.add_parser("solve", parents=[fmt_parent], help="coefficients from initial values")
    p.add_argument("--omega1", required=True)
    p.add_argument("--omega2", required=True)
    p.add_argument("--terms", type=int, default=10)

    p = sub.add_parser("verify", parents=[fmt_parent], help="numerical verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--re-range", nargs=2, type=float, default=(-8.0, 8.0), metavar=("LO", "HI"))
    p.add_argument("--im-range", nargs=2, type=float, default=(-2.0, 2.0), metavar=("LO", "HI"))
    p.add_argument("--step", type=float, default=0.5)
    p.add_argument("--tol", type=float, default=analytic.DEFAULT_TOL)
    p.add_argument("--pairs", type=int, default=100, help="random coefficient pairs for recurrence")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--binet-range", nargs=2, type=int, default=(-70, 70), metavar=("LO", "HI"))

    p = sub.add_parser("spiral", help="golden spiral geometry as CSV or SVG")
    p.add_argument("--segments", type=int, required=True)
    p.add_argument("--points-per-arc", type=int, default=64)
    p.add_argument("--format", dest="spiral_fmt", choices=("csv", "svg"), default="csv")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    return parser


def _emit(text: str, path: str = "-") -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "table":
            _emit(cmd_table(args.n_min, args.n_max, args.fmt))
        elif args.command == "eval":
            _emit(cmd_eval(args.eta, args.gamma, args.n, args.fmt, args.numeric))
        elif args.command == "solve":
            if args.terms < 1:
                parser.error("--terms must be positive")
            _emit(cmd_solve(args.omega1, args.omega2, args.fmt, args.terms))
        elif args.command == "verify":
            if not args.tol > 0:
                parser.error("--tol must be positive")
            domain = analytic.EvaluationDomain.from_step(args.re_range, args.im_range, args.step)
            status, out = cmd_verify(
                args.suite, domain, args.tol, args.fmt,
                pairs=args.pairs, seed=args.seed, binet_range=tuple(args.binet_range),
            )
            _emit(out)
            return status
        elif args.command == "spiral":
            if args.segments < 1:
                parser.error("--segments must be at least 1")
            _emit(cmd_spiral(args.segments, args.points_per_arc, args.spiral_fmt), args.out)
    except (NfeError, ValueError, ZeroDivisionError, OverflowError) as exc:
        print(f"nfe: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
