"""Command-line front end.

Subcommands: schur (evaluate one Schur polynomial, optionally through every
algorithm), verify (run identity suites over a parameter grid, JSON-lines
out), count (watermelon numbers and generating functions), render (ASCII or
SVG pictures of watermelons and boxed plane partitions).

Exit codes: 0 success, 1 an identity or cross-check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from .identities import GOLDEN_POINTS, report_json_line, run_cases
from .laurent import LaurentPoly
from .partitions import enumerate_in_box, parse_partition, strip
from .paths import (
    Watermelon,
    b_phase_points,
    c_phase_points,
    closed_genfunc,
    count_deviation,
    watermelon_from_dict,
)
from .planepartitions import pp_from_dict, zq
from .schur import (
    bialternant,
    gv_determinant,
    h_determinant,
    principal_product,
    tableau_sum,
)

_SUITES = ("all", "binet", "qbinet", "devbinet", "kuperberg", "qbinom",
           "melon", "gv", "zq")

_SCHUR_ALGS = ("bialternant", "tableaux", "product", "hdet", "gvdet")


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


# ---------------------------------------------------------------- schur

def _schur_values(lam, m: int) -> dict[str, LaurentPoly]:
    exps = tuple(range(m))
    return {
        "bialternant": bialternant(lam, exps),
        "tableaux": tableau_sum(lam, exps),
        "product": principal_product(lam, m),
        "hdet": h_determinant(lam, m),
        "gvdet": gv_determinant(lam, m),
    }


def cmd_schur(args) -> int:
    try:
        lam = parse_partition(args.shape)
    except ValueError as exc:
        return _fail_usage(str(exc))
    lam = strip(lam)
    m = args.vars if args.vars is not None else max(1, len(lam))
    if m < len(lam):
        return _fail_usage(f"shape has {len(lam)} parts but only {m} variables")
    try:
        if args.alg == "all":
            values = _schur_values(lam, m)
        else:
            values = {args.alg: _schur_values(lam, m)[args.alg]}
    except ValueError as exc:
        return _fail_usage(str(exc))
    agree = len({tuple(map(tuple, p.to_pairs())) for p in values.values()}) == 1
    if args.format == "json":
        payload = {
            "shape": list(lam),
            "vars": m,
            "values": {name: p.to_pairs() for name, p in values.items()},
            "agree": agree,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        if len(values) == 1:
            print(str(next(iter(values.values()))))
        else:
            for name in _SCHUR_ALGS:
                print(f"{name}: {values[name]}")
            print(f"verdict: {'OK' if agree else 'DISAGREE'}")
    return 0 if agree else 1


# ---------------------------------------------------------------- verify

def build_cases(suite: str, max_n: int | None, max_m: int | None,
                max_k: int | None, shapes_box: tuple[int, int] | None) -> list:
    """Grid of verification cases, ordered by suite then parameter tuple.

    Per-suite default bounds match the documented desk-scale grid, so the
    full run with no overrides is the reference check.
    """

    def top(value, default):
        return default if value is None else value

    cases = []
    if suite in ("all", "binet"):
        for n in range(1, top(max_n, 3) + 1):
            for a, b in GOLDEN_POINTS.get(n, ()):
                for m in range(1, top(max_m, 3) + 1):
                    cases.append(("binet-cauchy", {"n": n, "m": m, "a": a, "b": b}))
    if suite in ("all", "qbinet"):
        for n in range(1, top(max_n, 4) + 1):
            for m in range(1, top(max_m, 4) + 1):
                cases.append(("q-binet-cauchy", {"n": n, "m": m}))
    if suite in ("all", "devbinet"):
        for n in range(1, top(max_n, 3) + 1):
            for k in range(0, min(n, top(max_k, n)) + 1):
                for a, b in GOLDEN_POINTS.get(n, ()):
                    for m in range(1, top(max_m, 3) + 1):
                        cases.append(("deviation-binet-cauchy",
                                      {"n": n, "m": m, "k": k, "a": a[:n - k], "b": b}))
    if suite in ("all", "kuperberg"):
        for n in range(1, top(max_n, 4) + 1):
            for m in range(1, top(max_m, 4) + 1):
                cases.append(("kuperberg", {"n": n, "m": m}))
    if suite in ("all", "qbinom"):
        for n in range(1, top(max_n, 3) + 1):
            for m in range(1, top(max_m, 4) + 1):
                cases.append(("q-binomial-det", {"n": n, "m": m}))
    if suite in ("all", "melon"):
        for n in range(1, top(max_n, 3) + 1):
            for m in range(1, top(max_m, 3) + 1):
                for k in range(0, min(n, top(max_k, n)) + 1):
                    cases.append(("watermelon-suite", {"n": n, "m": m, "k": k}))
    if suite in ("all", "gv"):
        rows, cols = shapes_box if shapes_box is not None else (3, 3)
        for lam in enumerate_in_box(rows, cols):
            cases.append(("gessel-viennot", {"lam": lam, "n": rows}))
    if suite in ("all", "zq"):
        for n in range(1, top(max_n, 3) + 1):
            for l in range(1, n + 1):
                for m in range(1, top(max_m, 3) + 1):
                    cases.append(("zq-equals-w", {"n": n, "l": l, "m": m}))
    return cases


def _parse_box(text: str) -> tuple[int, int]:
    pieces = text.split(",")
    if len(pieces) != 2:
        raise ValueError(f"expected ROWS,COLS, got {text!r}")
    rows, cols = (int(p) for p in pieces)
    if rows < 0 or cols < 0:
        raise ValueError("box bounds must be nonnegative")
    return rows, cols


def cmd_verify(args) -> int:
    try:
        shapes_box = _parse_box(args.shapes_in_box) if args.shapes_in_box else None
    except ValueError as exc:
        return _fail_usage(str(exc))
    workers = args.workers
    if workers is None:
        env = os.environ.get("QMELON_WORKERS", "").strip()
        if env:
            try:
                workers = int(env)
            except ValueError:
                return _fail_usage(f"QMELON_WORKERS must be an integer, got {env!r}")
    if workers is not None and workers < 1:
        return _fail_usage("worker count must be >= 1")
    cases = build_cases(args.suite, args.max_n, args.max_m, args.max_k, shapes_box)
    reports = run_cases(cases, workers)
    lines = [report_json_line(r) for r in reports]
    passed = sum(1 for r in reports if r.equal)
    summary = f"# passed {passed}/{len(reports)}"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for line in lines:
                fh.write(line + "\n")
        print(summary)
    else:
        for line in lines:
            print(line)
        print(summary)
    return 0 if passed == len(reports) else 1


# ---------------------------------------------------------------- count

def cmd_count(args) -> int:
    n, l, m = args.n, args.l, args.m
    if min(n, l, m) < 0:
        return _fail_usage("box dimensions must be nonnegative")
    try:
        if args.what == "number":
            value = count_deviation(n, l, m)
        elif args.what == "genfunc":
            value = closed_genfunc(n, l, m)
        else:
            value = zq(n, l, m)
    except (ValueError, ArithmeticError) as exc:
        return _fail_usage(str(exc))
    if args.format == "json":
        wire = value if isinstance(value, int) else value.to_pairs()
        print(json.dumps(
            {"n": n, "l": l, "m": m, "what": args.what, "value": wire},
            sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "l", "m", "what", "value"])
        writer.writerow([n, l, m, args.what, str(value)])
        sys.stdout.write(buf.getvalue())
    else:
        print(str(value))
    return 0


# ---------------------------------------------------------------- render

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd",
            "#ff7f0e", "#17becf", "#8c564b", "#e377c2")


def _melon_point_lists(w: Watermelon) -> list[list[tuple[int, int]]]:
    """Glued path vertices in picture coordinates, interface at column 0.

    The contraction phase is drawn to the left (line j at column 1 - j),
    the expansion phase to the right (line j at column j - 1).
    """
    out = []
    for c_pts, b_pts in zip(c_phase_points(w), b_phase_points(w)):
        seq = [(1 - line, h) for line, h in c_pts]
        seq += [(line - 1, h) for line, h in b_pts[1:]]
        out.append(seq)
    return out


def _ascii_watermelon(w: Watermelon) -> str:
    header = f"watermelon N={w.n} M={w.m} k={w.k} volume={w.volume}"
    pts = _melon_point_lists(w)
    if not pts:
        return header + "\n"
    xmin = min(x for seq in pts for x, _ in seq)
    xmax = max(x for seq in pts for x, _ in seq)
    ymax = max(y for seq in pts for _, y in seq)
    grid = [[" "] * ((xmax - xmin) * 2 + 1) for _ in range(ymax * 2 + 1)]
    for i, seq in enumerate(pts, start=1):
        for (x0, y0), (x1, y1) in zip(seq, seq[1:]):
            if y0 == y1:
                grid[(ymax - y0) * 2][(min(x0, x1) - xmin) * 2 + 1] = "-"
            else:
                grid[(ymax - min(y0, y1)) * 2 - 1][(x0 - xmin) * 2] = "|"
        for x, y in seq:
            grid[(ymax - y) * 2][(x - xmin) * 2] = str(i % 10)
    body = "\n".join("".join(row).rstrip() for row in grid)
    return header + "\n" + body + "\n"


def _svg_watermelon(w: Watermelon) -> str:
    pts = _melon_point_lists(w)
    scale, pad = 24, 12
    xmin = min((x for seq in pts for x, _ in seq), default=0)
    xmax = max((x for seq in pts for x, _ in seq), default=0)
    ymax = max((y for seq in pts for _, y in seq), default=0)
    width = (xmax - xmin) * scale + 2 * pad
    height = ymax * scale + 2 * pad

    def at(x: int, y: int) -> tuple[int, int]:
        return (x - xmin) * scale + pad, (ymax - y) * scale + pad

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}">',
        f'<title>watermelon N={w.n} M={w.m} k={w.k} volume={w.volume}</title>',
    ]
    for i, seq in enumerate(pts, start=1):
        color = _PALETTE[(i - 1) % len(_PALETTE)]
        coords = " ".join(f"{u},{v}" for u, v in (at(x, y) for x, y in seq))
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="3" stroke-linejoin="round" stroke-linecap="round"/>')
    for i, seq in enumerate(pts, start=1):
        color = _PALETTE[(i - 1) % len(_PALETTE)]
        for x, y in seq:
            u, v = at(x, y)
            parts.append(f'<circle cx="{u}" cy="{v}" r="4" fill="{color}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _ascii_pp(full, n: int, l: int, m: int) -> str:
    header = f"plane partition N={n} L={l} M={m} volume={sum(map(sum, full))}"
    if n == 0 or l == 0:
        return header + "\n(empty)\n"
    width = len(str(m)) if m > 0 else 1
    rows = [" ".join(str(v).rjust(width) for v in row) for row in full]
    return header + "\n" + "\n".join(rows) + "\n"


def _svg_pp(full, n: int, l: int, m: int) -> str:
    # 2:1 dimetric cube projection; all vertex coordinates are integers,
    # so output bytes are reproducible.  Painter order: ascending i+j+k
    # is front-correct for this projection (kernel has all-positive parts).
    w_u, w_v, w_z = 24, 12, 20

    def proj(a: int, b: int, c: int) -> tuple[int, int]:
        return (b - a) * w_u + l * w_u, (a + b) * w_v - c * w_z + m * w_z

    def face(corners, fill: str) -> str:
        coords = " ".join(f"{u},{v}" for u, v in (proj(*p) for p in corners))
        return (f'<polygon points="{coords}" fill="{fill}" '
                f'stroke="#4a3b28" stroke-width="1"/>')

    width = max((n + l) * w_u, 1)
    height = max((n + l) * w_v + m * w_z, 1)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}">',
        f'<title>plane partition N={n} L={l} M={m} '
        f'volume={sum(map(sum, full))}</title>',
    ]
    for i in range(1, l + 1):
        for j in range(1, n + 1):
            parts.append(face(
                [(i - 1, j - 1, 0), (i, j - 1, 0), (i, j, 0), (i - 1, j, 0)],
                "#f2efe6"))
    cubes = [(i + j + k, i, j, k)
             for i in range(1, l + 1)
             for j in range(1, n + 1)
             for k in range(1, full[i - 1][j - 1] + 1)]
    for _, i, j, k in sorted(cubes):
        parts.append(face(
            [(i - 1, j - 1, k), (i, j - 1, k), (i, j, k), (i - 1, j, k)],
            "#e8d28a"))
        parts.append(face(
            [(i, j - 1, k), (i, j, k), (i, j, k - 1), (i, j - 1, k - 1)],
            "#9c7a4f"))
        parts.append(face(
            [(i - 1, j, k), (i, j, k), (i, j, k - 1), (i - 1, j, k - 1)],
            "#c2a066"))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_render(args) -> int:
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        return _fail_usage(str(exc))
    try:
        data = json.loads(text)
        if not isinstance(data, dict):
            raise ValueError("top-level JSON value must be an object")
        if "parts" in data:
            full, n, l, m = pp_from_dict(data)
            out = _ascii_pp(full, n, l, m) if args.style == "ascii" \
                else _svg_pp(full, n, l, m)
        elif "c_steps" in data:
            w = watermelon_from_dict(data)
            out = _ascii_watermelon(w) if args.style == "ascii" \
                else _svg_watermelon(w)
        else:
            raise ValueError("object is neither a plane partition nor a watermelon")
    except (ValueError, KeyError, TypeError) as exc:
        return _fail_usage(str(exc))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


# ---------------------------------------------------------------- wiring

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmelon",
        description="Exact watermelon path counting, boxed plane partitions, "
                    "and the determinant identities tying them together.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schur", help="evaluate a principally specialized Schur polynomial")
    p.add_argument("--shape", required=True, help="partition, e.g. [2,1] or []")
    p.add_argument("--vars", type=int, default=None, help="number of variables")
    p.add_argument("--alg", choices=_SCHUR_ALGS + ("all",), default="bialternant")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("verify", help="run identity suites, one JSON report per line")
    p.add_argument("--suite", choices=_SUITES, default="all")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-m", type=int, default=None)
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--shapes-in-box", default=None, metavar="ROWS,COLS",
                   help="shape box for the gv suite (default 3,3)")
    p.add_argument("--workers", type=int, default=None,
                   help="process count (default: QMELON_WORKERS or 1)")
    p.add_argument("--out", default=None, help="write the JSON lines to a file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="watermelon numbers and generating functions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--what", choices=("number", "genfunc", "zq"), default="number")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("render", help="draw a watermelon or plane partition from JSON")
    p.add_argument("--input", required=True, help="JSON file path, or - for stdin")
    p.add_argument("--style", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--out", default=None, help="write the figure to a file")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
