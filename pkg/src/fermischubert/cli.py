"""Command line front end: ``integrate``, ``table``, ``verify``, ``bench``.

Exit codes: 0 ok, 1 usage, 2 precondition violation, 3 verification failure.
Log verbosity comes from the ``FERMISCHUBERT_LOG`` environment variable
(``error``, ``info`` or ``debug``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import closed_forms as cf
from . import oracle, schubert
from .grassmann import DomainError, context_new
from .verify import run_verify

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 1, 2, 3
METHODS = ("berezin", "closed", "oracle")

log = logging.getLogger("fermischubert")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# --- partition syntax ----------------------------------------------------

def parse_classes(text: str) -> list[tuple[int, ...]]:
    """``"2,1;1,1"`` -> ``[(2, 1), (1, 1)]``; ``"0"`` is the unit class."""
    text = text.strip()
    if not text:
        return []
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        try:
            parts = [int(p) for p in chunk.split(",")] if chunk else []
        except ValueError:
            raise UsageError(f"cannot parse partition {chunk!r}") from None
        if any(p < 0 for p in parts) or any(x < y for x, y in zip(parts, parts[1:])):
            raise UsageError(f"{chunk!r} is not a weakly decreasing list of nonnegative parts")
        out.append(tuple(p for p in parts if p))
    return out


def render_classes(classes: Sequence[Sequence[int]]) -> str:
    return ";".join(",".join(str(p) for p in a if p) or "0" for a in classes)


def parse_range(text: str) -> list[int]:
    """``"4..8"``, ``"3"`` or ``"2,5,7"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"cannot parse range {text!r}") from None


def parse_sizes(text: str) -> list[tuple[int, int]]:
    out = []
    for chunk in text.split(";"):
        try:
            k, N = (int(t) for t in chunk.split(","))
        except ValueError:
            raise UsageError(f"cannot parse size {chunk!r}; expected k,N") from None
        out.append((k, N))
    return out


# --- rendering -------------------------------------------------------------

def _num(v) -> str | None:
    if v is None:
        return None
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else str(v)
    return str(v)


def render_rows(header: Sequence[str], rows: Sequence[Sequence], fmt: str) -> str:
    cells = [[("" if c is None else _num(c) if not isinstance(c, bool) else str(c).lower()) for c in row]
             for row in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(cells)
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([dict(zip(header, row)) for row in cells], indent=2) + "\n"
    widths = [max([len(h)] + [len(r[i]) for r in cells]) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


# --- integrate ---------------------------------------------------------------

@dataclass
class JobSpec:
    k: int
    N: int
    classes: list[tuple[int, ...]]
    method: str = "all"
    format: str = "text"
    output_path: str | None = None


def _closed_value(spec: JobSpec):
    ones = sum(1 for a in spec.classes if a == (1,))
    pairs = sum(1 for a in spec.classes if a == (1, 1))
    others = len(spec.classes) - ones - pairs
    if others:
        return None
    return cf.closed_form_for(spec.k, spec.N, ones, pairs)


def compute_job(spec: JobSpec) -> dict:
    ctx = context_new(spec.k, spec.N)
    wanted = METHODS if spec.method == "all" else (spec.method,)
    results: dict[str, object] = {}
    if "berezin" in wanted:
        results["berezin"] = schubert.integrate_product(ctx, spec.classes)
    if "closed" in wanted:
        value = _closed_value(spec)
        if value is None and spec.method == "closed":
            raise DomainError(
                "no closed form applies: classes must be sigma_1 and sigma_{1,1} with total weight kN-k^2"
            )
        results["closed"] = value
    if "oracle" in wanted:
        results["oracle"] = oracle.oracle_intersection(spec.k, spec.N, spec.classes)
    values = [Fraction(v) for v in results.values() if v is not None]
    return {
        "k": spec.k,
        "N": spec.N,
        "classes": [list(a) for a in spec.classes],
        "results": {m: _num(v) for m, v in results.items()},
        "agree": len(set(values)) <= 1,
    }


def cmd_integrate(spec: JobSpec) -> str:
    job = compute_job(spec)
    value = next((v for v in job["results"].values() if v is not None), None)
    if spec.format == "json":
        return json.dumps(job, indent=2) + "\n"
    if spec.format == "csv":
        row = [spec.k, spec.N, render_classes(spec.classes)]
        row += [job["results"].get(m) for m in METHODS] + [job["agree"]]
        return render_rows(["k", "N", "classes", *METHODS, "agree"], [row], "csv")
    lines = [f"G({spec.k},{spec.N})  classes={render_classes(spec.classes) or '(none)'}"]
    for m, v in job["results"].items():
        lines.append(f"  {m:8s} {v if v is not None else 'n/a'}")
    lines.append(f"value: {value}")
    lines.append(f"agree: {str(job['agree']).lower()}")
    return "\n".join(lines) + "\n"


# --- table -------------------------------------------------------------------

THEOREM1 = {1: (0, cf.theo1_sigma1_power), 2: (1, cf.theo1_one_sigma2), 3: (2, cf.theo1_two_sigma2)}


def _berezin_if_small(k: int, N: int, classes, max_dim: int):
    ctx = context_new(k, N)
    if ctx.dim_top > max_dim:
        return None
    return schubert.integrate_product(ctx, classes)


def _agree(*vals) -> bool:
    present = [Fraction(v) for v in vals if v is not None]
    return len(set(present)) <= 1


def cmd_table(kind: str, ks: Sequence[int], Ns: Sequence[int], ls: Sequence[int], formula: int,
              fmt: str, max_dim: int) -> str:
    rows = []
    if kind == "theorem1":
        pairs, fn = THEOREM1[formula]
        header = ["k", "N", "formula", "berezin", "oracle", "agree"]
        for k in ks:
            for N in Ns:
                if not 1 <= k < N or k * (N - k) - 2 * pairs < 0 or (pairs and k < 2):
                    continue
                classes = [(1,)] * (k * (N - k) - 2 * pairs) + [(1, 1)] * pairs
                f = fn(k, N)
                b = _berezin_if_small(k, N, classes, max_dim)
                o = oracle.oracle_intersection(k, N, classes)
                rows.append([k, N, f, b, o, _agree(f, b, o)])
    elif kind == "g2n":
        header = ["N", "l", "formula", "berezin", "oracle", "agree"]
        for N in Ns:
            for l in ls:
                if N < 3 or not 0 <= l <= N - 2:
                    continue
                classes = [(1,)] * (2 * N - 4 - 2 * l) + [(1, 1)] * l
                f = cf.g2n_family(N, l)
                b = _berezin_if_small(2, N, classes, max_dim)
                o = oracle.oracle_intersection(2, N, classes)
                rows.append([N, l, f, b, o, _agree(f, b, o)])
    elif kind == "qdecomp":
        header = ["k", "N", "Q1", "Q2", "Q3", "sum", "P2", "agree"]
        for k in ks:
            for N in Ns:
                if not 1 <= k < N or k * (N - k) < 4:
                    continue
                q = cf.q_decomposition(k, N)
                p2 = cf.prop1_p2(k, N)
                ctx = context_new(k, N)
                ok = sum(q) == p2
                if ctx.dim_top <= max_dim:
                    ok = ok and schubert.q_restricted(ctx) == q and schubert.berezin_p(ctx, 2) == p2
                rows.append([k, N, *q, sum(q), p2, ok])
    else:
        raise UsageError(f"unknown table kind {kind!r}")
    return render_rows(header, rows, fmt)


# --- bench -------------------------------------------------------------------

def cmd_bench(sizes: Sequence[tuple[int, int]], ceiling: int) -> str:
    for k, N in sizes:
        context_new(k, N)
        if k * (N - k) > ceiling:
            raise DomainError(f"G({k},{N}) has k(N-k) = {k * (N - k)} above the bench ceiling {ceiling}")
    rows = []
    for k, N in sizes:
        ctx = context_new(k, N)
        schubert.clear_caches()
        stats: dict = {}
        classes = [(1,)] * (k * (N - k))
        t0 = time.perf_counter()
        value = schubert.integrate_product(ctx, classes, stats)
        elapsed = time.perf_counter() - t0
        rows.append([k, N, ctx.dim_top, value, f"{elapsed:.6f}", stats.get("peak_terms", 0)])
    return render_rows(["k", "N", "dim_top", "value", "seconds", "peak_terms"], rows, "csv")


# --- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fermischubert", description="Schubert calculus via fermion integrals")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    integ = sub.add_parser("integrate", help="intersection number of a product of Schubert classes")
    integ.add_argument("--k", type=int, required=True)
    integ.add_argument("--N", type=int, required=True)
    integ.add_argument("--classes", required=True, help='partitions, e.g. "2,1;1;1"')
    integ.add_argument("--method", choices=(*METHODS, "all"), default="all")
    integ.add_argument("--format", choices=("text", "json", "csv"), default="text")
    integ.add_argument("--output")

    table = sub.add_parser("table", help="closed forms against Berezin and oracle values")
    table.add_argument("kind", choices=("theorem1", "g2n", "qdecomp"))
    table.add_argument("--k", default="2")
    table.add_argument("--N", default="4..8")
    table.add_argument("--l", default="0..2")
    table.add_argument("--formula", type=int, choices=(1, 2, 3), default=1)
    table.add_argument("--format", choices=("text", "json", "csv"), default="csv")
    table.add_argument("--max-dim", type=int, default=24, help="skip Berezin evaluation above this many generators")
    table.add_argument("--output")

    ver = sub.add_parser("verify", help="run the cross-validation suite")
    ver.add_argument("--level", choices=("quick", "full"), default="quick")
    ver.add_argument("--budget", type=float, help="wall-clock budget in seconds")
    ver.add_argument("--max-dim", type=int, help="override the level's generator-count cap")
    ver.add_argument("--format", choices=("text", "json"), default="text")
    ver.add_argument("--output")

    bench = sub.add_parser("bench", help="time sigma_1 powers")
    bench.add_argument("--sizes", default="2,6;3,7", help='e.g. "2,6;3,7"')
    bench.add_argument("--ceiling", type=int, default=12, help="largest k(N-k) accepted")
    bench.add_argument("--output")
    return p


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _configure_logging():
    level = os.environ.get("FERMISCHUBERT_LOG", "error").upper()
    logging.basicConfig(level=getattr(logging, level, logging.ERROR), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv: Sequence[str] | None = None) -> int:
    _configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "integrate":
            spec = JobSpec(args.k, args.N, parse_classes(args.classes), args.method, args.format, args.output)
            _emit(cmd_integrate(spec), spec.output_path)
        elif args.command == "table":
            text = cmd_table(args.kind, parse_range(args.k), parse_range(args.N), parse_range(args.l),
                             args.formula, args.format, args.max_dim)
            _emit(text, args.output)
        elif args.command == "verify":
            report = run_verify(args.level, args.budget, args.max_dim)
            if args.format == "json":
                text = json.dumps(report.as_dict(), indent=2) + "\n"
            else:
                lines = [f"{c.status:7s} {c.id}  {c.lhs} {c.rhs} {c.detail}".rstrip() for c in report.checks]
                counts = report.counts()
                lines.append(f"pass={counts['pass']} fail={counts['fail']} skipped={counts['skipped']}")
                text = "\n".join(lines) + "\n"
            _emit(text, args.output)
            return EXIT_OK if report.ok else EXIT_VERIFY
        elif args.command == "bench":
            _emit(cmd_bench(parse_sizes(args.sizes), args.ceiling), args.output)
    except UsageError as exc:
        sys.stderr.write(parser.format_usage())
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        sys.stderr.write(f"precondition violated: {exc}\n")
        return EXIT_PRECONDITION
    except oracle.OracleError as exc:
        sys.stderr.write(f"precondition violated: {exc}\n")
        return EXIT_PRECONDITION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
