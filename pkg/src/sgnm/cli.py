"""Command-line front end.

Subcommands: ``census``, ``sample``, ``stats``, ``trend``, ``gamma`` and
``verify``. Tables go to CSV (stdout unless ``--out``) with JSON sidecars;
errors are reported on stderr as one JSON object and a nonzero exit code.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import __version__
from .census import build_census, census_cap, expectation, gamma_estimate
from .embedding import DEFAULT_BUDGET
from .errors import BudgetError, SamplerError, SGNMError
from .graph import pattern_from_name, read_graph6
from .invariants import verify
from .sampling import SamplerConfig, mean_interval, sample
from .statistics import REPORT_FIELDS, resolve_statistic, stat_report

EXIT_USAGE = 2
EXIT_FAILED = 1
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def edge_ceiling(n: int, g: int) -> int:
    top = n * (n - 1) // 2
    return min(top, 3 * n - 6 + 6 * g) if n >= 3 else top


def resolve_m(n: int, g: int, ratio: float) -> int:
    """``round(ratio * n)`` (halves up) clamped to ``[0, min(C(n,2), 3n-6+6g)]``."""
    raw = math.floor(ratio * n + 0.5)
    m = max(0, min(raw, edge_ceiling(n, g)))
    if m != raw:
        _warn(f"m-ratio {ratio} at n={n} gives m={raw}; clamped to {m}")
    return m


def m_grid(args, n: int, g: int) -> list[tuple[int, float | None]]:
    """``(m, ratio)`` pairs from ``--m`` or ``--m-ratio``."""
    if args.m is not None and args.m_ratio is not None:
        raise UsageError("give --m or --m-ratio, not both")
    if args.m_ratio is not None:
        return [(resolve_m(n, g, r), r) for r in args.m_ratio]
    if args.m is not None:
        for m in args.m:
            if not 0 <= m <= n * (n - 1) // 2:
                raise UsageError(f"m={m} outside 0..C({n},2)")
        return [(m, None) for m in args.m]
    return []


def _emit(text: str, out: str | None, suffix_json: dict | None = None) -> None:
    if out:
        path = Path(out)
        path.write_text(text)
        if suffix_json is not None:
            path.with_suffix(".json").write_text(json.dumps(suffix_json, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)


def _budget(args) -> int:
    env = os.environ.get("SGNM_BUDGET")
    if env:
        return int(env)
    budget = args.budget if args.budget is not None else DEFAULT_BUDGET
    # statistics and embedding helpers read the budget from the environment
    os.environ["SGNM_BUDGET"] = str(budget)
    return budget


# ---------------------------------------------------------------------------
# Subcommands


def cmd_census(args) -> int:
    if args.n is None:
        raise UsageError("census needs --n")
    gs = args.g or [0]
    stats = args.stat or []
    table = build_census(args.n, gs, args.m, stats, cap=args.cap, budget=args.budget_value)
    if args.out and Path(args.out).exists():
        from .census import CensusTable

        old = CensusTable.load(args.out)
        bad = table.mismatches(old)
        if bad:
            print(json.dumps({"error": "census mismatch", "mismatches": [str(b) for b in bad]}),
                  file=sys.stderr)
            return EXIT_FAILED
    if args.out:
        table.save(args.out)
    else:
        sys.stdout.write(table.to_csv())
        if stats:
            sys.stdout.write(table.to_json())
    return 0


def cmd_sample(args) -> int:
    if args.n is None or len(args.n) != 1:
        raise UsageError("sample needs a single --n")
    n = args.n[0]
    g = (args.g or [0])[0]
    grid = m_grid(args, n, g)
    if len(grid) != 1:
        raise UsageError("sample needs a single --m or --m-ratio")
    m = grid[0][0]
    config = _config(args)
    batch = sample(n, m, g, args.samples, config)
    if args.out:
        batch.save(args.out)
    else:
        from .graph import write_graph6

        sys.stdout.write(write_graph6(batch.graphs))
        print(json.dumps(batch.sidecar(), sort_keys=True), file=sys.stderr)
    if args.stat:
        stat = resolve_statistic(args.stat[0])
        mean, lo, hi = mean_interval([stat(G, g) for G in batch.graphs])
        print(json.dumps({"stat": args.stat[0], "mean": mean, "low": lo, "high": hi}), file=sys.stderr)
    return 0


def _config(args) -> SamplerConfig:
    method = args.method or getattr(args, "default_method", "rejection")
    return SamplerConfig(method=method, seed=args.seed, burn_in=args.burn_in,
                         thinning=args.thin, max_rejections=args.max_rejections,
                         chains=args.chains, budget=args.budget_value)


def cmd_stats(args) -> int:
    source = Path(args.input).read_text() if args.input else sys.stdin.read()
    graphs = read_graph6(source.splitlines())
    g = (args.g or [0])[0]
    patterns = [pattern_from_name(p) for p in (args.pattern or [])]
    reports = [stat_report(G, g, patterns) for G in graphs]
    if args.format == "json":
        text = "".join(r.to_json() + "\n" for r in reports)
    else:
        rows = [r.as_row() for r in reports]
        header = list(rows[0]) if rows else list(REPORT_FIELDS)
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        text = buf.getvalue()
    _emit(text, args.out)
    return 0


@dataclass
class TrendRow:
    n: int
    m: int
    g: int
    stat: str
    estimate: float
    ci: str
    samples: int
    ratio: str
    method: str
    seed: int
    burn_in: int
    thin: int

    FIELDS = ("n", "m", "g", "stat", "estimate", "ci", "samples", "ratio", "method", "seed",
              "burn_in", "thin")

    def row(self) -> list:
        return [getattr(self, f) for f in self.FIELDS]


def trend_rows(args) -> tuple[list[TrendRow], Exception | None]:
    stat_name = args.stat[0] if args.stat else "connected"
    stat = resolve_statistic(stat_name)
    gs = args.g or [0]
    rows: list[TrendRow] = []
    for n in args.n:
        for g in gs:
            if g >= 1 and n > 10:
                raise UsageError("trends with g >= 1 are limited to n <= 10")
            for m, ratio in m_grid(args, n, g):
                r = "" if ratio is None else f"{ratio:g}"
                try:
                    if args.exact and n <= census_cap(g) and math.comb(n * (n - 1) // 2, m) <= 400_000:
                        value = float(expectation(n, m, g, stat))
                        rows.append(TrendRow(n, m, g, stat_name, value, "exact", 0, r, "census",
                                             0, 0, 0))
                        continue
                    config = _config(args)
                    batch = sample(n, m, g, args.samples, config)
                    mean, lo, hi = mean_interval([stat(G, g) for G in batch.graphs])
                except (BudgetError, SamplerError) as exc:
                    return rows, exc
                rows.append(TrendRow(n, m, g, stat_name, round(mean, 12), f"{(hi - lo) / 2:.12g}",
                                     len(batch.graphs), r, config.method, config.seed,
                                     config.burn_in, config.thinning))
    return rows, None


def _trend_csv(rows: Sequence[TrendRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TrendRow.FIELDS)
    for r in rows:
        w.writerow(r.row())
    return buf.getvalue()


def cmd_trend(args) -> int:
    if not args.n:
        raise UsageError("trend needs --n")
    if args.m is None and args.m_ratio is None:
        raise UsageError("trend needs --m or --m-ratio")
    rows, err = trend_rows(args)
    _emit(_trend_csv(rows), args.out)
    if err is not None:
        raise err
    return 0


def cmd_gamma(args) -> int:
    if not args.n:
        raise UsageError("gamma needs --n")
    qs = args.m_ratio or [1.5]
    rows = []
    for n in args.n:
        for g in args.g or [0]:
            for q in qs:
                rows.append(gamma_estimate(q, g, n, budget=args.budget_value).as_dict())
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    _emit(buf.getvalue(), args.out)
    return 0


def cmd_verify(args) -> int:
    report = verify(args.max_n, args.max_g, progress=lambda s: print(s, file=sys.stderr))
    doc = {"graphs_checked": report.graphs_checked, "violations": report.violations[:100],
           "violation_count": len(report.violations), "ok": report.ok}
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0 if report.ok else EXIT_FAILED


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_ints, help="vertex counts, comma separated")
    common.add_argument("--m", type=_ints, help="edge counts, comma separated")
    common.add_argument("--m-ratio", dest="m_ratio", type=_floats,
                        help="edge-to-vertex ratios; m = round(ratio*n), clamped")
    common.add_argument("--g", type=_ints, help="genus bounds, comma separated")
    common.add_argument("--stat", action="append", help="statistic name (repeatable)")
    common.add_argument("--samples", type=int, default=1000)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--method", choices=("rejection", "mcmc"),
                        help="sampler (default: rejection; mcmc for trend)")
    common.add_argument("--burn-in", dest="burn_in", type=int, default=1000)
    common.add_argument("--thin", type=int, default=10)
    common.add_argument("--chains", type=int, default=1)
    common.add_argument("--max-rejections", dest="max_rejections", type=int, default=1_000_000)
    common.add_argument("--out", help="output path (CSV/graph6); JSON sidecars sit next to it")
    common.add_argument("--budget", type=int, help="embedding search node budget (SGNM_BUDGET wins)")

    parser = argparse.ArgumentParser(prog="sgnm", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", parents=[common], help="exact counts over S^g(n,m)")
    p.add_argument("--cap", type=int, help="override the census size cap")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("sample", parents=[common], help="draw graphs from S_g(n,m)")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("stats", parents=[common], help="statistics of graph6 input")
    p.add_argument("--in", dest="input", help="graph6 file (default stdin)")
    p.add_argument("--pattern", action="append", help="pattern for appearance counts")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("trend", parents=[common], help="statistic estimates across a grid")
    p.add_argument("--exact", action="store_true", help="use the census when n is within its cap")
    # actions from the shared parent are shared objects, so the per-command
    # default lives under its own key
    p.set_defaults(func=cmd_trend, default_method="mcmc")

    p = sub.add_parser("gamma", parents=[common], help="growth-constant estimates")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    p.add_argument("--max-n", dest="max_n", type=int, default=6)
    p.add_argument("--max-g", dest="max_g", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.budget_value = _budget(args)
        return args.func(args)
    except UsageError as exc:
        print(json.dumps({"error": "usage", "message": str(exc)}), file=sys.stderr)
        return EXIT_USAGE
    except BudgetError as exc:
        print(json.dumps({"error": "budget", "message": str(exc), "lower": exc.lower,
                          "upper": exc.upper, "nodes": exc.nodes}), file=sys.stderr)
        return EXIT_BUDGET
    except (SGNMError, ValueError, KeyError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
