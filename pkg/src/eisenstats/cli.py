"""Command-line front end.

Subcommands: constants, table1, count, psi, converge, sample, histogram.
Output goes to stdout as a plain table by default; --format csv/json plus
--out write machine-readable reports.  Exit codes: 0 success, 1 usage error,
2 capacity/precision failure, 3 internal cross-check failure.
"""

import argparse
import csv
import functools
import io
import json
import os
import sys
from dataclasses import dataclass, field

from . import constants as consts
from .arith import DEFAULT_TABLE_LIMIT, build_tables
from .counting import BoxParams, count_eisenstein_exact, moment_report
from .errors import (
    BudgetError,
    CapacityError,
    CountOverflowError,
    DegenerateBoxError,
    OracleMismatchError,
    PrecisionError,
)
from .oracle import enumerate_box, sample_box
from .poly import Poly, eisenstein_primes

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAPACITY = 2
EXIT_MISMATCH = 3

_CAPACITY_ERRORS = (
    CapacityError,
    CountOverflowError,
    BudgetError,
    PrecisionError,
    DegenerateBoxError,
)


@dataclass
class RunConfig:
    """Everything a command run needs, resolved from flags and environment."""

    command: str
    d_values: list[int] = field(default_factory=list)
    h_values: list[int] = field(default_factory=list)
    method: str = "exact"
    prime_cutoff: int | None = None
    tol: float = 1e-6
    seed: int = 0
    sample_size: int = 10**5
    output_format: str = "table"
    output_path: str | None = None
    coeffs: str | None = None
    universe: str = "both"
    threads: int | None = None


def default_table_limit() -> int:
    """Sieve limit for the constants: EISEN_TABLE_LIMIT or 10^7."""
    return int(os.environ.get("EISEN_TABLE_LIMIT", DEFAULT_TABLE_LIMIT))


@functools.lru_cache(maxsize=3)
def _tables(limit: int):
    return build_tables(limit)


def _parse_d_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        values = list(range(int(lo), int(hi) + 1))
    else:
        values = [int(text)]
    if not values or min(values) < 2:
        raise ValueError(f"invalid degree range {text!r} (need d >= 2)")
    return values


def _parse_h_list(text: str) -> list[int]:
    values = [int(part) for part in text.split(",") if part.strip()]
    if not values or min(values) < 1:
        raise ValueError(f"invalid height list {text!r}")
    return values


def _format_cell(v) -> str:
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def _emit(rows: list[dict], columns: list[str], cfg: RunConfig) -> None:
    """Write rows in the requested format to stdout or --out."""
    if cfg.output_format == "json":
        text = json.dumps(rows, indent=2, default=str) + "\n"
    elif cfg.output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_format_cell(row[c]) for c in columns])
        text = buf.getvalue()
    else:
        widths = {
            c: max(len(c), *(len(_pretty(row[c])) for row in rows)) if rows else len(c)
            for c in columns
        }
        lines = ["  ".join(c.ljust(widths[c]) for c in columns)]
        for row in rows:
            lines.append("  ".join(_pretty(row[c]).ljust(widths[c]) for c in columns))
        text = "\n".join(lines) + "\n"
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _pretty(v) -> str:
    if isinstance(v, float):
        return f"{v:.5f}"
    return str(v)


def cmd_constants(cfg: RunConfig) -> int:
    limit = cfg.prime_cutoff or default_table_limit()
    tables = _tables(limit)
    reports = [consts.constants_report(d, tables, cfg.tol) for d in cfg.d_values]
    rows = [dict(zip(consts.CSV_COLUMNS, r.csv_row())) for r in reports]
    _emit(rows, consts.CSV_COLUMNS, cfg)
    return EXIT_OK


def cmd_table1(cfg: RunConfig) -> int:
    limit = cfg.prime_cutoff or default_table_limit()
    reports = consts.table1(_tables(limit), cfg.tol)
    columns = ["d", "alpha=mu_hat", "beta", "gamma", "mu", "sigma_sq", "sigma_sq_hat"]
    rows = [
        {
            "d": r.d,
            "alpha=mu_hat": consts.round5(r.alpha),
            "beta": consts.round5(r.beta),
            "gamma": consts.round5(r.gamma),
            "mu": consts.round5(r.mu),
            "sigma_sq": consts.round5(r.sigma_sq),
            "sigma_sq_hat": consts.round5(r.sigma_sq_hat),
        }
        for r in reports
    ]
    _emit(rows, columns, cfg)
    return EXIT_OK


_COUNT_COLUMNS = [
    "d",
    "H",
    "count_eisenstein",
    "sum_psi",
    "sum_psi_sq",
    "total_polys",
    "empirical_mean",
    "empirical_variance",
    "cross_check",
]


def _count_row(report, check: str) -> dict:
    return {
        "d": report.params.d,
        "H": report.params.H,
        "count_eisenstein": report.count_eisenstein,
        "sum_psi": report.sum_psi,
        "sum_psi_sq": report.sum_psi_sq,
        "total_polys": report.total_polys,
        "empirical_mean": float(report.empirical_mean),
        "empirical_variance": float(report.empirical_variance),
        "cross_check": check,
    }


def _counting_tables(cfg: RunConfig, needed: int):
    limit = cfg.prime_cutoff if cfg.prime_cutoff else max(needed, 2)
    if limit < needed:
        raise ValueError(f"--cutoff {limit} is below H={needed}; exact counting needs cutoff >= H")
    return _tables(limit)


def cmd_count(cfg: RunConfig) -> int:
    d, h = cfg.d_values[0], cfg.h_values[0]
    box = BoxParams(d, h)
    if cfg.method == "sample":
        return cmd_sample(cfg)
    tables = _counting_tables(cfg, h)
    report = moment_report(box, tables)
    check = "-"
    if cfg.method == "oracle":
        eis, _ = enumerate_box(box)
        matches = (
            report.count_eisenstein == eis.total()
            and report.sum_psi == eis.sum_psi()
            and report.sum_psi_sq == eis.sum_psi_sq()
        )
        if not matches:
            raise OracleMismatchError(
                f"exact ({report.count_eisenstein}, {report.sum_psi}, "
                f"{report.sum_psi_sq}) != enumerated ({eis.total()}, "
                f"{eis.sum_psi()}, {eis.sum_psi_sq()}) for d={d}, H={h}"
            )
        check = "MATCH"
    _emit([_count_row(report, check)], _COUNT_COLUMNS, cfg)
    return EXIT_OK


_CONVERGE_COLUMNS = [
    "d",
    "H",
    "normalized_count",
    "empirical_mean",
    "empirical_variance",
    "gamma_d",
    "mu_d",
    "sigma_sq_d",
    "gap_count",
    "gap_mean",
    "gap_variance",
]


def cmd_converge(cfg: RunConfig) -> int:
    d = cfg.d_values[0]
    hs = sorted(cfg.h_values)
    # Targets need far fewer primes than 1e-6 accuracy; 10^6 keeps this quick.
    target_tables = _tables(max(10**6, cfg.prime_cutoff or 0))
    ref = consts.constants_report(d, target_tables)
    tables = _counting_tables(cfg, max(hs))
    rows = []
    for h in hs:
        report = moment_report(BoxParams(d, h), tables)
        normalized = report.count_eisenstein / float(2 * h) ** (d + 1)
        mean = float(report.empirical_mean)
        variance = float(report.empirical_variance)
        rows.append(
            {
                "d": d,
                "H": h,
                "normalized_count": normalized,
                "empirical_mean": mean,
                "empirical_variance": variance,
                "gamma_d": ref.gamma,
                "mu_d": ref.mu,
                "sigma_sq_d": ref.sigma_sq,
                "gap_count": abs(normalized - ref.gamma),
                "gap_mean": abs(mean - ref.mu),
                "gap_variance": abs(variance - ref.sigma_sq),
            }
        )
    _emit(rows, _CONVERGE_COLUMNS, cfg)
    return EXIT_OK


def cmd_psi(cfg: RunConfig) -> int:
    f = Poly.from_string(cfg.coeffs)
    primes = eisenstein_primes(f)
    listing = "[" + ",".join(str(p) for p in primes) + "]"
    print(f"psi={len(primes)} primes={listing}")
    return EXIT_OK


_SAMPLE_COLUMNS = [
    "d",
    "H",
    "sample_size",
    "seed",
    "p_hat",
    "mean_hat",
    "var_hat",
    "se_p",
    "se_mean",
    "se_var",
    "rng_algorithm",
]


def cmd_sample(cfg: RunConfig) -> int:
    d, h = cfg.d_values[0], cfg.h_values[0]
    est = sample_box(BoxParams(d, h), cfg.sample_size, cfg.seed)
    row = {c: getattr(est, c) for c in _SAMPLE_COLUMNS}
    _emit([row], _SAMPLE_COLUMNS, cfg)
    return EXIT_OK


def cmd_histogram(cfg: RunConfig) -> int:
    d, h = cfg.d_values[0], cfg.h_values[0]
    eis, everything = enumerate_box(BoxParams(d, h))
    chosen = {
        "eisenstein": [eis],
        "all": [everything],
        "both": [eis, everything],
    }[cfg.universe]
    rows = [
        {"psi": k, "count": hist.counts[k], "universe": hist.universe}
        for hist in chosen
        for k in sorted(hist.counts)
    ]
    _emit(rows, ["psi", "count", "universe"], cfg)
    return EXIT_OK


_COMMANDS = {
    "constants": cmd_constants,
    "table1": cmd_table1,
    "count": cmd_count,
    "converge": cmd_converge,
    "psi": cmd_psi,
    "sample": cmd_sample,
    "histogram": cmd_histogram,
}


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.add_argument("--out", default=None, help="write output to this path")
    p.add_argument("--threads", type=int, default=None,
                   help="worker cap (this build computes sequentially)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eisen",
        description="Exact counting and certified constants for Eisenstein polynomial statistics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="alpha/beta/gamma and derived stats per degree")
    p.add_argument("--d", default="2..6", help="degree or inclusive range lo..hi")
    p.add_argument("--cutoff", type=int, default=None, help="prime cutoff (default 10^7)")
    p.add_argument("--tol", type=float, default=1e-6, help="required certified accuracy")
    _add_output_flags(p)

    p = sub.add_parser("table1", help="the constants table for d=2..6, 5 decimals")
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--tol", type=float, default=1e-6)
    _add_output_flags(p)

    p = sub.add_parser("count", help="exact box counts and empirical moments")
    p.add_argument("--d", required=True, help="degree")
    p.add_argument("--H", required=True, help="height bound")
    p.add_argument("--method", choices=["exact", "oracle", "sample"], default="exact")
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--samples", type=int, default=10**5)
    p.add_argument("--seed", type=int, default=0)
    _add_output_flags(p)

    p = sub.add_parser("converge", help="convergence table over a height sweep")
    p.add_argument("--d", required=True)
    p.add_argument("--H", required=True, help="comma-separated ascending heights")
    p.add_argument("--cutoff", type=int, default=None)
    _add_output_flags(p)

    p = sub.add_parser("psi", help="psi and witness primes of one polynomial")
    p.add_argument("--coeffs", required=True, help="comma-separated, low to high")

    p = sub.add_parser("sample", help="seeded Monte Carlo psi statistics")
    p.add_argument("--d", required=True)
    p.add_argument("--H", required=True)
    p.add_argument("--samples", type=int, default=10**5)
    p.add_argument("--seed", type=int, default=0)
    _add_output_flags(p)

    p = sub.add_parser("histogram", help="exact psi histogram by enumeration")
    p.add_argument("--d", required=True)
    p.add_argument("--H", required=True)
    p.add_argument("--universe", choices=["eisenstein", "all", "both"], default="both")
    _add_output_flags(p)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    if hasattr(args, "d"):
        cfg.d_values = _parse_d_range(str(args.d))
    if hasattr(args, "H"):
        cfg.h_values = _parse_h_list(str(args.H))
    for name in ("method", "tol", "seed", "coeffs", "universe", "threads"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    if getattr(args, "cutoff", None):
        cfg.prime_cutoff = args.cutoff
    if hasattr(args, "samples"):
        cfg.sample_size = args.samples
    if hasattr(args, "format"):
        cfg.output_format = args.format
    if hasattr(args, "out"):
        cfg.output_path = args.out
    return cfg


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = _config_from_args(args)
        return _COMMANDS[cfg.command](cfg)
    except _CAPACITY_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except OracleMismatchError as exc:
        print(f"cross-check FAILED: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
