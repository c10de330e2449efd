"""Command line front end: CSV on stdout, diagnostics on stderr.

Every run is a pure function of its arguments: identical argv and seed
inputs produce byte-identical stdout.  Output is buffered and written
only after a subcommand finishes, so a usage or domain error never
leaves a partial CSV behind.  Floats default to 17 significant digits,
which round-trips binary64; pass --digits for something easier on eyes.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys

import numpy as np

from .discrepancy import star_discrepancy_1d, star_discrepancy_bruteforce
from .estimator import ReplicationPlan, efficiency_experiment, mc_baseline, replicate_estimate
from .generator import BlockRequest, SeedSpec, rhalton
from .integrands import G_KINDS, KINDS, IntegrandSpec
from .meandim import mean_dimension
from .primes import DEFAULT_CAP, PrimeTable, default_table

__all__ = ["build_parser", "main"]

_MAX_SEED = 2**64 - 1


def _seed_value(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}")
    if not 0 <= value <= _MAX_SEED:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"expected positive integers, got {text!r}")
    return values


def _digits(text: str) -> int:
    value = int(text)
    if not 1 <= value <= 17:
        raise argparse.ArgumentTypeError("digits must be between 1 and 17")
    return value


def _fmt(value, digits: int) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), f".{digits}g")


def _csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _read_seed_file(path: str, expected: int) -> list[int]:
    """One decimal 64-bit integer per line, line j seeding absolute column j."""
    seeds: list[int] = []
    with open(path, "r", encoding="ascii") as handle:
        for lineno, line in enumerate(handle, 1):
            text = line.strip()
            if not text:
                continue
            if not text.isdigit():
                raise ValueError(
                    f"{path}:{lineno}: expected a non-negative decimal integer, got {text!r}"
                )
            value = int(text)
            if value > _MAX_SEED:
                raise ValueError(f"{path}:{lineno}: {value} does not fit in 64 bits")
            seeds.append(value)
    if len(seeds) != expected:
        raise ValueError(
            f"seed file {path} has {len(seeds)} seeds but d0+d={expected} columns need one each"
        )
    return seeds


def _block_seeds(args: argparse.Namespace) -> SeedSpec:
    if args.seed_file is not None:
        return SeedSpec.from_vector(_read_seed_file(args.seed_file, args.d0 + args.d))
    return SeedSpec.from_single(args.seed)


def _run_points(args: argparse.Namespace) -> str:
    request = BlockRequest(
        n=args.n, d=args.d, seeds=_block_seeds(args), n0=args.n0, d0=args.d0
    )
    block = np.atleast_2d(rhalton(request))
    header = [f"x{args.d0 + j}" for j in range(1, args.d + 1)]
    rows = [[_fmt(v, args.digits) for v in row] for row in block[: args.n]]
    return _csv(header, rows)


def _run_estimate(args: argparse.Namespace) -> str:
    spec = IntegrandSpec(args.integrand, args.d)
    plan = ReplicationPlan(
        reps=args.reps, n=args.n, d=args.d, base_seed=args.seed, stride=args.stride
    )
    if args.mc:
        estimate = mc_baseline(plan, spec, args.seed)
    else:
        estimate = replicate_estimate(plan, spec)
    header = ["integrand", "d", "n", "reps", "mu", "se"]
    row = [args.integrand, args.d, args.n, args.reps, estimate.mu, estimate.se]
    if args.integrand in G_KINDS:
        # Reference moments exist, so grade the run as well.
        result = efficiency_experiment(
            args.integrand,
            args.d,
            args.n,
            args.reps,
            args.seed,
            stride=args.stride,
            use_mc=args.mc,
            mc_seed=args.seed if args.mc else None,
        )
        header += ["mse", "eff"]
        row += [result.mse_hat, result.report.efficiency]
    return _csv(header, [[_fmt(v, args.digits) for v in row]])


def _run_sweep(args: argparse.Namespace) -> str:
    header = ["integrand", "d", "n", "mse", "mse_se", "eff", "eff_lo", "eff_hi"]
    rows = []
    for d in args.dims:
        for n in args.ns:
            result = efficiency_experiment(
                args.integrand, d, n, args.reps, args.seed, stride=args.stride
            )
            report = result.report
            row = [
                args.integrand,
                d,
                n,
                result.mse_hat,
                math.sqrt(result.mse_variance),
                report.efficiency,
                report.eff_lower,
                report.eff_upper,
            ]
            rows.append([_fmt(v, args.digits) for v in row])
    return _csv(header, rows)


def _run_meandim(args: argparse.Namespace) -> str:
    header = ["kind", "d", "dbar", "se"]
    rows = []
    for d in args.dims:
        result = mean_dimension(args.integrand, d, n=args.n, seed=args.seed, reps=args.reps)
        rows.append(
            [
                result.kind,
                _fmt(result.d, args.digits),
                _fmt(result.dbar, args.digits),
                _fmt(result.standard_error, args.digits),
            ]
        )
    return _csv(header, rows)


def _run_primes(args: argparse.Namespace) -> str:
    table = default_table() if args.count <= DEFAULT_CAP else PrimeTable.from_cap(args.count)
    return "".join(f"{table.nth(j)}\n" for j in range(1, args.count + 1))


def _read_points_csv(path: str) -> np.ndarray:
    rows: list[list[float]] = []
    with open(path, "r", encoding="ascii", newline="") as handle:
        for lineno, record in enumerate(csv.reader(handle), 1):
            if not record:
                continue
            try:
                values = [float(cell) for cell in record]
            except ValueError:
                if lineno == 1:
                    continue  # header row
                raise ValueError(f"{path}:{lineno}: non-numeric row {record!r}")
            rows.append(values)
    if not rows:
        raise ValueError(f"{path}: no data rows")
    widths = {len(row) for row in rows}
    if len(widths) != 1:
        raise ValueError(f"{path}: rows have inconsistent column counts {sorted(widths)}")
    return np.asarray(rows, dtype=np.float64)


def _run_discrepancy(args: argparse.Namespace) -> str:
    points = _read_points_csv(args.file)
    if args.exact1d:
        if points.shape[1] != 1:
            raise ValueError(
                f"--exact1d expects a single-column file, got {points.shape[1]} columns"
            )
        value = star_discrepancy_1d(points[:, 0])
    else:
        value = star_discrepancy_bruteforce(points)
    return _csv(["star_discrepancy"], [[_fmt(value, args.digits)]])


def _add_digits(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--digits",
        type=_digits,
        default=17,
        help="significant digits for floats (default 17, round-trip exact)",
    )


def _add_seed(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--seed", type=_seed_value, required=True, help="base seed (unsigned 64-bit)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rhalton",
        description="Scrambled Halton point sets and the experiments built on them.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    points = sub.add_parser(
        "points",
        help="emit an n x d block of scrambled Halton points as CSV",
        description=(
            "Rows are points n0+1 .. n0+n, columns are Halton columns "
            "d0+1 .. d0+d; the header names the absolute columns."
        ),
    )
    points.add_argument("--n", type=_nonnegative_int, required=True, help="rows to emit")
    points.add_argument("--d", type=_nonnegative_int, required=True, help="columns to emit")
    points.add_argument("--n0", type=_nonnegative_int, default=0, help="row offset")
    points.add_argument("--d0", type=_nonnegative_int, default=0, help="column offset")
    seeds = points.add_mutually_exclusive_group(required=True)
    seeds.add_argument("--seed", type=_seed_value, help="single seed; column j gets seed+j-1")
    seeds.add_argument(
        "--seed-file",
        help="file with one decimal 64-bit seed per line, one line per absolute column (d0+d lines)",
    )
    _add_digits(points)
    points.set_defaults(handler=_run_points)

    estimate = sub.add_parser(
        "estimate",
        help="replicated estimate of one integrand (CSV row: mu, se, and for g-kinds mse, eff)",
    )
    estimate.add_argument("--integrand", choices=KINDS, required=True)
    estimate.add_argument("--d", type=_positive_int, required=True)
    estimate.add_argument("--n", type=_positive_int, required=True, help="points per replicate")
    estimate.add_argument("--reps", type=_positive_int, default=10, help="replicates (>= 2)")
    _add_seed(estimate)
    estimate.add_argument(
        "--stride", type=_positive_int, default=None, help="seed gap between replicates (>= d)"
    )
    estimate.add_argument(
        "--mc", action="store_true", help="plain Monte Carlo baseline instead of scrambled Halton"
    )
    _add_digits(estimate)
    estimate.set_defaults(handler=_run_estimate)

    sweep = sub.add_parser(
        "efficiency-sweep",
        help="MSE and efficiency over a (dims x ns) grid for one profile integrand",
    )
    sweep.add_argument("--integrand", choices=G_KINDS, required=True)
    sweep.add_argument("--dims", type=_int_list, required=True, help="comma-separated dimensions")
    sweep.add_argument("--ns", type=_int_list, required=True, help="comma-separated sample sizes")
    sweep.add_argument("--reps", type=_positive_int, required=True)
    _add_seed(sweep)
    sweep.add_argument("--stride", type=_positive_int, default=None)
    _add_digits(sweep)
    sweep.set_defaults(handler=_run_sweep)

    meandim = sub.add_parser(
        "meandim", help="mean-dimension estimates over a list of dimensions"
    )
    meandim.add_argument("--integrand", choices=G_KINDS, required=True)
    meandim.add_argument("--dims", type=_int_list, required=True)
    meandim.add_argument("--n", type=_positive_int, default=2**14, help="points per replicate")
    meandim.add_argument("--reps", type=_positive_int, default=10)
    _add_seed(meandim)
    _add_digits(meandim)
    meandim.set_defaults(handler=_run_meandim)

    primes = sub.add_parser("primes", help="print the first K primes, one per line")
    primes.add_argument("--count", type=_positive_int, required=True)
    primes.set_defaults(handler=_run_primes)

    discrepancy = sub.add_parser(
        "discrepancy",
        help="star discrepancy of a points CSV (header optional)",
    )
    discrepancy.add_argument("--file", required=True, help="CSV of points, one point per row")
    discrepancy.add_argument(
        "--exact1d",
        action="store_true",
        help="use the exact one-dimensional formula (file must have one column)",
    )
    _add_digits(discrepancy)
    discrepancy.set_defaults(handler=_run_discrepancy)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(payload)
    return 0
