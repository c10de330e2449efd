"""Desk-scale efficiency study: MSE and MC-relative efficiency by dimension.

Writes one CSV per profile integrand (columns: integrand, d, n, mse,
mse_se, eff, eff_lo, eff_hi, plus the paired plain-MC mse for scale).
The defaults finish in a few minutes; raise --ns or --reps for smoother
curves.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
import time
from pathlib import Path

from rhalton.estimator import efficiency_experiment
from rhalton.integrands import G_KINDS


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("efficiency_csv"))
    parser.add_argument("--kinds", default=",".join(G_KINDS))
    parser.add_argument("--dims", default="1,2,3,5,8,12,20")
    parser.add_argument("--ns", default="1000,10000")
    parser.add_argument("--reps", type=int, default=50)
    parser.add_argument("--seed", type=int, default=2025)
    return parser.parse_args()


def main() -> int:
    args = parse_args()
    kinds = [k.strip() for k in args.kinds.split(",") if k.strip()]
    dims = [int(v) for v in args.dims.split(",")]
    ns = [int(v) for v in args.ns.split(",")]
    args.out.mkdir(parents=True, exist_ok=True)
    for kind in kinds:
        if kind not in G_KINDS:
            raise SystemExit(f"unknown integrand {kind!r}")
        path = args.out / f"efficiency_{kind}.csv"
        started = time.time()
        with open(path, "w", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(
                ["integrand", "d", "n", "mse", "mse_se", "eff", "eff_lo", "eff_hi", "mc_mse"]
            )
            for d in dims:
                for n in ns:
                    rqmc = efficiency_experiment(kind, d, n, args.reps, args.seed)
                    mc = efficiency_experiment(
                        kind, d, n, args.reps, args.seed, use_mc=True, mc_seed=args.seed
                    )
                    report = rqmc.report
                    writer.writerow(
                        [
                            kind,
                            d,
                            n,
                            f"{rqmc.mse_hat:.6e}",
                            f"{math.sqrt(rqmc.mse_variance):.6e}",
                            f"{report.efficiency:.4f}",
                            f"{report.eff_lower:.4f}",
                            f"{report.eff_upper:.4f}",
                            f"{mc.mse_hat:.6e}",
                        ]
                    )
                print(f"{kind} d={d} done", file=sys.stderr)
        print(f"wrote {path} in {time.time() - started:.1f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
