#!/usr/bin/env python3
"""Regenerate the persisted reference-moment table.

Writes src/rhalton/_moments_table.py with the midpoint-rule mean and
variance of each 1-d profile at the default resolution.  Run from the
repository root after any change to the profiles or the quantile:

    python scripts/build_reference_moments.py
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from rhalton.integrands import DEFAULT_NODES, G_KINDS, reference_moments  # noqa: E402

HEADER = '''"""Persisted reference moments; regenerate, never edit.

Produced by scripts/build_reference_moments.py with a midpoint rule at
NODES points on the uniform scale.  Entries are (mu, sigma2).
"""
'''


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nodes", type=int, default=DEFAULT_NODES)
    args = parser.parse_args()

    lines = [HEADER, f"NODES = {args.nodes}", "", "TABLE = {"]
    for kind in G_KINDS:
        m = reference_moments(kind, args.nodes)
        print(f"{kind}: mu={m.mu!r} sigma2={m.sigma2!r}")
        lines.append(f"    {kind!r}: ({m.mu!r}, {m.sigma2!r}),")
    lines.append("}")

    out = pathlib.Path(__file__).resolve().parents[1] / "src" / "rhalton" / "_moments_table.py"
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
