#!/usr/bin/env python3
"""Export scatter data (CSV and SVG) of the realizable (reg, pdim) pairs.

Defaults reproduce the n = 8 and n = 9 panels from the theoretical set; pass
--source computed to derive the points from the exhaustive enumeration
instead (identical sets when the verification passes).

Usage: python scripts/export_scatter.py [--n 8 9] [--source theoretical]
       [--outdir figures]
"""

import argparse
import os
import sys

from toricgraph.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[8, 9])
    parser.add_argument("--source", choices=["theoretical", "computed"], default="theoretical")
    parser.add_argument("--outdir", default="figures")
    args = parser.parse_args()

    os.makedirs(args.outdir, exist_ok=True)
    for n in args.n:
        for ext in ("csv", "svg"):
            out = os.path.join(args.outdir, f"pairs-n{n}.{ext}")
            code = cli_main(
                ["plot", "--n", str(n), "--out", out, "--source", args.source]
            )
            if code != 0:
                return code
    return 0


if __name__ == "__main__":
    sys.exit(main())
