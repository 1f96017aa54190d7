#!/usr/bin/env python3
"""Run the verification sweep for a range of vertex counts.

Writes one report JSON per n and prints a one-line summary each.  With the
default cache directory, interrupted runs resume from the per-graph records.

Usage: python scripts/run_atlas_sweep.py [--min-n 2] [--max-n 8] [--jobs 1]
       [--with-betti-oracle] [--outdir reports]
"""

import argparse
import json
import os
import sys
import time

from toricgraph import atlas


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-n", type=int, default=2)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--with-betti-oracle", action="store_true")
    parser.add_argument("--outdir", default="reports")
    args = parser.parse_args()

    os.makedirs(args.outdir, exist_ok=True)
    all_ok = True
    for n in range(args.min_n, args.max_n + 1):
        start = time.perf_counter()
        report = atlas.verify(n, jobs=args.jobs, with_betti_oracle=args.with_betti_oracle)
        elapsed = time.perf_counter() - start
        path = os.path.join(args.outdir, f"verify-n{n}.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(atlas.report_to_json_dict(report), fh, indent=2)
            fh.write("\n")
        status = "MATCH" if report.equal and not report.counterexamples else "MISMATCH"
        print(
            f"n={n}: {report.class_count} classes, {len(report.computed)} pairs, "
            f"{status} ({elapsed:.1f}s) -> {path}"
        )
        all_ok = all_ok and status == "MATCH"
    return 0 if all_ok else 3


if __name__ == "__main__":
    sys.exit(main())
