#!/usr/bin/env python3
"""Run every verification check on every catalog group and summarize.

This is the long-form experiment: the CLI does the same work per group,
this script sweeps the whole catalog and prints a status matrix, writing
the combined JSON report when asked.

    python scripts/run_all_checks.py [--out report.json] [--groups S3,Q8]
"""

import argparse
import json
import sys
import time
from collections import Counter

from capelli_lab.catalog import catalog_irreps, catalog_names
from capelli_lab.cli import CHECKS


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", help="write combined JSON report here")
    parser.add_argument("--groups", help="comma-separated subset of the catalog")
    args = parser.parse_args(argv)

    names = args.groups.split(",") if args.groups else list(catalog_names())
    combined = []
    grand = Counter()
    started = time.monotonic()
    for name in names:
        irrep_set = catalog_irreps(name)
        row = {}
        for check, fn in CHECKS.items():
            t0 = time.monotonic()
            report = fn(irrep_set)
            elapsed = time.monotonic() - t0
            statuses = Counter(r.status for r in report.results)
            grand.update(statuses)
            row[check] = "FAIL" if statuses.get("fail") else "ok"
            combined.extend(
                {
                    "group": name,
                    "name": check,
                    "check": r.check,
                    "irrep": r.irrep,
                    "status": r.status,
                    "detail": r.detail,
                    "runtime_ms": int(elapsed * 1000),
                }
                for r in report.results
            )
        flat = " ".join(f"{check}={row[check]}" for check in CHECKS)
        print(f"{name:4} {flat}")

    total = time.monotonic() - started
    print(f"\n{sum(grand.values())} results in {total:.1f}s: "
          + ", ".join(f"{k}={v}" for k, v in sorted(grand.items())))
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"tool": "capelli-lab", "results": combined}, fh, indent=2)
        print(f"wrote {args.out}")
    return 1 if grand.get("fail") else 0


if __name__ == "__main__":
    sys.exit(main())
