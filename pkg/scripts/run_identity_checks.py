#!/usr/bin/env python3
"""Run every identity-check suite and print a one-line verdict per suite.

Usage: python scripts/run_identity_checks.py [--seed N] [--cases N]
"""

import argparse
import json
import sys

from shearlab.cli import _SUITES


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=20260825)
    parser.add_argument("--cases", type=int, default=25)
    args = parser.parse_args()

    failures = 0
    for name in sorted(_SUITES):
        reports = _SUITES[name](args.seed, args.cases)
        bad = [r for r in reports if not r.get("equal", False)]
        status = "PASS" if not bad else "FAIL"
        failures += len(bad)
        print(f"{name:12s} {status}  ({len(reports) - len(bad)}/{len(reports)} checks)")
        for r in bad:
            print(f"    failed: {json.dumps(r, sort_keys=True, default=str)}")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
