#!/usr/bin/env python3
"""Scan pairs of simplest cubic fields for equal splitting fields.

For every m in [m-min, m-max] and every n in (m, n-max] the scan asks
whether X^3 - mX^2 - (m+3)X - 1 and X^3 - nX^2 - (n+3)X - 1 generate the
same cyclic cubic field, using the exact integer-root criterion on the
two integral resolvent models.  Hits are merged into equivalence classes.

Example:
    python scripts/shanks_scan.py --m-min -1 --m-max 12 --n-max 2500 --jobs 8
"""

import argparse
import json
import sys
import time

from tschirn.families import scan_equal_splitting


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--m-min", type=int, default=-1)
    parser.add_argument("--m-max", type=int, default=12)
    parser.add_argument("--n-max", type=int, default=2500)
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker processes (default 1)")
    parser.add_argument("--json", action="store_true", dest="as_json",
                        help="emit the result as a JSON document")
    ns = parser.parse_args(argv)

    start = time.perf_counter()
    result = scan_equal_splitting((ns.m_min, ns.m_max), ns.n_max, jobs=ns.jobs)
    elapsed = time.perf_counter() - start

    if ns.as_json:
        doc = result.to_dict()
        doc["elapsed_seconds"] = round(elapsed, 3)
        print(json.dumps(doc, indent=2, sort_keys=True))
        return 0

    print(f"scan m in [{ns.m_min}, {ns.m_max}], 'm < n <= {ns.n_max}'"
          f" ({ns.jobs} job{'s' if ns.jobs != 1 else ''},"
          f" {elapsed:.2f}s)")
    print(f"equal-field pairs ({len(result.pairs)}):")
    for m, n in result.pairs:
        print(f"  m = {m:>4}  n = {n:>6}")
    print(f"classes ({len(result.classes)}):")
    for group in result.classes:
        print("  {" + ", ".join(str(m) for m in group) + "}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
