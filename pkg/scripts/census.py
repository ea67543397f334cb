#!/usr/bin/env python3
"""Dump desk-scale censuses as JSON lines.

Examples:
    python scripts/census.py --what positroids --n 5
    python scripts/census.py --what flag-pairs --n 5 --out pairs.jsonl
"""
import argparse
import json
import sys
import time

from positroids import census_records


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--what", choices=("dps", "positroids", "lpms", "flag-pairs"), default="positroids")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--k", type=int, default=None)
    parser.add_argument("--out", default=None)
    args = parser.parse_args()

    ks = [args.k] if args.k is not None or args.what == "dps" else list(range(args.n + 1))
    out = sys.stdout if args.out is None else open(args.out, "w")
    start = time.perf_counter()
    count = 0
    try:
        for k in ks:
            for record in census_records(args.what, k, args.n):
                out.write(json.dumps(record.to_json()) + "\n")
                count += 1
    finally:
        if out is not sys.stdout:
            out.close()
    print(f"{count} records in {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
