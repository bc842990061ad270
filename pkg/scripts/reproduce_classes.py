#!/usr/bin/env python3
"""Classify every ternary pattern with 5, 7 and 9 leaves and write one JSON report per size.

Usage: python scripts/reproduce_classes.py --out results/ [--terms 19] [--method auto] [--workers 4]
"""

import argparse
import logging
import time
from pathlib import Path

from treeavoid.classify import METHODS, ClassifyOptions, classify_patterns, write_report


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--leaves", type=int, nargs="+", default=[5, 7, 9])
    ap.add_argument("--terms", type=int, default=19)
    ap.add_argument("--method", choices=("auto",) + METHODS, default="auto")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--reflection", action="store_true")
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")

    args.out.mkdir(parents=True, exist_ok=True)
    opts = ClassifyOptions(method=args.method, reflection_reduced=args.reflection, workers=args.workers)
    for L in args.leaves:
        start = time.perf_counter()
        report = classify_patterns(3, L, args.terms, opts)
        path = args.out / f"ternary_L{L}_N{args.terms}.json"
        write_report(report, path)
        print(report.summary())
        print(f"-> {path} ({time.perf_counter() - start:.1f}s)\n")


if __name__ == "__main__":
    main()
