#!/usr/bin/env python3
"""Exhaustively check the relabel, cut and colored-binary-tree bijections up to a leaf bound.

Prints one line per (map, n) with the domain size and whether the map is a
leaf-preserving bijection onto the expected avoider set. Exit status 1 on any failure.
"""

import argparse
import sys
import time

from treeavoid.bijections import (
    NAMED_RELABELS,
    cut_forward,
    cut_inverse,
    enumerate_colored,
    relabel,
    schroder_to_ternary,
    ternary_to_schroder,
)
from treeavoid.trees import avoiders
from treeavoid.words import parse_wordset, tree_to_wordset


def avoider_set(pattern, n):
    return {tree_to_wordset(T) for T in avoiders(parse_wordset(pattern).to_tree(), n)}


def check_relabels(n):
    for r in NAMED_RELABELS.values():
        src = avoider_set(str(r.source), n)
        image = {relabel(w, r.perm) for w in src}
        ok = len(image) == len(src) and image == avoider_set(str(r.target), n)
        yield f"relabel {r.name}", len(src), ok


def check_cut(n):
    A, B = avoider_set("{1,2}", n), avoider_set("{12}", n)
    fwd = {w: cut_forward(w) for w in A}
    ok = set(fwd.values()) == B and len(set(fwd.values())) == len(A)
    ok = ok and all(cut_inverse(v) == w for w, v in fwd.items())
    ok = ok and all(cut_forward(cut_inverse(v)) == v for v in B)
    yield "cut", len(A), ok


def check_schroder(n):
    if n % 2 == 0:
        return
    k = (n - 1) // 2
    trees = enumerate_colored(k)
    images = [schroder_to_ternary(B) for B in trees]
    ok = len(set(images)) == len(images)
    ok = ok and {tree_to_wordset(T) for T in images} == avoider_set("{1,3}", n)
    ok = ok and all(ternary_to_schroder(T) == B for B, T in zip(trees, images))
    yield "colored binary", len(trees), ok


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-leaves", type=int, default=15)
    args = ap.parse_args(argv)

    failures = 0
    for n in range(1, args.max_leaves + 1, 2):
        start = time.perf_counter()
        for check in (check_relabels, check_cut, check_schroder):
            for name, size, ok in check(n):
                failures += not ok
                print(f"n={n:<3} {name:<18} domain={size:<8} {'ok' if ok else 'FAIL'}")
        print(f"n={n:<3} done in {time.perf_counter() - start:.2f}s")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
