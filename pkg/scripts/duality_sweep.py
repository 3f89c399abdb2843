#!/usr/bin/env python3
"""Sweep Zagier duality over full residue-class coverage of k mod (p-1).

For each prime, weights are chosen so that every even residue class
k mod (p-1) is hit, including at least one negative weight per class;
with --positive the positive representatives 2..p-1 are swept as well.
Exits nonzero if any pairing violation is found.
"""

import argparse
import sys
import time

from whmf.duality import duality_check


def weights_for(p, include_positive):
    ks = [r - (p - 1) for r in range(0, p - 1, 2)]
    if include_positive:
        ks += list(range(2, p, 2))
    return ks


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, nargs="+",
                    default=[11, 17, 19, 23, 29, 31, 37])
    ap.add_argument("--box", type=int, default=None,
                    help="box size (default: 40 for p <= 23, else 20)")
    ap.add_argument("--positive", action="store_true",
                    help="also sweep the positive weights 2..p-1")
    args = ap.parse_args()
    bad = 0
    t_all = time.time()
    for p in args.p:
        box = args.box if args.box is not None else (40 if p <= 23 else 20)
        for k in weights_for(p, args.positive):
            t0 = time.time()
            rep = duality_check(p, k, box, box)
            status = "ok" if rep.passed else "FAIL (%d)" % len(rep.violations)
            print("p=%2d k=%4d box=%d  %-9s %6.1fs"
                  % (p, k, box, status, time.time() - t0), flush=True)
            if not rep.passed:
                bad += 1
    print("total %.1fs, %d failing sweeps" % (time.time() - t_all, bad),
          flush=True)
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
