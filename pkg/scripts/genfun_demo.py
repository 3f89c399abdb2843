#!/usr/bin/env python3
"""Exercise the genus-one generating-function identities: for each prime
in {11, 17, 19} and a range of weights, verify both denominator variants
on a square window and report the gap classification."""

import argparse
import sys
import time

from whmf.genfun import genfun_params, genfun_check


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, nargs="+", default=[11, 17, 19])
    ap.add_argument("--k", type=int, nargs="+", default=None,
                    help="weights (default: -(p-1)+2, 0, 2, 4, 6)")
    ap.add_argument("--window", type=int, default=15)
    args = ap.parse_args()
    bad = 0
    for p in args.p:
        ks = args.k if args.k else [-(p - 1) + 2, 0, 2, 4, 6]
        for k in ks:
            t0 = time.time()
            params = genfun_params(p, k)
            ok = all(genfun_check(p, k, args.window, args.window, v).passed
                     for v in ("f", "g"))
            print("p=%2d k=%4d n0=%3d %-7s %-4s %6.1fs"
                  % (p, k, params.n0,
                     "gap" if params.gap_case else "no-gap",
                     "ok" if ok else "FAIL", time.time() - t0), flush=True)
            if not ok:
                bad += 1
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
