#!/usr/bin/env python3
"""Print the gap data of the holomorphic echelon bases for every even
weight 4 <= k <= p-3 (plus weight 2 and p-1) at the chosen primes."""

import argparse
import time

from whmf.spaces import gap_sets, dim_M, dim_S


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, nargs="+",
                    default=[11, 17, 19, 23, 29, 31, 37])
    args = ap.parse_args()
    t0 = time.time()
    print("%4s %4s %6s %6s  %-18s %-18s" %
          ("p", "k", "dimM", "dimS", "missM", "missS"))
    for p in args.p:
        for k in range(2, p, 2):
            rep = gap_sets(p, k)
            print("%4d %4d %6d %6d  %-18s %-18s" %
                  (p, k, dim_M(p, k), dim_S(p, k),
                   sorted(rep.missM) or "-", sorted(rep.missS) or "-"),
                  flush=True)
    print("total %.1fs" % (time.time() - t0))


if __name__ == "__main__":
    main()
