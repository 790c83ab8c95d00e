#!/usr/bin/env python3
"""Golden-file generator for the equilateral-triangle candidate table.

Pure-integer brute force, independent of any polynomial machinery:
enumerate tiles directly as coprime pairs a < b <= bmax with

    c^2 = a^2 + b^2 - ab   (gamma = pi/3)    or
    c^2 = a^2 + b^2 + ab   (gamma = 2pi/3)

a perfect square, then test the squared area equation

    (p a + q b +/- r c)^2 == N a b

over all (p, q, r) within the boundary bounds (p, q >= 1 for pi/3,
p, q >= 0 for 2pi/3, r >= 2, p + q + r <= floor(N/6) + 1).  The +/- covers
both branches introduced by squaring the area equation.

Usage: gen_golden_equilateral.py [--nmax 90] [--bmax 120] [-o out.json]
"""

import argparse
import json
import sys
from math import gcd, isqrt


def tiles(bmax, sign):
    out = []
    for b in range(2, bmax + 1):
        for a in range(1, b):
            if gcd(a, b) != 1:
                continue
            cc = a * a + b * b + sign * a * b
            c = isqrt(cc)
            if c * c == cc:
                out.append((a, b, c))
    return out


def candidates(N, sign, tile_list):
    pq_min = 1 if sign == -1 else 0
    bound = N // 6 + 1
    found = {}
    for (a, b, c) in tile_list:
        Nab = N * a * b
        X = isqrt(Nab)
        if X * X != Nab:
            continue
        for p in range(pq_min, bound + 1):
            for q in range(pq_min, bound + 1 - p):
                for r in range(2, bound + 1 - p - q):
                    base = p * a + q * b
                    if base + r * c == X or abs(base - r * c) == X:
                        key = (a, b, c)
                        if key not in found:
                            found[key] = {"tile": [a, b, c],
                                          "s": f"{a}/{b}",
                                          "p": p, "q": q, "r": r,
                                          "multiplicity": 0}
                        found[key]["multiplicity"] += 1
    return [found[k] for k in sorted(found)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=90)
    ap.add_argument("--bmax", type=int, default=120)
    ap.add_argument("-o", "--out", default="../golden/equilateral.json")
    args = ap.parse_args()

    golden = {"pi3": {}, "2pi3": {}, "bmax": args.bmax}
    for name, sign in (("pi3", -1), ("2pi3", 1)):
        tl = tiles(args.bmax, sign)
        print(f"{name}: {len(tl)} integer tiles with b <= {args.bmax}",
              file=sys.stderr)
        for N in range(3, args.nmax + 1):
            cs = candidates(N, sign, tl)
            if cs:
                print(f"{name} N={N}: " +
                      ", ".join(str(tuple(c['tile'])) for c in cs),
                      file=sys.stderr)
            golden[name][str(N)] = cs

    with open(args.out, "w") as f:
        json.dump(golden, f, indent=1)
    print(f"wrote {args.out}", file=sys.stderr)


if __name__ == "__main__":
    main()
