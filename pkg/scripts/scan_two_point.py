"""Scan floor-improved two-point codes C_Omega(D, H + floor(H)) on GGS(2,3).

For every H = aP0 + bP1 + cPinf in a box, G = H + floor(H) is formed and the
floor bound is compared with the Goppa bound.  Output is CSV on stdout, one
row per H whose floor bound beats the Goppa bound for G.
"""

from __future__ import annotations

import argparse
import csv
import sys

from ggscodes.curve import curve_from_params
from ggscodes.floor import floor_code_bound, floor_divisor
from ggscodes.rrspace import SupportedDivisor, ell


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-a", type=int, default=10)
    ap.add_argument("--max-b", type=int, default=10)
    ap.add_argument("--max-c", type=int, default=30)
    args = ap.parse_args()
    curve = curve_from_params(2, 1, 3)
    g, N = curve.g, curve.N
    out = csv.writer(sys.stdout)
    out.writerow(["a", "b", "c", "floor", "k", "d_floor", "d_goppa", "singleton_defect"])
    best: dict[int, int] = {}
    for a in range(args.max_a + 1):
        for b in range(args.max_b + 1):
            for c in range(args.max_c + 1):
                H = SupportedDivisor.make(2, [a, b], [], c)
                if ell(curve, H) < 2:
                    continue
                G = H + floor_divisor(curve, H)
                if not 2 * g - 2 < G.degree < N:
                    continue
                k = N + g - 1 - G.degree
                d_floor = floor_code_bound(curve, H)
                d_goppa = G.degree - (2 * g - 2)
                if d_floor > d_goppa:
                    out.writerow([a, b, c, floor_divisor(curve, H), k, d_floor, d_goppa, N + 1 - k - d_floor])
                    best[k] = max(best.get(k, 0), d_floor)
    print(f"# best floor bound per dimension: {dict(sorted(best.items()))}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
