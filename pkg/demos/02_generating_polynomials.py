"""
Generating polynomials of the matching statistics, next to [2n-1]_q!!.

Usage:
    python3 02_generating_polynomials.py [--max-n N]

For each n the length, depth index and intertwining number are summed over
all perfect matchings of [2n]. The last two are shifted copies of the first.
"""

import argparse
from math import comb

from arcstats import generating_polynomial, joint_distribution, q_double_factorial


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()

    for n in range(1, args.max_n + 1):
        qdf = q_double_factorial(n)
        print(f"n = {n}:  [{2 * n - 1}]_q!! = {qdf}")
        for stat, shift in (("ell", 0), ("dindex", comb(n + 1, 2)), ("inumber", comb(n, 2))):
            poly = generating_polynomial("matchings", n, stat)
            tag = "ok" if poly == qdf.shift(shift) else "DIFFERS"
            print(f"  {stat:<8} = q^{shift} * [{2 * n - 1}]_q!!  ({tag})")
        print()

    # crossings and nestings are equidistributed, and symmetric jointly
    n = args.max_n
    table = joint_distribution("matchings", n, ["cro", "nst"])
    print(f"joint (cro, nst) counts for n = {n}:")
    top = max(max(k) for k in table.counts)
    print("      " + " ".join(f"{j:>4}" for j in range(top + 1)))
    for c in range(top + 1):
        row = " ".join(f"{table.counts.get((c, j), 0):>4}" for j in range(top + 1))
        print(f"  {c:>2}  {row}")
    print("symmetric:", table == table.swapped(0, 1))


if __name__ == "__main__":
    main()
