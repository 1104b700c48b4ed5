"""
Two involutions on matchings and the bijection they compose to.

Usage:
    python3 04_symmetries.py [--n N]

phi swaps the crossing and nesting counts and keeps alignments. psi sends
length l to n^2-n-l. Their composite turns the depth index into the
length, shifted by C(n+1,2).
"""

import argparse
from math import comb

from arcstats import cr_ne_al, depth_index, length_ds, perfect_matchings
from arcstats.symmetry import cn_involution, length_complement, main_theorem_witness


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, default=3)
    args = ap.parse_args()
    n = args.n
    phi, psi, w = cn_involution(n), length_complement(n), main_theorem_witness(n)

    print(f"{'matching':<16}{'(cr,ne,al)':<12}{'phi':<16}{'ell':>4}{'psi':>18}{'dindex':>8}  check")
    for m in perfect_matchings(n):
        d = depth_index(m)
        ok = d == comb(n + 1, 2) + length_ds(w(m))
        print(f"{str(m):<16}{str(cr_ne_al(m)):<12}{str(phi(m)):<16}{length_ds(m):>4}"
              f"{str(psi(m)):>18}{d:>8}  {'ok' if ok else 'BAD'}")
    print()
    print("phi is an involution:", phi.is_involution())
    print("psi is an involution:", psi.is_involution())


if __name__ == "__main__":
    main()
