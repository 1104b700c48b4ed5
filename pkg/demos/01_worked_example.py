"""
Walk through the statistics of one set partition, 1378|26|45 on [8].

Usage:
    python3 01_worked_example.py [--partition TEXT] [--n N]

Prints the arcs, the extended arcs, every vertex depth and arc depth, and
then the depth index and intertwining number, which always add up to C(N,2).
"""

import argparse
from math import comb

from arcstats import (
    arc_depth,
    crossing_number,
    depth_index,
    extended_arcs,
    intertwining_number,
    parse_partition,
    total_vertex_depth,
    vertex_depth,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--partition", default="1378|26|45")
    ap.add_argument("--n", type=int, default=8)
    args = ap.parse_args()

    p = parse_partition(args.partition, args.n)
    print(f"partition   {p}")
    print(f"arcs        {' '.join(str(a) for a in p.arcs)}")
    print(f"extended    {' '.join(str(a) for a in extended_arcs(p))}")
    print()

    print("vertex  depth")
    for v in range(1, p.n + 1):
        print(f"{v:>6}  {vertex_depth(p, v)}")
    print()
    print("arc     depth")
    for a in p.arcs:
        print(f"{str(a):>6}  {arc_depth(p, a)}")
    print()

    d, i = depth_index(p), intertwining_number(p)
    print(f"tvd = {total_vertex_depth(p)}, crossings = {crossing_number(p)}")
    print(f"dindex = {d}, inumber = {i}, sum = {d + i}, C({p.n},2) = {comb(p.n, 2)}")


if __name__ == "__main__":
    main()
