"""
Draw arc diagrams as SVG files.

Usage:
    python3 05_render_figures.py [--out DIR]

Writes the plain and extended diagrams of 1378|26|45, and the matching
1-3,2-4 with its crossing pair highlighted.
"""

import argparse
import os

from arcstats import parse_matching, parse_partition
from arcstats.render import RenderSpec, count_elements, render_svg


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", default="figures")
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)

    p = parse_partition("1378|26|45", 8)
    jobs = {
        "partition.svg": RenderSpec(p),
        "partition_extended.svg": RenderSpec(p, extended=True),
        "crossing.svg": RenderSpec(parse_matching("1-3,2-4"), highlight="crossings"),
    }
    for name, spec in jobs.items():
        svg = render_svg(spec)
        path = os.path.join(args.out, name)
        with open(path, "w") as fh:
            fh.write(svg)
        print(f"{path}: {count_elements(svg, 'arc')} arcs, {count_elements(svg, 'half-arc')} half-arcs")


if __name__ == "__main__":
    main()
