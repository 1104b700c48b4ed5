"""Statistics on arc diagrams.

Partition-level statistics (depths, depth index, intertwining number, span,
total vertex depth, crossing number) accept either a :class:`SetPartition` or
a :class:`PerfectMatching`; crossings/nestings/alignments and the length
``ell`` are defined for matchings only.

The ``*_bruteforce`` functions are plain all-pairs scans.  They are kept as
the reference against which the faster routines are tested.
"""

from __future__ import annotations

import json
from bisect import bisect_right, insort
from dataclasses import asdict, dataclass, fields
from itertools import accumulate, combinations
from math import comb

from .core import (
    Arc,
    PartitionError,
    PerfectMatching,
    SetPartition,
    extended_arcs,
    as_partition,
)

Diagram = SetPartition | PerfectMatching


def span(a: Arc) -> int:
    """Number of vertices strictly below the arc."""
    return a.hi - a.lo - 1


def _pairs(p: Diagram) -> list[tuple[int, int]]:
    # arcs as plain (lo, hi) tuples, skipping Arc construction on hot paths
    if isinstance(p, SetPartition):
        return [(b[i], b[i + 1]) for b in p.blocks for i in range(len(b) - 1)]
    return [(a.lo, a.hi) for a in p.arcs]


def _depths(size: int, pairs) -> list[int]:
    diff = [0] * (size + 2)
    for lo, hi in pairs:
        diff[lo + 1] += 1
        diff[hi] -= 1
    return list(accumulate(diff[1:size + 1]))


def vertex_depths(p: Diagram) -> list[int]:
    """Depths of vertices ``1..N`` (index 0 is vertex 1)."""
    return _depths(p.ground_size, _pairs(p))


def vertex_depth(p: Diagram, v: int) -> int:
    if not 1 <= v <= p.ground_size:
        raise PartitionError(f"vertex {v} outside [1, {p.ground_size}]")
    return sum(1 for a in p.arcs if a.lo < v < a.hi)


def arc_depth(p: Diagram, a: Arc) -> int:
    if a not in p.arcs:
        raise PartitionError(f"{a} is not an arc of {p}")
    return sum(1 for b in p.arcs if b.lo < a.lo and a.hi < b.hi)


def _nested_pairs(pairs) -> int:
    # sum of arc depths; pairs come sorted by lo, so only b inside a is possible
    count = 0
    for (alo, ahi), (blo, bhi) in combinations(pairs, 2):
        if alo < blo and bhi < ahi:
            count += 1
    return count


def _crossing_pairs(pairs) -> int:
    count = 0
    for (alo, ahi), (blo, bhi) in combinations(pairs, 2):
        if alo < blo < ahi < bhi:
            count += 1
    return count


def crossing_number(p: Diagram) -> int:
    """Crossing pairs among the ordinary arcs (no half-arcs)."""
    return _crossing_pairs(sorted(_pairs(p)))


def total_vertex_depth(p: Diagram) -> int:
    return sum(vertex_depths(p))


def span_sum(p: Diagram) -> int:
    return sum(span(a) for a in p.arcs)


def depth_index(p: Diagram) -> int:
    size = p.ground_size
    pairs = sorted(_pairs(p))
    k = len(pairs)
    top = k * size - k * (k + 1) // 2
    return top - sum(_depths(size, pairs)) + _nested_pairs(pairs)


def intertwining_number(p: Diagram) -> int:
    """Crossings in the extended arc diagram.

    Split by arc type: ordinary x ordinary pairs give the crossing number; a
    left half-arc into opener ``o`` crosses every arc strictly covering ``o``;
    a right half-arc out of closer ``c`` crosses every arc covering ``c``; and
    a left/right half-arc pair crosses iff ``c < o``.
    """
    pairs = sorted(_pairs(p))
    depth = _depths(p.ground_size, pairs)
    openers, closers = p.openers, p.closers
    half = sum([depth[o - 1] for o in openers]) + sum([depth[c - 1] for c in closers])
    lr = sum([bisect_right(closers, o - 1) for o in openers])
    return _crossing_pairs(pairs) + half + lr


def intertwining_number_bruteforce(p: Diagram) -> int:
    ext = extended_arcs(as_partition(p))
    return sum(1 for e, f in combinations(ext, 2) if e.crosses(f))


def cr_ne_al(m: PerfectMatching) -> tuple[int, int, int]:
    """``(crossings, nestings, alignments)`` by a left-to-right sweep."""
    partner = {}
    for a in m.arcs:
        partner[a.lo] = a.hi
        partner[a.hi] = a.lo
    open_los: list[int] = []
    closed = 0
    cro = nst = al = 0
    for v in range(1, m.ground_size + 1):
        w = partner[v]
        if w > v:
            al += closed
            insort(open_los, v)
        else:
            idx = bisect_right(open_los, w)
            still_open = len(open_los) - idx
            # every vertex strictly inside (w, v) opened an arc that either
            # is still open (crossing) or already closed inside (nesting)
            opened_inside = sum(1 for u in range(w + 1, v) if partner[u] > u)
            cro += still_open
            nst += opened_inside - still_open
            open_los.pop(idx - 1)
            closed += 1
    return cro, nst, al


def cr_ne_al_bruteforce(m: PerfectMatching) -> tuple[int, int, int]:
    cro = nst = al = 0
    for e, f in combinations(m.arcs, 2):
        (i, j), (k, l) = (e, f) if e.lo < f.lo else (f, e)
        if i < k < j < l:
            cro += 1
        elif i < k < l < j:
            nst += 1
        elif i < j < k < l:
            al += 1
    return cro, nst, al


def length_ds(m: PerfectMatching) -> int:
    """Span sum minus crossing number; the Bruhat rank on fixed-point-free involutions."""
    return span_sum(m) - crossing_number(m)


@dataclass(frozen=True)
class StatRecord:
    dindex: int
    inumber: int
    cro: int
    nst: int
    al: int
    tvd: int
    ell: int
    cnumber: int
    span_sum: int

    def to_dict(self) -> dict[str, int]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


STAT_FIELDS = tuple(f.name for f in fields(StatRecord))


def stat_record(m: PerfectMatching) -> StatRecord:
    cro, nst, al = cr_ne_al(m)
    return StatRecord(
        dindex=depth_index(m),
        inumber=intertwining_number(m),
        cro=cro,
        nst=nst,
        al=al,
        tvd=total_vertex_depth(m),
        ell=length_ds(m),
        cnumber=crossing_number(m),
        span_sum=span_sum(m),
    )


PARTITION_STATS = ("dindex", "inumber", "tvd", "cnumber", "span_sum")


def partition_stats(p: Diagram) -> dict[str, int]:
    """The statistics that make sense for an arbitrary set partition."""
    return {
        "dindex": depth_index(p),
        "inumber": intertwining_number(p),
        "tvd": total_vertex_depth(p),
        "cnumber": crossing_number(p),
        "span_sum": span_sum(p),
    }


def statistic(name: str, obj: Diagram) -> int:
    """Evaluate a statistic by name."""
    funcs = {
        "dindex": depth_index,
        "inumber": intertwining_number,
        "tvd": total_vertex_depth,
        "cnumber": crossing_number,
        "span_sum": span_sum,
    }
    if name in funcs:
        return funcs[name](obj)
    if name not in STAT_FIELDS:
        raise KeyError(f"unknown statistic {name!r}")
    if not isinstance(obj, PerfectMatching):
        raise PartitionError(f"statistic {name!r} is only defined for perfect matchings")
    if name == "ell":
        return length_ds(obj)
    return dict(zip(("cro", "nst", "al"), cr_ne_al(obj)))[name]


def max_dindex(n_pairs: int) -> int:
    return n_pairs ** 2 + comb(n_pairs, 2)
