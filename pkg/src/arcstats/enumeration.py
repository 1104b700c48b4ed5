"""Exhaustive enumeration of set partitions and perfect matchings.

Orders are fixed so that exported tables are reproducible:

* set partitions come in lexicographic order of their restricted growth
  strings;
* perfect matchings come from matching the smallest free vertex to each
  larger free vertex in ascending order, recursively.

Both streams can be cut into shards (by an RGS prefix, or by the partner of
vertex 1) whose union is the full stream, which is how the parallel
aggregation below splits work.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .core import Arc, PerfectMatching, SetPartition, format_matching, format_partition
from .qpoly import QPolynomial
from .stats import PARTITION_STATS, STAT_FIELDS, partition_stats, stat_record

FAMILIES = ("matchings", "partitions")


def restricted_growth_strings(n: int, prefix: Sequence[int] = (0,)) -> Iterator[tuple[int, ...]]:
    """RGS of length ``n`` extending ``prefix``, in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    a = list(prefix)
    if not a or a[0] != 0 or len(a) > n:
        raise ValueError(f"bad RGS prefix {list(prefix)}")
    top = 0
    for x in a:
        if x > top + 1:
            raise ValueError(f"bad RGS prefix {list(prefix)}")
        top = max(top, x)

    def rec(i: int, m: int):
        if i == n:
            yield tuple(a)
            return
        for x in range(m + 2):
            a.append(x)
            yield from rec(i + 1, max(m, x))
            a.pop()

    yield from rec(len(a), top)


def set_partitions(n: int, prefix: Sequence[int] = (0,)) -> Iterator[SetPartition]:
    for rgs in restricted_growth_strings(n, prefix):
        yield SetPartition.from_rgs(rgs)


def perfect_matchings(n: int, first_partner: int | None = None) -> Iterator[PerfectMatching]:
    """All matchings on ``[2n]``; ``first_partner`` restricts to one shard."""
    if n < 1:
        raise ValueError("n must be positive")
    size = 2 * n
    if first_partner is not None and not 2 <= first_partner <= size:
        raise ValueError(f"vertex 1 cannot be matched to {first_partner}")
    pairs: list[tuple[int, int]] = []

    def rec(free: list[int]):
        if not free:
            yield PerfectMatching(n, tuple(Arc(a, b) for a, b in pairs))
            return
        v, rest = free[0], free[1:]
        for idx, w in enumerate(rest):
            if not pairs and first_partner is not None and w != first_partner:
                continue
            pairs.append((v, w))
            yield from rec(rest[:idx] + rest[idx + 1:])
            pairs.pop()

    yield from rec(list(range(1, size + 1)))


def shards(family: str, n: int) -> list:
    """Shard keys covering the whole family, in stream order."""
    if family == "matchings":
        return list(range(2, 2 * n + 1))
    if family == "partitions":
        if n == 1:
            return [(0,)]
        return [(0, 0), (0, 1)]
    raise ValueError(f"unknown family {family!r}")


def objects(family: str, n: int, shard=None) -> Iterator:
    if family == "matchings":
        return perfect_matchings(n, shard)
    if family == "partitions":
        return set_partitions(n, shard if shard is not None else (0,))
    raise ValueError(f"unknown family {family!r}")


def allowed_statistics(family: str) -> tuple[str, ...]:
    if family == "matchings":
        return STAT_FIELDS
    if family == "partitions":
        return PARTITION_STATS
    raise ValueError(f"unknown family {family!r}")


def _evaluator(family: str, stat_list: Sequence[str]):
    allowed = allowed_statistics(family)
    for s in stat_list:
        if s not in allowed:
            raise ValueError(f"unknown statistic {s!r} for {family}; expected one of {allowed}")
    if family == "matchings":
        return lambda m: tuple(getattr(stat_record(m), s) for s in stat_list)
    return lambda p: tuple(partition_stats(p)[s] for s in stat_list)


@dataclass
class DistributionTable:
    """Exact counts of objects per tuple of statistic values."""

    stats: tuple[str, ...]
    counts: dict[tuple[int, ...], int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def merge(self, other: DistributionTable) -> DistributionTable:
        if other.stats != self.stats:
            raise ValueError("cannot merge tables over different statistics")
        merged = Counter(self.counts)
        merged.update(other.counts)
        return DistributionTable(self.stats, dict(merged))

    def swapped(self, i: int, j: int) -> DistributionTable:
        """Same table with coordinates ``i`` and ``j`` exchanged in every key."""
        order = list(range(len(self.stats)))
        order[i], order[j] = order[j], order[i]
        return DistributionTable(
            tuple(self.stats[k] for k in order),
            {tuple(key[k] for k in order): c for key, c in self.counts.items()},
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, DistributionTable):
            return NotImplemented
        return dict(self.counts) == dict(other.counts)

    def rows(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.counts.items())


def _joint_chunk(family: str, n: int, stat_list: tuple[str, ...], shard) -> dict:
    ev = _evaluator(family, stat_list)
    return dict(Counter(ev(obj) for obj in objects(family, n, shard)))


def joint_distribution(family: str, n: int, stat_list: Sequence[str], jobs: int = 1) -> DistributionTable:
    stat_list = tuple(stat_list)
    _evaluator(family, stat_list)
    table = DistributionTable(stat_list)
    if jobs <= 1:
        return DistributionTable(stat_list, _joint_chunk(family, n, stat_list, None))
    keys = shards(family, n)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_joint_chunk, [family] * len(keys), [n] * len(keys),
                         [stat_list] * len(keys), keys)
        for part in parts:
            table = table.merge(DistributionTable(stat_list, part))
    return table


def generating_polynomial(family: str, n: int, statistic: str, jobs: int = 1) -> QPolynomial:
    """``sum(q ** statistic(obj))`` over the whole family."""
    table = joint_distribution(family, n, [statistic], jobs=jobs)
    return polynomial_from_table(table)


def polynomial_from_table(table: DistributionTable) -> QPolynomial:
    if len(table.stats) != 1:
        raise ValueError("need a single-statistic table")
    if not table.counts:
        return QPolynomial()
    top = max(k[0] for k in table.counts)
    dense = [0] * (top + 1)
    for (e,), c in table.counts.items():
        dense[e] += c
    return QPolynomial(tuple(dense))


def canonical_string(obj) -> str:
    if isinstance(obj, PerfectMatching):
        return format_matching(obj)
    return format_partition(obj)


def export_csv(family: str, n: int, out: io.TextIOBase | None = None) -> str:
    """One row per object: canonical string, then every applicable statistic."""
    buf = out if out is not None else io.StringIO()
    cols = allowed_statistics(family)
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("object",) + cols)
    for obj in objects(family, n):
        if family == "matchings":
            rec = stat_record(obj).to_dict()
        else:
            rec = partition_stats(obj)
        writer.writerow((canonical_string(obj),) + tuple(rec[c] for c in cols))
    return buf.getvalue() if out is None else ""
