"""Set partitions, perfect matchings and their arc diagrams.

A set partition of ``[n] = {1, ..., n}`` is stored in standard form: every
block ascends, and blocks are ordered by their minima.  Its arc diagram joins
consecutive elements of each block; the extended diagram adds a half-arc from
far left into every opener (block minimum) and one from every closer (block
maximum) out to far right.

Vertices are 1-based throughout.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union


class PartitionError(ValueError):
    """Raised for malformed set partitions or matchings."""


class Sentinel(enum.Enum):
    LEFT_INF = "-inf"
    RIGHT_INF = "+inf"

    def __repr__(self) -> str:
        return self.name


LEFT_INF = Sentinel.LEFT_INF
RIGHT_INF = Sentinel.RIGHT_INF

Endpoint = Union[int, Sentinel]


def endpoint_key(x: Endpoint) -> tuple[int, int]:
    """Sort key realising LEFT_INF < 1 < 2 < ... < RIGHT_INF."""
    if x is LEFT_INF:
        return (0, 0)
    if x is RIGHT_INF:
        return (2, 0)
    return (1, x)


@dataclass(frozen=True, order=True)
class Arc:
    lo: int
    hi: int

    def __post_init__(self):
        if not (isinstance(self.lo, int) and isinstance(self.hi, int)):
            raise PartitionError(f"arc endpoints must be integers: {self.lo!r}, {self.hi!r}")
        if not 1 <= self.lo < self.hi:
            raise PartitionError(f"invalid arc ({self.lo}, {self.hi})")

    def __iter__(self):
        yield self.lo
        yield self.hi

    def __str__(self) -> str:
        return f"{self.lo}-{self.hi}"


@dataclass(frozen=True)
class GeneralizedArc:
    """An arc whose endpoints may be the sentinels LEFT_INF / RIGHT_INF."""

    lo: Endpoint
    hi: Endpoint

    def __post_init__(self):
        if isinstance(self.lo, Sentinel) and isinstance(self.hi, Sentinel):
            raise PartitionError("a generalized arc has at most one sentinel endpoint")
        if self.lo is RIGHT_INF or self.hi is LEFT_INF:
            raise PartitionError(f"misplaced sentinel in ({self.lo!r}, {self.hi!r})")
        if not endpoint_key(self.lo) < endpoint_key(self.hi):
            raise PartitionError(f"invalid generalized arc ({self.lo!r}, {self.hi!r})")

    @property
    def is_half_arc(self) -> bool:
        return isinstance(self.lo, Sentinel) or isinstance(self.hi, Sentinel)

    def sort_key(self):
        return (endpoint_key(self.lo), endpoint_key(self.hi))

    def crosses(self, other: GeneralizedArc) -> bool:
        """True iff the two arcs satisfy i < k < j < l in some order."""
        i, j = endpoint_key(self.lo), endpoint_key(self.hi)
        k, l = endpoint_key(other.lo), endpoint_key(other.hi)
        return i < k < j < l or k < i < l < j


def _split_block(token: str, n: int) -> list[int]:
    token = token.strip()
    if not token:
        raise PartitionError("empty block")
    if "," in token or n >= 10:
        parts = [t.strip() for t in token.split(",")]
    else:
        parts = list(token)
    out = []
    for t in parts:
        if not t.isdigit():
            raise PartitionError(f"bad element token {t!r}")
        out.append(int(t))
    return out


@dataclass(frozen=True)
class SetPartition:
    """A set partition of ``[n]`` in standard form.

    Blocks may be given in any order; they are canonicalised on construction.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise PartitionError(f"ground set size must be a positive integer, got {self.n!r}")
        seen: set[int] = set()
        canon = []
        for block in self.blocks:
            block = tuple(sorted(block))
            if not block:
                raise PartitionError("empty block")
            for x in block:
                if not isinstance(x, int) or not 1 <= x <= self.n:
                    raise PartitionError(f"element {x!r} outside [1, {self.n}]")
                if x in seen:
                    raise PartitionError(f"duplicate element {x}")
                seen.add(x)
            canon.append(block)
        if len(seen) != self.n:
            missing = sorted(set(range(1, self.n + 1)) - seen)
            raise PartitionError(f"missing elements {missing}")
        canon.sort(key=lambda b: b[0])
        object.__setattr__(self, "blocks", tuple(canon))

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> SetPartition:
        """Build from a restricted growth string (0-based block labels)."""
        blocks: list[list[int]] = []
        for v, label in enumerate(rgs, start=1):
            if label == len(blocks):
                blocks.append([v])
            elif 0 <= label < len(blocks):
                blocks[label].append(v)
            else:
                raise PartitionError(f"not a restricted growth string: {list(rgs)}")
        if not blocks:
            raise PartitionError("empty restricted growth string")
        # blocks of a valid RGS are already in standard form
        self = object.__new__(cls)
        object.__setattr__(self, "n", len(rgs))
        object.__setattr__(self, "blocks", tuple(map(tuple, blocks)))
        return self

    @classmethod
    def from_json(cls, text: str | dict) -> SetPartition:
        data = json.loads(text) if isinstance(text, str) else text
        return cls(int(data["n"]), tuple(tuple(b) for b in data["blocks"]))

    @property
    def ground_size(self) -> int:
        return self.n

    @cached_property
    def rgs(self) -> tuple[int, ...]:
        labels = [0] * self.n
        for idx, block in enumerate(self.blocks):
            for x in block:
                labels[x - 1] = idx
        return tuple(labels)

    @property
    def openers(self) -> tuple[int, ...]:
        return tuple(b[0] for b in self.blocks)

    @property
    def closers(self) -> tuple[int, ...]:
        return tuple(sorted(b[-1] for b in self.blocks))

    @cached_property
    def arcs(self) -> tuple[Arc, ...]:
        return tuple(partition_arcs(self))

    def is_matching(self) -> bool:
        return all(len(b) == 2 for b in self.blocks)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "blocks": [list(b) for b in self.blocks]})

    def __str__(self) -> str:
        return format_partition(self)


def format_partition(p: SetPartition) -> str:
    """Bar notation; elements are comma-separated once ``n >= 10``."""
    sep = "," if p.n >= 10 else ""
    return "|".join(sep.join(str(x) for x in b) for b in p.blocks)


def parse_partition(text: str, n: int) -> SetPartition:
    """Parse bar notation such as ``"1378|26|45"``.

    For ``n <= 9`` each digit is an element unless the block is
    comma-separated; for ``n >= 10`` commas are mandatory inside blocks.
    """
    if not text.strip():
        raise PartitionError("empty partition text")
    blocks = tuple(tuple(_split_block(tok, n)) for tok in text.split("|"))
    return SetPartition(n, blocks)


def partition_arcs(p: SetPartition) -> list[Arc]:
    arcs = [Arc(a, b) for block in p.blocks for a, b in zip(block, block[1:])]
    arcs.sort()
    return arcs


def extended_arcs(p: SetPartition) -> list[GeneralizedArc]:
    """Arcs of ``p`` plus the left half-arcs into openers and right half-arcs out of closers."""
    out = [GeneralizedArc(a.lo, a.hi) for a in p.arcs]
    out += [GeneralizedArc(LEFT_INF, o) for o in p.openers]
    out += [GeneralizedArc(c, RIGHT_INF) for c in p.closers]
    out.sort(key=GeneralizedArc.sort_key)
    return out


@dataclass(frozen=True)
class PerfectMatching:
    """A perfect matching on ``[2 * n_pairs]``, arcs sorted by left endpoint."""

    n_pairs: int
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        arcs = tuple(sorted(Arc(*a) if not isinstance(a, Arc) else a for a in self.arcs))
        size = 2 * self.n_pairs
        if self.n_pairs < 1 or len(arcs) != self.n_pairs:
            raise PartitionError(f"expected {self.n_pairs} arcs, got {len(arcs)}")
        touched = sorted(v for a in arcs for v in a)
        if touched != list(range(1, size + 1)):
            raise PartitionError(f"arcs do not cover [1, {size}] exactly once: {arcs}")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> PerfectMatching:
        arcs = [Arc(min(a, b), max(a, b)) for a, b in pairs]
        return cls(len(arcs), tuple(arcs))

    @property
    def ground_size(self) -> int:
        return 2 * self.n_pairs

    @cached_property
    def partition(self) -> SetPartition:
        return SetPartition(self.ground_size, tuple((a.lo, a.hi) for a in self.arcs))

    # set-partition view, so matchings plug into partition statistics directly
    @property
    def n(self) -> int:
        return self.ground_size

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return self.partition.blocks

    @property
    def openers(self) -> tuple[int, ...]:
        return tuple(a.lo for a in self.arcs)

    @property
    def closers(self) -> tuple[int, ...]:
        return tuple(sorted(a.hi for a in self.arcs))

    def sort_key(self) -> tuple[int, ...]:
        return as_involution(self)

    def __lt__(self, other: PerfectMatching) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return format_matching(self)


def format_matching(m: PerfectMatching) -> str:
    return ",".join(str(a) for a in m.arcs)


def parse_matching(text: str) -> PerfectMatching:
    """Parse a pair list such as ``"1-4,2-3"``."""
    pairs = []
    for tok in text.split(","):
        tok = tok.strip()
        lo, sep, hi = tok.partition("-")
        if not sep or not lo.strip().isdigit() or not hi.strip().isdigit():
            raise PartitionError(f"bad pair token {tok!r}")
        pairs.append((int(lo), int(hi)))
    return PerfectMatching.from_pairs(pairs)


def matching_from_partition(p: SetPartition) -> PerfectMatching:
    if p.n % 2:
        raise PartitionError(f"odd ground set size {p.n}")
    for b in p.blocks:
        if len(b) != 2:
            raise PartitionError(f"block {b} has size {len(b)}, expected 2")
    return PerfectMatching(p.n // 2, tuple(Arc(*b) for b in p.blocks))


def as_involution(m: PerfectMatching) -> tuple[int, ...]:
    """One-line notation of the fixed-point-free involution; entry ``v - 1`` is the partner of ``v``."""
    sigma = [0] * m.ground_size
    for a in m.arcs:
        sigma[a.lo - 1] = a.hi
        sigma[a.hi - 1] = a.lo
    return tuple(sigma)


def matching_from_involution(sigma: Sequence[int]) -> PerfectMatching:
    size = len(sigma)
    if size % 2:
        raise PartitionError("odd permutation length")
    pairs = []
    for i, j in enumerate(sigma, start=1):
        if not 1 <= j <= size or sigma[j - 1] != i or i == j:
            raise PartitionError(f"not a fixed-point-free involution: {list(sigma)}")
        if i < j:
            pairs.append((i, j))
    return PerfectMatching.from_pairs(pairs)


def as_partition(obj: SetPartition | PerfectMatching) -> SetPartition:
    return obj.partition if isinstance(obj, PerfectMatching) else obj
