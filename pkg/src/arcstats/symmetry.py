"""Explicit bijections on perfect matchings.

* ``cn_involution`` swaps crossings with nestings and keeps alignments;
* ``length_complement`` sends ``ell`` to ``n^2 - n - ell``;
* ``main_theorem_witness`` composes the two, which turns the depth index into
  a shifted length.

The first two are built by the same pairing scheme: group matchings into
classes by a statistic key, sort each class canonically, and match the i-th
element of a class with the i-th element of its mirror class.  A class that
is its own mirror is folded onto itself (i-th with (size-1-i)-th), so the
result is always an involution.
"""

from __future__ import annotations

import csv
import io
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Hashable

from .core import PerfectMatching, format_matching, parse_matching
from .enumeration import perfect_matchings
from .stats import cr_ne_al, length_ds

DEFAULT_MAX_N = 6


class ContractError(RuntimeError):
    """A bijection with the requested statistic contract could not be built."""


@dataclass(frozen=True)
class BijectionTable:
    n: int
    forward: dict[PerfectMatching, PerfectMatching]

    def __call__(self, m: PerfectMatching) -> PerfectMatching:
        return self.forward[m]

    def __len__(self) -> int:
        return len(self.forward)

    def is_bijection(self) -> bool:
        return set(self.forward.values()) == set(self.forward)

    def is_involution(self) -> bool:
        return all(self.forward[self.forward[m]] == m for m in self.forward)

    def compose(self, inner: BijectionTable) -> BijectionTable:
        """``self o inner``: apply ``inner`` first."""
        if inner.n != self.n:
            raise ValueError("size mismatch")
        return BijectionTable(self.n, {m: self.forward[inner.forward[m]] for m in inner.forward})

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("source", "image"))
        for m in sorted(self.forward, key=PerfectMatching.sort_key):
            w.writerow((format_matching(m), format_matching(self.forward[m])))
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> BijectionTable:
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or rows[0] != ["source", "image"]:
            raise ValueError("missing header 'source,image'")
        forward = {parse_matching(a): parse_matching(b) for a, b in rows[1:]}
        if not forward:
            raise ValueError("empty table")
        n = next(iter(forward)).n_pairs
        return cls(n, forward)


def _check_bound(n: int, max_n: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the configured bound {max_n}")


def pair_classes(n: int, key: Callable[[PerfectMatching], Hashable],
                 mirror: Callable[[Hashable], Hashable]) -> BijectionTable:
    """Involution mapping each class ``key = K`` onto class ``mirror(K)``."""
    classes: dict[Hashable, list[PerfectMatching]] = defaultdict(list)
    for m in perfect_matchings(n):
        classes[key(m)].append(m)
    forward: dict[PerfectMatching, PerfectMatching] = {}
    for k, members in classes.items():
        mk = mirror(k)
        if mirror(mk) != k:
            raise ValueError(f"mirror is not an involution on key {k!r}")
        partners = classes.get(mk, [])
        if len(partners) != len(members):
            raise ContractError(
                f"class {k!r} has {len(members)} members but its mirror {mk!r} has {len(partners)}")
        members = sorted(members, key=PerfectMatching.sort_key)
        partners = sorted(partners, key=PerfectMatching.sort_key)
        if mk == k:
            partners = partners[::-1]
        for a, b in zip(members, partners):
            forward[a] = b
    return BijectionTable(n, forward)


def cn_involution(n: int, max_n: int = DEFAULT_MAX_N) -> BijectionTable:
    """Involution exchanging crossings and nestings, preserving alignments."""
    _check_bound(n, max_n)
    return pair_classes(n, cr_ne_al, lambda k: (k[1], k[0], k[2]))


def length_complement(n: int, max_n: int = DEFAULT_MAX_N) -> BijectionTable:
    """Involution with ``ell(psi(m)) = n^2 - n - ell(m)``."""
    _check_bound(n, max_n)
    top = n * n - n
    return pair_classes(n, length_ds, lambda r: top - r)


def main_theorem_witness(n: int, max_n: int = DEFAULT_MAX_N) -> BijectionTable:
    """``psi o phi``; satisfies ``dindex(m) = C(n+1, 2) + ell(w(m))``."""
    return length_complement(n, max_n).compose(cn_involution(n, max_n))
