"""Strong Bruhat order restricted to fixed-point-free involutions.

Comparison is by rank-matrix dominance: for a permutation ``w`` of ``[N]`` let
``r_w[i][j] = #{k <= i : w(k) <= j}``.  Then ``u <= w`` in Bruhat order iff
``r_u >= r_w`` entrywise, which puts the identity at the bottom.  On perfect
matchings the bottom is ``1-2,3-4,...`` and the top is the reversal
``1-2n,2-(2n-1),...``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .core import PerfectMatching, as_involution, format_matching
from .enumeration import perfect_matchings
from .qpoly import QPolynomial, q_double_factorial
from .stats import length_ds

DEFAULT_MAX_N = 5


def rank_matrix(m: PerfectMatching) -> np.ndarray:
    """``r[i-1][j-1] = #{k <= i : sigma(k) <= j}`` for the involution of ``m``."""
    sigma = as_involution(m)
    size = len(sigma)
    perm = np.zeros((size, size), dtype=np.int64)
    perm[np.arange(size), np.array(sigma) - 1] = 1
    return perm.cumsum(axis=0).cumsum(axis=1)


def bruhat_leq(a: PerfectMatching, b: PerfectMatching) -> bool:
    if a.n_pairs != b.n_pairs:
        raise ValueError(f"size mismatch: {a.n_pairs} vs {b.n_pairs} pairs")
    return bool(np.all(rank_matrix(a) >= rank_matrix(b)))


def _check_bound(n: int, max_n: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the configured bound {max_n}")


def comparability_matrix(n: int, max_n: int = DEFAULT_MAX_N, chunk: int = 64):
    """Matchings in enumeration order and the boolean matrix ``leq[a, b]``."""
    _check_bound(n, max_n)
    elems = list(perfect_matchings(n))
    ranks = np.stack([rank_matrix(m).ravel() for m in elems])
    count = len(elems)
    leq = np.empty((count, count), dtype=bool)
    for start in range(0, count, chunk):
        block = ranks[start:start + chunk, None, :]
        leq[start:start + chunk] = np.all(block >= ranks[None, :, :], axis=2)
    return elems, leq


def _compose(rel: np.ndarray) -> np.ndarray:
    # boolean relation product; float32 keeps BLAS speed and counts stay exact
    f = rel.astype(np.float32)
    return (f @ f) > 0


def covers_from_leq(leq: np.ndarray) -> np.ndarray:
    """Transitive reduction of a partial order given as a boolean matrix."""
    strict = leq & ~np.eye(len(leq), dtype=bool)
    return strict & ~_compose(strict)


def hasse_covers(n: int, max_n: int = DEFAULT_MAX_N) -> list[tuple[PerfectMatching, PerfectMatching]]:
    elems, leq = comparability_matrix(n, max_n)
    cov = covers_from_leq(leq)
    return [(elems[a], elems[b]) for a, b in zip(*np.nonzero(cov))]


def to_dot(n: int, max_n: int = DEFAULT_MAX_N) -> str:
    """Hasse diagram as a DOT digraph, nodes labelled by matching and ``ell``."""
    elems, leq = comparability_matrix(n, max_n)
    cov = covers_from_leq(leq)
    lines = [f"digraph bruhat_pm{2 * n} {{", "  rankdir=BT;"]
    for idx, m in enumerate(elems):
        lines.append(f'  m{idx} [label="{format_matching(m)}\\nell={length_ds(m)}"];')
    for a, b in zip(*np.nonzero(cov)):
        lines.append(f"  m{a} -> m{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def bottom_matching(n: int) -> PerfectMatching:
    return PerfectMatching.from_pairs((2 * i - 1, 2 * i) for i in range(1, n + 1))


def top_matching(n: int) -> PerfectMatching:
    return PerfectMatching.from_pairs((i, 2 * n + 1 - i) for i in range(1, n + 1))


@dataclass
class RankReport:
    n: int
    elements: int
    clauses: dict[str, bool] = field(default_factory=dict)
    counterexample: dict | None = None
    rank_polynomial: QPolynomial | None = None

    @property
    def passed(self) -> bool:
        return all(self.clauses.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "elements": self.elements,
            "passed": self.passed,
            "clauses": self.clauses,
            "counterexample": self.counterexample,
            "rank_polynomial": None if self.rank_polynomial is None else list(self.rank_polynomial.coeffs),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _fail(report: RankReport, clause: str, **detail) -> None:
    report.clauses[clause] = False
    if report.counterexample is None:
        report.counterexample = {"clause": clause, **detail}


def verify_rank_is_length(n: int, max_n: int = DEFAULT_MAX_N) -> RankReport:
    """Check the order is a poset graded by ``ell`` with the expected extremes."""
    elems, leq = comparability_matrix(n, max_n)
    count = len(elems)
    ell = np.array([length_ds(m) for m in elems])
    rep = RankReport(n, count)
    names = [format_matching(m) for m in elems]
    for clause in ("partial_order", "unique_minimum", "unique_maximum",
                   "covers_step_by_one", "monotone", "rank_generating_function"):
        rep.clauses[clause] = True

    eye = np.eye(count, dtype=bool)
    if not leq.diagonal().all():
        _fail(rep, "partial_order", reason="not reflexive")
    sym = leq & leq.T & ~eye
    if sym.any():
        a, b = map(int, np.argwhere(sym)[0])
        _fail(rep, "partial_order", reason="not antisymmetric", pair=[names[a], names[b]])
    trans = _compose(leq) & ~leq
    if trans.any():
        a, b = map(int, np.argwhere(trans)[0])
        _fail(rep, "partial_order", reason="not transitive", pair=[names[a], names[b]])

    strict = leq & ~eye
    minimal = np.flatnonzero(~strict.any(axis=0))
    maximal = np.flatnonzero(~strict.any(axis=1))
    bottom, top = bottom_matching(n), top_matching(n)
    if len(minimal) != 1 or elems[minimal[0]] != bottom or ell[minimal[0]] != 0:
        _fail(rep, "unique_minimum", minimal=[names[i] for i in minimal])
    if len(maximal) != 1 or elems[maximal[0]] != top or ell[maximal[0]] != n * n - n:
        _fail(rep, "unique_maximum", maximal=[names[i] for i in maximal])

    cov = covers_from_leq(leq)
    bad = np.argwhere(cov & (ell[None, :] - ell[:, None] != 1))
    if len(bad):
        a, b = map(int, bad[0])
        _fail(rep, "covers_step_by_one", pair=[names[a], names[b]],
              ell=[int(ell[a]), int(ell[b])])
    bad = np.argwhere(leq & (ell[:, None] > ell[None, :]))
    if len(bad):
        a, b = map(int, bad[0])
        _fail(rep, "monotone", pair=[names[a], names[b]], ell=[int(ell[a]), int(ell[b])])

    rank = _ranks_from_covers(cov, int(minimal[0]) if len(minimal) else 0)
    if rank is None:
        _fail(rep, "rank_generating_function", reason="poset is not graded")
    else:
        rep.rank_polynomial = QPolynomial.from_exponents(rank)
        if rep.rank_polynomial != q_double_factorial(n):
            _fail(rep, "rank_generating_function", got=str(rep.rank_polynomial),
                  expected=str(q_double_factorial(n)))
    return rep


def _ranks_from_covers(cov: np.ndarray, root: int) -> list[int] | None:
    """Breadth-first ranks from ``root``; ``None`` if two chains disagree."""
    rank = [-1] * len(cov)
    rank[root] = 0
    frontier = [root]
    while frontier:
        nxt = []
        for a in frontier:
            for b in np.flatnonzero(cov[a]):
                if rank[b] == -1:
                    rank[b] = rank[a] + 1
                    nxt.append(int(b))
                elif rank[b] != rank[a] + 1:
                    return None
        frontier = nxt
    if -1 in rank:
        return None
    return rank
