import json
from itertools import product

import numpy as np
import pytest

from arcstats import PerfectMatching, as_involution, length_ds, perfect_matchings
from arcstats.bruhat import (
    bottom_matching,
    bruhat_leq,
    comparability_matrix,
    covers_from_leq,
    hasse_covers,
    rank_matrix,
    to_dot,
    top_matching,
    verify_rank_is_length,
)
from arcstats.qpoly import QPolynomial, q_double_factorial

import oracles

M = PerfectMatching.from_pairs
ALIGN, CROSS, NEST = M([(1, 2), (3, 4)]), M([(1, 3), (2, 4)]), M([(1, 4), (2, 3)])


def test_rank_matrix():
    r = rank_matrix(ALIGN)
    assert r.shape == (4, 4)
    assert r[-1, -1] == 4
    assert (np.diff(r, axis=0) >= 0).all() and (np.diff(r, axis=1) >= 0).all()
    # sigma = 2143: r[i][j] = #{k <= i : sigma(k) <= j}
    assert r.tolist() == [[0, 1, 1, 1], [1, 2, 2, 2], [1, 2, 2, 3], [1, 2, 3, 4]]


def test_leq_examples():
    assert bruhat_leq(ALIGN, CROSS)
    assert bruhat_leq(CROSS, NEST)
    assert not bruhat_leq(NEST, ALIGN)
    with pytest.raises(ValueError):
        bruhat_leq(ALIGN, M([(1, 2)]))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_leq_matches_transposition_generated_order(n):
    """Rank-matrix dominance agrees with Bruhat order built from transpositions in S_2n."""
    elems = list(perfect_matchings(n))
    sigmas = [as_involution(m) for m in elems]
    up = oracles.bruhat_up_sets(sigmas)
    for (a, sa), (b, sb) in product(zip(elems, sigmas), repeat=2):
        assert bruhat_leq(a, b) == (sb in up[sa])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_partial_order_axioms(n):
    _, leq = comparability_matrix(n)
    k = len(leq)
    assert leq.diagonal().all()
    assert not (leq & leq.T & ~np.eye(k, dtype=bool)).any()
    comp = (leq.astype(int) @ leq.astype(int)) > 0
    assert not (comp & ~leq).any()


def test_partial_order_spot_check_n5():
    elems, leq = comparability_matrix(5)
    rng = np.random.default_rng(7)
    for _ in range(200):
        a, b, c = rng.integers(0, len(elems), 3)
        if leq[a, b] and leq[b, c]:
            assert leq[a, c]
        if a != b:
            assert not (leq[a, b] and leq[b, a])
        assert leq[a, b] == bruhat_leq(elems[a], elems[b])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_monotone_in_length(n):
    elems, leq = comparability_matrix(n)
    ell = np.array([length_ds(m) for m in elems])
    assert not (leq & (ell[:, None] > ell[None, :])).any()


def test_hasse_covers_examples():
    assert hasse_covers(1) == []
    assert hasse_covers(2) == [(ALIGN, CROSS), (CROSS, NEST)]
    for a, b in hasse_covers(3):
        assert length_ds(b) == length_ds(a) + 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_covers_by_brute_force_reduction(n):
    elems, leq = comparability_matrix(n)
    k = len(elems)
    brute = set()
    for a in range(k):
        for b in range(k):
            if a != b and leq[a, b] and not any(
                    c not in (a, b) and leq[a, c] and leq[c, b] for c in range(k)):
                brute.add((a, b))
    cov = covers_from_leq(leq)
    assert set(zip(*map(list, np.nonzero(cov)))) == brute


def test_bound():
    with pytest.raises(ValueError, match="bound"):
        hasse_covers(6)
    with pytest.raises(ValueError, match="bound"):
        hasse_covers(3, max_n=2)


def test_extremes():
    assert bottom_matching(3) == M([(1, 2), (3, 4), (5, 6)])
    assert top_matching(3) == M([(1, 6), (2, 5), (3, 4)])
    assert length_ds(top_matching(4)) == 12


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_verify_rank_is_length(n):
    rep = verify_rank_is_length(n)
    assert rep.passed, rep.to_json()
    assert rep.rank_polynomial == q_double_factorial(n)
    assert rep.elements == oracles.double_factorial(n)


def test_verify_rank_n2_ranks():
    assert verify_rank_is_length(2).rank_polynomial == QPolynomial((1, 1, 1))


@pytest.mark.long
def test_verify_rank_is_length_n5():
    assert verify_rank_is_length(5).passed


def test_report_json():
    data = json.loads(verify_rank_is_length(2).to_json())
    assert data["passed"] is True
    assert data["counterexample"] is None
    assert data["rank_polynomial"] == [1, 1, 1]
    assert set(data["clauses"]) == {"partial_order", "unique_minimum", "unique_maximum",
                                    "covers_step_by_one", "monotone", "rank_generating_function"}


def test_failing_report_carries_counterexample(monkeypatch):
    import arcstats.bruhat as br
    monkeypatch.setattr(br, "length_ds", lambda m: length_ds(m) + (m == CROSS))
    rep = br.verify_rank_is_length(2)
    assert not rep.passed
    assert rep.counterexample["clause"] == "covers_step_by_one"


def test_dot_output():
    dot = to_dot(2)
    assert dot.startswith("digraph")
    assert dot.count("->") == 2
    assert '"1-4,2-3\\nell=2"' in dot
