import json

import pytest

import arcstats.stats
from arcstats.verify import REGISTRY, SuiteError, run_identity_suite


def test_registry_contents():
    assert list(REGISTRY) == ["DI_SUM", "TRIPLE", "DEPTH_ID", "DINDEX_FORM", "INUM_LIN", "TVD",
                              "STAT_FORM", "L_GEN", "MAIN", "I_GEN", "PALIN", "PHI", "PSI",
                              "WITNESS", "BRUHAT_RANK"]
    for check in REGISTRY.values():
        assert check.statement
        assert check.family in ("matchings", "partitions")
        assert check.kind in ("object", "family")


def test_default_run_passes():
    rep = run_identity_suite()
    assert rep.passed, "\n".join(rep.summary_lines())
    seen = {(r.identity, r.n) for r in rep.results}
    assert ("DI_SUM", 9) in seen and ("MAIN", 5) in seen and ("BRUHAT_RANK", 4) in seen
    assert ("BRUHAT_RANK", 5) not in seen


def test_di_sum_n8_visits_all():
    rep = run_identity_suite(["DI_SUM"], max_partition_n=8)
    last = rep.results[-1]
    assert (last.n, last.objects_visited, last.status) == (8, 4140, "PASS")


def test_main_n2():
    rep = run_identity_suite(["MAIN"], max_n=2)
    assert [(r.n, r.status, r.objects_visited) for r in rep.results] == [(1, "PASS", 1), (2, "PASS", 3)]


def test_report_deterministic():
    a = run_identity_suite(max_n=3, max_partition_n=5).to_json(timing=False)
    b = run_identity_suite(max_n=3, max_partition_n=5).to_json(timing=False)
    assert a == b
    rows = json.loads(run_identity_suite(["TRIPLE"], max_n=2).to_json())
    assert set(rows[0]) == {"identity", "n", "status", "objects_visited", "elapsed_ms"}


@pytest.mark.parametrize("kwargs", [
    dict(ids=[]),
    dict(ids=["NOPE"]),
    dict(max_n=6),
    dict(max_partition_n=10),
    dict(max_n=8, long=True),
])
def test_bad_requests(kwargs):
    with pytest.raises(SuiteError):
        run_identity_suite(**kwargs)


def test_span_mutation_is_caught(monkeypatch):
    monkeypatch.setattr(arcstats.stats, "span", lambda a: a.hi - a.lo)
    rep = run_identity_suite(max_n=3, max_partition_n=4)
    failed = rep.failed_ids()
    assert {"TVD", "STAT_FORM", "L_GEN"} <= set(failed)
    fail = next(r for r in rep.results if r.identity == "TVD" and r.status == "FAIL")
    # per-object checks stop at the first counterexample, in enumeration order
    assert fail.n == 1 and fail.objects_visited == 1
    assert fail.counterexample["object"] == "1-2"
    assert not [r for r in rep.results if r.identity == "TVD" and r.n > 1]


def test_depth_mutation_is_caught(monkeypatch):
    real = arcstats.stats._depths
    monkeypatch.setattr(arcstats.stats, "_depths", lambda size, pairs: [d + 1 for d in real(size, pairs)])
    rep = run_identity_suite(max_n=2, max_partition_n=3)
    assert "DI_SUM" in rep.failed_ids()


@pytest.mark.long
def test_long_run():
    assert run_identity_suite(max_n=6, max_partition_n=10, bruhat_max_n=5, long=True).passed
