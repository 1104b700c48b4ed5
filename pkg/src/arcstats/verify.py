"""Registry of identities and an exhaustive runner.

Two kinds of checks are registered:

* per-object checks assert a predicate on every object of a family; the first
  failure (in enumeration order) is reported and that check stops;
* family checks compare whole distributions or tables and always finish the
  enumeration.

Each check runs for every size ``1..max_n`` of its family.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from math import comb, prod
from typing import Callable

from .bruhat import verify_rank_is_length
from .core import format_matching, format_partition
from .enumeration import perfect_matchings, set_partitions
from .qpoly import QPolynomial, q_double_factorial
from .stats import (
    arc_depth,
    depth_index,
    intertwining_number,
    stat_record,
    vertex_depth,
)
from .symmetry import ContractError, cn_involution, length_complement, main_theorem_witness

DEFAULT_MAX_N = 5
DEFAULT_MAX_PARTITION_N = 9
DEFAULT_BRUHAT_MAX_N = 4
# hard caps; the larger values need long=True
SAFE_CAPS = {"matchings": 5, "partitions": 9, "bruhat": 4}
LONG_CAPS = {"matchings": 7, "partitions": 11, "bruhat": 5}


class SuiteError(ValueError):
    """Bad identity selection or size bound."""


@dataclass
class IdentityCheck:
    id: str
    family: str  # "matchings" or "partitions"
    kind: str  # "object" or "family"
    statement: str
    run: Callable
    max_n: int = DEFAULT_MAX_N


@dataclass
class CheckResult:
    identity: str
    n: int
    status: str
    counterexample: str | dict | None
    objects_visited: int
    elapsed_ms: float


@dataclass
class SuiteReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status == "PASS" for r in self.results)

    def failed_ids(self) -> list[str]:
        return sorted({r.identity for r in self.results if r.status != "PASS"})

    def to_list(self, timing: bool = True) -> list[dict]:
        out = []
        for r in self.results:
            d = asdict(r)
            if d["counterexample"] is None:
                del d["counterexample"]
            if not timing:
                del d["elapsed_ms"]
            out.append(d)
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_list(timing), indent=2)

    def summary_lines(self) -> list[str]:
        return [f"{r.identity:<12} n={r.n:<2} {r.status}  ({r.objects_visited} objects)"
                + (f"  counterexample: {r.counterexample}" if r.counterexample else "")
                for r in self.results]


class _Context:
    """Per-run memo of enumerations and records, so a run sees one consistent state."""

    def __init__(self):
        self._records: dict[int, list] = {}
        self._tables: dict[tuple[str, int], object] = {}

    def records(self, n: int):
        if n not in self._records:
            self._records[n] = [(m, stat_record(m)) for m in perfect_matchings(n)]
        return self._records[n]

    def table(self, name: str, n: int, build: Callable):
        key = (name, n)
        if key not in self._tables:
            self._tables[key] = build(n, max_n=LONG_CAPS["matchings"])
        return self._tables[key]


# per-object predicates on matchings: (m, record, n) -> bool

def _triple(m, r, n):
    return r.cro + r.nst + r.al == comb(n, 2)


def _depth_id(m, r, n):
    by_vertex = sum(vertex_depth(m, v) for v in range(1, 2 * n + 1))
    by_arc = sum(arc_depth(m, a) for a in m.arcs)
    return r.tvd == by_vertex == r.span_sum and r.nst == by_arc


def _dindex_form(m, r, n):
    return r.dindex == n * n + 2 * comb(n, 2) - r.tvd - r.cro - r.al


def _inum_lin(m, r, n):
    return r.inumber == 3 * r.cro + 2 * r.nst + r.al


def _tvd(m, r, n):
    # both readings of total vertex depth: vertex depths and spans
    target = 2 * (r.cro + r.nst)
    return r.tvd == target == r.span_sum and target == 2 * comb(n, 2) - 2 * r.al


def _stat_form(m, r, n):
    return r.ell == r.cro + 2 * r.nst and r.dindex == n * n + comb(n, 2) - 2 * r.cro - r.nst


def _object_check(pred):
    def run(n, ctx):
        visited = 0
        for m, r in ctx.records(n):
            visited += 1
            if not pred(m, r, n):
                return False, {"object": format_matching(m), "record": r.to_dict()}, visited
        return True, None, visited
    return run


def _di_sum(n, ctx):
    visited = 0
    target = comb(n, 2)
    for p in set_partitions(n):
        visited += 1
        d, i = depth_index(p), intertwining_number(p)
        if d + i != target:
            return False, {"object": format_partition(p), "dindex": d, "inumber": i}, visited
    return True, None, visited


def _distribution(field_name: str, shift: Callable[[int], int]):
    def run(n, ctx):
        recs = ctx.records(n)
        got = QPolynomial.from_exponents(getattr(r, field_name) for _, r in recs)
        want = q_double_factorial(n).shift(shift(n))
        if got != want:
            return False, {"got": str(got), "expected": str(want)}, len(recs)
        return True, None, len(recs)
    return run


def _palin(n, ctx):
    p = q_double_factorial(n)
    ok = p.is_palindromic() and p.degree == n * n - n and p(1) == prod(range(1, 2 * n, 2))
    detail = None if ok else {"poly": str(p), "degree": p.degree}
    return ok, detail, 0


def _phi(n, ctx):
    try:
        phi = ctx.table("phi", n, cn_involution)
    except ContractError as exc:
        return False, {"error": str(exc)}, 0
    visited = 0
    for m, r in ctx.records(n):
        visited += 1
        img = phi(m)
        ri = stat_record(img)
        if phi(img) != m or (ri.cro, ri.nst, ri.al) != (r.nst, r.cro, r.al):
            return False, {"object": format_matching(m), "image": format_matching(img)}, visited
    return True, None, visited


def _psi(n, ctx):
    try:
        psi = ctx.table("psi", n, length_complement)
    except ContractError as exc:
        return False, {"error": str(exc)}, 0
    top = n * n - n
    visited = 0
    for m, r in ctx.records(n):
        visited += 1
        img = psi(m)
        if psi(img) != m or stat_record(img).ell != top - r.ell:
            return False, {"object": format_matching(m), "image": format_matching(img)}, visited
    levels = QPolynomial.from_exponents(r.ell for _, r in ctx.records(n))
    if levels.reverse() != q_double_factorial(n):
        return False, {"level_sizes": list(levels.coeffs)}, visited
    return True, None, visited


def _witness(n, ctx):
    try:
        w = ctx.table("witness", n, main_theorem_witness)
    except ContractError as exc:
        return False, {"error": str(exc)}, 0
    visited = 0
    for m, r in ctx.records(n):
        visited += 1
        if r.dindex != comb(n + 1, 2) + stat_record(w(m)).ell:
            return False, {"object": format_matching(m), "image": format_matching(w(m))}, visited
    return True, None, visited


def _bruhat(n, ctx):
    rep = verify_rank_is_length(n, max_n=LONG_CAPS["bruhat"])
    return rep.passed, rep.counterexample, rep.elements


REGISTRY: dict[str, IdentityCheck] = {c.id: c for c in [
    IdentityCheck("DI_SUM", "partitions", "object",
                  "dindex(A) + inumber(A) = C(N,2) for every set partition of [N]",
                  _di_sum, DEFAULT_MAX_PARTITION_N),
    IdentityCheck("TRIPLE", "matchings", "object", "cro + nst + al = C(n,2)",
                  _object_check(_triple)),
    IdentityCheck("DEPTH_ID", "matchings", "object",
                  "sum of vertex depths = sum of spans; nst = sum of arc depths",
                  _object_check(_depth_id)),
    IdentityCheck("DINDEX_FORM", "matchings", "object",
                  "dindex = n^2 + 2C(n,2) - tvd - cro - al", _object_check(_dindex_form)),
    IdentityCheck("INUM_LIN", "matchings", "object", "inumber = 3cro + 2nst + al",
                  _object_check(_inum_lin)),
    IdentityCheck("TVD", "matchings", "object", "tvd = 2(cro + nst) = 2C(n,2) - 2al",
                  _object_check(_tvd)),
    IdentityCheck("STAT_FORM", "matchings", "object",
                  "ell = cro + 2nst; dindex = n^2 + C(n,2) - 2cro - nst",
                  _object_check(_stat_form)),
    IdentityCheck("L_GEN", "matchings", "family", "sum q^ell = [2n-1]_q!!",
                  _distribution("ell", lambda n: 0)),
    IdentityCheck("MAIN", "matchings", "family", "sum q^dindex = q^C(n+1,2) [2n-1]_q!!",
                  _distribution("dindex", lambda n: comb(n + 1, 2))),
    IdentityCheck("I_GEN", "matchings", "family", "sum q^inumber = q^C(n,2) [2n-1]_q!!",
                  _distribution("inumber", lambda n: comb(n, 2))),
    IdentityCheck("PALIN", "matchings", "family",
                  "[2n-1]_q!! is palindromic of degree n^2 - n with value (2n-1)!! at q=1", _palin),
    IdentityCheck("PHI", "matchings", "object",
                  "phi is an involution with cro(phi m) = nst(m), nst(phi m) = cro(m), al kept", _phi),
    IdentityCheck("PSI", "matchings", "object",
                  "psi is an involution with ell(psi m) = n^2 - n - ell(m)", _psi),
    IdentityCheck("WITNESS", "matchings", "object",
                  "dindex(m) = C(n+1,2) + ell(psi(phi(m)))", _witness),
    IdentityCheck("BRUHAT_RANK", "matchings", "family",
                  "Bruhat order on fixed-point-free involutions is graded by ell",
                  _bruhat, DEFAULT_BRUHAT_MAX_N),
]}


def _bound_for(check: IdentityCheck, max_n: int, max_partition_n: int, bruhat_max_n: int) -> int:
    if check.id == "BRUHAT_RANK":
        return min(max_n, bruhat_max_n)
    if check.family == "partitions":
        return max_partition_n
    return max_n


def run_identity_suite(ids=None, max_n: int = DEFAULT_MAX_N,
                       max_partition_n: int = DEFAULT_MAX_PARTITION_N,
                       bruhat_max_n: int = DEFAULT_BRUHAT_MAX_N,
                       long: bool = False) -> SuiteReport:
    """Run the selected identities (all when ``ids`` is None) for every size up to the bounds."""
    if ids is None:
        ids = list(REGISTRY)
    ids = list(ids)
    if not ids:
        raise SuiteError("no identities selected")
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        raise SuiteError(f"unknown identity id(s): {', '.join(unknown)}")
    caps = LONG_CAPS if long else SAFE_CAPS
    for name, value in (("matchings", max_n), ("partitions", max_partition_n),
                        ("bruhat", min(bruhat_max_n, max_n))):
        if value > caps[name]:
            raise SuiteError(f"{name} bound {value} exceeds the safety cap {caps[name]}"
                             + ("" if long else " (use long=True)"))

    ctx = _Context()
    report = SuiteReport()
    for cid in (i for i in REGISTRY if i in ids):
        check = REGISTRY[cid]
        for n in range(1, _bound_for(check, max_n, max_partition_n, bruhat_max_n) + 1):
            start = time.perf_counter()
            try:
                ok, detail, visited = check.run(n, ctx)
            except (ArithmeticError, ValueError) as exc:
                # a broken statistic can push values out of range; that is a failure, not a crash
                ok, detail, visited = False, {"error": f"{type(exc).__name__}: {exc}"}, 0
            elapsed = round((time.perf_counter() - start) * 1000, 3)
            report.results.append(CheckResult(cid, n, "PASS" if ok else "FAIL",
                                              detail, visited, elapsed))
            if not ok:
                break
    return report
