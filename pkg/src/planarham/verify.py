"""Top-level verifiers: hypohamiltonicity, hypotraceability, longest-cycle avoidance."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Optional

from .graph import Graph, GraphInputError, delete_vertices, is_k_connected
from .hamilton import (
    CycleWitness,
    PathWitness,
    SearchBudget,
    SearchStatus,
    cycle_of_length_at_least,
    hamiltonian_cycle,
    hamiltonian_path,
    validate_cycle_witness,
    validate_path_witness,
)

ProgressFn = Callable[[str], None]


@dataclass(frozen=True)
class AvoidanceQuery:
    j: int
    kind: str  # "cycle" | "path"
    k: int  # connectivity context

    def __post_init__(self):
        if self.j < 1 or self.k < 1 or self.kind not in ("cycle", "path"):
            raise GraphInputError(f"invalid avoidance query {self}")

    @property
    def claim(self) -> str:
        return f"avoidance(j={self.j},kind={self.kind},k={self.k})"


@dataclass
class VerificationReport:
    claim: str
    verdict: str  # pass | fail | inconclusive
    global_witness: Optional[tuple[int, ...]] = None
    subcase_witnesses: dict[str, tuple[int, ...]] = field(default_factory=dict)
    failure_detail: Optional[str] = None
    length: Optional[int] = None  # longest cycle/path length, avoidance only


def _restore(witness_order, relabel: dict[int, int]) -> tuple[int, ...]:
    inverse = {new: old for old, new in relabel.items()}
    return tuple(inverse[x] for x in witness_order)


def _deleted_cycle_witness(g: Graph, v: int) -> Optional[tuple[int, ...]]:
    sub, relabel = delete_vertices(g, {v})
    if sub.n < 3:
        return None  # too small to carry a cycle
    status, w = hamiltonian_cycle(sub)
    return _restore(w.order, relabel) if status is SearchStatus.FOUND else None


def _deleted_path_witness(g: Graph, v: int) -> Optional[tuple[int, ...]]:
    sub, relabel = delete_vertices(g, {v})
    if sub.n == 1:
        return _restore((0,), relabel)  # the one-vertex path is trivial
    status, w = hamiltonian_path(sub)
    return _restore(w.order, relabel) if status is SearchStatus.FOUND else None


def _subcase_map(fn, g: Graph, workers: int, progress: Optional[ProgressFn]):
    """Run fn(g, v) for every vertex; deterministic ascending-order assembly."""
    results = {}
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for v, res in enumerate(pool.map(fn, [g] * g.n, range(g.n))):
                results[v] = res
                if progress:
                    progress(f"{v + 1}/{g.n}")
    else:
        for v in range(g.n):
            results[v] = fn(g, v)
            if progress:
                progress(f"{v + 1}/{g.n}")
    return results


def verify_hypohamiltonian(
    g: Graph, workers: int = 1, progress: Optional[ProgressFn] = None
) -> VerificationReport:
    """Pass iff g has no Hamiltonian cycle and every g - v has one (all exhaustive)."""
    if g.n < 3:
        raise GraphInputError("hypohamiltonicity needs n >= 3")
    report = VerificationReport(claim="hypohamiltonian", verdict="pass")
    status, w = hamiltonian_cycle(g)
    if status is SearchStatus.FOUND:
        report.verdict = "fail"
        report.failure_detail = "graph itself has a Hamiltonian cycle"
        report.global_witness = w.order
        return report
    subs = _subcase_map(_deleted_cycle_witness, g, workers, progress)
    for v in range(g.n):
        if subs[v] is None:
            report.verdict = "fail"
            report.failure_detail = f"deletion of vertex {v} is not Hamiltonian"
            return report
        report.subcase_witnesses[f"delete:{v}"] = subs[v]
    return report


def verify_hypotraceable(
    g: Graph, workers: int = 1, progress: Optional[ProgressFn] = None
) -> VerificationReport:
    """Pass iff g has no Hamiltonian path and every g - v has one (all exhaustive)."""
    if g.n < 2:
        raise GraphInputError("hypotraceability needs n >= 2")
    report = VerificationReport(claim="hypotraceable", verdict="pass")
    status, w = hamiltonian_path(g)
    if status is SearchStatus.FOUND:
        report.verdict = "fail"
        report.failure_detail = "graph itself has a Hamiltonian path"
        report.global_witness = w.order
        return report
    subs = _subcase_map(_deleted_path_witness, g, workers, progress)
    for v in range(g.n):
        if subs[v] is None:
            report.verdict = "fail"
            report.failure_detail = f"deletion of vertex {v} has no Hamiltonian path"
            return report
        report.subcase_witnesses[f"delete:{v}"] = subs[v]
    return report


def path_of_length_at_least(
    g: Graph, length: int, budget: Optional[SearchBudget] = None
) -> tuple[SearchStatus, Optional[PathWitness]]:
    """Simple path on >= `length` vertices via the helper-vertex cycle reduction."""
    if not 2 <= length <= g.n:
        raise GraphInputError(f"path length {length} out of range for n={g.n}")
    h = g.n
    ext = Graph(
        g.n + 1,
        tuple(g.adj[v] | {h} for v in range(g.n)) + (frozenset(range(g.n)),),
    )
    status, w = cycle_of_length_at_least(ext, length + 1, budget)
    if status is not SearchStatus.FOUND:
        return status, None
    order = list(w.order)
    if h in order:
        i = order.index(h)
        order = order[i + 1 :] + order[:i]
    pw = PathWitness(tuple(order))
    assert len(pw.order) >= length
    assert all(pw.order[i + 1] in g.adj[pw.order[i]] for i in range(len(pw.order) - 1))
    return SearchStatus.FOUND, pw


def longest_cycle_length(
    g: Graph, budget: Optional[SearchBudget] = None
) -> tuple[int, str, Optional[CycleWitness]]:
    """(length, "exact"|"lower_bound", witness); length 0 means acyclic."""
    if g.n < 3:
        raise GraphInputError("longest_cycle_length needs n >= 3")
    exact = True
    for length in range(g.n, 2, -1):
        status, w = cycle_of_length_at_least(g, length, budget)
        if status is SearchStatus.FOUND:
            return len(w.order), "exact" if exact else "lower_bound", w
        if status is SearchStatus.UNKNOWN:
            exact = False
    return 0, "exact" if exact else "lower_bound", None


def longest_path_length(
    g: Graph, budget: Optional[SearchBudget] = None
) -> tuple[int, str, Optional[PathWitness]]:
    if g.n < 2:
        raise GraphInputError("longest_path_length needs n >= 2")
    exact = True
    for length in range(g.n, 1, -1):
        status, w = path_of_length_at_least(g, length, budget)
        if status is SearchStatus.FOUND:
            return len(w.order), "exact" if exact else "lower_bound", w
        if status is SearchStatus.UNKNOWN:
            exact = False
    return 1, "exact" if exact else "lower_bound", None


def verify_avoidance(
    g: Graph,
    query: AvoidanceQuery,
    budget: Optional[SearchBudget] = None,
    hypo_report: Optional[VerificationReport] = None,
    progress: Optional[ProgressFn] = None,
) -> VerificationReport:
    """Pass iff every j-subset is omitted by some longest cycle (path) of g."""
    if query.j >= g.n:
        raise GraphInputError(f"j={query.j} must be smaller than n={g.n}")
    report = VerificationReport(claim=query.claim, verdict="pass")
    if not is_k_connected(g, query.k):
        report.verdict = "fail"
        report.failure_detail = f"graph is not {query.k}-connected"
        return report

    length = None
    if query.kind == "cycle" and query.j == 1:
        # Hypohamiltonian shortcut: length n-1 and all witnesses come for free.
        hypo = hypo_report if hypo_report is not None else verify_hypohamiltonian(g)
        if hypo.claim == "hypohamiltonian" and hypo.verdict == "pass":
            report.length = g.n - 1
            report.subcase_witnesses = {
                f"omit:{v}": hypo.subcase_witnesses[f"delete:{v}"] for v in range(g.n)
            }
            return report

    if query.kind == "cycle":
        length, exactness, _ = longest_cycle_length(g, budget)
        finder = cycle_of_length_at_least
    else:
        length, exactness, _ = longest_path_length(g, budget)
        finder = path_of_length_at_least
    if exactness != "exact" or length < (3 if query.kind == "cycle" else 2):
        report.verdict = "inconclusive"
        report.failure_detail = "longest length could not be pinned within budget"
        return report
    report.length = length

    total = comb(g.n, query.j)
    done = 0
    for subset in combinations(range(g.n), query.j):
        done += 1
        sub, relabel = delete_vertices(g, subset)
        label = "omit:" + ",".join(map(str, subset))
        if sub.n < length:
            report.verdict = "fail"
            report.failure_detail = f"{label}: too few vertices remain"
            return report
        status, w = finder(sub, length, budget)
        if status is SearchStatus.FOUND:
            report.subcase_witnesses[label] = _restore(w.order, relabel)
        elif status is SearchStatus.REFUTED:
            report.verdict = "fail"
            report.failure_detail = f"{label}: no cycle/path of length {length} avoids it"
            return report
        else:
            report.verdict = "inconclusive"
            report.failure_detail = f"{label}: budget exhausted"
            return report
        if progress:
            progress(f"{done}/{total}")
    return report


def revalidate_report(g: Graph, report: VerificationReport) -> bool:
    """Re-check every stored witness of a pass report against the graph."""
    for label, order in report.subcase_witnesses.items():
        kind, arg = label.split(":")
        dropped = {int(x) for x in arg.split(",")}
        if any(x in dropped for x in order):
            return False
        if report.claim == "hypohamiltonian" or (
            report.claim.startswith("avoidance") and "kind=cycle" in report.claim
        ):
            ok = len(set(order)) == len(order) and all(
                order[(i + 1) % len(order)] in g.adj[order[i]]
                for i in range(len(order))
            )
        else:
            ok = len(set(order)) == len(order) and all(
                order[i + 1] in g.adj[order[i]] for i in range(len(order) - 1)
            )
        if not ok:
            return False
        if report.claim in ("hypohamiltonian", "hypotraceable"):
            if len(order) != g.n - len(dropped):
                return False
    return True
