import random

import pytest

from conftest import k4, path_graph, random_connected_graph
from planarham.constructions import petersen
from planarham.graph import GraphInputError
from planarham.hamilton import SearchBudget, SearchStatus
from planarham.verify import (
    AvoidanceQuery,
    longest_cycle_length,
    longest_path_length,
    path_of_length_at_least,
    revalidate_report,
    verify_avoidance,
    verify_hypohamiltonian,
    verify_hypotraceable,
)


def test_petersen_hypohamiltonian():
    rep = verify_hypohamiltonian(petersen())
    assert rep.verdict == "pass"
    assert len(rep.subcase_witnesses) == 10
    assert revalidate_report(petersen(), rep)


def test_k4_not_hypohamiltonian():
    rep = verify_hypohamiltonian(k4())
    assert rep.verdict == "fail"
    assert rep.global_witness is not None


def test_c5_not_hypohamiltonian():
    from conftest import cycle_graph

    rep = verify_hypohamiltonian(cycle_graph(5))
    assert rep.verdict == "fail"  # the cycle itself is Hamiltonian


def test_hypotraceable_negatives():
    assert verify_hypotraceable(path_graph(4)).verdict == "fail"
    assert verify_hypotraceable(k4()).verdict == "fail"
    # Petersen has a Hamiltonian path, so it is not hypotraceable either.
    assert verify_hypotraceable(petersen()).verdict == "fail"


def test_progress_callback_order():
    seen = []
    verify_hypohamiltonian(petersen(), progress=seen.append)
    assert seen == [f"{i}/10" for i in range(1, 11)]


def test_path_of_length_at_least():
    g = petersen()
    status, w = path_of_length_at_least(g, 10)
    assert status is SearchStatus.FOUND and len(w.order) == 10
    with pytest.raises(GraphInputError):
        path_of_length_at_least(g, 11)


def test_longest_lengths():
    assert longest_cycle_length(k4())[:2] == (4, "exact")
    assert longest_cycle_length(petersen())[:2] == (9, "exact")
    assert longest_path_length(petersen())[:2] == (10, "exact")
    length, exactness, _ = longest_cycle_length(
        petersen(), SearchBudget(node_limit=3)
    )
    assert exactness == "lower_bound"


def test_avoidance_examples():
    rep = verify_avoidance(petersen(), AvoidanceQuery(j=1, kind="cycle", k=3))
    assert rep.verdict == "pass" and rep.length == 9
    assert len(rep.subcase_witnesses) == 10
    rep = verify_avoidance(k4(), AvoidanceQuery(j=1, kind="cycle", k=3))
    assert rep.verdict == "fail" and "omit" in rep.failure_detail


def test_avoidance_connectivity_gate():
    rep = verify_avoidance(path_graph(4), AvoidanceQuery(j=1, kind="path", k=2))
    assert rep.verdict == "fail"
    assert "connected" in rep.failure_detail


def test_avoidance_path_kind():
    # In C5 every vertex is omitted by some longest path (length 4... the
    # longest path has 5 vertices, so no deletion can reach it: fail).
    from conftest import cycle_graph

    rep = verify_avoidance(cycle_graph(5), AvoidanceQuery(j=1, kind="path", k=2))
    assert rep.verdict == "fail"


def test_avoidance_invalid_query():
    with pytest.raises(GraphInputError):
        AvoidanceQuery(j=0, kind="cycle", k=3)
    with pytest.raises(GraphInputError):
        AvoidanceQuery(j=1, kind="walk", k=3)
    with pytest.raises(GraphInputError):
        verify_avoidance(k4(), AvoidanceQuery(j=4, kind="cycle", k=1))


def test_shortcut_coherence():
    g = petersen()
    assert verify_hypohamiltonian(g).verdict == "pass"
    assert longest_cycle_length(g)[:2] == (g.n - 1, "exact")
    assert verify_avoidance(g, AvoidanceQuery(j=1, kind="cycle", k=3)).verdict == "pass"


def test_reports_reproducible():
    g = petersen()
    a = verify_hypohamiltonian(g)
    b = verify_hypohamiltonian(g)
    assert a == b


def test_revalidate_rejects_tampering():
    g = petersen()
    rep = verify_hypohamiltonian(g)
    rep.subcase_witnesses["delete:0"] = tuple(
        reversed(rep.subcase_witnesses["delete:0"][:5])
    ) + rep.subcase_witnesses["delete:0"][5:]
    assert not revalidate_report(g, rep)


def test_workers_match_sequential():
    g = petersen()
    seq = verify_hypohamiltonian(g, workers=1)
    par = verify_hypohamiltonian(g, workers=2)
    assert seq == par


def test_random_graphs_never_crash():
    rng = random.Random(71)
    for _ in range(25):
        g = random_connected_graph(rng, rng.randint(3, 7), 0.4)
        rep = verify_hypohamiltonian(g)
        assert rep.verdict in ("pass", "fail")
        if rep.verdict == "pass":
            assert revalidate_report(g, rep)
