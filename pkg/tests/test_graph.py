import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import k4, path_graph, random_graph
from planarham.constructions import petersen
from planarham.graph import (
    GraphInputError,
    build_graph,
    cubic_vertices,
    delete_vertices,
    is_connected,
    is_k_connected,
    is_k_connected_bruteforce,
)


def test_build_k4():
    g = k4()
    assert g.n == 4 and g.m == 6
    assert all(g.degree(v) == 3 for v in range(4))


def test_build_single_vertex():
    g = build_graph(1, [])
    assert g.n == 1 and g.m == 0


def test_build_petersen_regular():
    g = petersen()
    assert g.n == 10 and g.m == 15
    assert all(g.degree(v) == 3 for v in range(10))


def test_build_collapses_duplicates():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_build_rejects_loop_and_range():
    with pytest.raises(GraphInputError):
        build_graph(3, [(1, 1)])
    with pytest.raises(GraphInputError):
        build_graph(3, [(0, 3)])


def test_delete_k4_gives_k3():
    sub, relabel = delete_vertices(k4(), {3})
    assert sub.n == 3 and sub.m == 3
    assert relabel == {0: 0, 1: 1, 2: 2}


def test_delete_nothing_is_identity():
    g = petersen()
    sub, relabel = delete_vertices(g, set())
    assert sub == g and relabel == {v: v for v in range(10)}


def test_delete_petersen_vertex():
    sub, _ = delete_vertices(petersen(), {0})
    assert sub.n == 9 and sub.m == 12


def test_delete_out_of_range():
    with pytest.raises(GraphInputError):
        delete_vertices(k4(), {7})


@given(st.integers(2, 8), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_delete_count_property(n, rnd):
    g = random_graph(rnd, n, 0.5)
    drop = {v for v in range(n) if rnd.random() < 0.4 and v < n - 1}
    sub, relabel = delete_vertices(g, drop)
    assert sub.n == g.n - len(drop)
    assert set(relabel) == set(range(g.n)) - drop


def test_k_connectivity_examples():
    assert is_k_connected(k4(), 3)
    assert not is_k_connected(path_graph(3), 2)
    assert is_k_connected(petersen(), 3)
    assert not is_k_connected(petersen(), 4)


def test_k_connectivity_rejects_bad_k():
    with pytest.raises(GraphInputError):
        is_k_connected(k4(), 0)


def test_k_connectivity_matches_bruteforce_random():
    rng = random.Random(7)
    for _ in range(120):
        n = rng.randint(2, 9)
        g = random_graph(rng, n, rng.choice([0.25, 0.45, 0.7]))
        for k in (1, 2, 3):
            if g.n <= k:
                continue
            assert is_k_connected(g, k) == is_k_connected_bruteforce(g, k), g.edges()


def test_cubic_vertices():
    assert cubic_vertices(petersen()) == list(range(10))
    assert cubic_vertices(k4()) == [0, 1, 2, 3]
    k5 = build_graph(5, list(combinations(range(5), 2)))
    assert cubic_vertices(k5) == []


def test_reingestion_idempotent():
    g = petersen()
    assert build_graph(g.n, g.edges()) == g


def test_is_connected_basics():
    assert is_connected(build_graph(0, []))
    assert is_connected(path_graph(5))
    assert not is_connected(build_graph(3, [(0, 1)]))
