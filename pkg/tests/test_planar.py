import random
from itertools import combinations

import pytest

from conftest import (
    cube_q3,
    cycle_graph,
    k4,
    oracle_planar,
    random_connected_graph,
    random_planar_graph,
)
from planarham.constructions import petersen
from planarham.graph import GraphInputError, build_graph, relabel_graph
from planarham.planar import (
    embedding_from_rotation,
    faces,
    genus_of_rotation,
    planar_embedding,
)


def test_k4_embedding_four_triangles():
    emb = planar_embedding(k4())
    assert emb is not None
    assert faces(emb).sizes == (3, 3, 3, 3)


def test_k5_nonplanar():
    k5 = build_graph(5, list(combinations(range(5), 2)))
    assert planar_embedding(k5) is None


def test_petersen_nonplanar():
    assert planar_embedding(petersen()) is None


def test_cube_faces():
    emb = planar_embedding(cube_q3())
    assert faces(emb).sizes == (4, 4, 4, 4, 4, 4)


def test_c6_two_faces():
    emb = planar_embedding(cycle_graph(6))
    assert faces(emb).sizes == (6, 6)


def test_single_vertex_and_edge():
    assert planar_embedding(build_graph(1, [])).face_count == 1
    emb = planar_embedding(build_graph(2, [(0, 1)]))
    assert faces(emb).sizes == (2,)


def test_disconnected_rejected():
    with pytest.raises(GraphInputError):
        planar_embedding(build_graph(4, [(0, 1)]))


def test_euler_invariants_random():
    rng = random.Random(23)
    for _ in range(150):
        g = random_planar_graph(rng, rng.randint(2, 12))
        emb = planar_embedding(g)
        assert emb is not None
        assert sum(len(f) for f in emb.faces) == 2 * g.m
        assert g.n - g.m + len(emb.faces) == 2


def test_agrees_with_oracle_small():
    rng = random.Random(29)
    for _ in range(250):
        n = rng.randint(2, 6)
        g = random_connected_graph(rng, n, rng.random())
        assert (planar_embedding(g) is not None) == oracle_planar(g), g.edges()


def test_bad_rotation_rejected():
    g = cycle_graph(4)
    # Swapping one vertex's rotation on a 4-cycle cannot break planarity
    # (cycles embed uniquely), but a rotation from a different graph must fail.
    with pytest.raises(Exception):
        embedding_from_rotation(g, ((1, 2), (0, 2), (1, 3), (2, 0)))


def test_genus_of_rotation_k4():
    emb = planar_embedding(k4())
    assert genus_of_rotation(k4(), emb.rotation) == 0
    # Reversing one vertex's rotation in K4 yields a nonplanar rotation system.
    rot = list(emb.rotation)
    rot[0] = tuple(reversed(rot[0]))
    assert genus_of_rotation(k4(), tuple(rot)) > 0


def test_whitney_face_multiset_stable_under_relabeling():
    rng = random.Random(31)
    g = cube_q3()  # 3-connected planar
    base = faces(planar_embedding(g)).sizes
    for _ in range(20):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = relabel_graph(g, perm)
        assert faces(planar_embedding(h)).sizes == base
