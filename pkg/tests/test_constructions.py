import pytest

from planarham.constructions import (
    CROSS_EDGES,
    CombineRecipe,
    combined_deleted_path,
    cubic_pivot,
    petersen,
    thomassen_combine,
    thomassen_layout,
    wiener_araya,
)
from planarham.graph import GraphInputError, build_graph, delete_vertices, is_connected, is_k_connected
from planarham.hamilton import PathWitness, validate_path_witness
from planarham.planar import planar_embedding


def test_petersen_shape():
    g = petersen()
    assert g.n == 10 and g.m == 15
    assert all(g.degree(v) == 3 for v in range(10))
    assert planar_embedding(g) is None


def test_cubic_pivot():
    assert cubic_pivot(petersen()) == 0
    from itertools import combinations

    k5 = build_graph(5, list(combinations(range(5), 2)))
    with pytest.raises(GraphInputError):
        cubic_pivot(k5)


def test_cross_edges_form_a_matching():
    slots = [s for e in CROSS_EDGES for s in e]
    assert len(set(slots)) == 8
    assert all(a[0] != b[0] for a, b in CROSS_EDGES)  # no intra-part edge


def test_wiener_araya_fixture():
    g = wiener_araya()
    assert g.n == 42 and g.m == 67
    assert is_connected(g)
    assert is_k_connected(g, 3)
    assert planar_embedding(g) is not None
    assert sorted(set(g.degree(v) for v in range(42))) == [3, 4]


def test_combine_four_petersen_arithmetic():
    p = petersen()
    g = thomassen_combine(CombineRecipe((p,) * 4, (0,) * 4))
    assert g.n == 4 * 9 - 2 == 34
    assert is_connected(g)


def test_combine_mixed_parts_arithmetic():
    p, w = petersen(), wiener_araya()
    pivot = cubic_pivot(w)
    g = thomassen_combine(CombineRecipe((p, p, w, w), (0, 0, pivot, pivot)))
    assert g.n == 9 + 9 + 41 + 41 - 2 == 98
    assert is_connected(g)


def test_combine_rejects_bad_recipes():
    p = petersen()
    with pytest.raises(GraphInputError):
        thomassen_combine(CombineRecipe((p, p, p), (0, 0, 0)))  # type: ignore[arg-type]
    w = wiener_araya()
    bad_pivot = next(v for v in range(42) if w.degree(v) == 4)
    with pytest.raises(GraphInputError):
        thomassen_combine(CombineRecipe((w,) * 4, (bad_pivot,) * 4))


def test_combine_four_wiener_araya_planar_162():
    w = wiener_araya()
    pivot = cubic_pivot(w)
    g = thomassen_combine(CombineRecipe((w,) * 4, (pivot,) * 4))
    assert g.n == 4 * 42 - 6 == 162
    assert is_connected(g)
    assert planar_embedding(g) is not None


def test_layout_matches_combined_graph():
    p = petersen()
    layout = thomassen_layout(CombineRecipe((p,) * 4, (0,) * 4))
    g = layout.graph
    assert g.n == 34
    # Each part contributes 9 local vertices; role-0 maps to its merge vertex.
    for i in range(4):
        assert layout.parts[i].n == 9
        assert layout.to_global[i][layout.marked[i][0]] == layout.merges[i // 2]
        # Part-local edges survive in the combined graph.
        for u in range(layout.parts[i].n):
            for w in layout.parts[i].adj[u]:
                gu, gw = layout.to_global[i][u], layout.to_global[i][w]
                assert gw in g.adj[gu]
    covered = {x for i in range(4) for x in layout.to_global[i].values()}
    assert covered == set(range(g.n))


def test_combined_deleted_path_all_34():
    # Constructive witnesses must agree with the exhaustive oracle: the
    # four-Petersen combination is hypotraceable, so every deletion has one.
    p = petersen()
    layout = thomassen_layout(CombineRecipe((p,) * 4, (0,) * 4))
    cache = {}
    for v in range(layout.graph.n):
        path = combined_deleted_path(layout, v, cache=cache)
        assert path is not None, f"no witness for v={v}"
        sub, relabel = delete_vertices(layout.graph, {v})
        assert validate_path_witness(sub, PathWitness(tuple(relabel[x] for x in path)))
