"""Bundled fixtures and the Thomassen hypotraceable combination.

The combination follows C. Thomassen, "Hypohamiltonian and hypotraceable
graphs", Discrete Mathematics 9 (1974) 91-96: take four hypohamiltonian
graphs, delete one cubic vertex from each, identify one deleted-neighbor per
part pairwise across parts 0/1 and parts 2/3, and add four cross edges among
the remaining deleted-neighbors. The concrete role pattern below was frozen
after an operational search: it is the canonical first pattern whose
four-Petersen output verifies hypotraceable exhaustively.
"""

from __future__ import annotations

import random

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import permutations, product
from typing import Optional

from .graph import (
    Graph,
    GraphInputError,
    build_graph,
    cubic_vertices,
    delete_vertices,
    is_connected,
    is_k_connected,
)
from .graphio import parse_edge_list
from .hamilton import SearchBudget, SearchStatus, hamiltonian_path
from .planar import planar_embedding

# Cross-edge pattern in (part, role) coordinates; roles 1 and 2 are the two
# non-identified neighbors of each deleted pivot, role 0 is identified
# (part0 with part1, part2 with part3). Frozen by tools/thomassen_search.py.
CROSS_EDGES: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = (
    ((0, 1), (2, 1)),
    ((0, 2), (2, 2)),
    ((1, 1), (3, 1)),
    ((1, 2), (3, 2)),
)


@dataclass(frozen=True)
class CombineRecipe:
    parts: tuple[Graph, Graph, Graph, Graph]
    pivots: tuple[int, int, int, int]


def cubic_pivot(g: Graph) -> int:
    """Smallest cubic vertex of g; raises if there is none."""
    cubics = cubic_vertices(g)
    if not cubics:
        raise GraphInputError("graph has no cubic vertex to use as pivot")
    return min(cubics)


def petersen() -> Graph:
    """The 10-vertex 3-regular Petersen graph (outer C5, inner 5-star)."""
    edges = (
        [(i, (i + 1) % 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        + [(i, 5 + i) for i in range(5)]
    )
    return build_graph(10, edges)


@lru_cache(maxsize=1)
def wiener_araya() -> Graph:
    """The bundled 42-vertex planar hypohamiltonian graph.

    Structural assertions run at first load so a corrupted asset fails loudly.
    """
    text = resources.files("planarham.data").joinpath("wiener_araya.edges").read_text()
    g = parse_edge_list(text)
    if g.n != 42:
        raise GraphInputError(f"fixture corrupted: expected 42 vertices, got {g.n}")
    if not is_connected(g):
        raise GraphInputError("fixture corrupted: graph is disconnected")
    if planar_embedding(g) is None:
        raise GraphInputError("fixture corrupted: graph is not planar")
    if not is_k_connected(g, 3):
        raise GraphInputError("fixture corrupted: graph is not 3-connected")
    return g


@dataclass(frozen=True)
class CombineLayout:
    """Combined graph plus the part decomposition it was assembled from.

    `parts[i]` is part i with its pivot deleted (local ids); `marked[i]` holds
    the local ids of the three ex-pivot-neighbors in role order (role 0 is the
    one identified into a merge vertex); `to_global[i]` maps part-local ids to
    ids of `graph` (role 0 maps to its merge vertex); `merges` are the global
    ids of the two merge vertices (parts 0/1, then parts 2/3).
    """

    graph: Graph
    parts: tuple[Graph, Graph, Graph, Graph]
    marked: tuple[tuple[int, int, int], ...]
    to_global: tuple[dict[int, int], ...]
    merges: tuple[int, int]


def _combine_with_roles(
    recipe: CombineRecipe,
    roles: list[tuple[int, int, int]],
    cross: tuple = CROSS_EDGES,
) -> CombineLayout:
    """Assemble the combined graph for one concrete role assignment."""
    parts, pivots = recipe.parts, recipe.pivots
    # Global ids: part vertices (pivot skipped) in part order, then 2 merge vertices.
    offsets = []
    total = 0
    for g, p in zip(parts, pivots):
        offsets.append(total)
        total += g.n - 1
    merge_a, merge_b = total, total + 1
    merged_for = {(0, 0): merge_a, (1, 0): merge_a, (2, 0): merge_b, (3, 0): merge_b}

    def gid(i: int, v: int) -> int:
        p = pivots[i]
        base = offsets[i]
        return base + (v if v < p else v - 1)

    edges = []
    special = {}
    for i, (g, p) in enumerate(zip(parts, pivots)):
        nbrs = sorted(g.adj[p])
        for r, idx in enumerate(roles[i]):
            special[(i, r)] = nbrs[idx]
        for u in range(g.n):
            if u == p:
                continue
            for w in g.adj[u]:
                if w == p or w <= u:
                    continue
                edges.append((gid(i, u), gid(i, w)))
        # reattach the identified neighbor as its merge vertex
    remap = {}
    for (i, r), v in special.items():
        if r == 0:
            remap[gid(i, v)] = merged_for[(i, r)]
    edges = [(remap.get(u, u), remap.get(w, w)) for u, w in edges]
    for (a_part, a_role), (b_part, b_role) in cross:
        ua = gid(a_part, special[(a_part, a_role)])
        ub = gid(b_part, special[(b_part, b_role)])
        edges.append((remap.get(ua, ua), remap.get(ub, ub)))
    # The four identified neighbors left unused id slots; compact to dense ids.
    used = sorted(set(x for e in edges for x in e))
    relabel = {old: new for new, old in enumerate(used)}
    combined = build_graph(len(used), [(relabel[u], relabel[w]) for u, w in edges])

    local_parts = []
    local_marked = []
    to_global = []
    for i, (g, p) in enumerate(zip(parts, pivots)):
        sub, sub_relab = delete_vertices(g, {p})
        local_parts.append(sub)
        local_marked.append(tuple(sub_relab[special[(i, r)]] for r in range(3)))
        mapping = {}
        for orig, loc in sub_relab.items():
            raw = offsets[i] + loc
            mapping[loc] = relabel[remap.get(raw, raw)]
        to_global.append(mapping)
    return CombineLayout(
        graph=combined,
        parts=tuple(local_parts),
        marked=tuple(local_marked),
        to_global=tuple(to_global),
        merges=(relabel[merge_a], relabel[merge_b]),
    )


def thomassen_layout(recipe: CombineRecipe) -> CombineLayout:
    """Like `thomassen_combine`, but keeps the part decomposition metadata.

    Every pivot must be cubic. When all four parts are planar, role
    orientations are searched deterministically for a planar output.
    """
    if len(recipe.parts) != 4 or len(recipe.pivots) != 4:
        raise GraphInputError("exactly four parts and four pivots required")
    for g, p in zip(recipe.parts, recipe.pivots):
        if not (0 <= p < g.n) or g.degree(p) != 3:
            raise GraphInputError(f"pivot {p} is not a cubic vertex")

    expected_n = sum(g.n - 1 for g in recipe.parts) - 2
    identity = [(0, 1, 2)] * 4
    all_planar = all(planar_embedding(g) is not None for g in recipe.parts)
    if all_planar:
        for combo in product(list(permutations(range(3))), repeat=4):
            cand = _combine_with_roles(recipe, list(combo))
            if (
                cand.graph.n == expected_n
                and is_connected(cand.graph)
                and planar_embedding(cand.graph) is not None
            ):
                return cand
    out = _combine_with_roles(recipe, identity)
    if out.graph.n != expected_n:
        raise GraphInputError("combined graph has unexpected vertex count (degenerate identification)")
    return out


def thomassen_combine(recipe: CombineRecipe) -> Graph:
    """Hypotraceable-by-construction combination of four hypohamiltonian parts."""
    return thomassen_layout(recipe).graph


# Links between parts in (part, role) coordinates: the two merge vertices plus
# the four cross edges. Any Hamiltonian path of the combined graph decomposes
# into stretches inside the parts joined at these six attachment points.
_LINKS: tuple = (((0, 0), (1, 0)), ((2, 0), (3, 0))) + CROSS_EDGES


def _part_cover(
    part: Graph,
    removed: frozenset[int],
    segs: tuple[tuple[Optional[int], Optional[int]], ...],
    budget: Optional[SearchBudget],
    attempts: int = 8,
) -> Optional[list[list[int]]]:
    """Disjoint paths covering `part` minus `removed`, one per seg, with the
    given (start, end) pins (None = unconstrained). Interior junction ends must
    be pinned. Returns the paths in part-local ids, each oriented start-to-end,
    or None (not found / budget).

    The reduction chains the segments through degree-forced junction helpers
    and runs one pinned-endpoint Hamiltonian path search. An undirected search
    cannot distinguish which pinned junction end belongs to which segment, so
    a witness may come back with the pairing swapped; in that case a cover with
    some pairing exists and the search is retried under a random relabeling
    until the requested pairing shows up (REFUTED still means no pairing
    exists at all).
    """
    if removed:
        sub0, relab = delete_vertices(part, removed)
    else:
        sub0, relab = part, {x: x for x in range(part.n)}
    base_n = sub0.n
    rng = random.Random(base_n * 1009 + len(segs))
    for attempt in range(attempts):
        if attempt == 0:
            perm = list(range(base_n))
        else:
            perm = list(range(base_n))
            rng.shuffle(perm)
        inv_perm = [0] * base_n
        for new, old in enumerate(perm):
            inv_perm[old] = new
        sub = Graph(
            base_n,
            tuple(frozenset(inv_perm[w] for w in sub0.adj[perm[x]]) for x in range(base_n)),
        )
        pins = [
            (
                inv_perm[relab[u]] if u is not None else None,
                inv_perm[relab[w]] if w is not None else None,
            )
            for u, w in segs
        ]
        adj: list[set[int]] = [set(sub.adj[x]) for x in range(base_n)]

        def add_vertex(nbrs) -> int:
            idx = len(adj)
            adj.append(set(nbrs))
            for y in nbrs:
                adj[y].add(idx)
            return idx

        start = pins[0][0] if pins[0][0] is not None else add_vertex(range(base_n))
        for k in range(len(pins) - 1):
            w_k, u_next = pins[k][1], pins[k + 1][0]
            assert w_k is not None and u_next is not None
            h1 = add_vertex([w_k])
            h2 = add_vertex([u_next])
            adj[h1].add(h2)
            adj[h2].add(h1)
        end = pins[-1][1] if pins[-1][1] is not None else add_vertex(range(base_n))
        if start == end or len(adj) < 2:
            return None
        # Shuffle helper ids too: they otherwise keep fixed ids/degrees across
        # retries and the deterministic solver keeps picking the same junction
        # orientation.
        sigma = list(range(len(adj)))
        if attempt:
            rng.shuffle(sigma)
        inv_sigma = [0] * len(sigma)
        for new, old in enumerate(sigma):
            inv_sigma[old] = new
        ext = Graph(
            len(adj),
            tuple(frozenset(inv_sigma[y] for y in adj[sigma[x]]) for x in range(len(adj))),
        )
        status, witness = hamiltonian_path(
            ext, endpoints=(inv_sigma[start], inv_sigma[end]), budget=budget
        )
        if status is SearchStatus.REFUTED:
            return None
        if status is not SearchStatus.FOUND:
            return None  # budget exhausted
        order = [sigma[x] for x in witness.order]
        if order[0] != start:
            order.reverse()
        inv = {new: old for old, new in relab.items()}
        paths: list[list[int]] = []
        run: list[int] = []
        for x in order:
            if x < base_n:
                run.append(inv[perm[x]])
            elif run:
                paths.append(run)
                run = []
        if run:
            paths.append(run)
        ok = len(paths) == len(segs)
        if ok:
            for path, (u, w) in zip(paths, segs):
                if (u is not None and path[0] != u) or (w is not None and path[-1] != w):
                    ok = False
                    break
        if ok:
            return paths
    return None


def _skeletons(alive_link: list[bool], alive_mark: dict) -> list[list[tuple]]:
    """All stretch sequences [(part, entry_role, exit_role)] over live links.

    A sequence starts and ends with a free end (role None); consecutive
    stretches are joined by one unused live link; each attachment point is used
    at most once and each part carries at most two stretches.
    """
    out: list[list[tuple]] = []

    def rec(seq, used_links, used_marks, counts):
        part, entry = seq[-1]
        if all(counts[i] >= 1 for i in range(4)):
            out.append([*seq[:-1], (part, entry, None)])
        for li, (end_a, end_b) in enumerate(_LINKS):
            if li in used_links or not alive_link[li]:
                continue
            for (p1, r1), (p2, r2) in ((end_a, end_b), (end_b, end_a)):
                if p1 != part or counts[p2] >= 2:
                    continue
                if (p1, r1) in used_marks or (p2, r2) in used_marks:
                    continue
                if not (alive_mark[(p1, r1)] and alive_mark[(p2, r2)]):
                    continue
                seq2 = seq[:-1] + [(part, entry, r1), (p2, r2)]
                counts[p2] += 1
                rec(seq2, used_links | {li}, used_marks | {(p1, r1), (p2, r2)}, counts)
                counts[p2] -= 1

    for start in range(4):
        counts = [0, 0, 0, 0]
        counts[start] = 1
        rec([(start, None)], frozenset(), frozenset(), counts)
    return out


def combined_deleted_path(
    layout: CombineLayout,
    v: int,
    budget: Optional[SearchBudget] = None,
    cache: Optional[dict] = None,
) -> Optional[tuple[int, ...]]:
    """Hamiltonian path of `layout.graph` minus vertex `v`, found structurally.

    Splits the problem along the part decomposition: every Hamiltonian path of
    the combined graph minus `v` induces, in each part, one or two disjoint
    covering paths whose ends sit on the six attachment points (or on the two
    free path ends). All such skeletons are enumerated and each part-level
    piece is solved as an exact pinned-endpoint path search on a part-sized
    graph, so a hit assembles into a validated global witness. `budget` bounds
    each part-level search; `cache` (a dict) reuses part-level results across
    calls on the same layout. Returns the path in combined-graph ids, or None.
    """
    graph = layout.graph
    if not (0 <= v < graph.n):
        raise GraphInputError(f"vertex {v} out of range for n={graph.n}")
    if budget is None:
        budget = SearchBudget(node_limit=500_000)
    if cache is None:
        cache = {}

    global_of = [
        {loc: g for loc, g in layout.to_global[i].items()} for i in range(4)
    ]
    local_of = [{g: loc for loc, g in global_of[i].items()} for i in range(4)]
    merge_parts = {layout.merges[0]: (0, 1), layout.merges[1]: (2, 3)}

    alive_mark = {
        (i, r): global_of[i][layout.marked[i][r]] != v
        for i in range(4)
        for r in range(3)
    }
    alive_link = [alive_mark[ea] and alive_mark[eb] for ea, eb in _LINKS]

    def solve_part(i, removed, segs):
        key = (i, frozenset(removed), tuple(segs))
        if key not in cache:
            cache[key] = _part_cover(layout.parts[i], frozenset(removed), tuple(segs), budget)
        return cache[key]

    candidates = []
    for skel in _skeletons(alive_link, alive_mark):
        link_used = {li: False for li in (0, 1)}
        for k in range(len(skel) - 1):
            exit_mark = (skel[k][0], skel[k][2])
            for li in (0, 1):
                if exit_mark in _LINKS[li]:
                    link_used[li] = True
        # Each unused merge vertex must be covered by exactly one of its parts.
        owner_choices = [[None], [None]]
        for li, merge in enumerate(layout.merges):
            if not link_used[li] and merge != v:
                owner_choices[li] = list(merge_parts[merge])
        for owner_a in owner_choices[0]:
            for owner_b in owner_choices[1]:
                candidates.append((skel, (owner_a, owner_b)))

    def penalty(item):
        skel, owners = item
        bad = 0
        for part, entry, exit_ in skel:
            contains_v = v in local_of[part]
            whole = not contains_v and all(
                not (owners[li] is not None and owners[li] != part)
                for li, merge in enumerate(layout.merges)
                if part in merge_parts.get(merge, ())
            )
            if entry is not None and exit_ is not None and whole:
                # Covering an intact part in one marked-to-marked pass would
                # make that part's source graph Hamiltonian; try these last.
                bad += 1
        return (bad, len(skel))

    candidates.sort(key=penalty)

    for skel, owners in candidates:
        part_segs = {i: [] for i in range(4)}
        feasible = True
        for part, entry, exit_ in skel:
            u = layout.marked[part][entry] if entry is not None else None
            w = layout.marked[part][exit_] if exit_ is not None else None
            part_segs[part].append((u, w))
        part_removed = {i: set() for i in range(4)}
        for i in range(4):
            if v in local_of[i]:
                part_removed[i].add(local_of[i][v])
        for li, merge in enumerate(layout.merges):
            pa, pb = merge_parts[merge]
            if merge == v:
                part_removed[pa].add(layout.marked[pa][0])
                part_removed[pb].add(layout.marked[pb][0])
            elif not link_used_for(skel, li):
                owner = owners[li]
                loser = pb if owner == pa else pa
                part_removed[loser].add(layout.marked[loser][0])
        for i in range(4):
            if any(
                (u is not None and u in part_removed[i])
                or (w is not None and w in part_removed[i])
                for u, w in part_segs[i]
            ):
                feasible = False
        if not feasible:
            continue
        covers = {}
        for i in range(4):
            covers[i] = solve_part(i, part_removed[i], part_segs[i])
            if covers[i] is None:
                break
        if any(covers.get(i) is None for i in range(4)):
            continue

        consumed = {i: 0 for i in range(4)}
        path: list[int] = []
        for part, entry, exit_ in skel:
            local = covers[part][consumed[part]]
            consumed[part] += 1
            seg = [global_of[part][x] for x in local]
            if path and seg and path[-1] == seg[0]:
                seg = seg[1:]  # shared merge vertex
            path.extend(seg)
        expect = graph.n - 1
        ok = (
            len(path) == expect
            and len(set(path)) == expect
            and v not in path
            and all(path[k + 1] in graph.adj[path[k]] for k in range(len(path) - 1))
        )
        if ok:
            return tuple(path)
    return None


def link_used_for(skel, li: int) -> bool:
    """Whether merge link `li` (0 or 1) joins two stretches of `skel`."""
    for part, _entry, exit_ in skel:
        if exit_ is not None and (part, exit_) in _LINKS[li]:
            return True
    return False
