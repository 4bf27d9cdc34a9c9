"""Shared independent oracles and random-graph helpers for the test suite.

Everything here is deliberately naive: plain recursion, no bitmasks, no
shared code with the package internals, so the two sides can disagree.
"""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx

from planarham.graph import Graph, build_graph


# ------------------------------------------------------------ brute oracles

def brute_hamiltonian_cycle(g: Graph) -> bool:
    """Adjacency-pruned DFS over vertex orders; independent of the solver."""
    if g.n < 3:
        return False
    start = 0

    def go(v, visited):
        if len(visited) == g.n:
            return start in g.adj[v]
        for w in sorted(g.adj[v]):
            if w not in visited:
                visited.add(w)
                if go(w, visited):
                    return True
                visited.remove(w)
        return False

    return go(start, {start})


def brute_hamiltonian_path(g: Graph) -> bool:
    def go(v, visited):
        if len(visited) == g.n:
            return True
        for w in sorted(g.adj[v]):
            if w not in visited:
                visited.add(w)
                if go(w, visited):
                    return True
                visited.remove(w)
        return False

    return any(go(s, {s}) for s in range(g.n))


def _has_clique(g: Graph, size: int) -> bool:
    return any(
        all(v in g.adj[u] for u, v in combinations(c, 2))
        for c in combinations(range(g.n), size)
    )


def _has_k33(g: Graph) -> bool:
    if g.n < 6:
        return False
    for left in combinations(range(g.n), 3):
        rest = [v for v in range(g.n) if v not in left]
        for right in combinations(rest, 3):
            if all(b in g.adj[a] for a in left for b in right):
                return True
    return False


def _contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Merge v into u and relabel densely."""
    keep = [x for x in range(g.n) if x != v]
    lab = {old: new for new, old in enumerate(keep)}
    edges = set()
    for a in range(g.n):
        for b in g.adj[a]:
            if a >= b:
                continue
            a2 = u if a == v else a
            b2 = u if b == v else b
            if a2 != b2:
                edges.add((min(lab[a2], lab[b2]), max(lab[a2], lab[b2])))
    return build_graph(g.n - 1, edges)


def oracle_planar(g: Graph) -> bool:
    """Exact planarity for n <= 6 via Wagner's theorem.

    With at most 6 vertices a K3,3 minor must be a K3,3 subgraph, and a K5
    minor is a K5 subgraph either directly or after contracting one edge.
    """
    assert g.n <= 6
    if g.n < 5:
        return True
    if _has_clique(g, 5) or _has_k33(g):
        return False
    if g.n == 6:
        for u in range(g.n):
            for v in g.adj[u]:
                if u < v and _has_clique(_contract_edge(g, u, v), 5):
                    return False
    return True


def graph6_pack_oracle(g: Graph) -> str:
    """Independent straight-line graph6 packer (n <= 62 only)."""
    assert g.n <= 62
    bitstring = ""
    for j in range(1, g.n):
        for i in range(j):
            bitstring += "1" if g.has_edge(i, j) else "0"
    bitstring += "0" * (-len(bitstring) % 6)
    chars = chr(63 + g.n)
    for k in range(0, len(bitstring), 6):
        chars += chr(63 + int(bitstring[k : k + 6] or "0", 2))
    return chars


# ------------------------------------------------------------ generators

def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return build_graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random spanning tree plus independent extra edges."""
    tree = [(v, rng.randrange(v)) for v in range(1, n)]
    extra = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return build_graph(n, tree + extra)


def random_planar_graph(rng: random.Random, n: int, attempts: int = 60) -> Graph:
    """Random spanning tree, then greedily add edges while planarity holds."""
    tree = [(v, rng.randrange(v)) for v in range(1, n)] if n > 1 else []
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from(tree)
    cands = [(u, v) for u, v in combinations(range(n), 2) if not nxg.has_edge(u, v)]
    rng.shuffle(cands)
    for u, v in cands[:attempts]:
        nxg.add_edge(u, v)
        if not nx.check_planarity(nxg, counterexample=False)[0]:
            nxg.remove_edge(u, v)
    return build_graph(n, list(nxg.edges()))


def atlas_connected_graphs(max_n: int = 7):
    """Every connected graph on at most max_n vertices (complete catalog)."""
    for a in nx.graph_atlas_g()[1:]:
        n = a.number_of_nodes()
        if n < 2 or n > max_n:
            continue
        if not nx.is_connected(a):
            continue
        lab = {old: new for new, old in enumerate(sorted(a.nodes()))}
        yield build_graph(n, [(lab[u], lab[v]) for u, v in a.edges()])


# ------------------------------------------------------------ named fixtures

def k4() -> Graph:
    return build_graph(4, list(combinations(range(4), 2)))


def cube_q3() -> Graph:
    edges = []
    for v in range(8):
        for bit in (1, 2, 4):
            w = v ^ bit
            if v < w:
                edges.append((v, w))
    return build_graph(8, edges)


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_k13() -> Graph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3)])
