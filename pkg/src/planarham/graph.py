"""Immutable simple undirected graphs with dense 0-based vertex ids."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


class GraphInputError(ValueError):
    """Raised for loops, out-of-range endpoints and malformed vertex sets."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with frozen adjacency sets."""

    n: int
    adj: tuple[frozenset[int], ...]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges as (u, v) with u < v."""
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def vertices(self) -> range:
        return range(self.n)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from unordered pairs; duplicates collapse, loops are rejected."""
    if n < 0:
        raise GraphInputError(f"vertex count must be nonnegative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphInputError(f"loop at vertex {u} rejected")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj))


def delete_vertices(g: Graph, drop: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on V minus `drop`, relabeled contiguously.

    Returns (subgraph, old_id -> new_id map for the kept vertices).
    """
    dropped = set(drop)
    for v in dropped:
        if not (0 <= v < g.n):
            raise GraphInputError(f"vertex {v} out of range for n={g.n}")
    kept = [v for v in range(g.n) if v not in dropped]
    relabel = {old: new for new, old in enumerate(kept)}
    adj = tuple(
        frozenset(relabel[w] for w in g.adj[old] if w not in dropped) for old in kept
    )
    return Graph(len(kept), adj), relabel


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                queue.append(w)
    return count == g.n


def _vertex_disjoint_paths_at_least(g: Graph, s: int, t: int, k: int) -> bool:
    """True iff there are >= k internally vertex-disjoint s-t paths (Menger).

    Unit-capacity max flow on the split graph: each vertex v becomes v_in -> v_out
    with capacity 1; edges get infinite capacity in both directions. Flow is grown
    by BFS augmentation and stops as soon as k units are routed.
    """
    # Node encoding: 2*v = v_in, 2*v+1 = v_out. s and t are not split.
    cap: dict[tuple[int, int], int] = {}

    def add(a: int, b: int, c: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)

    big = g.n + 1
    for v in range(g.n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u in range(g.n):
        for w in g.adj[u]:
            add(2 * u + 1, 2 * w, big)

    out: dict[int, list[int]] = {}
    for a, b in cap:
        out.setdefault(a, []).append(b)

    flow = 0
    source, sink = 2 * s + 1, 2 * t
    while flow < k:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return False
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return True


def is_k_connected(g: Graph, k: int) -> bool:
    """k-connectivity via Menger: >= k internally disjoint paths between nonadjacent pairs."""
    if k < 1:
        raise GraphInputError(f"k must be positive, got {k}")
    if g.n <= k:
        return False
    if k == 1:
        return is_connected(g)
    if any(g.degree(v) < k for v in range(g.n)):
        return False
    for u, v in combinations(range(g.n), 2):
        if v in g.adj[u]:
            continue
        if not _vertex_disjoint_paths_at_least(g, u, v, k):
            return False
    return True


def is_k_connected_bruteforce(g: Graph, k: int) -> bool:
    """Test-only oracle: delete every subset of fewer than k vertices, check connectivity."""
    if g.n <= k:
        return False
    for size in range(k):
        for cut in combinations(range(g.n), size):
            sub, _ = delete_vertices(g, cut)
            if not is_connected(sub):
                return False
    return True


def cubic_vertices(g: Graph) -> list[int]:
    """Vertices of degree exactly 3, ascending."""
    return [v for v in range(g.n) if g.degree(v) == 3]


def relabel_graph(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply permutation perm (new id of old vertex v is perm[v])."""
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for u in range(g.n):
        for w in g.adj[u]:
            adj[perm[u]].add(perm[w])
    return Graph(g.n, tuple(frozenset(a) for a in adj))
