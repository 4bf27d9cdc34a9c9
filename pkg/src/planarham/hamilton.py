"""Complete Hamiltonian cycle/path deciders and budgeted long-cycle search.

All searches are exact backtracking over partial paths with three prunes:
forced moves through degree-2 situations, a degree lower bound for every
still-unvisited vertex, and bit-parallel reachability of the unvisited set.
Vertex sets are Python int bitmasks, so graphs up to a few hundred vertices
stay cheap.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .graph import Graph, GraphInputError


class SearchStatus(Enum):
    FOUND = "found"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CycleWitness:
    order: tuple[int, ...]


@dataclass(frozen=True)
class PathWitness:
    order: tuple[int, ...]


@dataclass(frozen=True)
class SearchBudget:
    node_limit: Optional[int] = None
    time_limit_ms: Optional[int] = None


class BudgetExhausted(Exception):
    pass


def validate_cycle_witness(g: Graph, w: CycleWitness) -> bool:
    o = w.order
    if len(o) != g.n or len(set(o)) != g.n:
        return False
    return all(o[(i + 1) % g.n] in g.adj[o[i]] for i in range(g.n))


def validate_path_witness(g: Graph, w: PathWitness) -> bool:
    o = w.order
    if len(o) != g.n or len(set(o)) != g.n:
        return False
    return all(o[i + 1] in g.adj[o[i]] for i in range(g.n - 1))


def _adj_masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


class _Budget:
    """Mutable node/time counter shared by one search."""

    __slots__ = ("node_limit", "deadline", "nodes")

    def __init__(self, budget: Optional[SearchBudget]):
        self.nodes = 0
        self.node_limit = budget.node_limit if budget else None
        self.deadline = None
        if budget and budget.time_limit_ms is not None:
            self.deadline = time.monotonic() + budget.time_limit_ms / 1000.0

    def tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExhausted
        if self.deadline is not None and self.nodes % 1024 == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExhausted


def _reachable(adjm: list[int], start_mask: int, allowed: int) -> int:
    """Bitmask of `allowed` vertices reachable from the seed mask."""
    reach = start_mask & allowed
    frontier = reach
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adjm[low.bit_length() - 1]
            f ^= low
        nxt &= allowed & ~reach
        reach |= nxt
        frontier = nxt
    return reach


def _path_search(
    adjm: list[int],
    a: int,
    b: int,
    todo: int,
    budget: _Budget,
) -> Optional[list[int]]:
    """Find a path a -> b visiting exactly the vertices of `todo` (a, b included).

    Returns the vertex order or None after exhaustive refutation.
    Raises BudgetExhausted when the budget runs out.
    """
    bbit = 1 << b
    path = [a]
    rem = todo & ~(1 << a)

    def extend(e: int, rem: int) -> bool:
        budget.tick()
        if rem == bbit:
            if adjm[e] & bbit:
                path.append(b)
                return True
            return False

        ebit = 1 << e
        avail = rem | ebit
        # Degree prune + forced-move detection over every remaining vertex.
        forced = -1
        r = rem & ~bbit
        while r:
            low = r & -r
            u = low.bit_length() - 1
            r ^= low
            links = adjm[u] & avail
            c = links.bit_count()
            if c < 2:
                return False
            if c == 2 and links & ebit:
                if forced >= 0:
                    return False  # two vertices both demand the endpoint
                forced = u
        if not adjm[b] & (avail & ~bbit):
            return False
        # Connectivity prune: every remaining vertex reachable from e inside rem.
        if _reachable(adjm, adjm[e] & rem, rem) != rem:
            return False

        if forced >= 0:
            cands = 1 << forced
        else:
            # b is the designated endpoint; never enter it early.
            cands = adjm[e] & rem & ~bbit
        while cands:
            low = cands & -cands
            v = low.bit_length() - 1
            cands ^= low
            path.append(v)
            if extend(v, rem & ~low):
                return True
            path.pop()
        return False

    if a == b or not (todo >> a) & 1 or not (todo >> b) & 1:
        return None
    if rem == 0:
        return None
    if extend(a, rem):
        return path
    return None


def hamiltonian_cycle(
    g: Graph, budget: Optional[SearchBudget] = None
) -> tuple[SearchStatus, Optional[CycleWitness]]:
    """Exhaustively decide Hamiltonicity; FOUND witnesses validate, REFUTED is complete."""
    if g.n < 3:
        raise GraphInputError(f"hamiltonian_cycle needs n >= 3, got {g.n}")
    if any(g.degree(v) < 2 for v in range(g.n)):
        return SearchStatus.REFUTED, None
    adjm = _adj_masks(g)
    s = min(range(g.n), key=lambda v: (g.degree(v), v))
    nbrs = sorted(g.adj[s])
    todo = ((1 << g.n) - 1) & ~(1 << s)
    # Remove s: every Hamiltonian cycle is s plus an a-b path over the rest,
    # with {a, b} an unordered neighbor pair of s.
    adjm_s = [adjm[v] & ~(1 << s) for v in range(g.n)]
    b_ = _Budget(budget)
    try:
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1 :]:
                found = _path_search(adjm_s, a, b, todo, b_)
                if found is not None:
                    w = CycleWitness(tuple([s] + found))
                    assert validate_cycle_witness(g, w)
                    return SearchStatus.FOUND, w
    except BudgetExhausted:
        return SearchStatus.UNKNOWN, None
    return SearchStatus.REFUTED, None


def hamiltonian_path(
    g: Graph,
    endpoints: Optional[tuple[int, int]] = None,
    budget: Optional[SearchBudget] = None,
) -> tuple[SearchStatus, Optional[PathWitness]]:
    """Exhaustively decide Hamiltonian path existence, optionally with pinned endpoints.

    Reduction: add one helper vertex adjacent to the allowed endpoints (all
    vertices when unconstrained) and look for a Hamiltonian cycle.
    """
    if g.n < 2:
        raise GraphInputError(f"hamiltonian_path needs n >= 2, got {g.n}")
    if endpoints is not None:
        a, b = endpoints
        if a == b or not (0 <= a < g.n and 0 <= b < g.n):
            raise GraphInputError(f"invalid endpoints {endpoints}")
        ends = [a, b]
    else:
        ends = list(range(g.n))

    # Helper vertex adjacent to every allowed endpoint; a Hamiltonian path of g
    # is exactly a Hamiltonian cycle of the extended graph through the helper.
    h = g.n
    ext = Graph(
        g.n + 1,
        tuple(
            (g.adj[v] | {h}) if v in ends else g.adj[v] for v in range(g.n)
        )
        + (frozenset(ends),),
    )
    status, cyc = hamiltonian_cycle(ext, budget)
    if status is not SearchStatus.FOUND:
        return status, None
    order = list(cyc.order)
    i = order.index(h)
    w = PathWitness(tuple(order[i + 1 :] + order[:i]))
    assert validate_path_witness(g, w)
    if endpoints is not None:
        assert {w.order[0], w.order[-1]} == set(ends)
    return SearchStatus.FOUND, w


def cycle_of_length_at_least(
    g: Graph, length: int, budget: Optional[SearchBudget] = None
) -> tuple[SearchStatus, Optional[CycleWitness]]:
    """Simple cycle of length >= `length`, exhaustive refutation, or UNKNOWN on budget."""
    if not 3 <= length <= g.n:
        raise GraphInputError(f"cycle length {length} out of range for n={g.n}")
    adjm = _adj_masks(g)
    b_ = _Budget(budget)
    path: list[int] = []

    def extend(s: int, e: int, rem: int, plen: int) -> bool:
        # plen = number of vertices on the path (s..e).
        b_.tick()
        if plen >= length and adjm[e] & (1 << s):
            return True
        reach = _reachable(adjm, adjm[e] & rem, rem)
        if plen + reach.bit_count() < length:
            return False
        # The cycle must close back into s.
        if not adjm[e] & (1 << s) and not adjm[s] & reach:
            return False
        cands = adjm[e] & rem
        while cands:
            low = cands & -cands
            v = low.bit_length() - 1
            cands ^= low
            path.append(v)
            if extend(s, v, rem & ~low, plen + 1):
                return True
            path.pop()
        return False

    try:
        for s in range(g.n - length + 1):
            # Canonical form: s is the smallest vertex on the cycle.
            allowed = ((1 << g.n) - 1) & ~((1 << (s + 1)) - 1)
            path = [s]
            if extend(s, s, allowed, 1):
                w = CycleWitness(tuple(path))
                assert len(w.order) >= length
                assert all(
                    w.order[(i + 1) % len(w.order)] in g.adj[w.order[i]]
                    for i in range(len(w.order))
                )
                return SearchStatus.FOUND, w
    except BudgetExhausted:
        return SearchStatus.UNKNOWN, None
    return SearchStatus.REFUTED, None
