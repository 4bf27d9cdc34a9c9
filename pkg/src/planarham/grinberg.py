"""Grinberg obstruction: certify non-Hamiltonicity of a plane graph from face sizes.

For a Hamiltonian cycle of a plane graph, the faces inside and outside the
cycle satisfy sum(k-2) inside == sum(k-2) outside. If no sub-multiset of face
weights reaches half the total, no Hamiltonian cycle can exist. The check is a
relaxation (it ignores which faces can geometrically sit together), so a found
partition proves nothing: the verdict is then inconclusive.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, GraphInputError, build_graph
from .hamilton import CycleWitness, validate_cycle_witness
from .planar import Embedding, FaceSizeMultiset, faces, planar_embedding

STATEMENT = "no balanced partition exists, hence no Hamiltonian cycle"


@dataclass(frozen=True)
class GrinbergPartition:
    inside: tuple[int, ...]  # face sizes, one side of the balance
    outside: tuple[int, ...]

    def balanced(self) -> bool:
        return sum(k - 2 for k in self.inside) == sum(k - 2 for k in self.outside)


@dataclass(frozen=True)
class GrinbergCertificate:
    face_sizes: FaceSizeMultiset
    reason: str  # "parity" | "exhausted-subset-sum"
    statement: str = STATEMENT


def grinberg_partition(sizes: FaceSizeMultiset) -> Optional[GrinbergPartition]:
    """Balanced split of face weights (k-2) by subset-sum DP, or None if impossible."""
    s = sizes.sizes
    if len(s) < 2:
        raise GraphInputError("need at least 2 faces")
    if any(k < 3 for k in s):
        raise GraphInputError("face sizes must be >= 3")
    weights = [k - 2 for k in s]
    total = sum(weights)
    if total % 2 == 1:
        return None
    half = total // 2
    # reach[i] = bitset of sums attainable with the first i weights
    reach = [1]
    for w in weights:
        reach.append(reach[-1] | (reach[-1] << w))
    if not (reach[-1] >> half) & 1:
        return None
    inside, outside = [], []
    t = half
    for i in range(len(weights), 0, -1):
        w = weights[i - 1]
        if t >= w and (reach[i - 1] >> (t - w)) & 1:
            inside.append(s[i - 1])
            t -= w
        else:
            outside.append(s[i - 1])
    part = GrinbergPartition(tuple(sorted(inside)), tuple(sorted(outside)))
    assert part.balanced() and part.inside and part.outside
    return part


def grinberg_obstruction(g: Graph) -> Optional[GrinbergCertificate]:
    """Certificate of non-Hamiltonicity, or None when the relaxed test is inconclusive."""
    emb = planar_embedding(g)
    if emb is None:
        raise GraphInputError("grinberg_obstruction requires a planar graph")
    fs = faces(emb)
    if len(fs.sizes) < 2:
        return None  # a tree-like or degenerate patch proves nothing here
    weights_total = sum(k - 2 for k in fs.sizes)
    if grinberg_partition(fs) is None:
        reason = "parity" if weights_total % 2 == 1 else "exhausted-subset-sum"
        return GrinbergCertificate(face_sizes=fs, reason=reason)
    return None


def _graph_of_embedding(e: Embedding) -> Graph:
    n = len(e.rotation)
    return build_graph(
        n, [(u, v) for u in range(n) for v in e.rotation[u] if u < v]
    )


def grinberg_residual(e: Embedding, c: CycleWitness) -> int:
    """Evaluate sum(k-2) difference across the two sides of a Hamiltonian cycle.

    Faces are classified by 2-coloring the face adjacency: faces sharing a
    cycle edge lie on opposite sides, faces sharing any other edge on the same
    side. The result is 0 for every genuine Hamiltonian cycle of a plane graph.
    """
    g = _graph_of_embedding(e)
    if not validate_cycle_witness(g, c):
        raise GraphInputError("witness is not a Hamiltonian cycle of the embedded graph")
    dart_face: dict[tuple[int, int], int] = {}
    for fi, walk in enumerate(e.faces):
        k = len(walk)
        for i in range(k):
            dart_face[(walk[i], walk[(i + 1) % k])] = fi
    n = g.n
    cycle_edges = {
        frozenset((c.order[i], c.order[(i + 1) % n])) for i in range(n)
    }
    color = {0: 0}
    queue = deque([0])
    while queue:
        fi = queue.popleft()
        walk = e.faces[fi]
        k = len(walk)
        for i in range(k):
            u, v = walk[i], walk[(i + 1) % k]
            fj = dart_face[(v, u)]
            want = color[fi] ^ (1 if frozenset((u, v)) in cycle_edges else 0)
            if fj in color:
                if color[fj] != want:
                    raise AssertionError("face sides are not 2-colorable; embedding invalid")
            else:
                color[fj] = want
                queue.append(fj)
    if len(color) != len(e.faces):
        raise AssertionError("face adjacency is disconnected; embedding invalid")
    return sum(
        (len(walk) - 2) * (1 if color[fi] == 0 else -1)
        for fi, walk in enumerate(e.faces)
    )
