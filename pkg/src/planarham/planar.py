"""Planarity testing, combinatorial embeddings and face enumeration.

The planarity decision and rotation system come from the left-right algorithm
(networkx); face tracing, Euler checking and the value types are local, so a
bogus rotation system fails loudly here.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .graph import Graph, GraphInputError, is_connected


@dataclass(frozen=True)
class Embedding:
    """Rotation system (clockwise neighbor order per vertex) plus derived faces."""

    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[int, ...], ...]

    @property
    def face_count(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class FaceSizeMultiset:
    sizes: tuple[int, ...]  # sorted ascending

    def counter(self) -> Counter:
        return Counter(self.sizes)


def trace_faces(n: int, rotation: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Partition all darts into face cycles of the given rotation system.

    A face is reported as the cyclic vertex sequence of its boundary walk; every
    directed edge (dart) lies on exactly one reported face.
    """
    pos = [{u: i for i, u in enumerate(rot)} for rot in rotation]
    unused = {(u, v) for u in range(n) for v in rotation[u]}
    faces = []
    while unused:
        start = min(unused)
        walk = []
        dart = start
        while True:
            walk.append(dart[0])
            unused.discard(dart)
            u, v = dart
            rot = rotation[v]
            dart = (v, rot[(pos[v][u] + 1) % len(rot)])
            if dart == start:
                break
        faces.append(tuple(walk))
    return tuple(faces)


def planar_embedding(g: Graph) -> Optional[Embedding]:
    """Combinatorial embedding of a connected planar graph, or None if nonplanar.

    Successful embeddings are checked against Euler's formula before return.
    """
    if not is_connected(g):
        raise GraphInputError("planar_embedding requires a connected graph")
    if g.n == 0:
        raise GraphInputError("planar_embedding requires a nonempty graph")
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    ok, emb = nx.check_planarity(nxg, counterexample=False)
    if not ok:
        return None
    rotation = tuple(tuple(emb.neighbors_cw_order(v)) for v in range(g.n))
    return embedding_from_rotation(g, rotation)


def embedding_from_rotation(g: Graph, rotation: tuple[tuple[int, ...], ...]) -> Embedding:
    """Build an Embedding from a rotation system, enforcing the Euler invariants."""
    faces = trace_faces(g.n, rotation)
    if sum(len(f) for f in faces) != 2 * g.m:
        raise AssertionError("face trace does not cover every dart exactly once")
    f = len(faces) if g.m > 0 else 1
    if g.n - g.m + f != 2:
        raise AssertionError(
            f"rotation system is not planar: n={g.n} m={g.m} f={f}"
        )
    if g.m == 0:
        faces = (tuple(),)
    return Embedding(rotation=rotation, faces=faces)


def genus_of_rotation(g: Graph, rotation: tuple[tuple[int, ...], ...]) -> int:
    """Euler genus 2 - n + m - f of a rotation system (0 means planar)."""
    faces = trace_faces(g.n, rotation)
    f = len(faces) if g.m > 0 else 1
    return 2 - g.n + g.m - f


def faces(e: Embedding) -> FaceSizeMultiset:
    return FaceSizeMultiset(tuple(sorted(len(f) for f in e.faces)))
