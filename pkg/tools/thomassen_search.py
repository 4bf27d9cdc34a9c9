"""Determine the cross-edge pattern for the Thomassen combination.

Enumerates perfect matchings of the eight non-identified pivot neighbors
(no intra-part edges), builds the four-Petersen combination for each, and
reports which patterns give a hypotraceable 34-vertex graph. The canonical
first hit is frozen into planarham.constructions.CROSS_EDGES.
"""

from __future__ import annotations

import sys
import time

sys.path.insert(0, "/root/pkg/src")

from planarham.constructions import CombineRecipe, _combine_with_roles, petersen
from planarham.graph import is_connected
from planarham.hamilton import SearchStatus, hamiltonian_path
from planarham.verify import verify_hypotraceable

SLOTS = [(i, r) for i in range(4) for r in (1, 2)]


def matchings(slots):
    if not slots:
        yield []
        return
    a = slots[0]
    for k in range(1, len(slots)):
        b = slots[k]
        if a[0] == b[0]:
            continue  # no intra-part cross edge
        rest = slots[1:k] + slots[k + 1 :]
        for m in matchings(rest):
            yield [(a, b)] + m


def main():
    p = petersen()
    recipe = CombineRecipe((p, p, p, p), (0, 0, 0, 0))
    roles = [(0, 1, 2)] * 4
    hits = []
    cands = list(matchings(SLOTS))
    print(f"{len(cands)} candidate matchings")
    for idx, cross in enumerate(cands):
        g = _combine_with_roles(recipe, roles, tuple(cross))
        if g.n != 34 or not is_connected(g):
            continue
        t = time.time()
        st, w = hamiltonian_path(g)
        dt = time.time() - t
        if st is SearchStatus.FOUND:
            continue
        print(f"cand {idx} {cross}: NoPath refuted in {dt:.1f}s, checking deletions...")
        rep = verify_hypotraceable(g)
        print(f"  -> verdict {rep.verdict}")
        if rep.verdict == "pass":
            hits.append(cross)
            print("HYPOTRACEABLE:", cross, flush=True)
    print(f"{len(hits)} hypotraceable patterns")
    for h in hits:
        print(h)


if __name__ == "__main__":
    main()
