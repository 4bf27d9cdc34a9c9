"""Obstruction-directed repair of 41/42 states.

For a state whose single failing deletion G - v* is non-Hamiltonian, look for
a toughness obstruction: a set S (|S| <= 3) with more than |S| components in
G - v* - S. No Hamiltonian cycle survives such a cut, and a single chord flip
can only fix it if the added chord bridges two of the components. Expansion
is restricted to those bridging flips; states without a detectable
obstruction fall back to full expansion.
"""

from __future__ import annotations

import argparse
import heapq
import itertools
import random
import sys
import time
from itertools import combinations

sys.path.insert(0, "/root/pkg/src")

from planarham.graph import delete_vertices
from planarham.graphio import parse_edge_list
from planarham.hamilton import SearchBudget, SearchStatus, hamiltonian_cycle
from planarham.planar import planar_embedding

from fixture_search import apply_flip, enumerate_flips, random_seed_state, valid_state


def load_state(path):
    with open(path) as fh:
        g = parse_edge_list(fh.read())
    emb = planar_embedding(g)
    assert emb is not None
    return list(emb.faces), g


def score_capped(g, order, budget_nodes, max_fails):
    fails = []
    wins = 0
    for v in order:
        sub, _ = delete_vertices(g, {v})
        st, _ = hamiltonian_cycle(sub, SearchBudget(node_limit=budget_nodes))
        if st is SearchStatus.FOUND:
            wins += 1
        else:
            fails.append(v)
            if len(fails) > max_fails:
                return wins, fails
    return wins, fails


def components_of(n, adj, banned):
    """Component label per vertex (-1 for banned); count of components."""
    label = [-1] * n
    c = 0
    for s in range(n):
        if label[s] != -1 or s in banned:
            continue
        stack = [s]
        label[s] = c
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if label[w] == -1 and w not in banned:
                    label[w] = c
                    stack.append(w)
        c += 1
    return label, c


def find_obstruction(sub, max_s=3):
    """Smallest toughness violation (S, component label map) or None."""
    n, adj = sub.n, sub.adj
    for size in range(1, max_s + 1):
        for S in combinations(range(n), size):
            label, c = components_of(n, adj, set(S))
            if c > size:
                return set(S), label
    return None


def deep_check(g, v, budget_nodes=2_000_000):
    sub, _ = delete_vertices(g, {v})
    st, _ = hamiltonian_cycle(sub, SearchBudget(node_limit=budget_nodes))
    return st is SearchStatus.FOUND


def save(g, path, note):
    with open(path, "w") as fh:
        fh.write(f"# {note}\n{g.n} {g.m}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("seeds", nargs="+")
    ap.add_argument("--budget", type=int, default=150_000)
    ap.add_argument("--max-fails", type=int, default=2)
    ap.add_argument("--out", default="/tmp/fixture_win.edges")
    ap.add_argument("--reseed-every", type=int, default=15)
    ap.add_argument("--rng-seed", type=int, default=99)
    args = ap.parse_args()

    rng = random.Random(args.rng_seed)
    counter = itertools.count()
    heap = []
    seen = set()

    def push(faces, g, fails):
        key = frozenset(g.edges())
        if key in seen:
            return
        seen.add(key)
        # random tiebreak spreads expansion across the plateau
        heapq.heappush(heap, (len(fails), rng.random(), next(counter), faces, g, fails))

    for path in args.seeds:
        faces, g = load_state(path)
        _, fails = score_capped(g, range(g.n), args.budget, 42)
        print(f"{path}: fails {fails}")
        push(faces, g, fails)

    t0 = time.time()
    expansions = 0
    guided = 0
    while heap:
        nf, _, _, faces, g, fails = heapq.heappop(heap)
        expansions += 1
        moves = enumerate_flips(faces, g)
        use = moves
        tag = "full"
        if nf == 1:
            v = fails[0]
            if deep_check(g, v):
                save(g, args.out, "score 42")
                print(f"FOUND 42/42 after {expansions} expansions "
                      f"({time.time()-t0:.0f}s); saved {args.out}", flush=True)
                return
            sub, relabel = delete_vertices(g, {v})
            obs = find_obstruction(sub)
            if obs is not None:
                S, label = obs
                inv = {new: old for old, new in relabel.items()}
                comp_of = {}
                for x in range(sub.n):
                    if label[x] != -1:
                        comp_of[inv[x]] = label[x]
                use = []
                for mv in moves:
                    fi, fj, boundary, s, t = mv
                    p, q = boundary[s], boundary[t]
                    if p in comp_of and q in comp_of and comp_of[p] != comp_of[q]:
                        use.append(mv)
                tag = f"v*={v} |S|={len(S)} bridge {len(use)}/{len(moves)}"
                guided += 1
        for mv in use:
            cand_faces = apply_flip(faces, mv)
            cand_g = valid_state(cand_faces)
            if cand_g is None:
                continue
            if frozenset(cand_g.edges()) in seen:
                continue
            order = fails + [x for x in range(42) if x not in fails]
            wins, cfails = score_capped(cand_g, order, args.budget, args.max_fails)
            if len(cfails) > args.max_fails:
                seen.add(frozenset(cand_g.edges()))
                continue
            if wins == 42:
                save(cand_g, args.out, "score 42")
                print(f"FOUND 42/42 after {expansions} expansions "
                      f"({time.time()-t0:.0f}s); saved {args.out}", flush=True)
                return
            push(cand_faces, cand_g, cfails)
        if expansions % 5 == 0:
            print(f"[{time.time()-t0:7.0f}s] exp {expansions} ({tag}), "
                  f"frontier {len(heap)}, guided {guided}", flush=True)
        if args.reseed_every and expansions % args.reseed_every == 0:
            sfaces, sg = random_seed_state(rng)
            _, sfails = score_capped(sg, range(42), args.budget, args.max_fails)
            if len(sfails) <= args.max_fails:
                push(sfaces, sg, sfails)
    print("frontier exhausted")


if __name__ == "__main__":
    main()
