"""High-throughput plateau search: Python flip moves + Rust deletion scorer.

Best-first over chord flips keeping states with at most --max-fails failing
deletions; fails-1 states get a large-budget re-check of the failing vertex
before expansion. Scoring goes through the persistent hamscore subprocess.
"""

from __future__ import annotations

import argparse
import heapq
import itertools
import random
import subprocess
import sys
import time

sys.path.insert(0, "/root/pkg/src")

from planarham.graphio import parse_edge_list, write_graph6
from planarham.planar import planar_embedding

from fixture_search import apply_flip, enumerate_flips, random_seed_state, valid_state

HAMSCORE = "/root/pkg/tools/hamscore/target/release/hamscore"


class Scorer:
    def __init__(self):
        self.proc = subprocess.Popen(
            [HAMSCORE], stdin=subprocess.PIPE, stdout=subprocess.PIPE,
            text=True, bufsize=1,
        )

    def fails(self, g, budget, max_fails, order=()):
        toks = [str(budget), str(max_fails), str(g.n), str(g.m)]
        for u, v in g.edges():
            toks.append(f"{u} {v}")
        toks.extend(str(v) for v in order)
        self.proc.stdin.write(" ".join(toks) + "\n")
        return [int(x) for x in self.proc.stdout.readline().split()[2:]]

    def deep_ham(self, g, v, budget):
        toks = ["deep", str(budget), str(v), str(g.n), str(g.m)]
        for a, b in g.edges():
            toks.append(f"{a} {b}")
        self.proc.stdin.write(" ".join(toks) + "\n")
        return self.proc.stdout.readline().split()[1] == "1"


def load_state(path):
    with open(path) as fh:
        g = parse_edge_list(fh.read())
    emb = planar_embedding(g)
    assert emb is not None
    return list(emb.faces), g


def save(g, path, note):
    with open(path, "w") as fh:
        fh.write(f"# {note}\n{g.n} {g.m}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("seeds", nargs="+")
    ap.add_argument("--budget", type=int, default=150_000)
    ap.add_argument("--deep-budget", type=int, default=50_000_000)
    ap.add_argument("--max-fails", type=int, default=2)
    ap.add_argument("--out", default="/tmp/fixture_win.edges")
    ap.add_argument("--reseed-every", type=int, default=40)
    ap.add_argument("--rng-seed", type=int, default=7)
    args = ap.parse_args()

    rng = random.Random(args.rng_seed)
    scorer = Scorer()
    counter = itertools.count()
    heap = []
    seen = set()

    def push(faces, g, fails):
        key = write_graph6(g)
        if key in seen:
            return
        seen.add(key)
        heapq.heappush(heap, (len(fails), rng.random(), next(counter), faces, g, fails))

    for path in args.seeds:
        faces, g = load_state(path)
        fails = scorer.fails(g, args.budget, 42)
        print(f"{path}: fails {fails}")
        push(faces, g, fails)

    t0 = time.time()
    expansions = 0
    cands = 0
    deep_calls = 0
    while heap:
        nf, _, _, faces, g, fails = heapq.heappop(heap)
        expansions += 1
        if nf == 1:
            deep_calls += 1
            if scorer.deep_ham(g, fails[0], args.deep_budget):
                save(g, args.out, "score 42 (deep re-check)")
                print(f"FOUND 42/42 after {expansions} expansions "
                      f"({time.time()-t0:.0f}s); saved {args.out}", flush=True)
                return
        order = fails + [x for x in range(42) if x not in fails]
        for mv in enumerate_flips(faces, g):
            cand_faces = apply_flip(faces, mv)
            cand_g = valid_state(cand_faces)
            if cand_g is None:
                continue
            key = write_graph6(cand_g)
            if key in seen:
                continue
            cands += 1
            cfails = scorer.fails(cand_g, args.budget, args.max_fails, order)
            if len(cfails) > args.max_fails:
                seen.add(key)
                continue
            if not cfails:
                save(cand_g, args.out, "score 42")
                print(f"FOUND 42/42 after {expansions} expansions "
                      f"({time.time()-t0:.0f}s); saved {args.out}", flush=True)
                return
            push(cand_faces, cand_g, cfails)
        if expansions % 50 == 0:
            dt = time.time() - t0
            print(f"[{dt:7.0f}s] exp {expansions}, cands {cands} "
                  f"({cands/max(dt,1):.0f}/s), frontier {len(heap)}, "
                  f"deep {deep_calls}", flush=True)
        if args.reseed_every and expansions % args.reseed_every == 0:
            sfaces, sg = random_seed_state(rng)
            sfails = scorer.fails(sg, args.budget, args.max_fails)
            if len(sfails) <= args.max_fails:
                push(sfaces, sg, sfails)
    print("frontier exhausted")


if __name__ == "__main__":
    main()
