// Deletion-Hamiltonicity scorer for 42-vertex candidates.
//
// Line protocol on stdin, one candidate per line:
//   budget max_fails n m u1 v1 u2 v2 ... um vm [order v...]
// Reply on stdout, one line:
//   fails <k> <v...>        (k capped at max_fails + 1; early abort)
// A line "deep <budget> <v> <n> <m> <edges...>" checks a single deletion with
// a big budget and replies "ham 1" or "ham 0" (0 also on budget exhaustion).

use std::io::{self, BufRead, Write};

struct Budget {
    nodes: u64,
    limit: u64,
}

impl Budget {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.limit
    }
}

fn reachable(adj: &[u64], seed: u64, allowed: u64) -> u64 {
    let mut reach = seed & allowed;
    let mut frontier = reach;
    while frontier != 0 {
        let mut nxt: u64 = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            nxt |= adj[v];
            f &= f - 1;
        }
        nxt &= allowed & !reach;
        reach |= nxt;
        frontier = nxt;
    }
    reach
}

/// Path from a to b visiting exactly `todo`; true if found (exhaustive otherwise).
/// Returns Err(()) when the budget runs out.
fn path_search(adj: &[u64], a: usize, b: usize, todo: u64, bd: &mut Budget) -> Result<bool, ()> {
    let bbit = 1u64 << b;

    fn extend(adj: &[u64], e: usize, rem: u64, bbit: u64, b: usize, bd: &mut Budget) -> Result<bool, ()> {
        if !bd.tick() {
            return Err(());
        }
        if rem == bbit {
            return Ok(adj[e] & bbit != 0);
        }
        let ebit = 1u64 << e;
        let avail = rem | ebit;
        let mut forced: i32 = -1;
        let mut r = rem & !bbit;
        while r != 0 {
            let u = r.trailing_zeros() as usize;
            r &= r - 1;
            let links = adj[u] & avail;
            let c = links.count_ones();
            if c < 2 {
                return Ok(false);
            }
            if c == 2 && links & ebit != 0 {
                if forced >= 0 {
                    return Ok(false);
                }
                forced = u as i32;
            }
        }
        if adj[b] & (avail & !bbit) == 0 {
            return Ok(false);
        }
        if reachable(adj, adj[e] & rem, rem) != rem {
            return Ok(false);
        }
        let mut cands = if forced >= 0 {
            1u64 << forced
        } else {
            adj[e] & rem & !bbit
        };
        while cands != 0 {
            let v = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if extend(adj, v, rem & !(1u64 << v), bbit, b, bd)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    let rem = todo & !(1u64 << a);
    if a == b || todo & (1u64 << a) == 0 || todo & bbit == 0 || rem == 0 {
        return Ok(false);
    }
    extend(adj, a, rem, bbit, b, bd)
}

/// Exhaustive Hamiltonicity; Err(()) = budget exhausted (treat as not found).
fn hamiltonian(adj: &[u64], n: usize, limit: u64) -> Result<bool, ()> {
    if n < 3 {
        return Ok(false);
    }
    for v in 0..n {
        if (adj[v].count_ones() as usize) < 2 {
            return Ok(false);
        }
    }
    let s = (0..n).min_by_key(|&v| (adj[v].count_ones(), v)).unwrap();
    let todo = ((1u64 << n) - 1) & !(1u64 << s);
    let adj_s: Vec<u64> = (0..n).map(|v| adj[v] & !(1u64 << s)).collect();
    let mut nbrs: Vec<usize> = (0..n).filter(|&v| adj[s] & (1u64 << v) != 0).collect();
    nbrs.sort_unstable();
    let mut bd = Budget { nodes: 0, limit };
    for i in 0..nbrs.len() {
        for j in i + 1..nbrs.len() {
            if path_search(&adj_s, nbrs[i], nbrs[j], todo, &mut bd)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn deleted_adj(adj: &[u64], n: usize, v: usize) -> Vec<u64> {
    // Dense relabel: drop v, shift ids above it down by one.
    let low_mask = (1u64 << v) - 1;
    (0..n)
        .filter(|&u| u != v)
        .map(|u| {
            let a = adj[u] & !(1u64 << v);
            (a & low_mask) | ((a >> (v + 1)) << v)
        })
        .collect()
}

fn main() {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for line in stdin.lock().lines() {
        let line = line.unwrap();
        let tok: Vec<&str> = line.split_whitespace().collect();
        if tok.is_empty() {
            continue;
        }
        if tok[0] == "deep" {
            let budget: u64 = tok[1].parse().unwrap();
            let v: usize = tok[2].parse().unwrap();
            let n: usize = tok[3].parse().unwrap();
            let m: usize = tok[4].parse().unwrap();
            let mut adj = vec![0u64; n];
            for k in 0..m {
                let a: usize = tok[5 + 2 * k].parse().unwrap();
                let b: usize = tok[6 + 2 * k].parse().unwrap();
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
            let sub = deleted_adj(&adj, n, v);
            let ham = matches!(hamiltonian(&sub, n - 1, budget), Ok(true));
            writeln!(out, "ham {}", if ham { 1 } else { 0 }).unwrap();
            out.flush().unwrap();
            continue;
        }
        let budget: u64 = tok[0].parse().unwrap();
        let max_fails: usize = tok[1].parse().unwrap();
        let n: usize = tok[2].parse().unwrap();
        let m: usize = tok[3].parse().unwrap();
        let mut adj = vec![0u64; n];
        for k in 0..m {
            let a: usize = tok[4 + 2 * k].parse().unwrap();
            let b: usize = tok[5 + 2 * k].parse().unwrap();
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let mut order: Vec<usize> = tok[4 + 2 * m..].iter().map(|t| t.parse().unwrap()).collect();
        if order.is_empty() {
            order = (0..n).collect();
        }
        let mut fails = Vec::new();
        for &v in &order {
            let sub = deleted_adj(&adj, n, v);
            let ham = matches!(hamiltonian(&sub, n - 1, budget), Ok(true));
            if !ham {
                fails.push(v);
                if fails.len() > max_fails {
                    break;
                }
            }
        }
        write!(out, "fails {}", fails.len()).unwrap();
        for v in &fails {
            write!(out, " {}", v).unwrap();
        }
        writeln!(out).unwrap();
        out.flush().unwrap();
    }
}
