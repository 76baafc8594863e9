//! Reference computations written directly from the definitions. They read a graph only
//! through `order()` and `edges()` and share no code with the library's algorithms.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::VecDeque;

use condiam::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.order()];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// All-pairs distances by BFS; `None` for unreachable pairs.
pub fn distances(g: &Graph) -> Vec<Vec<Option<u64>>> {
    let adj = adjacency(g);
    let n = adj.len();
    (0..n)
        .map(|src| {
            let mut dist = vec![None; n];
            dist[src] = Some(0);
            let mut queue = VecDeque::from([src]);
            while let Some(u) = queue.pop_front() {
                let du = dist[u].unwrap();
                for &v in &adj[u] {
                    if dist[v].is_none() {
                        dist[v] = Some(du + 1);
                        queue.push_back(v);
                    }
                }
            }
            dist
        })
        .collect()
}

pub fn wiener(g: &Graph) -> u64 {
    let d = distances(g);
    let n = d.len();
    let mut total = 0;
    for u in 0..n {
        for v in u + 1..n {
            total += d[u][v].expect("connected");
        }
    }
    total
}

pub fn transmission(g: &Graph, u: usize) -> u64 {
    distances(g)[u].iter().map(|d| d.expect("connected")).sum()
}

pub fn diameter(g: &Graph) -> u64 {
    distances(g).iter().flatten().map(|d| d.expect("connected")).max().unwrap_or(0)
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Maximum over all pairs of `s`-subsets of the minimum cross distance (0 when `n < 2s`).
pub fn conditional_diameter(g: &Graph, s: usize) -> u64 {
    let n = g.order();
    if s == 0 || n < 2 * s {
        return 0;
    }
    let d = distances(g);
    let sets = subsets(n, s);
    let mut best = 0;
    for a in &sets {
        for b in &sets {
            let mut m = u64::MAX;
            for &x in a {
                for &y in b {
                    m = m.min(d[x][y].expect("connected"));
                }
            }
            best = best.max(m);
        }
    }
    best
}

/// graph6 encoding for `n < 63`: size byte, then the column-major upper triangle in 6-bit
/// groups, each offset by 63.
pub fn graph6_small(g: &Graph) -> String {
    let n = g.order();
    assert!(n < 63);
    let mut bits = Vec::new();
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    let mut out = vec![(n + 63) as u8];
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                x |= 1 << (5 - i);
            }
        }
        out.push(x + 63);
    }
    String::from_utf8(out).unwrap()
}

/// True when some vertex bijection maps `a` onto `b` (exhaustive; small graphs only).
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da = a.degree_sequence();
    let mut db = b.degree_sequence();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(a: &Graph, b: &Graph, perm: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = perm.len();
        if v == a.order() {
            return true;
        }
        for w in 0..a.order() {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(perm[u], w)) {
                used[w] = true;
                perm.push(w);
                if rec(a, b, perm, used) {
                    return true;
                }
                perm.pop();
                used[w] = false;
            }
        }
        false
    }
    rec(a, b, &mut perm, &mut used)
}
