//! Conditional diameter `D(G; s)`: the largest distance between two vertex subsets of
//! size `s`.
//!
//! `D(G; s) >= t` iff the *far graph* at threshold `t` (vertices joined when their
//! distance is at least `t`) contains a balanced biclique `K_{s,s}`. The exact value is
//! found by testing thresholds downward from `n - 2s + 1` to a greedy lower bound.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Distance, Graph};

/// Two `s`-subsets and the set distance they achieve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetPairWitness {
    pub s: usize,
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub value: u32,
}

/// Two disjoint vertex sets with every cross pair adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biclique {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// `max(n - 2s + 1, 0)`.
pub fn condiam_upper_bound(n: usize, s: usize) -> usize {
    (n + 1).saturating_sub(2 * s)
}

/// Minimum distance over `V1 x V2`; zero when the sets share a vertex.
pub fn set_distance(g: &Graph, v1: &[usize], v2: &[usize]) -> Result<u32> {
    if v1.is_empty() || v2.is_empty() {
        return Err(Error::EmptySet);
    }
    for &u in v1.iter().chain(v2) {
        g.check_vertex(u)?;
    }
    g.require_connected()?;
    let dist = g.bfs_from_set(v1);
    Ok(v2.iter().map(|&v| dist[v]).min().expect("v2 is nonempty"))
}

/// Graph on the same vertices joining `u` and `v` whenever `d(u, v) >= t`.
pub fn far_graph(g: &Graph, t: u32) -> Result<Graph> {
    if t < 1 {
        return Err(Error::InvalidParameter("far-graph threshold must be >= 1".into()));
    }
    g.require_connected()?;
    let dist = g.all_pairs_distances();
    let n = g.order();
    let adj = (0..n)
        .map(|u| (0..n).filter(|&v| v != u && dist.get(u, v) >= t).collect())
        .collect();
    Ok(Graph::from_sorted_adjacency(adj))
}

/// Finds the lexicographically least `K_{s,s}` in `f` (left side compared first), if any.
pub fn balanced_biclique_at_least(f: &Graph, s: usize) -> Option<Biclique> {
    let n = f.order();
    let rows = (0..n)
        .map(|u| {
            let mut row = FixedBitSet::with_capacity(n);
            for &v in f.neighbors(u) {
                row.insert(v);
            }
            row
        })
        .collect::<Vec<_>>();
    BicliqueSearch::new(rows, s).run()
}

struct BicliqueSearch {
    rows: Vec<FixedBitSet>,
    s: usize,
    chosen: Vec<usize>,
}

impl BicliqueSearch {
    fn new(rows: Vec<FixedBitSet>, s: usize) -> Self {
        Self {
            rows,
            s,
            chosen: Vec::with_capacity(s),
        }
    }

    fn run(mut self) -> Option<Biclique> {
        let n = self.rows.len();
        if self.s == 0 {
            return Some(Biclique {
                left: Vec::new(),
                right: Vec::new(),
            });
        }
        if n < 2 * self.s {
            return None;
        }
        let s = self.s;
        let seeds: Vec<usize> = (0..n).filter(|&v| self.rows[v].count_ones(..) >= s).collect();
        if seeds.len() < 2 * s {
            return None;
        }
        for (idx, &first) in seeds.iter().enumerate() {
            // The least solution has min(left) < min(right), so the right side lives above `first`.
            let mut cand = self.rows[first].clone();
            cand.remove_range(..first + 1);
            if cand.count_ones(..) < s {
                continue;
            }
            self.chosen.clear();
            self.chosen.push(first);
            let rest: Vec<usize> = seeds[idx + 1..]
                .iter()
                .copied()
                .filter(|&v| self.rows[v].intersection_count(&cand) >= s)
                .collect();
            if let Some(found) = self.extend(&cand, &rest) {
                return Some(found);
            }
        }
        None
    }

    /// `cand` is the common neighbourhood of `chosen` (above its first element); `avail`
    /// lists the ascending vertices that can still join the left side.
    fn extend(&mut self, cand: &FixedBitSet, avail: &[usize]) -> Option<Biclique> {
        let need = self.s - self.chosen.len();
        if need == 0 {
            return Some(Biclique {
                left: self.chosen.clone(),
                right: cand.ones().take(self.s).collect(),
            });
        }
        if avail.len() < need {
            return None;
        }
        for (idx, &v) in avail.iter().enumerate() {
            if avail.len() - idx < need {
                break;
            }
            let mut next = cand.clone();
            next.intersect_with(&self.rows[v]);
            if next.count_ones(..) < self.s {
                continue;
            }
            let rest: Vec<usize> = avail[idx + 1..]
                .iter()
                .copied()
                .filter(|&u| self.rows[u].intersection_count(&next) >= self.s)
                .collect();
            if rest.len() + 1 < need {
                continue;
            }
            self.chosen.push(v);
            let found = self.extend(&next, &rest);
            self.chosen.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

fn far_rows(dist: &DistanceMatrix, t: Distance) -> Vec<FixedBitSet> {
    let n = dist.order();
    (0..n)
        .map(|u| {
            let mut row = FixedBitSet::with_capacity(n);
            for (v, &d) in dist.row(u).iter().enumerate() {
                if v != u && d >= t {
                    row.insert(v);
                }
            }
            row
        })
        .collect()
}

fn biclique_at(dist: &DistanceMatrix, s: usize, t: Distance) -> Option<Biclique> {
    BicliqueSearch::new(far_rows(dist, t), s).run()
}

/// Cheap witness: grow a ball of `s` vertices around each anchor and pair it with the `s`
/// vertices farthest from that ball. Returns the best set distance found.
fn greedy_lower_bound(dist: &DistanceMatrix, s: usize) -> Distance {
    let n = dist.order();
    let mut best = 0;
    for anchor in 0..n {
        let mut by_near: Vec<usize> = (0..n).collect();
        by_near.sort_by_key(|&v| (dist.get(anchor, v), v));
        let ball = &by_near[..s];
        let mut to_ball: Vec<(Distance, usize)> = (0..n)
            .map(|v| (ball.iter().map(|&b| dist.get(b, v)).min().unwrap(), v))
            .collect();
        to_ball.sort_by_key(|&(d, v)| (std::cmp::Reverse(d), v));
        best = best.max(to_ball[s - 1].0);
    }
    best
}

/// Exact `D(G; s)` with the lexicographically least witness pair. Returns `(0, None)` when
/// `n < 2s`.
pub fn conditional_diameter(g: &Graph, s: usize) -> Result<(u32, Option<SubsetPairWitness>)> {
    if s < 1 {
        return Err(Error::InvalidParameter("s must be >= 1".into()));
    }
    g.require_connected()?;
    let n = g.order();
    if n < 2 * s {
        return Ok((0, None));
    }
    let dist = g.all_pairs_distances();
    let bound = condiam_upper_bound(n, s) as Distance;
    let floor = greedy_lower_bound(&dist, s).max(1);
    for t in (floor..=bound).rev() {
        if let Some(b) = biclique_at(&dist, s, t) {
            let witness = SubsetPairWitness {
                s,
                v1: b.left,
                v2: b.right,
                value: t,
            };
            return Ok((t, Some(witness)));
        }
    }
    Err(Error::Inconsistent(format!(
        "no K_{{{s},{s}}} at greedy lower bound {floor}"
    )))
}

/// Decides `D(G; s) == target` without computing the exact value first.
pub fn has_conditional_diameter(g: &Graph, s: usize, target: u32) -> Result<bool> {
    if s < 1 {
        return Err(Error::InvalidParameter("s must be >= 1".into()));
    }
    g.require_connected()?;
    let n = g.order();
    if n < 2 * s {
        return Ok(target == 0);
    }
    let bound = condiam_upper_bound(n, s) as u32;
    if target == 0 || target > bound {
        return Ok(false);
    }
    let dist = g.all_pairs_distances();
    let diam = dist.max_finite().expect("connected");
    if diam < target {
        return Ok(false);
    }
    if target < bound && biclique_at(&dist, s, target + 1).is_some() {
        return Ok(false);
    }
    Ok(biclique_at(&dist, s, target).is_some())
}

/// Definitional `D(G; s)`: maximum set distance over every ordered pair of `s`-subsets.
/// Exponential; intended as an oracle on small graphs.
pub fn brute_force_conditional_diameter(g: &Graph, s: usize) -> Result<u32> {
    if s < 1 {
        return Err(Error::InvalidParameter("s must be >= 1".into()));
    }
    g.require_connected()?;
    let n = g.order();
    if n < 2 * s {
        return Ok(0);
    }
    let dist = g.all_pairs_distances();
    let subsets = combinations(n, s);
    let mut best = 0;
    for a in &subsets {
        for b in &subsets {
            let d = a
                .iter()
                .flat_map(|&x| b.iter().map(move |&y| (x, y)))
                .map(|(x, y)| dist.get(x, y))
                .min()
                .unwrap();
            best = best.max(d);
        }
    }
    Ok(best)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
