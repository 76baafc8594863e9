//! Exhaustive generation of small graph classes, one representative per isomorphism class.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::canonical_key;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::invariants::eccentricity;

/// Largest order accepted by [`enumerate_connected_graphs`] (261080 graphs at n = 9).
pub const MAX_CONNECTED_ORDER: usize = 9;

/// Largest order accepted by [`enumerate_connected_by_edge_subsets`].
pub const MAX_EDGE_SUBSET_ORDER: usize = 7;

/// Rooted trees as level sequences in reverse lexicographic order, starting from the
/// path `0, 1, .., n-1` and ending at the star `0, 1, 1, .., 1`.
pub struct LevelSequences {
    levels: Vec<usize>,
    done: bool,
}

impl LevelSequences {
    pub fn new(n: usize) -> Self {
        Self {
            levels: (0..n).collect(),
            done: n == 0,
        }
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.levels.clone();
        match self.levels.iter().rposition(|&l| l > 1) {
            None => self.done = true,
            Some(p) => {
                let q = self.levels[..p]
                    .iter()
                    .rposition(|&l| l == self.levels[p] - 1)
                    .expect("a parent level precedes every non-root vertex");
                let shift = p - q;
                for i in p..self.levels.len() {
                    self.levels[i] = self.levels[i - shift];
                }
            }
        }
        Some(current)
    }
}

/// Tree whose vertex `i` hangs from the last earlier vertex one level up.
pub fn tree_from_levels(levels: &[usize]) -> Graph {
    let mut last_at = vec![0usize; levels.len() + 1];
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for (i, &l) in levels.iter().enumerate() {
        if i > 0 {
            edges.push((last_at[l - 1], i));
        }
        last_at[l] = i;
    }
    Graph::new(levels.len(), edges).expect("level sequence describes a tree")
}

/// Every unlabelled tree on `n` vertices exactly once, in generation order.
///
/// Rooted trees are generated by level sequence; only those rooted at a centre are kept,
/// then bicentral duplicates are removed by canonical key.
pub fn enumerate_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for levels in LevelSequences::new(n) {
        let height = *levels.iter().max().unwrap();
        let tree = tree_from_levels(&levels);
        let radius = (0..n)
            .map(|v| eccentricity(&tree, v).expect("trees are connected"))
            .min()
            .unwrap() as usize;
        if height != radius {
            continue;
        }
        if seen.insert(canonical_key(&tree)) {
            out.push(tree);
        }
    }
    out
}

fn keys_to_graphs(keys: HashSet<String>) -> Vec<Graph> {
    let mut keys: Vec<String> = keys.into_iter().collect();
    keys.sort_unstable();
    keys.iter()
        .map(|k| parse_graph6(k.as_bytes()).expect("canonical keys are graph6"))
        .collect()
}

/// All connected graphs on `n <= 9` vertices up to isomorphism, sorted by canonical key.
///
/// Every connected graph has a vertex whose removal leaves it connected, so each one arises
/// from a connected graph on `n - 1` vertices plus a new vertex with a nonempty neighbourhood.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_CONNECTED_ORDER {
        return Err(Error::InvalidParameter(format!(
            "connected-graph generation supports 1 <= n <= {MAX_CONNECTED_ORDER}, got {n}"
        )));
    }
    let mut level = vec![Graph::empty(1)];
    for m in 2..=n {
        let keys = level
            .par_iter()
            .fold(HashSet::new, |mut acc, parent| {
                let base = parent.with_extra_vertices(1);
                let new = m - 1;
                for mask in 1u32..(1 << (m - 1)) {
                    let mut adj: Vec<Vec<usize>> =
                        (0..m).map(|v| base.neighbors(v).to_vec()).collect();
                    for v in 0..m - 1 {
                        if mask & (1 << v) != 0 {
                            adj[v].push(new);
                            adj[new].push(v);
                        }
                    }
                    acc.insert(canonical_key(&Graph::from_sorted_adjacency(adj)));
                }
                acc
            })
            .reduce(HashSet::new, |mut a, b| {
                if a.len() < b.len() {
                    return union(b, a);
                }
                a.extend(b);
                a
            });
        level = keys_to_graphs(keys);
    }
    Ok(level)
}

fn union(mut big: HashSet<String>, small: HashSet<String>) -> HashSet<String> {
    big.extend(small);
    big
}

/// Connected graphs on `n <= 7` vertices by brute force over every edge subset.
pub fn enumerate_connected_by_edge_subsets(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_EDGE_SUBSET_ORDER {
        return Err(Error::InvalidParameter(format!(
            "edge-subset generation supports 1 <= n <= {MAX_EDGE_SUBSET_ORDER}, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let keys = (0u64..1 << pairs.len())
        .into_par_iter()
        .fold(HashSet::new, |mut acc, mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(b, _)| mask & (1 << b) != 0)
                .map(|(_, &e)| e);
            let g = Graph::new(n, edges).expect("valid pairs");
            if g.is_connected() {
                acc.insert(canonical_key(&g));
            }
            acc
        })
        .reduce(HashSet::new, |a, b| if a.len() >= b.len() { union(a, b) } else { union(b, a) });
    Ok(keys_to_graphs(keys))
}
