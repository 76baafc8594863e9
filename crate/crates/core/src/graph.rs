//! Simple undirected graphs on vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Editing operations ([`Graph::remove_edge`],
//! [`Graph::add_edge`], [`Graph::remove_vertex`]) return a fresh graph.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Hop count between two vertices.
pub type Distance = u32;

/// Distance entry for vertex pairs with no connecting path.
pub const UNREACHABLE: Distance = Distance::MAX;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges (in either orientation) are merged.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { id: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { id: v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Self { adj, m: m / 2 })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Trusted constructor for adjacency lists that are already sorted, symmetric and loop-free.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(u, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list.iter().all(|&v| v != u && adj[v].binary_search(&u).is_ok())
        }));
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Self { adj, m }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                id: u,
                n: self.order(),
            })
        }
    }

    /// True iff every vertex is reachable from vertex 0. Graphs with at most one vertex are connected.
    pub fn is_connected(&self) -> bool {
        if self.order() <= 1 {
            return true;
        }
        self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size() + 1 == self.order() && self.is_connected()
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Single-source hop counts from `source`.
    pub fn bfs(&self, source: usize) -> Vec<Distance> {
        let mut dist = vec![UNREACHABLE; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &v in &self.adj[u] {
                if dist[v] == UNREACHABLE {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Multi-source BFS: distance from each vertex to the nearest source.
    pub fn bfs_from_set(&self, sources: &[usize]) -> Vec<Distance> {
        let mut dist = vec![UNREACHABLE; self.order()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s] != 0 {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &v in &self.adj[u] {
                if dist[v] == UNREACHABLE {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let n = self.order();
        let mut d = Vec::with_capacity(n * n);
        for u in 0..n {
            d.extend(self.bfs(u));
        }
        DistanceMatrix { n, d }
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u].retain(|&x| x != v);
        adj[v].retain(|&x| x != u);
        Ok(Self { adj, m: self.m - 1 })
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u, v));
        }
        let mut adj = self.adj.clone();
        let pos = adj[u].binary_search(&v).unwrap_err();
        adj[u].insert(pos, v);
        let pos = adj[v].binary_search(&u).unwrap_err();
        adj[v].insert(pos, u);
        Ok(Self { adj, m: self.m + 1 })
    }

    /// Deletes vertex `u`; ids above `u` shift down by one.
    pub fn remove_vertex(&self, u: usize) -> Result<Self> {
        self.check_vertex(u)?;
        let adj = self
            .adj
            .iter()
            .enumerate()
            .filter(|&(x, _)| x != u)
            .map(|(_, list)| {
                list.iter()
                    .filter(|&&v| v != u)
                    .map(|&v| if v > u { v - 1 } else { v })
                    .collect()
            })
            .collect();
        Ok(Self::from_sorted_adjacency(adj))
    }

    /// Graph with vertex `v` renamed to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.order();
        assert_eq!(perm.len(), n);
        let mut adj = vec![Vec::new(); n];
        for (u, list) in self.adj.iter().enumerate() {
            adj[perm[u]] = list.iter().map(|&v| perm[v]).collect();
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { adj, m: self.m }
    }

    /// Disjoint union with `count` fresh vertices appended (ids `n..n+count`).
    pub(crate) fn with_extra_vertices(&self, count: usize) -> Self {
        let mut adj = self.adj.clone();
        adj.resize(self.order() + count, Vec::new());
        Self { adj, m: self.m }
    }

    /// Whether removing `uv` would disconnect the component containing it.
    pub fn is_bridge(&self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        // BFS from u avoiding the edge uv
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([u]);
        seen[u] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if (x == u && y == v) || seen[y] {
                    continue;
                }
                if y == v {
                    return false;
                }
                seen[y] = true;
                queue.push_back(y);
            }
        }
        true
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.order()).map(|u| self.degree(u)).collect();
        seq.sort_unstable();
        seq
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Dense all-pairs hop counts; [`UNREACHABLE`] marks disconnected pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Distance] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn is_all_finite(&self) -> bool {
        self.d.iter().all(|&x| x != UNREACHABLE)
    }

    /// Largest finite entry, or `None` if some pair is unreachable.
    pub fn max_finite(&self) -> Option<Distance> {
        if self.is_all_finite() {
            Some(self.d.iter().copied().max().unwrap_or(0))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn build_examples() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!((p3.order(), p3.size()), (3, 2));
        let k1 = Graph::new(1, []).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.degree_sequence(), vec![2, 2, 2, 2]);
    }

    #[test]
    fn build_dedups_and_rejects() {
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { id: 3, n: 3 })
        );
    }

    #[test]
    fn connectivity() {
        assert!(path(3).is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(Graph::empty(0).is_connected());
        let c4 = cycle(4).remove_edge(0, 1).unwrap();
        assert!(c4.is_connected());
    }

    #[test]
    fn distances() {
        let d = path(3).all_pairs_distances();
        assert_eq!(d.get(0, 2), 2);
        let d = cycle(5).all_pairs_distances();
        assert_eq!(d.get(0, 2), 2);
        let d = Graph::empty(2).all_pairs_distances();
        assert_eq!(d.get(0, 1), UNREACHABLE);
        assert!(!d.is_all_finite());
        assert_eq!(d.max_finite(), None);
    }

    #[test]
    fn edits() {
        let p4 = cycle(4).remove_edge(0, 1).unwrap();
        assert!(p4.is_tree());
        assert_eq!(p4.degree_sequence(), vec![1, 1, 2, 2]);

        let p3 = path(4).remove_vertex(3).unwrap();
        assert_eq!(p3, path(3));
        // removing an interior vertex renumbers the tail downward
        let g = path(4).remove_vertex(1).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);

        let k3 = path(3).add_edge(0, 2).unwrap();
        assert_eq!(k3, cycle(3));

        assert_eq!(path(3).remove_edge(0, 2), Err(Error::MissingEdge(0, 2)));
        assert_eq!(path(3).add_edge(0, 1), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(
            path(3).remove_vertex(3),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn bridges() {
        assert!(path(4).is_bridge(1, 2));
        assert!(!cycle(4).is_bridge(1, 2));
        assert!(!path(4).is_bridge(0, 2));
    }
}
