//! Canonical labelling by partition refinement and individualization.
//!
//! The search tree branches on the first smallest non-singleton cell of an equitable
//! partition. Each leaf is a discrete ordering of the vertices, and the leaf whose
//! relabelled upper-triangle adjacency is lexicographically least wins. Two prunings keep
//! symmetric graphs tractable: twins (vertices whose neighbourhoods agree outside each
//! other) are interchangeable, and children in the same orbit of the automorphisms found
//! so far that fix the current prefix are skipped.

use crate::graph::Graph;
use crate::graph6;

/// Isomorphism-invariant key: the graph6 encoding of the canonical form.
/// Two graphs get equal keys iff they are isomorphic.
pub fn canonical_key(g: &Graph) -> String {
    graph6::encode_unbounded(&canonical_form(g))
}

/// Relabelled copy of `g` in canonical vertex order.
pub fn canonical_form(g: &Graph) -> Graph {
    g.relabel(&canonical_labelling(g))
}

/// Returns `perm` with `perm[v]` the canonical label of vertex `v`.
pub fn canonical_labelling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 1 {
        return (0..n).collect();
    }
    let mut search = Search::new(g);
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    search.refine(&mut cells);
    search.descend(cells, &mut Vec::new());
    let order = search.best.expect("search visits at least one leaf").1;
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    perm
}

struct Search {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    /// (code, vertex at each position)
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let words = n.div_ceil(64);
        let mut rows = vec![0u64; n * words];
        for (u, v) in g.edges() {
            rows[u * words + v / 64] |= 1 << (v % 64);
            rows[v * words + u / 64] |= 1 << (u % 64);
        }
        Self {
            n,
            words,
            rows,
            best: None,
            autos: Vec::new(),
        }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] & (1 << (v % 64)) != 0
    }

    fn mask_of(&self, cell: &[usize]) -> Vec<u64> {
        let mut mask = vec![0u64; self.words];
        for &v in cell {
            mask[v / 64] |= 1 << (v % 64);
        }
        mask
    }

    fn count_in(&self, v: usize, mask: &[u64]) -> u32 {
        self.row(v)
            .iter()
            .zip(mask)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    /// Splits cells until the ordered partition is equitable. New cells are ordered by
    /// ascending neighbour count, so the result is label-invariant.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        'restart: loop {
            for si in 0..cells.len() {
                let mask = self.mask_of(&cells[si]);
                for ci in 0..cells.len() {
                    if cells[ci].len() == 1 {
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> = cells[ci]
                        .iter()
                        .map(|&v| (self.count_in(v, &mask), v))
                        .collect();
                    if keyed.iter().all(|&(c, _)| c == keyed[0].0) {
                        continue;
                    }
                    keyed.sort_unstable();
                    let mut groups: Vec<Vec<usize>> = Vec::new();
                    let mut last = None;
                    for (c, v) in keyed {
                        if last != Some(c) {
                            groups.push(Vec::new());
                            last = Some(c);
                        }
                        groups.last_mut().unwrap().push(v);
                    }
                    cells.splice(ci..=ci, groups);
                    continue 'restart;
                }
            }
            return;
        }
    }

    fn is_twin(&self, u: usize, v: usize) -> bool {
        let (ru, rv) = (self.row(u), self.row(v));
        (0..self.words).all(|w| {
            let mut a = ru[w];
            let mut b = rv[w];
            if v / 64 == w {
                a &= !(1 << (v % 64));
            }
            if u / 64 == w {
                b &= !(1 << (u % 64));
            }
            a == b
        })
    }

    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let stabilizing: Vec<&Vec<usize>> = self
            .autos
            .iter()
            .filter(|a| prefix.iter().all(|&p| a[p] == p))
            .collect();
        if stabilizing.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in stabilizing {
            for (x, &y) in a.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn descend(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        if cells.len() == self.n {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if explored.iter().any(|&u| self.is_twin(u, v)) {
                continue;
            }
            if self.same_orbit(prefix, &explored, v) {
                continue;
            }
            explored.push(v);
            let rest: Vec<usize> = cell.iter().copied().filter(|&x| x != v).collect();
            let mut child = cells.clone();
            child.splice(target..=target, [vec![v], rest]);
            self.refine(&mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let n = self.n;
        let mut code = vec![0u64; (n * (n - 1) / 2).div_ceil(64)];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.adjacent(order[i], order[j]) {
                    code[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        match &self.best {
            Some((best, _)) if code > *best => {}
            Some((best, best_order)) if code == *best => {
                let mut auto = vec![0; n];
                for (pos, &v) in order.iter().enumerate() {
                    auto[v] = best_order[pos];
                }
                if auto.iter().enumerate().any(|(x, &y)| x != y) {
                    self.autos.push(auto);
                }
            }
            _ => self.best = Some((code, order)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn relabelled_paths_agree() {
        let a = path(4);
        let b = Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_key(&a), canonical_key(&b));
    }

    #[test]
    fn path_vs_star() {
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_key(&path(4)), canonical_key(&star));
    }

    #[test]
    fn trivial_orders() {
        assert_eq!(canonical_key(&Graph::empty(1)), "@");
        assert_eq!(canonical_key(&Graph::empty(0)), "?");
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        let n = 16;
        let complete = Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap();
        let star = Graph::new(n, (1..n).map(|v| (0, v))).unwrap();
        assert_eq!(canonical_form(&complete), complete);
        assert_eq!(canonical_key(&star), canonical_key(&star.relabel(&(0..n).rev().collect::<Vec<_>>())));
        // 4x4 rook's graph: vertex-transitive, no twins
        let rook = Graph::new(
            16,
            (0..16).flat_map(|u| {
                (u + 1..16).filter(move |&v| u / 4 == v / 4 || u % 4 == v % 4).map(move |v| (u, v))
            }),
        )
        .unwrap();
        let perm: Vec<usize> = (0..16).map(|v| (v * 7 + 3) % 16).collect();
        assert_eq!(canonical_key(&rook), canonical_key(&rook.relabel(&perm)));
    }
}
