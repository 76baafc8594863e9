//! Seeded random graph generators for property sweeps.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Uniform labelled tree on `n` vertices via a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    if n == 2 {
        return Graph::new(2, [(0, 1)]).expect("valid edge");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(n, &code)
}

/// Tree with the given Prüfer sequence (`code.len() == n - 2`, entries `< n`).
pub fn prufer_decode(n: usize, code: &[usize]) -> Graph {
    assert_eq!(code.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &x in code {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("Prüfer decoding yields a simple graph")
}

/// A random spanning tree plus each remaining pair independently with probability `p`.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let tree = random_tree(n, rng);
    let mut edges: Vec<(usize, usize)> = tree.edges().collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("valid edges")
}

/// Random spanning tree of a connected graph (random-order Kruskal).
pub fn random_spanning_tree<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Graph {
    let n = g.order();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.shuffle(rng);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut kept = Vec::with_capacity(n.saturating_sub(1));
    for (u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            kept.push((u, v));
        }
    }
    Graph::new(n, kept).expect("subset of valid edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trees_are_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..30 {
            assert!(random_tree(n, &mut rng).is_tree(), "n={n}");
        }
    }

    #[test]
    fn prufer_star() {
        let star = prufer_decode(5, &[0, 0, 0]);
        assert_eq!(star.degree(0), 4);
    }

    #[test]
    fn spanning_tree_of_connected_graph() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 2..15 {
            let g = random_connected_graph(n, 0.4, &mut rng);
            assert!(g.is_connected());
            let t = random_spanning_tree(&g, &mut rng);
            assert!(t.is_tree());
            assert!(t.edges().all(|(u, v)| g.has_edge(u, v)));
        }
    }
}
