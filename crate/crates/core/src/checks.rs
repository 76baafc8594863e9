//! Randomised property suites for the Wiener-monotone transformations.
//!
//! Each suite returns the number of instances checked and a description (with graph6) of
//! every counterexample. None are expected.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::invariants::{path_transmission, wiener};
use crate::random::{random_connected_graph, random_spanning_tree, random_tree};
use crate::transforms::{
    attach_two_paths, edge_deletion_increases, shift_to_longer_path, pendant_identity_holds,
    straighten_branch, ShiftSite,
};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub checked: u64,
    pub failures: Vec<String>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.into(),
            ..Self::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn g6(g: &Graph) -> String {
    emit_graph6(g).unwrap_or_else(|e| format!("<{e}>"))
}

/// Pendant identity on every pendant vertex of `trials` random trees with `2 <= n <= max_n`.
pub fn pendant_identity(trials: usize, max_n: usize, seed: u64) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CheckReport::new("pendant-identity");
    for _ in 0..trials {
        let n = rng.gen_range(2..=max_n.max(2));
        let tree = random_tree(n, &mut rng);
        for v in (0..n).filter(|&v| tree.degree(v) == 1) {
            report.checked += 1;
            if !pendant_identity_holds(&tree, v)? {
                report.failures.push(format!("tree {} pendant {v}", g6(&tree)));
            }
        }
    }
    Ok(report)
}

/// Random shift site with a connected host of order >= 2, `l >= k >= 1`, total order <= `max_n`.
pub fn random_shift_site<R: Rng + ?Sized>(max_n: usize, rng: &mut R) -> ShiftSite {
    let max_n = max_n.max(4);
    let h = rng.gen_range(2..=max_n - 2);
    let spare = max_n - h;
    let k = rng.gen_range(1..=spare / 2);
    let l = rng.gen_range(k..=spare - k);
    let host = random_connected_graph(h, rng.gen_range(0.0..0.6), rng);
    let v = rng.gen_range(0..h);
    ShiftSite { host, v, k, l }
}

/// Strict Wiener increase of the path shift on `trials` random sites.
pub fn path_shift(trials: usize, max_n: usize, seed: u64) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CheckReport::new("path-shift");
    for _ in 0..trials {
        let site = random_shift_site(max_n, &mut rng);
        let before = wiener(&attach_two_paths(&site)?)?;
        let after = wiener(&shift_to_longer_path(&site)?)?;
        report.checked += 1;
        if after <= before {
            report.failures.push(format!(
                "host {} v={} k={} l={}: {before} -> {after}",
                g6(&site.host),
                site.v,
                site.k,
                site.l
            ));
        }
    }
    Ok(report)
}

/// Strict Wiener increase when deleting a random non-bridge edge.
pub fn edge_deletion(trials: usize, max_n: usize, seed: u64) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CheckReport::new("edge-deletion");
    while (report.checked as usize) < trials {
        let n = rng.gen_range(3..=max_n.max(3));
        let g = random_connected_graph(n, rng.gen_range(0.05..0.7), &mut rng);
        let candidates: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| !g.is_bridge(u, v)).collect();
        let Some(&(u, v)) = candidates.choose(&mut rng) else {
            continue;
        };
        report.checked += 1;
        let (_, increased) = edge_deletion_increases(&g, u, v)?;
        if !increased {
            report.failures.push(format!("graph {} edge ({u},{v})", g6(&g)));
        }
    }
    Ok(report)
}

/// A connected graph made of a host containing `gate` and a branch joined to the rest
/// only through `gate`. Returns `(graph, branch, gate)`.
pub fn random_branch_instance<R: Rng + ?Sized>(max_n: usize, rng: &mut R) -> (Graph, Vec<usize>, usize) {
    let n = rng.gen_range(2..=max_n.max(2));
    let h = rng.gen_range(1..n);
    let b = n - h;
    let host = random_connected_graph(h, rng.gen_range(0.0..0.5), rng);
    let inner = random_connected_graph(b, rng.gen_range(0.0..0.8), rng);
    let gate = rng.gen_range(0..h);
    let mut edges: Vec<(usize, usize)> = host.edges().collect();
    edges.extend(inner.edges().map(|(u, v)| (u + h, v + h)));
    let mut attached = false;
    for x in h..n {
        if rng.gen_bool(0.4) {
            edges.push((gate, x));
            attached = true;
        }
    }
    if !attached {
        edges.push((gate, rng.gen_range(h..n)));
    }
    let g = Graph::new(n, edges).expect("valid edges");
    (g, (h..n).collect(), gate)
}

/// Straightening keeps the order, yields a path hanging from the gate, and never lowers W.
pub fn straightening(trials: usize, max_n: usize, seed: u64) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CheckReport::new("branch-straightening");
    for _ in 0..trials {
        let (g, branch, gate) = random_branch_instance(max_n, &mut rng);
        let out = straighten_branch(&g, &branch, gate)?;
        report.checked += 1;
        let in_branch = |x: usize| branch.contains(&x);
        let inner_degrees: Vec<usize> = branch
            .iter()
            .map(|&b| out.neighbors(b).iter().filter(|&&x| in_branch(x)).count())
            .collect();
        let inner_edges: usize = inner_degrees.iter().sum::<usize>() / 2;
        let gate_links: Vec<usize> = out.neighbors(gate).iter().copied().filter(|&x| in_branch(x)).collect();
        let is_path = inner_edges + 1 == branch.len() && inner_degrees.iter().all(|&d| d <= 2);
        let hangs = gate_links.len() == 1
            && (branch.len() == 1 || inner_degrees[branch.iter().position(|&b| b == gate_links[0]).unwrap()] == 1);
        let (before, after) = (wiener(&g)?, wiener(&out)?);
        if out.order() != g.order() || !is_path || !hangs || after < before {
            report.failures.push(format!(
                "graph {} branch {:?} gate {gate}: W {before} -> {after}, result {}",
                g6(&g),
                branch,
                g6(&out)
            ));
        }
    }
    Ok(report)
}

/// `W(G) <= W(T)` for a random spanning tree `T` of a random connected `G`.
pub fn spanning_tree_bound(trials: usize, max_n: usize, seed: u64) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CheckReport::new("spanning-tree-bound");
    for _ in 0..trials {
        let n = rng.gen_range(1..=max_n.max(1));
        let g = random_connected_graph(n, rng.gen_range(0.0..0.8), &mut rng);
        let t = random_spanning_tree(&g, &mut rng);
        report.checked += 1;
        if wiener(&g)? > wiener(&t)? {
            report.failures.push(format!("graph {} tree {}", g6(&g), g6(&t)));
        }
    }
    Ok(report)
}

/// Strictly decreasing path transmission over the first half of every path up to `max_n`.
pub fn path_transmission_monotone(max_n: u64) -> Result<CheckReport> {
    let mut report = CheckReport::new("path-transmission-monotone");
    for n in 1..=max_n {
        for j in 1..=n / 2 {
            for k in j + 1..=n / 2 {
                report.checked += 1;
                if path_transmission(n, j)? <= path_transmission(n, k)? {
                    report.failures.push(format!("n={n} j={j} k={k}"));
                }
            }
        }
    }
    Ok(report)
}

/// Runs every suite with a shared trial count and seed.
pub fn run_all(trials: usize, max_n: usize, seed: u64) -> Result<Vec<CheckReport>> {
    Ok(vec![
        pendant_identity(trials, max_n.min(24), seed)?,
        path_shift(trials, max_n, seed.wrapping_add(1))?,
        edge_deletion(trials, max_n.min(16), seed.wrapping_add(2))?,
        straightening(trials, max_n.min(16), seed.wrapping_add(3))?,
        spanning_tree_bound(trials, max_n.min(16), seed.wrapping_add(4))?,
        path_transmission_monotone(60)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_small() {
        for report in run_all(200, 14, 99).unwrap() {
            assert!(report.passed(), "{report:?}");
            assert!(report.checked > 0);
        }
    }

    #[test]
    fn shift_sites_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let site = random_shift_site(20, &mut rng);
            assert!(site.l >= site.k && site.k >= 1);
            assert!(site.host.order() >= 2);
            assert!(site.host.order() + site.k + site.l <= 20);
        }
    }
}
