//! Distance-based invariants of connected graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};

/// Wiener index, diameter and per-vertex transmissions of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub wiener: u64,
    pub diameter: u32,
    pub transmissions: Vec<u64>,
}

impl InvariantReport {
    /// One BFS per vertex; nothing larger than a single distance row is held at once.
    pub fn compute(g: &Graph) -> Result<Self> {
        let n = g.order();
        let mut transmissions = Vec::with_capacity(n);
        let mut diameter = 0;
        for u in 0..n {
            let row = g.bfs(u);
            let mut sum = 0u64;
            for &d in &row {
                if d == UNREACHABLE {
                    return Err(Error::Disconnected);
                }
                sum += d as u64;
                diameter = diameter.max(d);
            }
            transmissions.push(sum);
        }
        let wiener = transmissions.iter().sum::<u64>() / 2;
        Ok(Self {
            n,
            wiener,
            diameter,
            transmissions,
        })
    }
}

/// Sum of distances over all unordered vertex pairs.
pub fn wiener(g: &Graph) -> Result<u64> {
    let mut total = 0u64;
    for u in 0..g.order() {
        total += row_sum(g, u)?;
    }
    Ok(total / 2)
}

fn row_sum(g: &Graph, u: usize) -> Result<u64> {
    g.bfs(u).into_iter().try_fold(0u64, |acc, d| {
        if d == UNREACHABLE {
            Err(Error::Disconnected)
        } else {
            Ok(acc + d as u64)
        }
    })
}

/// Sum of distances from `u` to every other vertex.
pub fn transmission(g: &Graph, u: usize) -> Result<u64> {
    g.check_vertex(u)?;
    row_sum(g, u)
}

pub fn eccentricity(g: &Graph, u: usize) -> Result<u32> {
    g.check_vertex(u)?;
    let row = g.bfs(u);
    if row.contains(&UNREACHABLE) {
        return Err(Error::Disconnected);
    }
    Ok(row.into_iter().max().unwrap_or(0))
}

pub fn diameter(g: &Graph) -> Result<u32> {
    if g.order() == 0 {
        return Err(Error::InvalidParameter("diameter of the empty graph".into()));
    }
    (0..g.order()).try_fold(0, |acc, u| Ok(acc.max(eccentricity(g, u)?)))
}

/// Transmission of the `j`-th vertex (1-based) of the path on `n` vertices, in closed form.
pub fn path_transmission(n: u64, j: u64) -> Result<u64> {
    if j < 1 || j > n {
        return Err(Error::InvalidParameter(format!(
            "position {j} outside 1..={n}"
        )));
    }
    Ok((j - 1) * j / 2 + (n - j) * (n - j + 1) / 2)
}

/// `n(n^2 - 1)/6`, the Wiener index of the path on `n` vertices.
pub fn path_wiener(n: u64) -> u64 {
    if n == 0 {
        0
    } else {
        n * (n * n - 1) / 6
    }
}
