//! Graph edits that never decrease the Wiener index: moving the tip of a shorter pendant
//! path onto a longer one, pruning a vertex down to a pendant, deleting non-bridge edges,
//! and straightening a branch into a path.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};
use crate::invariants::{transmission, wiener};

/// A host graph with two pendant paths of lengths `k` and `l` to be attached at `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftSite {
    pub host: Graph,
    pub v: usize,
    pub k: usize,
    pub l: usize,
}

/// `G_{k,l}`: the host with paths `v v_1 .. v_k` (ids `n..n+k`) and `v u_1 .. u_l`
/// (ids `n+k..n+k+l`) attached at `v`.
pub fn attach_two_paths(site: &ShiftSite) -> Result<Graph> {
    let host = &site.host;
    if host.order() < 2 {
        return Err(Error::InvalidParameter("host must have at least two vertices".into()));
    }
    host.check_vertex(site.v)?;
    host.require_connected()?;
    let n0 = host.order();
    let mut edges: Vec<(usize, usize)> = host.edges().collect();
    let mut prev = site.v;
    for x in n0..n0 + site.k {
        edges.push((prev, x));
        prev = x;
    }
    prev = site.v;
    for x in n0 + site.k..n0 + site.k + site.l {
        edges.push((prev, x));
        prev = x;
    }
    Graph::new(n0 + site.k + site.l, edges)
}

/// Moves one vertex from the shorter path to the longer: `G_{k,l}` becomes
/// `G_{k-1,l+1}`. Requires `l >= k >= 1`.
pub fn shift_to_longer_path(site: &ShiftSite) -> Result<Graph> {
    if site.k == 0 {
        return Err(Error::InvalidParameter("shift needs k >= 1".into()));
    }
    if site.l < site.k {
        return Err(Error::InvalidParameter(format!(
            "shift needs l >= k (k={}, l={})",
            site.k, site.l
        )));
    }
    attach_two_paths(&ShiftSite {
        host: site.host.clone(),
        v: site.v,
        k: site.k - 1,
        l: site.l + 1,
    })
}

/// Checks `W(G) = W(G - v) + D_{G-v}(u) + n - 1` for a pendant `v` with neighbour `u`.
pub fn pendant_identity_holds(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    g.require_connected()?;
    if g.degree(v) != 1 {
        return Err(Error::NotPendant(v));
    }
    let u = g.neighbors(v)[0];
    let rest = g.remove_vertex(v)?;
    let u_rest = if u > v { u - 1 } else { u };
    let n = g.order() as u64;
    Ok(wiener(g)? == wiener(&rest)? + transmission(&rest, u_rest)? + n - 1)
}

/// Deletes every edge at `w` except `w keep`.
pub fn prune_to_pendant(g: &Graph, w: usize, keep: usize) -> Result<Graph> {
    g.check_vertex(w)?;
    g.check_vertex(keep)?;
    if !g.has_edge(w, keep) {
        return Err(Error::InvalidParameter(format!("{keep} is not a neighbour of {w}")));
    }
    let mut out = g.clone();
    for &x in g.neighbors(w) {
        if x != keep {
            out = out.remove_edge(w, x)?;
        }
    }
    if !out.is_connected() {
        return Err(Error::WouldDisconnect);
    }
    Ok(out)
}

/// Neighbour of `w` farthest from `targets` (smallest id on ties).
pub fn farthest_neighbor(g: &Graph, w: usize, targets: &[usize]) -> Result<usize> {
    g.check_vertex(w)?;
    if targets.is_empty() {
        return Err(Error::EmptySet);
    }
    for &t in targets {
        g.check_vertex(t)?;
    }
    let dist = g.bfs_from_set(targets);
    g.neighbors(w)
        .iter()
        .copied()
        .max_by_key(|&x| (dist[x], std::cmp::Reverse(x)))
        .ok_or_else(|| Error::InvalidParameter(format!("{w} has no neighbours")))
}

/// Removes `uv` and reports whether the Wiener index strictly increased.
pub fn edge_deletion_increases(g: &Graph, u: usize, v: usize) -> Result<(Graph, bool)> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::MissingEdge(u, v));
    }
    let before = wiener(g)?;
    if g.is_bridge(u, v) {
        return Err(Error::WouldDisconnect);
    }
    let out = g.remove_edge(u, v)?;
    let after = wiener(&out)?;
    Ok((out, after > before))
}

/// Rewires the branch `B` hanging off `gate` into a path with one end adjacent to `gate`.
///
/// Non-bridge edges inside `B + gate` are deleted in ascending order until it is a tree;
/// then the deepest vertex with two or more child paths repeatedly moves the tip of its
/// shortest child path onto the end of its longest one.
pub fn straighten_branch(g: &Graph, branch: &[usize], gate: usize) -> Result<Graph> {
    g.check_vertex(gate)?;
    let members: BTreeSet<usize> = branch.iter().copied().collect();
    for &b in &members {
        g.check_vertex(b)?;
    }
    if members.contains(&gate) {
        return Err(Error::InvalidParameter("gate must lie outside the branch".into()));
    }
    g.require_connected()?;
    for &b in &members {
        if let Some(&x) = g.neighbors(b).iter().find(|&&x| x != gate && !members.contains(&x)) {
            return Err(Error::InvalidParameter(format!(
                "branch vertex {b} has a second gate {x}"
            )));
        }
    }
    let mut in_h = vec![false; g.order()];
    in_h[gate] = true;
    for &b in &members {
        in_h[b] = true;
    }
    if depths(g, gate, &in_h).iter().enumerate().any(|(x, &d)| in_h[x] && d == UNREACHABLE) {
        return Err(Error::InvalidParameter("branch is not connected through the gate".into()));
    }

    let mut out = g.clone();
    let inner: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| in_h[u] && in_h[v]).collect();
    for (u, v) in inner {
        if !out.is_bridge(u, v) {
            out = out.remove_edge(u, v)?;
        }
    }

    loop {
        let depth = depths(&out, gate, &in_h);
        let children = |x: usize| -> Vec<usize> {
            out.neighbors(x)
                .iter()
                .copied()
                .filter(|&y| in_h[y] && depth[y] == depth[x] + 1)
                .collect()
        };
        let pivot = (0..out.order())
            .filter(|&x| in_h[x] && children(x).len() >= 2)
            .max_by_key(|&x| (depth[x], std::cmp::Reverse(x)));
        let Some(pivot) = pivot else {
            return Ok(out);
        };
        // every child subtree of the deepest branching vertex is a path
        let mut arms: Vec<Vec<usize>> = children(pivot)
            .into_iter()
            .map(|head| {
                let mut arm = vec![head];
                while let Some(&next) = children(*arm.last().unwrap()).first() {
                    arm.push(next);
                }
                arm
            })
            .collect();
        arms.sort_by_key(|arm| (std::cmp::Reverse(arm.len()), arm[0]));
        let long_tip = *arms[0].last().unwrap();
        let short = arms.last().unwrap();
        let tip = *short.last().unwrap();
        let tip_parent = if short.len() >= 2 { short[short.len() - 2] } else { pivot };
        out = out.remove_edge(tip_parent, tip)?.add_edge(long_tip, tip)?;
    }
}

fn depths(g: &Graph, root: usize, allowed: &[bool]) -> Vec<u32> {
    let mut depth = vec![UNREACHABLE; g.order()];
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if allowed[y] && depth[y] == UNREACHABLE {
                depth[y] = depth[x] + 1;
                queue.push_back(y);
            }
        }
    }
    depth
}
