//! Constructors for paths, cycles and the caterpillar-like trees built on a path spine.
//!
//! Spine vertices `x_1, x_2, ...` (1-based in the family parameters) get ids `0, 1, ...`;
//! attached vertices follow the spine with the highest ids.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::wiener;

fn out_of_range<T>(msg: String) -> Result<T> {
    Err(Error::InvalidParameter(msg))
}

fn spine_edges(len: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..len).map(|i| (i - 1, i))
}

pub fn path_graph(n: usize) -> Result<Graph> {
    if n < 1 {
        return out_of_range("path needs n >= 1".into());
    }
    Graph::new(n, spine_edges(n))
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return out_of_range(format!("cycle needs n >= 3, got {n}"));
    }
    Graph::new(n, spine_edges(n).chain([(n - 1, 0)]))
}

/// Spine `x_1..x_{n-1}` plus a pendant vertex (id `n-1`) at `x_i`.
pub fn tree_single(n: usize, i: usize) -> Result<Graph> {
    if n < 3 || i < 1 || i > n - 1 {
        return out_of_range(format!("single pendant tree needs n >= 3, 1 <= i <= n-1 (n={n}, i={i})"));
    }
    Graph::new(n, spine_edges(n - 1).chain([(i - 1, n - 1)]))
}

/// Spine `x_1..x_{n-2}` plus pendants at `x_i` (id `n-2`) and `x_j` (id `n-1`).
/// `i == j` hangs both pendants on one spine vertex.
pub fn tree_double(n: usize, i: usize, j: usize) -> Result<Graph> {
    if n < 4 || i < 1 || i > j || j > n - 2 {
        return out_of_range(format!(
            "double pendant tree needs n >= 4, 1 <= i <= j <= n-2 (n={n}, i={i}, j={j})"
        ));
    }
    Graph::new(n, spine_edges(n - 2).chain([(i - 1, n - 2), (j - 1, n - 1)]))
}

/// Spine `x_1..x_{n-2}` plus a two-vertex tail `x_i - w1 - w2` (`w1 = n-2`, `w2 = n-1`).
pub fn tree_tail2(n: usize, i: usize) -> Result<Graph> {
    if n < 4 || i < 1 || i > n - 2 {
        return out_of_range(format!("tail tree needs n >= 4, 1 <= i <= n-2 (n={n}, i={i})"));
    }
    Graph::new(n, spine_edges(n - 2).chain([(i - 1, n - 2), (n - 2, n - 1)]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FamilyKind {
    Path,
    Cycle,
    TSingle,
    TDouble,
    TTail2,
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "path" => Ok(Self::Path),
            "cycle" => Ok(Self::Cycle),
            "single" | "t_single" => Ok(Self::TSingle),
            "double" | "t_double" => Ok(Self::TDouble),
            "tail2" | "t_tail2" => Ok(Self::TTail2),
            other => Err(Error::InvalidParameter(format!("unknown family '{other}'"))),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Path => "path",
            Self::Cycle => "cycle",
            Self::TSingle => "single",
            Self::TDouble => "double",
            Self::TTail2 => "tail2",
        })
    }
}

/// Parameterised family member. `i` and `j` are 1-based spine positions; unused
/// parameters are ignored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
    pub i: usize,
    pub j: usize,
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self.kind {
            FamilyKind::Path => path_graph(self.n),
            FamilyKind::Cycle => cycle_graph(self.n),
            FamilyKind::TSingle => tree_single(self.n, self.i),
            FamilyKind::TDouble => tree_double(self.n, self.i, self.j),
            FamilyKind::TTail2 => tree_tail2(self.n, self.i),
        }
    }
}

/// The three extremal cases `D(G; s) = n - 2s - c` for `c` in `{-1, 0, 1}`.
pub fn check_hypothesis(c: i32, s: usize, n: usize) -> Result<()> {
    let min_n = match c {
        -1 => 2 * s,
        0 => 2 * s + 3,
        1 => 2 * s + 5,
        _ => return Err(Error::Hypothesis(format!("c must be -1, 0 or 1, got {c}"))),
    };
    if s < 1 {
        return Err(Error::Hypothesis("s must be >= 1".into()));
    }
    if n < min_n {
        return Err(Error::Hypothesis(format!(
            "c={c}, s={s} requires n >= {min_n}, got n={n}"
        )));
    }
    Ok(())
}

/// Target conditional diameter `n - 2s - c` for a valid `(c, s, n)`.
pub fn target_diameter(c: i32, s: usize, n: usize) -> Result<u32> {
    check_hypothesis(c, s, n)?;
    Ok((n as i64 - 2 * s as i64 - c as i64) as u32)
}

/// Claimed unique Wiener maximiser among connected graphs with `D(G; s) = n - 2s - c`:
/// the path for `c = -1`, `T^{s+1}_n` for `c = 0`, `T^{s+1, n-s-2}_n` for `c = 1`.
pub fn claimed_extremal(c: i32, s: usize, n: usize) -> Result<Graph> {
    check_hypothesis(c, s, n)?;
    match c {
        -1 => path_graph(n),
        0 => tree_single(n, s + 1),
        _ => tree_double(n, s + 1, n - s - 2),
    }
}

/// The claimed closed form `n^2/2 - (s + 3/2) n + s^2 + 7s` for
/// `W(T^{s+1,n-s-2}_n) - W(T^{(s+2)(2)}_n)`, evaluated exactly.
pub fn claimed_difference_poly(n: i64, s: i64) -> Ratio<i64> {
    let half = Ratio::new(1, 2);
    half * n * n - (Ratio::from_integer(s) + Ratio::new(3, 2)) * n + Ratio::from_integer(s * s + 7 * s)
}

/// `W(T^{s+1,n-s-2}_n) - W(T^{(s+2)(2)}_n)` from the two constructed trees.
pub fn construction_difference(n: usize, s: usize) -> Result<i64> {
    if s < 1 || n < 2 * s + 5 {
        return Err(Error::Hypothesis(format!(
            "construction difference requires s >= 1 and n >= 2s+5 (n={n}, s={s})"
        )));
    }
    let double = wiener(&tree_double(n, s + 1, n - s - 2)?)? as i64;
    let tail = wiener(&tree_tail2(n, s + 2)?)? as i64;
    Ok(double - tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_key;
    use crate::invariants::wiener;

    #[test]
    fn basic_shapes() {
        assert_eq!(path_graph(2).unwrap().edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(path_graph(1).unwrap(), Graph::empty(1));
        let k3 = cycle_graph(3).unwrap();
        assert_eq!((k3.order(), k3.size()), (3, 3));
        assert!(path_graph(0).is_err());
        assert!(cycle_graph(2).is_err());
    }

    #[test]
    fn single_pendant() {
        let p7 = canonical_key(&path_graph(7).unwrap());
        assert_eq!(canonical_key(&tree_single(7, 1).unwrap()), p7);
        let t = tree_single(7, 3).unwrap();
        assert_eq!(t.degree_sequence(), vec![1, 1, 1, 2, 2, 2, 3]);
        assert_eq!(wiener(&t), Ok(50));
        assert!(tree_single(7, 7).is_err());
        assert!(tree_single(7, 0).is_err());
        assert!(tree_single(2, 1).is_err());
    }

    #[test]
    fn double_pendant() {
        assert_eq!(wiener(&tree_double(9, 3, 5).unwrap()), Ok(100));
        assert_eq!(wiener(&tree_double(11, 3, 7).unwrap()), Ok(192));
        for n in 4..12 {
            assert_eq!(
                canonical_key(&tree_double(n, 1, n - 2).unwrap()),
                canonical_key(&path_graph(n).unwrap())
            );
        }
        let same = tree_double(6, 2, 2).unwrap();
        assert_eq!(same.degree(1), 4);
        assert!(tree_double(6, 3, 2).is_err());
        assert!(tree_double(6, 1, 5).is_err());
    }

    #[test]
    fn tail_tree() {
        assert_eq!(wiener(&tree_tail2(9, 4).unwrap()), Ok(102));
        assert_eq!(wiener(&tree_tail2(11, 4).unwrap()), Ok(190));
        assert_eq!(
            canonical_key(&tree_tail2(8, 1).unwrap()),
            canonical_key(&path_graph(8).unwrap())
        );
        assert!(tree_tail2(8, 7).is_err());
    }

    #[test]
    fn claimed_graphs() {
        assert_eq!(claimed_extremal(-1, 2, 6).unwrap(), path_graph(6).unwrap());
        assert_eq!(claimed_extremal(0, 2, 7).unwrap(), tree_single(7, 3).unwrap());
        assert_eq!(claimed_extremal(1, 2, 11).unwrap(), tree_double(11, 3, 7).unwrap());
        assert!(matches!(claimed_extremal(0, 2, 6), Err(Error::Hypothesis(_))));
        assert!(matches!(claimed_extremal(1, 2, 8), Err(Error::Hypothesis(_))));
        assert!(matches!(claimed_extremal(2, 1, 20), Err(Error::Hypothesis(_))));
        assert!(matches!(claimed_extremal(-1, 0, 20), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn difference_values() {
        assert_eq!(claimed_difference_poly(11, 2), Ratio::from_integer(40));
        assert_eq!(claimed_difference_poly(9, 2), Ratio::from_integer(27));
        assert_eq!(claimed_difference_poly(0, 0), Ratio::from_integer(0));
        assert_eq!(claimed_difference_poly(1, 0), Ratio::new(-1, 1));
        assert_eq!(claimed_difference_poly(2, 1), Ratio::from_integer(5));
        assert_eq!(claimed_difference_poly(4, 1), Ratio::new(6, 1));
        assert_eq!(claimed_difference_poly(1, 1), Ratio::from_integer(6));
        assert_eq!(claimed_difference_poly(1, 2), Ratio::from_integer(15));

        assert_eq!(construction_difference(11, 2), Ok(2));
        assert_eq!(construction_difference(9, 2), Ok(-2));
        assert_eq!(construction_difference(10, 2), Ok(0));
        assert!(construction_difference(8, 2).is_err());
    }

    #[test]
    fn family_spec_dispatch() {
        let spec = FamilySpec { kind: FamilyKind::TDouble, n: 9, i: 3, j: 5 };
        assert_eq!(spec.build().unwrap(), tree_double(9, 3, 5).unwrap());
        assert_eq!("tail2".parse::<FamilyKind>().unwrap(), FamilyKind::TTail2);
        assert_eq!("T_SINGLE".parse::<FamilyKind>().unwrap(), FamilyKind::TSingle);
        assert!("star".parse::<FamilyKind>().is_err());
    }
}
