//! Exhaustive sweeps over graph classes and audit certificates for the extremal claims.
//!
//! A sweep keeps the connected graphs of a class whose conditional diameter equals a
//! target, and reports every Wiener maximiser up to isomorphism. Reports merge
//! associatively, so a class can be split across workers.

use std::collections::BTreeMap;
use std::fmt;
use std::io::BufRead;
use std::path::PathBuf;
use std::str::FromStr;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_key;
use crate::condiam::{brute_force_conditional_diameter, has_conditional_diameter};
use crate::enumerate::{enumerate_connected_graphs, enumerate_trees};
use crate::error::{Error, Result};
use crate::families::{
    check_hypothesis, claimed_difference_poly, claimed_extremal, construction_difference,
    target_diameter,
};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, HEADER};
use crate::invariants::wiener;

/// Orders up to which every maximiser's conditional diameter is re-checked by brute force.
pub const ORACLE_RECHECK_MAX_ORDER: usize = 10;

/// Line-by-line graph6 reader. Blank lines and a bare `>>graph6<<` header are skipped.
pub struct Graph6Lines<R> {
    lines: std::io::Lines<R>,
    line_no: usize,
    lenient: bool,
}

impl<R: BufRead> Graph6Lines<R> {
    pub fn new(reader: R, lenient: bool) -> Self {
        Self {
            lines: reader.lines(),
            line_no: 0,
            lenient,
        }
    }
}

impl<R: BufRead> Iterator for Graph6Lines<R> {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        loop {
            let line = self.lines.next()?;
            self.line_no += 1;
            let line = match line {
                Ok(l) => l,
                Err(e) => {
                    return Some(Err(Error::Ingest {
                        line: self.line_no,
                        message: e.to_string(),
                    }))
                }
            };
            let record = line.trim_end();
            if record.is_empty() || record.as_bytes() == HEADER {
                continue;
            }
            match parse_graph6(record.as_bytes()) {
                Ok(g) => return Some(Ok(g)),
                Err(_) if self.lenient => continue,
                Err(e) => {
                    return Some(Err(Error::Ingest {
                        line: self.line_no,
                        message: e.to_string(),
                    }))
                }
            }
        }
    }
}

/// Reads every graph6 record. Aborts on the first malformed line unless `lenient`.
pub fn ingest_graph6<R: BufRead>(reader: R, lenient: bool) -> Result<Vec<Graph>> {
    Graph6Lines::new(reader, lenient).collect()
}

/// Where the graphs of a sweep come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// Every unlabelled tree of the requested order.
    Trees,
    /// Every connected graph of the requested order (built-in generator, n <= 9).
    Exhaustive,
    /// Graphs of the requested order read from a graph6 file.
    Graph6File(PathBuf),
}

impl FromStr for Source {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trees" => Ok(Self::Trees),
            "exhaustive" => Ok(Self::Exhaustive),
            _ => match s.strip_prefix("g6:") {
                Some(path) if !path.is_empty() => Ok(Self::Graph6File(PathBuf::from(path))),
                _ => Err(Error::InvalidParameter(format!(
                    "unknown source '{s}' (expected trees, exhaustive or g6:PATH)"
                ))),
            },
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Trees => f.write_str("trees"),
            Self::Exhaustive => f.write_str("exhaustive"),
            Self::Graph6File(p) => write!(f, "g6:{}", p.display()),
        }
    }
}

impl Source {
    /// Materialises the class for order `n`. File sources must contain only order-`n` graphs.
    pub fn graphs(&self, n: usize, lenient: bool) -> Result<Vec<Graph>> {
        match self {
            Self::Trees => Ok(enumerate_trees(n)),
            Self::Exhaustive => enumerate_connected_graphs(n),
            Self::Graph6File(path) => {
                let file = std::fs::File::open(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                let graphs = ingest_graph6(std::io::BufReader::new(file), lenient)?;
                check_orders(&graphs, Some(n))?;
                Ok(graphs)
            }
        }
    }

    pub fn describe(&self, n: usize) -> String {
        match self {
            Self::Trees => format!("all unlabelled trees on {n} vertices"),
            Self::Exhaustive => format!("all connected graphs on {n} vertices (built-in generator)"),
            Self::Graph6File(p) => format!("graph6 corpus {}", p.display()),
        }
    }
}

fn check_orders(graphs: &[Graph], expected: Option<usize>) -> Result<()> {
    let Some(expected) = expected.or_else(|| graphs.first().map(Graph::order)) else {
        return Ok(());
    };
    match graphs.iter().find(|g| g.order() != expected) {
        Some(g) => Err(Error::MixedOrders {
            expected,
            found: g.order(),
        }),
        None => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Maximizer {
    pub key: String,
    /// graph6 of the canonical form.
    pub graph6: String,
}

/// Wiener maximisers of one filtered class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArgmaxReport {
    /// Graphs read from the source, before filtering.
    pub examined: u64,
    /// Connected graphs meeting the conditional-diameter filter.
    pub class_size: u64,
    pub max_wiener: Option<u64>,
    /// Sorted by key, pairwise non-isomorphic.
    pub maximizers: Vec<Maximizer>,
    /// Maximum recomputed from the maximisers by Floyd-Warshall.
    pub naive_max_wiener: Option<u64>,
    /// Whether each maximiser's conditional diameter was re-derived by brute force.
    pub condiam_rechecked: bool,
}

impl ArgmaxReport {
    pub fn empty() -> Self {
        Self {
            examined: 0,
            class_size: 0,
            max_wiener: None,
            maximizers: Vec::new(),
            naive_max_wiener: None,
            condiam_rechecked: false,
        }
    }

    fn observe(&mut self, g: &Graph, w: u64) {
        self.class_size += 1;
        match self.max_wiener {
            Some(best) if w < best => return,
            Some(best) if w == best => {}
            _ => {
                self.max_wiener = Some(w);
                self.maximizers.clear();
            }
        }
        let key = canonical_key(g);
        if let Err(pos) = self.maximizers.binary_search_by(|m| m.key.cmp(&key)) {
            self.maximizers.insert(
                pos,
                Maximizer {
                    graph6: key.clone(),
                    key,
                },
            );
        }
    }

    /// Associative, commutative combination of two partial reports.
    pub fn merge(mut self, other: Self) -> Self {
        self.examined += other.examined;
        self.class_size += other.class_size;
        let maximizers = match self.max_wiener.cmp(&other.max_wiener) {
            std::cmp::Ordering::Greater => self.maximizers,
            std::cmp::Ordering::Less => other.maximizers,
            std::cmp::Ordering::Equal => {
                let mut all: BTreeMap<String, Maximizer> = BTreeMap::new();
                for m in self.maximizers.into_iter().chain(other.maximizers) {
                    all.entry(m.key.clone()).or_insert(m);
                }
                all.into_values().collect()
            }
        };
        Self {
            examined: self.examined,
            class_size: self.class_size,
            max_wiener: self.max_wiener.max(other.max_wiener),
            maximizers,
            naive_max_wiener: None,
            condiam_rechecked: false,
        }
    }
}

/// Wiener index by Floyd-Warshall, independent of the BFS path.
pub fn naive_wiener(g: &Graph) -> Result<u64> {
    let n = g.order();
    const INF: u64 = u64::MAX / 4;
    let mut d = vec![INF; n * n];
    for u in 0..n {
        d[u * n + u] = 0;
    }
    for (u, v) in g.edges() {
        d[u * n + v] = 1;
        d[v * n + u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            let dik = d[i * n + k];
            if dik == INF {
                continue;
            }
            for j in 0..n {
                let via = dik + d[k * n + j];
                if via < d[i * n + j] {
                    d[i * n + j] = via;
                }
            }
        }
    }
    let mut total = 0;
    for i in 0..n {
        for j in i + 1..n {
            if d[i * n + j] == INF {
                return Err(Error::Disconnected);
            }
            total += d[i * n + j];
        }
    }
    Ok(total)
}

fn sweep_chunk(graphs: &[Graph], s: usize, target: u32) -> Result<ArgmaxReport> {
    let mut report = ArgmaxReport::empty();
    for g in graphs {
        report.examined += 1;
        if !g.is_connected() || !has_conditional_diameter(g, s, target)? {
            continue;
        }
        report.observe(g, wiener(g)?);
    }
    Ok(report)
}

fn run_with_threads<T: Send>(threads: usize, job: impl FnOnce() -> T + Send) -> Result<T> {
    if threads <= 1 {
        return Ok(job());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map(|pool| pool.install(job))
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))
}

/// Filters `graphs` to connected graphs with `D(G; s) = target` and collects the Wiener
/// maximisers. Every maximiser is re-verified independently before the report is returned.
pub fn sweep_class(graphs: &[Graph], s: usize, target: u32, threads: usize) -> Result<ArgmaxReport> {
    if s < 1 {
        return Err(Error::InvalidParameter("s must be >= 1".into()));
    }
    check_orders(graphs, None)?;
    let chunk = (graphs.len() / (threads.max(1) * 8)).max(64);
    let mut report = run_with_threads(threads, || {
        if threads <= 1 {
            sweep_chunk(graphs, s, target)
        } else {
            graphs
                .par_chunks(chunk)
                .map(|c| sweep_chunk(c, s, target))
                .try_reduce(ArgmaxReport::empty, |a, b| Ok(a.merge(b)))
        }
    })??;

    let n = graphs.first().map(Graph::order).unwrap_or(0);
    let mut naive_max = None;
    for m in &report.maximizers {
        let g = parse_graph6(m.graph6.as_bytes())?;
        let w = naive_wiener(&g)?;
        if Some(w) != report.max_wiener {
            return Err(Error::Inconsistent(format!(
                "maximiser {} has naive Wiener index {w}, sweep reported {:?}",
                m.key, report.max_wiener
            )));
        }
        naive_max = naive_max.max(Some(w));
        if n <= ORACLE_RECHECK_MAX_ORDER {
            let d = brute_force_conditional_diameter(&g, s)?;
            if d != target {
                return Err(Error::Inconsistent(format!(
                    "maximiser {} has conditional diameter {d}, expected {target}",
                    m.key
                )));
            }
        }
    }
    report.naive_max_wiener = naive_max;
    report.condiam_rechecked = n <= ORACLE_RECHECK_MAX_ORDER && !report.maximizers.is_empty();
    Ok(report)
}

/// One instance `(c, s, n)` of the claim that a single graph maximises the Wiener index
/// among connected graphs with `D(G; s) = n - 2s - c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalClaim {
    pub c: i32,
    pub s: usize,
    pub n: usize,
    pub target_d: u32,
    /// Canonical keys of the claimed extremal graphs.
    pub claimed: Vec<String>,
    /// The audited statement asserts the claimed graph is the only maximiser, so a TIE
    /// refutes it as much as a MISMATCH does.
    pub claims_unique: bool,
}

impl ExtremalClaim {
    pub fn new(c: i32, s: usize, n: usize) -> Result<Self> {
        let target_d = target_diameter(c, s, n)?;
        let claimed = vec![canonical_key(&claimed_extremal(c, s, n)?)];
        Ok(Self {
            c,
            s,
            n,
            target_d,
            claimed,
            claims_unique: true,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    /// The claimed graph is the only maximiser.
    MatchUnique,
    /// The claimed graph is one of several maximisers.
    Tie,
    /// The claimed graph is not a maximiser.
    Mismatch,
    /// No graph in the class meets the filter.
    EmptyClass,
}

impl Status {
    /// True for outcomes that contradict a uniqueness claim.
    pub fn is_audit_failure(self) -> bool {
        matches!(self, Self::Tie | Self::Mismatch)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::MatchUnique => "MATCH_UNIQUE",
            Self::Tie => "TIE",
            Self::Mismatch => "MISMATCH",
            Self::EmptyClass => "EMPTY_CLASS",
        })
    }
}

mod ratio_string {
    use num_rational::Ratio;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<i64>, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}

/// The two routes to `W(T^{s+1,n-s-2}_n) - W(T^{(s+2)(2)}_n)`, reported side by side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crosscheck {
    /// Closed-form quadratic `n^2/2 - (s + 3/2) n + s^2 + 7s`, exact.
    #[serde(with = "ratio_string")]
    pub claimed_poly_value: Ratio<i64>,
    /// Difference of the Wiener indices of the two constructed trees.
    pub construction_difference_value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationCertificate {
    pub claim: ExtremalClaim,
    pub report: ArgmaxReport,
    pub status: Status,
    pub crosscheck: Option<Crosscheck>,
    pub source: String,
}

pub const CSV_HEADER: &str = "c,s,n,target_D,class_size,max_wiener,status";

impl VerificationCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialises")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidParameter(format!("certificate JSON: {e}")))
    }

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.claim.c,
            self.claim.s,
            self.claim.n,
            self.claim.target_d,
            self.report.class_size,
            self.report.max_wiener.map(|w| w.to_string()).unwrap_or_default(),
            self.status
        )
    }
}

pub fn classify(claimed: &[String], report: &ArgmaxReport) -> Status {
    if report.class_size == 0 {
        return Status::EmptyClass;
    }
    let found = report.maximizers.iter().any(|m| claimed.contains(&m.key));
    match (found, report.maximizers.len()) {
        (false, _) => Status::Mismatch,
        (true, 1) => Status::MatchUnique,
        (true, _) => Status::Tie,
    }
}

/// Audits one `(c, s, n)` instance against the graphs of `source`.
pub fn verify_claim(
    c: i32,
    s: usize,
    n: usize,
    graphs: &[Graph],
    source: &str,
    threads: usize,
) -> Result<VerificationCertificate> {
    check_hypothesis(c, s, n)?;
    if graphs.is_empty() {
        return Err(Error::EmptySource);
    }
    check_orders(graphs, Some(n))?;
    let claim = ExtremalClaim::new(c, s, n)?;
    let report = sweep_class(graphs, s, claim.target_d, threads)?;
    let status = classify(&claim.claimed, &report);
    let crosscheck = if c == 1 {
        Some(Crosscheck {
            claimed_poly_value: claimed_difference_poly(n as i64, s as i64),
            construction_difference_value: construction_difference(n, s)?,
        })
    } else {
        None
    };
    Ok(VerificationCertificate {
        claim,
        report,
        status,
        crosscheck,
        source: source.to_string(),
    })
}

/// Every admissible `(c, s, n)` in the grid, in `c`, `s`, `n` order.
pub fn audit_grid(cs: &[i32], ss: &[usize], n_min: usize, n_max: usize) -> Vec<(i32, usize, usize)> {
    let mut out = Vec::new();
    for &c in cs {
        for &s in ss {
            for n in n_min..=n_max {
                if check_hypothesis(c, s, n).is_ok() {
                    out.push((c, s, n));
                }
            }
        }
    }
    out
}

/// Certificates for every grid instance, generating each order's class once.
pub fn audit(
    grid: &[(i32, usize, usize)],
    source: &Source,
    lenient: bool,
    threads: usize,
) -> Result<Vec<VerificationCertificate>> {
    let mut classes: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
    let mut out = Vec::with_capacity(grid.len());
    for &(c, s, n) in grid {
        if let std::collections::btree_map::Entry::Vacant(slot) = classes.entry(n) {
            slot.insert(source.graphs(n, lenient)?);
        }
        out.push(verify_claim(c, s, n, &classes[&n], &source.describe(n), threads)?);
    }
    Ok(out)
}
