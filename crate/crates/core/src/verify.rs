//! Exhaustive checks of the extremal statements over every connected graph
//! on a few vertices.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;
use std::fs::OpenOptions;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::{Graph, Shape};
use crate::pseudoordering::{next_permutation, spectrum, Method};

/// Largest order handled by [`enumerate_connected_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    /// graph6 strings of the graphs involved
    pub graphs: Vec<String>,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub family: String,
    pub instances_checked: u64,
    pub failures: Vec<Failure>,
    pub passed: bool,
}

impl VerificationReport {
    fn new(claim: &str, family: String, instances_checked: u64, mut failures: Vec<Failure>) -> Self {
        failures.sort();
        VerificationReport {
            claim: claim.to_string(),
            family,
            instances_checked,
            passed: failures.is_empty(),
            failures,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "claim: {}", self.claim);
        let _ = writeln!(s, "family: {}", self.family);
        let _ = writeln!(s, "instances_checked: {}", self.instances_checked);
        let _ = writeln!(s, "passed: {}", self.passed);
        for f in &self.failures {
            let _ = writeln!(s, "failure: {} : {}", f.graphs.join(" "), f.details);
        }
        s
    }
}

/// How many threads to use and where to record finished work.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// `None` uses rayon's global pool.
    pub jobs: Option<usize>,
    /// Completed-pair log for [`verify_upper_bound`]; pairs listed there are
    /// skipped (and still counted) on the next run.
    pub progress: Option<PathBuf>,
}

impl VerifyOptions {
    fn run<T: Send>(&self, work: impl FnOnce() -> T + Send) -> Result<T> {
        match self.jobs {
            None => Ok(work()),
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::Internal(e.to_string()))
                .map(|pool| pool.install(work)),
        }
    }
}

fn pair_index(a: usize, b: usize) -> usize {
    // graph6 order: (0,1), (0,2), (1,2), (0,3), ...
    b * (b - 1) / 2 + a
}

/// Adjacency bit-string of `g` under `perm`, first pair most significant.
fn key_under(g: &Graph, perm: &[usize], bits: usize) -> u64 {
    g.edges().iter().fold(0u64, |acc, &(a, b)| {
        let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
        acc | 1 << (bits - 1 - pair_index(x, y))
    })
}

/// Minimum adjacency bit-string over all vertex permutations.
pub fn canonical_key(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical keys are for small graphs");
    let bits = n * n.saturating_sub(1) / 2;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = key_under(g, &perm, bits);
    while next_permutation(&mut perm) {
        best = best.min(key_under(g, &perm, bits));
    }
    best
}

fn from_key(n: usize, key: u64) -> Graph {
    let bits = n * n.saturating_sub(1) / 2;
    let edges = (1..n)
        .flat_map(|b| (0..b).map(move |a| (a, b)))
        .filter(|&(a, b)| key >> (bits - 1 - pair_index(a, b)) & 1 == 1);
    Graph::new(n, edges).expect("valid key")
}

/// The representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    from_key(g.n(), canonical_key(g))
}

/// One graph per isomorphism class of connected graphs on `n` vertices, in
/// canonical form, sorted by canonical key.
///
/// Classes of all graphs are grown one vertex at a time (every class on
/// `m` vertices plus a new vertex with every neighbor subset), so only a few
/// thousand canonicalizations are needed even at `n = 7`.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::CapExceeded {
            n,
            cap: MAX_ENUMERATION_ORDER,
        });
    }
    if n == 0 {
        return Err(Error::TooFewVertices {
            what: "enumeration",
            min: 1,
            got: 0,
        });
    }
    let mut layer = vec![Graph::empty(1)?];
    for m in 1..n {
        let next: BTreeSet<u64> = layer
            .par_iter()
            .flat_map_iter(|g| {
                (0u32..1 << m).map(move |mask| {
                    let edges = g
                        .edges()
                        .iter()
                        .copied()
                        .chain((0..m).filter(|&i| mask >> i & 1 == 1).map(|i| (i, m)));
                    canonical_key(&Graph::new(m + 1, edges).expect("valid extension"))
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        layer = next.into_iter().map(|k| from_key(m + 1, k)).collect();
    }
    Ok(layer.into_iter().filter(Graph::is_connected).collect())
}

fn g6(g: &Graph) -> String {
    to_graph6(g)
}

fn upper(h: &Graph, g: &Graph) -> Result<u64> {
    Ok(spectrum(h, g)?.max)
}

/// Upper Hamiltonian and traceable numbers of P_{n-1} against the closed
/// forms `floor(n^2 / 2)` and `floor(n^2 / 2) - 1`, for n = 2..=n_max (the
/// Hamiltonian one from n = 3).
pub fn verify_closed_forms(n_max: usize) -> Result<VerificationReport> {
    let cap = crate::pseudoordering::SearchConfig::default().exhaustive_cap;
    if n_max > cap {
        return Err(Error::CapExceeded { n: n_max, cap });
    }
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 2..=n_max {
        let p = Graph::path(n)?;
        let formula = (n * n / 2) as u64;
        let t_plus = upper(&p, &p)?;
        checked += 1;
        if t_plus != formula - 1 {
            failures.push(Failure {
                graphs: vec![g6(&p)],
                details: format!("n = {n}: t+ = {t_plus}, formula {}", formula - 1),
            });
        }
        if n >= 3 {
            let h_plus = upper(&Graph::cycle(n)?, &p)?;
            checked += 1;
            if h_plus != formula {
                failures.push(Failure {
                    graphs: vec![g6(&p)],
                    details: format!("n = {n}: h+ = {h_plus}, formula {formula}"),
                });
            }
        }
    }
    Ok(VerificationReport::new(
        "closed-forms",
        format!("P_(n-1), n = 2..={n_max}"),
        checked,
        failures,
    ))
}

/// Which graphs play the role of H in [`verify_upper_bound`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HFamily {
    /// C_n (n >= 3) and P_{n-1}
    Canonical,
    /// every connected graph on n vertices
    ConnectedAll,
}

fn pair_key(g: &Graph, h: &Graph) -> String {
    format!("{} {}", g6(g), g6(h))
}

fn load_progress(path: &Path) -> Result<HashSet<String>> {
    match std::fs::read_to_string(path) {
        Ok(text) => Ok(text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(String::from)
            .collect()),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(HashSet::new()),
        Err(e) => Err(e.into()),
    }
}

/// For every connected G on `n` vertices and every H in the family: the
/// upper H-number of G is at most that of the path, with equality exactly
/// when G is a path.
pub fn verify_upper_bound(n: usize, family: HFamily, opts: &VerifyOptions) -> Result<VerificationReport> {
    let limit = match family {
        HFamily::Canonical => 7,
        HFamily::ConnectedAll => 6,
    };
    if n > limit {
        return Err(Error::CapExceeded { n, cap: limit });
    }
    if n < 2 {
        return Err(Error::TooFewVertices {
            what: "upper-bound check",
            min: 2,
            got: n,
        });
    }
    let graphs = enumerate_connected_graphs(n)?;
    let hs = match family {
        HFamily::Canonical => {
            let mut v = Vec::new();
            if n >= 3 {
                v.push(Graph::cycle(n)?);
            }
            v.push(Graph::path(n)?);
            v
        }
        HFamily::ConnectedAll => graphs.clone(),
    };
    let done = match &opts.progress {
        Some(p) => load_progress(p)?,
        None => HashSet::new(),
    };
    let path = Graph::path(n)?;
    let mut checked = 0;
    let mut failures = Vec::new();
    for h in &hs {
        let reference = upper(h, &path)?;
        let todo: Vec<&Graph> = graphs
            .iter()
            .filter(|g| !done.contains(&pair_key(g, h)))
            .collect();
        let results: Vec<Result<Option<Failure>>> = opts.run(|| {
            todo.par_iter()
                .map(|g| {
                    let value = upper(h, g)?;
                    let is_path = g.classify_shape()? == Shape::Path;
                    let ok = value <= reference && (value == reference) == is_path;
                    Ok((!ok).then(|| Failure {
                        graphs: vec![g6(g), g6(h)],
                        details: format!(
                            "h+_H(G) = {value}, h+_H(P) = {reference}, G is a path: {is_path}"
                        ),
                    }))
                })
                .collect()
        })?;
        let mut finished = Vec::new();
        for (g, r) in todo.iter().zip(results) {
            match r? {
                Some(f) => failures.push(f),
                None => finished.push(pair_key(g, h)),
            }
        }
        if let Some(p) = &opts.progress {
            let mut file = OpenOptions::new().create(true).append(true).open(p)?;
            for key in &finished {
                writeln!(file, "{key}")?;
            }
            file.flush()?;
        }
        checked += graphs.len() as u64;
    }
    let family_name = match family {
        HFamily::Canonical => format!("connected G on {n} vertices, H in {{C_n, P_(n-1)}}"),
        HFamily::ConnectedAll => format!("connected G and H on {n} vertices"),
    };
    Ok(VerificationReport::new("upper-bound", family_name, checked, failures))
}

fn check_small(n_max: usize) -> Result<()> {
    if n_max > 6 {
        return Err(Error::CapExceeded { n: n_max, cap: 6 });
    }
    Ok(())
}

fn graphs_up_to(n_max: usize) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for n in 2..=n_max {
        all.extend(enumerate_connected_graphs(n)?);
    }
    Ok(all)
}

/// Every spanning tree is a path exactly when G is a path or a cycle.
pub fn verify_spanning_tree_characterization(n_max: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    check_small(n_max)?;
    let graphs = graphs_up_to(n_max)?;
    let failures: Vec<Result<Option<Failure>>> = opts.run(|| {
        graphs
            .par_iter()
            .map(|g| {
                let all_paths = g.spanning_trees()?.iter().all(Graph::is_path);
                let shape = g.classify_shape()?;
                let path_or_cycle = matches!(shape, Shape::Path | Shape::Cycle);
                Ok((all_paths != path_or_cycle).then(|| Failure {
                    graphs: vec![g6(g)],
                    details: format!("all spanning trees paths: {all_paths}, shape {shape:?}"),
                }))
            })
            .collect()
    })?;
    let failures = failures.into_iter().filter_map(Result::transpose).collect::<Result<_>>()?;
    Ok(VerificationReport::new(
        "spanning-trees",
        format!("connected graphs on 2..={n_max} vertices"),
        graphs.len() as u64,
        failures,
    ))
}

/// Every connected graph with at least two vertices has a vertex whose
/// removal keeps it connected.
pub fn verify_non_articulation(n_max: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    check_small(n_max)?;
    let graphs = graphs_up_to(n_max)?;
    let failures: Vec<Result<Option<Failure>>> = opts.run(|| {
        graphs
            .par_iter()
            .map(|g| {
                let v = g.non_articulation_vertex()?;
                let brute = (0..g.n()).find(|&x| g.connected_without(x));
                let ok = g.connected_without(v) && brute == Some(v);
                Ok((!ok).then(|| Failure {
                    graphs: vec![g6(g)],
                    details: format!("picked {v}, brute force {brute:?}"),
                }))
            })
            .collect()
    })?;
    let failures = failures.into_iter().filter_map(Result::transpose).collect::<Result<_>>()?;
    Ok(VerificationReport::new(
        "articulation",
        format!("connected graphs on 2..={n_max} vertices"),
        graphs.len() as u64,
        failures,
    ))
}

/// Exhaustive and branch-and-bound values side by side, for cross-checking.
pub fn solver_pair(h: &Graph, g: &Graph, sense: crate::pseudoordering::Sense) -> Result<(u64, u64)> {
    use crate::pseudoordering::{extremal_number, ExtremalQuery};
    let ex = extremal_number(h, g, ExtremalQuery::new(sense, Method::Exhaustive))?;
    let bb = extremal_number(h, g, ExtremalQuery::new(sense, Method::BranchAndBound))?;
    Ok((ex.value, bb.value))
}
