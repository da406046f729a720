use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::{bnb, edge_sum, next_permutation, Pseudoordering};
use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Min,
    Max,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exhaustive,
    BranchAndBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremalQuery {
    pub sense: Sense,
    pub method: Method,
}

impl ExtremalQuery {
    pub fn new(sense: Sense, method: Method) -> Self {
        ExtremalQuery { sense, method }
    }
}

/// Size limits for the searches and whether to split enumeration across threads.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest n for which all n! bijections are enumerated.
    pub exhaustive_cap: usize,
    /// Largest n accepted by branch-and-bound.
    pub bnb_cap: usize,
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            exhaustive_cap: 9,
            bnb_cap: 12,
            parallel: false,
        }
    }
}

/// The H-Hamiltonian spectrum of G with multiplicities and extremal witnesses.
///
/// Witnesses are the lexicographically smallest bijections (compared as image
/// lists) attaining each extreme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    /// value -> number of bijections attaining it
    pub values: BTreeMap<u64, u64>,
    pub min: u64,
    pub max: u64,
    pub min_witness: Pseudoordering,
    pub max_witness: Pseudoordering,
    pub enumerated: u64,
}

impl SpectrumReport {
    /// The spectrum as a set.
    pub fn distinct(&self) -> Vec<u64> {
        self.values.keys().copied().collect()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Entry {
            value: u64,
            count: u64,
        }
        #[derive(Serialize)]
        struct Out<'a> {
            values: Vec<Entry>,
            min: u64,
            max: u64,
            min_witness: &'a Pseudoordering,
            max_witness: &'a Pseudoordering,
            enumerated: u64,
        }
        let out = Out {
            values: self
                .values
                .iter()
                .map(|(&value, &count)| Entry { value, count })
                .collect(),
            min: self.min,
            max: self.max,
            min_witness: &self.min_witness,
            max_witness: &self.max_witness,
            enumerated: self.enumerated,
        };
        serde_json::to_string(&out).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("values:");
        for (v, c) in &self.values {
            let _ = write!(s, " {v}x{c}");
        }
        let join = |p: &Pseudoordering| {
            p.as_slice()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        let _ = writeln!(s);
        let _ = writeln!(s, "min: {}", self.min);
        let _ = writeln!(s, "max: {}", self.max);
        let _ = writeln!(s, "min_witness: {}", join(&self.min_witness));
        let _ = writeln!(s, "max_witness: {}", join(&self.max_witness));
        let _ = writeln!(s, "enumerated: {}", self.enumerated);
        s
    }

    fn merge(mut self, other: SpectrumReport) -> SpectrumReport {
        for (v, c) in other.values {
            *self.values.entry(v).or_insert(0) += c;
        }
        // `self` covers lexicographically earlier bijections, so it wins ties
        if other.min < self.min {
            self.min = other.min;
            self.min_witness = other.min_witness;
        }
        if other.max > self.max {
            self.max = other.max;
            self.max_witness = other.max_witness;
        }
        self.enumerated += other.enumerated;
        self
    }
}

/// An optimum value together with a bijection attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extremum {
    pub value: u64,
    pub witness: Pseudoordering,
}

fn check_sizes(h: &Graph, g: &Graph) -> Result<()> {
    if h.n() != g.n() {
        return Err(Error::SizeMismatch(h.n(), g.n()));
    }
    Ok(())
}

/// All bijections with `map[0] = first`, in lexicographic order.
fn spectrum_chunk(h: &Graph, dg: &DistanceMatrix, first: usize) -> SpectrumReport {
    let n = dg.n();
    let mut map = Vec::with_capacity(n);
    map.push(first);
    map.extend((0..n).filter(|&v| v != first));
    let s = edge_sum(h.edges(), &map, dg);
    let mut report = SpectrumReport {
        values: BTreeMap::new(),
        min: s,
        max: s,
        min_witness: Pseudoordering::from_vec_unchecked(map.clone()),
        max_witness: Pseudoordering::from_vec_unchecked(map.clone()),
        enumerated: 0,
    };
    loop {
        let s = edge_sum(h.edges(), &map, dg);
        *report.values.entry(s).or_insert(0) += 1;
        report.enumerated += 1;
        if s < report.min {
            report.min = s;
            report.min_witness = Pseudoordering::from_vec_unchecked(map.clone());
        }
        if s > report.max {
            report.max = s;
            report.max_witness = Pseudoordering::from_vec_unchecked(map.clone());
        }
        if !next_permutation(&mut map[1..]) {
            break;
        }
    }
    report
}

pub fn spectrum(h: &Graph, g: &Graph) -> Result<SpectrumReport> {
    spectrum_with(h, g, &SearchConfig::default())
}

/// Enumerates all n! bijections. The space is split by the image of vertex 0;
/// chunks are merged in order, so the result does not depend on `parallel`.
pub fn spectrum_with(h: &Graph, g: &Graph, cfg: &SearchConfig) -> Result<SpectrumReport> {
    check_sizes(h, g)?;
    let n = g.n();
    if n > cfg.exhaustive_cap {
        return Err(Error::CapExceeded {
            n,
            cap: cfg.exhaustive_cap,
        });
    }
    let dg = DistanceMatrix::new(g)?;
    let chunks: Vec<SpectrumReport> = if cfg.parallel {
        (0..n)
            .into_par_iter()
            .map(|first| spectrum_chunk(h, &dg, first))
            .collect()
    } else {
        (0..n).map(|first| spectrum_chunk(h, &dg, first)).collect()
    };
    let merged = chunks
        .into_iter()
        .reduce(SpectrumReport::merge)
        .expect("n >= 1");
    Ok(merged)
}

pub fn extremal_number(h: &Graph, g: &Graph, q: ExtremalQuery) -> Result<Extremum> {
    extremal_number_with(h, g, q, &SearchConfig::default())
}

/// h_H(G) (`Sense::Min`) or h+_H(G) (`Sense::Max`) with a witness.
pub fn extremal_number_with(
    h: &Graph,
    g: &Graph,
    q: ExtremalQuery,
    cfg: &SearchConfig,
) -> Result<Extremum> {
    check_sizes(h, g)?;
    match q.method {
        Method::Exhaustive => {
            let r = spectrum_with(h, g, cfg)?;
            Ok(match q.sense {
                Sense::Min => Extremum {
                    value: r.min,
                    witness: r.min_witness,
                },
                Sense::Max => Extremum {
                    value: r.max,
                    witness: r.max_witness,
                },
            })
        }
        Method::BranchAndBound => {
            if g.n() > cfg.bnb_cap {
                return Err(Error::CapExceeded {
                    n: g.n(),
                    cap: cfg.bnb_cap,
                });
            }
            let dg = DistanceMatrix::new(g)?;
            Ok(bnb::solve(h, &dg, q.sense))
        }
    }
}

/// Lower/upper Hamiltonian and traceable numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicNumbers {
    pub h: u64,
    pub h_plus: u64,
    pub t: u64,
    pub t_plus: u64,
}

/// (h, h+) via H = C_n. Needs n >= 3.
pub fn hamiltonian_numbers(g: &Graph) -> Result<(u64, u64)> {
    let r = spectrum(&Graph::cycle(g.n())?, g)?;
    Ok((r.min, r.max))
}

/// (t, t+) via H = P_{n-1}. Needs n >= 2.
pub fn traceable_numbers(g: &Graph) -> Result<(u64, u64)> {
    let r = spectrum(&Graph::path(g.n())?, g)?;
    Ok((r.min, r.max))
}

pub fn classic_numbers(g: &Graph) -> Result<ClassicNumbers> {
    let (h, h_plus) = hamiltonian_numbers(g)?;
    let (t, t_plus) = traceable_numbers(g)?;
    Ok(ClassicNumbers { h, h_plus, t, t_plus })
}

/// Whether H is isomorphic to a spanning subgraph of G, decided by
/// h_H(G) = |E(H)|.
pub fn contains_subgraph(h: &Graph, g: &Graph) -> Result<bool> {
    let best = extremal_number(h, g, ExtremalQuery::new(Sense::Min, Method::BranchAndBound))?;
    Ok(best.value == h.edge_count() as u64)
}

/// Isomorphism test for graphs of equal order and size, via h_H(G) = |E(H)|.
pub fn isomorphic_via_h(h: &Graph, g: &Graph) -> Result<bool> {
    check_sizes(h, g)?;
    if h.edge_count() != g.edge_count() {
        return Err(Error::EdgeCountMismatch(h.edge_count(), g.edge_count()));
    }
    contains_subgraph(h, g)
}
