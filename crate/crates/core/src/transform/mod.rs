//! Tree surgery that moves a tree towards a path without decreasing the
//! pseudoordering sum.
//!
//! Given three leaves `l`, `k`, `v` of a tree that is not a path, walk from
//! `v` towards `l` and stop at the first vertex `u` on the `l`-`k` path; `w`
//! is the vertex just before it. Deleting `{w, u}` splits the tree into the
//! side `K` holding `v` and `w`, and the side holding `u`, `l`, `k`.
//! Reattaching `w` to `l` gives the "bar" tree, reattaching it to `k` gives
//! the "tilde" tree. One of the two never has a smaller sum, and either one
//! lowers the potential `alpha` (sum of degrees >= 3), so repeating the step
//! ends in a path.

pub mod audit;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::pseudoordering::{pseudo_sum, Pseudoordering};

/// Three distinct leaves of a tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LeafTriple {
    pub l: Vertex,
    pub k: Vertex,
    pub v: Vertex,
}

impl LeafTriple {
    pub fn new(l: Vertex, k: Vertex, v: Vertex) -> Self {
        LeafTriple { l, k, v }
    }
}

/// Where the `v`-to-`l` walk first meets the `l`-`k` path.
///
/// `u_plus` is `u`'s neighbor on the `l`-`k` path towards `l`, `u_minus` the
/// one towards `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Junction {
    pub u: Vertex,
    pub w: Vertex,
    pub u_plus: Vertex,
    pub u_minus: Vertex,
}

/// Class of a cut-crossing pair by which edge at `u` its tree path takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PairClass {
    /// path uses `{u, u_plus}`
    FPlus,
    /// path uses `{u, u_minus}`
    FMinus,
    /// path uses neither
    FZero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Choice {
    Bar,
    Tilde,
}

/// Lowest leaf triple `l < k < v`, or `None` when the tree has fewer than
/// three leaves.
pub fn select_triple(t: &Graph) -> Option<LeafTriple> {
    let leaves = t.leaves().to_vec();
    match leaves.as_slice() {
        [l, k, v, ..] => Some(LeafTriple::new(*l, *k, *v)),
        _ => None,
    }
}

fn check_tree_not_path(t: &Graph) -> Result<()> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.is_path() {
        return Err(Error::AlreadyPath);
    }
    Ok(())
}

pub fn find_junction(t: &Graph, triple: LeafTriple) -> Result<Junction> {
    check_tree_not_path(t)?;
    let LeafTriple { l, k, v } = triple;
    for x in [l, k, v] {
        t.check_vertex(x)?;
        if t.degree(x) != 1 {
            return Err(Error::InvalidTriple(format!("{x} is not a leaf")));
        }
    }
    if l == k || k == v || l == v {
        return Err(Error::InvalidTriple(format!("{l}, {k}, {v} are not distinct")));
    }
    let lk = t.tree_path(l, k)?;
    let mut on_lk = vec![None; t.n()];
    for (j, &x) in lk.iter().enumerate() {
        on_lk[x] = Some(j);
    }
    let vl = t.tree_path(v, l)?;
    let (i, j) = vl
        .iter()
        .enumerate()
        .find_map(|(i, &y)| on_lk[y].map(|j| (i, j)))
        .expect("the v-l path ends at l");
    if i == 0 || j == 0 || j + 1 == lk.len() {
        return Err(Error::Internal(format!(
            "junction of {triple:?} coincides with a chosen leaf"
        )));
    }
    Ok(Junction {
        u: vl[i],
        w: vl[i - 1],
        u_plus: lk[j - 1],
        u_minus: lk[j + 1],
    })
}

/// Everything derived from one leaf triple: junction, the `K` side of the
/// cut, and both rebuilt trees.
#[derive(Clone, Debug)]
pub struct Surgery {
    pub tree: Graph,
    pub triple: LeafTriple,
    pub junction: Junction,
    pub k_set: VertexSet,
    pub bar: Graph,
    pub tilde: Graph,
}

impl Surgery {
    pub fn new(t: &Graph, triple: LeafTriple) -> Result<Self> {
        let junction = find_junction(t, triple)?;
        let k_set = k_component(t, &junction, triple.v)?;
        let (bar, tilde) = build_bar_tilde(t, &junction, triple)?;
        Ok(Surgery {
            tree: t.clone(),
            triple,
            junction,
            k_set,
            bar,
            tilde,
        })
    }

    pub fn classify(&self, a: Vertex, b: Vertex) -> Result<PairClass> {
        classify_crossing(&self.tree, &self.junction, &self.k_set, a, b)
    }

    pub fn graph(&self, choice: Choice) -> &Graph {
        match choice {
            Choice::Bar => &self.bar,
            Choice::Tilde => &self.tilde,
        }
    }

    /// All pairs of `K x (V \ K)`, `K` side first.
    pub fn crossing_pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let outside = self.k_set.complement();
        self.k_set
            .iter()
            .flat_map(move |a| outside.iter().map(move |b| (a, b)).collect::<Vec<_>>())
    }
}

/// The side of the `{w, u}` cut containing `v` (and `w`).
pub fn k_component(t: &Graph, j: &Junction, v: Vertex) -> Result<VertexSet> {
    let side = t.component_after_cut(j.w, j.u, v)?;
    if !side.contains(j.w) || side.contains(j.u) {
        return Err(Error::Internal(format!(
            "cut side of {v} does not separate w = {} from u = {}",
            j.w, j.u
        )));
    }
    Ok(side)
}

/// `(bar, tilde)`: the tree with `{w, u}` replaced by `{w, l}` and by `{w, k}`.
pub fn build_bar_tilde(t: &Graph, j: &Junction, triple: LeafTriple) -> Result<(Graph, Graph)> {
    let bar = t.replace_edge((j.w, j.u), (j.w, triple.l))?;
    let tilde = t.replace_edge((j.w, j.u), (j.w, triple.k))?;
    if !bar.is_tree() || !tilde.is_tree() {
        return Err(Error::Internal("surgery produced a non-tree".into()));
    }
    Ok((bar, tilde))
}

fn classify_crossing(t: &Graph, j: &Junction, k_set: &VertexSet, a: Vertex, b: Vertex) -> Result<PairClass> {
    if !k_set.contains(a) || b >= t.n() || k_set.contains(b) {
        return Err(Error::PairNotCrossing(a, b));
    }
    let path = t.tree_path(a, b)?;
    let uses = |x: Vertex, y: Vertex| {
        path.windows(2)
            .any(|e| (e[0] == x && e[1] == y) || (e[0] == y && e[1] == x))
    };
    match (uses(j.u, j.u_plus), uses(j.u, j.u_minus)) {
        (true, false) => Ok(PairClass::FPlus),
        (false, true) => Ok(PairClass::FMinus),
        (false, false) => Ok(PairClass::FZero),
        (true, true) => Err(Error::Internal(format!(
            "path {a}-{b} uses both edges at the junction"
        ))),
    }
}

/// Class of the crossing pair `(a, b)`, `a` on the `w` side of the cut.
pub fn classify_pair(t: &Graph, j: &Junction, a: Vertex, b: Vertex) -> Result<PairClass> {
    t.check_vertex(a)?;
    let k_set = t.component_after_cut(j.w, j.u, j.w)?;
    classify_crossing(t, j, &k_set, a, b)
}

/// Crossing pairs `(x, y)`, `x` in `K`, whose preimages under `f` are
/// adjacent in H.
pub fn adjacency_pairs_l(h: &Graph, f: &Pseudoordering, k_set: &VertexSet) -> BTreeSet<(Vertex, Vertex)> {
    h.edges()
        .iter()
        .filter_map(|&(x, y)| {
            let (a, b) = (f.image(x), f.image(y));
            match (k_set.contains(a), k_set.contains(b)) {
                (true, false) => Some((a, b)),
                (false, true) => Some((b, a)),
                _ => None,
            }
        })
        .collect()
}

/// Sum of degrees over vertices of degree at least 3.
pub fn alpha(g: &Graph) -> u64 {
    g.degrees().into_iter().filter(|&d| d >= 3).map(|d| d as u64).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransformStep {
    pub before: Graph,
    pub leaf_triple: LeafTriple,
    pub junction: Junction,
    pub n_plus: usize,
    pub n_minus: usize,
    pub choice: Choice,
    pub after: Graph,
    pub sum_before: u64,
    pub sum_after: u64,
    pub alpha_before: u64,
    pub alpha_after: u64,
}

fn sum_on(h: &Graph, t: &Graph, f: &Pseudoordering) -> Result<u64> {
    pseudo_sum(h, t, f, &DistanceMatrix::new(t)?)
}

/// One surgery step. Takes "bar" when `n_plus <= n_minus` and "tilde"
/// otherwise; on a tie "bar" is kept unless it leaves the sum unchanged
/// while "tilde" raises it.
pub fn choose_transform(t: &Graph, h: &Graph, f: &Pseudoordering, triple: LeafTriple) -> Result<TransformStep> {
    if t.n() != h.n() {
        return Err(Error::SizeMismatch(t.n(), h.n()));
    }
    let s = Surgery::new(t, triple)?;
    let l_pairs = adjacency_pairs_l(h, f, &s.k_set);
    let mut n_plus = 0;
    let mut n_minus = 0;
    for &(a, b) in &l_pairs {
        match s.classify(a, b)? {
            PairClass::FPlus => n_plus += 1,
            PairClass::FMinus => n_minus += 1,
            PairClass::FZero => {}
        }
    }
    let sum_before = sum_on(h, t, f)?;
    let sum_bar = sum_on(h, &s.bar, f)?;
    let sum_tilde = sum_on(h, &s.tilde, f)?;
    let choice = match n_plus.cmp(&n_minus) {
        std::cmp::Ordering::Less => Choice::Bar,
        std::cmp::Ordering::Greater => Choice::Tilde,
        std::cmp::Ordering::Equal if sum_bar == sum_before && sum_tilde > sum_before => Choice::Tilde,
        std::cmp::Ordering::Equal => Choice::Bar,
    };
    let sum_after = match choice {
        Choice::Bar => sum_bar,
        Choice::Tilde => sum_tilde,
    };
    if sum_after < sum_before {
        return Err(Error::Internal(format!(
            "surgery lowered the sum from {sum_before} to {sum_after}"
        )));
    }
    let after = s.graph(choice).clone();
    Ok(TransformStep {
        alpha_before: alpha(t),
        alpha_after: alpha(&after),
        before: s.tree,
        leaf_triple: triple,
        junction: s.junction,
        n_plus,
        n_minus,
        choice,
        after,
        sum_before,
        sum_after,
    })
}

/// Record of a run from a connected graph down to a path.
///
/// `tree` is where surgery starts: `initial` itself when it is a tree, else
/// its first spanning tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransformTrace {
    pub initial: Graph,
    pub f: Pseudoordering,
    pub tree: Graph,
    pub steps: Vec<TransformStep>,
    #[serde(rename = "final")]
    pub final_graph: Graph,
    pub initial_sum: u64,
    pub tree_sum: u64,
    pub final_sum: u64,
}

fn check_inputs(g: &Graph, h: &Graph, f: &Pseudoordering) -> Result<()> {
    if g.n() != h.n() {
        return Err(Error::SizeMismatch(g.n(), h.n()));
    }
    crate::pseudoordering::check_permutation(f.as_slice(), g.n())
}

/// Repeats [`choose_transform`] on the lowest leaf triple until the tree is a path.
pub fn pathify(t: &Graph, h: &Graph, f: &Pseudoordering) -> Result<TransformTrace> {
    check_inputs(t, h, f)?;
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let initial_sum = sum_on(h, t, f)?;
    let budget = alpha(t);
    let mut cur = t.clone();
    let mut steps = Vec::new();
    while !cur.is_path() {
        let triple = select_triple(&cur)
            .ok_or_else(|| Error::Internal("non-path tree with fewer than 3 leaves".into()))?;
        let step = choose_transform(&cur, h, f, triple)?;
        if step.alpha_after >= step.alpha_before || steps.len() as u64 >= budget {
            return Err(Error::Internal("alpha did not decrease".into()));
        }
        cur = step.after.clone();
        steps.push(step);
    }
    let final_sum = steps.last().map_or(initial_sum, |s| s.sum_after);
    Ok(TransformTrace {
        initial: t.clone(),
        f: f.clone(),
        tree: t.clone(),
        steps,
        final_graph: cur,
        initial_sum,
        tree_sum: initial_sum,
        final_sum,
    })
}

/// Connected graph to path: first spanning tree, then [`pathify`].
pub fn pathify_general(g: &Graph, h: &Graph, f: &Pseudoordering) -> Result<TransformTrace> {
    check_inputs(g, h, f)?;
    let tree = g.first_spanning_tree()?;
    let initial_sum = sum_on(h, g, f)?;
    let mut trace = pathify(&tree, h, f)?;
    if trace.tree_sum < initial_sum {
        return Err(Error::Internal("spanning tree lowered the sum".into()));
    }
    trace.initial = g.clone();
    trace.initial_sum = initial_sum;
    Ok(trace)
}

impl TransformTrace {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serializes")
    }

    pub fn to_text(&self) -> String {
        let edges = |g: &Graph| {
            g.edges()
                .iter()
                .map(|(a, b)| format!("{a}-{b}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut s = String::new();
        let _ = writeln!(s, "initial: {}", edges(&self.initial));
        let _ = writeln!(s, "tree: {}", edges(&self.tree));
        let _ = writeln!(s, "initial_sum: {}", self.initial_sum);
        let _ = writeln!(s, "tree_sum: {}", self.tree_sum);
        for (i, st) in self.steps.iter().enumerate() {
            let LeafTriple { l, k, v } = st.leaf_triple;
            let Junction { u, w, u_plus, u_minus } = st.junction;
            let choice = match st.choice {
                Choice::Bar => "bar",
                Choice::Tilde => "tilde",
            };
            let _ = writeln!(s, "step {}:", i + 1);
            let _ = writeln!(s, "  before: {}", edges(&st.before));
            let _ = writeln!(
                s,
                "  l={l} k={k} v={v} u={u} w={w} u+={u_plus} u-={u_minus}"
            );
            let _ = writeln!(s, "  n+={} n-={} choice={choice}", st.n_plus, st.n_minus);
            let _ = writeln!(s, "  after: {}", edges(&st.after));
            let _ = writeln!(s, "  sum: {} -> {}", st.sum_before, st.sum_after);
            let _ = writeln!(s, "  alpha: {} -> {}", st.alpha_before, st.alpha_after);
        }
        let _ = writeln!(s, "final: {}", edges(&self.final_graph));
        let _ = writeln!(s, "final_sum: {}", self.final_sum);
        s
    }
}
