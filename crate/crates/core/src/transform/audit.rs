//! Post-hoc checks of the distance identities behind one surgery step, and
//! of the per-step invariants of a recorded trace.
//!
//! Distances here always come from a fresh BFS on the graph in question, so
//! a check never relies on the closed-form growth it is verifying.

use std::fmt;

use crate::distance::DistanceMatrix;
use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::pseudoordering::Pseudoordering;

use super::{adjacency_pairs_l, alpha, Choice, PairClass, Surgery, TransformStep, TransformTrace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: &'static str,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

struct Log(Vec<Violation>);

impl Log {
    fn check(&mut self, ok: bool, check: &'static str, detail: impl FnOnce() -> String) {
        if !ok {
            self.0.push(Violation {
                check,
                detail: detail(),
            });
        }
    }
}

fn uses_edge(path: &[Vertex], a: Vertex, b: Vertex) -> bool {
    path.windows(2)
        .any(|e| (e[0] == a && e[1] == b) || (e[0] == b && e[1] == a))
}

/// First vertex of the tree path `from -> to` lying on `line`.
fn first_on(t: &Graph, from: Vertex, to: Vertex, line: &[Vertex]) -> Result<Vertex> {
    Ok(t.tree_path(from, to)?
        .into_iter()
        .find(|x| line.contains(x))
        .unwrap_or(to))
}

/// Checks the cut structure, the pair partition, distance preservation on
/// each side, the exact growth of every pair class, and the paired
/// `F+`/`F-` identity in both rebuilt trees.
pub fn audit_surgery(s: &Surgery) -> Result<Vec<Violation>> {
    let mut log = Log(Vec::new());
    let t = &s.tree;
    let n = t.n();
    let super::LeafTriple { l, k, v } = s.triple;
    let super::Junction { u, w, .. } = s.junction;
    let d = DistanceMatrix::new(t)?;
    let db = DistanceMatrix::new(&s.bar)?;
    let dt = DistanceMatrix::new(&s.tilde)?;
    let lk = t.tree_path(l, k)?;

    log.check(u != l && u != k, "junction", || format!("u = {u} is a chosen leaf"));
    log.check(t.degree(u) >= 3, "junction", || format!("deg u = {}", t.degree(u)));
    log.check(
        s.k_set.contains(v) && s.k_set.contains(w),
        "cut side",
        || "K misses v or w".into(),
    );
    log.check(
        !s.k_set.contains(u) && !s.k_set.contains(l) && !s.k_set.contains(k),
        "cut side",
        || "K holds u, l or k".into(),
    );
    log.check(s.bar.is_tree() && s.tilde.is_tree(), "rebuilt trees", || {
        "bar or tilde is not a tree".into()
    });

    let grow_l = d.get(l, u);
    let grow_k = d.get(k, u);
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let path = t.tree_path(a, b)?;
            let same_side = s.k_set.contains(a) == s.k_set.contains(b);
            log.check(uses_edge(&path, w, u) != same_side, "cut edge usage", || {
                format!("pair ({a}, {b}), same side = {same_side}")
            });
            if same_side {
                log.check(
                    db.get(a, b) == d.get(a, b) && dt.get(a, b) == d.get(a, b),
                    "same-side distances",
                    || format!("pair ({a}, {b})"),
                );
            }
        }
    }
    for (x, y) in s.crossing_pairs() {
        let path = t.tree_path(x, y)?;
        let up = uses_edge(&path, u, s.junction.u_plus);
        let um = uses_edge(&path, u, s.junction.u_minus);
        log.check(!(up && um), "pair partition", || format!("({x}, {y}) in F+ and F-"));
        let class = s.classify(x, y)?;
        let expected = match (up, um) {
            (true, _) => PairClass::FPlus,
            (false, true) => PairClass::FMinus,
            (false, false) => PairClass::FZero,
        };
        log.check(class == expected, "pair partition", || {
            format!("({x}, {y}) classified {class:?}, path says {expected:?}")
        });
        let (g0, gb, gt) = (d.get(x, y), db.get(x, y), dt.get(x, y));
        match class {
            PairClass::FZero => {
                log.check(gb == g0 + grow_l && gt == g0 + grow_k, "F0 growth", || {
                    format!("({x}, {y}): {g0} -> bar {gb}, tilde {gt}")
                });
            }
            PairClass::FMinus => {
                log.check(gb == g0 + grow_l, "F- growth in bar", || {
                    format!("({x}, {y}): {g0} -> {gb}, expected +{grow_l}")
                });
                minus.push((x, y));
            }
            PairClass::FPlus => {
                log.check(gt == g0 + grow_k, "F+ growth in tilde", || {
                    format!("({x}, {y}): {g0} -> {gt}, expected +{grow_k}")
                });
                plus.push((x, y));
            }
        }
    }
    for &(x, y) in &plus {
        let z = first_on(t, y, x, &lk)?;
        for &(xb, yb) in &minus {
            let zb = first_on(t, yb, xb, &lk)?;
            let base = d.get(x, y) + d.get(xb, yb);
            let bar = db.get(x, y) + db.get(xb, yb);
            let tilde = dt.get(x, y) + dt.get(xb, yb);
            log.check(bar == base + 2 * d.get(l, z), "paired identity (bar)", || {
                format!("({x}, {y}) & ({xb}, {yb}): {base} -> {bar}, z = {z}")
            });
            log.check((bar == base) == (y == l), "paired equality (bar)", || {
                format!("({x}, {y}) & ({xb}, {yb}): equal = {}, y = {y}", bar == base)
            });
            log.check(tilde == base + 2 * d.get(k, zb), "paired identity (tilde)", || {
                format!("({x}, {y}) & ({xb}, {yb}): {base} -> {tilde}, z = {zb}")
            });
            log.check((tilde == base) == (yb == k), "paired equality (tilde)", || {
                format!("({x}, {y}) & ({xb}, {yb}): equal = {}, y = {yb}", tilde == base)
            });
        }
    }
    Ok(log.0)
}

/// Whether every crossing H-edge lands in `K x {k, l}`: the only situation
/// in which a step may leave the sum unchanged.
pub fn l_within_leaf_pairs(s: &Surgery, h: &Graph, f: &Pseudoordering) -> bool {
    adjacency_pairs_l(h, f, &s.k_set)
        .iter()
        .all(|&(_, y)| y == s.triple.k || y == s.triple.l)
}

/// Re-derives one recorded step from its `before` tree and checks it.
pub fn audit_step(step: &TransformStep, h: &Graph, f: &Pseudoordering) -> Result<Vec<Violation>> {
    let mut log = Log(Vec::new());
    let s = Surgery::new(&step.before, step.leaf_triple)?;
    log.check(s.junction == step.junction, "recorded junction", || {
        format!("{:?} vs {:?}", s.junction, step.junction)
    });
    log.check(step.after == *s.graph(step.choice), "recorded tree", || {
        "after is neither recomputed option".into()
    });
    log.check(step.after.is_tree(), "after is a tree", String::new);
    let sum = |g: &Graph| -> Result<u64> {
        crate::pseudoordering::pseudo_sum(h, g, f, &DistanceMatrix::new(g)?)
    };
    let (sb, sa) = (sum(&step.before)?, sum(&step.after)?);
    log.check(
        sb == step.sum_before && sa == step.sum_after,
        "recorded sums",
        || format!("recomputed {sb} -> {sa}"),
    );
    log.check(sa >= sb, "monotone sum", || format!("{sb} -> {sa}"));
    let (ab, aa) = (alpha(&step.before), alpha(&step.after));
    log.check(
        ab == step.alpha_before && aa == step.alpha_after,
        "recorded alpha",
        || format!("recomputed {ab} -> {aa}"),
    );
    log.check(aa < ab, "alpha decreases", || format!("{ab} -> {aa}"));
    let preferred = if step.n_plus <= step.n_minus {
        Choice::Bar
    } else {
        Choice::Tilde
    };
    log.check(
        step.choice == preferred || step.n_plus == step.n_minus,
        "choice rule",
        || format!("n+ = {}, n- = {}, took {:?}", step.n_plus, step.n_minus, step.choice),
    );
    if !l_within_leaf_pairs(&s, h, f) {
        log.check(sa > sb, "strict gain", || format!("{sb} -> {sa} with L outside K x {{k, l}}"));
    }
    Ok(log.0)
}

/// Every step plus the chain-level invariants of a trace.
pub fn audit_trace(trace: &TransformTrace, h: &Graph) -> Result<Vec<Violation>> {
    let mut log = Log(Vec::new());
    let mut prev = &trace.tree;
    for step in &trace.steps {
        log.check(step.before == *prev, "contiguous chain", || {
            "step does not start where the last one ended".into()
        });
        log.0.extend(audit_step(step, h, &trace.f)?);
        prev = &step.after;
    }
    log.check(*prev == trace.final_graph, "contiguous chain", || "final graph mismatch".into());
    log.check(trace.final_graph.is_path(), "final is a path", String::new);
    log.check(
        trace.steps.len() as u64 <= alpha(&trace.tree),
        "step budget",
        || format!("{} steps, alpha {}", trace.steps.len(), alpha(&trace.tree)),
    );
    log.check(
        trace.initial_sum <= trace.tree_sum && trace.tree_sum <= trace.final_sum,
        "monotone sum",
        || format!("{} -> {} -> {}", trace.initial_sum, trace.tree_sum, trace.final_sum),
    );
    Ok(log.0)
}
