//! Exact branch-and-bound for the extremal sums.
//!
//! H-vertices are placed in descending H-degree order (ties by id). After
//! each placement the completed H-edges are summed; every H-edge still open
//! contributes at most diam(G) and at least 1, which gives the two
//! admissible bounds. A branch is cut as soon as its bound cannot strictly
//! improve on the incumbent.

use super::spectrum::{Extremum, Sense};
use super::Pseudoordering;
use crate::distance::DistanceMatrix;
use crate::graph::{Graph, Vertex};

struct Search<'a> {
    dg: &'a DistanceMatrix,
    sense: Sense,
    order: Vec<Vertex>,
    /// For the H-vertex at position p: H-neighbors placed before it.
    back: Vec<Vec<Vertex>>,
    per_edge_cap: u64,
    map: Vec<Vertex>,
    used: Vec<bool>,
    best: Option<(u64, Vec<Vertex>)>,
    /// Best value any bijection could reach; hitting it ends the search.
    ideal: u64,
}

impl Search<'_> {
    fn beats(&self, bound: u64) -> bool {
        match (&self.best, self.sense) {
            (None, _) => true,
            (Some((v, _)), Sense::Max) => bound > *v,
            (Some((v, _)), Sense::Min) => bound < *v,
        }
    }

    fn done(&self) -> bool {
        matches!(&self.best, Some((v, _)) if *v == self.ideal)
    }

    fn descend(&mut self, pos: usize, partial: u64, remaining: u64) {
        if pos == self.order.len() {
            if self.beats(partial) {
                self.best = Some((partial, self.map.clone()));
            }
            return;
        }
        let x = self.order[pos];
        let closes = self.back[pos].len() as u64;
        let remaining = remaining - closes;
        for gv in 0..self.map.len() {
            if self.used[gv] {
                continue;
            }
            let add: u64 = self.back[pos]
                .iter()
                .map(|&y| self.dg.get(self.map[y], gv) as u64)
                .sum();
            let partial = partial + add;
            let bound = match self.sense {
                Sense::Max => partial + remaining * self.per_edge_cap,
                Sense::Min => partial + remaining,
            };
            if !self.beats(bound) {
                continue;
            }
            self.map[x] = gv;
            self.used[gv] = true;
            self.descend(pos + 1, partial, remaining);
            self.used[gv] = false;
            if self.done() {
                return;
            }
        }
    }
}

pub(super) fn solve(h: &Graph, dg: &DistanceMatrix, sense: Sense) -> Extremum {
    let n = h.n();
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    let mut position = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    let back = order
        .iter()
        .map(|&v| {
            h.neighbors(v)
                .iter()
                .copied()
                .filter(|&y| position[y] < position[v])
                .collect()
        })
        .collect();
    let m = h.edge_count() as u64;
    let diam = dg.diameter() as u64;
    let ideal = match sense {
        Sense::Max => m * diam,
        Sense::Min => m,
    };
    let mut search = Search {
        dg,
        sense,
        order,
        back,
        per_edge_cap: diam,
        map: vec![0; n],
        used: vec![false; n],
        best: None,
        ideal,
    };
    search.descend(0, 0, m);
    let (value, map) = search.best.expect("at least one bijection exists");
    Extremum {
        value,
        witness: Pseudoordering::from_vec_unchecked(map),
    }
}
