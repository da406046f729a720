//! Pseudoorderings: bijections `f: V(H) -> V(G)` and their sums
//! `s_H(f, G) = sum over {x, y} in E(H) of dist_G(f(x), f(y))`.

mod bnb;
mod spectrum;

use serde::Serialize;

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub use spectrum::{
    classic_numbers, contains_subgraph, extremal_number, extremal_number_with,
    hamiltonian_numbers, isomorphic_via_h, spectrum, spectrum_with, traceable_numbers,
    ClassicNumbers, Extremum, ExtremalQuery, Method, SearchConfig, Sense, SpectrumReport,
};

/// A bijection from the vertices of H onto the vertices of G, stored as the
/// image list: `map[x] = f(x)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Pseudoordering {
    map: Vec<Vertex>,
}

pub(crate) fn check_permutation(perm: &[Vertex], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::NotBijection(n));
    }
    let mut seen = vec![false; n];
    for &x in perm {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return Err(Error::NotBijection(n));
        }
    }
    Ok(())
}

impl Pseudoordering {
    pub fn new(map: Vec<Vertex>) -> Result<Self> {
        check_permutation(&map, map.len())?;
        Ok(Pseudoordering { map })
    }

    pub(crate) fn from_vec_unchecked(map: Vec<Vertex>) -> Self {
        Pseudoordering { map }
    }

    pub fn identity(n: usize) -> Self {
        Pseudoordering {
            map: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// f(x)
    pub fn image(&self, x: Vertex) -> Vertex {
        self.map[x]
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.map
    }

    /// The inverse permutation, `inv[f(x)] = x`.
    pub fn inverse(&self) -> Vec<Vertex> {
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        inv
    }
}

/// Sum of G-distances over the images of H's edges. Inner loop of every search.
#[inline]
pub(crate) fn edge_sum(h_edges: &[(Vertex, Vertex)], map: &[Vertex], dg: &DistanceMatrix) -> u64 {
    h_edges
        .iter()
        .map(|&(x, y)| dg.get(map[x], map[y]) as u64)
        .sum()
}

/// `s_H(f, G)`. `dg` must be the distance matrix of `g`.
pub fn pseudo_sum(h: &Graph, g: &Graph, f: &Pseudoordering, dg: &DistanceMatrix) -> Result<u64> {
    if h.n() != g.n() {
        return Err(Error::SizeMismatch(h.n(), g.n()));
    }
    if dg.n() != g.n() {
        return Err(Error::SizeMismatch(dg.n(), g.n()));
    }
    check_permutation(&f.map, g.n())?;
    Ok(edge_sum(h.edges(), &f.map, dg))
}

/// Closed ordering sum: consecutive distances plus the wrap-around term.
pub fn cyclic_sum(g: &Graph, order: &[Vertex]) -> Result<u64> {
    let dg = DistanceMatrix::new(g)?;
    check_permutation(order, g.n())?;
    let n = order.len();
    Ok((0..n)
        .map(|i| dg.get(order[i], order[(i + 1) % n]) as u64)
        .sum())
}

/// Open ordering sum: consecutive distances without the wrap-around term.
pub fn trail_sum(g: &Graph, order: &[Vertex]) -> Result<u64> {
    let dg = DistanceMatrix::new(g)?;
    check_permutation(order, g.n())?;
    Ok(order
        .windows(2)
        .map(|w| dg.get(w[0], w[1]) as u64)
        .sum())
}

/// Advances `p` to the next permutation in lexicographic order. Returns
/// false (leaving `p` untouched) when `p` is already the last one.
pub(crate) fn next_permutation(p: &mut [Vertex]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bijection_checks() {
        assert!(Pseudoordering::new(vec![1, 0, 2]).is_ok());
        assert_eq!(Pseudoordering::new(vec![1, 1, 2]), Err(Error::NotBijection(3)));
        assert_eq!(Pseudoordering::new(vec![0, 3, 1]), Err(Error::NotBijection(3)));
        assert_eq!(Pseudoordering::new(vec![2, 0, 1]).unwrap().inverse(), vec![1, 2, 0]);
    }

    #[test]
    fn sums_on_small_graphs() {
        let p3 = Graph::path(4).unwrap();
        let dp = DistanceMatrix::new(&p3).unwrap();
        let id = Pseudoordering::identity(4);
        assert_eq!(pseudo_sum(&p3, &p3, &id, &dp), Ok(3));
        let c4 = Graph::cycle(4).unwrap();
        let dc = DistanceMatrix::new(&c4).unwrap();
        assert_eq!(pseudo_sum(&c4, &c4, &id, &dc), Ok(4));
        let star = Graph::star(3).unwrap();
        let f = Pseudoordering::new(vec![1, 0, 2, 3]).unwrap();
        assert_eq!(pseudo_sum(&star, &p3, &f, &dp), Ok(4));
    }

    #[test]
    fn sum_errors() {
        let p3 = Graph::path(4).unwrap();
        let dp = DistanceMatrix::new(&p3).unwrap();
        let small = Graph::path(3).unwrap();
        assert_eq!(
            pseudo_sum(&small, &p3, &Pseudoordering::identity(4), &dp),
            Err(Error::SizeMismatch(3, 4))
        );
        let bad = Pseudoordering::from_vec_unchecked(vec![0, 0, 1, 2]);
        assert_eq!(pseudo_sum(&p3, &p3, &bad, &dp), Err(Error::NotBijection(4)));
    }

    #[test]
    fn ordering_sums() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(cyclic_sum(&c4, &[0, 1, 2, 3]), Ok(4));
        assert_eq!(trail_sum(&c4, &[0, 1, 2, 3]), Ok(3));
        assert_eq!(cyclic_sum(&c4, &[0, 2, 1, 3]), Ok(6));
        assert_eq!(trail_sum(&Graph::path(3).unwrap(), &[1, 0, 2]), Ok(3));
        assert_eq!(trail_sum(&c4, &[0, 1, 2]), Err(Error::NotBijection(4)));
    }

    #[test]
    fn lexicographic_permutations() {
        let mut p = vec![0, 1, 2];
        let mut seen = vec![p.clone()];
        while next_permutation(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[1], vec![0, 2, 1]);
        assert_eq!(seen[5], vec![2, 1, 0]);
        let mut sorted = seen.clone();
        sorted.sort();
        assert_eq!(sorted, seen);
    }
}
