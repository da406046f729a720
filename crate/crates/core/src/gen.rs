//! Seeded random instances: trees, connected graphs, bijections.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;
use crate::pseudoordering::Pseudoordering;

/// Uniform labeled tree on `n >= 1` vertices, decoded from a random Prüfer
/// sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        return Graph::new(n, (1..n).map(|i| (0, i))).expect("valid tree");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&x| degree[x] == 1).expect("a leaf remains");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&x| degree[x] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("valid tree")
}

/// Random tree plus each remaining pair independently with probability `p`.
pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let tree = random_tree(n, rng);
    let mut edges = tree.edges().to_vec();
    for a in 0..n {
        for b in a + 1..n {
            if !tree.has_edge(a, b) && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges).expect("valid graph")
}

pub fn random_pseudoordering<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Pseudoordering {
    let mut map: Vec<usize> = (0..n).collect();
    map.shuffle(rng);
    Pseudoordering::from_vec_unchecked(map)
}
