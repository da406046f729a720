use std::collections::HashSet;

use hspectrum::format::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use hspectrum::gen::{random_connected, random_tree};
use hspectrum::verify::enumerate_connected_graphs;
use hspectrum::{DistanceMatrix, Graph, Shape};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// All permutations of 0..n by plain recursion.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Brute-force class count: every edge subset, connected ones only, deduped
/// by the smallest adjacency matrix string over all relabelings.
fn brute_force_class_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let perms = permutations(n);
    let mut classes = HashSet::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        let g = Graph::new(n, edges.iter().copied()).unwrap();
        if !g.is_connected() {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut m = vec![vec![false; n]; n];
                for &(a, b) in &edges {
                    m[p[a]][p[b]] = true;
                    m[p[b]][p[a]] = true;
                }
                m
            })
            .min()
            .unwrap();
        classes.insert(canon);
    }
    classes.len()
}

#[test]
fn enumeration_matches_brute_force_oracle() {
    for n in 1..=6 {
        assert_eq!(
            enumerate_connected_graphs(n).unwrap().len(),
            brute_force_class_count(n),
            "n = {n}"
        );
    }
    // A001349; cross-checked against the networkx graph atlas
    assert_eq!(enumerate_connected_graphs(7).unwrap().len(), 853);
}

fn bfs_free_distances(g: &Graph) -> Vec<Vec<u32>> {
    // Floyd-Warshall, independent of the BFS implementation
    let n = g.n();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (a, row) in d.iter_mut().enumerate() {
        row[a] = 0;
    }
    for &(a, b) in g.edges() {
        d[a][b] = 1;
        d[b][a] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    d
}

#[test]
fn distance_matrix_axioms_on_all_small_connected_graphs() {
    for n in 1..=7 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let d = DistanceMatrix::new(&g).unwrap();
            let fw = bfs_free_distances(&g);
            for (a, fw_row) in fw.iter().enumerate() {
                assert_eq!(d.get(a, a), 0);
                for (b, &expected) in fw_row.iter().enumerate() {
                    assert_eq!(d.get(a, b), expected);
                    assert_eq!(d.get(a, b), d.get(b, a));
                    if a != b {
                        assert!(d.get(a, b) >= 1);
                    }
                    assert_eq!(d.get(a, b) == 1, g.has_edge(a, b));
                    for c in 0..n {
                        assert!(d.get(a, c) <= d.get(a, b) + d.get(b, c));
                    }
                }
            }
        }
    }
}

#[test]
fn spanning_trees_never_shorten_distances() {
    for n in 2..=6 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let dg = DistanceMatrix::new(&g).unwrap();
            for t in g.spanning_trees().unwrap() {
                assert!(t.is_tree());
                let dt = DistanceMatrix::new(&t).unwrap();
                for a in 0..n {
                    for b in 0..n {
                        assert!(dg.get(a, b) <= dt.get(a, b));
                    }
                }
            }
        }
    }
}

#[test]
fn articulation_and_shape_facts_on_small_graphs() {
    for n in 2..=6 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let v = g.non_articulation_vertex().unwrap();
            assert!(g.connected_without(v));
            assert!(g.remove_vertex(v).unwrap().is_connected());
            let cut = g.articulation_points();
            for x in 0..n {
                assert_eq!(cut.contains(x), !g.connected_without(x), "{g:?} vertex {x}");
            }
            if n >= 3 && g.classify_shape().unwrap() == Shape::Path {
                assert_eq!(g.leaves().len(), 2);
            }
        }
    }
}

proptest! {
    #[test]
    fn tree_paths_and_cuts(seed in any::<u64>(), n in 2usize..12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_tree(n, &mut rng);
        let d = DistanceMatrix::new(&t).unwrap();
        for a in 0..n {
            for b in 0..n {
                let p = t.tree_path(a, b).unwrap();
                prop_assert_eq!(p[0], a);
                prop_assert_eq!(*p.last().unwrap(), b);
                prop_assert_eq!(p.len() as u32, d.get(a, b) + 1);
                prop_assert!(p.windows(2).all(|e| t.has_edge(e[0], e[1])));
                let distinct: HashSet<_> = p.iter().collect();
                prop_assert_eq!(distinct.len(), p.len());
            }
        }
        for &(w, u) in t.edges() {
            let side = t.component_after_cut(w, u, w).unwrap();
            let other = t.component_after_cut(w, u, u).unwrap();
            prop_assert!(side.contains(w) && !side.contains(u));
            prop_assert_eq!(other, side.complement());
        }
    }

    #[test]
    fn formats_round_trip(seed in any::<u64>(), n in 1usize..14, p in 0.0f64..1.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(n, p, &mut rng);
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g), None).unwrap(), g);
    }
}
