use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// All-pairs hop distances of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// BFS from every vertex. Disconnected graphs have no finite metric and
    /// are rejected.
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        let mut d = vec![u32::MAX; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(a) = queue.pop_front() {
                for &b in g.neighbors(a) {
                    if row[b] == u32::MAX {
                        row[b] = row[a] + 1;
                        queue.push_back(b);
                    }
                }
            }
            if row.contains(&u32::MAX) {
                return Err(Error::Disconnected);
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: Vertex, b: Vertex) -> u32 {
        self.d[a * self.n + b]
    }

    pub fn row(&self, a: Vertex) -> &[u32] {
        &self.d[a * self.n..(a + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}
