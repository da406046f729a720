//! Finite simple undirected graphs over the vertex range `0..n`, and the
//! structural subroutines the rest of the crate is built on.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored normalized as `(a, b)` with `a < b`, sorted and without
/// duplicates, so two graphs compare equal iff they have the same vertex
/// count and the same labeled edge set.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    #[serde(skip)]
    adj: Vec<Vec<Vertex>>,
}

/// Shape of a connected graph as far as the surgery code cares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Path,
    Cycle,
    Other,
}

impl Graph {
    /// Builds a graph, normalizing edge orientation and dropping duplicates.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(Error::TooFewVertices {
                what: "graph",
                min: 1,
                got: 0,
            });
        }
        let mut norm = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        norm.dedup();
        Ok(Self::from_normalized(n, norm))
    }

    fn from_normalized(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    /// The path `0 - 1 - ... - (n-1)`, i.e. P_{n-1}.
    pub fn path(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewVertices {
                what: "path",
                min: 2,
                got: n,
            });
        }
        Self::new(n, (1..n).map(|i| (i - 1, i)))
    }

    /// The cycle C_n: the path plus the closing edge `{n-1, 0}`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices {
                what: "cycle",
                min: 3,
                got: n,
            });
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Star K_{1,leaves} with center 0.
    pub fn star(leaves: usize) -> Result<Self> {
        Self::new(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new(
            n,
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted, normalized edge list.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Degree-1 vertices.
    pub fn leaves(&self) -> VertexSet {
        VertexSet::from_iter(self.n, (0..self.n).filter(|&v| self.degree(v) == 1))
    }

    /// Vertices reachable from `seed`, optionally ignoring one edge and one vertex.
    fn reach(&self, seed: Vertex, skip_edge: Option<(Vertex, Vertex)>, skip_vertex: Option<Vertex>) -> VertexSet {
        let mut seen = VertexSet::new(self.n);
        if Some(seed) == skip_vertex {
            return seen;
        }
        seen.insert(seed);
        let mut queue = VecDeque::from([seed]);
        while let Some(a) = queue.pop_front() {
            for &b in &self.adj[a] {
                if Some(b) == skip_vertex || seen.contains(b) {
                    continue;
                }
                if let Some((x, y)) = skip_edge {
                    if (a == x && b == y) || (a == y && b == x) {
                        continue;
                    }
                }
                seen.insert(b);
                queue.push_back(b);
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, None, None).len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Path, cycle, or anything else. A single vertex counts as the path P_0.
    pub fn classify_shape(&self) -> Result<Shape> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.n <= 2 {
            return Ok(Shape::Path);
        }
        let deg = self.degrees();
        if deg.iter().all(|&d| d == 2) {
            return Ok(Shape::Cycle);
        }
        let ones = deg.iter().filter(|&&d| d == 1).count();
        let twos = deg.iter().filter(|&&d| d == 2).count();
        if ones == 2 && twos == self.n - 2 {
            Ok(Shape::Path)
        } else {
            Ok(Shape::Other)
        }
    }

    pub fn is_path(&self) -> bool {
        matches!(self.classify_shape(), Ok(Shape::Path))
    }

    /// The unique simple path from `a` to `b` in a tree, endpoints included.
    pub fn tree_path(&self, a: Vertex, b: Vertex) -> Result<Vec<Vertex>> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if !self.is_tree() {
            return Err(Error::NotATree);
        }
        let mut parent = vec![usize::MAX; self.n];
        parent[b] = b;
        let mut queue = VecDeque::from([b]);
        while let Some(x) = queue.pop_front() {
            if x == a {
                break;
            }
            for &y in &self.adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut out = vec![a];
        let mut cur = a;
        while cur != b {
            cur = parent[cur];
            out.push(cur);
        }
        Ok(out)
    }

    /// Component of `seed` once the edge `{w, u}` is deleted.
    pub fn component_after_cut(&self, w: Vertex, u: Vertex, seed: Vertex) -> Result<VertexSet> {
        self.check_vertex(seed)?;
        if !self.has_edge(w, u) {
            return Err(Error::NotAnEdge(w, u));
        }
        Ok(self.reach(seed, Some((w, u)), None))
    }

    /// True when deleting `v` leaves a connected graph (or nothing at all).
    pub fn connected_without(&self, v: Vertex) -> bool {
        if self.n <= 1 {
            return true;
        }
        let start = if v == 0 { 1 } else { 0 };
        self.reach(start, None, Some(v)).len() == self.n - 1
    }

    /// Cut vertices, by the lowpoint method.
    pub fn articulation_points(&self) -> VertexSet {
        let n = self.n;
        let mut order = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut out = VertexSet::new(n);
        let mut counter = 0;
        for root in 0..n {
            if order[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, next neighbor index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            order[root] = counter;
            low[root] = counter;
            counter += 1;
            let mut root_children = 0;
            while let Some(top) = stack.last_mut() {
                let (v, parent) = (top.0, top.1);
                if top.2 < self.adj[v].len() {
                    let w = self.adj[v][top.2];
                    top.2 += 1;
                    if order[w] == usize::MAX {
                        order[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(order[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= order[parent] {
                            out.insert(parent);
                        }
                    }
                }
            }
            if root_children > 1 {
                out.insert(root);
            }
        }
        out
    }

    /// Smallest vertex whose removal keeps the graph connected.
    pub fn non_articulation_vertex(&self) -> Result<Vertex> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let cut = self.articulation_points();
        (0..self.n)
            .find(|&v| !cut.contains(v))
            .ok_or_else(|| Error::Internal("every vertex is a cut vertex".into()))
    }

    /// Every spanning tree, by enumerating (n-1)-subsets of the sorted edge
    /// list in lexicographic order. Exponential; meant for small graphs.
    pub fn spanning_trees(&self) -> Result<Vec<Graph>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let k = self.n - 1;
        let m = self.edges.len();
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mut uf = UnionFind::new(self.n);
            if idx.iter().all(|&i| uf.union(self.edges[i].0, self.edges[i].1)) {
                let edges = idx.iter().map(|&i| self.edges[i]).collect();
                out.push(Graph::from_normalized(self.n, edges));
            }
            // advance to the next k-combination of 0..m
            let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + m - k) else {
                break;
            };
            idx[pos] += 1;
            for j in pos + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
        Ok(out)
    }

    /// Lexicographically first spanning tree: greedy over the sorted edge
    /// list, which for a graphic matroid picks the lex-smallest basis.
    pub fn first_spanning_tree(&self) -> Result<Graph> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut uf = UnionFind::new(self.n);
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| uf.union(a, b))
            .collect();
        Ok(Graph::from_normalized(self.n, edges))
    }

    /// Relabels vertices: vertex `x` of `self` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        crate::pseudoordering::check_permutation(perm, self.n)?;
        Graph::new(self.n, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
    }

    /// Copy with `remove` deleted and `add` inserted.
    pub fn replace_edge(&self, remove: (Vertex, Vertex), add: (Vertex, Vertex)) -> Result<Graph> {
        if !self.has_edge(remove.0, remove.1) {
            return Err(Error::NotAnEdge(remove.0, remove.1));
        }
        let r = (remove.0.min(remove.1), remove.0.max(remove.1));
        Graph::new(
            self.n,
            self.edges
                .iter()
                .copied()
                .filter(|&e| e != r)
                .chain(std::iter::once(add)),
        )
    }

    /// Graph induced on all vertices except `v`, relabeled to stay contiguous.
    pub fn remove_vertex(&self, v: Vertex) -> Result<Graph> {
        self.check_vertex(v)?;
        let shift = |x: Vertex| if x > v { x - 1 } else { x };
        Graph::new(
            self.n - 1,
            self.edges
                .iter()
                .filter(|&&(a, b)| a != v && b != v)
                .map(|&(a, b)| (shift(a), shift(b))),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Membership flags over `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: Vec<bool>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            members: vec![false; n],
        }
    }

    pub fn from_iter<I: IntoIterator<Item = Vertex>>(n: usize, items: I) -> Self {
        let mut s = Self::new(n);
        for v in items {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.members.len()
    }

    pub fn insert(&mut self, v: Vertex) {
        self.members[v] = true;
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.get(v).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&b| b)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            members: self.members.iter().map(|b| !b).collect(),
        }
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
