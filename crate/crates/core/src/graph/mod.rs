//! Simple undirected graphs on the vertex set `1..=n`.
//!
//! Adjacency is stored as one bitmask per vertex (bit `v - 1` stands for vertex
//! `v`), which keeps the exhaustive searches in [`stats`] cheap. Every public
//! interface speaks 1-based labels.

mod enumerate;
mod io;
pub(crate) mod stats;

use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

pub use enumerate::{
    canonical_form, enumerate_connected_graphs, enumerate_graphs, CanonicalForm, MAX_ENUMERATION_N,
};
pub use stats::{
    cliques_pairwise_intersect_at_most_one, connected_components, find_claw, graph_stats,
    induced_matching_number, is_chordal, is_claw_free, is_weakly_chordal,
    longest_induced_path_length, maximal_cliques, GraphStats,
};

/// Largest vertex count a [`Graph`] may have.
pub const MAX_VERTICES: usize = 16;

/// A subset of `{1..n}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    pub fn from_vertices(vertices: &[usize]) -> Self {
        let mut bits = 0u32;
        for &v in vertices {
            assert!((1..=32).contains(&v), "vertex {v} out of range");
            bits |= 1 << (v - 1);
        }
        VertexSet(bits)
    }

    /// The interval `{a, a+1, ..., b}`; empty when `a > b`.
    pub fn interval(a: usize, b: usize) -> Self {
        if a > b || a == 0 {
            return VertexSet(0);
        }
        let len = b - a + 1;
        let mask = if len >= 32 {
            u32::MAX
        } else {
            (1u32 << len) - 1
        };
        VertexSet(mask << (a - 1))
    }

    /// All of `{1..n}`.
    pub fn full(n: usize) -> Self {
        VertexSet::interval(1, n)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v >= 1 && v <= 32 && self.0 & (1 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << (v - 1));
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1 << (v - 1)))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << (v - 1)))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    /// True iff the set is `{a..b}` for some `a <= b`.
    pub fn is_interval(self) -> bool {
        if self.0 == 0 {
            return false;
        }
        let shifted = self.0 >> self.0.trailing_zeros();
        shifted & shifted.wrapping_add(1) == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for VertexSet {
    /// Lexicographic order on the sorted member lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// A simple undirected graph on `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n, MAX_VERTICES));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for i in 1..=n {
            g.adj[i - 1] = VertexSet::full(n).without(i).bits();
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        if n >= 3 {
            edges.push((1, n));
        }
        Graph::from_edges(n, &edges)
    }

    /// Star with centre 1 and `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (2..=leaves + 1).map(|j| (1, j)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::SelfLoop(i));
        }
        self.adj[i - 1] |= 1 << (j - 1);
        self.adj[j - 1] |= 1 << (i - 1);
        Ok(())
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) {
        if i >= 1 && j >= 1 && i <= self.n && j <= self.n {
            self.adj[i - 1] &= !(1 << (j - 1));
            self.adj[j - 1] &= !(1 << (i - 1));
        }
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && i <= self.n && j <= self.n && self.adj[i - 1] & (1 << (j - 1)) != 0
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v - 1])
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v - 1]).with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in VertexSet(self.adj[i - 1] >> i << i).iter() {
                out.push((i, j));
            }
        }
        out
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: VertexSet) -> usize {
        set.iter()
            .map(|v| (self.adj[v - 1] & set.0).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| set.without(v).is_subset(VertexSet(self.adj[v - 1])))
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced on `set`, relabelled `1..=|set|` in increasing order.
    /// The returned vector maps new labels (index + 1) to old ones.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<(Graph, Vec<usize>)> {
        let old: Vec<usize> = set.iter().filter(|&v| v <= self.n).collect();
        let mut g = Graph::new(old.len())?;
        for (a, &u) in old.iter().enumerate() {
            for (b, &v) in old.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a + 1, b + 1)?;
                }
            }
        }
        Ok((g, old))
    }

    /// The graph obtained by giving vertex `v` the label `new_label[v - 1]`.
    pub fn permuted(&self, new_label: &[usize]) -> Graph {
        assert_eq!(new_label.len(), self.n);
        let mut adj = vec![0u32; self.n];
        for (i, j) in self.edges() {
            let (a, b) = (new_label[i - 1], new_label[j - 1]);
            adj[a - 1] |= 1 << (b - 1);
            adj[b - 1] |= 1 << (a - 1);
        }
        Graph { n: self.n, adj }
    }

    /// Adds every edge inside `set`.
    pub fn complete_on(&mut self, set: VertexSet) {
        for v in set.iter() {
            self.adj[v - 1] |= set.without(v).bits();
        }
    }

    pub(crate) fn adj_bits(&self, v0: usize) -> u32 {
        self.adj[v0]
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={})", self.n, self.edge_string())
    }
}

impl Graph {
    /// Edge list as `1-2 2-3 ...`.
    pub fn edge_string(&self) -> String {
        self.edges()
            .iter()
            .map(|(i, j)| format!("{i}-{j}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}
