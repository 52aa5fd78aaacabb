//! Combinatorial statistics of small graphs.
//!
//! Induced paths, induced matchings and long induced cycles are found by
//! exhaustive search; every routine here is exponential in `n`, which is fine
//! for the `n <= 16` graphs this crate handles.

use super::{Graph, VertexSet};
use crate::{Error, Result};

/// Graph invariants that the regularity bounds are stated in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphStats {
    /// Longest induced path length of each connected component, in component order.
    pub ell: Vec<usize>,
    /// Number of maximal cliques.
    pub r: usize,
    pub chordal: bool,
    pub claw_free: bool,
    pub tree: bool,
    pub connected: bool,
}

impl GraphStats {
    pub fn ell_sum(&self) -> usize {
        self.ell.iter().sum()
    }
}

pub fn graph_stats(g: &Graph) -> GraphStats {
    let comps = connected_components(g);
    let ell = comps
        .iter()
        .map(|&c| {
            let (sub, _) = g.induced_subgraph(c).expect("component of a valid graph");
            longest_induced_path_length(&sub).expect("components are connected")
        })
        .collect();
    GraphStats {
        ell,
        r: maximal_cliques(g).len(),
        chordal: is_chordal(g),
        claw_free: is_claw_free(g),
        tree: g.is_tree(),
        connected: comps.len() == 1,
    }
}

/// Vertices reachable from `start` inside `allowed`.
fn reach(g: &Graph, start: usize, allowed: u32) -> u32 {
    let mut seen = 1u32 << (start - 1);
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = g.adj_bits(v) & allowed & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen
}

/// Connected components of the subgraph induced on `set`, sorted by minimum.
pub(crate) fn components_within(g: &Graph, set: VertexSet) -> Vec<VertexSet> {
    let mut rest = set.bits();
    let mut out = Vec::new();
    while rest != 0 {
        let v = rest.trailing_zeros() as usize + 1;
        let comp = reach(g, v, set.bits());
        out.push(VertexSet::from_bits(comp));
        rest &= !comp;
    }
    out
}

pub(crate) fn is_connected_within(g: &Graph, set: VertexSet) -> bool {
    match set.min() {
        None => true,
        Some(v) => reach(g, v, set.bits()) == set.bits(),
    }
}

/// Partition of `{1..n}` into connected components, sorted by minimum element.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    components_within(g, g.vertices())
}

impl Graph {
    pub fn is_connected(&self) -> bool {
        is_connected_within(self, self.vertices())
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() == self.n() - 1
    }

    /// True iff the graph is a path `P_n` under some labeling. `P_1` counts.
    pub fn is_path_graph(&self) -> bool {
        self.is_tree() && (1..=self.n()).all(|v| self.degree(v) <= 2)
    }

    /// True iff `(v_0, ..., v_k)` are distinct and exactly the consecutive pairs are adjacent.
    pub fn is_induced_path(&self, seq: &[usize]) -> bool {
        let set: VertexSet = seq.iter().copied().collect();
        if set.len() != seq.len() {
            return false;
        }
        for (a, &u) in seq.iter().enumerate() {
            for (b, &v) in seq.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) != (b == a + 1) {
                    return false;
                }
            }
        }
        true
    }
}

/// Chordality through a maximum cardinality search: the graph is chordal iff,
/// in MCS visiting order, the earlier-visited neighbours of every vertex form a clique.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::EMPTY;
    for _ in 0..n {
        let v = (1..=n)
            .filter(|&v| !visited.contains(v))
            .max_by_key(|&v| (weight[v - 1], std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        let earlier = g.neighbors(v).intersection(visited);
        if !g.is_clique(earlier) {
            return false;
        }
        visited.insert(v);
        for u in g.neighbors(v).difference(visited).iter() {
            weight[u - 1] += 1;
        }
    }
    true
}

/// Finds an induced `K_{1,3}` as `(centre, [leaves])`.
pub fn find_claw(g: &Graph) -> Option<(usize, [usize; 3])> {
    for c in 1..=g.n() {
        let nb = g.neighbors(c).to_vec();
        for (a, &u) in nb.iter().enumerate() {
            for (b, &v) in nb.iter().enumerate().skip(a + 1) {
                if g.has_edge(u, v) {
                    continue;
                }
                for &w in &nb[b + 1..] {
                    if !g.has_edge(u, w) && !g.has_edge(v, w) {
                        return Some((c, [u, v, w]));
                    }
                }
            }
        }
    }
    None
}

pub fn is_claw_free(g: &Graph) -> bool {
    find_claw(g).is_none()
}

/// Bron–Kerbosch with pivoting. Each clique is a sorted vertex set; the list
/// is sorted lexicographically.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    fn expand(g: &Graph, r: u32, mut p: u32, mut x: u32, out: &mut Vec<VertexSet>) {
        if p == 0 {
            if x == 0 {
                out.push(VertexSet::from_bits(r));
            }
            return;
        }
        let pivot = VertexSet::from_bits(p | x)
            .iter()
            .max_by_key(|&u| (g.adj_bits(u - 1) & p).count_ones())
            .expect("p | x is nonempty");
        let mut candidates = p & !g.adj_bits(pivot - 1);
        while candidates != 0 {
            let v = candidates.trailing_zeros();
            candidates &= candidates - 1;
            let nb = g.adj_bits(v as usize);
            expand(g, r | 1 << v, p & nb, x & nb, out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let mut out = Vec::new();
    expand(g, 0, g.vertices().bits(), 0, &mut out);
    out.sort();
    out
}

/// Length (in edges) of the longest induced path of a connected graph.
///
/// Every vertex subset is tested for inducing a path graph: connected, with
/// `|U| - 1` edges and maximum degree two.
pub fn longest_induced_path_length(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut best = 0;
    for bits in 1u32..(1u32 << n) {
        let size = bits.count_ones() as usize;
        if size <= best + 1 {
            continue;
        }
        let set = VertexSet::from_bits(bits);
        if g.edges_within(set) != size - 1 {
            continue;
        }
        if set
            .iter()
            .any(|v| (g.adj_bits(v - 1) & bits).count_ones() > 2)
        {
            continue;
        }
        if is_connected_within(g, set) {
            best = size - 1;
        }
    }
    Ok(best)
}

/// Size of a largest induced matching, by branch and bound over the edge list.
pub fn induced_matching_number(g: &Graph) -> usize {
    fn search(
        g: &Graph,
        edges: &[(usize, usize)],
        k: usize,
        blocked: u32,
        size: usize,
        best: &mut usize,
    ) {
        if size > *best {
            *best = size;
        }
        if k == edges.len() || size + (edges.len() - k) <= *best {
            return;
        }
        let (u, v) = edges[k];
        let mask = 1u32 << (u - 1) | 1u32 << (v - 1);
        if blocked & mask == 0 {
            let grow = g.closed_neighbors(u).union(g.closed_neighbors(v)).bits();
            search(g, edges, k + 1, blocked | grow, size + 1, best);
        }
        search(g, edges, k + 1, blocked, size, best);
    }
    let edges = g.edges();
    let mut best = 0;
    search(g, &edges, 0, 0, 0, &mut best);
    best
}

/// Finds a vertex set of size at least `min_len` inducing a cycle.
pub(crate) fn find_induced_cycle(g: &Graph, min_len: usize) -> Option<VertexSet> {
    let n = g.n();
    let mut best: Option<VertexSet> = None;
    for bits in 1u32..(1u32 << n) {
        let size = bits.count_ones() as usize;
        if size < min_len.max(3) {
            continue;
        }
        let set = VertexSet::from_bits(bits);
        if set
            .iter()
            .all(|v| (g.adj_bits(v - 1) & bits).count_ones() == 2)
            && is_connected_within(g, set)
        {
            let better = match best {
                None => true,
                Some(b) => (size, set) < (b.len(), b),
            };
            if better {
                best = Some(set);
            }
        }
    }
    best
}

/// Orders the vertices of an induced cycle along the cycle, starting at its minimum.
pub(crate) fn cycle_order(g: &Graph, cycle: VertexSet) -> Vec<usize> {
    let start = cycle.min().expect("nonempty cycle");
    let mut order = vec![start];
    let mut prev = 0;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .intersection(cycle)
            .iter()
            .find(|&u| u != prev && u != start && !order.contains(&u));
        match next {
            Some(u) => {
                order.push(u);
                prev = cur;
                cur = u;
            }
            None => break,
        }
    }
    order
}

/// No induced cycle of length at least five in the graph or its complement.
pub fn is_weakly_chordal(g: &Graph) -> bool {
    find_induced_cycle(g, 5).is_none() && find_induced_cycle(&g.complement(), 5).is_none()
}

/// Every two distinct maximal cliques share at most one vertex.
pub fn cliques_pairwise_intersect_at_most_one(g: &Graph) -> bool {
    let cliques = maximal_cliques(g);
    cliques.iter().enumerate().all(|(a, c)| {
        cliques[a + 1..]
            .iter()
            .all(|d| c.intersection(*d).len() <= 1)
    })
}
