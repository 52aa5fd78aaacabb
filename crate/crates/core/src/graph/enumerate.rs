//! Isomorphism classes of small graphs.
//!
//! A graph's canonical form is the lexicographically smallest upper-triangle
//! adjacency bitstring over all vertex permutations. Bits are ordered column by
//! column, `(1,2), (1,3), (2,3), (1,4), ...`, which is also the graph6 bit order.
//! The minimum is found by branch and bound: positions are filled one at a time
//! and a branch is cut as soon as its prefix exceeds the best string found.

use std::collections::BTreeSet;
use std::fmt;

use super::Graph;
use crate::{Error, Result};

/// Largest `n` accepted by the enumeration routines.
pub const MAX_ENUMERATION_N: usize = 8;

/// Largest `n` accepted by [`canonical_form`].
const MAX_CANONICAL_N: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The adjacency bitstring read as a binary number, first pair most significant.
    pub fn bits(&self) -> u128 {
        self.bits
    }

    fn len(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// The representative graph, labelled so that its own bitstring is this one.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("canonical forms have a valid n");
        let len = self.len();
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> (len - 1 - k) & 1 == 1 {
                    g.add_edge(i + 1, j + 1).expect("in range");
                }
                k += 1;
            }
        }
        g
    }
}

impl fmt::Display for CanonicalForm {
    /// `n` followed by the bitstring in hexadecimal, e.g. `4:1b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.len().div_ceil(4).max(1);
        write!(f, "{}:{:0width$x}", self.n, self.bits, width = width)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({self})")
    }
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    cols: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl Search<'_> {
    fn column(&self, k: usize, v: usize) -> u32 {
        let nb = self.g.adj_bits(v);
        let mut c = 0u32;
        for (i, &u) in self.order[..k].iter().enumerate() {
            if nb >> u & 1 == 1 {
                c |= 1 << (k - 1 - i);
            }
        }
        c
    }

    fn run(&mut self, k: usize, used: u32) {
        let n = self.g.n();
        if k == n {
            let better = match &self.best {
                None => true,
                Some(b) => self.cols[..] < b[..],
            };
            if better {
                self.best = Some(self.cols.clone());
            }
            return;
        }
        for v in 0..n {
            if used >> v & 1 == 1 {
                continue;
            }
            let c = self.column(k, v);
            if let Some(b) = &self.best {
                // Only a prefix equal to the best one can be cut by this column.
                if self.cols[..k] == b[..k] && c > b[k] {
                    continue;
                }
            }
            self.order[k] = v;
            self.cols[k] = c;
            self.run(k + 1, used | 1 << v);
        }
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > MAX_CANONICAL_N {
        return Err(Error::VertexCount(n, MAX_CANONICAL_N));
    }
    let mut search = Search {
        g,
        order: vec![0; n],
        cols: vec![0; n],
        best: None,
    };
    search.run(0, 0);
    let cols = search.best.expect("at least one permutation");
    let mut bits = 0u128;
    for (k, &c) in cols.iter().enumerate().skip(1) {
        bits = bits << k | c as u128;
    }
    Ok(CanonicalForm { n, bits })
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, sorted by canonical form.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUMERATION_N {
        return Err(Error::VertexCount(n, MAX_ENUMERATION_N));
    }
    let mut forms: BTreeSet<CanonicalForm> = BTreeSet::new();
    forms.insert(canonical_form(&Graph::new(1)?)?);
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for form in &forms {
            let small = form.to_graph();
            for nb in 0u32..(1 << (m - 1)) {
                let mut g = Graph::new(m)?;
                for (i, j) in small.edges() {
                    g.add_edge(i, j)?;
                }
                for u in super::VertexSet::from_bits(nb).iter() {
                    g.add_edge(u, m)?;
                }
                next.insert(canonical_form(&g)?);
            }
        }
        forms = next;
    }
    Ok(forms.into_iter().map(|f| f.to_graph()).collect())
}

/// One canonical representative per isomorphism class of connected graphs on
/// `n` vertices (`1 <= n <= 8`), sorted by canonical form.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_graphs(n)?
        .into_iter()
        .filter(|g| g.is_connected())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_of_small_graphs() {
        // P3: the two non-edges-first string is 011.
        let p3 = canonical_form(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(p3.bits(), 0b011);
        assert_eq!(p3.to_string(), "3:3");
        assert_eq!(
            canonical_form(&Graph::complete(3).unwrap()).unwrap().bits(),
            0b111
        );
        assert_eq!(
            canonical_form(&Graph::new(1).unwrap()).unwrap().to_string(),
            "1:0"
        );
    }

    #[test]
    fn canonical_graph_reproduces_its_form() {
        let g = Graph::from_edges(5, &[(1, 2), (2, 3), (3, 1), (4, 5), (1, 4)]).unwrap();
        let f = canonical_form(&g).unwrap();
        assert_eq!(canonical_form(&f.to_graph()).unwrap(), f);
    }

    #[test]
    fn graph_counts() {
        let all: Vec<usize> = (1..=6)
            .map(|n| enumerate_graphs(n).unwrap().len())
            .collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6)
            .map(|n| enumerate_connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(enumerate_connected_graphs(0).is_err());
        assert!(enumerate_connected_graphs(9).is_err());
        assert!(canonical_form(&Graph::new(11).unwrap()).is_err());
    }
}
