//! Closed graphs and closed labelings.
//!
//! A labeled graph is closed when any two edges `{i,j}`, `{i,k}` with `j` and
//! `k` on the same side of `i` force the edge `{j,k}`. A graph is closed when
//! some relabeling makes it so; equivalently every maximal clique becomes an
//! interval of labels.

use crate::graph::stats::{cycle_order, find_claw, find_induced_cycle};
use crate::graph::{maximal_cliques, Graph};
use crate::{Error, Result};

/// Largest `n` for the exhaustive labeling search.
pub const MAX_LABELING_N: usize = 10;

/// A relabeling: vertex `v` receives the label `perm[v - 1]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Labeling {
    perm: Vec<usize>,
}

impl Labeling {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p == 0 || p > n || seen[p - 1] {
                return Err(Error::InvalidArgument(format!(
                    "{perm:?} is not a permutation of 1..={n}"
                )));
            }
            seen[p - 1] = true;
        }
        Ok(Labeling { perm })
    }

    pub fn identity(n: usize) -> Self {
        Labeling {
            perm: (1..=n).collect(),
        }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    /// New label of vertex `v`.
    pub fn label(&self, v: usize) -> usize {
        self.perm[v - 1]
    }

    pub fn apply(&self, g: &Graph) -> Graph {
        g.permuted(&self.perm)
    }
}

/// A triple `(i, j, k)`, `j < k`, with `{i,j}` and `{i,k}` edges on the same
/// side of `i` but `{j,k}` missing.
pub type Violation = (usize, usize, usize);

/// The first violating triple in `(i, j, k)` order, if any.
pub fn closed_violation(g: &Graph) -> Option<Violation> {
    for i in 1..=g.n() {
        let nb = g.neighbors(i);
        for side in [
            nb.iter().filter(|&u| u > i).collect::<Vec<_>>(),
            nb.iter().filter(|&u| u < i).collect(),
        ] {
            for (a, &j) in side.iter().enumerate() {
                for &k in &side[a + 1..] {
                    if !g.has_edge(j, k) {
                        return Some((i, j, k));
                    }
                }
            }
        }
    }
    None
}

/// True iff the graph satisfies the closed condition for its given labels.
pub fn is_closed_wrt_labeling(g: &Graph) -> bool {
    closed_violation(g).is_none()
}

/// True iff every maximal clique is an interval `{a, ..., b}` of labels.
pub fn facets_are_intervals(g: &Graph) -> bool {
    maximal_cliques(g).iter().all(|c| c.is_interval())
}

/// Lexicographically smallest labeling under which `g` is closed, or `None`.
///
/// Labels are assigned to vertices `1, 2, ...` in turn, smallest label first,
/// and a branch is abandoned as soon as the assigned vertices contain a
/// violating triple.
pub fn find_closed_labeling(g: &Graph) -> Result<Option<Labeling>> {
    let n = g.n();
    if n > MAX_LABELING_N {
        return Err(Error::VertexCount(n, MAX_LABELING_N));
    }
    let mut label = vec![0usize; n];
    if assign(g, 0, 0, &mut label) {
        Ok(Some(Labeling { perm: label }))
    } else {
        Ok(None)
    }
}

/// Does assigning the current label of vertex `v0` (0-based) create a violation
/// among assigned vertices?
fn violates(g: &Graph, v0: usize, label: &[usize]) -> bool {
    let assigned = |u: usize| label[u] != 0;
    let lv = label[v0];
    let nb: Vec<usize> = (0..g.n())
        .filter(|&u| assigned(u) && u != v0 && g.has_edge(v0 + 1, u + 1))
        .collect();
    // v as the centre
    for (a, &u) in nb.iter().enumerate() {
        for &w in &nb[a + 1..] {
            if (label[u] > lv) == (label[w] > lv) && !g.has_edge(u + 1, w + 1) {
                return true;
            }
        }
    }
    // v as one of the two outer vertices
    for &c in &nb {
        let lc = label[c];
        for w in 0..g.n() {
            if w == v0 || w == c || !assigned(w) || !g.has_edge(c + 1, w + 1) {
                continue;
            }
            if (lv > lc) == (label[w] > lc) && !g.has_edge(v0 + 1, w + 1) {
                return true;
            }
        }
    }
    false
}

fn assign(g: &Graph, v0: usize, used: u32, label: &mut [usize]) -> bool {
    let n = g.n();
    if v0 == n {
        return true;
    }
    for l in 1..=n {
        if used >> l & 1 == 1 {
            continue;
        }
        label[v0] = l;
        if !violates(g, v0, label) && assign(g, v0 + 1, used | 1 << l, label) {
            return true;
        }
    }
    label[v0] = 0;
    false
}

/// Structural reason a graph cannot be closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// An induced `K_{1,3}`: centre and three pairwise non-adjacent leaves.
    Claw { center: usize, leaves: [usize; 3] },
    /// An induced cycle of length at least four, in cyclic order.
    ChordlessCycle(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosednessCertificate {
    Closed(Labeling),
    /// The exhaustive search failed; `obstruction` is attached when a claw or
    /// chordless cycle exists.
    NotClosed {
        obstruction: Option<Obstruction>,
    },
}

impl ClosednessCertificate {
    pub fn is_closed(&self) -> bool {
        matches!(self, ClosednessCertificate::Closed(_))
    }

    pub fn labeling(&self) -> Option<&Labeling> {
        match self {
            ClosednessCertificate::Closed(l) => Some(l),
            ClosednessCertificate::NotClosed { .. } => None,
        }
    }
}

pub fn find_obstruction(g: &Graph) -> Option<Obstruction> {
    if let Some((center, leaves)) = find_claw(g) {
        return Some(Obstruction::Claw { center, leaves });
    }
    find_induced_cycle(g, 4).map(|c| Obstruction::ChordlessCycle(cycle_order(g, c)))
}

pub fn closedness_certificate(g: &Graph) -> Result<ClosednessCertificate> {
    Ok(match find_closed_labeling(g)? {
        Some(l) => ClosednessCertificate::Closed(l),
        None => ClosednessCertificate::NotClosed {
            obstruction: find_obstruction(g),
        },
    })
}
