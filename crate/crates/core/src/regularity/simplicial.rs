use std::collections::HashMap;

use crate::poly::{Field, MonomialIdeal};
use crate::{Error, Result};

/// Largest ground set handled.
pub const MAX_GROUND: usize = 16;

/// A simplicial complex on a ground set of at most 16 vertices (bit `v` is
/// vertex `v`), stored by its minimal non-faces. The void complex, which has
/// no faces at all, has the empty set as a non-face; the complex `{∅}` has
/// every vertex as a non-face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: u32,
    nonfaces: Vec<u32>,
}

fn minimize(mut sets: Vec<u32>) -> Vec<u32> {
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut kept: Vec<u32> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k & s == *k) {
            kept.push(s);
        }
    }
    kept
}

impl SimplicialComplex {
    /// The complex whose minimal non-faces are the given sets, restricted to `ground`.
    pub fn from_nonfaces(ground: u32, nonfaces: impl IntoIterator<Item = u32>) -> Self {
        let nonfaces = minimize(nonfaces.into_iter().filter(|s| s & !ground == 0).collect());
        SimplicialComplex { ground, nonfaces }
    }

    /// Stanley–Reisner complex of a squarefree monomial ideal on its ring's variables.
    pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if ideal.nvars() > MAX_GROUND {
            return Err(Error::ScaleGuard(format!(
                "ground set of {} vertices exceeds {MAX_GROUND}",
                ideal.nvars()
            )));
        }
        let ground = (1u32 << ideal.nvars()) - 1;
        Ok(Self::from_nonfaces(
            ground,
            ideal.gens().iter().map(|m| m.support()),
        ))
    }

    /// The complex generated by `facets`.
    pub fn from_facets(ground: u32, facets: &[u32]) -> Self {
        assert!(ground.count_ones() as usize <= MAX_GROUND);
        if facets.is_empty() {
            return Self::void(ground);
        }
        let is_face = |s: u32| facets.iter().any(|f| s & !f == 0);
        let mut nonfaces = Vec::new();
        let mut s = ground;
        loop {
            // minimal non-faces: s is not a face but every s - v is
            if !is_face(s) && bits(s).all(|v| is_face(s & !(1 << v))) {
                nonfaces.push(s);
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & ground;
        }
        Self::from_nonfaces(ground, nonfaces)
    }

    pub fn void(ground: u32) -> Self {
        SimplicialComplex {
            ground,
            nonfaces: vec![0],
        }
    }

    pub fn ground(&self) -> u32 {
        self.ground
    }

    pub fn minimal_nonfaces(&self) -> &[u32] {
        &self.nonfaces
    }

    pub fn is_void(&self) -> bool {
        self.nonfaces.first() == Some(&0)
    }

    pub fn is_face(&self, s: u32) -> bool {
        s & !self.ground == 0 && !self.nonfaces.iter().any(|n| n & s == *n)
    }

    /// Induced subcomplex on `subset` of the ground set.
    pub fn restrict(&self, subset: u32) -> Self {
        let ground = self.ground & subset;
        SimplicialComplex {
            ground,
            nonfaces: self
                .nonfaces
                .iter()
                .copied()
                .filter(|n| n & !ground == 0)
                .collect(),
        }
    }

    /// All faces grouped by cardinality: entry `s` lists the faces with `s` vertices.
    pub fn faces_by_size(&self) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = Vec::new();
        if self.is_void() {
            return out;
        }
        let verts: Vec<u32> = bits(self.ground).collect();
        fn grow(
            c: &SimplicialComplex,
            verts: &[u32],
            start: usize,
            face: u32,
            out: &mut Vec<Vec<u32>>,
        ) {
            let size = face.count_ones() as usize;
            if out.len() <= size {
                out.push(Vec::new());
            }
            out[size].push(face);
            for k in start..verts.len() {
                let next = face | 1 << verts[k];
                if !c.nonfaces.iter().any(|n| n & next == *n) {
                    grow(c, verts, k + 1, next, out);
                }
            }
        }
        grow(self, &verts, 0, 0, &mut out);
        for level in &mut out {
            level.sort_unstable();
        }
        out
    }

    /// Dimension of the largest face; `None` for the void complex, `-1` for `{∅}`.
    pub fn dimension(&self) -> Option<isize> {
        let faces = self.faces_by_size();
        (!faces.is_empty()).then(|| faces.len() as isize - 2)
    }

    /// Vertices `v` such that `F ∪ {v}` is a face for every face `F`.
    pub fn cone_points(&self) -> u32 {
        if self.is_void() {
            return 0;
        }
        let used = self.nonfaces.iter().fold(0, |a, n| a | n);
        self.ground & !used
    }
}

fn bits(s: u32) -> impl Iterator<Item = u32> {
    (0..32).filter(move |v| s >> v & 1 == 1)
}

/// Reduced homology dimensions over `field`: entry `k` is `dim H̃_{k-1}`, for
/// degrees `-1 ..= dim K`. The void complex has no reduced homology at all.
pub fn reduced_homology_dims<F: Field>(complex: &SimplicialComplex, field: &F) -> Vec<usize> {
    let faces = complex.faces_by_size();
    if faces.is_empty() {
        return Vec::new();
    }
    let index: Vec<HashMap<u32, usize>> = faces
        .iter()
        .map(|level| level.iter().enumerate().map(|(k, &f)| (f, k)).collect())
        .collect();
    // rank of the boundary from faces of size s to faces of size s - 1
    let mut ranks = vec![0usize; faces.len() + 1];
    for s in 1..faces.len() {
        let rows: Vec<Vec<(usize, F::Elem)>> = faces[s]
            .iter()
            .map(|&f| {
                bits(f)
                    .enumerate()
                    .map(|(pos, v)| {
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        (index[s - 1][&(f & !(1 << v))], field.from_i64(sign))
                    })
                    .collect()
            })
            .collect();
        ranks[s] = field.rank(rows);
    }
    (0..faces.len())
        .map(|s| faces[s].len() - ranks[s] - ranks[s + 1])
        .collect()
}
