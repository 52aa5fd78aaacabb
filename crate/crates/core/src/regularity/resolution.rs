//! Graded free resolutions by iterated Schreyer syzygies.
//!
//! Level 1 is the reduced lex Gröbner basis of `I`. Each later level consists
//! of syzygies of the previous one, computed from S-pairs by division with
//! quotient tracking; by Schreyer's theorem they again form a Gröbner basis
//! for the induced order, where `t·e_a` is compared through the monomial
//! `t·T_a` (`T_a` the total monomial of `e_a`) and ties go to the smaller
//! index. Keeping every level sorted by (component, leading monomial
//! descending) makes that tie rule agree with the full induced order.
//!
//! The result is usually not minimal. Betti numbers are read off the
//! constant entries of the differentials:
//! `β_{k,j} = #gens(F_k)_j - rank(d_k ⊗ K)_j - rank(d_{k+1} ⊗ K)_j`.

use std::cmp::Reverse;
use std::collections::BTreeMap;

use super::betti::BettiTable;
use crate::poly::{buchberger, Field, Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::{Error, Result};

/// Largest number of ring variables accepted.
pub const MAX_RESOLUTION_VARS: usize = 14;

/// Cap on the total number of frame elements over all levels.
pub const MAX_FRAME_SIZE: usize = 400_000;

/// One generator of a free module in the resolution, given by its image in
/// the previous module.
#[derive(Clone, Debug)]
struct Element<E> {
    /// Index of the previous-level generator carrying the leading term.
    comp: usize,
    /// Total monomial of the leading term; its degree is the generator's degree.
    total: Monomial,
    /// `(t·T_d, d, c)` for the term `c·t·e_d`, descending; the first has `c = 1`.
    terms: Vec<(Monomial, usize, E)>,
}

type Work<E> = BTreeMap<(Monomial, Reverse<usize>), E>;

/// A graded free resolution `0 <- S <- F_1 <- F_2 <- ...` of `S/I`.
#[derive(Clone, Debug)]
pub struct SchreyerResolution<F: Field> {
    ring: PolyRing<F>,
    levels: Vec<Vec<Element<F::Elem>>>,
    unit: bool,
}

fn add_scaled<F: Field>(
    field: &F,
    work: &mut Work<F::Elem>,
    terms: &[(Monomial, usize, F::Elem)],
    m: &Monomial,
    c: &F::Elem,
) {
    for (t, d, x) in terms {
        let key = (t.mul(m), Reverse(*d));
        let delta = field.mul(x, c);
        match work.get_mut(&key) {
            Some(v) => {
                *v = field.add(v, &delta);
                if field.is_zero(v) {
                    work.remove(&key);
                }
            }
            None => {
                if !field.is_zero(&delta) {
                    work.insert(key, delta);
                }
            }
        }
    }
}

fn into_terms<E>(work: Work<E>) -> Vec<(Monomial, usize, E)> {
    work.into_iter()
        .rev()
        .map(|((m, Reverse(d)), c)| (m, d, c))
        .collect()
}

/// Syzygies of `level`, which must be a Gröbner basis for the induced order.
fn next_level<F: Field>(
    field: &F,
    level: &[Element<F::Elem>],
    budget: usize,
) -> Result<Vec<Element<F::Elem>>> {
    let mut by_comp: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (a, e) in level.iter().enumerate() {
        by_comp.entry(e.comp).or_default().push(a);
    }
    let mut out: Vec<Element<F::Elem>> = Vec::new();
    for group in by_comp.values() {
        for (pos, &a) in group.iter().enumerate() {
            let ta = level[a].total;
            let mut cands: Vec<(Monomial, usize)> = group[pos + 1..]
                .iter()
                .map(|&b| {
                    (
                        ta.quotient_of(&ta.lcm(&level[b].total))
                            .expect("T_a divides the lcm"),
                        b,
                    )
                })
                .collect();
            cands.sort_by_key(|&(m, b)| (m.degree(), Reverse(m), b));
            let mut chosen: Vec<(Monomial, usize)> = Vec::new();
            for (m, b) in cands {
                if !chosen.iter().any(|(c, _)| c.divides(&m)) {
                    chosen.push((m, b));
                }
            }
            for (m, b) in chosen {
                out.push(syzygy(field, level, &by_comp, a, b, &m)?);
                if out.len() > budget {
                    return Err(Error::ScaleGuard(format!(
                        "resolution frame exceeds {MAX_FRAME_SIZE} elements"
                    )));
                }
            }
        }
    }
    out.sort_by_key(|e| (e.comp, Reverse(e.total)));
    Ok(out)
}

/// The syzygy `m·e_a - m'·e_b - (quotients)` from reducing the S-pair of `a < b`.
fn syzygy<F: Field>(
    field: &F,
    level: &[Element<F::Elem>],
    by_comp: &BTreeMap<usize, Vec<usize>>,
    a: usize,
    b: usize,
    m: &Monomial,
) -> Result<Element<F::Elem>> {
    let lcm = level[a].total.mul(m);
    let mb = level[b]
        .total
        .quotient_of(&lcm)
        .expect("T_b divides the lcm");
    let one = field.one();
    let minus_one = field.neg(&one);
    let mut work: Work<F::Elem> = BTreeMap::new();
    add_scaled(field, &mut work, &level[a].terms[1..], m, &one);
    add_scaled(field, &mut work, &level[b].terms[1..], &mb, &minus_one);
    let mut syz: Work<F::Elem> = BTreeMap::new();
    syz.insert((lcm, Reverse(a)), one.clone());
    syz.insert((lcm, Reverse(b)), minus_one);
    while let Some(((mono, Reverse(d)), c)) = work.pop_last() {
        let divisor = by_comp.get(&d).and_then(|cands| {
            cands
                .iter()
                .copied()
                .find(|&e| level[e].total.divides(&mono))
        });
        let Some(e) = divisor else {
            return Err(Error::InvalidArgument(
                "syzygy reduction left a remainder; basis is not Gröbner".into(),
            ));
        };
        let t = level[e].total.quotient_of(&mono).expect("divides");
        add_scaled(field, &mut work, &level[e].terms[1..], &t, &field.neg(&c));
        let key = (mono, Reverse(e));
        let q = field.sub(syz.get(&key).unwrap_or(&field.zero()), &c);
        if field.is_zero(&q) {
            syz.remove(&key);
        } else {
            syz.insert(key, q);
        }
    }
    let terms = into_terms(syz);
    debug_assert!(terms[0].0 == lcm && terms[0].1 == a);
    Ok(Element {
        comp: a,
        total: lcm,
        terms,
    })
}

impl<F: Field> SchreyerResolution<F> {
    /// Resolves `S/I` for homogeneous generators of `I`.
    pub fn new(ring: &PolyRing<F>, gens: &[Polynomial<F::Elem>]) -> Result<Self> {
        if ring.nvars() > MAX_RESOLUTION_VARS {
            return Err(Error::ScaleGuard(format!(
                "resolutions limited to {MAX_RESOLUTION_VARS} variables, ring has {}",
                ring.nvars()
            )));
        }
        if gens.iter().any(|g| !g.is_homogeneous()) {
            return Err(Error::NotHomogeneous);
        }
        let gb = buchberger(ring, gens, MonomialOrder::Lex);
        if gb.is_unit() {
            return Ok(SchreyerResolution {
                ring: ring.clone(),
                levels: Vec::new(),
                unit: true,
            });
        }
        let first: Vec<Element<F::Elem>> = gb
            .gens()
            .iter()
            .map(|g| Element {
                comp: 0,
                total: g.leading_monomial().expect("nonzero"),
                terms: g.terms().iter().map(|(m, c)| (*m, 0, c.clone())).collect(),
            })
            .collect();
        let mut levels = Vec::new();
        let mut size = first.len();
        let mut current = first;
        while !current.is_empty() {
            let next = next_level(ring.field(), &current, MAX_FRAME_SIZE.saturating_sub(size))?;
            size += next.len();
            levels.push(current);
            current = next;
        }
        Ok(SchreyerResolution {
            ring: ring.clone(),
            levels,
            unit: false,
        })
    }

    /// Number of nonzero free modules after `F_0`.
    pub fn length(&self) -> usize {
        self.levels.len()
    }

    /// Ranks of `F_1, F_2, ...`.
    pub fn frame_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.len()).collect()
    }

    /// Degrees of the generators of `F_k`, `k >= 1`.
    pub fn generator_degrees(&self, k: usize) -> Vec<u32> {
        self.levels
            .get(k - 1)
            .map_or(Vec::new(), |l| l.iter().map(|e| e.total.degree()).collect())
    }

    fn total_of(&self, k: usize, d: usize) -> Monomial {
        if k == 0 {
            Monomial::one(self.ring.nvars())
        } else {
            self.levels[k - 1][d].total
        }
    }

    /// Checks `d_{k-1} ∘ d_k = 0` for every `k >= 2`.
    pub fn is_complex(&self) -> bool {
        let field = self.ring.field();
        for k in 2..=self.levels.len() {
            let below = &self.levels[k - 2];
            for e in &self.levels[k - 1] {
                let mut work: Work<F::Elem> = BTreeMap::new();
                for (mono, d, c) in &e.terms {
                    let t = below[*d]
                        .total
                        .quotient_of(mono)
                        .expect("term totals are multiples");
                    add_scaled(field, &mut work, &below[*d].terms, &t, c);
                }
                if !work.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Graded Betti numbers of `S/I` over the ring's field.
    pub fn betti_table(&self) -> BettiTable {
        let field = self.ring.field();
        let mut table = BettiTable::new(field.kind());
        if self.unit {
            return table;
        }
        let len = self.levels.len();
        // ranks[k][j]: rank of the constant part of d_k in degree j
        let mut ranks: Vec<BTreeMap<u32, usize>> = vec![BTreeMap::new(); len + 2];
        for k in 1..=len {
            let mut rows: BTreeMap<u32, Vec<Vec<(usize, F::Elem)>>> = BTreeMap::new();
            for e in &self.levels[k - 1] {
                let row: Vec<(usize, F::Elem)> = e
                    .terms
                    .iter()
                    .filter(|(mono, d, _)| self.total_of(k - 1, *d) == *mono)
                    .map(|(_, d, c)| (*d, c.clone()))
                    .collect();
                rows.entry(e.total.degree()).or_default().push(row);
            }
            for (j, block) in rows {
                if block.iter().any(|r| !r.is_empty()) {
                    ranks[k].insert(j, field.rank(block));
                }
            }
        }
        table.set(0, 0, 1);
        for k in 1..=len {
            let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
            for e in &self.levels[k - 1] {
                *counts.entry(e.total.degree()).or_default() += 1;
            }
            for (j, count) in counts {
                let r = ranks[k].get(&j).copied().unwrap_or(0)
                    + ranks[k + 1].get(&j).copied().unwrap_or(0);
                table.set(k, j as usize, (count - r) as u64);
            }
        }
        table
    }
}

/// Graded Betti numbers of `S/I` for homogeneous generators of `I`.
pub fn graded_betti_numbers<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
) -> Result<BettiTable> {
    Ok(SchreyerResolution::new(ring, gens)?.betti_table())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{PrimeField, Rationals};

    fn entries(t: &BettiTable) -> Vec<((usize, usize), u64)> {
        t.entries().collect()
    }

    #[test]
    fn hypersurface() {
        let r = PolyRing::for_graph(PrimeField::default(), 2).unwrap();
        let t = graded_betti_numbers(&r, &[r.parse("x1*y2 - x2*y1").unwrap()]).unwrap();
        assert_eq!(entries(&t), vec![((0, 0), 1), ((1, 2), 1)]);
        assert_eq!(t.regularity(), Some(1));
    }

    #[test]
    fn koszul_complex_of_variables() {
        let r = PolyRing::for_graph(Rationals, 2).unwrap();
        let gens: Vec<_> = (0..4).map(|i| r.var(i)).collect();
        let res = SchreyerResolution::new(&r, &gens).unwrap();
        assert!(res.is_complex());
        let t = res.betti_table();
        assert_eq!(
            entries(&t),
            vec![
                ((0, 0), 1),
                ((1, 1), 4),
                ((2, 2), 6),
                ((3, 3), 4),
                ((4, 4), 1)
            ]
        );
    }

    #[test]
    fn twisted_cubic() {
        // 2-minors of [[a, b, c], [b, c, d]]: beta = 1; 3 in degree 2; 2 in degree 3
        let r = PolyRing::new(
            PrimeField::default(),
            ["a", "b", "c", "d"].map(String::from).to_vec(),
        )
        .unwrap();
        let gens: Vec<_> = ["a*c - b^2", "a*d - b*c", "b*d - c^2"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        let res = SchreyerResolution::new(&r, &gens).unwrap();
        assert!(res.is_complex());
        assert_eq!(
            entries(&res.betti_table()),
            vec![((0, 0), 1), ((1, 2), 3), ((2, 3), 2)]
        );
    }

    #[test]
    fn non_minimal_frames_are_minimized() {
        let r = PolyRing::new(Rationals, ["a", "b", "c"].map(String::from).to_vec()).unwrap();
        // (a^2, ab, b^2) has a linear resolution with betti 1, 3, 2
        let gens: Vec<_> = ["a^2", "a*b", "b^2"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        let t = graded_betti_numbers(&r, &gens).unwrap();
        assert_eq!(entries(&t), vec![((0, 0), 1), ((1, 2), 3), ((2, 3), 2)]);
        // the non-minimal presentation (a, a + b, b^2) must give the same table as (a, b)
        let gens: Vec<_> = ["a", "a + b", "b^2"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        assert_eq!(
            entries(&graded_betti_numbers(&r, &gens).unwrap()),
            vec![((0, 0), 1), ((1, 1), 2), ((2, 2), 1)]
        );
    }

    #[test]
    fn guards_and_degenerate_ideals() {
        let r = PolyRing::for_graph(PrimeField::default(), 2).unwrap();
        assert_eq!(
            graded_betti_numbers(&r, &[r.parse("x1 + y1^2").unwrap()]),
            Err(Error::NotHomogeneous)
        );
        assert!(graded_betti_numbers(&r, &[r.one()]).unwrap().is_zero());
        assert_eq!(
            entries(&graded_betti_numbers(&r, &[]).unwrap()),
            vec![((0, 0), 1)]
        );
        let big = PolyRing::for_graph(PrimeField::default(), 8).unwrap();
        assert!(matches!(
            graded_betti_numbers(&big, &[big.var(0)]),
            Err(Error::ScaleGuard(_))
        ));
    }
}
