//! Multivariate division and Buchberger's algorithm.
//!
//! Pairs are processed by the normal strategy (smallest lcm degree, then
//! smallest lcm in lex order) and filtered with the Gebauer–Möller criteria.
//! The output is the reduced basis: monic, inter-reduced, sorted by descending
//! leading monomial.

use std::collections::BTreeMap;

use super::field::Field;
use super::monomial::Monomial;
use super::polynomial::{PolyRing, Polynomial};

/// Monomial order tag carried by a basis. Both variants compare monomials
/// lexicographically; `Elimination` records that the first `aux` ring
/// variables are auxiliary ones to be eliminated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    Elimination { aux: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<E> {
    gens: Vec<Polynomial<E>>,
    order: MonomialOrder,
}

impl<E: Clone> GroebnerBasis<E> {
    pub fn gens(&self) -> &[Polynomial<E>] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Polynomial<E>> {
        self.gens
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_constant()
    }

    /// Leading monomials in basis order; these minimally generate the initial ideal.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens
            .iter()
            .map(|g| g.leading_monomial().expect("basis elements are nonzero"))
            .collect()
    }
}

type Work<E> = BTreeMap<Monomial, E>;

fn sub_scaled_into<F: Field>(
    ring: &PolyRing<F>,
    work: &mut Work<F::Elem>,
    g: &Polynomial<F::Elem>,
    m: &Monomial,
    c: &F::Elem,
) {
    let f = ring.field();
    for (t, x) in g.terms() {
        let key = t.mul(m);
        let delta = f.mul(x, c);
        match work.get_mut(&key) {
            Some(v) => {
                *v = f.sub(v, &delta);
                if f.is_zero(v) {
                    work.remove(&key);
                }
            }
            None => {
                work.insert(key, f.neg(&delta));
            }
        }
    }
}

fn find_divisor<E>(basis: &[Polynomial<E>], m: &Monomial) -> Option<usize> {
    basis
        .iter()
        .position(|b| b.leading_monomial().is_some_and(|lm| lm.divides(m)))
}

/// Division with remainder: `f = sum q_i b_i + r` where no term of `r` is
/// divisible by a leading monomial of `basis`.
pub fn divide<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    basis: &[Polynomial<F::Elem>],
) -> (Vec<Polynomial<F::Elem>>, Polynomial<F::Elem>) {
    let fld = ring.field();
    let mut work: Work<F::Elem> = f.terms().iter().cloned().collect();
    let mut quotients: Vec<Work<F::Elem>> = vec![BTreeMap::new(); basis.len()];
    let mut rem = Vec::new();
    while let Some((m, c)) = work.pop_last() {
        match find_divisor(basis, &m) {
            Some(k) => {
                let b = &basis[k];
                let lm = b.leading_monomial().expect("nonzero");
                let q = lm.quotient_of(&m).expect("divides");
                let coef = fld.div(&c, b.leading_coeff().expect("nonzero"));
                // the leading term cancels exactly; subtract the tail only
                let tail = ring.from_sorted(b.terms()[1..].to_vec());
                sub_scaled_into(ring, &mut work, &tail, &q, &coef);
                let slot = quotients[k].entry(q).or_insert_with(|| fld.zero());
                *slot = fld.add(slot, &coef);
            }
            None => rem.push((m, c)),
        }
    }
    let quotients = quotients.into_iter().map(|w| ring.from_map(w)).collect();
    (quotients, ring.from_sorted(rem))
}

/// Full normal form of `f` modulo `basis`.
pub fn reduce<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    basis: &[Polynomial<F::Elem>],
) -> Polynomial<F::Elem> {
    let fld = ring.field();
    let mut work: Work<F::Elem> = f.terms().iter().cloned().collect();
    let mut rem = Vec::new();
    while let Some((m, c)) = work.pop_last() {
        match find_divisor(basis, &m) {
            Some(k) => {
                let b = &basis[k];
                let q = b
                    .leading_monomial()
                    .expect("nonzero")
                    .quotient_of(&m)
                    .expect("divides");
                let coef = fld.div(&c, b.leading_coeff().expect("nonzero"));
                let tail = ring.from_sorted(b.terms()[1..].to_vec());
                sub_scaled_into(ring, &mut work, &tail, &q, &coef);
            }
            None => rem.push((m, c)),
        }
    }
    ring.from_sorted(rem)
}

pub fn s_polynomial<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    g: &Polynomial<F::Elem>,
) -> Polynomial<F::Elem> {
    let fld = ring.field();
    let (lf, lg) = (
        f.leading_monomial().expect("nonzero"),
        g.leading_monomial().expect("nonzero"),
    );
    let l = lf.lcm(&lg);
    let a = ring.mul_term(
        f,
        &lf.quotient_of(&l).expect("lcm"),
        &fld.inv(f.leading_coeff().expect("nonzero")),
    );
    let b = ring.mul_term(
        g,
        &lg.quotient_of(&l).expect("lcm"),
        &fld.inv(g.leading_coeff().expect("nonzero")),
    );
    ring.sub(&a, &b)
}

/// Buchberger's criterion with no shortcuts: every S-polynomial reduces to zero.
pub fn is_groebner_basis<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F::Elem>]) -> bool {
    let gens: Vec<_> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if !reduce(ring, &s_polynomial(ring, &gens[i], &gens[j]), &gens).is_zero() {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

impl Pair {
    fn key(&self) -> (u32, Monomial, usize, usize) {
        (self.lcm.degree(), self.lcm, self.i, self.j)
    }
}

struct State<E> {
    polys: Vec<Polynomial<E>>,
    lms: Vec<Monomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<E: Clone> State<E> {
    /// Gebauer–Möller update for the new element `h`.
    fn update(&mut self, h: Polynomial<E>) {
        let t = self.polys.len();
        let lh = h.leading_monomial().expect("nonzero");
        self.polys.push(h);
        self.lms.push(lh);
        self.active.push(true);

        let mut candidates: Vec<Pair> = (0..t)
            .filter(|&i| self.active[i])
            .map(|i| Pair {
                i,
                j: t,
                lcm: self.lms[i].lcm(&lh),
            })
            .collect();
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = candidates.pop() {
            let coprime = self.lms[p.i].is_coprime(&lh);
            let dominated = candidates
                .iter()
                .chain(kept.iter())
                .any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        kept.retain(|p| !self.lms[p.i].is_coprime(&lh));

        let lms = &self.lms;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm) && lms[p.i].lcm(&lh) != p.lcm && lms[p.j].lcm(&lh) != p.lcm)
        });
        self.pairs.extend(kept);

        for i in 0..t {
            if self.active[i] && lh.divides(&self.lms[i]) {
                self.active[i] = false;
            }
        }
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    order: MonomialOrder,
) -> GroebnerBasis<F::Elem> {
    let mut st = State {
        polys: Vec::new(),
        lms: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in gens {
        let h = reduce(ring, g, &st.polys);
        if !h.is_zero() {
            st.update(ring.monic(&h));
        }
    }
    while !st.pairs.is_empty() {
        let k = (0..st.pairs.len())
            .min_by_key(|&k| st.pairs[k].key())
            .expect("nonempty");
        let p = st.pairs.swap_remove(k);
        let s = s_polynomial(ring, &st.polys[p.i], &st.polys[p.j]);
        let h = reduce(ring, &s, &st.polys);
        if !h.is_zero() {
            st.update(ring.monic(&h));
        }
    }
    GroebnerBasis {
        gens: reduce_basis(ring, st.polys),
        order,
    }
}

/// Minimal, inter-reduced, monic, sorted by descending leading monomial.
fn reduce_basis<F: Field>(
    ring: &PolyRing<F>,
    polys: Vec<Polynomial<F::Elem>>,
) -> Vec<Polynomial<F::Elem>> {
    let mut polys: Vec<_> = polys.into_iter().filter(|p| !p.is_zero()).collect();
    if polys
        .iter()
        .any(|p| p.leading_monomial().is_some_and(|m| m.is_one()))
    {
        return vec![ring.one()];
    }
    polys.sort_by_key(|p| p.leading_monomial());
    let mut minimal: Vec<Polynomial<F::Elem>> = Vec::new();
    for p in polys {
        let lm = p.leading_monomial().expect("nonzero");
        if !minimal
            .iter()
            .any(|q| q.leading_monomial().expect("nonzero").divides(&lm))
        {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let p = &minimal[k];
        let head = ring.from_sorted(vec![p.terms()[0].clone()]);
        let tail = ring.from_sorted(p.terms()[1..].to_vec());
        let others: Vec<_> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, q)| q.clone())
            .collect();
        let reduced = ring.add(&head, &reduce(ring, &tail, &others));
        out.push(ring.monic(&reduced));
    }
    out.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::{PrimeField, Rationals};

    fn ring(n: usize) -> PolyRing<PrimeField> {
        PolyRing::for_graph(PrimeField::default(), n).unwrap()
    }

    #[test]
    fn reduction_examples() {
        let r = ring(3);
        let f12 = r.parse("x1*y2 - x2*y1").unwrap();
        let f13 = r.parse("x1*y3 - x3*y1").unwrap();
        assert!(reduce(&r, &f12, &[f12.clone()]).is_zero());
        let m = r.parse("x1*y2").unwrap();
        assert_eq!(reduce(&r, &m, &[f12.clone()]), r.parse("x2*y1").unwrap());
        // y3*f12 - y2*f13 = x3*y1*y2 - x2*y1*y3 by hand expansion
        let s = r.sub(
            &r.mul(&r.parse("y3").unwrap(), &f12),
            &r.mul(&r.parse("y2").unwrap(), &f13),
        );
        let nf = reduce(&r, &s, &[f12, f13]);
        assert_eq!(nf, r.parse("x3*y1*y2 - x2*y1*y3").unwrap());
        assert_eq!(r.format(&nf), "-x2*y1*y3 + x3*y1*y2");
    }

    #[test]
    fn division_replays_exactly() {
        let r = ring(3);
        let basis = vec![
            r.parse("x1*y2 - x2*y1").unwrap(),
            r.parse("x2*y3 - x3*y2").unwrap(),
        ];
        let f = r.parse("x1^2*y2*y3 + 3*x1*y3^2 - x2*y1*y2 + 7").unwrap();
        let (qs, rem) = divide(&r, &f, &basis);
        let mut replay = rem.clone();
        for (q, b) in qs.iter().zip(&basis) {
            replay = r.add(&replay, &r.mul(q, b));
        }
        assert_eq!(replay, f);
        for m in rem.monomials() {
            assert!(basis
                .iter()
                .all(|b| !b.leading_monomial().unwrap().divides(&m)));
        }
    }

    #[test]
    fn closed_path_generators_are_a_basis() {
        let r = ring(3);
        let gens = vec![
            r.parse("x1*y2 - x2*y1").unwrap(),
            r.parse("x2*y3 - x3*y2").unwrap(),
        ];
        let gb = buchberger(&r, &gens, MonomialOrder::Lex);
        assert_eq!(gb.gens(), &gens[..]);
        assert!(is_groebner_basis(&r, &gens));
    }

    #[test]
    fn star_basis_gains_a_cubic() {
        let r = ring(3);
        let gens = vec![
            r.parse("x1*y2 - x2*y1").unwrap(),
            r.parse("x1*y3 - x3*y1").unwrap(),
        ];
        assert!(!is_groebner_basis(&r, &gens));
        let gb = buchberger(&r, &gens, MonomialOrder::Lex);
        let printed: Vec<String> = gb.gens().iter().map(|g| r.format(g)).collect();
        assert_eq!(
            printed,
            vec!["x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y1*y3 - x3*y1*y2"]
        );
        assert!(is_groebner_basis(&r, gb.gens()));
    }

    #[test]
    fn principal_and_unit_ideals() {
        let r = ring(2);
        let f = r.parse("x1*y2 - x2*y1").unwrap();
        assert_eq!(
            buchberger(&r, &[f.clone()], MonomialOrder::Lex).gens(),
            &[f.clone()]
        );
        let neg = r.neg(&f);
        assert_eq!(buchberger(&r, &[neg], MonomialOrder::Lex).gens(), &[f]);
        let unit = buchberger(
            &r,
            &[r.parse("x1 + 1").unwrap(), r.parse("x1").unwrap()],
            MonomialOrder::Lex,
        );
        assert!(unit.is_unit());
        assert!(buchberger(&r, &[], MonomialOrder::Lex).is_empty());
    }

    #[test]
    fn rational_coefficients() {
        let r = PolyRing::for_graph(Rationals, 2).unwrap();
        let gens = vec![
            r.parse("2*x1 - 3*y1").unwrap(),
            r.parse("x1*x2 - y2^2").unwrap(),
        ];
        let gb = buchberger(&r, &gens, MonomialOrder::Lex);
        assert!(is_groebner_basis(&r, gb.gens()));
        assert_eq!(r.format(&gb.gens()[0]), "x1 - 3/2*y1");
        for g in &gens {
            assert!(reduce(&r, g, gb.gens()).is_zero());
        }
    }
}
