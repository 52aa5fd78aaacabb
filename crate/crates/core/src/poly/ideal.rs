//! Ideal membership, sums, equality and intersections.

use super::field::Field;
use super::groebner::{buchberger, reduce, GroebnerBasis, MonomialOrder};
use super::polynomial::{PolyRing, Polynomial};
use crate::{Error, Result};

/// Largest ring (excluding the auxiliary variable) in which intersections are computed.
pub const MAX_INTERSECTION_VARS: usize = 8;

pub fn ideal_membership<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    gb: &GroebnerBasis<F::Elem>,
) -> bool {
    reduce(ring, f, gb.gens()).is_zero()
}

/// Every element of `gens` lies in the ideal with basis `gb`.
pub fn contains_all<F: Field>(
    ring: &PolyRing<F>,
    gb: &GroebnerBasis<F::Elem>,
    gens: &[Polynomial<F::Elem>],
) -> bool {
    gens.iter().all(|g| ideal_membership(ring, g, gb))
}

pub fn ideal_sum<E: Clone>(a: &[Polynomial<E>], b: &[Polynomial<E>]) -> Vec<Polynomial<E>> {
    a.iter().chain(b).cloned().collect()
}

/// Equality of ideals as equality of reduced lex Gröbner bases.
pub fn ideal_equal<F: Field>(
    ring: &PolyRing<F>,
    a: &[Polynomial<F::Elem>],
    b: &[Polynomial<F::Elem>],
) -> bool {
    buchberger(ring, a, MonomialOrder::Lex) == buchberger(ring, b, MonomialOrder::Lex)
}

pub fn unit_ideal<F: Field>(ring: &PolyRing<F>) -> Vec<Polynomial<F::Elem>> {
    vec![ring.one()]
}

/// `I ∩ J`, computed by eliminating `t` from `t*I + (1 - t)*J`.
/// Returns the reduced Gröbner basis of the intersection.
pub fn ideal_intersection<F: Field>(
    ring: &PolyRing<F>,
    a: &[Polynomial<F::Elem>],
    b: &[Polynomial<F::Elem>],
) -> Result<Vec<Polynomial<F::Elem>>> {
    if ring.nvars() > MAX_INTERSECTION_VARS {
        return Err(Error::ScaleGuard(format!(
            "ideal intersection limited to {MAX_INTERSECTION_VARS} variables, ring has {}",
            ring.nvars()
        )));
    }
    let big = ring.with_leading_vars(&["t"])?;
    let t = big.var(0);
    let one_minus_t = big.sub(&big.one(), &t);
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for f in a {
        gens.push(big.mul(&t, &big.embed_from(ring, f)));
    }
    for g in b {
        gens.push(big.mul(&one_minus_t, &big.embed_from(ring, g)));
    }
    let gb = buchberger(&big, &gens, MonomialOrder::Elimination { aux: 1 });
    let kept: Vec<_> = gb
        .gens()
        .iter()
        .filter_map(|g| big.restrict_to(ring, g))
        .collect();
    // The t-free part of a lex basis with t first is already the reduced basis.
    Ok(kept)
}

/// Intersection of a family of ideals; the empty family gives the unit ideal.
pub fn intersect_all<F: Field>(
    ring: &PolyRing<F>,
    ideals: &[Vec<Polynomial<F::Elem>>],
) -> Result<Vec<Polynomial<F::Elem>>> {
    let Some((first, rest)) = ideals.split_first() else {
        return Ok(unit_ideal(ring));
    };
    let mut acc = buchberger(ring, first, MonomialOrder::Lex).into_gens();
    for next in rest {
        acc = ideal_intersection(ring, &acc, next)?;
    }
    Ok(acc)
}
