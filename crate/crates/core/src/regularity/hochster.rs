//! Betti numbers of squarefree monomial quotients by Hochster's formula:
//! `β_{i,σ}(S/I) = dim H̃_{|σ|-i-1}(Δ_σ)` for the Stanley–Reisner complex Δ.

use super::betti::BettiTable;
use super::simplicial::{reduced_homology_dims, SimplicialComplex};
use crate::graph::{induced_matching_number, is_weakly_chordal, Graph};
use crate::poly::{Field, Monomial, MonomialIdeal};
use crate::{Error, Result};

/// Graded Betti numbers of `S/I` for a squarefree monomial ideal `I`.
///
/// Only subsets of the generators' support matter, and among those only the
/// unions of generator supports: any other `σ` has a cone point in `Δ_σ`.
pub fn squarefree_betti_table<F: Field>(ideal: &MonomialIdeal, field: &F) -> Result<BettiTable> {
    let delta = SimplicialComplex::stanley_reisner(ideal)?;
    let mut table = BettiTable::new(field.kind());
    if ideal.is_unit() {
        return Ok(table);
    }
    let support = ideal.support();
    let gens: Vec<u32> = ideal.gens().iter().map(|m| m.support()).collect();
    let mut sigma = support;
    loop {
        let covered = gens
            .iter()
            .filter(|g| *g & !sigma == 0)
            .fold(0, |a, g| a | g);
        if covered == sigma {
            let size = sigma.count_ones() as usize;
            for (k, &dim) in reduced_homology_dims(&delta.restrict(sigma), field)
                .iter()
                .enumerate()
            {
                // entry k holds degree k - 1, so i = |σ| - k
                if dim > 0 {
                    table.add(size - k, size, dim as u64);
                }
            }
        }
        if sigma == 0 {
            break;
        }
        sigma = (sigma - 1) & support;
    }
    Ok(table)
}

/// `reg(S/I)` for a proper squarefree monomial ideal.
pub fn squarefree_monomial_regularity<F: Field>(ideal: &MonomialIdeal, field: &F) -> Result<usize> {
    squarefree_betti_table(ideal, field)?
        .regularity()
        .ok_or_else(|| Error::InvalidArgument("the unit ideal has a zero quotient".into()))
}

/// Edge ideal `(x_u x_v : {u,v} in E(H))` with vertex `v` as variable `v - 1`.
pub fn graph_edge_ideal(h: &Graph) -> MonomialIdeal {
    let gens = h
        .edges()
        .into_iter()
        .map(|(u, v)| Monomial::from_support(h.n(), 1 << (u - 1) | 1 << (v - 1)));
    MonomialIdeal::new(h.n(), gens)
}

/// `reg(S/I(H)) = indmatch(H)` for weakly chordal `H`; the value holds over every field.
pub fn weakly_chordal_edge_ideal_regularity(h: &Graph) -> Result<usize> {
    if !is_weakly_chordal(h) {
        return Err(Error::NotWeaklyChordal);
    }
    Ok(induced_matching_number(h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edge_ideals::ini_lex_graph;
    use crate::poly::{PrimeField, Rationals};

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn single_quadric() {
        let i = MonomialIdeal::new(4, [mono(&[1, 0, 0, 1])]);
        let t = squarefree_betti_table(&i, &PrimeField::default()).unwrap();
        assert_eq!(
            t.entries().collect::<Vec<_>>(),
            vec![((0, 0), 1), ((1, 2), 1)]
        );
        assert_eq!(squarefree_monomial_regularity(&i, &Rationals).unwrap(), 1);
    }

    #[test]
    fn initial_ideals_of_closed_graphs() {
        let f = PrimeField::default();
        let p3 = ini_lex_graph(&Graph::path(3).unwrap())
            .unwrap()
            .edge_ideal();
        assert_eq!(squarefree_monomial_regularity(&p3, &f).unwrap(), 2);
        let k3 = ini_lex_graph(&Graph::complete(3).unwrap())
            .unwrap()
            .edge_ideal();
        let t = squarefree_betti_table(&k3, &f).unwrap();
        assert_eq!(t.regularity(), Some(1));
        assert_eq!(t.get(1, 2), 3);
        assert_eq!(t.get(2, 3), 2);
    }

    #[test]
    fn weakly_chordal_shortcut() {
        let h = ini_lex_graph(&Graph::path(3).unwrap()).unwrap().to_graph();
        assert_eq!(weakly_chordal_edge_ideal_regularity(&h).unwrap(), 2);
        assert_eq!(
            weakly_chordal_edge_ideal_regularity(&Graph::path(2).unwrap()).unwrap(),
            1
        );
        let k4 = ini_lex_graph(&Graph::complete(4).unwrap())
            .unwrap()
            .to_graph();
        assert_eq!(weakly_chordal_edge_ideal_regularity(&k4).unwrap(), 1);
        assert_eq!(
            weakly_chordal_edge_ideal_regularity(&Graph::cycle(5).unwrap()),
            Err(Error::NotWeaklyChordal)
        );
    }

    #[test]
    fn rejects_non_squarefree_and_unit() {
        let sq = MonomialIdeal::new(2, [mono(&[2, 0])]);
        assert_eq!(
            squarefree_betti_table(&sq, &PrimeField::default()),
            Err(Error::NotSquarefree)
        );
        let unit = MonomialIdeal::new(2, [Monomial::one(2)]);
        assert!(squarefree_betti_table(&unit, &PrimeField::default())
            .unwrap()
            .is_zero());
        assert!(squarefree_monomial_regularity(&unit, &PrimeField::default()).is_err());
        let zero = MonomialIdeal::new(2, []);
        assert_eq!(
            squarefree_monomial_regularity(&zero, &PrimeField::default()).unwrap(),
            0
        );
    }
}
