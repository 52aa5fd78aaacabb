//! Castelnuovo–Mumford regularity and graded Betti numbers.
//!
//! Two independent engines: Hochster's formula for squarefree monomial
//! ideals, and a Schreyer resolution for arbitrary homogeneous ideals.

mod betti;
mod hochster;
mod resolution;
mod simplicial;

pub use betti::BettiTable;
pub use hochster::{
    graph_edge_ideal, squarefree_betti_table, squarefree_monomial_regularity,
    weakly_chordal_edge_ideal_regularity,
};
pub use resolution::{
    graded_betti_numbers, SchreyerResolution, MAX_FRAME_SIZE, MAX_RESOLUTION_VARS,
};
pub use simplicial::{reduced_homology_dims, SimplicialComplex, MAX_GROUND};

use crate::edge_ideals::binomial_generators;
use crate::graph::{connected_components, Graph};
use crate::poly::{buchberger, initial_ideal, Field, FieldKind, MonomialOrder, PolyRing};
use crate::Result;

/// Runs `$body` with `$f` bound to the field named by `$kind`.
#[macro_export]
macro_rules! with_field {
    ($kind:expr, |$f:ident| $body:expr) => {
        match $kind {
            $crate::poly::FieldKind::Prime(p) => {
                let $f = $crate::poly::PrimeField::new(p)?;
                $body
            }
            $crate::poly::FieldKind::Rational => {
                let $f = $crate::poly::Rationals;
                $body
            }
        }
    };
}

/// Betti table of `S/J_G` over `field`.
pub fn binomial_betti_table<F: Field>(field: F, g: &Graph) -> Result<BettiTable> {
    let ring = PolyRing::for_graph(field, g.n())?;
    graded_betti_numbers(&ring, &binomial_generators(&ring, g)?)
}

/// Betti table of `S/in_lex(J_G)` by Hochster's formula, falling back to the
/// resolution when the initial ideal is not squarefree.
pub fn initial_betti_table<F: Field>(field: F, g: &Graph) -> Result<BettiTable> {
    let ring = PolyRing::for_graph(field, g.n())?;
    let gb = buchberger(&ring, &binomial_generators(&ring, g)?, MonomialOrder::Lex);
    let init = initial_ideal(ring.nvars(), &gb);
    if init.is_squarefree() {
        return squarefree_betti_table(&init, ring.field());
    }
    let gens: Vec<_> = init.gens().iter().map(|m| ring.monomial(*m)).collect();
    graded_betti_numbers(&ring, &gens)
}

fn per_component(g: &Graph, mut reg: impl FnMut(&Graph) -> Result<usize>) -> Result<usize> {
    let mut sum = 0;
    for c in connected_components(g) {
        if c.len() > 1 {
            sum += reg(&g.induced_subgraph(c)?.0)?;
        }
    }
    Ok(sum)
}

fn regularity_of(table: BettiTable) -> usize {
    table.regularity().expect("J_G is a proper ideal")
}

/// `reg(S/J_G)` over the given field, summed over connected components.
pub fn binomial_regularity(g: &Graph, field: FieldKind) -> Result<usize> {
    per_component(g, |c| {
        Ok(regularity_of(with_field!(
            field,
            |f| binomial_betti_table(f, c)
        )?))
    })
}

/// `reg(S/in_lex(J_G))` over the given field, summed over connected components.
pub fn initial_regularity(g: &Graph, field: FieldKind) -> Result<usize> {
    per_component(g, |c| {
        Ok(regularity_of(with_field!(field, |f| initial_betti_table(
            f, c
        ))?))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PrimeField;

    #[test]
    fn binomial_regularity_examples() {
        let p = FieldKind::DEFAULT;
        assert_eq!(binomial_regularity(&Graph::path(2).unwrap(), p).unwrap(), 1);
        for n in 2..=5 {
            assert_eq!(
                binomial_regularity(&Graph::path(n).unwrap(), p).unwrap(),
                n - 1
            );
        }
        assert_eq!(
            binomial_regularity(&Graph::complete(3).unwrap(), FieldKind::Rational).unwrap(),
            1
        );
        let claw = binomial_regularity(&Graph::star(3).unwrap(), p).unwrap();
        assert!((2..=3).contains(&claw));
        let two = Graph::from_edges(5, &[(1, 2), (3, 4), (4, 5)]).unwrap();
        assert_eq!(binomial_regularity(&two, p).unwrap(), 3);
        assert_eq!(binomial_regularity(&Graph::new(3).unwrap(), p).unwrap(), 0);
    }

    #[test]
    fn initial_regularity_examples() {
        let p = FieldKind::DEFAULT;
        assert_eq!(initial_regularity(&Graph::path(3).unwrap(), p).unwrap(), 2);
        assert_eq!(
            initial_regularity(&Graph::complete(3).unwrap(), p).unwrap(),
            1
        );
    }

    #[test]
    fn betti_table_of_a_path() {
        let t = binomial_betti_table(PrimeField::default(), &Graph::path(3).unwrap()).unwrap();
        // complete intersection of two quadrics
        assert_eq!(
            t.entries().collect::<Vec<_>>(),
            vec![((0, 0), 1), ((1, 2), 2), ((2, 4), 1)]
        );
    }
}
