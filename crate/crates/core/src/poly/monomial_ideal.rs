use super::groebner::GroebnerBasis;
use super::monomial::Monomial;

/// A monomial ideal stored by its minimal generators, sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Ideal generated by `gens`; redundant generators are dropped.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens
            .into_iter()
            .inspect(|m| assert_eq!(m.nvars(), nvars))
            .collect();
        all.sort_by_key(|m| (m.degree(), *m));
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            if !kept.iter().any(|k| k.divides(&m)) {
                kept.push(m);
            }
        }
        kept.sort_by(|a, b| b.cmp(a));
        MonomialIdeal { nvars, gens: kept }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|m| m.is_one())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|m| m.is_squarefree())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Union of the supports of the generators, as a variable bitmask.
    pub fn support(&self) -> u32 {
        self.gens.iter().fold(0, |acc, m| acc | m.support())
    }
}

/// Initial ideal of the ideal with basis `gb`, minimally generated.
pub fn initial_ideal<E: Clone>(nvars: usize, gb: &GroebnerBasis<E>) -> MonomialIdeal {
    MonomialIdeal::new(nvars, gb.leading_monomials())
}
