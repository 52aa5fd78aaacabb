use std::collections::BTreeMap;

use super::field::Field;
use super::monomial::{Monomial, MAX_VARS};
use crate::{Error, Result};

/// A polynomial as a list of terms sorted by descending monomial, with no zero
/// coefficients. Arithmetic goes through the owning [`PolyRing`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<E> {
    nvars: usize,
    terms: Vec<(Monomial, E)>,
}

impl<E> Polynomial<E> {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Option<&E> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().map(|t| t.0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|t| t.0.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }
}

/// Polynomial ring `K[v_0, ..., v_{m-1}]` with lexicographic order `v_0 > v_1 > ...`.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    names: Vec<String>,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, names: Vec<String>) -> Result<Self> {
        if names.len() > MAX_VARS {
            return Err(Error::ScaleGuard(format!(
                "{} variables exceed the limit of {MAX_VARS}",
                names.len()
            )));
        }
        Ok(PolyRing { field, names })
    }

    /// `K[x1..xn, y1..yn]` ordered `x1 > ... > xn > y1 > ... > yn`.
    pub fn for_graph(field: F, n: usize) -> Result<Self> {
        let names = (1..=n)
            .map(|i| format!("x{i}"))
            .chain((1..=n).map(|i| format!("y{i}")))
            .collect();
        PolyRing::new(field, names)
    }

    /// A copy with extra variables placed first (and hence largest).
    pub fn with_leading_vars(&self, extra: &[&str]) -> Result<Self> {
        let names = extra
            .iter()
            .map(|s| s.to_string())
            .chain(self.names.iter().cloned())
            .collect();
        PolyRing::new(self.field.clone(), names)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn zero(&self) -> Polynomial<F::Elem> {
        Polynomial {
            nvars: self.nvars(),
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial<F::Elem> {
        self.term(Monomial::one(self.nvars()), self.field.one())
    }

    pub fn var(&self, i: usize) -> Polynomial<F::Elem> {
        self.term(Monomial::var(self.nvars(), i), self.field.one())
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> Polynomial<F::Elem> {
        assert_eq!(m.nvars(), self.nvars());
        if self.field.is_zero(&c) {
            self.zero()
        } else {
            Polynomial {
                nvars: self.nvars(),
                terms: vec![(m, c)],
            }
        }
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial<F::Elem> {
        self.term(m, self.field.one())
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(
        &self,
        terms: impl IntoIterator<Item = (Monomial, F::Elem)>,
    ) -> Polynomial<F::Elem> {
        let mut acc: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), self.nvars());
            match acc.get_mut(&m) {
                Some(v) => *v = self.field.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        self.from_map(acc)
    }

    pub(crate) fn from_map(&self, map: BTreeMap<Monomial, F::Elem>) -> Polynomial<F::Elem> {
        let terms = map
            .into_iter()
            .rev()
            .filter(|(_, c)| !self.field.is_zero(c))
            .collect();
        Polynomial {
            nvars: self.nvars(),
            terms,
        }
    }

    /// Terms already strictly descending and nonzero.
    pub(crate) fn from_sorted(&self, terms: Vec<(Monomial, F::Elem)>) -> Polynomial<F::Elem> {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        Polynomial {
            nvars: self.nvars(),
            terms,
        }
    }

    fn merge(
        &self,
        a: &Polynomial<F::Elem>,
        b: &Polynomial<F::Elem>,
        combine: impl Fn(&F::Elem, &F::Elem) -> F::Elem,
        only_b: impl Fn(&F::Elem) -> F::Elem,
    ) -> Polynomial<F::Elem> {
        let f = &self.field;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() || j < b.terms.len() {
            match (a.terms.get(i), b.terms.get(j)) {
                (Some(ta), Some(tb)) if ta.0 == tb.0 => {
                    let c = combine(&ta.1, &tb.1);
                    if !f.is_zero(&c) {
                        out.push((ta.0, c));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(ta), Some(tb)) if ta.0 > tb.0 => {
                    out.push(ta.clone());
                    i += 1;
                }
                (Some(ta), None) => {
                    out.push(ta.clone());
                    i += 1;
                }
                (_, Some(tb)) => {
                    out.push((tb.0, only_b(&tb.1)));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Polynomial {
            nvars: self.nvars(),
            terms: out,
        }
    }

    pub fn add(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let f = &self.field;
        self.merge(a, b, |x, y| f.add(x, y), |y| y.clone())
    }

    pub fn sub(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let f = &self.field;
        self.merge(a, b, |x, y| f.sub(x, y), |y| f.neg(y))
    }

    pub fn neg(&self, a: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let terms = a
            .terms
            .iter()
            .map(|(m, c)| (*m, self.field.neg(c)))
            .collect();
        Polynomial {
            nvars: a.nvars,
            terms,
        }
    }

    pub fn scale(&self, a: &Polynomial<F::Elem>, c: &F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        let terms = a
            .terms
            .iter()
            .map(|(m, x)| (*m, self.field.mul(x, c)))
            .collect();
        Polynomial {
            nvars: a.nvars,
            terms,
        }
    }

    /// `c * m * a`.
    pub fn mul_term(
        &self,
        a: &Polynomial<F::Elem>,
        m: &Monomial,
        c: &F::Elem,
    ) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        let terms = a
            .terms
            .iter()
            .map(|(t, x)| (t.mul(m), self.field.mul(x, c)))
            .collect();
        Polynomial {
            nvars: a.nvars,
            terms,
        }
    }

    pub fn mul(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let mut acc: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m = ma.mul(mb);
                let c = self.field.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = self.field.add(v, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        self.from_map(acc)
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self, a: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        match a.leading_coeff() {
            None => a.clone(),
            Some(c) if self.field.is_one(c) => a.clone(),
            Some(c) => self.scale(a, &self.field.inv(c)),
        }
    }

    /// Image of a polynomial from `src`, whose variables are this ring's last
    /// `src.nvars()` variables.
    pub fn embed_from(&self, src: &PolyRing<F>, p: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let extra = self.nvars() - src.nvars();
        let terms = p
            .terms
            .iter()
            .map(|(m, c)| (m.prepend_vars(extra), c.clone()))
            .collect();
        Polynomial {
            nvars: self.nvars(),
            terms,
        }
    }

    /// Inverse of [`PolyRing::embed_from`]; `None` if a leading variable occurs.
    pub fn restrict_to(
        &self,
        dst: &PolyRing<F>,
        p: &Polynomial<F::Elem>,
    ) -> Option<Polynomial<F::Elem>> {
        let extra = self.nvars() - dst.nvars();
        let terms = p
            .terms
            .iter()
            .map(|(m, c)| m.drop_leading_vars(extra).map(|m| (m, c.clone())))
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial {
            nvars: dst.nvars(),
            terms,
        })
    }
}
