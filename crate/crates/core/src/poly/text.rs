//! Text syntax for polynomials: `x1*y2 - x2*y1`, `3*x1*y2^2`, `-1/2*y3`.
//!
//! Terms are printed in descending lex order; a coefficient of one is omitted
//! on non-constant terms. Parsing accepts the same syntax with arbitrary
//! whitespace and repeated numeric factors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::field::Field;
use super::monomial::Monomial;
use super::polynomial::{PolyRing, Polynomial};
use crate::{Error, Result};

impl<F: Field> PolyRing<F> {
    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for i in 0..self.nvars() {
            match m.exp(i) {
                0 => {}
                1 => parts.push(self.names()[i].clone()),
                e => parts.push(format!("{}^{e}", self.names()[i])),
            }
        }
        parts.join("*")
    }

    pub fn format(&self, p: &Polynomial<F::Elem>) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.terms().iter().enumerate() {
            let coeff = self.field().format(c);
            let (negative, abs) = match coeff.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, coeff),
            };
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if m.is_one() {
                out.push_str(&abs);
            } else if abs == "1" {
                out.push_str(&self.format_monomial(m));
            } else {
                out.push_str(&abs);
                out.push('*');
                out.push_str(&self.format_monomial(m));
            }
        }
        out
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial<F::Elem>> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for k in 1..=bytes.len() {
            let boundary = k == bytes.len()
                || ((bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'^');
            if boundary {
                terms.push(self.parse_term(&s[start..k])?);
                start = k;
            }
        }
        Ok(self.from_terms(terms))
    }

    fn parse_term(&self, t: &str) -> Result<(Monomial, F::Elem)> {
        let (negative, body) = match t.as_bytes().first() {
            Some(b'-') => (true, &t[1..]),
            Some(b'+') => (false, &t[1..]),
            _ => (false, t),
        };
        if body.is_empty() {
            return Err(Error::Parse(format!("empty term in {t:?}")));
        }
        let mut coeff = BigRational::one();
        let mut exps = vec![0u32; self.nvars()];
        for factor in body.split('*') {
            if factor.is_empty() {
                return Err(Error::Parse(format!("empty factor in {t:?}")));
            }
            if factor.starts_with(|c: char| c.is_ascii_digit()) {
                coeff *= parse_rational(factor)?;
                continue;
            }
            let (name, power) = match factor.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor, 1),
            };
            let i = self
                .var_index(name)
                .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
            exps[i] += power;
        }
        if exps.iter().any(|&e| e >= 128) {
            return Err(Error::Parse(format!("exponent too large in {t:?}")));
        }
        if negative {
            coeff = -coeff;
        }
        let c = self
            .field()
            .from_ratio(coeff.numer(), coeff.denom())
            .ok_or_else(|| {
                Error::Parse(format!("denominator vanishes in {:?}", self.field().kind()))
            })?;
        Ok((Monomial::from_exponents(&exps), c))
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad coefficient {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (
            a.parse::<BigInt>().map_err(|_| bad())?,
            b.parse::<BigInt>().map_err(|_| bad())?,
        ),
        None => (s.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
    };
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    #[test]
    fn prints_binomials() {
        let r = PolyRing::for_graph(PrimeField::default(), 3).unwrap();
        let f = r.parse("x1*y2 - x2*y1").unwrap();
        assert_eq!(r.format(&f), "x1*y2 - x2*y1");
        let g = r.parse("-y1*x3*y2 + 3*x2 * y1 * y3^2 + 5").unwrap();
        assert_eq!(r.format(&g), "3*x2*y1*y3^2 - x3*y1*y2 + 5");
        assert_eq!(r.format(&r.zero()), "0");
        assert_eq!(r.format(&r.parse("x1 - x1").unwrap()), "0");
    }

    #[test]
    fn rationals() {
        let r = PolyRing::for_graph(Rationals, 2).unwrap();
        let f = r.parse("1/2*x1 - 3/4*y2 + 2*1/3").unwrap();
        assert_eq!(r.format(&f), "1/2*x1 - 3/4*y2 + 2/3");
        let gf = PolyRing::for_graph(PrimeField::new(7).unwrap(), 2).unwrap();
        assert_eq!(gf.format(&gf.parse("1/2*x1").unwrap()), "-3*x1");
    }

    #[test]
    fn parse_errors() {
        let r = PolyRing::for_graph(Rationals, 2).unwrap();
        assert!(r.parse("x3").is_err());
        assert!(r.parse("x1**y1").is_err());
        assert!(r.parse("").is_err());
        assert!(r.parse("1/0*x1").is_err());
        assert!(r.parse("x1 +").is_err());
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(terms in proptest::collection::vec((proptest::collection::vec(0u32..3, 6), -5i64..6), 0..6)) {
            let r = PolyRing::for_graph(Rationals, 3).unwrap();
            let p = r.from_terms(terms.iter().map(|(e, c)| (Monomial::from_exponents(e), r.field().from_i64(*c))));
            prop_assert_eq!(r.parse(&r.format(&p)).unwrap(), p.clone());
            let q = PolyRing::for_graph(PrimeField::default(), 3).unwrap();
            let pq = q.from_terms(terms.iter().map(|(e, c)| (Monomial::from_exponents(e), q.field().from_i64(*c))));
            prop_assert_eq!(q.parse(&q.format(&pq)).unwrap(), pq);
        }
    }
}
