//! Coefficient fields: prime fields `GF(p)` and the rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Default characteristic for all computations.
pub const DEFAULT_PRIME: u32 = 32003;

/// Field operations on an element type. Implementors are small context values
/// (the prime, or nothing for `Q`) passed by reference to every operation.
pub trait Field: Clone + Send + Sync + fmt::Debug + 'static {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// `num / den`, or `None` when `den` vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Self::Elem>;
    /// Human-readable form; `GF(p)` prints the representative in `(-p/2, p/2]`.
    fn format(&self, a: &Self::Elem) -> String;
    fn characteristic(&self) -> u64;
    fn kind(&self) -> FieldKind;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    /// Rank of the matrix whose rows are sparse `(column, entry)` lists.
    fn rank(&self, rows: Vec<Vec<(usize, Self::Elem)>>) -> usize {
        gaussian_rank(self, rows)
    }
}

/// `GF(p)` for a prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    fn reduce_big(&self, v: &BigInt) -> u32 {
        let m = v.mod_floor(&BigInt::from(self.p));
        m.to_u32().expect("residue fits")
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (s % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + self.p as u64 - *b as u64;
        (s % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero in GF({})", self.p);
        // Fermat: a^(p-2)
        let mut base = *a as u64;
        let mut e = self.p as u64 - 2;
        let m = self.p as u64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        acc as u32
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<u32> {
        let d = self.reduce_big(den);
        if d == 0 {
            return None;
        }
        Some(self.div(&self.reduce_big(num), &d))
    }
    fn format(&self, a: &u32) -> String {
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn kind(&self) -> FieldKind {
        FieldKind::Prime(self.p)
    }
}

/// The rational numbers with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero in Q");
        a.recip()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<BigRational> {
        (!den.is_zero()).then(|| BigRational::new(num.clone(), den.clone()))
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn kind(&self) -> FieldKind {
        FieldKind::Rational
    }

    /// Fraction-free elimination: rows are cleared to primitive integer vectors
    /// and combined as `a * row - b * pivot`, dividing out the content each time.
    fn rank(&self, rows: Vec<Vec<(usize, BigRational)>>) -> usize {
        let int_rows = rows.into_iter().map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
            row.into_iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.numer() * (&l / v.denom())))
                .collect()
        });
        fraction_free_rank(int_rows)
    }
}

fn make_primitive(row: &mut [(usize, BigInt)]) {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
    if row.first().is_some_and(|(_, v)| v.is_negative()) {
        for (_, v) in row.iter_mut() {
            *v = -&*v;
        }
    }
}

fn fraction_free_rank(rows: impl Iterator<Item = Vec<(usize, BigInt)>>) -> usize {
    let mut pivots: std::collections::BTreeMap<usize, Vec<(usize, BigInt)>> = Default::default();
    for mut row in rows {
        row.sort_by_key(|(c, _)| *c);
        loop {
            let Some((lead, a)) = row.first().cloned() else {
                break;
            };
            let Some(piv) = pivots.get(&lead) else {
                make_primitive(&mut row);
                pivots.insert(lead, row);
                break;
            };
            let b = piv[0].1.clone();
            // row := b * row - a * piv
            let mut out = Vec::with_capacity(row.len() + piv.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < piv.len() {
                let ci = row.get(i).map(|t| t.0).unwrap_or(usize::MAX);
                let cj = piv.get(j).map(|t| t.0).unwrap_or(usize::MAX);
                let (c, v) = if ci < cj {
                    i += 1;
                    (ci, &b * &row[i - 1].1)
                } else if cj < ci {
                    j += 1;
                    (cj, -(&a * &piv[j - 1].1))
                } else {
                    i += 1;
                    j += 1;
                    (ci, &b * &row[i - 1].1 - &a * &piv[j - 1].1)
                };
                if !v.is_zero() {
                    out.push((c, v));
                }
            }
            make_primitive(&mut out);
            row = out;
        }
    }
    pivots.len()
}

/// Sparse row echelon reduction over an arbitrary field.
pub(crate) fn gaussian_rank<F: Field + ?Sized>(f: &F, rows: Vec<Vec<(usize, F::Elem)>>) -> usize {
    let mut pivots: std::collections::BTreeMap<usize, Vec<(usize, F::Elem)>> = Default::default();
    for mut row in rows {
        row.retain(|(_, v)| !f.is_zero(v));
        row.sort_by_key(|(c, _)| *c);
        loop {
            let Some((lead, a)) = row.first().cloned() else {
                break;
            };
            let Some(piv) = pivots.get(&lead) else {
                let inv = f.inv(&a);
                for (_, v) in row.iter_mut() {
                    *v = f.mul(v, &inv);
                }
                pivots.insert(lead, row);
                break;
            };
            // pivot rows are monic: row := row - a * piv
            let mut out = Vec::with_capacity(row.len() + piv.len());
            let (mut i, mut j) = (1, 1);
            while i < row.len() || j < piv.len() {
                let ci = row.get(i).map(|t| t.0).unwrap_or(usize::MAX);
                let cj = piv.get(j).map(|t| t.0).unwrap_or(usize::MAX);
                let (c, v) = if ci < cj {
                    i += 1;
                    (ci, row[i - 1].1.clone())
                } else if cj < ci {
                    j += 1;
                    (cj, f.neg(&f.mul(&a, &piv[j - 1].1)))
                } else {
                    i += 1;
                    j += 1;
                    (ci, f.sub(&row[i - 1].1, &f.mul(&a, &piv[j - 1].1)))
                };
                if !f.is_zero(&v) {
                    out.push((c, v));
                }
            }
            row = out;
        }
    }
    pivots.len()
}

/// Runtime choice of coefficient field, written `p<prime>` or `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    Prime(u32),
    Rational,
}

impl FieldKind {
    pub const DEFAULT: FieldKind = FieldKind::Prime(DEFAULT_PRIME);
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Prime(p) => write!(f, "p{p}"),
            FieldKind::Rational => write!(f, "Q"),
        }
    }
}

impl FromStr for FieldKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" || s == "QQ" {
            return Ok(FieldKind::Rational);
        }
        let digits = s
            .strip_prefix('p')
            .or_else(|| s.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| Error::Parse(format!("unknown field {s:?}; expected p<prime> or Q")))?;
        let p: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad characteristic in {s:?}")))?;
        PrimeField::new(p)?;
        Ok(FieldKind::Prime(p))
    }
}
