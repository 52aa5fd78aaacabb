//! Exponent vectors packed one byte per variable into a `u128`.
//!
//! Variable 0 occupies the most significant byte, so comparing the packed
//! integers is exactly the lexicographic order with variable 0 largest.
//! Exponents are kept below 128, which makes byte-wise divisibility a single
//! subtraction.

use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

/// Maximum number of variables in a ring.
pub const MAX_VARS: usize = 16;

const HIGH_BITS: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;
const ONES: u128 = 0x0101_0101_0101_0101_0101_0101_0101_0101;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    packed: u128,
    nvars: u8,
}

#[inline]
fn shift(i: usize) -> u32 {
    ((MAX_VARS - 1 - i) * 8) as u32
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        Monomial {
            packed: 0,
            nvars: nvars as u8,
        }
    }

    /// The variable with index `i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut m = Monomial::one(nvars);
        m.packed = 1u128 << shift(i);
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut m = Monomial::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            assert!(e < 128, "exponent {e} too large");
            m.packed |= (e as u128) << shift(i);
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn exp(&self, i: usize) -> u32 {
        (self.packed >> shift(i) & 0xff) as u32
    }

    pub fn exponents(&self) -> Vec<u32> {
        (0..self.nvars()).map(|i| self.exp(i)).collect()
    }

    pub fn degree(&self) -> u32 {
        (self.packed.wrapping_mul(ONES) >> 120) as u32
    }

    pub fn is_one(&self) -> bool {
        self.packed == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let packed = self.packed + other.packed;
        debug_assert!(packed & HIGH_BITS == 0, "exponent overflow");
        Monomial {
            packed,
            nvars: self.nvars,
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        (other.packed | HIGH_BITS).wrapping_sub(self.packed) & HIGH_BITS == HIGH_BITS
    }

    /// `other / self` when `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial {
            packed: other.packed - self.packed,
            nvars: self.nvars,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..self.nvars() {
            let e = self.exp(i).max(other.exp(i));
            m.packed = m.packed & !(0xffu128 << shift(i)) | (e as u128) << shift(i);
        }
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..self.nvars() {
            let e = self.exp(i).min(other.exp(i));
            m.packed = m.packed & !(0xffu128 << shift(i)) | (e as u128) << shift(i);
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.gcd(other).is_one()
    }

    /// Bit `i` set iff variable `i` occurs.
    pub fn support(&self) -> u32 {
        (0..self.nvars())
            .filter(|&i| self.exp(i) > 0)
            .fold(0, |acc, i| acc | 1 << i)
    }

    pub fn is_squarefree(&self) -> bool {
        (0..self.nvars()).all(|i| self.exp(i) <= 1)
    }

    /// Square-free monomial with the given support mask.
    pub fn from_support(nvars: usize, mask: u32) -> Self {
        let exps: Vec<u32> = (0..nvars).map(|i| mask >> i & 1).collect();
        Monomial::from_exponents(&exps)
    }

    /// Moves into a ring with `extra` new variables placed before the existing ones.
    pub fn prepend_vars(&self, extra: usize) -> Monomial {
        assert!(self.nvars() + extra <= MAX_VARS);
        Monomial {
            packed: self.packed >> (8 * extra),
            nvars: (self.nvars() + extra) as u8,
        }
    }

    /// Inverse of [`Monomial::prepend_vars`]; `None` if a dropped variable occurs.
    pub fn drop_leading_vars(&self, count: usize) -> Option<Monomial> {
        let dropped = (0..count).any(|i| self.exp(i) > 0);
        (!dropped).then(|| Monomial {
            packed: self.packed << (8 * count),
            nvars: (self.nvars() - count) as u8,
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.packed
            .cmp(&other.packed)
            .then(self.nvars.cmp(&other.nvars))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

/// Lexicographic comparison with variable 0 largest.
pub fn lex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars != b.nvars {
        return Err(Error::VariableCount(a.nvars(), b.nvars()));
    }
    Ok(a.packed.cmp(&b.packed))
}
