//! Arithmetic in the prime fields GF(p), p ≤ 13, and the exponent monoid that
//! indexes multiplicative monoid homomorphisms `K → K`.
//!
//! Containers store residues as bare `u8` and carry a single [`PrimeField`];
//! [`Scalar`] pairs a residue with its field for checked, standalone use.

use std::fmt;

use crate::error::{Error, Result};

pub const SUPPORTED_PRIMES: [u8; 6] = [2, 3, 5, 7, 11, 13];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u8,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if SUPPORTED_PRIMES.iter().any(|&q| q as u32 == p) {
            Ok(PrimeField { p: p as u8 })
        } else {
            Err(Error::UnsupportedField(p))
        }
    }

    #[inline]
    pub fn p(self) -> u8 {
        self.p
    }

    #[inline]
    pub fn size(self) -> usize {
        self.p as usize
    }

    /// Reduces an arbitrary integer to its residue.
    #[inline]
    pub fn reduce(self, x: i64) -> u8 {
        x.rem_euclid(self.p as i64) as u8
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    pub fn inv(self, a: u8) -> Result<u8> {
        if a.is_multiple_of(self.p) {
            return Err(Error::DivisionByZero);
        }
        // a^(p-2) by Fermat
        Ok(self.pow(a, (self.p - 2) as u32))
    }

    /// `a^e` with the convention `0^0 = 1`.
    pub fn pow(self, a: u8, mut e: u32) -> u8 {
        let mut base = a % self.p;
        let mut acc = 1u8;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn elements(self) -> impl Iterator<Item = u8> + Clone {
        0..self.p
    }

    pub fn scalar(self, value: u32) -> Result<Scalar> {
        if value >= self.p as u32 {
            return Err(Error::Range {
                value: value as usize,
                bound: self.size(),
            });
        }
        Ok(Scalar {
            value: value as u8,
            field: self,
        })
    }

    pub fn zero(self) -> Scalar {
        Scalar {
            value: 0,
            field: self,
        }
    }

    pub fn one(self) -> Scalar {
        Scalar {
            value: 1,
            field: self,
        }
    }

    /// The exponent monoid `{0, …, q−1}` attached to this field.
    pub fn exponent_monoid(self) -> ExponentMonoid {
        ExponentMonoid { q: self.p }
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scalar {
    value: u8,
    field: PrimeField,
}

impl Scalar {
    pub fn value(self) -> u8 {
        self.value
    }

    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: Scalar) -> Result<PrimeField> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.p,
                right: other.field.p,
            });
        }
        Ok(self.field)
    }

    pub fn add(self, other: Scalar) -> Result<Scalar> {
        let k = self.same_field(other)?;
        Ok(Scalar {
            value: k.add(self.value, other.value),
            field: k,
        })
    }

    pub fn sub(self, other: Scalar) -> Result<Scalar> {
        let k = self.same_field(other)?;
        Ok(Scalar {
            value: k.sub(self.value, other.value),
            field: k,
        })
    }

    pub fn mul(self, other: Scalar) -> Result<Scalar> {
        let k = self.same_field(other)?;
        Ok(Scalar {
            value: k.mul(self.value, other.value),
            field: k,
        })
    }

    pub fn neg(self) -> Scalar {
        Scalar {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }

    pub fn inv(self) -> Result<Scalar> {
        Ok(Scalar {
            value: self.field.inv(self.value)?,
            field: self.field,
        })
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `{0, …, q−1}` under `⊕`, isomorphic to the monoid of multiplicative monoid
/// homomorphisms `K → K`. Exponent `0` is `c ↦ c⁰` (with `0⁰ = 1`), exponent
/// `q−1` is `c ↦ c^{q−1}` (vanishing at 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExponentMonoid {
    q: u8,
}

impl ExponentMonoid {
    pub fn new(q: u8) -> Result<Self> {
        PrimeField::new(q as u32)?;
        Ok(ExponentMonoid { q })
    }

    pub fn q(self) -> u8 {
        self.q
    }

    fn check(self, i: u8) -> Result<()> {
        if i >= self.q {
            return Err(Error::Range {
                value: i as usize,
                bound: self.q as usize,
            });
        }
        Ok(())
    }

    pub fn oplus(self, i: u8, j: u8) -> Result<u8> {
        self.check(i)?;
        self.check(j)?;
        Ok(self.oplus_unchecked(i, j))
    }

    #[inline]
    pub(crate) fn oplus_unchecked(self, i: u8, j: u8) -> u8 {
        let s = i + j;
        if s < self.q {
            s
        } else {
            s - (self.q - 1)
        }
    }

    /// `i ⊖ j`: the unique element of `{1, …, q−1}` congruent to `i − j`
    /// modulo `q − 1`. Requires `i ≥ 1`.
    pub fn ominus(self, i: u8, j: u8) -> Result<u8> {
        self.check(i)?;
        self.check(j)?;
        if i == 0 {
            return Err(Error::Range {
                value: 0,
                bound: self.q as usize,
            });
        }
        Ok(self.ominus_unchecked(i, j))
    }

    #[inline]
    pub(crate) fn ominus_unchecked(self, i: u8, j: u8) -> u8 {
        let m = (self.q - 1) as i16;
        ((i as i16 - j as i16 - 1).rem_euclid(m) + 1) as u8
    }

    /// Evaluates the homomorphism with exponent `e` at `c`.
    pub fn apply(self, e: u8, c: u8) -> u8 {
        let k = PrimeField { p: self.q };
        k.pow(c, e as u32)
    }

    /// Reduces a nonnegative exponent to the element of `{0, …, q−1}` that
    /// induces the same function `c ↦ c^e` on `K`.
    pub fn reduce_exponent(self, e: u32) -> u8 {
        if e == 0 {
            0
        } else {
            ((e - 1) % (self.q as u32 - 1) + 1) as u8
        }
    }
}
