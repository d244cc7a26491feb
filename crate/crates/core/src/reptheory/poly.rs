//! Functions `K^n → K` as reduced polynomials (every exponent ≤ q−1).

use std::fmt;

use super::operators::inverse_vandermonde;
use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Coefficients indexed by exponent vectors in `{0, …, q−1}^n`, read as a
/// base-`q` number with the first variable most significant. Points of `K^n`
/// in function tables use the same indexing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedPolynomial {
    field: PrimeField,
    n: usize,
    coeffs: Vec<u8>,
}

fn digits(q: usize, n: usize, mut index: usize) -> Vec<u8> {
    let mut out = vec![0u8; n];
    for slot in out.iter_mut().rev() {
        *slot = (index % q) as u8;
        index /= q;
    }
    out
}

impl ReducedPolynomial {
    pub fn zero(field: PrimeField, n: usize) -> Self {
        ReducedPolynomial {
            field,
            n,
            coeffs: vec![0; field.size().pow(n as u32)],
        }
    }

    /// Reduces `Σ c·x^e` with arbitrary exponents, replacing each positive
    /// exponent by the one in `{1, …, q−1}` defining the same function.
    pub fn reduce(field: PrimeField, n: usize, terms: &[(Vec<u32>, u8)]) -> Result<Self> {
        let monoid = field.exponent_monoid();
        let q = field.size();
        let mut out = Self::zero(field, n);
        for (exps, c) in terms {
            if exps.len() != n {
                return Err(Error::Shape(format!("exponent vector {exps:?} has length != {n}")));
            }
            let idx = exps
                .iter()
                .fold(0usize, |acc, &e| acc * q + monoid.reduce_exponent(e) as usize);
            out.coeffs[idx] = field.add(out.coeffs[idx], c % field.p());
        }
        Ok(out)
    }

    pub fn from_coefficients(field: PrimeField, n: usize, coeffs: Vec<u8>) -> Result<Self> {
        let len = field.size().pow(n as u32);
        if coeffs.len() != len {
            return Err(Error::Shape(format!("{n} variables need {len} coefficients")));
        }
        Ok(ReducedPolynomial { field, n, coeffs })
    }

    /// The unique reduced polynomial inducing `values` (one entry per point
    /// of `K^n`), by inverting the univariate evaluation matrix along each
    /// axis.
    pub fn interpolate(field: PrimeField, n: usize, values: &[u8]) -> Result<Self> {
        let q = field.size();
        if values.len() != q.pow(n as u32) {
            return Err(Error::Shape(format!(
                "a table on K^{n} has {} entries, got {}",
                q.pow(n as u32),
                values.len()
            )));
        }
        let inv = inverse_vandermonde(field);
        let mut cur = values.to_vec();
        let mut line = vec![0u8; q];
        for axis in 0..n {
            let stride = q.pow((n - 1 - axis) as u32);
            for base in 0..cur.len() {
                if !(base / stride).is_multiple_of(q) {
                    continue;
                }
                for (s, slot) in line.iter_mut().enumerate() {
                    *slot = cur[base + s * stride];
                }
                for e in 0..q {
                    let mut acc = 0u8;
                    for (s, &x) in line.iter().enumerate() {
                        acc = field.add(acc, field.mul(inv.get(e, s), x));
                    }
                    cur[base + e * stride] = acc;
                }
            }
        }
        Ok(ReducedPolynomial {
            field,
            n,
            coeffs: cur,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn variables(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn coefficient(&self, exps: &[u8]) -> u8 {
        let q = self.field.size();
        self.coeffs[exps.iter().fold(0usize, |acc, &e| acc * q + e as usize)]
    }

    /// Nonzero terms as (exponent vector, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (Vec<u8>, u8)> + '_ {
        let q = self.field.size();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (digits(q, self.n, i), c))
    }

    /// Total degree of the reduced form; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms().map(|(e, _)| e.iter().map(|&x| x as usize).sum()).max()
    }

    pub fn eval(&self, x: &[u8]) -> u8 {
        let k = self.field;
        self.terms().fold(0, |acc, (e, c)| {
            let term = e
                .iter()
                .zip(x)
                .fold(c, |t, (&ei, &xi)| k.mul(t, k.pow(xi, ei as u32)));
            k.add(acc, term)
        })
    }

    /// Values at every point of `K^n`.
    pub fn table(&self) -> Vec<u8> {
        let q = self.field.size();
        (0..self.coeffs.len()).map(|i| self.eval(&digits(q, self.n, i))).collect()
    }
}

impl fmt::Display for ReducedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (e, c) in self.terms() {
            let mut factors: Vec<String> = Vec::new();
            if c != 1 || e.iter().all(|&x| x == 0) {
                factors.push(c.to_string());
            }
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{x}", i + 1)),
                }
            }
            parts.push(factors.join("*"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
