//! The polynomial representations `T^d` (tensor powers) and `S^d`
//! (symmetric powers) of `GL`, their weight decomposition under diagonal
//! matrices, the one-parameter operators `F_{ij}[b]`, reduced polynomials and
//! the Schur algebra `A_{≤d}(U)`.
//!
//! Coordinates are 0-based throughout: `g_{ij}(s) = I + s·E_{ij}` sends
//! `e_j` to `e_j + s·e_i`.

mod operators;
mod poly;
mod schur;
mod text;

use std::collections::BTreeMap;
use std::fmt;

use crate::budget::{pow_sat, Budget};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::Matrix;

pub use operators::{
    bookkeeping_holds, f_coefficients, f_coefficients_using, f_injectivity_check, f_operator, inverse_vandermonde,
    is_maximally_spread_out, one_parameter, spread_out, swap_identity_holds, SpreadOut,
};
pub use poly::ReducedPolynomial;
pub use schur::{SchurAlgebra, SchurElement};
pub use text::{format_rep_vector, parse_rep_vector};

/// Largest degree supported for either family.
pub const MAX_DEGREE: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Representation {
    TensorPower(usize),
    SymPower(usize),
}

impl Representation {
    pub fn degree(self) -> usize {
        match self {
            Representation::TensorPower(d) | Representation::SymPower(d) => d,
        }
    }

    fn check(self) -> Result<()> {
        if self.degree() > MAX_DEGREE {
            return Err(Error::Range {
                value: self.degree(),
                bound: MAX_DEGREE + 1,
            });
        }
        Ok(())
    }

    pub fn dim(self, n: usize) -> usize {
        let d = self.degree();
        match self {
            Representation::TensorPower(_) => n.pow(d as u32),
            // C(n + d − 1, d)
            Representation::SymPower(_) => {
                let mut acc = 1usize;
                for i in 0..d {
                    acc = acc * (n + i) / (i + 1);
                }
                acc
            }
        }
    }

    /// Basis monomials as index tuples: all of `[n]^d` row-major for `T^d`,
    /// sorted multisets in lexicographic order for `S^d`.
    pub fn basis(self, n: usize) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut out = Vec::with_capacity(self.dim(n));
        let mut idx = vec![0usize; d];
        if d > 0 && n == 0 {
            return out;
        }
        loop {
            let keep = match self {
                Representation::TensorPower(_) => true,
                Representation::SymPower(_) => idx.windows(2).all(|w| w[0] <= w[1]),
            };
            if keep {
                out.push(idx.clone());
            }
            let mut a = d;
            loop {
                if a == 0 {
                    return out;
                }
                a -= 1;
                idx[a] += 1;
                if idx[a] < n {
                    break;
                }
                idx[a] = 0;
            }
        }
    }

    /// Position in [`basis`](Self::basis) of the monomial `e_{i₁}⋯e_{i_d}`.
    pub fn index_of(self, n: usize, monomial: &[usize]) -> usize {
        match self {
            Representation::TensorPower(_) => monomial.iter().fold(0, |acc, &i| acc * n + i),
            Representation::SymPower(_) => {
                let mut sorted = monomial.to_vec();
                sorted.sort_unstable();
                // multisets before `sorted` in lexicographic order
                let d = sorted.len();
                let mut rank = 0;
                let mut lo = 0;
                for (pos, &v) in sorted.iter().enumerate() {
                    let rest = d - pos - 1;
                    for smaller in lo..v {
                        rank += Representation::SymPower(rest).dim(n - smaller);
                    }
                    lo = v;
                }
                rank
            }
        }
    }

    /// For each tuple of `[m]^d` (row-major), the basis position of its image
    /// under the multiplication `T^d → P`.
    fn fold_table(self, m: usize) -> Vec<usize> {
        let tuples = Representation::TensorPower(self.degree()).basis(m);
        tuples.iter().map(|t| self.index_of(m, t)).collect()
    }

    pub fn zero(self, field: PrimeField, n: usize) -> RepVector {
        RepVector {
            field,
            rep: self,
            n,
            coords: vec![0; self.dim(n)],
        }
    }

    pub fn basis_vector(self, field: PrimeField, n: usize, monomial: &[usize]) -> Result<RepVector> {
        self.check()?;
        if monomial.len() != self.degree() || monomial.iter().any(|&i| i >= n) {
            return Err(Error::Index(format!(
                "monomial {monomial:?} is not a degree-{} monomial in {n} variables",
                self.degree()
            )));
        }
        let mut v = self.zero(field, n);
        v.coords[self.index_of(n, monomial)] = 1;
        Ok(v)
    }

    /// Every basis vector of `P(K^n)`, in basis order.
    pub fn basis_vectors(self, field: PrimeField, n: usize) -> Vec<RepVector> {
        (0..self.dim(n))
            .map(|k| {
                let mut v = self.zero(field, n);
                v.coords[k] = 1;
                v
            })
            .collect()
    }

    /// `P(φ)v` for `φ: K^n → K^m`.
    pub fn apply(self, phi: &Matrix, v: &RepVector) -> Result<RepVector> {
        if v.rep != self {
            return Err(Error::Precondition(format!("vector of {:?} given to {self:?}", v.rep)));
        }
        if phi.field() != v.field {
            return Err(Error::FieldMismatch {
                left: phi.field().p(),
                right: v.field.p(),
            });
        }
        if phi.cols() != v.n {
            return Err(Error::Shape(format!(
                "map with {} columns applied to a vector over K^{}",
                phi.cols(),
                v.n
            )));
        }
        Ok(self.apply_unchecked(phi, v))
    }

    pub(crate) fn apply_unchecked(self, phi: &Matrix, v: &RepVector) -> RepVector {
        let k = v.field;
        let m = phi.rows();
        let d = self.degree();
        let fold = self.fold_table(m);
        let basis = self.basis(v.n);
        let mut out = self.zero(k, m);
        let mut acc: Vec<u8> = Vec::new();
        for (mono, &c) in basis.iter().zip(&v.coords) {
            if c == 0 {
                continue;
            }
            // Kronecker product of the images φ e_{i₁}, …, φ e_{i_d}
            acc.clear();
            acc.push(c);
            for &i in mono.iter().take(d) {
                let col = phi.column(i);
                let mut next = Vec::with_capacity(acc.len() * m);
                for &a in &acc {
                    next.extend(col.iter().map(|&x| k.mul(a, x)));
                }
                acc = next;
            }
            for (t, &x) in acc.iter().enumerate() {
                if x != 0 {
                    let slot = &mut out.coords[fold[t]];
                    *slot = k.add(*slot, x);
                }
            }
        }
        out
    }

    /// The weight of a basis monomial: `a_j = 0` if `j` does not occur, else
    /// the reduced exponent of its multiplicity.
    pub fn monomial_weight(self, field: PrimeField, n: usize, monomial: &[usize]) -> Weight {
        let monoid = field.exponent_monoid();
        let mut counts = vec![0u32; n];
        for &i in monomial {
            counts[i] += 1;
        }
        Weight(counts.into_iter().map(|c| monoid.reduce_exponent(c)).collect())
    }

    /// Whether every occurring weight `a` has `Σ aᵢ ≤ deg P`; weights are
    /// read off the diagonal action and confirmed on all `q^n` diagonals.
    pub fn weight_support_bound_check(self, field: PrimeField, n: usize, budget: &Budget) -> Result<bool> {
        self.check()?;
        let diagonals = pow_sat(field.size() as u128, n as u128);
        budget.check_nodes(
            "weight support check",
            diagonals.saturating_mul(self.dim(n) as u128),
        )?;
        for v in self.basis_vectors(field, n) {
            let Some(w) = weight_by_probe(&v) else {
                return Ok(false);
            };
            if !is_weight_vector_of(&v, &w) {
                return Ok(false);
            }
            if w.total() > self.degree() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The distinct weights with nonzero weight space in `P(K^n)`.
    pub fn occurring_weights(self, field: PrimeField, n: usize) -> Vec<Weight> {
        let mut ws: Vec<Weight> = self
            .basis(n)
            .iter()
            .map(|m| self.monomial_weight(field, n, m))
            .collect();
        ws.sort();
        ws.dedup();
        ws
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Representation::TensorPower(d) => write!(f, "T^{d}"),
            Representation::SymPower(d) => write!(f, "S^{d}"),
        }
    }
}

/// An element of `P(K^n)` as coefficients over the monomial basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RepVector {
    pub field: PrimeField,
    pub rep: Representation,
    pub n: usize,
    pub coords: Vec<u8>,
}

impl RepVector {
    pub fn new(field: PrimeField, rep: Representation, n: usize, coords: Vec<u8>) -> Result<Self> {
        rep.check()?;
        if coords.len() != rep.dim(n) {
            return Err(Error::Shape(format!(
                "{rep} over K^{n} has dimension {}, got {} coordinates",
                rep.dim(n),
                coords.len()
            )));
        }
        if let Some(&bad) = coords.iter().find(|&&c| c as usize >= field.size()) {
            return Err(Error::Range {
                value: bad as usize,
                bound: field.size(),
            });
        }
        Ok(RepVector { field, rep, n, coords })
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &RepVector) -> Result<RepVector> {
        self.compatible(other)?;
        let k = self.field;
        let coords = self.coords.iter().zip(&other.coords).map(|(&a, &b)| k.add(a, b)).collect();
        Ok(RepVector { coords, ..self.clone() })
    }

    pub fn sub(&self, other: &RepVector) -> Result<RepVector> {
        self.compatible(other)?;
        let k = self.field;
        let coords = self.coords.iter().zip(&other.coords).map(|(&a, &b)| k.sub(a, b)).collect();
        Ok(RepVector { coords, ..self.clone() })
    }

    pub fn scale(&self, c: u8) -> RepVector {
        let k = self.field;
        RepVector {
            coords: self.coords.iter().map(|&a| k.mul(a, c)).collect(),
            ..self.clone()
        }
    }

    fn compatible(&self, other: &RepVector) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.p(),
                right: other.field.p(),
            });
        }
        if self.rep != other.rep || self.n != other.n {
            return Err(Error::Shape(format!(
                "{} over K^{} vs {} over K^{}",
                self.rep, self.n, other.rep, other.n
            )));
        }
        Ok(())
    }

    /// `P(ι)v` for the embedding `K^n → K^m` adding zero coordinates.
    pub fn embed(&self, m: usize) -> Result<RepVector> {
        if m < self.n {
            return Err(Error::Shape(format!("cannot embed K^{} into K^{m}", self.n)));
        }
        Ok(self.rep.apply_unchecked(&Matrix::embedding(self.field, self.n, m), self))
    }

    /// `P((i j))v` for the transposition of coordinates `i` and `j`.
    pub fn swap(&self, i: usize, j: usize) -> RepVector {
        self.rep
            .apply_unchecked(&Matrix::transposition(self.field, self.n, i, j), self)
    }

    pub fn apply(&self, phi: &Matrix) -> Result<RepVector> {
        self.rep.apply(phi, self)
    }

    /// The unique weight of a nonzero weight vector.
    pub fn weight(&self) -> Option<Weight> {
        let comps = weight_decompose(self);
        if comps.len() == 1 {
            comps.into_keys().next()
        } else {
            None
        }
    }
}

/// A monoid homomorphism `D_n → K`, `diag(t) ↦ ∏ tᵢ^{aᵢ}`, with exponent 0
/// meaning `c ↦ c⁰` (so `0 ↦ 1`) and `q−1` meaning `c ↦ c^{q−1}` (`0 ↦ 0`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<u8>);

impl Weight {
    pub fn total(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    pub fn support(&self) -> usize {
        self.0.iter().filter(|&&a| a != 0).count()
    }

    /// `χ(diag(t))`.
    pub fn eval(&self, field: PrimeField, t: &[u8]) -> u8 {
        let monoid = field.exponent_monoid();
        self.0
            .iter()
            .zip(t)
            .fold(1, |acc, (&a, &c)| field.mul(acc, monoid.apply(a, c)))
    }

    /// Appends zero exponents up to length `m`.
    pub fn extended(&self, m: usize) -> Weight {
        let mut v = self.0.clone();
        v.resize(m, 0);
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Splits `v` into its nonzero weight components.
pub fn weight_decompose(v: &RepVector) -> BTreeMap<Weight, RepVector> {
    let mut out: BTreeMap<Weight, RepVector> = BTreeMap::new();
    for (k, mono) in v.rep.basis(v.n).iter().enumerate() {
        if v.coords[k] == 0 {
            continue;
        }
        let w = v.rep.monomial_weight(v.field, v.n, mono);
        out.entry(w).or_insert_with(|| v.rep.zero(v.field, v.n)).coords[k] = v.coords[k];
    }
    out
}

fn primitive_root(field: PrimeField) -> u8 {
    let q = field.size();
    (1..q as u8)
        .find(|&g| (1..q as u32 - 1).all(|e| field.pow(g, e) != 1))
        .expect("GF(p)^× is cyclic")
}

/// Reads the weight of `v` off the diagonal action, one coordinate at a
/// time, without consulting the monomial formula. `None` unless `v` is a
/// nonzero weight vector.
pub fn weight_by_probe(v: &RepVector) -> Option<Weight> {
    if v.is_zero() {
        return None;
    }
    let k = v.field;
    let q = k.size() as u32;
    let g = primitive_root(k);
    let mut a = Vec::with_capacity(v.n);
    for j in 0..v.n {
        let mut t = vec![1u8; v.n];
        t[j] = g;
        let scaled = v.rep.apply_unchecked(&Matrix::diagonal(k, &t), v);
        let e = (1..q).find(|&e| scaled == v.scale(k.pow(g, e)))?;
        t[j] = 0;
        let killed = v.rep.apply_unchecked(&Matrix::diagonal(k, &t), v);
        let exponent = if killed == *v && e == q - 1 {
            0
        } else if killed.is_zero() {
            e as u8
        } else {
            return None;
        };
        a.push(exponent);
    }
    let w = Weight(a);
    is_weight_vector_of(v, &w).then_some(w)
}

/// `P(diag(t))v = χ(t)·v` for all `q^n` diagonals.
pub fn is_weight_vector_of(v: &RepVector, w: &Weight) -> bool {
    let k = v.field;
    crate::linalg::DiagonalMap::all(k, v.n).all(|dm| {
        let lhs = v.rep.apply_unchecked(&dm.to_matrix(), v);
        lhs == v.scale(w.eval(k, &dm.t))
    })
}
