//! The Schur algebra `A_{≤d}(U)`: linear functionals on the functions
//! `End(U) → K` of reduced degree at most `d`, multiplied by the dual of
//! `f ↦ ((φ, ψ) ↦ f(φψ))`.

use std::fmt::Write as _;

use super::poly::ReducedPolynomial;
use super::RepVector;
use crate::budget::{pow_sat, Budget};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::Matrix;

/// Coordinates over the dual of the reduced-monomial basis, in the order of
/// [`SchurAlgebra::monomials`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchurElement {
    pub u: usize,
    pub d: usize,
    pub coords: Vec<u8>,
}

#[derive(Debug, Clone)]
pub struct SchurAlgebra {
    field: PrimeField,
    u: usize,
    d: usize,
    /// Exponent vectors on the `u²` entries of `φ` (row-major).
    monomials: Vec<Vec<u8>>,
    /// Reduced-exponent index → basis position.
    position: Vec<Option<usize>>,
    /// For each basis monomial `m`: the terms `c·x^{e₁}y^{e₂}` of `m(xy)`.
    structure: Vec<Vec<(usize, usize, u8)>>,
}

/// The `index`-th endomorphism of `K^u`, entries row-major with the first
/// most significant; matches the variable order of the monomials.
fn endomorphism(field: PrimeField, u: usize, mut index: usize) -> Matrix {
    let q = field.size();
    let mut data = vec![0u8; u * u];
    for x in data.iter_mut().rev() {
        *x = (index % q) as u8;
        index /= q;
    }
    Matrix::from_entries(field, u, u, data).expect("square")
}

fn eval_monomial(field: PrimeField, exps: &[u8], entries: &[u8]) -> u8 {
    exps.iter()
        .zip(entries)
        .fold(1, |acc, (&e, &x)| field.mul(acc, field.pow(x, e as u32)))
}

impl SchurAlgebra {
    pub fn new(field: PrimeField, u: usize, d: usize, budget: &Budget) -> Result<Self> {
        let q = field.size();
        let vars = u * u;
        let points = pow_sat(q as u128, 2 * vars as u128);
        budget.check_entries("Schur algebra comultiplication table", points)?;
        let space = q.pow(vars as u32);
        let mut monomials = Vec::new();
        let mut position = vec![None; space];
        for (idx, slot) in position.iter_mut().enumerate() {
            let mut exps = vec![0u8; vars];
            let mut rest = idx;
            for e in exps.iter_mut().rev() {
                *e = (rest % q) as u8;
                rest /= q;
            }
            if exps.iter().map(|&e| e as usize).sum::<usize>() <= d {
                *slot = Some(monomials.len());
                monomials.push(exps);
            }
        }
        let maps: Vec<Matrix> = (0..space).map(|i| endomorphism(field, u, i)).collect();
        let mut structure = Vec::with_capacity(monomials.len());
        for m in &monomials {
            let mut table = Vec::with_capacity(space * space);
            for phi in &maps {
                for psi in &maps {
                    let prod = phi.mul(psi).expect("square");
                    table.push(eval_monomial(field, m, prod.data()));
                }
            }
            let poly = ReducedPolynomial::interpolate(field, 2 * vars, &table)?;
            let terms = poly
                .coefficients()
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .filter_map(|(i, &c)| {
                    let left = position[i / space]?;
                    let right = position[i % space]?;
                    Some((left, right, c))
                })
                .collect();
            structure.push(terms);
        }
        Ok(SchurAlgebra {
            field,
            u,
            d,
            monomials,
            position,
            structure,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Vec<u8>] {
        &self.monomials
    }

    pub fn element(&self, coords: Vec<u8>) -> Result<SchurElement> {
        if coords.len() != self.dim() {
            return Err(Error::Shape(format!(
                "A_<={}(K^{}) has dimension {}, got {} coordinates",
                self.d,
                self.u,
                self.dim(),
                coords.len()
            )));
        }
        Ok(SchurElement {
            u: self.u,
            d: self.d,
            coords: coords.into_iter().map(|c| c % self.field.p()).collect(),
        })
    }

    /// The `index`-th element, coordinates read base `q` (first most
    /// significant).
    pub fn element_from_index(&self, mut index: u128) -> SchurElement {
        let q = self.field.size() as u128;
        let mut coords = vec![0u8; self.dim()];
        for c in coords.iter_mut().rev() {
            *c = (index % q) as u8;
            index /= q;
        }
        SchurElement {
            u: self.u,
            d: self.d,
            coords,
        }
    }

    /// `ι(φ) = (f ↦ f(φ))`.
    pub fn embed(&self, phi: &Matrix) -> Result<SchurElement> {
        if phi.rows() != self.u || phi.cols() != self.u {
            return Err(Error::Shape(format!("expected a {0}x{0} matrix", self.u)));
        }
        if phi.field() != self.field {
            return Err(Error::FieldMismatch {
                left: phi.field().p(),
                right: self.field.p(),
            });
        }
        let coords = self
            .monomials
            .iter()
            .map(|m| eval_monomial(self.field, m, phi.data()))
            .collect();
        Ok(SchurElement {
            u: self.u,
            d: self.d,
            coords,
        })
    }

    /// `f ↦ f(id_U)`.
    pub fn unit(&self) -> SchurElement {
        self.embed(&Matrix::identity(self.field, self.u)).expect("identity")
    }

    fn check(&self, a: &SchurElement) -> Result<()> {
        if a.u != self.u || a.d != self.d || a.coords.len() != self.dim() {
            return Err(Error::Shape(format!(
                "element of A_<={}(K^{}) used in A_<={}(K^{})",
                a.d, a.u, self.d, self.u
            )));
        }
        Ok(())
    }

    pub fn multiply(&self, a: &SchurElement, b: &SchurElement) -> Result<SchurElement> {
        self.check(a)?;
        self.check(b)?;
        let k = self.field;
        let coords = self
            .structure
            .iter()
            .map(|terms| {
                terms.iter().fold(0u8, |acc, &(i, j, c)| {
                    k.add(acc, k.mul(c, k.mul(a.coords[i], b.coords[j])))
                })
            })
            .collect();
        Ok(SchurElement {
            u: self.u,
            d: self.d,
            coords,
        })
    }

    pub fn add(&self, a: &SchurElement, b: &SchurElement) -> Result<SchurElement> {
        self.check(a)?;
        self.check(b)?;
        let k = self.field;
        Ok(SchurElement {
            coords: a.coords.iter().zip(&b.coords).map(|(&x, &y)| k.add(x, y)).collect(),
            ..a.clone()
        })
    }

    /// The action on `P(U)` for `P` of degree at most `d`: writing
    /// `P(φ)v = Σ_m m(φ)·v_m`, `a·v = Σ_m a(m)·v_m`.
    pub fn act(&self, a: &SchurElement, v: &RepVector) -> Result<RepVector> {
        self.check(a)?;
        if v.n != self.u {
            return Err(Error::Shape(format!("vector over K^{} acted on by A(K^{})", v.n, self.u)));
        }
        if v.rep.degree() > self.d {
            return Err(Error::Precondition(format!(
                "{} has degree above {}",
                v.rep, self.d
            )));
        }
        let k = self.field;
        let vars = self.u * self.u;
        let space = k.size().pow(vars as u32);
        let images: Vec<RepVector> = (0..space)
            .map(|i| v.rep.apply_unchecked(&endomorphism(k, self.u, i), v))
            .collect();
        let mut out = v.rep.zero(k, v.n);
        for (c, slot) in out.coords.iter_mut().enumerate() {
            let table: Vec<u8> = images.iter().map(|w| w.coords[c]).collect();
            let poly = ReducedPolynomial::interpolate(k, vars, &table)?;
            for (i, &coef) in poly.coefficients().iter().enumerate() {
                if coef == 0 {
                    continue;
                }
                let pos = self.position[i].ok_or_else(|| {
                    Error::Precondition("coordinate function above the degree bound".into())
                })?;
                *slot = k.add(*slot, k.mul(coef, a.coords[pos]));
            }
        }
        Ok(out)
    }

    /// Basis monomials followed by the nonzero products of dual basis
    /// elements, `e_i * e_j = Σ c·e_m`.
    pub fn format_table(&self) -> String {
        let mut out = format!(
            "p={} u={} d={} dim={}\n",
            self.field.p(),
            self.u,
            self.d,
            self.dim()
        );
        for (i, m) in self.monomials.iter().enumerate() {
            let entries: Vec<String> = m.iter().map(u8::to_string).collect();
            let _ = writeln!(out, "e{i} = [{}]", entries.join(" "));
        }
        let n = self.dim();
        let mut products = vec![vec![Vec::new(); n]; n];
        for (m, terms) in self.structure.iter().enumerate() {
            for &(i, j, c) in terms {
                products[i][j].push((m, c));
            }
        }
        for (i, row) in products.iter().enumerate() {
            for (j, terms) in row.iter().enumerate() {
                if terms.is_empty() {
                    continue;
                }
                let rhs: Vec<String> = terms
                    .iter()
                    .map(|&(m, c)| if c == 1 { format!("e{m}") } else { format!("{c}*e{m}") })
                    .collect();
                let _ = writeln!(out, "e{i} * e{j} = {}", rhs.join(" + "));
            }
        }
        out
    }
}
