//! `F_{ij}[b]`: the coefficient of `s^b` in `P(g_{ij}(s))v`, and the
//! spreading-out procedure built from it.

use super::{weight_decompose, RepVector, Representation, Weight};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::Matrix;

/// Inverse of the evaluation matrix `V[s][e] = s^e` (with `0⁰ = 1`).
pub fn inverse_vandermonde(field: PrimeField) -> Matrix {
    let q = field.size();
    let mut v = Matrix::zeros(field, q, q);
    for s in 0..q {
        for e in 0..q {
            v.set(s, e, field.pow(s as u8, e as u32));
        }
    }
    v.inverse().expect("Vandermonde matrix on distinct nodes")
}

fn transvection(field: PrimeField, n: usize, i: usize, j: usize, s: u8) -> Matrix {
    let mut g = Matrix::identity(field, n);
    g.set(i, j, s);
    g
}

fn check_indices(v: &RepVector, n: usize, i: usize, j: usize) -> Result<()> {
    if i == j {
        return Err(Error::Precondition(format!("F_{{ij}} needs i != j, got i = j = {i}")));
    }
    if i >= n || j >= n {
        return Err(Error::Index(format!("({i}, {j}) outside K^{n}")));
    }
    if v.n > n {
        return Err(Error::Shape(format!("vector over K^{} does not live in K^{n}", v.n)));
    }
    Ok(())
}

/// `P(g_{ij}(s))v`, with `v` first embedded into `K^n`.
pub fn one_parameter(v: &RepVector, n: usize, i: usize, j: usize, s: u8) -> Result<RepVector> {
    check_indices(v, n, i, j)?;
    let e = v.embed(n)?;
    Ok(e.rep.apply_unchecked(&transvection(v.field, n, i, j, s % v.field.p()), &e))
}

/// `[F_{ij}[0]v, …, F_{ij}[q−1]v]`.
pub fn f_coefficients(v: &RepVector, n: usize, i: usize, j: usize) -> Result<Vec<RepVector>> {
    f_coefficients_using(v, n, i, j, &inverse_vandermonde(v.field))
}

/// As [`f_coefficients`] with a caller-supplied inverse evaluation matrix.
pub fn f_coefficients_using(v: &RepVector, n: usize, i: usize, j: usize, inverse: &Matrix) -> Result<Vec<RepVector>> {
    check_indices(v, n, i, j)?;
    let k = v.field;
    let q = k.size();
    if inverse.rows() != q || inverse.cols() != q {
        return Err(Error::Shape(format!("inverse evaluation matrix must be {q}x{q}")));
    }
    let values: Vec<RepVector> = (0..q)
        .map(|s| one_parameter(v, n, i, j, s as u8))
        .collect::<Result<_>>()?;
    let zero = v.rep.zero(k, n);
    Ok((0..q)
        .map(|b| {
            values.iter().enumerate().fold(zero.clone(), |acc, (s, w)| {
                acc.add(&w.scale(inverse.get(b, s))).expect("same space")
            })
        })
        .collect())
}

/// `F_{ij}[b]v`.
pub fn f_operator(v: &RepVector, n: usize, i: usize, j: usize, b: u8) -> Result<RepVector> {
    if b as usize >= v.field.size() {
        return Err(Error::Range {
            value: b as usize,
            bound: v.field.size(),
        });
    }
    Ok(f_coefficients(v, n, i, j)?.swap_remove(b as usize))
}

fn require_weight(v: &RepVector) -> Result<Weight> {
    if v.is_zero() {
        return Err(Error::Precondition("expected a nonzero weight vector".into()));
    }
    v.weight()
        .ok_or_else(|| Error::Precondition("expected a weight vector, got a mixture of weights".into()))
}

/// For each `j` with `a_j > 0`: `P(g_{n+1,j}(s))v = v + s^{a_j} P((j, n+1))v`.
pub fn is_maximally_spread_out(v: &RepVector) -> Result<bool> {
    let a = require_weight(v)?;
    let n = v.n;
    let e = v.embed(n + 1)?;
    for j in (0..n).filter(|&j| a.0[j] > 0) {
        let fs = f_coefficients(&e, n + 1, n, j)?;
        let swapped = e.swap(j, n);
        for (b, f) in fs.iter().enumerate() {
            let ok = if b == 0 {
                *f == e
            } else if b == a.0[j] as usize {
                *f == swapped
            } else {
                f.is_zero()
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpreadOut {
    pub vector: RepVector,
    pub weight: Weight,
    /// Number of replacements made; each one adds a coordinate.
    pub steps: usize,
}

/// The first replacement for `v` over `K^{n+1}`: smallest `j`, then
/// smallest `b`.
fn spread_step(v: &RepVector, a: &Weight) -> Result<Option<RepVector>> {
    let n = v.n;
    let e = v.embed(n + 1)?;
    for j in (0..n).filter(|&j| a.0[j] > 0) {
        let fs = f_coefficients(&e, n + 1, n, j)?;
        for (b, f) in fs.iter().enumerate().skip(1) {
            if b != a.0[j] as usize {
                if !f.is_zero() {
                    return Ok(Some(f.clone()));
                }
            } else {
                let rest = f.sub(&e.swap(j, n))?;
                if !rest.is_zero() {
                    return Ok(Some(rest));
                }
            }
        }
    }
    Ok(None)
}

/// Repeatedly spreads the weight of `v` into a fresh coordinate until it is
/// maximally spread out.
pub fn spread_out(v: &RepVector) -> Result<SpreadOut> {
    let mut cur = v.clone();
    let mut weight = require_weight(v)?;
    let mut steps = 0;
    while let Some(next) = spread_step(&cur, &weight)? {
        steps += 1;
        if steps > v.rep.degree() {
            return Err(Error::Precondition(format!(
                "spreading did not stop after {} steps",
                v.rep.degree()
            )));
        }
        weight = require_weight(&next)?;
        cur = next;
    }
    Ok(SpreadOut {
        vector: cur,
        weight,
        steps,
    })
}

/// `F_{n+1,j}[1]: P(K^n) → P(K^{n+1})` has full rank on the weight spaces
/// with `a_j > 0` and vanishes on those with `a_j = 0`.
pub fn f_injectivity_check(rep: Representation, field: PrimeField, n: usize, j: usize, budget: &Budget) -> Result<bool> {
    if j >= n {
        return Err(Error::Index(format!("coordinate {j} outside K^{n}")));
    }
    let dim = rep.dim(n);
    budget.check_entries(
        "F operator matrix",
        (dim as u128).saturating_mul(rep.dim(n + 1) as u128),
    )?;
    let mut active = Vec::new();
    for (m, v) in rep.basis(n).iter().zip(rep.basis_vectors(field, n)) {
        let image = f_coefficients(&v, n + 1, n, j)?.swap_remove(1);
        if rep.monomial_weight(field, n, m).0[j] > 0 {
            active.push(image.coords);
        } else if !image.is_zero() {
            return Ok(false);
        }
    }
    if active.is_empty() {
        return Ok(true);
    }
    let count = active.len();
    Ok(Matrix::from_rows(field, &active)?.rank() == count)
}

/// Weights the components of `F_{ij}[b]v` may carry for `v` of weight `a`
/// with `a_j > 0`.
pub(crate) fn predicted_weights(field: PrimeField, a: &Weight, i: usize, j: usize, b: u8) -> Vec<Weight> {
    let monoid = field.exponent_monoid();
    let mut first = a.clone();
    first.0[j] = monoid.ominus_unchecked(a.0[j], b);
    first.0[i] = monoid.oplus_unchecked(first.0[i], b);
    let mut out = vec![first];
    if a.0[j] == b {
        let mut second = a.clone();
        second.0[j] = 0;
        second.0[i] = monoid.oplus_unchecked(second.0[i], b);
        out.push(second);
    }
    out
}

/// Checks the weight bookkeeping of `F_{ij}[b]` on a weight vector `v` over
/// `K^n`: `b = 0` gives `v`, `a_j = 0` gives 0 for `b ≠ 0`, and otherwise
/// every component carries one of the predicted weights.
pub fn bookkeeping_holds(v: &RepVector, i: usize, j: usize) -> Result<bool> {
    let a = require_weight(v)?;
    let fs = f_coefficients(v, v.n, i, j)?;
    for (b, f) in fs.iter().enumerate() {
        let ok = if b == 0 {
            f == v
        } else if a.0[j] == 0 {
            f.is_zero()
        } else {
            let allowed = predicted_weights(v.field, &a, i, j, b as u8);
            weight_decompose(f).keys().all(|w| allowed.contains(w))
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The weight-`(a − a_j e_j + a_j e_{n+1})` component of `F_{n+1,j}[a_j]v`
/// equals `P((j, n+1))v`.
pub fn swap_identity_holds(v: &RepVector, j: usize) -> Result<bool> {
    let a = require_weight(v)?;
    if a.0[j] == 0 {
        return Ok(true);
    }
    let n = v.n;
    let e = v.embed(n + 1)?;
    let f = f_coefficients(&e, n + 1, n, j)?.swap_remove(a.0[j] as usize);
    let mut target = a.extended(n + 1);
    target.0[n] = a.0[j];
    target.0[j] = 0;
    let component = weight_decompose(&f)
        .remove(&target)
        .unwrap_or_else(|| v.rep.zero(v.field, n + 1));
    Ok(component == e.swap(j, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    const T2: Representation = Representation::TensorPower(2);
    const S2: Representation = Representation::SymPower(2);

    fn reconstruct(fs: &[RepVector], s: u8) -> RepVector {
        let k = fs[0].field;
        fs.iter()
            .enumerate()
            .fold(fs[0].rep.zero(k, fs[0].n), |acc, (b, f)| {
                acc.add(&f.scale(k.pow(s, b as u32))).unwrap()
            })
    }

    #[test]
    fn vandermonde_inverse() {
        for p in [2, 3, 5, 7] {
            let k = gf(p);
            let inv = inverse_vandermonde(k);
            let q = k.size();
            let mut v = Matrix::zeros(k, q, q);
            for s in 0..q {
                for e in 0..q {
                    v.set(s, e, k.pow(s as u8, e as u32));
                }
            }
            assert_eq!(inv.mul(&v).unwrap(), Matrix::identity(k, q));
        }
    }

    #[test]
    fn symmetric_square_example() {
        // GF(2): (e₁ + s e₂)² = e₁² + s e₂², so F₂₁[1] e₁² = e₂²
        let k = gf(2);
        let p = S2.basis_vector(k, 1, &[0, 0]).unwrap();
        let f = f_operator(&p, 2, 1, 0, 1).unwrap();
        assert_eq!(f, S2.basis_vector(k, 2, &[1, 1]).unwrap());
        // GF(3): the s¹ coefficient is 2 e₁e₂
        let k = gf(3);
        let p = S2.basis_vector(k, 1, &[0, 0]).unwrap();
        let f = f_operator(&p, 2, 1, 0, 1).unwrap();
        assert_eq!(f, S2.basis_vector(k, 2, &[0, 1]).unwrap().scale(2));
        let f2 = f_operator(&p, 2, 1, 0, 2).unwrap();
        assert_eq!(f2, S2.basis_vector(k, 2, &[1, 1]).unwrap());
    }

    #[test]
    fn reconstruction_and_bookkeeping() {
        for p in [2, 3] {
            let k = gf(p);
            for rep in [T2, S2, Representation::TensorPower(3)] {
                for n in 2..=3 {
                    for v in rep.basis_vectors(k, n) {
                        for i in 0..n {
                            for j in (0..n).filter(|&j| j != i) {
                                let fs = f_coefficients(&v, n, i, j).unwrap();
                                for s in 0..p as u8 {
                                    assert_eq!(reconstruct(&fs, s), one_parameter(&v, n, i, j, s).unwrap());
                                }
                                assert!(bookkeeping_holds(&v, i, j).unwrap());
                            }
                            assert!(swap_identity_holds(&v, i).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn corrupted_inverse_breaks_reconstruction() {
        let k = gf(3);
        let mut bad = inverse_vandermonde(k);
        bad.set(1, 1, k.add(bad.get(1, 1), 1));
        let v = T2.basis_vector(k, 2, &[0, 0]).unwrap();
        let fs = f_coefficients_using(&v, 2, 1, 0, &bad).unwrap();
        assert!((0..3).any(|s| reconstruct(&fs, s) != one_parameter(&v, 2, 1, 0, s).unwrap()));
    }

    #[test]
    fn index_errors() {
        let v = T2.basis_vector(gf(2), 2, &[0, 1]).unwrap();
        assert!(matches!(f_operator(&v, 2, 1, 1, 0), Err(Error::Precondition(_))));
        assert!(matches!(f_operator(&v, 2, 2, 1, 0), Err(Error::Index(_))));
        assert!(matches!(f_operator(&v, 1, 0, 1, 0), Err(Error::Index(_))));
        assert!(matches!(f_operator(&v, 2, 0, 1, 2), Err(Error::Range { .. })));
    }

    #[test]
    fn spread_out_examples() {
        let k = gf(2);
        let e12 = T2.basis_vector(k, 2, &[0, 1]).unwrap();
        assert!(is_maximally_spread_out(&e12).unwrap());
        let out = spread_out(&e12).unwrap();
        assert_eq!((out.vector, out.steps), (e12, 0));

        let e11 = T2.basis_vector(k, 1, &[0, 0]).unwrap();
        assert!(!is_maximally_spread_out(&e11).unwrap());
        let out = spread_out(&e11).unwrap();
        assert_eq!(out.steps, 1);
        assert_eq!(out.weight, Weight(vec![1, 1]));
        // e₁⊗e₂ + e₂⊗e₁
        assert_eq!(out.vector.coords, vec![0, 1, 1, 0]);
        assert!(is_maximally_spread_out(&out.vector).unwrap());

        for p in [3, 5] {
            let e12 = T2.basis_vector(gf(p), 2, &[0, 1]).unwrap();
            assert!(is_maximally_spread_out(&e12).unwrap());
        }
        assert!(spread_out(&T2.zero(k, 2)).is_err());
        let mixed = e11.embed(2).unwrap().add(&T2.basis_vector(k, 2, &[0, 1]).unwrap()).unwrap();
        assert!(matches!(spread_out(&mixed), Err(Error::Precondition(_))));
    }

    #[test]
    fn spread_out_ends_with_zero_one_weights() {
        for p in [2, 3, 5] {
            let k = gf(p);
            for rep in [T2, S2, Representation::TensorPower(3), Representation::SymPower(3)] {
                for n in 1..=2 {
                    for v in rep.basis_vectors(k, n) {
                        let out = spread_out(&v).unwrap();
                        assert!(out.steps <= rep.degree());
                        assert!(is_maximally_spread_out(&out.vector).unwrap());
                        assert!(out.weight.0.iter().all(|&a| a <= 1), "{rep} GF({p}) {:?}", out.weight);
                    }
                }
            }
        }
    }

    #[test]
    fn injectivity() {
        let b = Budget::default();
        assert!(f_injectivity_check(T2, gf(2), 2, 0, &b).unwrap());
        assert!(f_injectivity_check(S2, gf(3), 1, 0, &b).unwrap());
        for p in [2, 3, 5] {
            for rep in [T2, S2, Representation::SymPower(3)] {
                for n in 1..=3 {
                    for j in 0..n {
                        assert!(f_injectivity_check(rep, gf(p), n, j, &b).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn skew_symmetric_tensors_are_stable() {
        let k = gf(3);
        let n = 3;
        let skew: Vec<RepVector> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let a = T2.basis_vector(k, n, &[i, j]).unwrap();
                let b = T2.basis_vector(k, n, &[j, i]).unwrap();
                a.sub(&b).unwrap()
            })
            .collect();
        let is_skew = |v: &RepVector| (0..n).all(|i| (0..n).all(|j| v.coords[i * n + j] == k.neg(v.coords[j * n + i])));
        for v in &skew {
            for i in 0..n {
                for j in (0..n).filter(|&j| j != i) {
                    for f in f_coefficients(v, n, i, j).unwrap() {
                        assert!(is_skew(&f));
                    }
                }
            }
        }
    }
}
