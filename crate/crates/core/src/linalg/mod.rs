//! Matrices over GF(p): echelon forms, kernels, enumeration of `Hom(K^n, K^m)`
//! and `GL_n`, and the elementary transvections `I + s·E_ij`.
//!
//! Matrices are stored row-major and act on column vectors. Indices are
//! 0-based here; the text format and the CLI are 1-based where indices appear.

mod bitmatrix;
pub(crate) mod text;

pub use bitmatrix::BitMatrix;
pub use text::{format_matrix, parse_matrix};

use crate::budget::{pow_sat, Budget};
use crate::error::{Error, Result};
use crate::field::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// A linear map `K^n → K^m`, i.e. an `m × n` matrix.
pub type LinearMap = Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_entries(field: PrimeField, rows: usize, cols: usize, data: Vec<u8>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&x| x >= field.p()) {
            return Err(Error::Range {
                value: bad as usize,
                bound: field.size(),
            });
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Matrix::from_entries(field, rows.len(), cols, rows.concat())
    }

    /// Diagonal matrix `diag(t₁, …, tₙ)`.
    pub fn diagonal(field: PrimeField, t: &[u8]) -> Self {
        let n = t.len();
        let mut m = Matrix::zeros(field, n, n);
        for (i, &x) in t.iter().enumerate() {
            m.data[i * n + i] = x % field.p();
        }
        m
    }

    /// Permutation matrix sending `e_i` to `e_{perm[i]}`.
    pub fn permutation(field: PrimeField, perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Matrix::zeros(field, n, n);
        for (i, &j) in perm.iter().enumerate() {
            m.data[j * n + i] = 1;
        }
        m
    }

    /// The permutation matrix of the transposition `(i j)` on `K^n`.
    pub fn transposition(field: PrimeField, n: usize, i: usize, j: usize) -> Self {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, j);
        Matrix::permutation(field, &perm)
    }

    /// The standard embedding `K^n → K^m` (m ≥ n) padding with zeros.
    pub fn embedding(field: PrimeField, n: usize, m: usize) -> Self {
        let mut e = Matrix::zeros(field, m, n);
        for i in 0..n.min(m) {
            e.data[i * n + i] = 1;
        }
        e
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn data(&self) -> &[u8] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v % self.field.p();
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    /// Matrix product `self · other`, i.e. the composition `self ∘ other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.p(),
                right: other.field.p(),
            });
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let k = self.field;
        let p = k.p() as u32;
        let mut out = Matrix::zeros(k, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = 0u32;
                for i in 0..self.cols {
                    acc += self.get(r, i) as u32 * other.get(i, c) as u32;
                }
                out.data[r * other.cols + c] = (acc % p) as u8;
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u8]) -> Result<Vec<u8>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        let p = self.field.p() as u32;
        Ok((0..self.rows)
            .map(|r| {
                let acc: u32 = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u32 * b as u32)
                    .sum();
                (acc % p) as u8
            })
            .collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field || self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape("matrix sum of unequal shapes".into()));
        }
        let k = self.field;
        Ok(Matrix {
            field: k,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| k.add(a, b))
                .collect(),
        })
    }

    /// Reduced row echelon form, rank and pivot columns.
    pub fn rref(&self) -> Rref {
        let k = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = k.inv(m.get(row, col)).expect("pivot is nonzero");
            for c in col..m.cols {
                let v = k.mul(m.get(row, c), inv);
                m.data[row * m.cols + c] = v;
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = k.sub(m.get(r, c), k.mul(factor, m.get(row, c)));
                    m.data[r * m.cols + c] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            matrix: m,
            rank: pivots.len(),
            pivots,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Rank, via the bit-packed path over GF(2).
    pub fn rank(&self) -> usize {
        if self.field.p() == 2 {
            BitMatrix::from_matrix(self).expect("GF(2)").rank()
        } else {
            self.rref().rank
        }
    }

    /// A basis of `{x : self · x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u8>> {
        let k = self.field;
        let Rref { matrix, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![0u8; self.cols];
                x[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    x[pc] = k.neg(matrix.get(r, f));
                }
                x
            })
            .collect()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        if !self.is_invertible() {
            return Err(Error::DivisionByZero);
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.data[r * 2 * n + c] = self.get(r, c);
            }
            aug.data[r * 2 * n + n + r] = 1;
        }
        let red = aug.rref();
        let mut inv = Matrix::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.data[r * n + c] = red.matrix.get(r, n + c);
            }
        }
        Ok(inv)
    }

    /// The sub-matrix on the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut s = Matrix::zeros(self.field, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                s.data[i * cols.len() + j] = self.get(r, c);
            }
        }
        s
    }
}

/// `diag(t₁, …, tₙ)` as a standalone value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagonalMap {
    pub field: PrimeField,
    pub t: Vec<u8>,
}

impl DiagonalMap {
    pub fn to_matrix(&self) -> Matrix {
        Matrix::diagonal(self.field, &self.t)
    }

    /// All `q^n` diagonal matrices, in lexicographic order of `t`.
    pub fn all(field: PrimeField, n: usize) -> impl Iterator<Item = DiagonalMap> {
        let q = field.size();
        let total = q.pow(n as u32);
        (0..total).map(move |mut idx| {
            let mut t = vec![0u8; n];
            for slot in t.iter_mut().rev() {
                *slot = (idx % q) as u8;
                idx /= q;
            }
            DiagonalMap { field, t }
        })
    }
}

/// `g_ij(s) = I + s·E_ij` on `K^n` (0-based `i ≠ j`).
pub fn elementary_transvection(field: PrimeField, n: usize, i: usize, j: usize, s: u8) -> Result<Matrix> {
    if i == j {
        return Err(Error::Index(format!("transvection needs i != j, got {i} = {j}")));
    }
    if i >= n || j >= n {
        return Err(Error::Index(format!("({i}, {j}) outside {n}x{n}")));
    }
    let mut g = Matrix::identity(field, n);
    g.set(i, j, s);
    Ok(g)
}

/// Number of maps `K^n → K^m`.
pub fn hom_count(field: PrimeField, n: usize, m: usize) -> u128 {
    pow_sat(field.size() as u128, (n * m) as u128)
}

/// `|GL_n(F_p)| = ∏_{i<n} (p^n − p^i)`.
pub fn gl_order(field: PrimeField, n: usize) -> u128 {
    let p = field.size() as u128;
    let pn = pow_sat(p, n as u128);
    (0..n).map(|i| pn - pow_sat(p, i as u128)).product()
}

/// The `index`-th `m × n` matrix in the fixed enumeration order:
/// lexicographic over the entries listed column-major, first entry most
/// significant.
pub fn hom_from_index(field: PrimeField, n: usize, m: usize, mut index: u128) -> Matrix {
    let p = field.size() as u128;
    let mut mat = Matrix::zeros(field, m, n);
    for c in (0..n).rev() {
        for r in (0..m).rev() {
            mat.data[r * n + c] = (index % p) as u8;
            index /= p;
        }
    }
    mat
}

/// Every linear map `K^n → K^m` exactly once, in the order of
/// [`hom_from_index`].
pub fn enumerate_hom(
    field: PrimeField,
    n: usize,
    m: usize,
    budget: &Budget,
) -> Result<impl Iterator<Item = Matrix>> {
    let total = hom_count(field, n, m);
    budget.check_maps("Hom(K^n, K^m) enumeration", total)?;
    Ok((0..total).map(move |i| hom_from_index(field, n, m, i)))
}

/// Every invertible `n × n` matrix exactly once, in enumeration order.
pub fn enumerate_gl(field: PrimeField, n: usize, budget: &Budget) -> Result<impl Iterator<Item = Matrix>> {
    Ok(enumerate_hom(field, n, n, budget)?.filter(Matrix::is_invertible))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rref_examples() {
        assert_eq!(Matrix::identity(gf(2), 2).rref().rank, 2);
        assert_eq!(Matrix::zeros(gf(3), 3, 3).rref().rank, 0);
        let m = Matrix::from_rows(gf(2), &[vec![1, 1], vec![1, 1]]).unwrap();
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.matrix.data(), &[1, 1, 0, 0]);
    }

    #[test]
    fn enumerate_hom_counts() {
        let b = Budget::default();
        assert_eq!(enumerate_hom(gf(2), 1, 1, &b).unwrap().count(), 2);
        assert_eq!(enumerate_hom(gf(2), 2, 1, &b).unwrap().count(), 4);
        let all: Vec<_> = enumerate_hom(gf(3), 2, 2, &b).unwrap().collect();
        assert_eq!(all.len(), 81);
        let distinct: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 81);
    }

    #[test]
    fn enumeration_order_is_column_major_lex() {
        let b = Budget::default();
        let maps: Vec<_> = enumerate_hom(gf(2), 2, 2, &b).unwrap().collect();
        // entries listed as (0,0), (1,0), (0,1), (1,1); the last varies fastest
        assert_eq!(maps[1].data(), &[0, 0, 0, 1]);
        assert_eq!(maps[2].data(), &[0, 1, 0, 0]);
        assert_eq!(maps[4].data(), &[0, 0, 1, 0]);
        assert_eq!(maps[8].data(), &[1, 0, 0, 0]);
    }

    #[test]
    fn enumerate_hom_respects_budget() {
        let b = Budget {
            maps: 100,
            ..Budget::default()
        };
        assert!(matches!(enumerate_hom(gf(3), 2, 3, &b), Err(Error::Budget { .. })));
        assert!(enumerate_hom(gf(3), 2, 2, &b).is_ok());
    }

    #[test]
    fn gl_counts() {
        let b = Budget::default();
        assert_eq!(enumerate_gl(gf(2), 1, &b).unwrap().count(), 1);
        assert_eq!(enumerate_gl(gf(2), 2, &b).unwrap().count(), 6);
        assert_eq!(enumerate_gl(gf(3), 2, &b).unwrap().count(), 48);
        for p in [2, 3] {
            for n in 1..=3 {
                let k = gf(p);
                assert_eq!(enumerate_gl(k, n, &b).unwrap().count() as u128, gl_order(k, n));
            }
        }
    }

    #[test]
    fn transvection_examples() {
        let g = elementary_transvection(gf(2), 2, 1, 0, 1).unwrap();
        assert_eq!(g, Matrix::from_rows(gf(2), &[vec![1, 0], vec![1, 1]]).unwrap());
        assert_eq!(elementary_transvection(gf(5), 3, 0, 2, 0).unwrap(), Matrix::identity(gf(5), 3));
        let g = elementary_transvection(gf(3), 3, 0, 2, 2).unwrap();
        let mut expect = Matrix::identity(gf(3), 3);
        expect.set(0, 2, 2);
        assert_eq!(g, expect);
        assert!(matches!(elementary_transvection(gf(3), 3, 1, 1, 1), Err(Error::Index(_))));
    }

    #[test]
    fn transvections_form_one_parameter_subgroups() {
        for p in [2, 3, 5] {
            let k = gf(p);
            for (i, j) in [(0, 1), (1, 0), (0, 2), (2, 1)] {
                for s in k.elements() {
                    for t in k.elements() {
                        let gs = elementary_transvection(k, 3, i, j, s).unwrap();
                        let gt = elementary_transvection(k, 3, i, j, t).unwrap();
                        let gst = elementary_transvection(k, 3, i, j, k.add(s, t)).unwrap();
                        assert_eq!(gs.mul(&gt).unwrap(), gst);
                    }
                }
            }
        }
    }

    #[test]
    fn kernel_and_inverse() {
        let k = gf(3);
        let m = Matrix::from_rows(k, &[vec![1, 2, 0], vec![2, 1, 0]]).unwrap();
        for x in m.kernel() {
            assert!(m.mul_vec(&x).unwrap().iter().all(|&v| v == 0));
        }
        assert_eq!(m.kernel().len(), 3 - m.rank());
        let g = Matrix::from_rows(k, &[vec![1, 2], vec![0, 1]]).unwrap();
        let gi = g.inverse().unwrap();
        assert_eq!(g.mul(&gi).unwrap(), Matrix::identity(k, 2));
        let singular = Matrix::from_rows(k, &[vec![1, 2], vec![2, 1]]).unwrap();
        assert!(singular.inverse().is_err());
    }

    fn arb_matrix(p: u32, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(0..p as u8, rows * cols)
            .prop_map(move |d| Matrix::from_entries(gf(p), rows, cols, d).unwrap())
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in arb_matrix(5, 4, 5)) {
            let once = m.rref();
            let twice = once.matrix.rref();
            prop_assert_eq!(&once.matrix, &twice.matrix);
            prop_assert_eq!(once.rank, twice.rank);
        }

        #[test]
        fn rank_of_product_is_bounded(a in arb_matrix(3, 3, 4), b in arb_matrix(3, 4, 3)) {
            let ab = a.mul(&b).unwrap();
            prop_assert!(ab.rank() <= a.rank().min(b.rank()));
        }

        #[test]
        fn bit_packed_rank_matches_generic(m in arb_matrix(2, 7, 70)) {
            prop_assert_eq!(m.rank(), m.rref().rank);
        }
    }
}
