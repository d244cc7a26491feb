//! Dense `d`-way tensors over GF(p), viewed both as arrays and as multilinear
//! forms on covectors.
//!
//! Entries are stored row-major (last axis fastest). The functorial action of
//! linear maps is computed as successive single-axis contractions.

mod text;

pub use text::{format_tensor, format_tensor_sparse, parse_tensor, parse_tensors};

use crate::budget::{pow_sat, Budget};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::Matrix;

pub const MAX_ORDER: usize = 5;
pub const MAX_ENTRIES: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tensor {
    field: PrimeField,
    dims: Vec<usize>,
    data: Vec<u8>,
}

fn checked_len(dims: &[usize]) -> Result<usize> {
    if dims.is_empty() || dims.len() > MAX_ORDER {
        return Err(Error::Shape(format!(
            "tensor order {} outside 1..={MAX_ORDER}",
            dims.len()
        )));
    }
    if dims.contains(&0) {
        return Err(Error::Shape("zero-length axis".into()));
    }
    let len = dims.iter().try_fold(1usize, |acc, &n| acc.checked_mul(n));
    match len {
        Some(len) if len <= MAX_ENTRIES => Ok(len),
        _ => Err(Error::Budget {
            what: "tensor entries",
            needed: dims.iter().map(|&n| n as u128).product(),
            budget: MAX_ENTRIES as u128,
        }),
    }
}

/// Contracts axis 0 of a row-major array of shape `(x.len(), rest)` with `x`.
fn contract_leading(field: PrimeField, data: &[u8], x: &[u8]) -> Vec<u8> {
    let rest = data.len() / x.len();
    let p = field.p() as u32;
    let mut acc = vec![0u32; rest];
    for (k, &xk) in x.iter().enumerate() {
        if xk == 0 {
            continue;
        }
        let block = &data[k * rest..(k + 1) * rest];
        for (a, &v) in acc.iter_mut().zip(block) {
            *a += xk as u32 * v as u32;
        }
    }
    acc.into_iter().map(|a| (a % p) as u8).collect()
}

impl Tensor {
    pub fn zeros(field: PrimeField, dims: &[usize]) -> Result<Self> {
        let len = checked_len(dims)?;
        Ok(Tensor {
            field,
            dims: dims.to_vec(),
            data: vec![0; len],
        })
    }

    pub fn cubical_zeros(field: PrimeField, d: usize, n: usize) -> Result<Self> {
        Tensor::zeros(field, &vec![n; d])
    }

    pub fn from_entries(field: PrimeField, dims: &[usize], data: Vec<u8>) -> Result<Self> {
        let len = checked_len(dims)?;
        if data.len() != len {
            return Err(Error::Shape(format!(
                "{} entries for shape {dims:?}",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&x| x >= field.p()) {
            return Err(Error::Range {
                value: bad as usize,
                bound: field.size(),
            });
        }
        Ok(Tensor {
            field,
            dims: dims.to_vec(),
            data,
        })
    }

    /// A matrix viewed as a 2-way tensor.
    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        Tensor::from_entries(m.field(), &[m.rows(), m.cols()], m.data().to_vec())
    }

    /// `Σ_{i<n} e_i ⊗ ⋯ ⊗ e_i`.
    pub fn diagonal_unit(field: PrimeField, d: usize, n: usize) -> Result<Self> {
        let mut t = Tensor::cubical_zeros(field, d, n)?;
        for i in 0..n {
            t.set(&vec![i; d], 1);
        }
        Ok(t)
    }

    /// `v₁ ⊗ ⋯ ⊗ v_d`.
    pub fn outer(field: PrimeField, vectors: &[Vec<u8>]) -> Result<Self> {
        let dims: Vec<usize> = vectors.iter().map(Vec::len).collect();
        let mut data = vec![1u8];
        for v in vectors {
            let mut next = Vec::with_capacity(data.len() * v.len());
            for &a in &data {
                next.extend(v.iter().map(|&b| field.mul(a, b % field.p())));
            }
            data = next;
        }
        Tensor::from_entries(field, &dims, data)
    }

    /// Entry `index` (0-based multi-index) set to 1, all else 0.
    pub fn basis(field: PrimeField, dims: &[usize], index: &[usize]) -> Result<Self> {
        let mut t = Tensor::zeros(field, dims)?;
        t.check_index(index)?;
        t.set(index, 1);
        Ok(t)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.dims.len()
    }

    #[inline]
    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn is_cubical(&self) -> bool {
        self.dims.iter().all(|&n| n == self.dims[0])
    }

    /// The common side length of a cubical tensor.
    pub fn side(&self) -> Option<usize> {
        self.is_cubical().then(|| self.dims[0])
    }

    pub fn require_side(&self) -> Result<usize> {
        self.side()
            .ok_or_else(|| Error::Shape(format!("tensor of shape {:?} is not cubical", self.dims)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    fn check_index(&self, index: &[usize]) -> Result<()> {
        if index.len() != self.dims.len() || index.iter().zip(&self.dims).any(|(&i, &n)| i >= n) {
            return Err(Error::Index(format!(
                "{index:?} outside shape {:?}",
                self.dims
            )));
        }
        Ok(())
    }

    pub fn offset(&self, index: &[usize]) -> usize {
        index
            .iter()
            .zip(&self.dims)
            .fold(0, |acc, (&i, &n)| acc * n + i)
    }

    pub fn multi_index(&self, mut offset: usize) -> Vec<usize> {
        let mut idx = vec![0; self.dims.len()];
        for (slot, &n) in idx.iter_mut().zip(&self.dims).rev() {
            *slot = offset % n;
            offset /= n;
        }
        idx
    }

    pub fn get(&self, index: &[usize]) -> u8 {
        self.data[self.offset(index)]
    }

    pub fn set(&mut self, index: &[usize], value: u8) {
        let o = self.offset(index);
        self.data[o] = value % self.field.p();
    }

    pub fn add(&self, other: &Tensor) -> Result<Tensor> {
        if self.field != other.field || self.dims != other.dims {
            return Err(Error::Shape("sum of tensors of different shapes".into()));
        }
        let k = self.field;
        Ok(Tensor {
            field: k,
            dims: self.dims.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| k.add(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: u8) -> Tensor {
        let k = self.field;
        Tensor {
            field: k,
            dims: self.dims.clone(),
            data: self.data.iter().map(|&a| k.mul(a, c % k.p())).collect(),
        }
    }

    /// Applies `φ` along one axis: `(φ ·_axis S)_{…j…} = Σ_i φ_{ji} S_{…i…}`.
    pub fn contract_axis(&self, axis: usize, phi: &Matrix) -> Result<Tensor> {
        if phi.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field.p(),
                right: phi.field().p(),
            });
        }
        if axis >= self.order() || phi.cols() != self.dims[axis] {
            return Err(Error::Shape(format!(
                "{}x{} map on axis {axis} of shape {:?}",
                phi.rows(),
                phi.cols(),
                self.dims
            )));
        }
        let mut dims = self.dims.clone();
        dims[axis] = phi.rows();
        let len = checked_len(&dims)?;
        let n = self.dims[axis];
        let inner: usize = self.dims[axis + 1..].iter().product();
        let outer: usize = self.dims[..axis].iter().product();
        let m = phi.rows();
        let p = self.field.p() as u32;
        let mut data = vec![0u8; len];
        let mut acc = vec![0u32; inner];
        for o in 0..outer {
            let src = &self.data[o * n * inner..(o + 1) * n * inner];
            for j in 0..m {
                acc.iter_mut().for_each(|a| *a = 0);
                for i in 0..n {
                    let c = phi.get(j, i) as u32;
                    if c == 0 {
                        continue;
                    }
                    for (a, &v) in acc.iter_mut().zip(&src[i * inner..(i + 1) * inner]) {
                        *a += c * v as u32;
                    }
                }
                let dst = &mut data[(o * m + j) * inner..(o * m + j + 1) * inner];
                for (d, &a) in dst.iter_mut().zip(&acc) {
                    *d = (a % p) as u8;
                }
            }
        }
        Ok(Tensor {
            field: self.field,
            dims,
            data,
        })
    }

    /// `(φ₁ ⊗ ⋯ ⊗ φ_d) S`.
    pub fn apply_multilinear(&self, maps: &[Matrix]) -> Result<Tensor> {
        if maps.len() != self.order() {
            return Err(Error::Shape(format!(
                "{} maps for an order-{} tensor",
                maps.len(),
                self.order()
            )));
        }
        maps.iter()
            .enumerate()
            .try_fold(self.clone(), |t, (axis, phi)| t.contract_axis(axis, phi))
    }

    /// `φ^{⊗d} S` for cubical `S`.
    pub fn apply_uniform(&self, phi: &Matrix) -> Result<Tensor> {
        let n = self.require_side()?;
        if phi.cols() != n {
            return Err(Error::Shape(format!(
                "{}x{} map on side {n}",
                phi.rows(),
                phi.cols()
            )));
        }
        (0..self.order()).try_fold(self.clone(), |t, axis| t.contract_axis(axis, phi))
    }

    /// `S(x₁, …, x_d) = Σ S_{i₁…i_d} x₁(i₁)⋯x_d(i_d)`.
    pub fn eval(&self, covectors: &[Vec<u8>]) -> Result<u8> {
        if covectors.len() != self.order()
            || covectors.iter().zip(&self.dims).any(|(x, &n)| x.len() != n)
        {
            return Err(Error::Shape("covector lengths do not match the tensor shape".into()));
        }
        Ok(self.eval_unchecked(covectors))
    }

    pub(crate) fn eval_unchecked<V: AsRef<[u8]>>(&self, covectors: &[V]) -> u8 {
        let mut cur = self.data.clone();
        for x in covectors {
            cur = contract_leading(self.field, &cur, x.as_ref());
        }
        cur[0]
    }

    /// Contracts the leading `xs.len()` axes with covectors, returning the
    /// remaining entries row-major.
    pub fn contract_leading(&self, xs: &[&[u8]]) -> Vec<u8> {
        let mut cur = self.data.clone();
        for x in xs {
            cur = contract_leading(self.field, &cur, x);
        }
        cur
    }

    /// `S^{⊠t}`: the `t`-fold tensor power with the `t` copies of each axis
    /// grouped into one axis of side `n^t` (first copy most significant).
    pub fn vertical_product(&self, t: usize, budget: &Budget) -> Result<Tensor> {
        let n = self.require_side()?;
        if t == 0 {
            return Err(Error::Precondition("vertical power t must be at least 1".into()));
        }
        let d = self.order();
        let needed = pow_sat(n as u128, (t * d) as u128);
        budget.check_entries("vertical tensor power", needed)?;
        let mut acc = self.clone();
        for _ in 1..t {
            acc = acc.vertical_kron(self)?;
        }
        Ok(acc)
    }

    /// `(A ⊠ B)_{(i₁,j₁)…(i_d,j_d)} = A_{i₁…i_d} B_{j₁…j_d}`.
    pub fn vertical_kron(&self, other: &Tensor) -> Result<Tensor> {
        if self.order() != other.order() || self.field != other.field {
            return Err(Error::Shape("vertical product of incompatible tensors".into()));
        }
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a * b).collect();
        let mut out = Tensor::zeros(self.field, &dims)?;
        let k = self.field;
        for (ao, &a) in self.data.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let ai = self.multi_index(ao);
            for (bo, &b) in other.data.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let bi = other.multi_index(bo);
                let idx: Vec<usize> = ai
                    .iter()
                    .zip(&bi)
                    .zip(&other.dims)
                    .map(|((&i, &j), &m)| i * m + j)
                    .collect();
                out.set(&idx, k.mul(a, b));
            }
        }
        Ok(out)
    }

    /// The principal subtensor on the index set `subset` (0-based, any order;
    /// kept in increasing order).
    pub fn principal_subtensor(&self, subset: &[usize]) -> Result<Tensor> {
        let n = self.require_side()?;
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut idx = subset.to_vec();
        idx.sort_unstable();
        if idx.windows(2).any(|w| w[0] == w[1]) || idx[idx.len() - 1] >= n {
            return Err(Error::Index(format!("{subset:?} is not a subset of 0..{n}")));
        }
        let d = self.order();
        let m = idx.len();
        let mut out = Tensor::cubical_zeros(self.field, d, m)?;
        for o in 0..out.data.len() {
            let local = out.multi_index(o);
            let global: Vec<usize> = local.iter().map(|&i| idx[i]).collect();
            out.data[o] = self.get(&global);
        }
        Ok(out)
    }

    /// Flattening along `axis`: rows indexed by that axis, columns by the
    /// remaining axes in order.
    pub fn flattening(&self, axis: usize) -> Matrix {
        let n = self.dims[axis];
        let rest = self.data.len() / n;
        let mut m = Matrix::zeros(self.field, n, rest);
        for o in 0..self.data.len() {
            let idx = self.multi_index(o);
            let col = idx
                .iter()
                .zip(&self.dims)
                .enumerate()
                .filter(|&(a, _)| a != axis)
                .fold(0, |acc, (_, (&i, &len))| acc * len + i);
            m.set(idx[axis], col, self.data[o]);
        }
        m
    }

    pub fn flattening_ranks(&self) -> Vec<usize> {
        (0..self.order()).map(|a| self.flattening(a).rank()).collect()
    }

    /// Slices along the last axis, each as an order-(d−1) entry vector.
    pub fn last_axis_slices(&self) -> Vec<Vec<u8>> {
        let nd = *self.dims.last().expect("order >= 1");
        let rest = self.data.len() / nd;
        (0..nd)
            .map(|k| (0..rest).map(|r| self.data[r * nd + k]).collect())
            .collect()
    }

    /// Number of tensors of this shape.
    pub fn count_of_shape(field: PrimeField, dims: &[usize]) -> u128 {
        pow_sat(field.size() as u128, dims.iter().product::<usize>() as u128)
    }

    /// The `index`-th tensor of the shape in lexicographic order of the entry
    /// array (first entry most significant).
    pub fn from_index(field: PrimeField, dims: &[usize], mut index: u128) -> Result<Tensor> {
        let mut t = Tensor::zeros(field, dims)?;
        let p = field.size() as u128;
        for slot in t.data.iter_mut().rev() {
            *slot = (index % p) as u8;
            index /= p;
        }
        Ok(t)
    }

    /// Position of this tensor in the order of [`Tensor::from_index`].
    pub fn index_of(&self) -> u128 {
        let p = self.field.size() as u128;
        self.data.iter().fold(0, |acc, &x| acc * p + x as u128)
    }

    /// Every tensor of the shape, in lexicographic order.
    pub fn enumerate_all(
        field: PrimeField,
        dims: &[usize],
        budget: &Budget,
    ) -> Result<impl Iterator<Item = Tensor>> {
        checked_len(dims)?;
        let total = Tensor::count_of_shape(field, dims);
        budget.check_maps("tensor enumeration", total)?;
        let dims = dims.to_vec();
        Ok((0..total).map(move |i| Tensor::from_index(field, &dims, i).expect("valid shape")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::enumerate_hom;
    use proptest::prelude::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn mat(p: u32, rows: &[Vec<u8>]) -> Matrix {
        Matrix::from_rows(gf(p), rows).unwrap()
    }

    /// Entry-by-entry definition of `φ^{⊗d} S`, independent of the axis-wise
    /// contraction.
    fn apply_by_definition(phi: &Matrix, s: &Tensor) -> Tensor {
        let k = s.field();
        let d = s.order();
        let m = phi.rows();
        let mut out = Tensor::cubical_zeros(k, d, m).unwrap();
        for jo in 0..out.len() {
            let j = out.multi_index(jo);
            let mut acc = 0u8;
            for io in 0..s.len() {
                let i = s.multi_index(io);
                let mut term = s.data()[io];
                for a in 0..d {
                    term = k.mul(term, phi.get(j[a], i[a]));
                }
                acc = k.add(acc, term);
            }
            out.set(&j, acc);
        }
        out
    }

    #[test]
    fn apply_uniform_examples() {
        let k = gf(2);
        let s = Tensor::diagonal_unit(k, 2, 2).unwrap();
        assert_eq!(s.apply_uniform(&Matrix::identity(k, 2)).unwrap(), s);
        assert!(s.apply_uniform(&Matrix::zeros(k, 3, 2)).unwrap().is_zero());
        let t = s.apply_uniform(&mat(2, &[vec![1, 1]])).unwrap();
        assert_eq!(t.dims(), &[1, 1]);
        assert_eq!(t.data(), &[0]);
    }

    #[test]
    fn apply_uniform_rejects_bad_shapes() {
        let k = gf(3);
        let s = Tensor::zeros(k, &[2, 3]).unwrap();
        assert!(s.apply_uniform(&Matrix::identity(k, 2)).is_err());
        let c = Tensor::cubical_zeros(k, 3, 2).unwrap();
        assert!(c.apply_uniform(&Matrix::identity(k, 3)).is_err());
    }

    #[test]
    fn axis_contraction_matches_definition_exhaustively() {
        let k = gf(2);
        let b = Budget::default();
        for d in 1..=3 {
            for s in Tensor::enumerate_all(k, &vec![2; d], &b).unwrap() {
                for phi in enumerate_hom(k, 2, 2, &b).unwrap() {
                    assert_eq!(s.apply_uniform(&phi).unwrap(), apply_by_definition(&phi, &s));
                }
            }
        }
    }

    #[test]
    fn functoriality_exhaustive_tiny() {
        let k = gf(2);
        let b = Budget::default();
        for d in 1..=3 {
            for s in Tensor::enumerate_all(k, &vec![2; d], &b).unwrap() {
                for phi in enumerate_hom(k, 2, 2, &b).unwrap() {
                    let once = s.apply_uniform(&phi).unwrap();
                    for psi in enumerate_hom(k, 2, 1, &b).unwrap() {
                        let composed = s.apply_uniform(&psi.mul(&phi).unwrap()).unwrap();
                        assert_eq!(composed, once.apply_uniform(&psi).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn multilinear_examples() {
        let k = gf(3);
        let s = Tensor::from_entries(k, &[2, 3], vec![1, 2, 0, 0, 1, 1]).unwrap();
        let ids = [Matrix::identity(k, 2), Matrix::identity(k, 3)];
        assert_eq!(s.apply_multilinear(&ids).unwrap(), s);
        let with_zero = [Matrix::identity(k, 2), Matrix::zeros(k, 2, 3)];
        assert!(s.apply_multilinear(&with_zero).unwrap().is_zero());
        assert!(s.apply_multilinear(&[Matrix::identity(k, 2)]).is_err());
        assert!(s.apply_multilinear(&[Matrix::identity(k, 3), Matrix::identity(k, 3)]).is_err());
    }

    #[test]
    fn eval_examples() {
        let k = gf(2);
        let s = Tensor::basis(k, &[2, 2], &[0, 1]).unwrap();
        assert_eq!(s.eval(&[vec![1, 0], vec![0, 1]]).unwrap(), 1);
        let k3 = gf(3);
        let id = Tensor::diagonal_unit(k3, 2, 2).unwrap();
        assert_eq!(id.eval(&[vec![1, 2], vec![1, 1]]).unwrap(), 0);
        assert_eq!(id.eval(&[vec![0, 0], vec![2, 1]]).unwrap(), 0);
        assert!(id.eval(&[vec![1, 2]]).is_err());
        assert!(id.eval(&[vec![1, 2], vec![1]]).is_err());
    }

    #[test]
    fn vertical_product_examples() {
        let k = gf(2);
        let b = Budget::default();
        let s = Tensor::diagonal_unit(k, 3, 2).unwrap();
        assert_eq!(s.vertical_product(1, &b).unwrap(), s);
        let z = Tensor::cubical_zeros(k, 3, 2).unwrap();
        assert!(z.vertical_product(2, &b).unwrap().is_zero());
        let i2 = Tensor::diagonal_unit(k, 2, 2).unwrap();
        assert_eq!(i2.vertical_product(2, &b).unwrap(), Tensor::diagonal_unit(k, 2, 4).unwrap());
        assert_eq!(s.vertical_product(2, &b).unwrap(), Tensor::diagonal_unit(k, 3, 4).unwrap());
        let tight = Budget {
            tensor_entries: 63,
            ..Budget::default()
        };
        assert!(s.vertical_product(2, &tight).unwrap_err().is_budget());
    }

    #[test]
    fn principal_subtensor_examples() {
        let k = gf(2);
        let mut s = Tensor::cubical_zeros(k, 2, 3).unwrap();
        s.set(&[0, 1], 1);
        s.set(&[1, 2], 1);
        assert_eq!(s.principal_subtensor(&[0, 1, 2]).unwrap(), s);
        let single = s.principal_subtensor(&[1]).unwrap();
        assert_eq!(single.dims(), &[1, 1]);
        assert_eq!(single.data(), &[s.get(&[1, 1])]);
        assert!(s.principal_subtensor(&[0, 2]).unwrap().is_zero());
        assert_eq!(s.principal_subtensor(&[]), Err(Error::EmptySubset));
        assert!(matches!(s.principal_subtensor(&[0, 3]), Err(Error::Index(_))));
    }

    #[test]
    fn principal_subtensor_is_a_coordinate_projection() {
        let k = gf(3);
        let s = Tensor::from_index(k, &[3, 3, 3], 123_456_789_012).unwrap();
        for subset in [vec![0, 2], vec![1], vec![0, 1, 2], vec![1, 2]] {
            let mut proj = Matrix::zeros(k, subset.len(), 3);
            for (r, &c) in subset.iter().enumerate() {
                proj.set(r, c, 1);
            }
            assert_eq!(s.principal_subtensor(&subset).unwrap(), s.apply_uniform(&proj).unwrap());
        }
    }

    #[test]
    fn shape_caps() {
        let k = gf(2);
        assert!(Tensor::zeros(k, &[2; 6]).is_err());
        assert!(Tensor::zeros(k, &[]).is_err());
        assert!(Tensor::zeros(k, &[1024, 1025]).unwrap_err().is_budget());
    }

    fn arb_tensor(p: u32, dims: Vec<usize>) -> impl Strategy<Value = Tensor> {
        let len: usize = dims.iter().product();
        proptest::collection::vec(0..p as u8, len)
            .prop_map(move |d| Tensor::from_entries(gf(p), &dims, d).unwrap())
    }

    fn arb_matrix(p: u32, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(0..p as u8, rows * cols)
            .prop_map(move |d| Matrix::from_entries(gf(p), rows, cols, d).unwrap())
    }

    proptest! {
        #[test]
        fn multilinear_on_matrices_is_a_s_bt(
            s in arb_tensor(3, vec![2, 2]),
            a in arb_matrix(3, 2, 2),
            b in arb_matrix(3, 2, 2),
        ) {
            let sm = Matrix::from_entries(gf(3), 2, 2, s.data().to_vec()).unwrap();
            let direct = a.mul(&sm).unwrap().mul(&b.transpose()).unwrap();
            let t = s.apply_multilinear(&[a, b]).unwrap();
            prop_assert_eq!(t.data(), direct.data());
        }

        #[test]
        fn uniform_is_multilinear_with_equal_maps(
            s in arb_tensor(5, vec![2, 2, 2]),
            phi in arb_matrix(5, 3, 2),
        ) {
            let maps = vec![phi.clone(); 3];
            prop_assert_eq!(s.apply_uniform(&phi).unwrap(), s.apply_multilinear(&maps).unwrap());
        }

        #[test]
        fn pullback_duality(
            s in arb_tensor(3, vec![3, 3, 3]),
            phi in arb_matrix(3, 2, 3),
            xs in proptest::collection::vec(proptest::collection::vec(0u8..3, 2), 3),
        ) {
            let t = s.apply_uniform(&phi).unwrap();
            let pulled: Vec<Vec<u8>> = xs
                .iter()
                .map(|x| phi.transpose().mul_vec(x).unwrap())
                .collect();
            prop_assert_eq!(t.eval(&xs).unwrap(), s.eval(&pulled).unwrap());
        }
    }
}
