//! Deciding `S ⪰ T`: whether `T = φ^{⊗d} S` for a single linear map `φ`
//! (uniform), or `T = (φ₁ ⊗ ⋯ ⊗ φ_d) S` for one map per axis (multilinear).
//!
//! [`is_restriction_bruteforce`] walks all of `Hom(K^n, K^m)` and serves as the
//! oracle. The pruned solvers choose the rows of `φ` (covectors on `K^n`) one
//! at a time: entry `T_{j₁…j_d}` equals `S(φ_{j₁}, …, φ_{j_d})`, so it is fixed
//! as soon as rows `j₁, …, j_d` are, and is checked at that point.

use crate::budget::{pow_sat, Budget};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::PrimeField;
use crate::linalg::{enumerate_hom, Matrix};
use crate::tensor::Tensor;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    Uniform,
    Multilinear,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionWitness {
    pub kind: WitnessKind,
    /// One map for [`WitnessKind::Uniform`], one per axis otherwise.
    pub maps: Vec<Matrix>,
}

impl RestrictionWitness {
    pub fn uniform(phi: Matrix) -> Self {
        RestrictionWitness {
            kind: WitnessKind::Uniform,
            maps: vec![phi],
        }
    }

    pub fn replay(&self, s: &Tensor) -> Result<Tensor> {
        match self.kind {
            WitnessKind::Uniform => s.apply_uniform(&self.maps[0]),
            WitnessKind::Multilinear => s.apply_multilinear(&self.maps),
        }
    }

    /// The same restriction written with one map per axis.
    pub fn to_multilinear(&self, order: usize) -> RestrictionWitness {
        match self.kind {
            WitnessKind::Uniform => RestrictionWitness {
                kind: WitnessKind::Multilinear,
                maps: vec![self.maps[0].clone(); order],
            },
            WitnessKind::Multilinear => self.clone(),
        }
    }
}

fn check_pair(s: &Tensor, t: &Tensor) -> Result<()> {
    if s.field() != t.field() {
        return Err(Error::FieldMismatch {
            left: s.field().p(),
            right: t.field().p(),
        });
    }
    if s.order() != t.order() {
        return Err(Error::Shape(format!(
            "order {} vs order {}",
            s.order(),
            t.order()
        )));
    }
    Ok(())
}

/// All covectors on `K^n`, in lexicographic order.
fn covectors(field: PrimeField, n: usize, budget: &Budget) -> Result<Vec<Vec<u8>>> {
    let q = field.size() as u128;
    let total = pow_sat(q, n as u128);
    budget.check_maps("covector enumeration", total)?;
    Ok((0..total)
        .map(|mut i| {
            let mut x = vec![0u8; n];
            for slot in x.iter_mut().rev() {
                *slot = (i % q) as u8;
                i /= q;
            }
            x
        })
        .collect())
}

/// Exhaustive search over `Hom(K^n, K^m)`; returns the first map in
/// enumeration order.
pub fn is_restriction_bruteforce(s: &Tensor, t: &Tensor, budget: &Budget) -> Result<Option<RestrictionWitness>> {
    check_pair(s, t)?;
    let n = s.require_side()?;
    let m = t.require_side()?;
    for phi in enumerate_hom(s.field(), n, m, budget)? {
        if s.apply_uniform(&phi)? == *t {
            return Ok(Some(RestrictionWitness::uniform(phi)));
        }
    }
    Ok(None)
}

pub fn is_restriction(s: &Tensor, t: &Tensor, budget: &Budget) -> Result<Option<RestrictionWitness>> {
    is_restriction_with(s, t, budget, Exec::default())
}

struct UniformSearch<'a> {
    s: &'a Tensor,
    t: &'a Tensor,
    d: usize,
    covectors: Vec<Vec<u8>>,
    /// Output rows in search order.
    order: Vec<usize>,
    /// Admissible covectors per output row (those with `S(x,…,x) = T_{j…j}`).
    candidates: Vec<Vec<usize>>,
}

impl UniformSearch<'_> {
    /// Checks every entry of `T` whose indices lie in `order[..=level]` and
    /// involve `order[level]`, the diagonal excluded.
    fn consistent(&self, rows: &[Option<usize>], level: usize) -> bool {
        let fixed = &self.order[..=level];
        let new_row = self.order[level];
        let k = fixed.len();
        let mut digits = vec![0usize; self.d];
        let total = k.pow(self.d as u32);
        let mut idx = vec![0usize; self.d];
        let mut args: Vec<&[u8]> = Vec::with_capacity(self.d);
        for _ in 0..total {
            for (slot, &dg) in idx.iter_mut().zip(&digits) {
                *slot = fixed[dg];
            }
            let involves_new = idx.contains(&new_row);
            let diagonal = idx.iter().all(|&i| i == idx[0]);
            if involves_new && !diagonal {
                args.clear();
                args.extend(idx.iter().map(|&j| self.covectors[rows[j].expect("fixed")].as_slice()));
                if self.s.eval_unchecked(&args) != self.t.get(&idx) {
                    return false;
                }
            }
            for dg in digits.iter_mut().rev() {
                *dg += 1;
                if *dg < k {
                    break;
                }
                *dg = 0;
            }
        }
        true
    }

    fn extend(&self, rows: &mut Vec<Option<usize>>, level: usize) -> bool {
        if level == self.order.len() {
            return true;
        }
        let row = self.order[level];
        for &c in &self.candidates[row] {
            rows[row] = Some(c);
            if self.consistent(rows, level) && self.extend(rows, level + 1) {
                return true;
            }
        }
        rows[row] = None;
        false
    }

    fn witness(&self, rows: &[Option<usize>]) -> Matrix {
        let m = rows.len();
        let n = self.s.dims()[0];
        let data: Vec<u8> = rows
            .iter()
            .flat_map(|r| self.covectors[r.expect("complete")].iter().copied())
            .collect();
        Matrix::from_entries(self.s.field(), m, n, data).expect("shape")
    }
}

/// Pruned backtracking decision of `S ⪰ T`. Agrees with
/// [`is_restriction_bruteforce`] on existence; the witness may differ.
pub fn is_restriction_with(
    s: &Tensor,
    t: &Tensor,
    budget: &Budget,
    exec: Exec,
) -> Result<Option<RestrictionWitness>> {
    check_pair(s, t)?;
    let n = s.require_side()?;
    let m = t.require_side()?;
    if s == t {
        return Ok(Some(RestrictionWitness::uniform(Matrix::identity(s.field(), n))));
    }
    let d = s.order();
    let covectors = covectors(s.field(), n, budget)?;
    let diag: Vec<u8> = covectors
        .iter()
        .map(|x| s.eval_unchecked(&vec![x.as_slice(); d]))
        .collect();
    let candidates: Vec<Vec<usize>> = (0..m)
        .map(|j| {
            let target = t.get(&vec![j; d]);
            (0..covectors.len()).filter(|&c| diag[c] == target).collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    // fail-first: most constrained output rows first
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&j| (candidates[j].len(), j));
    let search = UniformSearch {
        s,
        t,
        d,
        covectors,
        order,
        candidates,
    };
    let first = search.order[0];
    let found = exec.find_map_first(search.candidates[first].len(), |ci| {
        let mut rows = vec![None; m];
        rows[first] = Some(search.candidates[first][ci]);
        (search.consistent(&rows, 0) && search.extend(&mut rows, 1)).then(|| search.witness(&rows))
    });
    Ok(found.map(RestrictionWitness::uniform))
}

struct MultilinearSearch<'a> {
    s: &'a Tensor,
    t: &'a Tensor,
    covectors: Vec<Vec<Vec<u8>>>,
    /// `(axis, row)` pairs in round-robin order.
    vars: Vec<(usize, usize)>,
}

impl MultilinearSearch<'_> {
    /// After assigning `(axis, row)`, checks the entries of `T` with that row on
    /// that axis and already-assigned rows elsewhere.
    fn consistent(&self, rows: &[Vec<usize>], axis: usize, row: usize) -> bool {
        let d = self.s.order();
        let extents: Vec<usize> = (0..d)
            .map(|a| if a == axis { 1 } else { rows[a].len() })
            .collect();
        if extents.contains(&0) {
            return true;
        }
        let total: usize = extents.iter().product();
        let mut digits = vec![0usize; d];
        let mut args: Vec<&[u8]> = Vec::with_capacity(d);
        let mut idx = vec![0usize; d];
        for _ in 0..total {
            for a in 0..d {
                idx[a] = if a == axis { row } else { digits[a] };
            }
            args.clear();
            args.extend((0..d).map(|a| self.covectors[a][rows[a][idx[a]]].as_slice()));
            if self.s.eval_unchecked(&args) != self.t.get(&idx) {
                return false;
            }
            for a in (0..d).rev() {
                digits[a] += 1;
                if digits[a] < extents[a] {
                    break;
                }
                digits[a] = 0;
            }
        }
        true
    }

    fn extend(&self, rows: &mut Vec<Vec<usize>>, level: usize) -> bool {
        if level == self.vars.len() {
            return true;
        }
        let (axis, row) = self.vars[level];
        for c in 0..self.covectors[axis].len() {
            rows[axis].push(c);
            if self.consistent(rows, axis, row) && self.extend(rows, level + 1) {
                return true;
            }
            rows[axis].pop();
        }
        false
    }

    fn witness(&self, rows: &[Vec<usize>]) -> Vec<Matrix> {
        rows.iter()
            .enumerate()
            .map(|(a, r)| {
                let data: Vec<u8> = r.iter().flat_map(|&c| self.covectors[a][c].iter().copied()).collect();
                Matrix::from_entries(self.s.field(), r.len(), self.s.dims()[a], data).expect("shape")
            })
            .collect()
    }
}

pub fn is_restriction_multilinear(s: &Tensor, t: &Tensor, budget: &Budget) -> Result<Option<RestrictionWitness>> {
    is_restriction_multilinear_with(s, t, budget, Exec::default())
}

/// Decides whether `T = (φ₁ ⊗ ⋯ ⊗ φ_d) S` for some maps `φ_k: K^{n_k} → K^{m_k}`.
/// Rows of the `φ_k` are chosen round-robin across axes.
pub fn is_restriction_multilinear_with(
    s: &Tensor,
    t: &Tensor,
    budget: &Budget,
    exec: Exec,
) -> Result<Option<RestrictionWitness>> {
    check_pair(s, t)?;
    let d = s.order();
    if s == t {
        return Ok(Some(RestrictionWitness {
            kind: WitnessKind::Multilinear,
            maps: s.dims().iter().map(|&n| Matrix::identity(s.field(), n)).collect(),
        }));
    }
    let covectors: Vec<Vec<Vec<u8>>> = s
        .dims()
        .iter()
        .map(|&n| covectors(s.field(), n, budget))
        .collect::<Result<_>>()?;
    let max_rows = *t.dims().iter().max().expect("order >= 1");
    let mut vars = Vec::new();
    for j in 0..max_rows {
        for a in 0..d {
            if j < t.dims()[a] {
                vars.push((a, j));
            }
        }
    }
    let search = MultilinearSearch {
        s,
        t,
        covectors,
        vars,
    };
    let (axis0, row0) = search.vars[0];
    let found = exec.find_map_first(search.covectors[axis0].len(), |c| {
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); d];
        rows[axis0].push(c);
        (search.consistent(&rows, axis0, row0) && search.extend(&mut rows, 1)).then(|| search.witness(&rows))
    });
    Ok(found.map(|maps| RestrictionWitness {
        kind: WitnessKind::Multilinear,
        maps,
    }))
}

/// `S ⪰ T` and `T ⪰ S`.
pub fn mutually_restrict(s: &Tensor, t: &Tensor, budget: &Budget) -> Result<bool> {
    Ok(is_restriction(s, t, budget)?.is_some() && is_restriction(t, s, budget)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::enumerate_gl;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn self_restriction_is_identity() {
        let k = gf(3);
        let s = Tensor::diagonal_unit(k, 3, 2).unwrap();
        let w = is_restriction(&s, &s, &b()).unwrap().unwrap();
        assert_eq!(w.maps, vec![Matrix::identity(k, 2)]);
        let w = is_restriction_multilinear(&s, &s, &b()).unwrap().unwrap();
        assert_eq!(w.maps, vec![Matrix::identity(k, 2); 3]);
    }

    fn one_by_one(p: u32, d: usize, v: u8) -> Tensor {
        Tensor::from_entries(gf(p), &vec![1; d], vec![v]).unwrap()
    }

    fn assert_witness(s: &Tensor, t: &Tensor, w: Option<RestrictionWitness>) {
        let w = w.expect("restriction exists");
        assert_eq!(w.replay(s).unwrap(), *t);
    }

    #[test]
    fn bruteforce_examples() {
        let k = gf(2);
        let s = Tensor::diagonal_unit(k, 2, 2).unwrap();
        let w = is_restriction_bruteforce(&s, &s, &b()).unwrap().unwrap();
        assert_eq!(w.replay(&s).unwrap(), s);
        let zero = Tensor::cubical_zeros(k, 2, 3).unwrap();
        let w = is_restriction_bruteforce(&s, &zero, &b()).unwrap().unwrap();
        assert!(w.maps[0].is_zero());
        let t = one_by_one(2, 2, 1);
        assert_witness(&s, &t, is_restriction_bruteforce(&s, &t, &b()).unwrap());
    }

    #[test]
    fn pruned_examples() {
        let k = gf(2);
        let i3 = Tensor::diagonal_unit(k, 2, 3).unwrap();
        let i2 = Tensor::diagonal_unit(k, 2, 2).unwrap();
        assert_witness(&i3, &i2, is_restriction(&i3, &i2, &b()).unwrap());
        let rank_one = Tensor::basis(k, &[2, 2], &[0, 0]).unwrap();
        assert!(is_restriction(&rank_one, &i2, &b()).unwrap().is_none());
        let s = Tensor::from_index(gf(3), &[3, 3, 3], 987_654_321).unwrap();
        let perm = Matrix::permutation(gf(3), &[2, 0, 1]);
        let t = s.apply_uniform(&perm).unwrap();
        assert_witness(&s, &t, is_restriction(&s, &t, &b()).unwrap());
    }

    #[test]
    fn shape_errors() {
        let k = gf(2);
        let s = Tensor::zeros(k, &[2, 3]).unwrap();
        let t = Tensor::cubical_zeros(k, 2, 2).unwrap();
        assert!(is_restriction(&s, &t, &b()).is_err());
        assert!(is_restriction_bruteforce(&t, &s, &b()).is_err());
        let t3 = Tensor::cubical_zeros(k, 3, 2).unwrap();
        assert!(matches!(is_restriction(&t, &t3, &b()), Err(Error::Shape(_))));
        assert!(matches!(is_restriction_multilinear(&t, &t3, &b()), Err(Error::Shape(_))));
        let other = Tensor::cubical_zeros(gf(3), 2, 2).unwrap();
        assert!(matches!(is_restriction(&t, &other, &b()), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn oracle_agreement_exhaustive_small() {
        let k = gf(2);
        for d in [2, 3] {
            let mut all = Vec::new();
            for n in 1..=2 {
                all.extend(Tensor::enumerate_all(k, &vec![n; d], &b()).unwrap());
            }
            for s in &all {
                for t in &all {
                    let brute = is_restriction_bruteforce(s, t, &b()).unwrap();
                    let pruned = is_restriction_with(s, t, &b(), Exec::Sequential).unwrap();
                    assert_eq!(brute.is_some(), pruned.is_some(), "{s:?} vs {t:?}");
                    if let Some(w) = pruned {
                        assert_eq!(w.replay(s).unwrap(), *t);
                    }
                }
            }
        }
    }

    #[test]
    fn parallel_and_sequential_return_the_same_witness() {
        let k = gf(3);
        let s = Tensor::from_index(k, &[3, 3], 5_000).unwrap();
        for idx in [0u128, 17, 4_000, 19_682] {
            let t = Tensor::from_index(k, &[2, 2], idx % 81).unwrap();
            let a = is_restriction_with(&s, &t, &b(), Exec::Sequential).unwrap();
            let c = is_restriction_with(&s, &t, &b(), Exec::Parallel).unwrap();
            assert_eq!(a, c);
        }
    }

    #[test]
    fn multilinear_examples() {
        let k = gf(3);
        let s = Tensor::from_index(k, &[2, 3, 2], 77_777).unwrap();
        let ids: Vec<Matrix> = s.dims().iter().map(|&n| Matrix::identity(k, n)).collect();
        assert_eq!(s.apply_multilinear(&ids).unwrap(), s);
        assert_witness(&s, &s, is_restriction_multilinear(&s, &s, &b()).unwrap());
        let cube = Tensor::from_index(k, &[2, 2, 2], 4_321).unwrap();
        let phi = Matrix::from_rows(k, &[vec![1, 2], vec![0, 1], vec![2, 2]]).unwrap();
        let t = cube.apply_uniform(&phi).unwrap();
        let uniform = is_restriction(&cube, &t, &b()).unwrap().unwrap();
        let as_multi = uniform.to_multilinear(3);
        assert_eq!(as_multi.replay(&cube).unwrap(), t);
        assert_witness(&cube, &t, is_restriction_multilinear(&cube, &t, &b()).unwrap());
    }

    #[test]
    fn multilinear_matrix_restriction_is_rank_comparison() {
        let k = gf(2);
        let all: Vec<Tensor> = Tensor::enumerate_all(k, &[2, 2], &b()).unwrap().collect();
        for s in &all {
            for t in &all {
                let rs = Tensor::flattening(s, 0).rank();
                let rt = Tensor::flattening(t, 0).rank();
                let found = is_restriction_multilinear(s, t, &b()).unwrap();
                assert_eq!(found.is_some(), rt <= rs);
            }
        }
    }

    #[test]
    fn mutual_restriction_examples() {
        let k = gf(3);
        let s = Tensor::from_index(k, &[2, 2, 2], 1_234).unwrap();
        assert!(mutually_restrict(&s, &s, &b()).unwrap());
        for g in enumerate_gl(k, 2, &b()).unwrap().step_by(7) {
            let t = s.apply_uniform(&g).unwrap();
            assert!(mutually_restrict(&s, &t, &b()).unwrap());
        }
        let k2 = gf(2);
        let i2 = Tensor::diagonal_unit(k2, 2, 2).unwrap();
        let e11 = Tensor::basis(k2, &[2, 2], &[0, 0]).unwrap();
        assert!(!mutually_restrict(&i2, &e11, &b()).unwrap());
    }

    #[test]
    fn witnesses_compose() {
        let k = gf(2);
        let s = Tensor::diagonal_unit(k, 3, 3).unwrap();
        let t = Tensor::diagonal_unit(k, 3, 2).unwrap();
        let u = one_by_one(2, 3, 1);
        let phi = is_restriction(&s, &t, &b()).unwrap().unwrap().maps.remove(0);
        let psi = is_restriction(&t, &u, &b()).unwrap().unwrap().maps.remove(0);
        assert_eq!(s.apply_uniform(&psi.mul(&phi).unwrap()).unwrap(), u);
    }
}
