//! Rank notions for tensors over GF(p).
//!
//! * tensor rank, by searching for `r` rank-one tensors of order `d−1` whose
//!   span contains every slice along the last axis;
//! * slice rank of 3-way tensors, by searching for subspaces `U₁, U₂, U₃`
//!   of least total dimension such that `S` vanishes in
//!   `(V₁/U₁) ⊗ (V₂/U₂) ⊗ (V₃/U₃)`;
//! * analytic rank `−log_p E`, with `E = a·|V_d| / ∏|V_i|` and `a` the number
//!   of tuples `(x₁, …, x_{d−1})` whose contraction with `T` is the zero form,
//!   checked against a character-sum evaluation over all `d`-tuples;
//! * interval estimates of `rk(S^{⊠t})^{1/t}`.

use std::fmt;

use num_rational::Ratio;

use crate::budget::{pow_sat, Budget};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::PrimeField;
use crate::linalg::Matrix;
use crate::tensor::Tensor;

/// All nonzero vectors of `K^n` whose first nonzero coordinate is 1.
fn normalized_vectors(field: PrimeField, n: usize) -> Vec<Vec<u8>> {
    let q = field.size();
    (1..q.pow(n as u32))
        .map(|mut i| {
            let mut v = vec![0u8; n];
            for slot in v.iter_mut().rev() {
                *slot = (i % q) as u8;
                i /= q;
            }
            v
        })
        .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
        .collect()
}

/// Nonzero rank-one tensors of the given shape, one per scalar class.
fn projective_rank_ones(field: PrimeField, dims: &[usize]) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = vec![vec![1]];
    for &n in dims {
        let vs = normalized_vectors(field, n);
        let mut next = Vec::with_capacity(out.len() * vs.len());
        for a in &out {
            for v in &vs {
                let mut t = Vec::with_capacity(a.len() * n);
                for &x in a {
                    t.extend(v.iter().map(|&y| field.mul(x, y)));
                }
                next.push(t);
            }
        }
        out = next;
    }
    out
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensorRank {
    Exact(usize),
    /// Every decomposition length up to the cap was ruled out.
    AboveCap(usize),
    /// Lengths below `lower` were ruled out; the search at `lower` did not
    /// fit in the budget.
    Undetermined { lower: usize },
}

impl TensorRank {
    pub fn exact(self) -> Option<usize> {
        match self {
            TensorRank::Exact(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for TensorRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorRank::Exact(r) => write!(f, "rank={r}"),
            TensorRank::AboveCap(r) => write!(f, "rank>{r}"),
            TensorRank::Undetermined { lower } => {
                write!(f, "rank>={lower} undetermined")
            }
        }
    }
}

/// Largest matrix rank over the flattenings `axis vs. rest`; a lower bound on
/// tensor rank and on slice rank's dual.
pub fn max_flattening_rank(s: &Tensor) -> usize {
    s.flattening_ranks().into_iter().max().unwrap_or(0)
}

pub fn tensor_rank(s: &Tensor, r_max: usize, budget: &Budget) -> Result<TensorRank> {
    tensor_rank_with(s, r_max, budget, Exec::default())
}

/// Exact tensor rank if it is at most `r_max`.
pub fn tensor_rank_with(s: &Tensor, r_max: usize, budget: &Budget, exec: Exec) -> Result<TensorRank> {
    if s.is_zero() {
        return Ok(TensorRank::Exact(0));
    }
    let d = s.order();
    if d == 1 {
        return Ok(if r_max >= 1 {
            TensorRank::Exact(1)
        } else {
            TensorRank::AboveCap(r_max)
        });
    }
    let lower = max_flattening_rank(s);
    if d == 2 {
        return Ok(if lower <= r_max {
            TensorRank::Exact(lower)
        } else {
            TensorRank::AboveCap(r_max)
        });
    }
    let field = s.field();
    let head = &s.dims()[..d - 1];
    let atoms = projective_rank_ones(field, head);
    let slices = s.last_axis_slices();
    let slice_span = Matrix::from_rows(field, &slices)?;
    let slice_rank = slice_span.rank();
    for r in lower.max(slice_rank)..=r_max {
        let nodes = binomial(atoms.len() as u128, r as u128);
        if budget.check_nodes("rank decomposition search", nodes).is_err() {
            return Ok(TensorRank::Undetermined { lower: r });
        }
        if spans_slices(field, &atoms, &slices, slice_rank, r, exec) {
            return Ok(TensorRank::Exact(r));
        }
    }
    Ok(TensorRank::AboveCap(r_max))
}

/// Whether some `r` of `atoms` span a space containing every slice.
fn spans_slices(field: PrimeField, atoms: &[Vec<u8>], slices: &[Vec<u8>], slice_rank: usize, r: usize, exec: Exec) -> bool {
    if r == 0 {
        return slice_rank == 0;
    }
    let n = atoms.len();
    if r > n {
        return false;
    }
    let contains = |chosen: &[usize]| -> bool {
        let mut rows: Vec<Vec<u8>> = chosen.iter().map(|&i| atoms[i].clone()).collect();
        let base = Matrix::from_rows(field, &rows).expect("rows").rank();
        rows.extend(slices.iter().cloned());
        Matrix::from_rows(field, &rows).expect("rows").rank() == base
    };
    exec.find_map_first(n - r + 1, |first| {
        let mut chosen = vec![first];
        search_combinations(n, r, &mut chosen, &contains).then_some(())
    })
    .is_some()
}

fn search_combinations(n: usize, r: usize, chosen: &mut Vec<usize>, accept: &dyn Fn(&[usize]) -> bool) -> bool {
    if chosen.len() == r {
        return accept(chosen);
    }
    let start = chosen.last().map_or(0, |&c| c + 1);
    let remaining = r - chosen.len();
    for next in start..=n - remaining {
        chosen.push(next);
        if search_combinations(n, r, chosen, accept) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Every subspace of `K^n`, each as a row basis in reduced echelon form.
fn subspaces(field: PrimeField, n: usize, budget: &Budget) -> Result<Vec<Matrix>> {
    let q = field.size() as u128;
    let mut out = vec![Matrix::zeros(field, 0, n)];
    for k in 1..=n {
        let total = pow_sat(q, (k * n) as u128);
        budget.check_maps("subspace enumeration", total)?;
        for idx in 0..total {
            let m = crate::linalg::hom_from_index(field, n, k, idx);
            let red = m.rref();
            if red.rank == k && red.matrix == m {
                out.push(m);
            }
        }
    }
    Ok(out)
}

/// Slice rank of a 3-way tensor.
pub fn slice_rank_d3(s: &Tensor, budget: &Budget) -> Result<usize> {
    slice_rank_d3_with(s, budget, Exec::default())
}

pub fn slice_rank_d3_with(s: &Tensor, budget: &Budget, exec: Exec) -> Result<usize> {
    if s.order() != 3 {
        return Err(Error::Shape(format!(
            "slice rank is implemented for order 3, got order {}",
            s.order()
        )));
    }
    if s.is_zero() {
        return Ok(0);
    }
    let field = s.field();
    let dims = s.dims();
    // (dimension of U, quotient map with kernel U)
    let per_axis: Vec<Vec<(usize, Option<Matrix>)>> = dims
        .iter()
        .map(|&n| -> Result<Vec<(usize, Option<Matrix>)>> {
            Ok(subspaces(field, n, budget)?
                .into_iter()
                .map(|basis| {
                    let k = basis.rows();
                    if k == n {
                        return (k, None);
                    }
                    let annihilator = basis.kernel();
                    let quotient = Matrix::from_rows(field, &annihilator).expect("rows");
                    (k, Some(quotient))
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    let total = per_axis.iter().map(|v| v.len() as u128).product::<u128>();
    budget.check_nodes("slice rank subspace search", total)?;
    let upper = *dims.iter().min().expect("order 3");
    let best = exec.map(per_axis[0].len(), |i| {
        let (k0, q0) = &per_axis[0][i];
        let mut best = upper;
        for (k1, q1) in &per_axis[1] {
            if k0 + k1 >= best {
                continue;
            }
            for (k2, q2) in &per_axis[2] {
                let total = k0 + k1 + k2;
                if total >= best {
                    continue;
                }
                let vanishes = match (q0, q1, q2) {
                    (Some(a), Some(b), Some(c)) => s
                        .apply_multilinear(&[a.clone(), b.clone(), c.clone()])
                        .expect("shapes")
                        .is_zero(),
                    _ => true,
                };
                if vanishes {
                    best = total;
                }
            }
        }
        best
    });
    Ok(best.into_iter().min().unwrap_or(upper))
}

/// `a`, `E` and `−log_p E` for a tensor of order at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyticRank {
    pub field: PrimeField,
    /// Tuples `(x₁, …, x_{d−1})` with `T(x₁, …, x_{d−1}, ·) ≡ 0`.
    pub zero_count: u64,
    /// `|V₁| ⋯ |V_{d−1}|`.
    pub tuples: u64,
    /// `E = a·|V_d| / ∏|V_i| = a / (|V₁| ⋯ |V_{d−1}|)`.
    pub expectation: Ratio<u64>,
}

impl AnalyticRank {
    /// `−log_p E`, exact when `E` is a power of `p`.
    pub fn value(&self) -> f64 {
        if let Some(k) = self.integer_value() {
            return k as f64;
        }
        let e = *self.expectation.numer() as f64 / *self.expectation.denom() as f64;
        -e.ln() / (self.field.size() as f64).ln()
    }

    /// `k` when `E = p^{−k}`.
    pub fn integer_value(&self) -> Option<u32> {
        if *self.expectation.numer() != 1 {
            return None;
        }
        let mut den = *self.expectation.denom();
        let p = self.field.size() as u64;
        let mut k = 0;
        while den.is_multiple_of(p) {
            den /= p;
            k += 1;
        }
        (den == 1).then_some(k)
    }
}

impl fmt::Display for AnalyticRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "E={}/{} rank={}",
            self.expectation.numer(),
            self.expectation.denom(),
            self.value()
        )
    }
}

fn all_vectors(field: PrimeField, n: usize) -> Vec<Vec<u8>> {
    let q = field.size();
    (0..q.pow(n as u32))
        .map(|mut i| {
            let mut v = vec![0u8; n];
            for slot in v.iter_mut().rev() {
                *slot = (i % q) as u8;
                i /= q;
            }
            v
        })
        .collect()
}

fn count_annihilating(field: PrimeField, data: &[u8], axes: &[Vec<Vec<u8>>]) -> u64 {
    match axes.split_first() {
        None => data.iter().all(|&x| x == 0) as u64,
        Some((vs, rest)) => vs
            .iter()
            .map(|x| {
                let t = Tensor::from_entries(field, &[x.len(), data.len() / x.len()], data.to_vec())
                    .expect("shape");
                count_annihilating(field, &t.contract_leading(&[x]), rest)
            })
            .sum(),
    }
}

pub fn analytic_rank(t: &Tensor, budget: &Budget) -> Result<AnalyticRank> {
    analytic_rank_with(t, budget, Exec::default())
}

/// Counting evaluation of `E`; the sweep is split over `x₁`.
pub fn analytic_rank_with(t: &Tensor, budget: &Budget, exec: Exec) -> Result<AnalyticRank> {
    let d = t.order();
    if d < 2 {
        return Err(Error::Precondition("analytic rank needs order at least 2".into()));
    }
    let field = t.field();
    let head = &t.dims()[..d - 1];
    let exponent: usize = head.iter().sum();
    let tuples = pow_sat(field.size() as u128, exponent as u128);
    budget.check_nodes("analytic rank counting sweep", tuples)?;
    let axes: Vec<Vec<Vec<u8>>> = head.iter().map(|&n| all_vectors(field, n)).collect();
    let first = &axes[0];
    let zero_count = exec.sum(first.len() as u64, |i| {
        let contracted = t.contract_leading(&[&first[i as usize]]);
        count_annihilating(field, &contracted, &axes[1..])
    });
    let tuples = tuples as u64;
    Ok(AnalyticRank {
        field,
        zero_count,
        tuples,
        expectation: Ratio::new(zero_count, tuples),
    })
}

/// Value distribution of `T(x₁, …, x_d)` over all `d`-tuples of covectors.
/// `Σ χ(T(x))` with `χ(a) = ω^a` is `Σ_r counts[r]·ω^r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterSum {
    pub counts: Vec<u64>,
}

impl CharacterSum {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// The expectation as a rational, when `Σ counts[r] ω^r` is rational,
    /// i.e. when all nonzero residues occur equally often.
    pub fn expectation(&self) -> Option<Ratio<u64>> {
        let c = self.counts[1];
        if self.counts[1..].iter().any(|&x| x != c) || self.counts[0] < c {
            return None;
        }
        Some(Ratio::new(self.counts[0] - c, self.total()))
    }
}

pub fn character_sum(t: &Tensor, budget: &Budget) -> Result<CharacterSum> {
    character_sum_with(t, budget, Exec::default())
}

/// Evaluates `T` at every `d`-tuple directly from its nonzero entries.
pub fn character_sum_with(t: &Tensor, budget: &Budget, exec: Exec) -> Result<CharacterSum> {
    let field = t.field();
    let p = field.size();
    let exponent: usize = t.dims().iter().sum();
    let total = pow_sat(p as u128, exponent as u128);
    budget.check_nodes("character sum sweep", total)?;
    let support: Vec<(Vec<usize>, u8)> = t
        .data()
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(o, &v)| (t.multi_index(o), v))
        .collect();
    let axes: Vec<Vec<Vec<u8>>> = t.dims().iter().map(|&n| all_vectors(field, n)).collect();
    let first = &axes[0];
    let per_first: Vec<Vec<u64>> = exec.map(first.len(), |i| {
        let mut counts = vec![0u64; p];
        let mut choice = vec![0usize; axes.len()];
        choice[0] = i;
        loop {
            let mut value = 0u8;
            for (idx, v) in &support {
                let mut term = *v;
                for (a, &ia) in idx.iter().enumerate() {
                    term = field.mul(term, axes[a][choice[a]][ia]);
                }
                value = field.add(value, term);
            }
            counts[value as usize] += 1;
            // odometer over axes 1..d
            let mut a = axes.len() - 1;
            loop {
                if a == 0 {
                    return counts;
                }
                choice[a] += 1;
                if choice[a] < axes[a].len() {
                    break;
                }
                choice[a] = 0;
                a -= 1;
            }
        }
    });
    let mut counts = vec![0u64; p];
    for c in per_first {
        for (acc, x) in counts.iter_mut().zip(c) {
            *acc += x;
        }
    }
    Ok(CharacterSum { counts })
}

/// Bounds on `rk(S^{⊠t})` for one `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AsymptoticBound {
    pub t: usize,
    /// Largest flattening rank of `S^{⊠t}`.
    pub lower: usize,
    /// Best known decomposition length, if any.
    pub upper: Option<usize>,
    pub exact: bool,
}

impl AsymptoticBound {
    pub fn lower_estimate(&self) -> f64 {
        (self.lower as f64).powf(1.0 / self.t as f64)
    }

    pub fn upper_estimate(&self) -> Option<f64> {
        self.upper.map(|u| (u as f64).powf(1.0 / self.t as f64))
    }
}

/// For `t = 1..=t_max`: flattening lower bound and decomposition upper bound
/// on `rk(S^{⊠t})`, exact where the search fits the budget. `r_max` caps the
/// rank search for `S` itself.
pub fn asymptotic_rank_bounds(s: &Tensor, t_max: usize, r_max: usize, budget: &Budget) -> Result<Vec<AsymptoticBound>> {
    s.require_side()?;
    let base = tensor_rank(s, r_max, budget)?.exact();
    let mut out = Vec::with_capacity(t_max);
    for t in 1..=t_max {
        let st = s.vertical_product(t, budget)?;
        let lower = max_flattening_rank(&st);
        // rk(S^{⊠t}) ≤ rk(S)^t
        let product_upper = base.map(|r| r.pow(t as u32));
        let bound = match product_upper {
            Some(u) if u == lower => AsymptoticBound {
                t,
                lower,
                upper: Some(u),
                exact: true,
            },
            _ => {
                let cap = product_upper.map_or(r_max.max(lower), |u| u.saturating_sub(1));
                match tensor_rank(&st, cap, budget)? {
                    TensorRank::Exact(r) => AsymptoticBound {
                        t,
                        lower: r,
                        upper: Some(r),
                        exact: true,
                    },
                    TensorRank::AboveCap(_) => AsymptoticBound {
                        t,
                        lower: product_upper.map_or(cap + 1, |u| u),
                        upper: product_upper,
                        exact: product_upper.is_some(),
                    },
                    TensorRank::Undetermined { lower: l } => AsymptoticBound {
                        t,
                        lower: l.max(lower),
                        upper: product_upper,
                        exact: false,
                    },
                }
            }
        };
        out.push(bound);
    }
    Ok(out)
}

/// Sorted distinct values of `E` over every tensor of a cubical shape.
pub fn analytic_rank_spectrum(field: PrimeField, d: usize, n: usize, budget: &Budget) -> Result<Vec<Ratio<u64>>> {
    let all: Vec<Tensor> = Tensor::enumerate_all(field, &vec![n; d], budget)?.collect();
    let exec = Exec::default();
    let values = exec.map(all.len(), |i| {
        analytic_rank_with(&all[i], budget, Exec::Sequential).map(|a| a.expectation)
    });
    let mut es: Vec<Ratio<u64>> = values.into_iter().collect::<Result<_>>()?;
    es.sort();
    es.dedup();
    Ok(es)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::enumerate_hom;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    /// Decomposition search straight from the definition: try every multiset
    /// of `r` nonzero rank-one tensors.
    fn brute_rank(s: &Tensor, r_max: usize) -> Option<usize> {
        let k = s.field();
        let mut ones: Vec<Tensor> = Vec::new();
        let vecs: Vec<Vec<Vec<u8>>> = s.dims().iter().map(|&n| all_vectors(k, n)).collect();
        let mut choice = vec![0usize; s.order()];
        loop {
            let vs: Vec<Vec<u8>> = choice.iter().enumerate().map(|(a, &c)| vecs[a][c].clone()).collect();
            let t = Tensor::outer(k, &vs).unwrap();
            if !t.is_zero() && !ones.contains(&t) {
                ones.push(t);
            }
            let mut a = s.order();
            loop {
                if a == 0 {
                    break;
                }
                a -= 1;
                choice[a] += 1;
                if choice[a] < vecs[a].len() {
                    break;
                }
                choice[a] = 0;
                if a == 0 {
                    a = usize::MAX;
                    break;
                }
            }
            if a == usize::MAX {
                break;
            }
        }
        fn go(ones: &[Tensor], start: usize, left: usize, acc: &Tensor, target: &Tensor) -> bool {
            if left == 0 {
                return acc == target;
            }
            (start..ones.len()).any(|i| go(ones, i, left - 1, &acc.add(&ones[i]).unwrap(), target))
        }
        let zero = Tensor::zeros(k, s.dims()).unwrap();
        (0..=r_max).find(|&r| go(&ones, 0, r, &zero, s))
    }

    #[test]
    fn tensor_rank_examples() {
        let k = gf(2);
        let zero = Tensor::cubical_zeros(k, 3, 2).unwrap();
        assert_eq!(tensor_rank(&zero, 3, &b()).unwrap(), TensorRank::Exact(0));
        let e111 = Tensor::basis(k, &[2, 2, 2], &[0, 0, 0]).unwrap();
        assert_eq!(tensor_rank(&e111, 3, &b()).unwrap(), TensorRank::Exact(1));
        let diag = Tensor::diagonal_unit(k, 3, 2).unwrap();
        assert_eq!(tensor_rank(&diag, 3, &b()).unwrap(), TensorRank::Exact(2));
        assert_eq!(tensor_rank(&diag, 1, &b()).unwrap(), TensorRank::AboveCap(1));
        assert_eq!(brute_rank(&diag, 3), Some(2));
    }

    #[test]
    fn tensor_rank_matches_definition_exhaustively() {
        for (p, dims) in [(2, vec![2, 2, 2]), (2, vec![1, 2, 3]), (3, vec![2, 2, 1])] {
            let k = gf(p);
            for s in Tensor::enumerate_all(k, &dims, &b()).unwrap() {
                let fast = tensor_rank_with(&s, 4, &b(), Exec::Sequential).unwrap().exact();
                assert_eq!(fast, brute_rank(&s, 4), "{s:?}");
            }
        }
    }

    #[test]
    fn tensor_rank_budget_gives_partial_answer() {
        let k = gf(2);
        let diag = Tensor::diagonal_unit(k, 3, 3).unwrap();
        let tight = Budget {
            search_nodes: 10,
            ..Budget::default()
        };
        assert_eq!(
            tensor_rank(&diag, 5, &tight).unwrap(),
            TensorRank::Undetermined { lower: 3 }
        );
        assert_eq!(tensor_rank(&diag, 5, &b()).unwrap(), TensorRank::Exact(3));
    }

    #[test]
    fn slice_rank_examples() {
        let k = gf(2);
        assert_eq!(slice_rank_d3(&Tensor::cubical_zeros(k, 3, 3).unwrap(), &b()).unwrap(), 0);
        let one = Tensor::outer(k, &[vec![1, 1], vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(slice_rank_d3(&one, &b()).unwrap(), 1);
        for n in 1..=3 {
            let diag = Tensor::diagonal_unit(k, 3, n).unwrap();
            assert_eq!(slice_rank_d3(&diag, &b()).unwrap(), n);
        }
        assert!(slice_rank_d3(&Tensor::diagonal_unit(k, 2, 2).unwrap(), &b()).is_err());
    }

    #[test]
    fn slice_rank_bounded_by_tensor_and_flattening_rank() {
        let k = gf(2);
        for s in Tensor::enumerate_all(k, &[2, 2, 2], &b()).unwrap() {
            let sr = slice_rank_d3_with(&s, &b(), Exec::Sequential).unwrap();
            let tr = tensor_rank(&s, 4, &b()).unwrap().exact().unwrap();
            let fr = *s.flattening_ranks().iter().min().unwrap();
            assert!(sr <= tr && sr <= fr);
        }
    }

    #[test]
    fn analytic_rank_examples() {
        let k = gf(2);
        let zero = Tensor::cubical_zeros(k, 3, 2).unwrap();
        let ar = analytic_rank(&zero, &b()).unwrap();
        assert_eq!(ar.expectation, Ratio::new(1, 1));
        assert_eq!(ar.value(), 0.0);
        let xy = Tensor::from_entries(k, &[1, 1], vec![1]).unwrap();
        let ar = analytic_rank(&xy, &b()).unwrap();
        assert_eq!((ar.zero_count, ar.expectation), (1, Ratio::new(1, 2)));
        assert_eq!(ar.value(), 1.0);
        for p in [2, 3] {
            for n in 1..=3 {
                let id = Tensor::diagonal_unit(gf(p), 2, n).unwrap();
                let ar = analytic_rank(&id, &b()).unwrap();
                assert_eq!(ar.zero_count, 1);
                assert_eq!(ar.integer_value(), Some(n as u32));
            }
        }
        assert!(analytic_rank(&Tensor::zeros(k, &[3]).unwrap(), &b()).is_err());
    }

    #[test]
    fn character_sum_of_xy() {
        let xy = Tensor::from_entries(gf(2), &[1, 1], vec![1]).unwrap();
        let cs = character_sum(&xy, &b()).unwrap();
        assert_eq!(cs.counts, vec![3, 1]);
        assert_eq!(cs.expectation(), Some(Ratio::new(1, 2)));
    }

    #[test]
    fn counting_matches_character_sum_exhaustively() {
        for (p, dims) in [(2, vec![2, 2, 2]), (3, vec![2, 2]), (2, vec![1, 2, 3])] {
            for t in Tensor::enumerate_all(gf(p), &dims, &b()).unwrap() {
                let counted = analytic_rank_with(&t, &b(), Exec::Sequential).unwrap();
                let summed = character_sum_with(&t, &b(), Exec::Sequential).unwrap();
                assert_eq!(Some(counted.expectation), summed.expectation());
            }
        }
    }

    #[test]
    fn analytic_rank_bounded_by_each_flattening_rank() {
        let k = gf(3);
        for idx in (0..6561u128).step_by(13) {
            let t = Tensor::from_index(k, &[2, 2, 2], idx).unwrap();
            let ar = analytic_rank(&t, &b()).unwrap();
            for r in t.flattening_ranks() {
                // E ≥ p^{-r}
                assert!(ar.expectation >= Ratio::new(1, 3u64.pow(r as u32)));
            }
        }
    }

    #[test]
    fn analytic_rank_is_restriction_monotone() {
        let k = gf(2);
        let s = Tensor::diagonal_unit(k, 3, 3).unwrap();
        let es = analytic_rank(&s, &b()).unwrap().expectation;
        for phi in enumerate_hom(k, 3, 2, &b()).unwrap() {
            let t = s.apply_uniform(&phi).unwrap();
            assert!(analytic_rank(&t, &b()).unwrap().expectation >= es);
        }
    }

    #[test]
    fn asymptotic_bounds_examples() {
        let k = gf(2);
        let one = Tensor::basis(k, &[2, 2, 2], &[1, 0, 1]).unwrap();
        for bnd in asymptotic_rank_bounds(&one, 2, 4, &b()).unwrap() {
            assert_eq!((bnd.lower, bnd.upper, bnd.exact), (1, Some(1), true));
        }
        let zero = Tensor::cubical_zeros(k, 3, 2).unwrap();
        for bnd in asymptotic_rank_bounds(&zero, 2, 4, &b()).unwrap() {
            assert_eq!((bnd.lower, bnd.upper), (0, Some(0)));
        }
        let diag = Tensor::diagonal_unit(k, 3, 2).unwrap();
        let bounds = asymptotic_rank_bounds(&diag, 2, 4, &b()).unwrap();
        assert_eq!((bounds[0].lower, bounds[0].upper), (2, Some(2)));
        assert_eq!((bounds[1].lower, bounds[1].upper), (4, Some(4)));
        assert_eq!(bounds[1].upper_estimate(), Some(2.0));
        assert_eq!(bounds[1].lower_estimate(), 2.0);
    }

    #[test]
    fn vertical_power_rank_is_submultiplicative() {
        let k = gf(2);
        for idx in [3u128, 90, 129, 200, 255] {
            let s = Tensor::from_index(k, &[2, 2, 2], idx).unwrap();
            let r1 = tensor_rank(&s, 4, &b()).unwrap().exact().unwrap();
            let s2 = s.vertical_product(2, &b()).unwrap();
            if let Some(r2) = tensor_rank(&s2, r1 * r1, &b()).unwrap().exact() {
                assert!(r2 <= r1 * r1);
            }
        }
    }

    #[test]
    fn spectrum_is_finite_and_sorted() {
        let es = analytic_rank_spectrum(gf(2), 3, 2, &b()).unwrap();
        assert!(es.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(*es.last().unwrap(), Ratio::new(1, 1));
        assert!(es.iter().all(|e| *e > Ratio::new(0, 1)));
    }
}
