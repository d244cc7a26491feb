//! Restriction-closed properties given by finite lists of forbidden
//! restrictions, principal-subtensor testing, and the finite restriction
//! poset of all tensors of one shape.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::budget::{pow_sat, Budget};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::PrimeField;
use crate::linalg::{enumerate_gl, gl_order, hom_from_index, Matrix};
use crate::restriction::is_restriction_with;
use crate::tensor::Tensor;

/// `X = { S : S ⋡ Tᵢ for every i }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Property {
    pub field: PrimeField,
    pub order: usize,
    pub forbidden: Vec<Tensor>,
    /// For lists compiled from a predicate: the largest side at which the
    /// list was checked against it.
    pub valid_up_to: Option<usize>,
}

impl Property {
    pub fn new(field: PrimeField, order: usize, forbidden: Vec<Tensor>) -> Result<Self> {
        for t in &forbidden {
            if t.field() != field {
                return Err(Error::FieldMismatch {
                    left: t.field().p(),
                    right: field.p(),
                });
            }
            if t.order() != order {
                return Err(Error::Shape(format!(
                    "forbidden tensor of order {} in a property of order {order}",
                    t.order()
                )));
            }
            t.require_side()?;
        }
        Ok(Property {
            field,
            order,
            forbidden,
            valid_up_to: None,
        })
    }

    /// The property every tensor has.
    pub fn everything(field: PrimeField, order: usize) -> Self {
        Property {
            field,
            order,
            forbidden: Vec::new(),
            valid_up_to: None,
        }
    }

    fn check(&self, s: &Tensor) -> Result<()> {
        if s.field() != self.field {
            return Err(Error::FieldMismatch {
                left: s.field().p(),
                right: self.field.p(),
            });
        }
        if s.order() != self.order {
            return Err(Error::Shape(format!(
                "tensor of order {} tested against a property of order {}",
                s.order(),
                self.order
            )));
        }
        s.require_side()?;
        Ok(())
    }

    pub fn member(&self, s: &Tensor, budget: &Budget) -> Result<bool> {
        self.member_with(s, budget, Exec::default())
    }

    pub fn member_with(&self, s: &Tensor, budget: &Budget, exec: Exec) -> Result<bool> {
        self.check(s)?;
        for t in &self.forbidden {
            if is_restriction_with(s, t, budget, exec)?.is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether every principal subtensor on `n0` coordinates is a member.
    pub fn subtensor_test(&self, s: &Tensor, n0: usize, budget: &Budget) -> Result<bool> {
        self.check(s)?;
        let n = s.require_side()?;
        if n0 > n || n0 == 0 {
            return Err(Error::Precondition(format!(
                "subset size {n0} must lie in 1..={n}"
            )));
        }
        for subset in subsets(n, n0) {
            if !self.member(&s.principal_subtensor(&subset)?, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n - (k - cur.len()) {
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(n, k, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// Membership of every cubical tensor of side `n`, indexed by
/// [`Tensor::index_of`].
fn membership_table(x: &Property, n: usize, budget: &Budget, exec: Exec) -> Result<Vec<bool>> {
    let dims = vec![n; x.order];
    let total = Tensor::count_of_shape(x.field, &dims);
    budget.check_maps("membership table", total)?;
    exec.map(total as usize, |i| {
        let s = Tensor::from_index(x.field, &dims, i as u128)?;
        x.member_with(&s, budget, Exec::Sequential)
    })
    .into_iter()
    .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalTestSize {
    /// Smallest `n0` that decides membership for every side up to
    /// `certified_up_to`; `None` if no `n0 ≤ certified_up_to` does.
    pub value: Option<usize>,
    pub certified_up_to: usize,
    /// For each rejected `n0`: a tensor passing the `n0`-subtensor test
    /// without being a member.
    pub counterexamples: Vec<(usize, Tensor)>,
}

impl MinimalTestSize {
    pub fn summary(&self) -> String {
        match self.value {
            Some(v) => format!("n0={v} (certified for sides <= {})", self.certified_up_to),
            None => format!("n0>{0} (no value <= {0} works)", self.certified_up_to),
        }
    }
}

/// Searches for the least `n0` with `subtensor_test(X, S, min(n0, n)) =
/// member(X, S)` for every tensor of side `n ≤ n_max`.
pub fn minimal_test_size(x: &Property, n_max: usize, budget: &Budget) -> Result<MinimalTestSize> {
    minimal_test_size_with(x, n_max, budget, Exec::default())
}

pub fn minimal_test_size_with(x: &Property, n_max: usize, budget: &Budget, exec: Exec) -> Result<MinimalTestSize> {
    let tables: Vec<Vec<bool>> = (1..=n_max)
        .map(|n| membership_table(x, n, budget, exec))
        .collect::<Result<_>>()?;
    let member = |t: &Tensor| tables[t.dims()[0] - 1][t.index_of() as usize];
    let mut counterexamples = Vec::new();
    'candidates: for n0 in 1..=n_max {
        for n in (n0 + 1)..=n_max {
            let dims = vec![n; x.order];
            let subs = subsets(n, n0);
            let bad = exec.find_map_first(tables[n - 1].len(), |i| {
                if tables[n - 1][i] {
                    return None;
                }
                let s = Tensor::from_index(x.field, &dims, i as u128).expect("shape");
                subs.iter()
                    .all(|sub| member(&s.principal_subtensor(sub).expect("subset")))
                    .then_some(s)
            });
            if let Some(s) = bad {
                counterexamples.push((n0, s));
                continue 'candidates;
            }
        }
        return Ok(MinimalTestSize {
            value: Some(n0),
            certified_up_to: n_max,
            counterexamples,
        });
    }
    Ok(MinimalTestSize {
        value: None,
        certified_up_to: n_max,
        counterexamples,
    })
}

/// Compiles a predicate into a forbidden list valid for sides up to
/// `side_bound`: every non-satisfying tensor not already excluded is added,
/// then forbidden tensors that restrict to another one are dropped. Exact
/// on sides `≤ side_bound` when the predicate is restriction-closed.
pub fn compile<P>(field: PrimeField, order: usize, side_bound: usize, predicate: P, budget: &Budget) -> Result<Property>
where
    P: Fn(&Tensor) -> bool + Sync + Send,
{
    let mut x = Property::everything(field, order);
    let exec = Exec::default();
    for n in 1..=side_bound {
        let dims = vec![n; order];
        let total = Tensor::count_of_shape(field, &dims);
        budget.check_maps("predicate compilation", total)?;
        let failing: Vec<Tensor> = exec
            .map(total as usize, |i| {
                let s = Tensor::from_index(field, &dims, i as u128).expect("shape");
                (!predicate(&s)).then_some(s)
            })
            .into_iter()
            .flatten()
            .collect();
        for s in failing {
            if x.member_with(&s, budget, exec)? {
                x.forbidden.push(s);
            }
        }
    }
    let list = std::mem::take(&mut x.forbidden);
    let mut kept: Vec<Tensor> = Vec::new();
    for (i, t) in list.iter().enumerate() {
        let mut redundant = false;
        for (j, u) in list.iter().enumerate() {
            if i == j {
                continue;
            }
            if is_restriction_with(t, u, budget, exec)?.is_some() {
                let mutual = is_restriction_with(u, t, budget, exec)?.is_some();
                // among mutually restricting tensors keep the first
                if !mutual || j < i {
                    redundant = true;
                    break;
                }
            }
        }
        if !redundant {
            kept.push(t.clone());
        }
    }
    x.forbidden = kept;
    x.valid_up_to = Some(side_bound);
    Ok(x)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetClass {
    pub id: usize,
    /// Lexicographically least tensor of the class.
    pub representative: Tensor,
    pub size: usize,
    pub orbits: usize,
    /// Length of the longest chain of classes below this one.
    pub level: usize,
}

/// Mutual-restriction classes of all tensors in `(K^n)^{⊗d}` and the
/// induced partial order.
#[derive(Debug, Clone)]
pub struct PosetAtlas {
    pub field: PrimeField,
    pub n: usize,
    pub d: usize,
    pub classes: Vec<PosetClass>,
    /// `above[a][b]`: class `a` restricts to class `b`.
    above: Vec<Vec<bool>>,
    /// Cover relations `(lower, upper)`.
    pub covers: Vec<(usize, usize)>,
    class_of: Vec<usize>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub fn build_poset(field: PrimeField, n: usize, d: usize, budget: &Budget) -> Result<PosetAtlas> {
    build_poset_with(field, n, d, budget, Exec::default())
}

pub fn build_poset_with(field: PrimeField, n: usize, d: usize, budget: &Budget, exec: Exec) -> Result<PosetAtlas> {
    let dims = vec![n; d];
    let total = Tensor::count_of_shape(field, &dims);
    budget.check_maps("poset tensor enumeration", total)?;
    let gl: Vec<Matrix> = enumerate_gl(field, n, budget)?.collect();
    budget.check_nodes(
        "poset orbit computation",
        total.saturating_mul(gl.len() as u128),
    )?;
    // GL-orbit canonical forms: the least index in the orbit
    let canonical: Vec<usize> = exec.map(total as usize, |i| {
        let s = Tensor::from_index(field, &dims, i as u128).expect("shape");
        gl.iter()
            .map(|g| s.apply_uniform(g).expect("square").index_of() as usize)
            .min()
            .expect("GL nonempty")
    });
    let mut reps: Vec<usize> = canonical.clone();
    reps.sort_unstable();
    reps.dedup();
    let slot: BTreeMap<usize, usize> = reps.iter().enumerate().map(|(k, &r)| (r, k)).collect();
    let rep_tensors: Vec<Tensor> = reps
        .iter()
        .map(|&r| Tensor::from_index(field, &dims, r as u128).expect("shape"))
        .collect();
    let r = reps.len();
    let pairs: Vec<Result<bool>> = exec.map(r * r, |k| {
        let (a, b) = (k / r, k % r);
        if a == b {
            return Ok(true);
        }
        Ok(is_restriction_with(&rep_tensors[a], &rep_tensors[b], budget, Exec::Sequential)?.is_some())
    });
    let rel: Vec<bool> = pairs.into_iter().collect::<Result<_>>()?;
    let restricts = |a: usize, b: usize| rel[a * r + b];

    let mut parent: Vec<usize> = (0..r).collect();
    for a in 0..r {
        for b in a + 1..r {
            if restricts(a, b) && restricts(b, a) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    // class ids in order of their least orbit representative
    let mut class_ids: BTreeMap<usize, usize> = BTreeMap::new();
    let mut orbit_class = vec![0usize; r];
    for (a, slot_class) in orbit_class.iter_mut().enumerate() {
        let root = find(&mut parent, a);
        let next = class_ids.len();
        *slot_class = *class_ids.entry(root).or_insert(next);
    }
    let c = class_ids.len();
    let mut first_orbit = vec![usize::MAX; c];
    let mut orbits = vec![0usize; c];
    for (a, &k) in orbit_class.iter().enumerate() {
        first_orbit[k] = first_orbit[k].min(a);
        orbits[k] += 1;
    }
    let class_of: Vec<usize> = canonical.iter().map(|i| orbit_class[slot[i]]).collect();
    let mut sizes = vec![0usize; c];
    for &k in &class_of {
        sizes[k] += 1;
    }
    let above: Vec<Vec<bool>> = (0..c)
        .map(|a| (0..c).map(|b| restricts(first_orbit[a], first_orbit[b])).collect())
        .collect();

    let strictly = |a: usize, b: usize| a != b && above[a][b];
    let mut covers = Vec::new();
    for upper in 0..c {
        for lower in 0..c {
            if strictly(upper, lower) && !(0..c).any(|m| strictly(upper, m) && strictly(m, lower)) {
                covers.push((lower, upper));
            }
        }
    }
    covers.sort_unstable();

    // levels by longest chain from below; classes are processed in an order
    // compatible with the relation
    let mut level = vec![0usize; c];
    let below_count: Vec<usize> = (0..c).map(|a| (0..c).filter(|&b| strictly(a, b)).count()).collect();
    let mut order: Vec<usize> = (0..c).collect();
    order.sort_by_key(|&a| below_count[a]);
    for &a in &order {
        level[a] = (0..c)
            .filter(|&b| strictly(a, b))
            .map(|b| level[b] + 1)
            .max()
            .unwrap_or(0);
    }

    let classes = (0..c)
        .map(|k| PosetClass {
            id: k,
            representative: rep_tensors[first_orbit[k]].clone(),
            size: sizes[k],
            orbits: orbits[k],
            level: level[k],
        })
        .collect();
    Ok(PosetAtlas {
        field,
        n,
        d,
        classes,
        above,
        covers,
        class_of,
    })
}

impl PosetAtlas {
    pub fn class_of(&self, t: &Tensor) -> usize {
        self.class_of[t.index_of() as usize]
    }

    /// Whether every tensor of class `a` restricts to every tensor of class `b`.
    pub fn restricts(&self, a: usize, b: usize) -> bool {
        self.above[a][b]
    }

    pub fn is_acyclic(&self) -> bool {
        let c = self.classes.len();
        (0..c).all(|a| (0..c).all(|b| a == b || !(self.above[a][b] && self.above[b][a])))
            && self.covers.iter().all(|&(lo, up)| lo != up)
    }

    /// The cover relations generate the order and none is implied by others.
    pub fn is_transitively_reduced(&self) -> bool {
        let c = self.classes.len();
        let mut reach = vec![vec![false; c]; c];
        for (a, row) in reach.iter_mut().enumerate() {
            row[a] = true;
        }
        for &(lo, up) in &self.covers {
            reach[up][lo] = true;
        }
        for m in 0..c {
            for a in 0..c {
                if reach[a][m] {
                    for b in 0..c {
                        if reach[m][b] {
                            reach[a][b] = true;
                        }
                    }
                }
            }
        }
        let generates = (0..c).all(|a| (0..c).all(|b| reach[a][b] == self.above[a][b]));
        let minimal = self.covers.iter().all(|&(lo, up)| {
            !(0..c).any(|m| m != lo && m != up && self.above[up][m] && self.above[m][lo])
        });
        generates && minimal
    }

    /// Classes grouped by level; each group is an antichain.
    pub fn antichains(&self) -> Vec<Vec<usize>> {
        let top = self.classes.iter().map(|k| k.level).max().unwrap_or(0);
        (0..=top)
            .map(|l| self.classes.iter().filter(|k| k.level == l).map(|k| k.id).collect())
            .collect()
    }

    /// Entries of the representative in row-major order, as a digit string
    /// for p ≤ 7 and dot-separated otherwise.
    pub fn label(&self, k: &PosetClass) -> String {
        let entries: Vec<String> = k.representative.data().iter().map(u8::to_string).collect();
        entries.join(if self.field.p() <= 7 { "" } else { "." })
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!(
            "digraph restriction_poset {{\n  // p={} n={} d={}\n  rankdir=BT;\n",
            self.field.p(),
            self.n,
            self.d
        );
        for k in &self.classes {
            let _ = writeln!(
                out,
                "  c{} [label=\"{} ({})\"];",
                k.id,
                self.label(k),
                k.size
            );
        }
        for &(lo, up) in &self.covers {
            let _ = writeln!(out, "  c{lo} -> c{up};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("class,representative,size,orbits,level\n");
        for k in &self.classes {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                k.id,
                self.label(k),
                k.size,
                k.orbits,
                k.level
            );
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeakShiftCount {
    pub count: u128,
    pub predicted: u128,
}

impl WeakShiftCount {
    pub fn agree(&self) -> bool {
        self.count == self.predicted
    }
}

pub fn weak_shift_count(n: usize, m: usize, p: u32, budget: &Budget) -> Result<WeakShiftCount> {
    weak_shift_count_with(n, m, p, budget, Exec::default())
}

/// Counts `(n+m)×(n+m)` matrices of rank at most `n` whose leading `n×n`
/// block is invertible, next to `|GL_n|·p^{2nm}`.
pub fn weak_shift_count_with(n: usize, m: usize, p: u32, budget: &Budget, exec: Exec) -> Result<WeakShiftCount> {
    let field = PrimeField::new(p)?;
    let size = n + m;
    let total = pow_sat(p as u128, (size * size) as u128);
    budget.check_maps("weak shift enumeration", total)?;
    let lead: Vec<usize> = (0..n).collect();
    let count = exec.sum(total as u64, |i| {
        let a = hom_from_index(field, size, size, i as u128);
        (a.submatrix(&lead, &lead).is_invertible() && a.rank() <= n) as u64
    });
    let predicted = gl_order(field, n).saturating_mul(pow_sat(p as u128, (2 * n * m) as u128));
    Ok(WeakShiftCount {
        count: count as u128,
        predicted,
    })
}

/// Starting from the full property, repeatedly forbid the largest-index
/// remaining member of side `n`; returns the member counts of the strictly
/// decreasing sequence, which ends at 0.
pub fn chain_condition_smoke(field: PrimeField, n: usize, d: usize, budget: &Budget) -> Result<Vec<usize>> {
    let mut x = Property::everything(field, d);
    let mut counts = Vec::new();
    loop {
        let table = membership_table(&x, n, budget, Exec::default())?;
        let members: Vec<usize> = (0..table.len()).filter(|&i| table[i]).collect();
        counts.push(members.len());
        let Some(&last) = members.last() else {
            return Ok(counts);
        };
        x.forbidden.push(Tensor::from_index(field, &vec![n; d], last as u128)?);
    }
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

    fn matrix(p: u32, rows: &[&[u8]]) -> Tensor {
        let rows: Vec<Vec<u8>> = rows.iter().map(|r| r.to_vec()).collect();
        Tensor::from_matrix(&Matrix::from_rows(gf(p), &rows).unwrap()).unwrap()
    }

    fn rank_at_most_one(p: u32, side: usize) -> Property {
        compile(gf(p), 2, side, |t| t.flattening(0).rank() <= 1, &b()).unwrap()
    }

    #[test]
    fn membership_examples() {
        let k = gf(2);
        let all = Property::everything(k, 3);
        assert!(all.member(&Tensor::diagonal_unit(k, 3, 2).unwrap(), &b()).unwrap());
        let one = Tensor::from_entries(k, &[1, 1], vec![1]).unwrap();
        let zero_only = Property::new(k, 2, vec![one]).unwrap();
        assert!(zero_only.member(&Tensor::cubical_zeros(k, 2, 3).unwrap(), &b()).unwrap());
        let id = Tensor::diagonal_unit(k, 2, 2).unwrap();
        let not_id = Property::new(k, 2, vec![id.clone()]).unwrap();
        assert!(!not_id.member(&id, &b()).unwrap());
        assert!(Property::new(gf(3), 2, vec![id]).is_err());
    }

    #[test]
    fn compiled_rank_one_list() {
        let x = rank_at_most_one(2, 2);
        assert_eq!(x.valid_up_to, Some(2));
        // I₂ alone does not capture rank ≤ 1: the alternating form does not
        // restrict to it
        let id = Tensor::diagonal_unit(gf(2), 2, 2).unwrap();
        let alt = matrix(2, &[&[0, 1], &[1, 0]]);
        let listed = |t: &Tensor| {
            x.forbidden
                .iter()
                .any(|f| crate::restriction::mutually_restrict(f, t, &b()).unwrap())
        };
        assert!(listed(&id) && listed(&alt));
        assert!(crate::restriction::is_restriction(&alt, &id, &b()).unwrap().is_none());
        assert_eq!(x.forbidden.len(), 3);
        assert!(listed(&matrix(2, &[&[1, 1], &[0, 1]])));
        for s in Tensor::enumerate_all(gf(2), &[3, 3], &b()).unwrap() {
            assert_eq!(x.member(&s, &b()).unwrap(), s.flattening(0).rank() <= 1);
        }
    }

    #[test]
    fn subtensor_examples() {
        let x = rank_at_most_one(2, 2);
        let s = matrix(2, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert!(!x.member(&s, &b()).unwrap());
        assert!(x.subtensor_test(&s, 2, &b()).unwrap());
        assert!(!x.subtensor_test(&s, 3, &b()).unwrap());
        assert!(x.subtensor_test(&s, 4, &b()).is_err());
        for t in Tensor::enumerate_all(gf(2), &[3, 3], &b()).unwrap() {
            if x.member(&t, &b()).unwrap() {
                assert!((1..=3).all(|n0| x.subtensor_test(&t, n0, &b()).unwrap()));
            }
        }
    }

    #[test]
    fn minimal_test_size_examples() {
        let all = Property::everything(gf(2), 2);
        assert_eq!(minimal_test_size(&all, 3, &b()).unwrap().value, Some(1));
        let one = Tensor::from_entries(gf(2), &[1, 1], vec![1]).unwrap();
        let zero_only = Property::new(gf(2), 2, vec![one]).unwrap();
        let r = minimal_test_size(&zero_only, 3, &b()).unwrap();
        assert_eq!(r.value, Some(2));
        assert_eq!(r.counterexamples[0].0, 1);
        let x = rank_at_most_one(2, 2);
        let r = minimal_test_size(&x, 3, &b()).unwrap();
        assert_eq!(r.value, Some(3));
        assert!(r.summary().contains("certified for sides <= 3"));
    }

    #[test]
    fn member_is_restriction_closed() {
        let x = rank_at_most_one(3, 2);
        let k = gf(3);
        for (idx, s) in Tensor::enumerate_all(k, &[2, 2], &b()).unwrap().enumerate() {
            if !x.member(&s, &b()).unwrap() {
                continue;
            }
            for phi in enumerate_hom(k, 2, 3, &b()).unwrap().skip(idx % 7).step_by(11) {
                assert!(x.member(&s.apply_uniform(&phi).unwrap(), &b()).unwrap());
            }
        }
    }

    #[test]
    fn subtensor_test_is_closed_under_coordinate_maps() {
        let x = rank_at_most_one(2, 2);
        let k = gf(2);
        let perms = [vec![1, 2, 0], vec![2, 1, 0]];
        for s in Tensor::enumerate_all(k, &[3, 3], &b()).unwrap() {
            if !x.subtensor_test(&s, 2, &b()).unwrap() {
                continue;
            }
            for perm in &perms {
                let t = s.apply_uniform(&Matrix::permutation(k, perm)).unwrap();
                assert!(x.subtensor_test(&t, 2, &b()).unwrap());
            }
            let proj = s.principal_subtensor(&[0, 2]).unwrap();
            assert!(x.subtensor_test(&proj, 2, &b()).unwrap());
        }
    }

    #[test]
    fn poset_examples() {
        let k = gf(2);
        let atlas = build_poset(k, 1, 2, &b()).unwrap();
        assert_eq!(atlas.classes.len(), 2);
        assert_eq!(atlas.covers, vec![(0, 1)]);

        let atlas = build_poset(k, 2, 2, &b()).unwrap();
        assert!(atlas.is_acyclic());
        assert!(atlas.is_transitively_reduced());
        let zero = atlas.class_of(&Tensor::cubical_zeros(k, 2, 2).unwrap());
        let e11 = atlas.class_of(&Tensor::basis(k, &[2, 2], &[0, 0]).unwrap());
        let id = atlas.class_of(&Tensor::diagonal_unit(k, 2, 2).unwrap());
        assert_eq!(zero, 0);
        assert!(atlas.restricts(e11, zero) && atlas.restricts(id, e11));
        assert!(!atlas.restricts(zero, e11) && !atlas.restricts(e11, id));
        for c in &atlas.classes {
            assert!(atlas.restricts(c.id, zero));
        }
        assert_eq!(atlas.classes.iter().map(|c| c.size).sum::<usize>(), 16);
        for chain in atlas.antichains() {
            for &a in &chain {
                for &c in &chain {
                    assert!(a == c || !atlas.restricts(a, c));
                }
            }
        }
        assert!(atlas.to_dot().starts_with("digraph"));
        assert!(atlas.to_csv().starts_with("class,representative,size,orbits,level\n0,0000,1,1,0\n"));
    }

    #[test]
    fn parallel_poset_is_deterministic() {
        let k = gf(3);
        let a = build_poset_with(k, 2, 2, &b(), Exec::Sequential).unwrap();
        let c = build_poset_with(k, 2, 2, &b(), Exec::default()).unwrap();
        assert_eq!(a.classes, c.classes);
        assert_eq!(a.covers, c.covers);
        assert_eq!(a.to_dot(), c.to_dot());
    }

    #[test]
    fn weak_shift_examples() {
        let w = weak_shift_count(1, 1, 2, &b()).unwrap();
        assert_eq!((w.count, w.predicted, w.agree()), (4, 4, true));
        for p in [2, 3, 5] {
            let w = weak_shift_count(1, 0, p, &b()).unwrap();
            assert_eq!(w.count, p as u128 - 1);
            assert!(w.agree());
        }
        let w = weak_shift_count(2, 1, 2, &b()).unwrap();
        assert_eq!((w.count, w.predicted), (96, 96));
    }

    #[test]
    fn chain_condition() {
        let counts = chain_condition_smoke(gf(2), 2, 2, &b()).unwrap();
        assert!(counts.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(counts[0], 16);
        assert_eq!(*counts.last().unwrap(), 0);
    }
}
