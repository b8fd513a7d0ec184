//! Shifted set families, independence complexes, standard Young tableaux and
//! poset linear extensions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalan::{shifted_matroid, ShiftVector};
use crate::error::{Error, Limits, Result};
use crate::matroid::{check_basis_axioms, BasisFamily};
use crate::par;
use crate::sets::{ElementSet, MAX_ELEMENT};

/// A family of subsets of `{1, …, m}`, sorted lexicographically, no duplicates.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetFamily {
    m: usize,
    members: Vec<ElementSet>,
}

impl SetFamily {
    pub fn new(m: usize, members: impl IntoIterator<Item = ElementSet>) -> Result<Self> {
        let ground = ElementSet::full(m.min(MAX_ELEMENT));
        let mut members: Vec<ElementSet> = members.into_iter().collect();
        if m > MAX_ELEMENT || members.iter().any(|s| !s.is_subset(ground)) {
            return Err(Error::domain(format!("family members must lie in 1..={m}")));
        }
        members.sort();
        members.dedup();
        Ok(SetFamily { m, members })
    }

    pub fn ground_size(&self) -> usize {
        self.m
    }

    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: ElementSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    /// Members of maximum cardinality.
    pub fn maximal_size_members(&self) -> Vec<ElementSet> {
        let top = self.members.iter().map(|s| s.len()).max().unwrap_or(0);
        self.members.iter().copied().filter(|s| s.len() == top).collect()
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetFamily(m={}, {:?})", self.m, self.members)
    }
}

/// Every subset of every basis.
pub fn independence_complex(f: &BasisFamily, limits: &Limits) -> Result<SetFamily> {
    limits.check_sweep(f.ground_size())?;
    let faces = f.bases().iter().flat_map(|b| b.subsets());
    SetFamily::new(f.ground_size(), faces)
}

/// A face `F`, an element `j ∈ F` and a smaller `i ∉ F` with `F − j ∪ i` missing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftWitness {
    pub face: ElementSet,
    pub removed: usize,
    pub added: usize,
}

/// Checks closure under replacing a member element by any smaller absent one.
pub fn is_shifted_family(fam: &SetFamily) -> std::result::Result<(), ShiftWitness> {
    let found = par::find_map_first(fam.members(), |&face| {
        face.iter().find_map(|j| {
            (1..j)
                .filter(|&i| !face.contains(i))
                .find(|&i| !fam.contains(face.without(j).with(i)))
                .map(|i| ShiftWitness { face, removed: j, added: i })
        })
    });
    found.map_or(Ok(()), Err)
}

/// Outcome of reading a shift vector off a loopless matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShiftRecovery {
    Shifted(ShiftVector),
    /// `SM(candidate)` and the input differ; `discrepancy` is the first set
    /// (lexicographically) in exactly one of the two basis families.
    NotShifted {
        candidate: ShiftVector,
        discrepancy: ElementSet,
    },
}

/// Takes `s_i` as the largest `i`-th smallest element over all bases and
/// checks that `SM(s)` reproduces the basis family exactly.
pub fn recover_shift_vector(f: &BasisFamily, limits: &Limits) -> Result<ShiftRecovery> {
    let loops = f.loops();
    if !loops.is_empty() {
        return Err(Error::domain(format!("matroid has loops {loops}; delete them before recovery")));
    }
    if f.rank() == 0 {
        return Err(Error::domain("a rank-0 matroid has no shift vector"));
    }
    let mut s = vec![0usize; f.rank()];
    for b in f.bases() {
        for (slot, e) in s.iter_mut().zip(b.iter()) {
            *slot = (*slot).max(e);
        }
    }
    let candidate = ShiftVector::new(s)
        .map_err(|e| Error::domain(format!("componentwise maxima are not strictly increasing: {e}")))?;
    let rebuilt = shifted_matroid(&candidate, limits)?;
    if rebuilt == *f {
        return Ok(ShiftRecovery::Shifted(candidate));
    }
    let mut ours = rebuilt.bases().iter().peekable();
    let mut theirs = f.bases().iter().peekable();
    // Both lists are sorted; walk them to the first mismatch.
    let discrepancy = loop {
        match (ours.peek(), theirs.peek()) {
            (Some(a), Some(b)) if a == b => {
                ours.next();
                theirs.next();
            }
            (Some(&&a), Some(&&b)) => break Ord::min(a, b),
            (Some(&&a), None) => break a,
            (None, Some(&&b)) => break b,
            (None, None) => unreachable!("families differ"),
        }
    };
    Ok(ShiftRecovery::NotShifted { candidate, discrepancy })
}

/// Weakly decreasing positive parts `λ_1 ≥ λ_2 ≥ …`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn row(&self, r: usize) -> usize {
        self.0.get(r).copied().unwrap_or(0)
    }

    /// `μ ⊆ λ` row by row.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.0.len() <= self.0.len() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(cap)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Non-empty partitions `μ ⊆ λ`.
    pub fn sub_partitions(&self) -> Vec<Partition> {
        fn go(lambda: &[usize], row: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if !cur.is_empty() {
                out.push(Partition(cur.clone()));
            }
            if row == lambda.len() {
                return;
            }
            for p in (1..=lambda[row].min(cap)).rev() {
                cur.push(p);
                go(lambda, row + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `λ'_i = |{j : λ_j ≥ i}|`.
pub fn conjugate(lambda: &Partition) -> Partition {
    let width = lambda.row(0);
    Partition((1..=width).map(|i| lambda.0.iter().filter(|&&p| p >= i).count()).collect())
}

/// A filling of a Young diagram, rows listed top to bottom.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Checks shape and that the filling is standard.
    pub fn new(shape: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lens != shape.parts() {
            return Err(Error::domain("tableau rows do not match the shape"));
        }
        let n = shape.size();
        let entries = ElementSet::from_elements(n, rows.iter().flatten().copied())?;
        if entries.len() != n {
            return Err(Error::domain("entries are not a permutation of 1..=|λ|"));
        }
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        if !rows_ok || !cols_ok {
            return Err(Error::domain("filling is not standard"));
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn first_row_set(&self) -> ElementSet {
        self.rows.first().map(|r| r.iter().copied().collect()).unwrap_or_default()
    }

    /// Entries in the cells of the sub-diagram `μ`.
    pub fn mu_set(&self, mu: &Partition) -> ElementSet {
        mu.parts().iter().zip(&self.rows).flat_map(|(&len, row)| row[..len].iter().copied()).collect()
    }
}

/// All standard Young tableaux of shape `λ`.
///
/// Entries `1, 2, …` are placed in turn at the end of some row, trying rows
/// top to bottom, so the output order is deterministic.
pub fn enumerate_syt(lambda: &Partition, limits: &Limits) -> Result<Vec<Tableau>> {
    Limits::check("tableau cells |λ|", lambda.size(), limits.max_cells)?;
    fn go(lambda: &[usize], next: usize, total: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if next > total {
            out.push(rows.clone());
            return;
        }
        for r in 0..lambda.len() {
            let len = rows[r].len();
            if len < lambda[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                go(lambda, next + 1, total, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); lambda.num_rows()];
    go(lambda.parts(), 1, lambda.size(), &mut rows, &mut out);
    Ok(out.into_iter().map(|rows| Tableau { shape: lambda.clone(), rows }).collect())
}

/// `s_i = 1 + λ'_1 + … + λ'_{i−1}` for `i = 1, …, λ_1`.
pub fn first_row_shift_vector(lambda: &Partition) -> Result<ShiftVector> {
    if lambda.size() == 0 {
        return Err(Error::domain("the empty partition has no first row"));
    }
    let conj = conjugate(lambda);
    let s = conj
        .parts()
        .iter()
        .scan(1usize, |acc, &c| {
            let s_i = *acc;
            *acc += c;
            Some(s_i)
        })
        .collect();
    ShiftVector::new(s)
}

/// First-row entry sets of all SYT of shape `λ`, over the ground set `{1, …, |λ|}`.
pub fn first_row_sets(lambda: &Partition, limits: &Limits) -> Result<SetFamily> {
    let tableaux = enumerate_syt(lambda, limits)?;
    SetFamily::new(lambda.size(), tableaux.iter().map(Tableau::first_row_set))
}

/// Sets of entries filling the sub-diagram `μ`, over all SYT of shape `λ`.
pub fn mu_sets(lambda: &Partition, mu: &Partition, limits: &Limits) -> Result<SetFamily> {
    if !lambda.contains(mu) {
        return Err(Error::domain(format!("{mu:?} is not contained in {lambda:?}")));
    }
    let tableaux = enumerate_syt(lambda, limits)?;
    SetFamily::new(lambda.size(), tableaux.iter().map(|t| t.mu_set(mu)))
}

/// A finite poset on `{1, …, size}` given by cover pairs `(i, j)`, `i < j`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawPoset", into = "RawPoset")]
pub struct Poset {
    size: usize,
    covers: Vec<(usize, usize)>,
    /// `below[j - 1]` = all `i` with `i < j` in the poset.
    below: Vec<ElementSet>,
}

#[derive(Serialize, Deserialize)]
struct RawPoset {
    size: usize,
    covers: Vec<[usize; 2]>,
}

impl TryFrom<RawPoset> for Poset {
    type Error = Error;

    fn try_from(raw: RawPoset) -> Result<Self> {
        Poset::new(raw.size, raw.covers.into_iter().map(|[a, b]| (a, b)).collect())
    }
}

impl From<Poset> for RawPoset {
    fn from(p: Poset) -> Self {
        RawPoset { size: p.size, covers: p.covers.iter().map(|&(a, b)| [a, b]).collect() }
    }
}

impl Poset {
    /// Validates labels and acyclicity (Kahn's algorithm), then takes the transitive closure.
    pub fn new(size: usize, covers: Vec<(usize, usize)>) -> Result<Self> {
        if size > MAX_ELEMENT {
            return Err(Error::domain(format!("poset size {size} exceeds {MAX_ELEMENT}")));
        }
        if let Some(&(a, b)) = covers.iter().find(|&&(a, b)| a == 0 || b == 0 || a > size || b > size) {
            return Err(Error::domain(format!("cover ({a},{b}) uses a label outside 1..={size}")));
        }
        let mut indegree = vec![0usize; size];
        for &(_, b) in &covers {
            indegree[b - 1] += 1;
        }
        let mut ready: Vec<usize> = (1..=size).filter(|&x| indegree[x - 1] == 0).collect();
        let mut topo = Vec::with_capacity(size);
        while let Some(x) = ready.pop() {
            topo.push(x);
            for &(a, b) in &covers {
                if a == x {
                    indegree[b - 1] -= 1;
                    if indegree[b - 1] == 0 {
                        ready.push(b);
                    }
                }
            }
        }
        if topo.len() != size {
            return Err(Error::domain("cover relation has a cycle"));
        }
        let mut below = vec![ElementSet::EMPTY; size];
        for &x in &topo {
            for &(a, b) in &covers {
                if a == x {
                    below[b - 1] = below[b - 1].union(below[a - 1]).with(a);
                }
            }
        }
        Ok(Poset { size, covers, below })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Strict order `i < j`.
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.below[j - 1].contains(i)
    }

    pub fn is_order_ideal(&self, set: ElementSet) -> bool {
        set.is_subset(ElementSet::full(self.size)) && set.iter().all(|y| self.below[y - 1].is_subset(set))
    }
}

/// A down-closed subset of a poset.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct OrderIdeal(ElementSet);

impl OrderIdeal {
    pub fn new(poset: &Poset, set: ElementSet) -> Result<Self> {
        if poset.is_order_ideal(set) {
            Ok(OrderIdeal(set))
        } else {
            Err(Error::domain(format!("{set} is not an order ideal")))
        }
    }

    pub fn elements(&self) -> ElementSet {
        self.0
    }
}

/// All linear extensions, as `f[x - 1] = f(x)`.
///
/// Values `1, 2, …` are handed out in turn to a minimal remaining element,
/// smallest label first; output is lexicographic in the sequence
/// `f⁻¹(1), f⁻¹(2), …`.
pub fn linear_extensions(poset: &Poset, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    Limits::check("poset size", poset.size, limits.max_poset)?;
    fn go(p: &Poset, placed: ElementSet, seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if seq.len() == p.size {
            let mut f = vec![0; p.size];
            for (v, &x) in seq.iter().enumerate() {
                f[x - 1] = v + 1;
            }
            out.push(f);
            return;
        }
        for x in 1..=p.size {
            if !placed.contains(x) && p.below[x - 1].is_subset(placed) {
                seq.push(x);
                go(p, placed.with(x), seq, out);
                seq.pop();
            }
        }
    }
    let firsts: Vec<usize> = (1..=poset.size).filter(|&x| poset.below[x - 1].is_empty()).collect();
    if firsts.is_empty() {
        return Ok(vec![Vec::new()]);
    }
    Ok(par::flat_map(&firsts, |&x| {
        let mut out = Vec::new();
        go(poset, ElementSet::singleton(x), &mut vec![x], &mut out);
        out
    }))
}

/// `{ {f(i) : i ∈ I} : f a linear extension }`.
pub fn iset_family(poset: &Poset, ideal: &OrderIdeal, limits: &Limits) -> Result<SetFamily> {
    if !poset.is_order_ideal(ideal.0) {
        return Err(Error::domain("ideal does not belong to this poset"));
    }
    let exts = linear_extensions(poset, limits)?;
    SetFamily::new(poset.size, exts.iter().map(|f| ideal.0.map(|i| f[i - 1])))
}

/// Cell `(r, c)` (0-based) of `λ` as a 1-based row-major label.
pub fn cell_label(lambda: &Partition, r: usize, c: usize) -> usize {
    lambda.parts()[..r].iter().sum::<usize>() + c + 1
}

/// Cells of `λ`, ordered by `(r, c) ≤ (r', c')` iff `r ≤ r'` and `c ≤ c'`, so
/// that linear extensions are exactly the standard fillings.
pub fn tableau_poset(lambda: &Partition) -> Result<Poset> {
    let mut covers = Vec::new();
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            let here = cell_label(lambda, r, c);
            if c + 1 < len {
                covers.push((here, here + 1));
            }
            if c < lambda.row(r + 1) {
                covers.push((here, cell_label(lambda, r + 1, c)));
            }
        }
    }
    Poset::new(lambda.size(), covers)
}

/// The cells of `μ` inside the poset of `λ`.
pub fn tableau_ideal(lambda: &Partition, mu: &Partition) -> Result<OrderIdeal> {
    if !lambda.contains(mu) {
        return Err(Error::domain(format!("{mu:?} is not contained in {lambda:?}")));
    }
    let cells: ElementSet = mu
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .map(|(r, c)| cell_label(lambda, r, c))
        .collect();
    OrderIdeal::new(&tableau_poset(lambda)?, cells)
}

/// Reads a linear extension of `tableau_poset(λ)` as a tableau.
pub fn extension_to_tableau(lambda: &Partition, f: &[usize]) -> Result<Tableau> {
    let rows = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &len)| (0..len).map(|c| f[cell_label(lambda, r, c) - 1]).collect())
        .collect();
    Tableau::new(lambda.clone(), rows)
}

/// First `(λ, μ)` with `|λ| ≤ max_cells` whose `μ`-sets, restricted to the
/// largest members, fail the basis axioms.
pub fn find_non_matroid_mu_sets(max_cells: usize, limits: &Limits) -> Result<Option<(Partition, Partition)>> {
    for size in 1..=max_cells {
        for lambda in Partition::all_of_size(size) {
            for mu in lambda.sub_partitions() {
                let fam = mu_sets(&lambda, &mu, limits)?;
                if check_basis_axioms(fam.ground_size(), &fam.maximal_size_members()).is_err() {
                    return Ok(Some((lambda, mu)));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalan::catalan_matroid;
    use crate::matroid::uniform;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn sv(s: &[usize]) -> ShiftVector {
        ShiftVector::new(s.to_vec()).unwrap()
    }

    fn family(m: usize, sets: &[&[usize]]) -> SetFamily {
        SetFamily::new(m, sets.iter().map(|s| set(s))).unwrap()
    }

    #[test]
    fn independence_complex_examples() {
        let l = Limits::default();
        let c2 = catalan_matroid(2, &l).unwrap();
        assert_eq!(independence_complex(&c2, &l).unwrap(), family(4, &[&[], &[1], &[2], &[3], &[1, 2], &[1, 3]]));
        assert_eq!(independence_complex(&uniform(1, 2).unwrap(), &l).unwrap(), family(2, &[&[], &[1], &[2]]));
        assert_eq!(independence_complex(&uniform(3, 3).unwrap(), &l).unwrap().len(), 8);
    }

    #[test]
    fn shifted_family_examples() {
        let l = Limits::default();
        let sm = shifted_matroid(&sv(&[1, 3, 5]), &l).unwrap();
        assert_eq!(is_shifted_family(&independence_complex(&sm, &l).unwrap()), Ok(()));
        assert_eq!(is_shifted_family(&family(2, &[&[2]])), Err(ShiftWitness { face: set(&[2]), removed: 2, added: 1 }));
        assert_eq!(is_shifted_family(&family(3, &[&[1, 2], &[1, 3]])), Ok(()));
    }

    #[test]
    fn recovery_examples() {
        let l = Limits::default();
        let s = sv(&[2, 5, 6]);
        let sm = shifted_matroid(&s, &l).unwrap();
        assert_eq!(recover_shift_vector(&sm, &l).unwrap(), ShiftRecovery::Shifted(s));
        assert_eq!(recover_shift_vector(&uniform(2, 3).unwrap(), &l).unwrap(), ShiftRecovery::Shifted(sv(&[2, 3])));
        let not = BasisFamily::new(4, [set(&[1, 2]), set(&[3, 4])]).unwrap();
        assert_eq!(
            recover_shift_vector(&not, &l).unwrap(),
            ShiftRecovery::NotShifted { candidate: sv(&[3, 4]), discrepancy: set(&[1, 3]) }
        );
        assert!(recover_shift_vector(&catalan_matroid(2, &l).unwrap(), &l).is_err());
    }

    #[test]
    fn partition_basics() {
        assert_eq!(conjugate(&part(&[2, 2])), part(&[2, 2]));
        assert_eq!(conjugate(&part(&[3, 1])), part(&[2, 1, 1]));
        assert_eq!(conjugate(&part(&[4])), part(&[1, 1, 1, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        let counts: Vec<usize> = (1..=8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(part(&[2, 1]).sub_partitions(), vec![part(&[2]), part(&[2, 1]), part(&[1]), part(&[1, 1])]);
    }

    #[test]
    fn syt_examples() {
        let l = Limits::default();
        assert_eq!(enumerate_syt(&part(&[2, 2]), &l).unwrap().len(), 2);
        assert_eq!(enumerate_syt(&part(&[5]), &l).unwrap().len(), 1);
        assert_eq!(enumerate_syt(&part(&[2, 1]), &l).unwrap().len(), 2);
        assert_eq!(enumerate_syt(&part(&[3, 2]), &l).unwrap().len(), 5);
        assert!(enumerate_syt(&part(&[6, 5]), &l).unwrap_err().is_resource());
        for t in enumerate_syt(&part(&[3, 2, 1]), &l).unwrap() {
            Tableau::new(t.shape().clone(), t.rows().to_vec()).unwrap();
        }
        assert!(Tableau::new(part(&[2]), vec![vec![2, 1]]).is_err());
    }

    #[test]
    fn first_row_examples() {
        let l = Limits::default();
        assert_eq!(first_row_shift_vector(&part(&[2, 2])).unwrap(), sv(&[1, 3]));
        assert_eq!(first_row_shift_vector(&part(&[4])).unwrap(), sv(&[1, 2, 3, 4]));
        assert_eq!(first_row_shift_vector(&part(&[3, 1])).unwrap(), sv(&[1, 3, 4]));
        assert_eq!(first_row_sets(&part(&[2, 2]), &l).unwrap(), family(4, &[&[1, 2], &[1, 3]]));
        assert_eq!(first_row_sets(&part(&[3]), &l).unwrap(), family(3, &[&[1, 2, 3]]));
        assert_eq!(first_row_sets(&part(&[2, 1]), &l).unwrap(), family(3, &[&[1, 2], &[1, 3]]));
    }

    #[test]
    fn mu_set_examples() {
        let l = Limits::default();
        assert_eq!(mu_sets(&part(&[2, 2]), &part(&[2]), &l).unwrap(), family(4, &[&[1, 2], &[1, 3]]));
        assert_eq!(mu_sets(&part(&[3, 1]), &part(&[3, 1]), &l).unwrap(), family(4, &[&[1, 2, 3, 4]]));
        assert_eq!(mu_sets(&part(&[2, 2]), &part(&[1, 1]), &l).unwrap(), family(4, &[&[1, 3], &[1, 2]]));
        assert!(mu_sets(&part(&[2, 2]), &part(&[3]), &l).is_err());
    }

    #[test]
    fn poset_examples() {
        let l = Limits::default();
        let antichain = Poset::new(2, vec![]).unwrap();
        let ideal = OrderIdeal::new(&antichain, set(&[1])).unwrap();
        assert_eq!(iset_family(&antichain, &ideal, &l).unwrap(), family(2, &[&[1], &[2]]));

        let chain = Poset::new(4, vec![(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(linear_extensions(&chain, &l).unwrap(), vec![vec![1, 2, 3, 4]]);
        let ideal = OrderIdeal::new(&chain, set(&[1, 2])).unwrap();
        assert_eq!(iset_family(&chain, &ideal, &l).unwrap(), family(4, &[&[1, 2]]));
        assert!(OrderIdeal::new(&chain, set(&[2])).is_err());

        let lambda = part(&[2, 2]);
        let poset = tableau_poset(&lambda).unwrap();
        let first_row = tableau_ideal(&lambda, &part(&[2])).unwrap();
        assert_eq!(iset_family(&poset, &first_row, &l).unwrap(), family(4, &[&[1, 2], &[1, 3]]));

        assert!(Poset::new(3, vec![(1, 2), (2, 3), (3, 1)]).is_err());
        assert!(Poset::new(2, vec![(1, 3)]).is_err());
        assert!(chain.less(1, 4) && !chain.less(4, 1));
        let json = r#"{"size":4,"covers":[[1,2],[1,3],[2,4],[3,4]]}"#;
        let diamond: Poset = serde_json::from_str(json).unwrap();
        assert_eq!(serde_json::to_string(&diamond).unwrap(), json);
        assert_eq!(linear_extensions(&diamond, &l).unwrap().len(), 2);
    }

    #[test]
    fn tableau_poset_examples() {
        let l = Limits::default();
        assert_eq!(linear_extensions(&tableau_poset(&part(&[2, 2])).unwrap(), &l).unwrap().len(), 2);
        assert_eq!(tableau_poset(&part(&[1])).unwrap().size(), 1);
        let lambda = part(&[3, 2]);
        let exts = linear_extensions(&tableau_poset(&lambda).unwrap(), &l).unwrap();
        assert_eq!(exts.len(), 5);
        let mut from_exts: Vec<_> = exts.iter().map(|f| extension_to_tableau(&lambda, f).unwrap()).collect();
        let mut direct = enumerate_syt(&lambda, &l).unwrap();
        from_exts.sort_by(|a, b| a.rows().cmp(b.rows()));
        direct.sort_by(|a, b| a.rows().cmp(b.rows()));
        assert_eq!(from_exts, direct);
    }
}
