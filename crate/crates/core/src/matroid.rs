//! Finite matroids stored extensionally by their basis family.
//!
//! Everything here is brute force on purpose: these routines are the oracles
//! the closed-form characterizations in [`crate::catalan`] are checked against.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Limits, Result};
use crate::par;
use crate::sets::{ElementSet, MAX_ELEMENT};

/// A matroid on `{1, …, m}` given by its bases, kept in lexicographic order.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "RawFamily", into = "RawFamily")]
pub struct BasisFamily {
    m: usize,
    rank: usize,
    bases: Vec<ElementSet>,
    lookup: HashSet<ElementSet>,
}

#[derive(Serialize, Deserialize)]
struct RawFamily {
    m: usize,
    bases: Vec<Vec<usize>>,
}

impl TryFrom<RawFamily> for BasisFamily {
    type Error = Error;

    fn try_from(raw: RawFamily) -> Result<Self> {
        let bases = raw.bases.into_iter().map(|b| ElementSet::from_elements(raw.m, b)).collect::<Result<Vec<_>>>()?;
        BasisFamily::new(raw.m, bases)
    }
}

impl From<BasisFamily> for RawFamily {
    fn from(f: BasisFamily) -> Self {
        RawFamily { m: f.m, bases: f.bases.iter().map(|b| b.to_vec()).collect() }
    }
}

impl PartialEq for BasisFamily {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.bases == other.bases
    }
}

impl Eq for BasisFamily {}

impl fmt::Debug for BasisFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BasisFamily").field("m", &self.m).field("rank", &self.rank).field("bases", &self.bases).finish()
    }
}

/// Why a candidate family is not the basis family of a matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// (B1) fails.
    Empty,
    OutOfRange {
        set: ElementSet,
    },
    UnequalCardinality {
        first: ElementSet,
        other: ElementSet,
    },
    /// (B2) fails: no `b ∈ B − A` makes `A − a ∪ b` a member.
    Exchange {
        a: ElementSet,
        b: ElementSet,
        removed: usize,
    },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Empty => write!(f, "the family is empty"),
            AxiomViolation::OutOfRange { set } => write!(f, "{set} leaves the ground set"),
            AxiomViolation::UnequalCardinality { first, other } => {
                write!(f, "{first} and {other} have different sizes")
            }
            AxiomViolation::Exchange { a, b, removed } => {
                write!(f, "no exchange for A = {a}, B = {b}, a = {removed}")
            }
        }
    }
}

/// Checks (B1) and (B2) on an arbitrary candidate family over `{1, …, m}`.
/// The first violation in lexicographic order of `(A, B, a)` is returned.
pub fn check_basis_axioms(m: usize, family: &[ElementSet]) -> std::result::Result<(), AxiomViolation> {
    let mut sets: Vec<ElementSet> = family.to_vec();
    sets.sort();
    sets.dedup();
    let Some(&first) = sets.first() else {
        return Err(AxiomViolation::Empty);
    };
    let ground = ElementSet::full(m.min(MAX_ELEMENT));
    if let Some(&set) = sets.iter().find(|s| !s.is_subset(ground) || m > MAX_ELEMENT) {
        return Err(AxiomViolation::OutOfRange { set });
    }
    if let Some(&other) = sets.iter().find(|s| s.len() != first.len()) {
        return Err(AxiomViolation::UnequalCardinality { first, other });
    }
    let lookup: HashSet<ElementSet> = sets.iter().copied().collect();
    let violation = par::find_map_first(&sets, |&a| {
        sets.iter().find_map(|&b| {
            let b_only = b.difference(a);
            a.difference(b).iter().find_map(|x| {
                let base = a.without(x);
                let ok = b_only.iter().any(|y| lookup.contains(&base.with(y)));
                (!ok).then_some(AxiomViolation::Exchange { a, b, removed: x })
            })
        })
    });
    violation.map_or(Ok(()), Err)
}

/// Found minor `M / contract \ delete ≅ U(k, l)`; `kept` is the surviving ground set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorWitness {
    pub contract: ElementSet,
    pub delete: ElementSet,
    pub kept: ElementSet,
}

impl BasisFamily {
    /// Validates range, non-emptiness and equal cardinality; (B2) is left to
    /// [`BasisFamily::check_axioms`].
    pub fn new(m: usize, bases: impl IntoIterator<Item = ElementSet>) -> Result<Self> {
        if m > MAX_ELEMENT {
            return Err(Error::domain(format!("ground size {m} exceeds {MAX_ELEMENT}")));
        }
        let mut bases: Vec<ElementSet> = bases.into_iter().collect();
        bases.sort();
        bases.dedup();
        match check_shape(m, &bases) {
            Some(v) => Err(Error::domain(format!("not a basis family: {v}"))),
            None => Ok(Self::from_sorted(m, bases)),
        }
    }

    /// Caller guarantees sorted, deduplicated, non-empty, equicardinal, in range.
    pub(crate) fn from_sorted(m: usize, bases: Vec<ElementSet>) -> Self {
        debug_assert!(bases.windows(2).all(|w| w[0] < w[1]));
        let rank = bases[0].len();
        let lookup = bases.iter().copied().collect();
        BasisFamily { m, rank, bases, lookup }
    }

    pub(crate) fn from_unsorted(m: usize, mut bases: Vec<ElementSet>) -> Self {
        bases.sort();
        bases.dedup();
        Self::from_sorted(m, bases)
    }

    pub fn ground_size(&self) -> usize {
        self.m
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.m)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn is_basis(&self, set: ElementSet) -> bool {
        self.lookup.contains(&set)
    }

    pub fn check_axioms(&self) -> std::result::Result<(), AxiomViolation> {
        check_basis_axioms(self.m, &self.bases)
    }

    /// Rank as the largest intersection with a basis.
    pub fn rank_of(&self, a: ElementSet) -> usize {
        self.bases.iter().map(|b| b.intersection(a).len()).max().unwrap_or(0)
    }

    pub fn is_independent(&self, a: ElementSet) -> bool {
        self.rank_of(a) == a.len()
    }

    /// Elements lying in no basis.
    pub fn loops(&self) -> ElementSet {
        let covered = self.bases.iter().fold(ElementSet::EMPTY, |acc, &b| acc.union(b));
        self.ground().difference(covered)
    }

    /// Elements lying in every basis.
    pub fn coloops(&self) -> ElementSet {
        self.bases.iter().fold(self.ground(), |acc, &b| acc.intersection(b))
    }

    pub fn rank_table(&self, limits: &Limits) -> Result<RankTable> {
        RankTable::build(self, limits)
    }

    pub fn independents(&self, limits: &Limits) -> Result<Vec<ElementSet>> {
        Ok(self.rank_table(limits)?.independents())
    }

    pub fn spanning_sets(&self, limits: &Limits) -> Result<Vec<ElementSet>> {
        Ok(self.rank_table(limits)?.spanning_sets())
    }

    pub fn flats(&self, limits: &Limits) -> Result<Vec<ElementSet>> {
        Ok(self.rank_table(limits)?.flats())
    }

    pub fn circuits(&self, limits: &Limits) -> Result<Vec<ElementSet>> {
        Ok(self.rank_table(limits)?.circuits())
    }

    /// Circuits of the dual.
    pub fn bonds(&self, limits: &Limits) -> Result<Vec<ElementSet>> {
        self.dual().circuits(limits)
    }

    pub fn closure(&self, a: ElementSet, limits: &Limits) -> Result<ElementSet> {
        if !a.is_subset(self.ground()) {
            return Err(Error::domain(format!("{a} is not inside the ground set")));
        }
        Ok(self.rank_table(limits)?.closure(a))
    }

    pub fn dual(&self) -> BasisFamily {
        let bases = self.bases.iter().map(|b| b.complement(self.m)).collect();
        Self::from_unsorted(self.m, bases)
    }

    /// Image under `e ↦ perm[e - 1]`; `perm` must be a permutation of `1..=m`.
    pub fn relabel(&self, perm: &[usize]) -> Result<BasisFamily> {
        check_permutation(self.m, perm)?;
        let bases = self.bases.iter().map(|b| b.map(|e| perm[e - 1])).collect();
        Ok(Self::from_unsorted(self.m, bases))
    }

    pub fn contract(&self, e: usize) -> Result<BasisFamily> {
        self.check_element(e)?;
        self.minor(ElementSet::singleton(e), ElementSet::EMPTY)
    }

    pub fn delete(&self, e: usize) -> Result<BasisFamily> {
        self.check_element(e)?;
        self.minor(ElementSet::EMPTY, ElementSet::singleton(e))
    }

    /// `M / contract \ delete`, re-indexed order-preservingly onto `{1, …, m'}`.
    ///
    /// Contracting loops and deleting coloops are allowed: the bases of `M / C`
    /// are `B − C` over bases meeting `C` maximally, and the bases of `M \ D`
    /// are `B − D` over bases meeting `D` minimally.
    pub fn minor(&self, contract: ElementSet, delete: ElementSet) -> Result<BasisFamily> {
        let ground = self.ground();
        if !contract.is_subset(ground) || !delete.is_subset(ground) {
            return Err(Error::domain("minor sets must lie in the ground set"));
        }
        if !contract.intersection(delete).is_empty() {
            return Err(Error::domain("contraction and deletion sets must be disjoint"));
        }
        let best_c = self.bases.iter().map(|b| b.intersection(contract).len()).max().unwrap_or(0);
        let after_contract: Vec<ElementSet> = self
            .bases
            .iter()
            .filter(|b| b.intersection(contract).len() == best_c)
            .map(|b| b.difference(contract))
            .collect();
        let best_d = after_contract.iter().map(|b| b.intersection(delete).len()).min().unwrap_or(0);
        let removed = contract.union(delete);
        let bases = after_contract
            .into_iter()
            .filter(|b| b.intersection(delete).len() == best_d)
            .map(|b| compress(b, removed))
            .collect();
        Ok(Self::from_unsorted(self.m - removed.len(), bases))
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e == 0 || e > self.m {
            Err(Error::domain(format!("element {e} outside 1..={}", self.m)))
        } else {
            Ok(())
        }
    }

    /// Number of bases containing each element, indexed by `e - 1`.
    fn element_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.m];
        for b in &self.bases {
            for e in b.iter() {
                deg[e - 1] += 1;
            }
        }
        deg
    }

    /// Number of bases containing each pair, indexed by `(e - 1, f - 1)`.
    fn pair_degrees(&self) -> Vec<Vec<usize>> {
        let mut deg = vec![vec![0; self.m]; self.m];
        for b in &self.bases {
            for e in b.iter() {
                for f in b.iter() {
                    deg[e - 1][f - 1] += 1;
                }
            }
        }
        deg
    }
}

fn check_shape(m: usize, sets: &[ElementSet]) -> Option<AxiomViolation> {
    let Some(&first) = sets.first() else {
        return Some(AxiomViolation::Empty);
    };
    let ground = ElementSet::full(m);
    if let Some(&set) = sets.iter().find(|s| !s.is_subset(ground)) {
        return Some(AxiomViolation::OutOfRange { set });
    }
    sets.iter().find(|s| s.len() != first.len()).map(|&other| AxiomViolation::UnequalCardinality { first, other })
}

fn check_permutation(m: usize, perm: &[usize]) -> Result<()> {
    if perm.len() != m {
        return Err(Error::domain(format!("permutation has length {}, expected {m}", perm.len())));
    }
    let image = ElementSet::from_elements(m, perm.iter().copied())?;
    if image.len() != m {
        return Err(Error::domain("relabeling is not a permutation"));
    }
    Ok(())
}

/// Drops the elements of `removed` and closes the gaps, keeping relative order.
pub fn compress(set: ElementSet, removed: ElementSet) -> ElementSet {
    set.difference(removed).map(|e| e - removed.count_up_to(e))
}

/// The uniform matroid `U(k, m)`: every `k`-subset is a basis.
pub fn uniform(k: usize, m: usize) -> Result<BasisFamily> {
    if k > m {
        return Err(Error::domain(format!("U({k},{m}) needs k ≤ m")));
    }
    if m >= MAX_ELEMENT {
        return Err(Error::domain(format!("ground size {m} too large")));
    }
    Ok(BasisFamily::from_unsorted(m, ElementSet::k_subsets(m, k).collect()))
}

/// Searches for a relabeling `σ` with `f.relabel(σ) == g`.
pub fn is_isomorphic(f: &BasisFamily, g: &BasisFamily, limits: &Limits) -> Result<Option<Vec<usize>>> {
    if f.m != g.m || f.rank != g.rank || f.bases.len() != g.bases.len() {
        return Ok(None);
    }
    Limits::check("ground size for isomorphism search", f.m, limits.max_iso_ground)?;
    let (df, dg) = (f.element_degrees(), g.element_degrees());
    let mut sorted_f = df.clone();
    let mut sorted_g = dg.clone();
    sorted_f.sort_unstable();
    sorted_g.sort_unstable();
    if sorted_f != sorted_g {
        return Ok(None);
    }
    let search = IsoSearch { f, g, df, dg, pf: f.pair_degrees(), pg: g.pair_degrees() };
    let mut perm = Vec::with_capacity(f.m);
    Ok(search.extend(&mut perm, ElementSet::EMPTY).then_some(perm))
}

struct IsoSearch<'a> {
    f: &'a BasisFamily,
    g: &'a BasisFamily,
    df: Vec<usize>,
    dg: Vec<usize>,
    pf: Vec<Vec<usize>>,
    pg: Vec<Vec<usize>>,
}

impl IsoSearch<'_> {
    /// Assigns images to elements `1, 2, …` in turn; degree and pair-degree
    /// invariants prune before the final basis-by-basis comparison.
    fn extend(&self, perm: &mut Vec<usize>, used: ElementSet) -> bool {
        let e = perm.len();
        if e == self.f.m {
            return self.f.bases.iter().all(|b| self.g.is_basis(b.map(|x| perm[x - 1])));
        }
        for image in 1..=self.f.m {
            if used.contains(image) || self.dg[image - 1] != self.df[e] {
                continue;
            }
            let consistent = (0..e).all(|x| self.pf[e][x] == self.pg[image - 1][perm[x] - 1])
                && self.pf[e][e] == self.pg[image - 1][image - 1];
            if !consistent {
                continue;
            }
            perm.push(image);
            if self.extend(perm, used.with(image)) {
                return true;
            }
            perm.pop();
        }
        false
    }
}

/// Searches for a `U(k, l)` minor.
///
/// Every minor of rank `k` can be written `M / C \ D` with `C` independent of
/// size `r − k`, so it suffices to contract each such `C` and look for `l`
/// elements whose `k`-subsets are all bases of `M / C`.
pub fn has_uniform_minor(f: &BasisFamily, k: usize, l: usize, limits: &Limits) -> Result<Option<MinorWitness>> {
    if k > l {
        return Err(Error::domain(format!("U({k},{l}) needs k ≤ l")));
    }
    Limits::check("ground size for minor search", f.m, limits.max_minor_ground)?;
    let r = f.rank;
    if k > r || l - k > f.m - r {
        return Ok(None);
    }
    let contractions: Vec<ElementSet> = ElementSet::k_subsets(f.m, r - k).filter(|&c| f.is_independent(c)).collect();
    let mut contractions = contractions;
    contractions.sort();
    Ok(par::find_map_first(&contractions, |&c| {
        let candidates: Vec<usize> = f
            .ground()
            .difference(c)
            .iter()
            .filter(|&x| {
                let is_loop = f.rank_of(c.with(x)) == r - k;
                if k == 0 {
                    is_loop
                } else {
                    !is_loop
                }
            })
            .collect();
        let mut chosen = Vec::with_capacity(l);
        if pick_uniform(f, c, k, l, &candidates, 0, &mut chosen) {
            let kept: ElementSet = chosen.iter().copied().collect();
            Some(MinorWitness { contract: c, delete: f.ground().difference(c.union(kept)), kept })
        } else {
            None
        }
    }))
}

fn pick_uniform(
    f: &BasisFamily,
    contracted: ElementSet,
    k: usize,
    l: usize,
    candidates: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == l {
        return true;
    }
    if candidates.len() - from < l - chosen.len() {
        return false;
    }
    for idx in from..candidates.len() {
        let x = candidates[idx];
        if k > 0 && !new_k_subsets_are_bases(f, contracted, k, chosen, x) {
            continue;
        }
        chosen.push(x);
        if pick_uniform(f, contracted, k, l, candidates, idx + 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Every `(k-1)`-subset `T` of `chosen` has `T ∪ {x} ∪ contracted` a basis of `f`.
fn new_k_subsets_are_bases(f: &BasisFamily, contracted: ElementSet, k: usize, chosen: &[usize], x: usize) -> bool {
    if chosen.len() < k - 1 {
        return true;
    }
    let base = contracted.with(x);
    ElementSet::k_subsets(chosen.len(), k - 1).all(|idx| {
        let t: ElementSet = idx.iter().map(|i| chosen[i - 1]).collect();
        f.is_basis(base.union(t))
    })
}

/// Ranks of all `2^m` subsets, indexed by the subset's bit pattern.
pub struct RankTable {
    m: usize,
    rank: usize,
    ranks: Vec<u8>,
}

impl RankTable {
    pub fn build(f: &BasisFamily, limits: &Limits) -> Result<RankTable> {
        limits.check_sweep(f.m)?;
        let size = 1usize << f.m;
        let mut independent = vec![false; size];
        for b in &f.bases {
            independent[b.bits() as usize] = true;
        }
        // Downward closure, one element at a time.
        for e in 0..f.m {
            let bit = 1usize << e;
            for s in 0..size {
                if s & bit != 0 && independent[s] {
                    independent[s ^ bit] = true;
                }
            }
        }
        let mut ranks = vec![0u8; size];
        for s in 1..size {
            ranks[s] = if independent[s] {
                s.count_ones() as u8
            } else {
                let mut best = 0;
                let mut rest = s;
                while rest != 0 {
                    let low = rest & rest.wrapping_neg();
                    best = best.max(ranks[s ^ low]);
                    rest ^= low;
                }
                best
            };
        }
        Ok(RankTable { m: f.m, rank: f.rank, ranks })
    }

    #[inline]
    pub fn rank_of(&self, a: ElementSet) -> usize {
        self.ranks[a.bits() as usize] as usize
    }

    pub fn ground_size(&self) -> usize {
        self.m
    }

    fn sweep(&self, pred: impl Fn(ElementSet) -> bool + Sync + Send) -> Vec<ElementSet> {
        let mut out: Vec<ElementSet> = par::filter_range(0..1u64 << self.m, |s| pred(ElementSet::from_bits(s)))
            .into_iter()
            .map(ElementSet::from_bits)
            .collect();
        out.sort();
        out
    }

    pub fn is_independent(&self, a: ElementSet) -> bool {
        self.rank_of(a) == a.len()
    }

    pub fn is_spanning(&self, a: ElementSet) -> bool {
        self.rank_of(a) == self.rank
    }

    pub fn is_flat(&self, a: ElementSet) -> bool {
        let r = self.rank_of(a);
        a.complement(self.m).iter().all(|y| self.rank_of(a.with(y)) > r)
    }

    pub fn is_circuit(&self, a: ElementSet) -> bool {
        !a.is_empty() && !self.is_independent(a) && a.iter().all(|e| self.is_independent(a.without(e)))
    }

    pub fn closure(&self, a: ElementSet) -> ElementSet {
        let r = self.rank_of(a);
        a.complement(self.m).iter().filter(|&y| self.rank_of(a.with(y)) == r).fold(a, |acc, y| acc.with(y))
    }

    pub fn independents(&self) -> Vec<ElementSet> {
        self.sweep(|a| self.is_independent(a))
    }

    pub fn spanning_sets(&self) -> Vec<ElementSet> {
        self.sweep(|a| self.is_spanning(a))
    }

    pub fn flats(&self) -> Vec<ElementSet> {
        self.sweep(|a| self.is_flat(a))
    }

    /// Flats of rank `r − 1`.
    pub fn hyperplanes(&self) -> Vec<ElementSet> {
        let target = self.rank.wrapping_sub(1);
        self.sweep(|a| self.rank_of(a) == target && self.is_flat(a))
    }

    pub fn circuits(&self) -> Vec<ElementSet> {
        self.sweep(|a| self.is_circuit(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    fn fam(m: usize, bases: &[&[usize]]) -> BasisFamily {
        BasisFamily::new(m, bases.iter().map(|b| set(b))).unwrap()
    }

    fn sets(v: &[&[usize]]) -> Vec<ElementSet> {
        let mut out: Vec<_> = v.iter().map(|b| set(b)).collect();
        out.sort();
        out
    }

    fn c2() -> BasisFamily {
        fam(4, &[&[1, 2], &[1, 3]])
    }

    #[test]
    fn axiom_check_examples() {
        assert_eq!(
            check_basis_axioms(4, &[set(&[1, 2]), set(&[3, 4])]),
            Err(AxiomViolation::Exchange { a: set(&[1, 2]), b: set(&[3, 4]), removed: 1 })
        );
        assert_eq!(check_basis_axioms(3, &[set(&[1, 2, 3])]), Ok(()));
        assert_eq!(check_basis_axioms(3, &[]), Err(AxiomViolation::Empty));
        assert!(matches!(
            check_basis_axioms(3, &[set(&[1]), set(&[1, 2])]),
            Err(AxiomViolation::UnequalCardinality { .. })
        ));
        assert!(matches!(check_basis_axioms(2, &[set(&[3])]), Err(AxiomViolation::OutOfRange { .. })));
        assert_eq!(c2().check_axioms(), Ok(()));
        assert!(BasisFamily::new(3, vec![]).is_err());
    }

    #[test]
    fn rank_examples() {
        let c3 = fam(6, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 3, 4], &[1, 3, 5]]);
        assert_eq!(c3.rank_of(set(&[2, 4, 6])), 2);
        assert_eq!(c3.rank_of(ElementSet::EMPTY), 0);
        assert_eq!(c3.rank_of(c3.ground()), 3);
        let table = c3.rank_table(&Limits::default()).unwrap();
        for a in ElementSet::all_subsets(6) {
            assert_eq!(table.rank_of(a), c3.rank_of(a));
        }
    }

    #[test]
    fn derived_families_of_c2() {
        let l = Limits::default();
        let f = c2();
        assert_eq!(f.flats(&l).unwrap(), sets(&[&[4], &[1, 4], &[2, 3, 4], &[1, 2, 3, 4]]));
        assert_eq!(f.circuits(&l).unwrap(), sets(&[&[4], &[2, 3]]));
        assert_eq!(f.bonds(&l).unwrap(), sets(&[&[1], &[2, 3]]));
        assert_eq!(f.independents(&l).unwrap(), sets(&[&[], &[1], &[2], &[3], &[1, 2], &[1, 3]]));
        assert_eq!(f.closure(set(&[2]), &l).unwrap(), set(&[2, 3, 4]));
        assert_eq!(f.loops(), set(&[4]));
        assert_eq!(f.coloops(), set(&[1]));
        let spanning = f.spanning_sets(&l).unwrap();
        assert!(spanning.contains(&set(&[1, 2])) && !spanning.contains(&set(&[2, 3, 4])));
    }

    #[test]
    fn bonds_are_complements_of_hyperplanes() {
        let l = Limits::default();
        for f in [c2(), uniform(2, 4).unwrap(), fam(5, &[&[1, 2], &[1, 3], &[2, 3], &[1, 4], &[2, 4]])] {
            let mut expected: Vec<_> =
                f.rank_table(&l).unwrap().hyperplanes().into_iter().map(|h| h.complement(f.ground_size())).collect();
            expected.sort();
            assert_eq!(f.bonds(&l).unwrap(), expected);
        }
    }

    #[test]
    fn dual_examples() {
        assert_eq!(c2().dual(), fam(4, &[&[3, 4], &[2, 4]]));
        assert_eq!(c2().dual().dual(), c2());
        assert_eq!(uniform(2, 5).unwrap().dual(), uniform(3, 5).unwrap());
    }

    #[test]
    fn relabel_and_isomorphism() {
        let l = Limits::default();
        let f = c2();
        assert_eq!(f.dual().relabel(&[4, 3, 2, 1]).unwrap(), f);
        assert_eq!(is_isomorphic(&f, &f, &l).unwrap(), Some(vec![1, 2, 3, 4]));
        assert!(is_isomorphic(&uniform(1, 2).unwrap(), &fam(2, &[&[1], &[2]]), &l).unwrap().is_some());
        assert_eq!(is_isomorphic(&f, &uniform(2, 4).unwrap(), &l).unwrap(), None);
        let shuffled = f.relabel(&[3, 1, 4, 2]).unwrap();
        let sigma = is_isomorphic(&f, &shuffled, &l).unwrap().unwrap();
        assert_eq!(f.relabel(&sigma).unwrap(), shuffled);
        assert!(f.relabel(&[1, 1, 2, 3]).is_err());
        assert!(is_isomorphic(&uniform(2, 11).unwrap(), &uniform(2, 11).unwrap(), &l).unwrap_err().is_resource());
    }

    #[test]
    fn minors() {
        let f = c2();
        assert_eq!(f.contract(1).unwrap(), fam(3, &[&[1], &[2]]));
        assert_eq!(f.delete(4).unwrap(), fam(3, &[&[1, 2], &[1, 3]]));
        // deleting the coloop drops the rank, contracting the loop is a no-op
        assert_eq!(f.delete(1).unwrap(), fam(3, &[&[1], &[2]]));
        assert_eq!(f.contract(4).unwrap(), fam(3, &[&[1, 2], &[1, 3]]));
        assert!(f.contract(5).is_err());
        assert!(f.minor(set(&[1]), set(&[1])).is_err());
        let u = uniform(3, 6).unwrap();
        // contract 2 then delete 5 (which is element 4 after re-indexing)
        let stepwise = u.contract(2).unwrap().delete(4).unwrap();
        assert_eq!(u.minor(set(&[2]), set(&[5])).unwrap(), stepwise);
        assert_eq!(stepwise, uniform(2, 4).unwrap());
    }

    #[test]
    fn uniform_examples() {
        assert_eq!(uniform(2, 3).unwrap(), fam(3, &[&[1, 2], &[1, 3], &[2, 3]]));
        assert_eq!(uniform(0, 3).unwrap().bases(), &[ElementSet::EMPTY]);
        assert_eq!(uniform(2, 4).unwrap().num_bases(), 6);
        assert!(uniform(3, 2).is_err());
    }

    #[test]
    fn uniform_minor_search() {
        let l = Limits::default();
        assert!(has_uniform_minor(&uniform(1, 2).unwrap(), 2, 2, &l).unwrap().is_none());
        let u = uniform(3, 5).unwrap();
        let w = has_uniform_minor(&u, 2, 4, &l).unwrap().unwrap();
        let minor = u.minor(w.contract, w.delete).unwrap();
        assert!(is_isomorphic(&minor, &uniform(2, 4).unwrap(), &l).unwrap().is_some());
        assert!(has_uniform_minor(&u, 2, 5, &l).unwrap().is_none());
        // U(0, l) needs l loops after contracting a basis
        assert!(has_uniform_minor(&c2(), 0, 1, &l).unwrap().is_some());
        assert!(has_uniform_minor(&c2(), 0, 3, &l).unwrap().is_none());
        assert!(has_uniform_minor(&c2(), 3, 2, &l).is_err());
    }

    #[test]
    fn serde_shape() {
        let json = serde_json::to_string(&c2()).unwrap();
        assert_eq!(json, r#"{"m":4,"bases":[[1,2],[1,3]]}"#);
        assert_eq!(serde_json::from_str::<BasisFamily>(&json).unwrap(), c2());
        assert!(serde_json::from_str::<BasisFamily>(r#"{"m":2,"bases":[[1],[1,2]]}"#).is_err());
    }
}
