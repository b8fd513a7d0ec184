//! The acceptance checks, runnable from tests and from the command line.
//!
//! Each check compares two independently computed answers over an exhaustive
//! (or seeded random) range of inputs. `VerifyConfig::capped` shrinks every
//! `n`-indexed range for quick runs.

use std::fmt;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalan::{
    catalan_matroid, circuits_closed_form, hyperplane_count_over_flat, is_bond_closed_form, is_circuit_closed_form,
    is_flat_closed_form, is_independent_closed_form, is_spanning_closed_form, rank_closed_form, shifted_matroid,
    ShiftVector,
};
use crate::complexes::{
    find_non_matroid_mu_sets, first_row_sets, first_row_shift_vector, independence_complex, is_shifted_family,
    iset_family, mu_sets, recover_shift_vector, tableau_ideal, tableau_poset, OrderIdeal, Partition, Poset,
    ShiftRecovery,
};
use crate::error::{Error, Limits};
use crate::matroid::{check_basis_axioms, has_uniform_minor, uniform, BasisFamily, RankTable};
use crate::paths::catalan_number;
use crate::representation::{
    build_representation, catalan_representation, rook_basis_test, rook_matching_test, vector_matroid,
};
use crate::sets::ElementSet;
use crate::tutte::{
    a_stat_count, b_stat_count, catalan_tutte_series, recursion_check, stat_histograms, tutte_catalan_direct,
    tutte_via_activities, tutte_via_corank_nullity, BivariatePolynomial, LinearOrder,
};

pub const CRITERIA: [&str; 12] = [
    "basis counts equal Catalan numbers",
    "basis axioms for C_n and random shifted matroids",
    "closed forms agree with brute force on every subset",
    "self-duality under x -> 2n+1-x",
    "Tutte polynomial: direct = activities = corank-nullity",
    "Tutte symmetry and duality",
    "generating function and recursion",
    "equidistribution of a and b",
    "shifted families and shift-vector recovery",
    "Young tableaux first rows and a non-matroid mu-family",
    "generic matrices represent shifted matroids",
    "uniform minors and hyperplanes over corank-2 flats",
];

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Upper bound applied to every `n`-indexed range.
    pub max_n: usize,
    pub seed: u64,
}

impl VerifyConfig {
    /// The full ranges.
    pub fn full() -> Self {
        VerifyConfig { max_n: 12, seed: 0x5eed }
    }

    pub fn capped(max_n: usize) -> Self {
        VerifyConfig { max_n: max_n.min(12), ..Self::full() }
    }

    fn n_range(&self, lo: usize, hi: usize) -> std::ops::RangeInclusive<usize> {
        lo..=hi.min(self.max_n)
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    fn limits(&self) -> Limits {
        Limits { max_n: self.max_n.max(12), max_subsets: 1 << 20, ..Limits::default() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} [{:>2}] {}: {}", self.id, self.name, self.detail)
    }
}

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e: Error| e.to_string())
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionReport> {
    (1..=CRITERIA.len()).map(|id| run_criterion(id, cfg)).collect()
}

/// Runs criterion `id` (1-based).
pub fn run_criterion(id: usize, cfg: &VerifyConfig) -> CriterionReport {
    let outcome = match id {
        1 => basis_counts(cfg),
        2 => axioms(cfg),
        3 => closed_forms(cfg),
        4 => self_duality(cfg),
        5 => tutte_agreement(cfg),
        6 => tutte_symmetry(cfg),
        7 => generating_function(cfg),
        8 => equidistribution(cfg),
        9 => shiftedness(cfg),
        10 => tableaux(cfg),
        11 => representation(cfg),
        12 => minors_and_hyperplanes(cfg),
        _ => Err(format!("no criterion {id}")),
    };
    let name = CRITERIA.get(id.wrapping_sub(1)).copied().unwrap_or("unknown");
    match outcome {
        Ok(detail) => CriterionReport { id, name, passed: true, detail },
        Err(detail) => CriterionReport { id, name, passed: false, detail },
    }
}

fn random_shift_vector(rng: &mut ChaCha8Rng, top: usize) -> ShiftVector {
    loop {
        let s: Vec<usize> = (1..=top).filter(|_| rng.gen_bool(0.4)).collect();
        if let Ok(s) = ShiftVector::new(s) {
            return s;
        }
    }
}

fn basis_counts(cfg: &VerifyConfig) -> Check {
    let l = cfg.limits();
    let range = cfg.n_range(0, 12);
    for n in range.clone() {
        let count = lib(catalan_matroid(n, &l))?.num_bases();
        ensure(BigInt::from(count) == BigInt::from(catalan_number(n)), || {
            format!("n={n}: {count} bases, C_n = {}", catalan_number(n))
        })?;
    }
    Ok(format!("n in {range:?}"))
}

fn axioms(cfg: &VerifyConfig) -> Check {
    let l = cfg.limits();
    for n in cfg.n_range(1, 6) {
        let c = lib(catalan_matroid(n, &l))?;
        check_basis_axioms(c.ground_size(), c.bases()).map_err(|v| format!("C_{n}: {v}"))?;
    }
    let mut rng = cfg.rng(2);
    for _ in 0..100 {
        let s = random_shift_vector(&mut rng, 12);
        let sm = lib(shifted_matroid(&s, &l))?;
        check_basis_axioms(sm.ground_size(), sm.bases()).map_err(|v| format!("{s:?}: {v}"))?;
    }
    Ok(format!("C_n for n in {:?}, 100 random SM(s) with s_n <= 12", cfg.n_range(1, 6)))
}

/// Minimal sets meeting every basis.
fn is_bond_brute(f: &BasisFamily, a: ElementSet) -> bool {
    let meets_all = |x: ElementSet| f.bases().iter().all(|b| !b.intersection(x).is_empty());
    !a.is_empty() && meets_all(a) && a.iter().all(|e| !meets_all(a.without(e)))
}

fn closed_forms(cfg: &VerifyConfig) -> Check {
    let l = cfg.limits();
    let mut checked = 0u64;
    for n in cfg.n_range(1, 5) {
        let f = lib(catalan_matroid(n, &l))?;
        let mut brute_circuits = Vec::new();
        for a in ElementSet::all_subsets(2 * n) {
            let r = f.rank_of(a);
            let is_flat = f.ground().difference(a).iter().all(|e| f.rank_of(a.with(e)) > r);
            let independent = f.is_independent(a);
            let is_circuit = !independent && a.iter().all(|e| f.is_independent(a.without(e)));
            if is_circuit {
                brute_circuits.push(a);
            }
            let pairs = [
                ("rank", lib(rank_closed_form(n, a))? == r),
                ("flat", lib(is_flat_closed_form(n, a))? == is_flat),
                ("independent", lib(is_independent_closed_form(n, a))? == independent),
                ("spanning", lib(is_spanning_closed_form(n, a))? == (r == n)),
                ("circuit", lib(is_circuit_closed_form(n, a))? == is_circuit),
                ("bond", lib(is_bond_closed_form(n, a))? == is_bond_brute(&f, a)),
            ];
            if let Some((what, _)) = pairs.iter().find(|(_, ok)| !ok) {
                return Err(format!("n={n}, A={a}: {what} disagrees"));
            }
            checked += 1;
        }
        brute_circuits.sort();
        ensure(lib(circuits_closed_form(n, &l))? == brute_circuits, || format!("n={n}: circuit lists differ"))?;
    }
    Ok(format!("{checked} subsets, zero discrepancies"))
}

fn self_duality(cfg: &VerifyConfig) -> Check {
    let l = cfg.limits();
    for n in cfg.n_range(1, 8) {
        let c = lib(catalan_matroid(n, &l))?;
        let reverse: Vec<usize> = (1..=2 * n).map(|x| 2 * n + 1 - x).collect();
        ensure(lib(c.dual().relabel(&reverse))? == c, || format!("n={n}: reversed dual differs"))?;
    }
    Ok(format!("n in {:?}", cfg.n_range(1, 8)))
}

fn tutte_agreement(cfg: &VerifyConfig) -> Check {
    let l = cfg.limits();
    let m = |i, j| BivariatePolynomial::monomial(i, j, 1);
    let golden = [(2, m(2, 1) + m(1, 2)), (3, m(3, 1) + m(2, 1) + m(2, 2) + m(1, 2) + m(1, 3))];
    for (n, want) in golden.iter().filter(|(n, _)| *n <= cfg.max_n) {
        let got = lib(tutte_catalan_direct(*n, &l))?;
        ensure(got == *want, || format!("T_C{n} = {got}, expected {want}"))?;
    }
    for n in cfg.n_range(1, 12) {
        let c = lib(catalan_matroid(n, &l))?;
        let direct = lib(tutte_catalan_direct(n, &l))?;
        let activities = lib(tutte_via_activities(&c, &LinearOrder::natural(2 * n)))?;
        ensure(direct == activities, || format!("n={n}: direct {direct} != activities {activities}"))?;
        if n <= 6 {
            let subsets = lib(tutte_via_corank_nullity(&c, &l))?;
            ensure(direct == subsets, || format!("n={n}: direct {direct} != corank-nullity {subsets}"))?;
        }
    }
    Ok(format!("activities for n in {:?}, corank-nullity for n in {:?}", cfg.n_range(1, 12), cfg.n_range(1, 6)))
}

fn tutte_symmetry(cfg: &VerifyConfig) -> Check {
    let l = cfg.limits();
    for n in cfg.n_range(0, 12) {
        let t = lib(tutte_catalan_direct(n, &l))?;
        ensure(t.is_symmetric(), || format!("n={n}: {t} is not symmetric"))?;
    }
    for n in cfg.n_range(1, 6) {
        let c = lib(catalan_matroid(n, &l))?;
        let t = lib(tutte_via_corank_nullity(&c, &l))?;
        let dual = lib(tutte_via_corank_nullity(&c.dual(), &l))?;
        ensure(dual == t.swap_variables(), || format!("n={n}: T of the dual is not T(t, q)"))?;
    }
    Ok(format!("symmetry for n in {:?}, duality for n in {:?}", cfg.n_range(0, 12), cfg.n_range(1, 6)))
}

fn generating_function(cfg: &VerifyConfig) -> Check {
    let l = cfg.limits();
    let order = 10.min(cfg.max_n);
    let series = lib(catalan_tutte_series(order, &l))?;
    for n in 0..=order {
        let t = lib(tutte_catalan_direct(n, &l))?;
        ensure(*series.coefficient(n) == t, || format!("x^{n}: series {} != {t}", series.coefficient(n)))?;
    }
    for n in cfg.n_range(0, 12) {
        ensure(lib(recursion_check(n, &l))?, || format!("recursion fails at n={n}"))?;
    }
    Ok(format!("series to x^{order}, recursion for n in {:?}", cfg.n_range(0, 12)))
}

fn equidistribution(cfg: &VerifyConfig) -> Check {
    let l = cfg.limits();
    for n in cfg.n_range(1, 8) {
        let (a, b) = lib(stat_histograms(n, &l))?;
        ensure(a[0] == 0 && b[0] == 0, || format!("n={n}: a or b took the value 0"))?;
        for k in 1..=n {
            let want = lib(a_stat_count(n, k))?;
            ensure(BigInt::from(a[k]) == want && BigInt::from(b[k]) == lib(b_stat_count(n, k))?, || {
                format!("n={n}, k={k}: a={}, b={}, formula {want}", a[k], b[k])
            })?;
        }
    }
    Ok(format!("n in {:?}, every k", cfg.n_range(1, 8)))
}

fn random_poset(rng: &mut ChaCha8Rng) -> crate::Result<(Poset, OrderIdeal)> {
    let size = rng.gen_range(1..=7);
    let mut labels: Vec<usize> = (1..=size).collect();
    labels.shuffle(rng);
    let mut covers = Vec::new();
    for i in 0..size {
        for j in i + 1..size {
            if rng.gen_bool(0.3) {
                covers.push((labels[i], labels[j]));
            }
        }
    }
    let poset = Poset::new(size, covers)?;
    let seed: ElementSet = (1..=size).filter(|_| rng.gen_bool(0.4)).collect();
    let down = seed.iter().fold(seed, |acc, y| acc.union((1..=size).filter(|&x| poset.less(x, y)).collect()));
    Ok((poset.clone(), OrderIdeal::new(&poset, down)?))
}

fn shiftedness(cfg: &VerifyConfig) -> Check {
    let l = cfg.limits();
    let mut rng = cfg.rng(9);
    for _ in 0..50 {
        let s = random_shift_vector(&mut rng, 10);
        let complex = lib(independence_complex(&lib(shifted_matroid(&s, &l))?, &l))?;
        is_shifted_family(&complex).map_err(|w| format!("{s:?}: complex not shifted at {w:?}"))?;
    }
    for _ in 0..50 {
        let s = random_shift_vector(&mut rng, 10);
        let got = lib(recover_shift_vector(&lib(shifted_matroid(&s, &l))?, &l))?;
        ensure(got == ShiftRecovery::Shifted(s.clone()), || format!("{s:?} recovered as {got:?}"))?;
    }
    let mut pairs = 0;
    for size in 1..=8 {
        for lambda in Partition::all_of_size(size) {
            let poset = lib(tableau_poset(&lambda))?;
            for mu in lambda.sub_partitions() {
                let fam = lib(mu_sets(&lambda, &mu, &l))?;
                is_shifted_family(&fam).map_err(|w| format!("mu-sets of {lambda:?}/{mu:?}: {w:?}"))?;
                let isets = lib(iset_family(&poset, &lib(tableau_ideal(&lambda, &mu))?, &l))?;
                ensure(isets == fam, || format!("I-sets of {lambda:?}/{mu:?} differ from mu-sets"))?;
                pairs += 1;
            }
        }
    }
    for _ in 0..100 {
        let (poset, ideal) = lib(random_poset(&mut rng))?;
        let fam = lib(iset_family(&poset, &ideal, &l))?;
        is_shifted_family(&fam).map_err(|w| format!("I-sets of {poset:?} / {ideal:?}: {w:?}"))?;
    }
    Ok(format!("50 complexes, 50 recoveries, {pairs} (lambda, mu) pairs, 100 random posets"))
}

fn tableaux(cfg: &VerifyConfig) -> Check {
    let l = cfg.limits();
    let mut shapes = 0;
    for size in 1..=8 {
        for lambda in Partition::all_of_size(size) {
            let s = lib(first_row_shift_vector(&lambda))?;
            let sets = lib(first_row_sets(&lambda, &l))?;
            let sm = lib(shifted_matroid(&s, &l))?;
            ensure(sets.members() == sm.bases(), || format!("{lambda:?}: first rows differ from SM{s:?}"))?;
            shapes += 1;
        }
    }
    let (lambda, mu) = lib(find_non_matroid_mu_sets(8, &l))?.ok_or("no non-matroid mu-family with |lambda| <= 8")?;
    Ok(format!("{shapes} shapes; mu-sets of {lambda:?}/{mu:?} are not a basis family"))
}

fn representation(cfg: &VerifyConfig) -> Check {
    let l = cfg.limits();
    let max_rows = 4.min(cfg.max_n);
    let max_top = 8.min(2 * cfg.max_n);
    let mut vectors = 0;
    let mut subsets = 0;
    for s in ElementSet::all_subsets(max_top).filter(|s| (1..=max_rows).contains(&s.len())) {
        let s = lib(ShiftVector::new(s.to_vec()))?;
        let vm = lib(vector_matroid(&lib(build_representation(&s, &l))?, &l))?;
        ensure(vm == lib(shifted_matroid(&s, &l))?, || format!("{s:?}: vector matroid differs"))?;
        for b in ElementSet::k_subsets(s.top(), s.len()) {
            let rook = lib(rook_basis_test(&s, b))?;
            let matching = lib(rook_matching_test(&s, b))?;
            ensure(rook == matching && matching == vm.is_basis(b), || {
                format!("{s:?}, {b}: rook {rook}, matching {matching}, determinant {}", vm.is_basis(b))
            })?;
            subsets += 1;
        }
        vectors += 1;
    }
    for n in 1..=max_rows {
        let vm = lib(vector_matroid(&lib(catalan_representation(n, &l))?, &l))?;
        ensure(vm == lib(catalan_matroid(n, &l))?, || format!("n={n}: Catalan representation differs"))?;
    }
    Ok(format!("{vectors} shift vectors, {subsets} column subsets, Catalan n <= {max_rows}"))
}

fn minors_and_hyperplanes(cfg: &VerifyConfig) -> Check {
    let l = cfg.limits();
    let mut witnesses = Vec::new();
    for n in (4..=6).filter(|&n| n <= cfg.max_n) {
        let c = lib(catalan_matroid(n, &l))?;
        let w = lib(has_uniform_minor(&c, 2, n, &l))?.ok_or(format!("no U(2,{n}) minor in C_{n}"))?;
        ensure(lib(c.minor(w.contract, w.delete))? == lib(uniform(2, n))?, || format!("n={n}: witness is wrong"))?;
        witnesses.push(format!("C_{n}/{}\\{}", w.contract, w.delete));
    }
    let mut flats = 0;
    for n in (3..=6).filter(|&n| n <= cfg.max_n) {
        let c = lib(catalan_matroid(n, &l))?;
        let table = lib(RankTable::build(&c, &l))?;
        let hyperplanes = table.hyperplanes();
        let above = |f: ElementSet| hyperplanes.iter().filter(|h| f.is_subset(**h)).count();
        if n <= 5 {
            for f in table.flats().into_iter().filter(|&f| table.rank_of(f) == n - 2) {
                let formula = lib(hyperplane_count_over_flat(n, f))?;
                ensure(formula == above(f), || format!("n={n}, flat {f}: formula {formula}, brute {}", above(f)))?;
                flats += 1;
            }
        }
        let special = ElementSet::interval(1, n - 2).with(2 * n);
        ensure(table.is_flat(special) && table.rank_of(special) == n - 2, || {
            format!("{special} is not a corank-2 flat")
        })?;
        ensure(above(special) == n, || format!("n={n}: {special} lies in {} hyperplanes", above(special)))?;
    }
    Ok(format!("witnesses {}; {flats} corank-2 flats", witnesses.join(", ")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_run_passes() {
        for report in run_all(&VerifyConfig::capped(3)) {
            assert!(report.passed, "{report}");
        }
    }

    #[test]
    fn unknown_criterion_fails() {
        assert!(!run_criterion(13, &VerifyConfig::full()).passed);
    }
}
