//! Tutte polynomials: basis activities, the corank–nullity expansion, the
//! Dyck-path statistic sum for `C_n`, and its generating function.

mod poly;
mod series;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::binomial;

pub use poly::BivariatePolynomial;
pub use series::PolynomialSeries;

use crate::error::{Error, Limits, Result};
use crate::matroid::{BasisFamily, RankTable};
use crate::par;
use crate::paths::{catalan_number, enumerate_dyck};
use crate::sets::ElementSet;

/// A linear order on `{1, …, m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOrder {
    /// `position[e - 1]` is the place of `e` in the order.
    position: Vec<usize>,
}

impl LinearOrder {
    /// `1 < 2 < … < m`.
    pub fn natural(m: usize) -> Self {
        LinearOrder { position: (0..m).collect() }
    }

    /// The order listing `sequence[0] < sequence[1] < …`.
    pub fn from_sequence(sequence: &[usize]) -> Result<Self> {
        let m = sequence.len();
        let mut position = vec![usize::MAX; m];
        for (pos, &e) in sequence.iter().enumerate() {
            if e == 0 || e > m || position[e - 1] != usize::MAX {
                return Err(Error::domain(format!("{sequence:?} is not a permutation of 1..={m}")));
            }
            position[e - 1] = pos;
        }
        Ok(LinearOrder { position })
    }

    pub fn len(&self) -> usize {
        self.position.len()
    }

    pub fn is_empty(&self) -> bool {
        self.position.is_empty()
    }

    /// Order-minimal element of a non-empty set.
    pub fn min_of(&self, set: ElementSet) -> Option<usize> {
        set.iter().min_by_key(|&e| self.position[e - 1])
    }
}

/// The unique circuit in `b ∪ {e}`: `e` together with every `x ∈ b` for
/// which `b − x + e` is again a basis.
pub fn fundamental_circuit(f: &BasisFamily, b: ElementSet, e: usize) -> Result<ElementSet> {
    check_basis(f, b)?;
    if e == 0 || e > f.ground_size() || b.contains(e) {
        return Err(Error::domain(format!("{e} must be a ground element outside the basis {b}")));
    }
    let with_e = b.with(e);
    Ok(b.iter().filter(|&x| f.is_basis(with_e.without(x))).fold(ElementSet::singleton(e), |acc, x| acc.with(x)))
}

/// The unique bond in `(E − b) ∪ {i}`: `i` together with every `y ∉ b` for
/// which `b − i + y` is again a basis.
pub fn fundamental_bond(f: &BasisFamily, b: ElementSet, i: usize) -> Result<ElementSet> {
    check_basis(f, b)?;
    if !b.contains(i) {
        return Err(Error::domain(format!("{i} is not in the basis {b}")));
    }
    let without_i = b.without(i);
    Ok(b.complement(f.ground_size())
        .iter()
        .filter(|&y| f.is_basis(without_i.with(y)))
        .fold(ElementSet::singleton(i), |acc, y| acc.with(y)))
}

fn check_basis(f: &BasisFamily, b: ElementSet) -> Result<()> {
    if f.is_basis(b) {
        Ok(())
    } else {
        Err(Error::domain(format!("{b} is not a basis")))
    }
}

fn check_order(f: &BasisFamily, order: &LinearOrder) -> Result<()> {
    if order.len() != f.ground_size() {
        return Err(Error::domain(format!(
            "linear order has {} elements, ground set has {}",
            order.len(),
            f.ground_size()
        )));
    }
    Ok(())
}

/// Elements of `b` that are order-minimal in their fundamental bond.
pub fn internal_activity(f: &BasisFamily, b: ElementSet, order: &LinearOrder) -> Result<ElementSet> {
    check_order(f, order)?;
    check_basis(f, b)?;
    Ok(b.iter().filter(|&i| fundamental_bond(f, b, i).map(|d| order.min_of(d) == Some(i)).unwrap_or(false)).collect())
}

/// Elements outside `b` that are order-minimal in their fundamental circuit.
pub fn external_activity(f: &BasisFamily, b: ElementSet, order: &LinearOrder) -> Result<ElementSet> {
    check_order(f, order)?;
    check_basis(f, b)?;
    Ok(b.complement(f.ground_size())
        .iter()
        .filter(|&e| fundamental_circuit(f, b, e).map(|c| order.min_of(c) == Some(e)).unwrap_or(false))
        .collect())
}

type Histogram = HashMap<(u32, u32), u64>;

fn merge(mut a: Histogram, b: Histogram) -> Histogram {
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

/// `Σ_B q^{i(B)} t^{e(B)}` over all bases.
pub fn tutte_via_activities(f: &BasisFamily, order: &LinearOrder) -> Result<BivariatePolynomial> {
    check_order(f, order)?;
    let hist = par::fold(
        f.bases(),
        Histogram::new,
        |mut acc, &b| {
            let internal = internal_activity(f, b, order).expect("b is a basis").len() as u32;
            let external = external_activity(f, b, order).expect("b is a basis").len() as u32;
            *acc.entry((internal, external)).or_default() += 1;
            acc
        },
        merge,
    );
    Ok(BivariatePolynomial::from_histogram(hist))
}

/// `Σ_{A ⊆ E} (q − 1)^{r(E) − r(A)} (t − 1)^{|A| − r(A)}`, by a full subset sweep.
pub fn tutte_via_corank_nullity(f: &BasisFamily, limits: &Limits) -> Result<BivariatePolynomial> {
    let table = RankTable::build(f, limits)?;
    let r = f.rank();
    let hist = par::fold_range(
        0..1u64 << f.ground_size(),
        Histogram::new,
        |mut acc, bits| {
            let a = ElementSet::from_bits(bits);
            let ra = table.rank_of(a);
            *acc.entry(((r - ra) as u32, (a.len() - ra) as u32)).or_default() += 1;
            acc
        },
        merge,
    );
    let q1 = &BivariatePolynomial::q() - &BivariatePolynomial::one();
    let t1 = &BivariatePolynomial::t() - &BivariatePolynomial::one();
    let mut total = BivariatePolynomial::zero();
    for ((corank, nullity), count) in hist {
        let term = &(&q1.pow(corank) * &t1.pow(nullity)) * &BivariatePolynomial::constant(count);
        total = &total + &term;
    }
    Ok(total)
}

/// `Σ_P q^{a(P)} t^{b(P)}` over Dyck paths of half-length `n`.
pub fn tutte_catalan_direct(n: usize, limits: &Limits) -> Result<BivariatePolynomial> {
    if n == 0 {
        enumerate_dyck(0, limits)?;
        return Ok(BivariatePolynomial::one());
    }
    let paths = enumerate_dyck(n, limits)?;
    let hist = par::fold(
        &paths,
        Histogram::new,
        |mut acc, p| {
            let key = (p.stat_a().expect("Dyck") as u32, p.stat_b().expect("Dyck") as u32);
            *acc.entry(key).or_default() += 1;
            acc
        },
        merge,
    );
    Ok(BivariatePolynomial::from_histogram(hist))
}

pub fn is_symmetric(p: &BivariatePolynomial) -> bool {
    p.is_symmetric()
}

/// `Σ_k C_k x^k` truncated after `x^order`.
pub fn catalan_series(order: usize) -> PolynomialSeries {
    let coeffs = (0..=order).map(|k| BivariatePolynomial::constant(BigInt::from(catalan_number(k)))).collect();
    PolynomialSeries::from_coefficients(coeffs, order)
}

/// Expands `(1 + w·x·C(x)) / (1 − qtx + w·x·C(x))`, `w = qt − q − t`, to order `x^order`.
pub fn catalan_tutte_series(order: usize, limits: &Limits) -> Result<PolynomialSeries> {
    Limits::check("series order N", order, limits.max_series_order)?;
    let q = BivariatePolynomial::q();
    let t = BivariatePolynomial::t();
    let qt = &q * &t;
    let w = &(&qt - &q) - &t;
    let one = PolynomialSeries::constant(BivariatePolynomial::one(), order);
    let x_c = catalan_series(order).shift().scale(&w);
    let numerator = one.add(&x_c);
    let denominator = one.sub(&one.shift().scale(&qt)).add(&x_c);
    numerator.div(&denominator)
}

/// Checks `T_n(q, t) = qt · Σ_{r+s=n−1} T_r(q, 1) · T_s(1, t)` with `T_0 = 1`.
pub fn recursion_check(n: usize, limits: &Limits) -> Result<bool> {
    if n == 0 {
        return Ok(tutte_catalan_direct(0, limits)? == BivariatePolynomial::one());
    }
    let all: Vec<BivariatePolynomial> = (0..=n).map(|k| tutte_catalan_direct(k, limits)).collect::<Result<_>>()?;
    let qt = &BivariatePolynomial::q() * &BivariatePolynomial::t();
    let sum =
        (0..n).fold(BivariatePolynomial::zero(), |acc, r| &acc + &(&all[r].at_t_one() * &all[n - 1 - r].at_q_one()));
    Ok(&qt * &sum == all[n])
}

/// `k / (2n − k) · binom(2n − k, n)` for `1 ≤ k ≤ n`.
fn first_return_count(n: usize, k: usize) -> Result<BigInt> {
    if k == 0 || k > n {
        return Err(Error::domain(format!("k = {k} outside 1..={n}")));
    }
    let m = 2 * n - k;
    Ok(BigInt::from(k) * binomial(BigInt::from(m), BigInt::from(n)) / BigInt::from(m))
}

/// Number of Dyck paths of half-length `n` with `a(P) = k`.
pub fn a_stat_count(n: usize, k: usize) -> Result<BigInt> {
    first_return_count(n, k)
}

/// Number of Dyck paths of half-length `n` with `b(P) = k`.
pub fn b_stat_count(n: usize, k: usize) -> Result<BigInt> {
    first_return_count(n, k)
}

/// Enumerated histograms of `a` and `b`, indexed by `k ∈ {0, …, n}`.
pub fn stat_histograms(n: usize, limits: &Limits) -> Result<(Vec<u64>, Vec<u64>)> {
    let mut a = vec![0u64; n + 1];
    let mut b = vec![0u64; n + 1];
    if n == 0 {
        return Ok((a, b));
    }
    for p in enumerate_dyck(n, limits)? {
        a[p.stat_a()?] += 1;
        b[p.stat_b()?] += 1;
    }
    Ok((a, b))
}
