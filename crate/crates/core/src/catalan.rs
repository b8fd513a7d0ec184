//! The Catalan matroid `C_n`, shifted matroids `SM(s)`, and the path-based
//! descriptions of the rank function and set systems of `C_n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Limits, Result};
use crate::matroid::BasisFamily;
use crate::paths::{enumerate_dyck, StepSet, MAX_HALF_LENGTH};
use crate::sets::{ElementSet, MAX_ELEMENT};

/// Strictly increasing positive integers `s_1 < … < s_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct ShiftVector(Vec<usize>);

impl ShiftVector {
    pub fn new(s: Vec<usize>) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::domain("a shift vector needs at least one entry"));
        }
        if s[0] == 0 {
            return Err(Error::domain("shift vector entries must be positive"));
        }
        if let Some(w) = s.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::domain(format!("shift vector not strictly increasing at {} ≥ {}", w[0], w[1])));
        }
        if *s.last().unwrap() > MAX_ELEMENT {
            return Err(Error::domain(format!("shift vector entries must be at most {MAX_ELEMENT}")));
        }
        Ok(ShiftVector(s))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Rank of `SM(s)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `s_n`, the ground-set size of `SM(s)`.
    pub fn top(&self) -> usize {
        *self.0.last().expect("non-empty")
    }

    /// `a_i ≤ s_i` for the sorted elements of `set`, which must have `n` elements.
    pub fn dominates(&self, set: ElementSet) -> bool {
        set.len() == self.0.len() && set.iter().zip(&self.0).all(|(a, &s)| a <= s)
    }
}

impl TryFrom<Vec<usize>> for ShiftVector {
    type Error = Error;

    fn try_from(s: Vec<usize>) -> Result<Self> {
        ShiftVector::new(s)
    }
}

impl From<ShiftVector> for Vec<usize> {
    fn from(s: ShiftVector) -> Self {
        s.0
    }
}

impl fmt::Debug for ShiftVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SM{:?}", self.0)
    }
}

/// `C_n`: ground set `{1, …, 2n}`, bases the up-step sets of Dyck paths.
pub fn catalan_matroid(n: usize, limits: &Limits) -> Result<BasisFamily> {
    let paths = enumerate_dyck(n, limits)?;
    Ok(BasisFamily::from_sorted(2 * n, paths.into_iter().map(|p| p.ups()).collect()))
}

/// `SM(s)` on `{1, …, s_n}`: bases are the `{a_1 < … < a_n}` with `a_i ≤ s_i`.
pub fn shifted_matroid(s: &ShiftVector, limits: &Limits) -> Result<BasisFamily> {
    Limits::check("shift vector top s_n", s.top(), limits.max_shift_top)?;
    let mut bases = Vec::new();
    fill_shifted(s.as_slice(), 0, 0, ElementSet::EMPTY, &mut bases);
    Ok(BasisFamily::from_sorted(s.top(), bases))
}

/// Chooses `a_{i+1}` in increasing order after `last`, so output is lexicographic.
fn fill_shifted(s: &[usize], i: usize, last: usize, acc: ElementSet, out: &mut Vec<ElementSet>) {
    if i == s.len() {
        out.push(acc);
        return;
    }
    for a in last + 1..=s[i] {
        fill_shifted(s, i + 1, a, acc.with(a), out);
    }
}

/// `C_n = SM(1, 3, …, 2n − 1)` plus the loop `2n`.
pub fn catalan_as_shifted(n: usize) -> Result<(ShiftVector, usize)> {
    if n == 0 {
        return Err(Error::domain("C_0 is the empty matroid and has no shift vector"));
    }
    if n > MAX_HALF_LENGTH {
        return Err(Error::domain(format!("half-length {n} exceeds {MAX_HALF_LENGTH}")));
    }
    Ok((ShiftVector::new((1..=n).map(|i| 2 * i - 1).collect())?, 2 * n))
}

fn as_path(n: usize, a: ElementSet) -> Result<StepSet> {
    StepSet::new(n, a)
}

/// `r(A) = n + ⌊minht_A / 2⌋`.
pub fn rank_closed_form(n: usize, a: ElementSet) -> Result<usize> {
    let p = as_path(n, a)?;
    Ok((n as i64 + p.min_height().div_euclid(2)) as usize)
}

/// Flats: the full set, or minimum height odd with everything after each minimum in `A`.
pub fn is_flat_closed_form(n: usize, a: ElementSet) -> Result<bool> {
    let p = as_path(n, a)?;
    if a == ElementSet::full(2 * n) {
        return Ok(true);
    }
    if p.min_height().rem_euclid(2) != 1 {
        return Ok(false);
    }
    Ok(p.argmin_heights().into_iter().all(|x| ElementSet::interval(x + 1, 2 * n).is_subset(a)))
}

/// Independent iff the minimum height is the final height.
pub fn is_independent_closed_form(n: usize, a: ElementSet) -> Result<bool> {
    let p = as_path(n, a)?;
    Ok(p.min_height() == p.end_height())
}

/// Spanning iff the path never dips below the start.
pub fn is_spanning_closed_form(n: usize, a: ElementSet) -> Result<bool> {
    Ok(as_path(n, a)?.min_height() == 0)
}

/// Circuits are `{2k} ∪ (2k + P)` with `P` a Dyck path of half-length `n − k`.
pub fn is_circuit_closed_form(n: usize, a: ElementSet) -> Result<bool> {
    as_path(n, a)?;
    let Some(first) = a.min() else {
        return Ok(false);
    };
    if first % 2 == 1 {
        return Ok(false);
    }
    let k = first / 2;
    let rest = ElementSet::from_bits(a.without(first).bits() >> first);
    Ok(StepSet::new(n - k, rest)?.is_dyck())
}

/// All circuits of `C_n` from the closed form, in lexicographic order.
pub fn circuits_closed_form(n: usize, limits: &Limits) -> Result<Vec<ElementSet>> {
    Limits::check("Dyck half-length n", n, limits.max_n)?;
    let mut out = Vec::new();
    for k in 1..=n {
        let head = ElementSet::singleton(2 * k);
        for p in enumerate_dyck(n - k, limits)? {
            out.push(head.union(ElementSet::from_bits(p.ups().bits() << (2 * k))));
        }
    }
    out.sort();
    Ok(out)
}

/// Bonds: maximum height exactly 1, and no element beyond any position at height 1.
pub fn is_bond_closed_form(n: usize, a: ElementSet) -> Result<bool> {
    let p = as_path(n, a)?;
    let Some(last) = a.max() else {
        return Ok(false);
    };
    if p.max_height() != 1 {
        return Ok(false);
    }
    let h = p.heights();
    Ok((0..h.len()).filter(|&x| h[x] == 1).all(|x| last <= x))
}

/// For a rank-`(n − 2)` flat `A`, the number of hyperplanes above it is
/// `(x + 3) / 2`, where `x` is the first position at height `−1`.
pub fn hyperplane_count_over_flat(n: usize, a: ElementSet) -> Result<usize> {
    if n < 2 {
        return Err(Error::domain("rank-(n−2) flats need n ≥ 2"));
    }
    if !is_flat_closed_form(n, a)? {
        return Err(Error::domain(format!("{a} is not a flat of C_{n}")));
    }
    let r = rank_closed_form(n, a)?;
    if r != n - 2 {
        return Err(Error::domain(format!("{a} has rank {r}, not n − 2 = {}", n - 2)));
    }
    let h = as_path(n, a)?.heights();
    let x = (0..h.len()).find(|&x| h[x] == -1).expect("a rank-(n−2) flat reaches height −3");
    Ok((x + 3) / 2)
}
