//! Lattice paths of `2n` steps `(1, 1)` / `(1, -1)`, encoded by their up-step sets.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Limits, Result};
use crate::par;
use crate::sets::ElementSet;

/// Largest half-length an [`ElementSet`] can hold.
pub const MAX_HALF_LENGTH: usize = 32;

/// A path with `2n` steps; step `i` is an up-step iff `i ∈ ups`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawStepSet", into = "RawStepSet")]
pub struct StepSet {
    n: usize,
    ups: ElementSet,
}

#[derive(Serialize, Deserialize)]
struct RawStepSet {
    n: usize,
    ups: Vec<usize>,
}

impl TryFrom<RawStepSet> for StepSet {
    type Error = Error;

    fn try_from(raw: RawStepSet) -> Result<Self> {
        let ups = ElementSet::from_elements(2 * raw.n, raw.ups)?;
        StepSet::new(raw.n, ups)
    }
}

impl From<StepSet> for RawStepSet {
    fn from(p: StepSet) -> Self {
        RawStepSet { n: p.n, ups: p.ups.to_vec() }
    }
}

impl StepSet {
    pub fn new(n: usize, ups: ElementSet) -> Result<Self> {
        if n > MAX_HALF_LENGTH {
            return Err(Error::domain(format!("half-length {n} exceeds {MAX_HALF_LENGTH}")));
        }
        if !ups.is_subset(ElementSet::full(2 * n)) {
            return Err(Error::domain(format!("up-steps {ups} not within 1..={}", 2 * n)));
        }
        Ok(StepSet { n, ups })
    }

    pub fn from_ups(n: usize, ups: &[usize]) -> Result<Self> {
        StepSet::new(n, ElementSet::from_elements(2 * n, ups.iter().copied())?)
    }

    pub fn half_length(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        2 * self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn ups(&self) -> ElementSet {
        self.ups
    }

    /// Height after the first `x` steps: `2·|ups ∩ {1..x}| − x`.
    pub fn height(&self, x: usize) -> Result<i64> {
        if x > 2 * self.n {
            return Err(Error::domain(format!("position {x} outside 0..={}", 2 * self.n)));
        }
        Ok(self.height_unchecked(x))
    }

    #[inline]
    fn height_unchecked(&self, x: usize) -> i64 {
        2 * self.ups.count_up_to(x) as i64 - x as i64
    }

    /// Heights at `x = 0, 1, …, 2n`.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = Vec::with_capacity(2 * self.n + 1);
        let mut cur = 0i64;
        h.push(0);
        for i in 1..=2 * self.n {
            cur += if self.ups.contains(i) { 1 } else { -1 };
            h.push(cur);
        }
        h
    }

    /// Minimum height over `x ∈ {0, …, 2n}`; includes the start, so it is never positive.
    pub fn min_height(&self) -> i64 {
        self.heights().into_iter().min().unwrap_or(0)
    }

    /// Maximum height over `x ∈ {0, …, 2n}`; never negative.
    pub fn max_height(&self) -> i64 {
        self.heights().into_iter().max().unwrap_or(0)
    }

    pub fn end_height(&self) -> i64 {
        self.height_unchecked(2 * self.n)
    }

    /// Positions `x` at which the minimum height is attained.
    pub fn argmin_heights(&self) -> Vec<usize> {
        let h = self.heights();
        let min = h.iter().copied().min().unwrap_or(0);
        (0..h.len()).filter(|&x| h[x] == min).collect()
    }

    pub fn is_dyck(&self) -> bool {
        self.ups.len() == self.n && self.min_height() == 0
    }

    fn require_dyck(&self) -> Result<()> {
        if self.is_dyck() {
            Ok(())
        } else {
            Err(Error::domain(format!("{} is not a Dyck path of half-length {}", self.ups, self.n)))
        }
    }

    /// Number of up-steps before the first down-step.
    pub fn stat_a(&self) -> Result<usize> {
        self.require_dyck()?;
        if self.n == 0 {
            return Err(Error::domain("statistic a is undefined on the empty path"));
        }
        Ok((!self.ups.bits()).trailing_zeros() as usize)
    }

    /// Number of returns to the axis, `|{x ≥ 1 : ht(x) = 0}|`.
    pub fn stat_b(&self) -> Result<usize> {
        self.require_dyck()?;
        if self.n == 0 {
            return Err(Error::domain("statistic b is undefined on the empty path"));
        }
        Ok(self.heights()[1..].iter().filter(|&&h| h == 0).count())
    }

    /// First-return decomposition `P = {1} ∪ (1 + P₁) ∪ (2r + 2 + P₂)`.
    pub fn decompose(&self) -> Result<(StepSet, StepSet)> {
        self.require_dyck()?;
        if self.n == 0 {
            return Err(Error::domain("the empty path has no first-return decomposition"));
        }
        let h = self.heights();
        let first_return = (1..h.len()).find(|&x| h[x] == 0).expect("Dyck paths return to 0");
        let r = (first_return - 2) / 2;
        let s = self.n - 1 - r;
        let inner = ElementSet::from_bits(self.ups.bits() >> 1).intersection(ElementSet::full(2 * r));
        let outer = ElementSet::from_bits(self.ups.bits() >> first_return);
        Ok((StepSet { n: r, ups: inner }, StepSet { n: s, ups: outer }))
    }

    /// Inverse of [`StepSet::decompose`].
    pub fn recompose(first: &StepSet, second: &StepSet) -> Result<StepSet> {
        first.require_dyck()?;
        second.require_dyck()?;
        let n = first.n + second.n + 1;
        if n > MAX_HALF_LENGTH {
            return Err(Error::domain(format!("half-length {n} exceeds {MAX_HALF_LENGTH}")));
        }
        let shift = 2 * first.n + 2;
        let bits = 1 | (first.ups.bits() << 1) | (second.ups.bits() << shift);
        Ok(StepSet { n, ups: ElementSet::from_bits(bits) })
    }

    /// Mirror image `x ↦ 2n + 1 − x` applied to the down-steps.
    pub fn reversed(&self) -> StepSet {
        let m = 2 * self.n;
        let downs = self.ups.complement(m);
        StepSet { n: self.n, ups: downs.map(|x| m + 1 - x) }
    }
}

/// All Dyck paths of half-length `n` in lexicographic order of their up-step sets.
pub fn enumerate_dyck(n: usize, limits: &Limits) -> Result<Vec<StepSet>> {
    Limits::check("Dyck half-length n", n, limits.max_n.min(MAX_HALF_LENGTH))?;
    if n == 0 {
        return Ok(vec![StepSet { n: 0, ups: ElementSet::EMPTY }]);
    }
    // Split on a fixed-length prefix so the completions can run in parallel;
    // concatenating in prefix order keeps the output lexicographic.
    let prefix_len = (2 * n).min(10);
    let mut prefixes = Vec::new();
    extend(n, prefix_len, 0, 0, 0, 0, &mut prefixes);
    let paths = par::flat_map(&prefixes, |&(bits, height, ups)| {
        let mut out = Vec::new();
        extend(n, 2 * n, prefix_len, height, ups, bits, &mut out);
        out
    });
    Ok(paths.into_iter().map(|(bits, _, _)| StepSet { n, ups: ElementSet::from_bits(bits) }).collect())
}

/// Depth-first extension of a partial path, up-step first.
fn extend(n: usize, stop: usize, pos: usize, height: usize, ups: usize, bits: u64, out: &mut Vec<(u64, usize, usize)>) {
    if pos == stop {
        out.push((bits, height, ups));
        return;
    }
    if ups < n {
        extend(n, stop, pos + 1, height + 1, ups + 1, bits | 1 << pos, out);
    }
    if height > 0 {
        extend(n, stop, pos + 1, height - 1, ups, bits, out);
    }
}

static CATALAN: OnceLock<Mutex<Vec<BigUint>>> = OnceLock::new();

/// `C_n = binom(2n, n) / (n + 1)`, memoized.
pub fn catalan_number(n: usize) -> BigUint {
    let cache = CATALAN.get_or_init(|| Mutex::new(Vec::new()));
    let mut cache = cache.lock().unwrap_or_else(|e| e.into_inner());
    while cache.len() <= n {
        let k = cache.len();
        let value = binomial(BigUint::from(2 * k), BigUint::from(k)) / BigUint::from(k + 1);
        cache.push(value);
    }
    cache[n].clone()
}
