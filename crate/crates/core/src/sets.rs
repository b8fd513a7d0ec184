//! Bitset-encoded subsets of a ground set `{1, …, m}` with `m ≤ 64`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported element label.
pub const MAX_ELEMENT: usize = 64;

/// A subset of `{1, …, 64}`. Element `e` lives in bit `e - 1`.
///
/// The `Ord` impl is lexicographic on the ascending element list, so
/// `{1,2} < {1,2,3} < {1,3}`. This is the order every enumerator in the
/// crate emits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, …, m}`.
    #[inline]
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= MAX_ELEMENT);
        if m == 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << m) - 1)
        }
    }

    /// `{lo, …, hi}`; empty when `lo > hi`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        if lo > hi || hi == 0 {
            return ElementSet::EMPTY;
        }
        let lo = lo.max(1);
        ElementSet(ElementSet::full(hi).0 & !ElementSet::full(lo - 1).0)
    }

    #[inline]
    pub fn singleton(e: usize) -> Self {
        debug_assert!((1..=MAX_ELEMENT).contains(&e));
        ElementSet(1u64 << (e - 1))
    }

    /// Builds a set from labels, rejecting anything outside `{1, …, m}`.
    pub fn from_elements<I: IntoIterator<Item = usize>>(m: usize, elements: I) -> Result<Self> {
        let mut s = ElementSet::EMPTY;
        for e in elements {
            if e == 0 || e > m || e > MAX_ELEMENT {
                return Err(Error::domain(format!("element {e} is outside the ground set 1..={m}")));
            }
            s.insert(e);
        }
        Ok(s)
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_ELEMENT).contains(&e) && self.0 >> (e - 1) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u64 << (e - 1);
    }

    #[inline]
    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u64 << (e - 1));
    }

    #[inline]
    #[must_use]
    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | 1u64 << (e - 1))
    }

    #[inline]
    #[must_use]
    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1u64 << (e - 1)))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement inside `{1, …, m}`.
    #[inline]
    pub fn complement(self, m: usize) -> Self {
        ElementSet(!self.0 & ElementSet::full(m).0)
    }

    /// `|self ∩ {1, …, x}|`.
    #[inline]
    pub fn count_up_to(self, x: usize) -> usize {
        (self.0 & ElementSet::full(x.min(MAX_ELEMENT)).0).count_ones() as usize
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Ascending element iterator.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Largest element, if any, of the set of elements strictly below `x`.
    pub fn max_below(self, x: usize) -> Option<usize> {
        ElementSet(self.0 & ElementSet::full(x.saturating_sub(1)).0).max()
    }

    /// Maps every element through `f`, which must land in `{1, …, 64}`.
    pub fn map(self, mut f: impl FnMut(usize) -> usize) -> Self {
        self.iter().fold(ElementSet::EMPTY, |acc, e| acc.with(f(e)))
    }

    /// All subsets of `{1, …, m}` in increasing bit order.
    pub fn all_subsets(m: usize) -> impl Iterator<Item = ElementSet> {
        debug_assert!(m < 64);
        (0..1u64 << m).map(ElementSet)
    }

    /// All `k`-subsets of `{1, …, m}`, in increasing bit order (Gosper's hack).
    pub fn k_subsets(m: usize, k: usize) -> KSubsets {
        KSubsets::new(m, k)
    }

    /// All subsets of `self`, in increasing bit order.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, next: Some(0) }
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let elements = Vec::<usize>::deserialize(deserializer)?;
        ElementSet::from_elements(MAX_ELEMENT, elements).map_err(serde::de::Error::custom)
    }
}

impl FromIterator<usize> for ElementSet {
    /// Panics on labels outside `1..=64`; use [`ElementSet::from_elements`] for input.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(ElementSet::EMPTY, |acc, e| {
            assert!((1..=MAX_ELEMENT).contains(&e), "element {e} out of range");
            acc.with(e)
        })
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

pub struct KSubsets {
    current: Option<u64>,
    limit: u64,
}

impl KSubsets {
    fn new(m: usize, k: usize) -> Self {
        debug_assert!(m < 64);
        let current = if k > m { None } else { Some((1u64 << k) - 1) };
        KSubsets { current, limit: 1u64 << m }
    }
}

impl Iterator for KSubsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let c = self.current?;
        if c >= self.limit && c != 0 {
            self.current = None;
            return None;
        }
        self.current = if c == 0 {
            None
        } else {
            let lowest = c & c.wrapping_neg();
            let ripple = c + lowest;
            let next = (((ripple ^ c) >> 2) / lowest) | ripple;
            (next < self.limit && ripple != 0).then_some(next)
        };
        Some(ElementSet(c))
    }
}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        self.next = if cur == self.mask { None } else { Some((cur.wrapping_sub(self.mask)) & self.mask) };
        Some(ElementSet(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn lexicographic_order() {
        let mut v = vec![set(&[1, 3]), set(&[1, 2, 3]), set(&[1, 2]), set(&[]), set(&[2])];
        v.sort();
        assert_eq!(v, vec![set(&[]), set(&[1, 2]), set(&[1, 2, 3]), set(&[1, 3]), set(&[2])]);
    }

    #[test]
    fn k_subsets_counts() {
        assert_eq!(ElementSet::k_subsets(6, 3).count(), 20);
        assert_eq!(ElementSet::k_subsets(4, 0).collect::<Vec<_>>(), vec![ElementSet::EMPTY]);
        assert_eq!(ElementSet::k_subsets(3, 4).count(), 0);
        assert_eq!(ElementSet::k_subsets(5, 5).count(), 1);
        assert!(ElementSet::k_subsets(7, 3).all(|s| s.len() == 3 && s.is_subset(ElementSet::full(7))));
    }

    #[test]
    fn subsets_of_mask() {
        let s = set(&[2, 5, 7]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
        assert_eq!(ElementSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn basic_queries() {
        let s = set(&[2, 4, 6]);
        assert_eq!(s.count_up_to(4), 2);
        assert_eq!(s.min(), Some(2));
        assert_eq!(s.max(), Some(6));
        assert_eq!(s.max_below(6), Some(4));
        assert_eq!(s.complement(6), set(&[1, 3, 5]));
        assert_eq!(ElementSet::interval(3, 5), set(&[3, 4, 5]));
        assert_eq!(ElementSet::interval(5, 3), ElementSet::EMPTY);
        assert_eq!(s.to_string(), "{2,4,6}");
        assert_eq!(serde_json::to_string(&s).unwrap(), "[2,4,6]");
        assert!(ElementSet::from_elements(4, [1, 5]).is_err());
        assert!(ElementSet::from_elements(4, [0]).is_err());
    }
}
