//! Generic integer matrices realizing shifted matroids, exact vector
//! matroids, and the uniform-minor obstruction to small-field representations.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::catalan::{catalan_matroid, ShiftVector};
use crate::error::{Error, Limits, Result};
use crate::matroid::{has_uniform_minor, BasisFamily};
use crate::par;
use crate::sets::{ElementSet, MAX_ELEMENT};

struct GenericCache {
    terms: Vec<BigUint>,
    /// `Π (1 + x_j)` over the first `prod_len` terms.
    prod: BigUint,
    prod_len: usize,
}

fn generic_cache() -> &'static Mutex<GenericCache> {
    static CACHE: OnceLock<Mutex<GenericCache>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(GenericCache { terms: Vec::new(), prod: BigUint::one(), prod_len: 0 }))
}

/// `x_1 = 1`, `x_i = 1 + Π_{j<i} (1 + x_j)` for `i ≥ 2`.
///
/// Each term exceeds the product of `1 + x_j` over its predecessors, so no
/// two distinct products of distinct terms can collide. Terms are memoized;
/// `x_i = 3^(2^(i-2))` for `i ≥ 2`, so they double in length every step.
pub fn generic_sequence(k: usize, limits: &Limits) -> Result<Vec<BigUint>> {
    Limits::check("generic sequence length", k, limits.max_generic_terms)?;
    let mut cache = generic_cache().lock().unwrap_or_else(|e| e.into_inner());
    while cache.terms.len() < k {
        let GenericCache { terms, prod, prod_len } = &mut *cache;
        while *prod_len < terms.len() {
            *prod *= &terms[*prod_len] + 1u32;
            *prod_len += 1;
        }
        let next = if terms.is_empty() { BigUint::one() } else { &*prod + 1u32 };
        terms.push(next);
    }
    Ok(cache.terms[..k].to_vec())
}

/// An integer matrix with exact entries.
#[derive(Clone, PartialEq, Eq)]
pub struct GenericMatrix {
    rows: Vec<Vec<BigInt>>,
    cols: usize,
}

impl GenericMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return Err(Error::domain("matrix must have at least one row and one column"));
        }
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::domain("matrix rows have different lengths"));
        }
        Ok(GenericMatrix { rows, cols })
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    /// Appends a zero column.
    pub fn with_zero_column(mut self) -> Self {
        for row in &mut self.rows {
            row.push(BigInt::zero());
        }
        self.cols += 1;
        self
    }

    /// The square submatrix on the given columns (1-based, ascending).
    pub fn columns(&self, cols: ElementSet) -> Vec<Vec<BigInt>> {
        self.rows.iter().map(|row| cols.iter().map(|c| row[c - 1].clone()).collect()).collect()
    }
}

impl fmt::Debug for GenericMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenericMatrix({}x{})", self.rows.len(), self.cols)
    }
}

impl Serialize for GenericMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(BigInt::to_string).collect()).collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GenericMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<Vec<String>>::deserialize(deserializer)?;
        let rows = raw
            .iter()
            .map(|r| r.iter().map(|s| s.parse::<BigInt>().map_err(D::Error::custom)).collect())
            .collect::<std::result::Result<Vec<Vec<BigInt>>, D::Error>>()?;
        GenericMatrix::new(rows).map_err(D::Error::custom)
    }
}

/// The `n × s_n` matrix whose entry `(i, j)` is generic for `j ≤ s_i` and
/// zero otherwise; generic values are taken in sequence order, row by row.
pub fn build_representation(s: &ShiftVector, limits: &Limits) -> Result<GenericMatrix> {
    let slots: usize = s.as_slice().iter().sum();
    Limits::check("generic entries Σ s_i", slots, limits.max_generic_terms)?;
    let mut values = generic_sequence(slots, limits)?.into_iter();
    let rows = s
        .as_slice()
        .iter()
        .map(|&s_i| {
            (1..=s.top())
                .map(|j| if j <= s_i { BigInt::from(values.next().expect("enough terms")) } else { BigInt::zero() })
                .collect()
        })
        .collect();
    GenericMatrix::new(rows)
}

/// `build_representation(1, 3, …, 2n−1)` with a zero column for the loop `2n`.
pub fn catalan_representation(n: usize, limits: &Limits) -> Result<GenericMatrix> {
    let s = ShiftVector::new((1..=n).map(|i| 2 * i - 1).collect())?;
    Ok(build_representation(&s, limits)?.with_zero_column())
}

/// Fraction-free Gaussian elimination; every division is exact.
pub fn det_bareiss(matrix: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = matrix.len();
    if matrix.iter().any(|r| r.len() != n) {
        return Err(Error::domain("determinant needs a square matrix"));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

/// Laplace expansion over row prefixes: the minor of the first `k + 1` rows
/// on a column set is assembled from the minors of the first `k` rows.
/// Zero entries and zero minors contribute nothing and are skipped.
pub fn det_laplace(matrix: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = matrix.len();
    if matrix.iter().any(|r| r.len() != n) {
        return Err(Error::domain("determinant needs a square matrix"));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut minors: HashMap<u32, BigInt> = HashMap::from([(0u32, BigInt::one())]);
    for (k, row) in matrix.iter().enumerate() {
        let mut next: HashMap<u32, BigInt> = HashMap::new();
        for (&cols, minor) in &minors {
            for (c, entry) in row.iter().enumerate() {
                if cols & (1 << c) != 0 || entry.is_zero() {
                    continue;
                }
                let greater = (cols >> c).count_ones();
                let term = entry * minor;
                let slot = next.entry(cols | (1 << c)).or_insert_with(BigInt::zero);
                if greater % 2 == 0 {
                    *slot += term;
                } else {
                    *slot -= term;
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        if next.is_empty() {
            return Ok(BigInt::zero());
        }
        minors = next;
        debug_assert!(minors.keys().all(|m| m.count_ones() as usize == k + 1));
    }
    Ok(minors.remove(&((1u32 << n) - 1)).unwrap_or_default())
}

const MODULI: [u64; 4] = [(1 << 61) - 1, (1 << 62) - 57, (1 << 63) - 25, u64::MAX - 58];

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn det_mod(mut a: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = a.len();
    let mut det = 1u64;
    for k in 0..n {
        let Some(r) = (k..n).find(|&r| a[r][k] != 0) else { return 0 };
        if r != k {
            a.swap(k, r);
            det = p - det;
        }
        det = mul_mod(det, a[k][k], p);
        let inv = pow_mod(a[k][k], p - 2, p);
        for i in k + 1..n {
            let factor = mul_mod(a[i][k], inv, p);
            if factor == 0 {
                continue;
            }
            let (top, bottom) = a.split_at_mut(i);
            for (x, &pivot_row) in bottom[0][k..].iter_mut().zip(&top[k][k..]) {
                let sub = mul_mod(factor, pivot_row, p);
                *x = ((*x as u128 + p as u128 - sub as u128) % p as u128) as u64;
            }
        }
    }
    det % p
}

fn residue(x: &BigInt, p: u64) -> u64 {
    let r = x % BigInt::from(p);
    let r = if r < BigInt::zero() { r + p } else { r };
    r.to_u64().expect("residue below modulus")
}

/// Column `n`-subsets with non-zero determinant.
///
/// A non-zero determinant modulo any of a few large primes certifies a basis
/// outright; a subset that vanishes modulo all of them is settled by the exact
/// integer determinant.
pub fn vector_matroid(matrix: &GenericMatrix, limits: &Limits) -> Result<BasisFamily> {
    let (n, m) = (matrix.num_rows(), matrix.num_cols());
    Limits::check("matrix rows", n, limits.max_matrix_rows)?;
    Limits::check("matrix columns", m, limits.max_matrix_cols.min(MAX_ELEMENT))?;
    let cells: Vec<&BigInt> = matrix.rows.iter().flatten().collect();
    let residues: Vec<[u64; MODULI.len()]> = par::map(&cells, |x| MODULI.map(|p| residue(x, p)));
    let subsets: Vec<ElementSet> = ElementSet::k_subsets(m, n).collect();
    let bases: Vec<ElementSet> = par::flat_map(&subsets, |&b| {
        let certified = MODULI.iter().enumerate().any(|(idx, &p)| {
            let sub = (0..n).map(|i| b.iter().map(|c| residues[i * m + c - 1][idx]).collect()).collect();
            det_mod(sub, p) != 0
        });
        let nonzero = certified || !det_laplace(&matrix.columns(b)).expect("square").is_zero();
        nonzero.then_some(b).into_iter().collect::<Vec<_>>()
    });
    if bases.is_empty() {
        return Err(Error::domain("matrix rows are linearly dependent; no column basis of full size"));
    }
    BasisFamily::new(m, bases)
}

fn check_rook_input(s: &ShiftVector, b: ElementSet) -> Result<()> {
    if b.len() != s.len() || !b.is_subset(ElementSet::full(s.top())) {
        return Err(Error::domain(format!("{b} must be a {}-subset of 1..={}", s.len(), s.top())));
    }
    Ok(())
}

/// `b_i ≤ s_i` for the sorted elements of `b`.
pub fn rook_basis_test(s: &ShiftVector, b: ElementSet) -> Result<bool> {
    check_rook_input(s, b)?;
    Ok(s.dominates(b))
}

/// Whether `n` non-attacking rooks fit on the support of the columns `b`:
/// row `i` may use column `c` when `c ≤ s_i`. Augmenting-path matching.
pub fn rook_matching_test(s: &ShiftVector, b: ElementSet) -> Result<bool> {
    check_rook_input(s, b)?;
    let cols = b.to_vec();
    let mut owner: Vec<Option<usize>> = vec![None; cols.len()];
    fn augment(row: usize, s: &[usize], cols: &[usize], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for (idx, &c) in cols.iter().enumerate() {
            if c > s[row] || seen[idx] {
                continue;
            }
            seen[idx] = true;
            if owner[idx].is_none_or(|other| augment(other, s, cols, seen, owner)) {
                owner[idx] = Some(row);
                return true;
            }
        }
        false
    }
    Ok((0..s.len()).all(|row| augment(row, s.as_slice(), &cols, &mut vec![false; cols.len()], &mut owner)))
}

pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..).take_while(|d| d * d <= q).find(|d| q.is_multiple_of(*d)).unwrap_or(q);
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
    }
    rest == 1
}

/// Outcome of the uniform-minor probe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum RepresentabilityProbe {
    /// `C_n / contract \ delete ≅ U(2, n)`, which has no representation over
    /// a field with fewer than `n − 1` elements.
    Witness {
        contract: ElementSet,
        delete: ElementSet,
        minor: String,
    },
    Refusal {
        refusal: String,
    },
}

/// Looks for a `U(2, n)` minor of `C_n` when `q ≤ n − 2`.
pub fn non_representability_witness(n: usize, q: u64, limits: &Limits) -> Result<RepresentabilityProbe> {
    if !(3..=6).contains(&n) {
        return Err(Error::domain(format!("n = {n} outside the supported range 3..=6")));
    }
    if !is_prime_power(q) {
        return Err(Error::domain(format!("q = {q} is not a prime power")));
    }
    if q > n as u64 - 2 {
        return Ok(RepresentabilityProbe::Refusal {
            refusal: format!("q = {q} > n - 2 = {}; a U(2,{n}) minor does not rule out GF({q})", n - 2),
        });
    }
    let cn = catalan_matroid(n, limits)?;
    match has_uniform_minor(&cn, 2, n, limits)? {
        Some(w) => {
            Ok(RepresentabilityProbe::Witness { contract: w.contract, delete: w.delete, minor: format!("U(2,{n})") })
        }
        None => Err(Error::domain(format!("no U(2,{n}) minor found in C_{n}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalan::shifted_matroid;

    fn sv(s: &[usize]) -> ShiftVector {
        ShiftVector::new(s.to_vec()).unwrap()
    }

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    fn int_rows(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn is_prime(p: u64) -> bool {
        // Deterministic Miller-Rabin for 64-bit inputs.
        if p.is_multiple_of(2) {
            return p == 2;
        }
        let twos = (p - 1).trailing_zeros();
        let d = (p - 1) >> twos;
        [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37].iter().all(|&a| {
            let mut x = pow_mod(a % p, d, p);
            if x == 1 || x == p - 1 {
                return true;
            }
            (1..twos).any(|_| {
                x = mul_mod(x, x, p);
                x == p - 1
            })
        })
    }

    #[test]
    fn moduli_are_prime() {
        assert!(MODULI.iter().all(|&p| is_prime(p)));
        assert!(!is_prime(u64::MAX - 1));
    }

    #[test]
    fn generic_sequence_examples() {
        let l = Limits::default();
        let want: Vec<BigUint> = [1u32, 3, 9, 81, 6561].iter().map(|&x| BigUint::from(x)).collect();
        assert_eq!(generic_sequence(5, &l).unwrap(), want);
        assert_eq!(generic_sequence(1, &l).unwrap(), vec![BigUint::one()]);
        let xs = generic_sequence(10, &l).unwrap();
        let mut prod = BigUint::from(2u32);
        for x in &xs[1..] {
            assert!(*x > prod);
            prod *= x + 1u32;
        }
        assert_eq!(xs[9], BigUint::from(3u32).pow(256));
        assert!(generic_sequence(29, &l).unwrap_err().is_resource());
    }

    #[test]
    fn build_examples() {
        let l = Limits::default();
        let m = build_representation(&sv(&[1, 3]), &l).unwrap();
        assert_eq!(m.rows(), int_rows(&[&[1, 0, 0], &[3, 9, 81]]).as_slice());
        assert_eq!(build_representation(&sv(&[1]), &l).unwrap().rows(), int_rows(&[&[1]]).as_slice());
        let c3 = build_representation(&sv(&[1, 3, 5]), &l).unwrap();
        assert_eq!((c3.num_rows(), c3.num_cols()), (3, 5));
        let nonzero: Vec<usize> = c3.rows().iter().map(|r| r.iter().filter(|x| !x.is_zero()).count()).collect();
        assert_eq!(nonzero, vec![1, 3, 5]);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, r#"[["1","0","0"],["3","9","81"]]"#);
        assert_eq!(serde_json::from_str::<GenericMatrix>(&json).unwrap(), m);
    }

    #[test]
    fn determinants_agree() {
        let a = int_rows(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        assert_eq!(det_bareiss(&a).unwrap(), BigInt::from(-54));
        assert_eq!(det_laplace(&a).unwrap(), BigInt::from(-54));
        let swap = int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_bareiss(&swap).unwrap(), BigInt::from(-1));
        assert_eq!(det_laplace(&swap).unwrap(), BigInt::from(-1));
        let singular = int_rows(&[&[1, 2], &[2, 4]]);
        assert!(det_bareiss(&singular).unwrap().is_zero());
        assert!(det_laplace(&singular).unwrap().is_zero());
        let mod_rows: Vec<Vec<u64>> = vec![vec![2, (1 << 61) - 2, 0], vec![1, 3, 4], vec![0, 5, (1 << 61) - 3]];
        assert_eq!(det_mod(mod_rows, (1 << 61) - 1), (1 << 61) - 1 - 54);
    }

    #[test]
    fn vector_matroid_examples() {
        let l = Limits::default();
        let m = build_representation(&sv(&[1, 3]), &l).unwrap();
        assert_eq!(vector_matroid(&m, &l).unwrap(), BasisFamily::new(3, [set(&[1, 2]), set(&[1, 3])]).unwrap());
        let s = sv(&[1, 3, 5]);
        let m = build_representation(&s, &l).unwrap();
        assert_eq!(vector_matroid(&m, &l).unwrap(), shifted_matroid(&s, &l).unwrap());
        let cat = catalan_representation(3, &l).unwrap();
        assert_eq!(vector_matroid(&cat, &l).unwrap(), catalan_matroid(3, &l).unwrap());
        let zero_col = GenericMatrix::new(int_rows(&[&[1, 0, 2], &[3, 0, 5]])).unwrap();
        assert_eq!(vector_matroid(&zero_col, &l).unwrap().loops(), set(&[2]));
        let dependent = GenericMatrix::new(int_rows(&[&[1, 2], &[2, 4]])).unwrap();
        assert!(vector_matroid(&dependent, &l).is_err());
    }

    #[test]
    fn exact_fallback_on_vanishing_residues() {
        // Determinant is a multiple of every modulus, so only the exact route can see it.
        let product: BigInt = MODULI.iter().map(|&p| BigInt::from(p)).product();
        let rows = vec![vec![product.clone(), BigInt::zero()], vec![BigInt::zero(), BigInt::one()]];
        let m = GenericMatrix::new(rows).unwrap();
        assert_eq!(vector_matroid(&m, &Limits::default()).unwrap().bases(), &[set(&[1, 2])]);
    }

    #[test]
    fn rook_examples() {
        let s = sv(&[1, 3, 5]);
        assert!(rook_basis_test(&s, set(&[1, 3, 4])).unwrap());
        assert!(!rook_basis_test(&s, set(&[2, 3, 4])).unwrap());
        assert!(rook_basis_test(&s, set(&[1, 3, 5])).unwrap());
        assert!(rook_matching_test(&s, set(&[1, 3, 4])).unwrap());
        assert!(!rook_matching_test(&s, set(&[2, 3, 4])).unwrap());
        assert!(rook_basis_test(&s, set(&[1, 2])).is_err());
        assert!(rook_basis_test(&s, set(&[1, 2, 6])).is_err());
    }

    #[test]
    fn prime_powers() {
        let pp: Vec<u64> = (0..30).filter(|&q| is_prime_power(q)).collect();
        assert_eq!(pp, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]);
    }

    #[test]
    fn probe_examples() {
        let l = Limits::default();
        for (n, q) in [(4, 2), (5, 3)] {
            match non_representability_witness(n, q, &l).unwrap() {
                RepresentabilityProbe::Witness { contract, delete, minor } => {
                    assert_eq!(minor, format!("U(2,{n})"));
                    let cn = catalan_matroid(n, &l).unwrap();
                    let found = cn.minor(contract, delete).unwrap();
                    assert_eq!(found, crate::matroid::uniform(2, n).unwrap());
                }
                other => panic!("expected a witness, got {other:?}"),
            }
        }
        assert!(matches!(non_representability_witness(4, 3, &l).unwrap(), RepresentabilityProbe::Refusal { .. }));
        assert!(non_representability_witness(4, 6, &l).is_err());
        assert!(non_representability_witness(7, 2, &l).is_err());
        let json = serde_json::to_value(non_representability_witness(4, 2, &l).unwrap()).unwrap();
        assert_eq!(json["minor"], "U(2,4)");
        assert!(json["contract"].is_array() && json["delete"].is_array());
    }
}
