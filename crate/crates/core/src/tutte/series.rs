use std::fmt;

use super::poly::BivariatePolynomial;
use crate::error::{Error, Result};

/// Power series in `x` with coefficients in `Z[q, t]`, truncated after `x^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct PolynomialSeries {
    coeffs: Vec<BivariatePolynomial>,
}

impl PolynomialSeries {
    pub fn zero(order: usize) -> Self {
        PolynomialSeries { coeffs: vec![BivariatePolynomial::zero(); order + 1] }
    }

    /// Truncates or zero-pads `coeffs` to exactly `order + 1` entries.
    pub fn from_coefficients(mut coeffs: Vec<BivariatePolynomial>, order: usize) -> Self {
        coeffs.resize(order + 1, BivariatePolynomial::zero());
        PolynomialSeries { coeffs }
    }

    pub fn constant(c: BivariatePolynomial, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, k: usize) -> &BivariatePolynomial {
        &self.coeffs[k]
    }

    pub fn coefficients(&self) -> &[BivariatePolynomial] {
        &self.coeffs
    }

    /// Multiplication by `x`.
    pub fn shift(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(BivariatePolynomial::zero());
        coeffs.extend(self.coeffs[..self.order()].iter().cloned());
        PolynomialSeries { coeffs }
    }

    pub fn scale(&self, c: &BivariatePolynomial) -> Self {
        PolynomialSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_order(other);
        PolynomialSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_order(other);
        PolynomialSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_order(other);
        let n = self.order();
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(BivariatePolynomial::zero(), |acc, i| {
                    if self.coeffs[i].is_zero() || other.coeffs[k - i].is_zero() {
                        acc
                    } else {
                        &acc + &(&self.coeffs[i] * &other.coeffs[k - i])
                    }
                })
            })
            .collect();
        PolynomialSeries { coeffs }
    }

    /// `self / den` for a denominator with constant term `1`, by the
    /// recursion `y_k = a_k − Σ_{j ≥ 1} d_j y_{k−j}`.
    pub fn div(&self, den: &Self) -> Result<Self> {
        self.check_order(den);
        if den.coeffs[0] != BivariatePolynomial::one() {
            return Err(Error::domain("series division needs a denominator with constant term 1"));
        }
        let mut out: Vec<BivariatePolynomial> = Vec::with_capacity(self.coeffs.len());
        for k in 0..self.coeffs.len() {
            let mut y = self.coeffs[k].clone();
            for j in 1..=k {
                if !den.coeffs[j].is_zero() {
                    y = &y - &(&den.coeffs[j] * &out[k - j]);
                }
            }
            out.push(y);
        }
        Ok(PolynomialSeries { coeffs: out })
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "series truncation orders differ");
    }
}

impl fmt::Debug for PolynomialSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for c in &self.coeffs {
            list.entry(&format_args!("{c}"));
        }
        list.finish()
    }
}
