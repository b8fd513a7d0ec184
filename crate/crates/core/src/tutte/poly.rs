use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Integer polynomial in two commuting variables `q` and `t`.
///
/// Terms are keyed by `(deg_q, deg_t)`; zero coefficients are never stored,
/// so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(deg_q: u32, deg_t: u32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(deg_q, deg_t, c.into());
        p
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn t() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn add_term(&mut self, deg_q: u32, deg_t: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((deg_q, deg_t)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(deg_q, deg_t));
        }
    }

    pub fn coefficient(&self, deg_q: u32, deg_t: u32) -> BigInt {
        self.terms.get(&(deg_q, deg_t)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in display order: `deg_q` descending, then `deg_t` ascending.
    pub fn terms(&self) -> Vec<(u32, u32, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(&(i, j), c)| (i, j, c)).collect();
        v.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        v
    }

    /// `p(t, q)`.
    pub fn swap_variables(&self) -> Self {
        let terms = self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect();
        BivariatePolynomial { terms }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&(i, j), c)| self.terms.get(&(j, i)) == Some(c))
    }

    /// `p(1, t)`.
    pub fn at_q_one(&self) -> Self {
        let mut out = Self::zero();
        for (&(_, j), c) in &self.terms {
            out.add_term(0, j, c.clone());
        }
        out
    }

    /// `p(q, 1)`.
    pub fn at_t_one(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, _), c) in &self.terms {
            out.add_term(i, 0, c.clone());
        }
        out
    }

    pub fn evaluate(&self, q: &BigInt, t: &BigInt) -> BigInt {
        self.terms.iter().map(|(&(i, j), c)| c * q.pow(i) * t.pow(j)).sum()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Builds `Σ count · q^i t^j` from a histogram of exponent pairs.
    pub fn from_histogram<I: IntoIterator<Item = ((u32, u32), u64)>>(hist: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), count) in hist {
            p.add_term(i, j, BigInt::from(count));
        }
        p
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self + &(-rhs)
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(self) -> BivariatePolynomial {
        let terms = self.terms.iter().map(|(&k, c)| (k, -c)).collect();
        BivariatePolynomial { terms }
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BivariatePolynomial {
            type Output = BivariatePolynomial;
            fn $m(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (i, j, c)) in self.terms().into_iter().enumerate() {
            let magnitude = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            if !magnitude.is_one() || (i == 0 && j == 0) {
                factors.push(magnitude.to_string());
            }
            for (var, deg) in [("q", i), ("t", j)] {
                match deg {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    d => factors.push(format!("{var}^{d}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct Term {
    q: u32,
    t: u32,
    c: serde_json::Value,
}

impl Serialize for BivariatePolynomial {
    /// `[{"q": i, "t": j, "c": coeff}, …]` in display order; coefficients that
    /// do not fit in an `i64` are written as decimal strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms().into_iter().map(|(i, j, c)| Term {
            q: i,
            t: j,
            c: match c.to_i64() {
                Some(v) => serde_json::Value::from(v),
                None => serde_json::Value::from(c.to_string()),
            },
        }))
    }
}

impl<'de> Deserialize<'de> for BivariatePolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(deserializer)?;
        let mut p = BivariatePolynomial::zero();
        for term in terms {
            let c: BigInt = match &term.c {
                serde_json::Value::Number(n) => {
                    n.as_i64().map(BigInt::from).ok_or_else(|| D::Error::custom("coefficient must be an integer"))?
                }
                serde_json::Value::String(s) => s.parse().map_err(D::Error::custom)?,
                _ => return Err(D::Error::custom("coefficient must be an integer or decimal string")),
            };
            p.add_term(term.q, term.t, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(i: u32, j: u32, c: i64) -> BivariatePolynomial {
        BivariatePolynomial::monomial(i, j, c)
    }

    #[test]
    fn display_order_and_signs() {
        let p = m(1, 3, 1) + m(3, 1, 1) + m(2, 2, 1) + m(1, 2, 1) + m(2, 1, 1);
        assert_eq!(p.to_string(), "q^3*t + q^2*t + q^2*t^2 + q*t^2 + q*t^3");
        assert_eq!((m(0, 0, 1) - m(1, 0, 2)).to_string(), "-2*q + 1");
        assert_eq!(m(0, 0, -1).to_string(), "-1");
        assert_eq!(BivariatePolynomial::zero().to_string(), "0");
    }

    #[test]
    fn arithmetic() {
        let q = BivariatePolynomial::q();
        let t = BivariatePolynomial::t();
        let sq = &(&q + &t) * &(&q + &t);
        assert_eq!(sq, m(2, 0, 1) + m(1, 1, 2) + m(0, 2, 1));
        assert!((&sq - &sq).is_zero());
        assert!(sq.is_symmetric());
        assert!(!m(2, 1, 1).is_symmetric());
        assert!(BivariatePolynomial::one().is_symmetric());
        assert_eq!(m(2, 1, 3).swap_variables(), m(1, 2, 3));
        assert_eq!((m(2, 1, 3) + m(0, 4, 1)).at_q_one(), m(0, 1, 3) + m(0, 4, 1));
        assert_eq!((m(2, 1, 3) + m(2, 4, 1)).at_t_one(), m(2, 0, 4));
        assert_eq!(sq.evaluate(&BigInt::from(2), &BigInt::from(3)), BigInt::from(25));
        assert_eq!((&q - &BivariatePolynomial::one()).pow(3).coefficient(1, 0), BigInt::from(3));
    }

    #[test]
    fn json_shape() {
        let p = m(2, 1, 1) + m(1, 2, 1);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"[{"q":2,"t":1,"c":1},{"q":1,"t":2,"c":1}]"#);
        assert_eq!(serde_json::from_str::<BivariatePolynomial>(&json).unwrap(), p);
        let big = BivariatePolynomial::monomial(0, 0, BigInt::from(10).pow(30));
        let json = serde_json::to_string(&big).unwrap();
        assert_eq!(json, r#"[{"q":0,"t":0,"c":"1000000000000000000000000000000"}]"#);
        assert_eq!(serde_json::from_str::<BivariatePolynomial>(&json).unwrap(), big);
    }
}
