//! Polynomials in `q` with exact integer coefficients.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A polynomial `Σ c_e q^e`; zero coefficients are never stored.
///
/// Coefficient arithmetic panics on `i64` overflow rather than wrapping.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QPoly {
    coeffs: BTreeMap<u32, i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::monomial(1, 0)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        QPoly::monomial(1, 1)
    }

    /// `coef · q^exp`.
    pub fn monomial(coef: i64, exp: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if coef != 0 {
            coeffs.insert(exp, coef);
        }
        QPoly { coeffs }
    }

    /// Builds from `(exponent, coefficient)` pairs, merging repeated exponents.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, i64)>) -> Self {
        let mut p = QPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(exponent, coefficient)` pairs by increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, exp: u32) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// `Some((±1, e))` when the polynomial is `±q^e`.
    pub fn as_signed_power(&self) -> Option<(i64, u32)> {
        match self.coeffs.iter().next() {
            Some((&e, &c)) if self.coeffs.len() == 1 && (c == 1 || c == -1) => Some((c, e)),
            _ => None,
        }
    }

    pub fn add_term(&mut self, exp: u32, coef: i64) {
        if coef == 0 {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert(0);
        *slot = slot.checked_add(coef).expect("coefficient overflow");
        if *slot == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn scale(&self, c: i64) -> QPoly {
        QPoly::from_terms(self.terms().map(|(e, x)| (e, x.checked_mul(c).expect("coefficient overflow"))))
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: u32) -> QPoly {
        QPoly { coeffs: self.terms().map(|(e, c)| (e + shift, c)).collect() }
    }

    pub fn pow(&self, k: u32) -> QPoly {
        (0..k).fold(QPoly::one(), |acc, _| &acc * self)
    }

    /// Evaluates at a rational value of `q`.
    pub fn eval(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            let mut power = BigRational::one();
            for _ in 0..e {
                power *= q;
            }
            acc += power * BigRational::from_integer(BigInt::from(c));
        }
        acc
    }

    /// Parses `"0"` or space-separated terms `±c·q^e` (also accepts `*`).
    pub fn parse(text: &str) -> Result<QPoly> {
        let text = text.trim();
        if text == "0" {
            return Ok(QPoly::zero());
        }
        let mut p = QPoly::zero();
        for tok in text.split_whitespace() {
            let bad = || Error::Parse(format!("invalid polynomial term {tok:?}"));
            let (c, e) = tok.split_once(['·', '*']).ok_or_else(bad)?;
            let e = e.strip_prefix("q^").ok_or_else(bad)?;
            let c: i64 = c.trim_start_matches('+').parse().map_err(|_| bad())?;
            let e: u32 = e.parse().map_err(|_| bad())?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<_> = self.terms().collect();
        for (p, (e, c)) in parts.into_iter().enumerate() {
            if p > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c:+}·q^{e}")?;
        }
        Ok(())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.scale(-1)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    #[allow(clippy::suspicious_arithmetic_impl)] // exponents add
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1.checked_mul(c2).expect("coefficient overflow"));
            }
        }
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn arithmetic() {
        let a = QPoly::from_terms([(0, 1), (1, 1)]);
        let b = QPoly::from_terms([(0, 1), (1, -1)]);
        assert_eq!(&a * &b, QPoly::from_terms([(0, 1), (2, -1)]));
        assert!((&a - &a).is_zero());
        assert_eq!(a.pow(2), QPoly::from_terms([(0, 1), (1, 2), (2, 1)]));
        assert_eq!(QPoly::monomial(-1, 3).as_signed_power(), Some((-1, 3)));
        assert_eq!(a.as_signed_power(), None);
        assert_eq!(QPoly::q().shift(2), QPoly::monomial(1, 3));
    }

    #[test]
    fn eval_rational() {
        let p = QPoly::from_terms([(0, 2), (2, -1)]);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(p.eval(&half), BigRational::new(7.into(), 4.into()));
    }

    #[test]
    fn text_round_trip() {
        let p = QPoly::from_terms([(1, -1), (3, 2)]);
        assert_eq!(p.to_string(), "-1·q^1 +2·q^3");
        assert_eq!(QPoly::parse(&p.to_string()).unwrap(), p);
        assert_eq!(QPoly::parse("0").unwrap(), QPoly::zero());
        assert_eq!(QPoly::zero().to_string(), "0");
        assert!(QPoly::parse("q^2").is_err());
    }
}
