//! Laurent polynomials in the variable `v` with Gaussian-rational coefficients.
//!
//! Throughout the crate `v^2` plays the role of the quantum parameter `q`,
//! so expressions in `q` and `q^(1/2)` embed as Laurent polynomials with even
//! and odd exponents respectively.

use super::gauss::GaussianRational;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse Laurent polynomial `sum_e c_e v^e`. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, GaussianRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, GaussianRational::one())
    }

    pub fn monomial(exp: i64, coeff: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// `v^exp`.
    pub fn v_pow(exp: i64) -> Self {
        Self::monomial(exp, GaussianRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, GaussianRational::from_int(n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn coeff(&self, exp: i64) -> GaussianRational {
        self.terms.get(&exp).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Lowest stored exponent; `None` for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest stored exponent; `None` for the zero polynomial.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest exponent; zero polynomial yields zero.
    pub fn leading_coeff(&self) -> GaussianRational {
        self.max_exp().map(|e| self.coeff(e)).unwrap_or_else(GaussianRational::zero)
    }

    fn insert(&mut self, exp: i64, coeff: GaussianRational) {
        if !coeff.is_zero() {
            self.terms.insert(exp, coeff);
        }
    }

    fn add_term(&mut self, exp: i64, coeff: &GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                let s = &*c + coeff;
                if s.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *c = s;
                }
            }
            None => {
                self.terms.insert(exp, coeff.clone());
            }
        }
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(e + k, c.clone());
        }
        Self { terms }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut terms = BTreeMap::new();
        for (e, a) in &self.terms {
            terms.insert(*e, a * c);
        }
        Self { terms }
    }

    /// Make the leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading_coeff().inv())
    }

    /// True when all exponents are nonnegative (an ordinary polynomial).
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().map(|e| e >= 0).unwrap_or(true)
    }

    /// Polynomial long division: `self = q * div + r` with `deg r < deg div`.
    ///
    /// Both operands must be ordinary polynomials (no negative exponents) and
    /// `div` must be nonzero.
    pub fn divrem(&self, div: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        assert!(self.is_polynomial() && div.is_polynomial(), "divrem needs polynomials");
        let ddeg = div.max_exp().unwrap();
        let dlead = div.leading_coeff();
        let dlead_inv = dlead.inv();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some(rdeg) = rem.max_exp() {
            if rdeg < ddeg {
                break;
            }
            let factor = &rem.leading_coeff() * &dlead_inv;
            let shift = rdeg - ddeg;
            quot.insert(shift, factor.clone());
            for (e, c) in &div.terms {
                let sub = &factor * c;
                rem.add_term(e + shift, &(-&sub));
            }
        }
        (quot, rem)
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn divexact(&self, div: &LaurentPoly) -> LaurentPoly {
        // Negative exponents are handled by shifting both operands up front.
        let ks = self.min_exp().unwrap_or(0).min(0);
        let kd = div.min_exp().unwrap_or(0).min(0);
        let (q, r) = self.shift(-ks).divrem(&div.shift(-kd));
        assert!(r.is_zero(), "inexact polynomial division");
        q.shift(kd - ks)
    }

    /// Monic gcd of the polynomial parts, ignoring powers of `v`.
    ///
    /// The result never contains the factor `v`, so fractions canonicalized
    /// against it keep their monomial content in the numerator.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut a = match self.min_exp() {
            Some(e) => self.shift(-e),
            None => LaurentPoly::zero(),
        };
        let mut b = match other.min_exp() {
            Some(e) => other.shift(-e),
            None => LaurentPoly::zero(),
        };
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &(-c));
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(*e, -c);
        }
        LaurentPoly { terms }
    }
}

impl Add<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        &self + rhs
    }
}

impl Sub<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        &self - rhs
    }
}

impl Mul<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        &self * rhs
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*v", c)?,
                _ => write!(f, "{}*v^{}", c, e)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v() -> LaurentPoly {
        LaurentPoly::v_pow(1)
    }

    #[test]
    fn multiplication_collects_terms() {
        // (v - 1)(v + 1) = v^2 - 1
        let a = &v() - &LaurentPoly::one();
        let b = &v() + &LaurentPoly::one();
        let p = &a * &b;
        assert_eq!(p, &LaurentPoly::v_pow(2) - &LaurentPoly::one());
    }

    #[test]
    fn divrem_exact_and_remainder() {
        let a = &LaurentPoly::v_pow(2) - &LaurentPoly::one();
        let b = &v() - &LaurentPoly::one();
        let (q, r) = a.divrem(&b);
        assert!(r.is_zero());
        assert_eq!(q, &v() + &LaurentPoly::one());

        let (_, r2) = v().divrem(&b);
        assert_eq!(r2, LaurentPoly::one());
    }

    #[test]
    fn gcd_of_shifted_factors() {
        // gcd(v^3(v^2-1), v^-2(v-1)) = v - 1 up to normalization
        let a = (&LaurentPoly::v_pow(2) - &LaurentPoly::one()).shift(3);
        let b = (&v() - &LaurentPoly::one()).shift(-2);
        let g = a.gcd(&b);
        assert_eq!(g, &v() - &LaurentPoly::one());
    }

    #[test]
    fn gcd_with_zero() {
        let a = (&v() + &LaurentPoly::from_int(2)).scale(&GaussianRational::from_int(3));
        assert_eq!(LaurentPoly::zero().gcd(&a), a.monic());
    }
}
