//! The coefficient field: fractions of Laurent polynomials in `v` over Q(i).
//!
//! Every scalar is kept in a canonical form so that equality of field
//! elements is plain structural equality. The canonical form has
//! `gcd(num, den) = 1`, a denominator with lowest exponent 0 and leading
//! coefficient 1, and the zero scalar stored as `0/1`.

use super::gauss::GaussianRational;
use super::laurent::LaurentPoly;
use super::RingError;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Scalar {
    /// Build `num/den` and canonicalize. Errors when `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self { num: LaurentPoly::zero(), den: LaurentPoly::one() };
        }
        if den.is_one() {
            return Self { num, den };
        }
        let kn = num.min_exp().unwrap();
        let kd = den.min_exp().unwrap();
        let num_poly = num.shift(-kn);
        let den_poly = den.shift(-kd);
        let g = num_poly.gcd(&den_poly);
        let (num_red, den_red) = if g.is_one() {
            (num_poly, den_poly)
        } else {
            (num_poly.divexact(&g), den_poly.divexact(&g))
        };
        let lead = den_red.leading_coeff();
        let (num_fin, den_fin) = if lead.is_one() {
            (num_red, den_red)
        } else {
            let inv = lead.inv();
            (num_red.scale(&inv), den_red.scale(&inv))
        };
        Self { num: num_fin.shift(kn - kd), den: den_fin }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(n))
    }

    pub fn from_gauss(c: GaussianRational) -> Self {
        Self::from_poly(LaurentPoly::monomial(0, c))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_gauss(GaussianRational::i())
    }

    /// `v^k`, i.e. `q^(k/2)`.
    pub fn v_pow(k: i64) -> Self {
        Self::from_poly(LaurentPoly::v_pow(k))
    }

    /// The quantum parameter `q = v^2`.
    pub fn q() -> Self {
        Self::v_pow(2)
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::v_pow(2 * k)
    }

    /// `kappa = (q+1)/(q-1)`.
    pub fn kappa() -> Self {
        let qp1 = &Self::q() + &Self::one();
        let qm1 = &Self::q() - &Self::one();
        &qp1 / &qm1
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, RingError> {
        if rhs.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: i64) -> Self {
        if k == 0 {
            return Self::one();
        }
        let base = if k < 0 {
            self.inv().expect("zero scalar raised to negative power")
        } else {
            self.clone()
        };
        let mut out = Self::one();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        out
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Scalar::canonical(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Scalar::canonical(num, &self.den * &rhs.den)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        // Cross-cancel before multiplying to keep intermediate degrees low.
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar { num: &self.num * &rhs.num, den: LaurentPoly::one() };
        }
        let a = Scalar::canonical(self.num.clone(), rhs.den.clone());
        let b = Scalar::canonical(rhs.num.clone(), self.den.clone());
        Scalar::canonical(&a.num * &b.num, &a.den * &b.den)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("scalar division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

// --- serialization -------------------------------------------------------
//
// A scalar is serialized as {"num": {exp: [re, im], ...}, "den": {...}} where
// exponents are decimal string keys and the rational parts are "p/q" strings.

fn rational_to_string(r: &num_rational::BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn rational_from_string(s: &str) -> Result<num_rational::BigRational, String> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer = num_bigint::BigInt::from_str(n.trim()).map_err(|e| e.to_string())?;
    let denom = num_bigint::BigInt::from_str(d.trim()).map_err(|e| e.to_string())?;
    if denom == num_bigint::BigInt::from(0) {
        return Err("zero denominator".into());
    }
    Ok(num_rational::BigRational::new(numer, denom))
}

fn poly_to_map(p: &LaurentPoly) -> BTreeMap<String, (String, String)> {
    p.terms()
        .map(|(e, c)| (e.to_string(), (rational_to_string(&c.re), rational_to_string(&c.im))))
        .collect()
}

fn poly_from_map(m: &BTreeMap<String, (String, String)>) -> Result<LaurentPoly, String> {
    let mut out = LaurentPoly::zero();
    for (exp, (re, im)) in m {
        let e: i64 = exp.trim().parse().map_err(|_| format!("bad exponent {exp:?}"))?;
        let c = GaussianRational::new(rational_from_string(re)?, rational_from_string(im)?);
        out = &out + &LaurentPoly::monomial(e, c);
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    num: BTreeMap<String, (String, String)>,
    den: BTreeMap<String, (String, String)>,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ScalarRepr { num: poly_to_map(&self.num), den: poly_to_map(&self.den) }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(deserializer)?;
        let num = poly_from_map(&repr.num).map_err(D::Error::custom)?;
        let den = poly_from_map(&repr.den).map_err(D::Error::custom)?;
        Scalar::new(num, den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalization_cancels_common_factor() {
        // (v^2 - 1)/(v - 1) -> v + 1
        let num = &LaurentPoly::v_pow(2) - &LaurentPoly::one();
        let den = &LaurentPoly::v_pow(1) - &LaurentPoly::one();
        let s = Scalar::new(num, den).unwrap();
        assert!(s.is_laurent());
        assert_eq!(s, &Scalar::v_pow(1) + &Scalar::one());
    }

    #[test]
    fn kappa_times_q_minus_one() {
        let lhs = &Scalar::kappa() * &(&Scalar::q() - &Scalar::one());
        assert_eq!(lhs, &Scalar::q() + &Scalar::one());
    }

    #[test]
    fn denominator_is_monic_with_zero_valuation() {
        // 1 / (2v^3 - 2v) should normalize the denominator.
        let den = (&LaurentPoly::v_pow(3) - &LaurentPoly::v_pow(1)).scale(&GaussianRational::from_int(2));
        let s = Scalar::new(LaurentPoly::one(), den).unwrap();
        assert_eq!(s.den().min_exp(), Some(0));
        assert!(s.den().leading_coeff().is_one());
        // Round-trip: s * (2v^3 - 2v) = 1
        let back = &s * &Scalar::from_poly((&LaurentPoly::v_pow(3) - &LaurentPoly::v_pow(1)).scale(&GaussianRational::from_int(2)));
        assert!(back.is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(Scalar::one().checked_div(&Scalar::zero()).is_err());
        assert!(Scalar::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn json_round_trip_is_exact() {
        let seven_thirds = Scalar::from_gauss(GaussianRational::from_ratio(7, 3));
        let s = &(&Scalar::i() + &Scalar::v_pow(-3)) / &(&Scalar::q() - &seven_thirds);
        let js = serde_json::to_string(&s).unwrap();
        let back: Scalar = serde_json::from_str(&js).unwrap();
        assert_eq!(s, back);
    }
}
