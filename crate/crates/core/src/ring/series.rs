//! Truncated formal power series over [`Scalar`] in one spectral variable `z`
//! or two variables `x, y`, cut at a fixed total degree.

use super::qsymbols::poch;
use super::scalar::Scalar;
use super::RingError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum SeriesVars {
    /// Single variable `z`; the second exponent slot is always 0.
    Z,
    /// Two variables `x, y`, truncated by total degree.
    XY,
}

/// Power series truncated at total degree `order`. No zero coefficients or
/// terms above the order are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    vars: SeriesVars,
    order: u32,
    coeffs: BTreeMap<(u32, u32), Scalar>,
}

impl TruncatedSeries {
    pub fn zero(vars: SeriesVars, order: u32) -> Self {
        Self { vars, order, coeffs: BTreeMap::new() }
    }

    pub fn one(vars: SeriesVars, order: u32) -> Self {
        Self::constant(vars, order, Scalar::one())
    }

    pub fn constant(vars: SeriesVars, order: u32, c: Scalar) -> Self {
        let mut out = Self::zero(vars, order);
        out.add_term((0, 0), &c);
        out
    }

    pub fn monomial(vars: SeriesVars, order: u32, exp: (u32, u32), c: Scalar) -> Self {
        let mut out = Self::zero(vars, order);
        out.add_term(exp, &c);
        out
    }

    /// `z^k` in one variable.
    pub fn z_pow(order: u32, k: u32) -> Self {
        Self::monomial(SeriesVars::Z, order, (k, 0), Scalar::one())
    }

    pub fn vars(&self) -> SeriesVars {
        self.vars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: (u32, u32)) -> Scalar {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of `z^k` in a one-variable series.
    pub fn coeff_z(&self, k: u32) -> Scalar {
        debug_assert_eq!(self.vars, SeriesVars::Z);
        self.coeff((k, 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.coeffs.iter()
    }

    fn total(exp: (u32, u32)) -> u32 {
        exp.0 + exp.1
    }

    pub fn add_term(&mut self, exp: (u32, u32), c: &Scalar) {
        if c.is_zero() || Self::total(exp) > self.order {
            return;
        }
        if matches!(self.vars, SeriesVars::Z) {
            debug_assert_eq!(exp.1, 0, "one-variable series with a y exponent");
        }
        match self.coeffs.get_mut(&exp) {
            Some(old) => {
                let s = &*old + c;
                if s.is_zero() {
                    self.coeffs.remove(&exp);
                } else {
                    *old = s;
                }
            }
            None => {
                self.coeffs.insert(exp, c.clone());
            }
        }
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "series variable mismatch");
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.vars, self.order);
        if c.is_zero() {
            return out;
        }
        for (e, a) in &self.coeffs {
            out.add_term(*e, &(a * c));
        }
        out
    }

    /// Multiply by `z^k` (one variable), dropping terms past the order.
    pub fn shift_z(&self, k: u32) -> Self {
        debug_assert_eq!(self.vars, SeriesVars::Z);
        let mut out = Self::zero(self.vars, self.order);
        for (e, a) in &self.coeffs {
            out.add_term((e.0 + k, 0), a);
        }
        out
    }

    /// Retruncate to a lower (or equal) order.
    pub fn truncate(&self, order: u32) -> Self {
        let mut out = Self::zero(self.vars, order);
        for (e, a) in &self.coeffs {
            out.add_term(*e, a);
        }
        out
    }

    /// Map a one-variable series by `z -> x^sx * y^sy` into a two-variable
    /// series of the given total order. Used for spectral-parameter
    /// substitutions like `z -> x`, `z -> y` and `z -> xy`.
    pub fn substitute_xy(&self, sx: u32, sy: u32, order: u32) -> Self {
        debug_assert_eq!(self.vars, SeriesVars::Z);
        assert!(sx + sy > 0, "trivial substitution");
        let mut out = Self::zero(SeriesVars::XY, order);
        for (e, a) in &self.coeffs {
            out.add_term((e.0 * sx, e.0 * sy), a);
        }
        out
    }

    /// Map `z -> z^k` within one variable (exponent dilation).
    pub fn dilate_z(&self, k: u32, order: u32) -> Self {
        debug_assert_eq!(self.vars, SeriesVars::Z);
        assert!(k > 0);
        let mut out = Self::zero(SeriesVars::Z, order);
        for (e, a) in &self.coeffs {
            out.add_term((e.0 * k, 0), a);
        }
        out
    }

    pub fn inv(&self) -> Result<Self, RingError> {
        Self::one(self.vars, self.order).checked_div(self)
    }

    /// Series division. The divisor needs an invertible constant term.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, RingError> {
        self.assert_compatible(rhs);
        let order = self.order.min(rhs.order);
        let c0 = rhs.coeff((0, 0));
        if c0.is_zero() {
            return Err(RingError::NonInvertibleConstantTerm);
        }
        let c0_inv = c0.inv()?;
        // Solve q * rhs = self degree by degree on the total-degree grading.
        let mut quot = Self::zero(self.vars, order);
        for d in 0..=order {
            let exps: Vec<(u32, u32)> = match self.vars {
                SeriesVars::Z => vec![(d, 0)],
                SeriesVars::XY => (0..=d).map(|ex| (ex, d - ex)).collect(),
            };
            for exp in exps {
                // self[exp] = sum_{0 <= f <= exp} quot[f] * rhs[exp - f]
                let mut acc = self.coeff(exp);
                for (f, qc) in quot.coeffs.iter() {
                    if f.0 <= exp.0 && f.1 <= exp.1 && *f != exp {
                        let r = rhs.coeff((exp.0 - f.0, exp.1 - f.1));
                        if !r.is_zero() {
                            acc = &acc - &(qc * &r);
                        }
                    }
                }
                quot.add_term(exp, &(&acc * &c0_inv));
            }
        }
        Ok(quot)
    }

    /// Integer power; negative exponents require an invertible constant term.
    pub fn powi(&self, k: i64) -> Result<Self, RingError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::one(self.vars, self.order);
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_compatible(rhs);
        let order = self.order.min(rhs.order);
        let mut out = self.truncate(order);
        for (e, a) in &rhs.coeffs {
            out.add_term(*e, a);
        }
        out
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self + &(-rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_compatible(rhs);
        let order = self.order.min(rhs.order);
        let mut out = TruncatedSeries::zero(self.vars, order);
        for (e1, a1) in &self.coeffs {
            if TruncatedSeries::total(*e1) > order {
                continue;
            }
            for (e2, a2) in &rhs.coeffs {
                let exp = (e1.0 + e2.0, e1.1 + e2.1);
                if TruncatedSeries::total(exp) > order {
                    continue;
                }
                out.add_term(exp, &(a1 * a2));
            }
        }
        out
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.vars, self.order);
        for (e, a) in &self.coeffs {
            out.coeffs.insert(*e, -a);
        }
        out
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "O({})", self.order + 1);
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match self.vars {
                SeriesVars::Z => match e.0 {
                    0 => write!(f, "[{}]", c)?,
                    1 => write!(f, "[{}] z", c)?,
                    k => write!(f, "[{}] z^{}", c, k)?,
                },
                SeriesVars::XY => write!(f, "[{}] x^{} y^{}", c, e.0, e.1)?,
            }
        }
        write!(f, " + O({})", self.order + 1)
    }
}

/// Expansion of the infinite product `(c z^d; b)_inf` to the given order,
/// using the Euler series
/// `(a; b)_inf = sum_m (-a)^m b^(m(m-1)/2) / (b; b)_m` with `a = c z^d`.
///
/// `d >= 1` is required so every term lands on a positive power of `z`.
pub fn qpoch_infinite_series(
    prefactor: &Scalar,
    zpower: u32,
    base: &Scalar,
    order: u32,
) -> Result<TruncatedSeries, RingError> {
    if zpower == 0 {
        return Err(RingError::InvalidArgument { what: "infinite q-Pochhammer needs a positive z-power" });
    }
    let mut out = TruncatedSeries::zero(SeriesVars::Z, order);
    let mut m: u32 = 0;
    let mut neg_c_pow = Scalar::one();
    while u64::from(m) * u64::from(zpower) <= u64::from(order) {
        let tri = i64::from(m) * (i64::from(m) - 1) / 2;
        let den = poch(base, base, i64::from(m))?;
        let coeff = &(&neg_c_pow * &base.pow(tri)) / &den;
        out.add_term((m * zpower, 0), &coeff);
        neg_c_pow = &neg_c_pow * &(-prefactor);
        m += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geom(order: u32) -> TruncatedSeries {
        // 1 + z + z^2 + ...
        let mut s = TruncatedSeries::zero(SeriesVars::Z, order);
        for k in 0..=order {
            s.add_term((k, 0), &Scalar::one());
        }
        s
    }

    #[test]
    fn one_minus_z_times_geometric_is_one() {
        let order = 7;
        let one_minus_z = &TruncatedSeries::one(SeriesVars::Z, order) - &TruncatedSeries::z_pow(order, 1);
        let p = &one_minus_z * &geom(order);
        assert_eq!(p, TruncatedSeries::one(SeriesVars::Z, order));
    }

    #[test]
    fn inverse_of_one_minus_zq2_is_geometric_in_q2() {
        let order = 6;
        let den = &TruncatedSeries::one(SeriesVars::Z, order)
            - &TruncatedSeries::monomial(SeriesVars::Z, order, (1, 0), Scalar::q());
        let inv = den.inv().unwrap();
        for m in 0..=order {
            assert_eq!(inv.coeff_z(m), Scalar::q_pow(i64::from(m)));
        }
    }

    #[test]
    fn division_requires_invertible_constant_term() {
        let z = TruncatedSeries::z_pow(5, 1);
        assert!(TruncatedSeries::one(SeriesVars::Z, 5).checked_div(&z).is_err());
    }

    #[test]
    fn rational_function_constant_term() {
        // (z - q^2)/(1 - z q^2) has constant term -q^2.
        let order = 5;
        let num = &TruncatedSeries::z_pow(order, 1)
            - &TruncatedSeries::constant(SeriesVars::Z, order, Scalar::q());
        let den = &TruncatedSeries::one(SeriesVars::Z, order)
            - &TruncatedSeries::monomial(SeriesVars::Z, order, (1, 0), Scalar::q());
        let r = num.checked_div(&den).unwrap();
        assert_eq!(r.coeff_z(0), -&Scalar::q());
    }

    // Independent route for the infinite product: the functional equation
    // f(z) = (1 - c z^d) f(b z^d ... ) specialized to d = 1 gives the
    // recurrence coeff_m = -c b^(m-1) coeff_(m-1) / (1 - b^m).
    fn qpoch_by_recurrence(c: &Scalar, base: &Scalar, order: u32) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(SeriesVars::Z, order);
        let mut cur = Scalar::one();
        s.add_term((0, 0), &cur);
        for m in 1..=order {
            let bm = base.pow(i64::from(m));
            let bm1 = base.pow(i64::from(m) - 1);
            cur = &(&(-c) * &(&bm1 * &cur)) / &(&Scalar::one() - &bm);
            s.add_term((m, 0), &cur);
        }
        s
    }

    #[test]
    fn qpoch_degree_zero_and_one_coefficients() {
        let s = qpoch_infinite_series(&Scalar::one(), 1, &Scalar::q(), 6).unwrap();
        assert_eq!(s.coeff_z(0), Scalar::one());
        // coefficient of z is -1/(1-q)
        let expect = &(-&Scalar::one()) / &(&Scalar::one() - &Scalar::q());
        assert_eq!(s.coeff_z(1), expect);
    }

    #[test]
    fn qpoch_matches_functional_equation_recurrence() {
        for (c, base) in [
            (Scalar::one(), Scalar::q()),
            (-&Scalar::q(), Scalar::q()),
            (Scalar::q_pow(2), Scalar::q_pow(2)),
        ] {
            let lhs = qpoch_infinite_series(&c, 1, &base, 8).unwrap();
            let rhs = qpoch_by_recurrence(&c, &base, 8);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn qpoch_times_reciprocal_is_one() {
        let order = 8;
        let p = qpoch_infinite_series(&Scalar::one(), 1, &Scalar::q(), order).unwrap();
        let inv = p.inv().unwrap();
        assert_eq!(&p * &inv, TruncatedSeries::one(SeriesVars::Z, order));
    }

    #[test]
    fn q_binomial_theorem_series() {
        // sum_k (x; p)_k / (p; p)_k z^k = (z x; p)_inf / (z; p)_inf
        let order = 8;
        let p = Scalar::q_pow(2);
        let x = Scalar::q();
        let mut lhs = TruncatedSeries::zero(SeriesVars::Z, order);
        for k in 0..=order {
            let c = &poch(&x, &p, i64::from(k)).unwrap() / &poch(&p, &p, i64::from(k)).unwrap();
            lhs.add_term((k, 0), &c);
        }
        let num = qpoch_infinite_series(&x, 1, &p, order).unwrap();
        let den = qpoch_infinite_series(&Scalar::one(), 1, &p, order).unwrap();
        let rhs = num.checked_div(&den).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_into_two_variables() {
        let s = geom(4);
        let sxy = s.substitute_xy(1, 1, 4);
        assert_eq!(sxy.coeff((2, 2)), Scalar::one());
        assert_eq!(sxy.coeff((3, 3)), Scalar::zero()); // beyond total order
        let sx = s.substitute_xy(1, 0, 4);
        assert_eq!(sx.coeff((4, 0)), Scalar::one());
    }
}
