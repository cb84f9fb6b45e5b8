//! q-analogues: q-numbers, q-factorials, Gaussian binomials and finite
//! q-Pochhammer products.

use super::laurent::LaurentPoly;
use super::scalar::Scalar;
use super::RingError;

/// `[m]` with base `v^e`: `(b^m - b^-m)/(b - b^-1)` for `b = v^e`.
///
/// Defined for any integer `m`; `[0] = 0` and `[-m] = -[m]`.
pub fn qnum(m: i64, base_vexp: i64) -> Scalar {
    assert!(base_vexp != 0, "q-number needs a nontrivial base");
    let num = &Scalar::v_pow(base_vexp * m) - &Scalar::v_pow(-base_vexp * m);
    let den = &Scalar::v_pow(base_vexp) - &Scalar::v_pow(-base_vexp);
    &num / &den
}

/// `[m]! = [1][2]...[m]` with base `v^e`. Errors on negative `m`.
pub fn qfact(m: i64, base_vexp: i64) -> Result<Scalar, RingError> {
    if m < 0 {
        return Err(RingError::NegativeArgument { what: "q-factorial", value: m });
    }
    let mut out = Scalar::one();
    for k in 1..=m {
        out = &out * &qnum(k, base_vexp);
    }
    Ok(out)
}

/// Symmetric q-binomial `[m over k]` built from `[m]!` with base `v^e`.
/// Zero unless `0 <= k <= m`.
pub fn qbracket_binom(m: i64, k: i64, base_vexp: i64) -> Scalar {
    if k < 0 || k > m {
        return Scalar::zero();
    }
    let num = qfact(m, base_vexp).expect("m >= 0 here");
    let den = &qfact(k, base_vexp).unwrap() * &qfact(m - k, base_vexp).unwrap();
    &num / &den
}

/// Finite q-Pochhammer `(z; b)_m = prod_{k=1}^m (1 - z b^(k-1))`.
/// Errors on negative `m`.
pub fn poch(z: &Scalar, base: &Scalar, m: i64) -> Result<Scalar, RingError> {
    if m < 0 {
        return Err(RingError::NegativeArgument { what: "q-Pochhammer order", value: m });
    }
    let mut out = Scalar::one();
    let mut zb = z.clone();
    for _ in 0..m {
        out = &out * &(&Scalar::one() - &zb);
        zb = &zb * base;
    }
    Ok(out)
}

/// Ratio `(z; b)_(c+d) / (z; b)_c` evaluated as the finite product
/// `prod_{k=c+1}^{c+d} (1 - z b^(k-1))`, never as a stored fraction.
pub fn poch_ratio(z: &Scalar, base: &Scalar, c: i64, d: i64) -> Result<Scalar, RingError> {
    if c < 0 || d < 0 {
        return Err(RingError::NegativeArgument { what: "q-Pochhammer ratio", value: c.min(d) });
    }
    let mut out = Scalar::one();
    let mut zb = &z.clone() * &base.pow(c);
    for _ in 0..d {
        out = &out * &(&Scalar::one() - &zb);
        zb = &zb * base;
    }
    Ok(out)
}

/// Gaussian binomial `binom(m, k)` in the base `v^e`, as a Laurent polynomial:
/// `(b;b)_m / ((b;b)_k (b;b)_(m-k))` for `b = v^e`. Zero unless `0 <= k <= m`.
///
/// Computed by the Pascal-type recurrence so no fractions ever appear.
pub fn gauss_binom_poly(m: i64, k: i64, base_vexp: i64) -> LaurentPoly {
    if k < 0 || k > m {
        return LaurentPoly::zero();
    }
    let k = k.min(m - k);
    // binom(m, 0) = 1; binom(m, k) = binom(m-1, k-1) + b^k binom(m-1, k)
    let mut row: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    for mm in 1..=m {
        let width = k.min(mm);
        let mut next: Vec<LaurentPoly> = Vec::with_capacity(width as usize + 1);
        next.push(LaurentPoly::one());
        for kk in 1..=width {
            let left = &row[(kk - 1) as usize];
            let right = if (kk as usize) < row.len() {
                row[kk as usize].shift(base_vexp * kk)
            } else {
                LaurentPoly::zero()
            };
            next.push(left + &right);
        }
        row = next;
    }
    row[k as usize].clone()
}

/// `(b; b)_m` as a Laurent polynomial for `b = v^e`.
pub fn poch_self_poly(m: i64, base_vexp: i64) -> LaurentPoly {
    assert!(m >= 0);
    let mut out = LaurentPoly::one();
    for r in 1..=m {
        let factor = &LaurentPoly::one() - &LaurentPoly::v_pow(base_vexp * r);
        out = &out * &factor;
    }
    out
}
