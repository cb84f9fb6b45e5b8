//! Fundamental representations of the rank-two quantized coordinate ring on
//! the Fock space, their triple coproduct actions, and the intertwiner
//! property that characterizes the three-dimensional R matrix.

use super::{r_apply, ThreedimError};
use crate::fock::{MultiIndex, VectorState};
use crate::report::{Failure, Report};
use crate::ring::Scalar;

/// Generator label `t_{rs}` with `1 <= r, s <= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TGen {
    pub r: u8,
    pub s: u8,
}

impl TGen {
    pub fn new(r: u8, s: u8) -> Result<Self, ThreedimError> {
        if (1..=3).contains(&r) && (1..=3).contains(&s) {
            Ok(Self { r, s })
        } else {
            Err(ThreedimError::UnknownRelation(format!("t{r}{s}")))
        }
    }

    pub fn all() -> impl Iterator<Item = TGen> {
        (1..=3u8).flat_map(|r| (1..=3u8).map(move |s| TGen { r, s }))
    }
}

/// Single-factor oscillator operators: `k |m> = q^m |m>`,
/// `a+ |m> = |m+1>`, `a- |m> = (1 - q^(2m)) |m-1>`.
fn osc_k(m: u32) -> VectorState<Scalar> {
    VectorState::basis(MultiIndex::new(vec![m]), Scalar::q_pow(i64::from(m)))
}

fn osc_raise(m: u32) -> VectorState<Scalar> {
    VectorState::basis(MultiIndex::new(vec![m + 1]), Scalar::one())
}

fn osc_lower(m: u32) -> VectorState<Scalar> {
    if m == 0 {
        return VectorState::zero();
    }
    let coeff = &Scalar::one() - &Scalar::q_pow(2 * i64::from(m));
    VectorState::basis(MultiIndex::new(vec![m - 1]), coeff)
}

/// Action of `t_{rs}` on one Fock factor in the first or second fundamental
/// representation (the free parameters of the general form are fixed to 1).
fn pi_single(rep: u8, gen: TGen, m: u32) -> VectorState<Scalar> {
    let neg_q = |state: VectorState<Scalar>| state.scale_scalar(&(-&Scalar::q()));
    match rep {
        1 => match (gen.r, gen.s) {
            (1, 1) => osc_lower(m),
            (1, 2) => osc_k(m),
            (2, 1) => neg_q(osc_k(m)),
            (2, 2) => osc_raise(m),
            (3, 3) => VectorState::basis(MultiIndex::new(vec![m]), Scalar::one()),
            _ => VectorState::zero(),
        },
        2 => match (gen.r, gen.s) {
            (1, 1) => VectorState::basis(MultiIndex::new(vec![m]), Scalar::one()),
            (2, 2) => osc_lower(m),
            (2, 3) => osc_k(m),
            (3, 2) => neg_q(osc_k(m)),
            (3, 3) => osc_raise(m),
            _ => VectorState::zero(),
        },
        _ => panic!("representation index must be 1 or 2"),
    }
}

/// Tensor-cube action through the three-fold coproduct
/// `t_{rs} -> sum_{k,l} t_{rk} (x) t_{kl} (x) t_{ls}`, evaluated in the
/// alternating pattern starting with `first`.
fn pi_cube(first: u8, gen: TGen, m: &MultiIndex) -> VectorState<Scalar> {
    debug_assert_eq!(m.arity(), 3);
    let second = if first == 1 { 2 } else { 1 };
    let mut out = VectorState::zero();
    for mid1 in 1..=3u8 {
        let left = pi_single(first, TGen { r: gen.r, s: mid1 }, m.entry(0));
        if left.is_zero() {
            continue;
        }
        for mid2 in 1..=3u8 {
            let middle = pi_single(second, TGen { r: mid1, s: mid2 }, m.entry(1));
            if middle.is_zero() {
                continue;
            }
            let right = pi_single(first, TGen { r: mid2, s: gen.s }, m.entry(2));
            if right.is_zero() {
                continue;
            }
            for (li, lc) in left.terms() {
                for (mi, mc) in middle.terms() {
                    for (ri, rc) in right.terms() {
                        let idx = MultiIndex::new(vec![li.entry(0), mi.entry(0), ri.entry(0)]);
                        out.add_term(idx, &(lc * mc) * rc);
                    }
                }
            }
        }
    }
    out
}

/// Action of `t_{rs}` in the first or second fundamental representation on a
/// single Fock factor (arity 1) or in the corresponding alternating
/// tensor-cube representation (arity 3).
pub fn aq_fundamental_action(rep: u8, gen: TGen, m: &MultiIndex) -> Result<VectorState<Scalar>, ThreedimError> {
    if rep != 1 && rep != 2 {
        return Err(ThreedimError::UnknownRelation(format!("representation {rep}")));
    }
    match m.arity() {
        1 => Ok(pi_single(rep, gen, m.entry(0))),
        3 => Ok(pi_cube(rep, gen, m)),
        _ => Err(ThreedimError::TooFewLegs),
    }
}

/// Reverse the three tensor factors.
fn sigma(state: &VectorState<Scalar>) -> VectorState<Scalar> {
    let mut out = VectorState::zero();
    for (idx, c) in state.terms() {
        out.add_term(MultiIndex::new(vec![idx.entry(2), idx.entry(1), idx.entry(0)]), c.clone());
    }
    out
}

/// `Phi = R o sigma`, the intertwiner between the two cube representations.
fn phi(state: &VectorState<Scalar>) -> VectorState<Scalar> {
    r_apply(&sigma(state), 3, (0, 1, 2)).expect("legs are valid")
}

/// `Phi o pi_121 = pi_212 o Phi` for all nine generators on every basis
/// vector of total degree at most `max_degree`.
pub fn check_aq_intertwiner(max_degree: u32) -> Report {
    let mut report = Report::new("aq-intertwiner");
    for d in 0..=max_degree {
        for m1 in 0..=d {
            for m2 in 0..=(d - m1) {
                let m3 = d - m1 - m2;
                let m = MultiIndex::new(vec![m1, m2, m3]);
                let basis = VectorState::basis(m.clone(), Scalar::one());
                for gen in TGen::all() {
                    let lhs = phi(&pi_cube(1, gen, &m));
                    let mut rhs = VectorState::zero();
                    for (idx, c) in phi(&basis).terms() {
                        let image = pi_cube(2, gen, idx);
                        rhs.add_state(&image.scale(c));
                    }
                    let ok = lhs == rhs;
                    report.record(ok, || Failure {
                        indices: format!("t{}{} on {}", gen.r, gen.s, m),
                        lhs: format!("{lhs:?}"),
                        rhs: format!("{rhs:?}"),
                    });
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_factor_examples() {
        // pi_1(t33)|m> = |m>
        let m = MultiIndex::new(vec![5]);
        let out = aq_fundamental_action(1, TGen::new(3, 3).unwrap(), &m).unwrap();
        assert_eq!(out, VectorState::basis(m.clone(), Scalar::one()));

        // pi_1(t12)|m> = q^m |m>
        let out = aq_fundamental_action(1, TGen::new(1, 2).unwrap(), &m).unwrap();
        assert_eq!(out, VectorState::basis(m.clone(), Scalar::q_pow(5)));

        // pi_2(t11)|m> = |m>
        let out = aq_fundamental_action(2, TGen::new(1, 1).unwrap(), &m).unwrap();
        assert_eq!(out, VectorState::basis(m, Scalar::one()));
    }

    #[test]
    fn invalid_generator_label() {
        assert!(TGen::new(0, 2).is_err());
        assert!(TGen::new(1, 4).is_err());
    }

    #[test]
    fn intertwiner_vacuum_and_low_degrees() {
        let r = check_aq_intertwiner(2);
        assert!(r.pass, "{:?}", r.failures.first());
    }
}
