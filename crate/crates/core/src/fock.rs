//! Fock-space bookkeeping: basis labels for tensor powers, finite linear
//! combinations, sector enumeration, the bilinear pairing, and sparse graded
//! operators with runtime conservation checks.
//!
//! A basis label is a flat tuple of nonnegative integers. States over tensor
//! products of several factors simply use longer tuples; operators know which
//! slots they touch.

use crate::ring::qsymbols::poch;
use crate::ring::{Scalar, TruncatedSeries};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FockError {
    #[error("unbounded sector request: {0}")]
    UnboundedSector(&'static str),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("operator violates declared conservation: {context}")]
    ConservationViolation { context: String },
    #[error("pairing needs single-factor indices")]
    PairingArity,
    #[error("operator legs must be distinct and in range")]
    BadLegs,
}

/// Basis label `(m_1, ..., m_k)` of nonnegative integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        Self(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// `(0, ..., 1, ..., 0)` with the 1 in slot `i` (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn scaled_unit(n: usize, i: usize, m: u32) -> Self {
        let mut v = vec![0; n];
        v[i] = m;
        Self(v)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parity sign of the total weight: `true` for even.
    pub fn is_even(&self) -> bool {
        self.weight() % 2 == 0
    }

    pub fn entry(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Concatenate two labels (tensor product of factors).
    pub fn concat(&self, other: &MultiIndex) -> MultiIndex {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        MultiIndex(v)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> MultiIndex {
        MultiIndex(self.0[range].to_vec())
    }

    /// Entrywise sum.
    pub fn plus(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.arity(), other.arity());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Entrywise difference, `None` if any entry would go negative.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        debug_assert_eq!(self.arity(), other.arity());
        let mut v = Vec::with_capacity(self.arity());
        for (a, b) in self.0.iter().zip(&other.0) {
            v.push(a.checked_sub(*b)?);
        }
        Some(MultiIndex(v))
    }

    /// Add `delta` to slot `i`; `None` if the entry would go negative.
    pub fn shifted(&self, i: usize, delta: i64) -> Option<MultiIndex> {
        let cur = i64::from(self.0[i]);
        let next = cur + delta;
        if next < 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[i] = next as u32;
        Some(MultiIndex(v))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Coefficient-ring contract shared by [`Scalar`] and [`TruncatedSeries`] so
/// the same operator code serves exact and series-valued computations.
pub trait Coeff: Clone + PartialEq + Send + Sync {
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiply by an exact scalar.
    fn scale(&self, s: &Scalar) -> Self;
}

impl Coeff for Scalar {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn scale(&self, s: &Scalar) -> Self {
        self * s
    }
}

impl Coeff for TruncatedSeries {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        TruncatedSeries::is_zero(self)
    }
    fn scale(&self, s: &Scalar) -> Self {
        TruncatedSeries::scale(self, s)
    }
}

/// Finite linear combination of basis labels. Zero coefficients are dropped.
#[derive(Clone, PartialEq)]
pub struct VectorState<C: Coeff> {
    terms: BTreeMap<MultiIndex, C>,
}

impl<C: Coeff> VectorState<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn basis(index: MultiIndex, one: C) -> Self {
        let mut s = Self::zero();
        s.add_term(index, one);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, index: &MultiIndex) -> Option<&C> {
        self.terms.get(index)
    }

    pub fn add_term(&mut self, index: MultiIndex, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&index) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&index);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(index, c);
            }
        }
    }

    pub fn add_state(&mut self, other: &Self) {
        for (idx, c) in &other.terms {
            self.add_term(idx.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (idx, a) in &self.terms {
            out.add_term(idx.clone(), a.mul(c));
        }
        out
    }

    pub fn scale_scalar(&self, s: &Scalar) -> Self {
        let mut out = Self::zero();
        for (idx, a) in &self.terms {
            out.add_term(idx.clone(), a.scale(s));
        }
        out
    }

    pub fn negated(&self) -> Self {
        let mut out = Self::zero();
        for (idx, a) in &self.terms {
            out.terms.insert(idx.clone(), a.neg());
        }
        out
    }

    pub fn sub_state(&mut self, other: &Self) {
        for (idx, c) in &other.terms {
            self.add_term(idx.clone(), c.neg());
        }
    }
}

impl<C: Coeff + fmt::Debug> fmt::Debug for VectorState<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{:?} |{}>", c, idx)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Linear functionals on basis labels, preserved exactly by an operator.
///
/// Each functional is a coefficient vector dotted with the label's entries;
/// conservation means the functional takes the same value on every emitted
/// output label as on the input label.
#[derive(Clone, Debug, Default)]
pub struct Conservation {
    pub functionals: Vec<Vec<i64>>,
}

impl Conservation {
    pub fn none() -> Self {
        Self { functionals: Vec::new() }
    }

    fn eval(f: &[i64], idx: &MultiIndex) -> i64 {
        f.iter().zip(&idx.0).map(|(c, m)| c * i64::from(*m)).sum()
    }

    pub fn check(&self, input: &MultiIndex, output: &MultiIndex) -> bool {
        self.functionals
            .iter()
            .all(|f| Self::eval(f, input) == Self::eval(f, output))
    }
}

/// Sparse operator given by a rule on basis labels, together with declared
/// conservation laws that are verified on every emitted term.
pub struct GradedOperator<'a, C: Coeff> {
    pub arity: usize,
    pub conservation: Conservation,
    rule: Box<dyn Fn(&MultiIndex) -> VectorState<C> + Send + Sync + 'a>,
}

impl<'a, C: Coeff + 'a> GradedOperator<'a, C> {
    pub fn new(
        arity: usize,
        conservation: Conservation,
        rule: impl Fn(&MultiIndex) -> VectorState<C> + Send + Sync + 'a,
    ) -> Self {
        Self { arity, conservation, rule: Box::new(rule) }
    }

    pub fn identity(arity: usize, one: C) -> Self {
        Self::new(arity, Conservation::none(), move |idx| {
            VectorState::basis(idx.clone(), one.clone())
        })
    }

    pub fn apply_basis(&self, index: &MultiIndex) -> Result<VectorState<C>, FockError> {
        if index.arity() != self.arity {
            return Err(FockError::ArityMismatch { expected: self.arity, got: index.arity() });
        }
        let out = (self.rule)(index);
        for (emitted, _) in out.terms() {
            if !self.conservation.check(index, emitted) {
                return Err(FockError::ConservationViolation {
                    context: format!("input {index} emitted {emitted}"),
                });
            }
        }
        Ok(out)
    }
}

/// Linear extension of an operator rule to a state, with conservation
/// verified on every emitted term.
pub fn apply_operator<C: Coeff>(
    op: &GradedOperator<C>,
    state: &VectorState<C>,
) -> Result<VectorState<C>, FockError> {
    let mut out = VectorState::zero();
    for (idx, c) in state.terms() {
        let image = op.apply_basis(idx)?;
        for (jdx, a) in image.terms() {
            out.add_term(jdx.clone(), a.mul(c));
        }
    }
    Ok(out)
}

/// Bilinear pairing `<m|n> = (q^2; q^2)_m delta_(m,n)` on single Fock factors.
pub fn pairing(bra: &MultiIndex, ket: &MultiIndex) -> Result<Scalar, FockError> {
    if bra.arity() != 1 || ket.arity() != 1 {
        return Err(FockError::PairingArity);
    }
    if bra.entry(0) != ket.entry(0) {
        return Ok(Scalar::zero());
    }
    Ok(poch(&Scalar::q(), &Scalar::q(), i64::from(bra.entry(0))).expect("nonnegative order"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_weight(w: u32) -> Self {
        if w % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    /// Product of parity signs.
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub enum SectorConstraint {
    /// All labels of the given total weight.
    Weight(u32),
    /// All labels of total weight at most the bound.
    MaxDegree(u32),
    /// Labels of the given parity up to a degree bound.
    ParityDegree(Parity, u32),
    /// Parity alone is an infinite set; always an error.
    Parity(Parity),
}

/// Complete, duplicate-free enumeration of a finite sector in lexicographic
/// order.
pub fn enumerate_sector(n: usize, constraint: SectorConstraint) -> Result<Vec<MultiIndex>, FockError> {
    match constraint {
        SectorConstraint::Parity(_) => Err(FockError::UnboundedSector("parity without a degree bound")),
        SectorConstraint::Weight(w) => {
            let mut out = Vec::new();
            collect_weight(n, w, &mut Vec::with_capacity(n), &mut out);
            Ok(out)
        }
        SectorConstraint::MaxDegree(d) => {
            let mut out = Vec::new();
            for w in 0..=d {
                collect_weight(n, w, &mut Vec::with_capacity(n), &mut out);
            }
            out.sort();
            Ok(out)
        }
        SectorConstraint::ParityDegree(p, d) => {
            let mut all = enumerate_sector(n, SectorConstraint::MaxDegree(d))?;
            all.retain(|m| Parity::of_weight(m.weight()) == p);
            Ok(all)
        }
    }
}

fn collect_weight(n: usize, w: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
    if n == 1 {
        prefix.push(w);
        out.push(MultiIndex(prefix.clone()));
        prefix.pop();
        return;
    }
    for head in 0..=w {
        prefix.push(head);
        collect_weight(n - 1, w - head, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_examples() {
        let m0 = MultiIndex::new(vec![0]);
        let m1 = MultiIndex::new(vec![1]);
        let m2 = MultiIndex::new(vec![2]);
        assert_eq!(pairing(&m0, &m0).unwrap(), Scalar::one());
        assert_eq!(pairing(&m1, &m1).unwrap(), &Scalar::one() - &Scalar::q());
        assert!(pairing(&m1, &m2).unwrap().is_zero());
    }

    #[test]
    fn pairing_is_diagonal() {
        for m in 0..=10u32 {
            for n in 0..=10u32 {
                let p = pairing(&MultiIndex::new(vec![m]), &MultiIndex::new(vec![n])).unwrap();
                assert_eq!(p.is_zero(), m != n);
            }
        }
    }

    #[test]
    fn sector_weight_enumeration() {
        let s = enumerate_sector(2, SectorConstraint::Weight(1)).unwrap();
        assert_eq!(s, vec![MultiIndex::new(vec![0, 1]), MultiIndex::new(vec![1, 0])]);
        let s3 = enumerate_sector(3, SectorConstraint::Weight(2)).unwrap();
        assert_eq!(s3.len(), 6); // stars and bars: C(2+3-1, 2)
    }

    #[test]
    fn sector_sizes_match_multiset_counts() {
        fn choose(n: u64, k: u64) -> u64 {
            let mut num = 1u64;
            let mut den = 1u64;
            for i in 0..k {
                num *= n - i;
                den *= i + 1;
            }
            num / den
        }
        for n in 1..=4usize {
            for w in 0..=6u32 {
                let s = enumerate_sector(n, SectorConstraint::Weight(w)).unwrap();
                let expect = choose(u64::from(w) + n as u64 - 1, n as u64 - 1);
                assert_eq!(s.len() as u64, expect, "n={n} w={w}");
            }
        }
    }

    #[test]
    fn parity_sector() {
        let s = enumerate_sector(1, SectorConstraint::ParityDegree(Parity::Odd, 3)).unwrap();
        assert_eq!(s, vec![MultiIndex::new(vec![1]), MultiIndex::new(vec![3])]);
        assert!(enumerate_sector(1, SectorConstraint::Parity(Parity::Odd)).is_err());
    }

    #[test]
    fn identity_operator_preserves_state() {
        let op = GradedOperator::identity(2, Scalar::one());
        let mut state = VectorState::basis(MultiIndex::new(vec![1, 2]), Scalar::q());
        state.add_term(MultiIndex::new(vec![0, 0]), Scalar::i());
        let out = apply_operator(&op, &state).unwrap();
        assert_eq!(out, state);
    }

    #[test]
    fn conservation_violation_is_detected() {
        // Rule moves weight without declaring it; declared functional is total weight.
        let op = GradedOperator::new(
            1,
            Conservation { functionals: vec![vec![1]] },
            |idx: &MultiIndex| {
                VectorState::basis(idx.shifted(0, 1).unwrap(), Scalar::one())
            },
        );
        let state = VectorState::basis(MultiIndex::new(vec![0]), Scalar::one());
        assert!(matches!(
            apply_operator(&op, &state),
            Err(FockError::ConservationViolation { .. })
        ));
    }

    #[test]
    fn apply_operator_is_linear() {
        // op: |m> -> |m+1> + q |m|-weighted term; check linearity on a random-ish state.
        let op = GradedOperator::new(1, Conservation::none(), |idx: &MultiIndex| {
            let mut out = VectorState::basis(idx.shifted(0, 1).unwrap(), Scalar::one());
            out.add_term(idx.clone(), Scalar::q_pow(i64::from(idx.weight())));
            out
        });
        let u = VectorState::basis(MultiIndex::new(vec![1]), Scalar::q());
        let v = VectorState::basis(MultiIndex::new(vec![3]), &Scalar::i() + &Scalar::one());
        let alpha = Scalar::kappa();
        let beta = &Scalar::q_pow(-2) * &Scalar::i();

        let mut combo = u.scale(&alpha);
        combo.add_state(&v.scale(&beta));
        let lhs = apply_operator(&op, &combo).unwrap();

        let mut rhs = apply_operator(&op, &u).unwrap().scale(&alpha);
        rhs.add_state(&apply_operator(&op, &v).unwrap().scale(&beta));
        assert_eq!(lhs, rhs);
    }
}
