//! The three-dimensional R matrix on the cube of the q-oscillator Fock space:
//! explicit matrix elements, operator action, symmetries, the tetrahedron
//! equation, and the spectral boundary vectors it fixes.

mod aq;
mod recursions;

pub use aq::{aq_fundamental_action, check_aq_intertwiner, TGen};
pub use recursions::{check_lemma_identity, check_lemma_sweep, check_recursion, check_recursion_sweep, LemmaIndices, LEMMA_IDS, RECURSION_IDS};

use crate::fock::{apply_operator, Conservation, GradedOperator, MultiIndex, VectorState};
use crate::report::{Failure, Report};
use crate::ring::qsymbols::{gauss_binom_poly, poch_self_poly};
use crate::ring::{GaussianRational, LaurentPoly, Scalar, SeriesVars, TruncatedSeries};
use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ThreedimError {
    #[error("unknown relation id {0:?}")]
    UnknownRelation(String),
    #[error("operator legs must be distinct")]
    LegCollision,
    #[error("state has too few tensor legs")]
    TooFewLegs,
}

/// Index of a matrix element: out-triple `(a, b, c)`, in-triple `(i, j, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RIndex {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl RIndex {
    pub fn new(a: u32, b: u32, c: u32, i: u32, j: u32, k: u32) -> Self {
        Self { a, b, c, i, j, k }
    }

    /// Conservation: the element vanishes unless `a+b = i+j` and `b+c = j+k`.
    pub fn conserves(&self) -> bool {
        self.a + self.b == self.i + self.j && self.b + self.c == self.j + self.k
    }
}

fn r_cache() -> &'static RwLock<HashMap<[i64; 6], LaurentPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<[i64; 6], LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `q^e` as a Laurent polynomial in `v`.
fn qpow(e: i64) -> LaurentPoly {
    LaurentPoly::v_pow(2 * e)
}

/// Matrix element as a Laurent polynomial in `v` (the element formula only
/// ever produces polynomial expressions in `q`, never true fractions).
/// Out-of-range (negative) indices give zero.
pub fn r_element_poly(a: i64, b: i64, c: i64, i: i64, j: i64, k: i64) -> LaurentPoly {
    if a < 0 || b < 0 || c < 0 || i < 0 || j < 0 || k < 0 {
        return LaurentPoly::zero();
    }
    if a + b != i + j || b + c != j + k {
        return LaurentPoly::zero();
    }
    let key = [a, b, c, i, j, k];
    if let Some(hit) = r_cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    // sum over lambda + mu = b with mu <= i, lambda <= j of
    //   (-1)^lambda q^(i(c-j) + (k+1)lambda + mu(mu-k))
    //   * (q^2)_(c+mu)/(q^2)_c * binom(i, mu)_(q^2) * binom(j, lambda)_(q^2)
    let mut sum = LaurentPoly::zero();
    for mu in 0..=b.min(i) {
        let lambda = b - mu;
        if lambda > j {
            continue;
        }
        let exp = i * (c - j) + (k + 1) * lambda + mu * (mu - k);
        let mut term = qpow(exp);
        if lambda % 2 == 1 {
            term = -&term;
        }
        // (q^2)_(c+mu)/(q^2)_c as the finite product over the top slice.
        let mut ratio = LaurentPoly::one();
        for r in (c + 1)..=(c + mu) {
            ratio = &ratio * &(&LaurentPoly::one() - &LaurentPoly::v_pow(4 * r));
        }
        term = &term * &ratio;
        term = &term * &gauss_binom_poly(i, mu, 4);
        term = &term * &gauss_binom_poly(j, lambda, 4);
        sum = &sum + &term;
    }
    r_cache().write().unwrap().insert(key, sum.clone());
    sum
}

/// Matrix element as a [`Scalar`] (denominator 1 by construction).
pub fn r_element(idx: &RIndex) -> Scalar {
    Scalar::from_poly(r_element_poly(
        i64::from(idx.a),
        i64::from(idx.b),
        i64::from(idx.c),
        i64::from(idx.i),
        i64::from(idx.j),
        i64::from(idx.k),
    ))
}

/// The operator acting on three chosen legs of a tensor-power label.
/// Conservation on the legs is declared and therefore runtime-checked.
pub fn r_operator(arity: usize, legs: (usize, usize, usize)) -> Result<GradedOperator<'static, Scalar>, ThreedimError> {
    let (p, q, r) = legs;
    if p == q || q == r || p == r {
        return Err(ThreedimError::LegCollision);
    }
    if p >= arity || q >= arity || r >= arity {
        return Err(ThreedimError::TooFewLegs);
    }
    let mut f1 = vec![0i64; arity];
    f1[p] = 1;
    f1[q] = 1;
    let mut f2 = vec![0i64; arity];
    f2[q] = 1;
    f2[r] = 1;
    let conservation = Conservation { functionals: vec![f1, f2] };
    Ok(GradedOperator::new(arity, conservation, move |label: &MultiIndex| {
        let (i, j, k) = (label.entry(p), label.entry(q), label.entry(r));
        let mut out = VectorState::zero();
        for b in 0..=(i + j).min(j + k) {
            let a = i + j - b;
            let c = j + k - b;
            let coeff = r_element(&RIndex::new(a, b, c, i, j, k));
            if coeff.is_zero() {
                continue;
            }
            let mut entries = label.0.clone();
            entries[p] = a;
            entries[q] = b;
            entries[r] = c;
            out.add_term(MultiIndex::new(entries), coeff);
        }
        out
    }))
}

/// Apply the R operator to the named legs of a state.
pub fn r_apply(
    state: &VectorState<Scalar>,
    arity: usize,
    legs: (usize, usize, usize),
) -> Result<VectorState<Scalar>, ThreedimError> {
    let op = r_operator(arity, legs)?;
    Ok(apply_operator(&op, state).expect("R conserves its declared functionals"))
}

/// `R(R(v)) = v` for every basis vector with all three indices at most `max`.
pub fn check_involution(max: u32) -> Report {
    let mut report = Report::new("involution");
    for i in 0..=max {
        for j in 0..=max {
            for k in 0..=max {
                let basis = MultiIndex::new(vec![i, j, k]);
                let state = VectorState::basis(basis.clone(), Scalar::one());
                let once = r_apply(&state, 3, (0, 1, 2)).unwrap();
                let twice = r_apply(&once, 3, (0, 1, 2)).unwrap();
                let ok = twice == state;
                report.record(ok, || Failure {
                    indices: format!("{basis}"),
                    lhs: format!("{twice:?}"),
                    rhs: format!("{state:?}"),
                });
            }
        }
    }
    report
}

/// Index-reversal symmetry and the Pochhammer-weighted transpose symmetry,
/// checked for all index tuples bounded by `max` (cross-multiplied so no
/// fractions appear).
pub fn check_symmetries(max: u32) -> Report {
    let mut report = Report::new("symmetries");
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=max {
                for i in 0..=max {
                    for j in 0..=max {
                        for k in 0..=max {
                            let lhs = r_element_poly(a.into(), b.into(), c.into(), i.into(), j.into(), k.into());
                            let rev = r_element_poly(c.into(), b.into(), a.into(), k.into(), j.into(), i.into());
                            let ok_rev = lhs == rev;
                            report.record(ok_rev, || Failure {
                                indices: format!("({a},{b},{c};{i},{j},{k}) reversal"),
                                lhs: format!("{lhs}"),
                                rhs: format!("{rev}"),
                            });

                            let transpose = r_element_poly(i.into(), j.into(), k.into(), a.into(), b.into(), c.into());
                            let pout = &(&poch_self_poly(a.into(), 4) * &poch_self_poly(b.into(), 4))
                                * &poch_self_poly(c.into(), 4);
                            let pin = &(&poch_self_poly(i.into(), 4) * &poch_self_poly(j.into(), 4))
                                * &poch_self_poly(k.into(), 4);
                            let ok_tr = &lhs * &pout == &transpose * &pin;
                            report.record(ok_tr, || Failure {
                                indices: format!("({a},{b},{c};{i},{j},{k}) transpose"),
                                lhs: format!("{:?}", &lhs * &pout),
                                rhs: format!("{:?}", &transpose * &pin),
                            });
                        }
                    }
                }
            }
        }
    }
    report
}

/// Both sides of the tetrahedron equation applied to one basis vector of the
/// six-fold tensor power. Exact; every application is finite by conservation.
pub fn check_tetrahedron(input: [u32; 6]) -> Report {
    let mut report = Report::new("tetrahedron");
    let basis = MultiIndex::new(input.to_vec());
    let state = VectorState::basis(basis.clone(), Scalar::one());
    // Left side: R_124 R_135 R_236 R_456 (rightmost acts first).
    let mut lhs = state.clone();
    for legs in [(3, 4, 5), (1, 2, 5), (0, 2, 4), (0, 1, 3)] {
        lhs = r_apply(&lhs, 6, legs).unwrap();
    }
    // Right side: R_456 R_236 R_135 R_124.
    let mut rhs = state;
    for legs in [(0, 1, 3), (0, 2, 4), (1, 2, 5), (3, 4, 5)] {
        rhs = r_apply(&rhs, 6, legs).unwrap();
    }
    let ok = lhs == rhs;
    report.record(ok, || Failure {
        indices: format!("{basis}"),
        lhs: format!("{lhs:?}"),
        rhs: format!("{rhs:?}"),
    });
    report
}

/// Sweep the tetrahedron equation over all inputs with entries at most `max`.
pub fn check_tetrahedron_sweep(max: u32) -> Report {
    use rayon::prelude::*;
    let m = max + 1;
    let total = (m as u64).pow(6);
    let reports: Vec<Report> = (0..total)
        .into_par_iter()
        .map(|code| {
            let mut digits = [0u32; 6];
            let mut rest = code;
            for d in digits.iter_mut() {
                *d = (rest % u64::from(m)) as u32;
                rest /= u64::from(m);
            }
            check_tetrahedron(digits)
        })
        .collect();
    let mut report = Report::new("tetrahedron-sweep");
    for r in reports {
        report.absorb(r);
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundarySide {
    Ket,
    Bra,
}

/// A boundary vector: kind 1 occupies every Fock level, kind 2 only the even
/// ones. `cutoff` bounds the stored Fock level, `order` the series order of
/// the spectral coefficients.
#[derive(Clone, Copy, Debug)]
pub struct BoundaryVector {
    pub kind: u8,
    pub side: BoundarySide,
    pub cutoff: u32,
    pub order: u32,
}

/// Coefficient of `|m>` (or `<m|`) in the boundary vector, as a series in
/// its spectral variable. Kind 1: `z^m / (q; q)_m`. Kind 2: `z^(m/2) /
/// (q^4; q^4)_(m/2)` on even levels, zero on odd ones.
pub fn boundary_coeff(kind: u8, level: u32, order: u32) -> TruncatedSeries {
    assert!(kind == 1 || kind == 2, "boundary vector kind is 1 or 2");
    let (zexp, den) = match kind {
        1 => (level, poch_self_poly(i64::from(level), 2)),
        _ => {
            if level % 2 == 1 {
                return TruncatedSeries::zero(SeriesVars::Z, order);
            }
            (level / 2, poch_self_poly(i64::from(level / 2), 8))
        }
    };
    let coeff = &Scalar::one() / &Scalar::from_poly(den);
    TruncatedSeries::monomial(SeriesVars::Z, order, (zexp, 0), coeff)
}

/// Materialize a boundary vector as a state with series coefficients,
/// truncated at its Fock cutoff.
pub fn boundary_vector(spec: &BoundaryVector) -> VectorState<TruncatedSeries> {
    let mut out = VectorState::zero();
    for m in 0..=spec.cutoff {
        let c = boundary_coeff(spec.kind, m, spec.order);
        if !c.is_zero() {
            out.add_term(MultiIndex::new(vec![m]), c);
        }
    }
    out
}

/// Exact rational coefficient of the triple boundary vector
/// `chi_s(x) (x) chi_s(xy) (x) chi_s(y)` at the level triple, together with
/// its `(x, y)` monomial exponents. `None` when the triple is off-support.
fn chi_triple_coeff(kind: u8, levels: (u32, u32, u32)) -> Option<((u32, u32), Scalar)> {
    let (l1, l2, l3) = levels;
    let single = |level: u32| -> Option<(u32, Scalar)> {
        match kind {
            1 => Some((level, &Scalar::one() / &Scalar::from_poly(poch_self_poly(i64::from(level), 2)))),
            _ => {
                if level % 2 == 1 {
                    None
                } else {
                    Some((
                        level / 2,
                        &Scalar::one() / &Scalar::from_poly(poch_self_poly(i64::from(level / 2), 8)),
                    ))
                }
            }
        }
    };
    let (e1, c1) = single(l1)?;
    let (e2, c2) = single(l2)?;
    let (e3, c3) = single(l3)?;
    // x^e1 (xy)^e2 y^e3
    Some(((e1 + e2, e2 + e3), &(&c1 * &c2) * &c3))
}

/// One component of the eigen-relation fixed by a boundary vector: the
/// `(a,b,c)` component of `R |chi_s(x,y)>` minus the same component of
/// `|chi_s(x,y)>` must vanish identically as a bivariate polynomial (the bra
/// case pairs from the left instead). Each component is a finite sum by
/// conservation.
pub fn check_boundary_eigen(
    kind: u8,
    side: BoundarySide,
    component: (u32, u32, u32),
    orders: (u32, u32),
) -> Report {
    let mut report = Report::new(match side {
        BoundarySide::Ket => "boundary-ket",
        BoundarySide::Bra => "boundary-bra",
    });
    // Accumulate both sides as maps (x-exp, y-exp) -> Scalar.
    let mut lhs: BTreeMap<(u32, u32), Scalar> = BTreeMap::new();
    let mut rhs: BTreeMap<(u32, u32), Scalar> = BTreeMap::new();
    let add = |map: &mut BTreeMap<(u32, u32), Scalar>, exp: (u32, u32), c: Scalar| {
        if c.is_zero() {
            return;
        }
        let entry = map.entry(exp).or_insert_with(Scalar::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            map.remove(&exp);
        }
    };
    let (a, b, c) = component;
    match side {
        BoundarySide::Ket => {
            // Sum over in-triples (i, j, k) with i+j = a+b, j+k = b+c.
            for j in 0..=(a + b).min(b + c) {
                let i = a + b - j;
                let k = b + c - j;
                if let Some((exp, chi)) = chi_triple_coeff(kind, (i, j, k)) {
                    let r = r_element(&RIndex::new(a, b, c, i, j, k));
                    add(&mut lhs, exp, &r * &chi);
                }
            }
            if let Some((exp, chi)) = chi_triple_coeff(kind, (a, b, c)) {
                add(&mut rhs, exp, chi);
            }
        }
        BoundarySide::Bra => {
            // Here the component names the in-triple; sum over out-triples.
            let (i, j, k) = (a, b, c);
            let weighted = |l1: u32, l2: u32, l3: u32| -> LaurentPoly {
                &(&poch_self_poly(i64::from(l1), 4) * &poch_self_poly(i64::from(l2), 4))
                    * &poch_self_poly(i64::from(l3), 4)
            };
            for b_out in 0..=(i + j).min(j + k) {
                let a_out = i + j - b_out;
                let c_out = j + k - b_out;
                if let Some((exp, chi)) = chi_triple_coeff(kind, (a_out, b_out, c_out)) {
                    let r = r_element(&RIndex::new(a_out, b_out, c_out, i, j, k));
                    let w = Scalar::from_poly(weighted(a_out, b_out, c_out));
                    add(&mut lhs, exp, &(&r * &chi) * &w);
                }
            }
            if let Some((exp, chi)) = chi_triple_coeff(kind, (i, j, k)) {
                add(&mut rhs, exp, &chi * &Scalar::from_poly(weighted(i, j, k)));
            }
        }
    }
    for exp in lhs.keys().chain(rhs.keys()) {
        assert!(exp.0 <= orders.0 && exp.1 <= orders.1, "component exceeds requested bivariate orders");
    }
    let ok = lhs == rhs;
    report.record(ok, || Failure {
        indices: format!("kind {kind}, component ({a},{b},{c})"),
        lhs: format!("{lhs:?}"),
        rhs: format!("{rhs:?}"),
    });
    report
}

/// Sweep the boundary eigen-relations over all components of total degree at
/// most `max_degree`, both kinds, both sides.
pub fn check_boundary_sweep(max_degree: u32, orders: (u32, u32)) -> Report {
    use rayon::prelude::*;
    let mut components = Vec::new();
    for a in 0..=max_degree {
        for b in 0..=(max_degree - a) {
            for c in 0..=(max_degree - a - b) {
                components.push((a, b, c));
            }
        }
    }
    let reports: Vec<Report> = components
        .par_iter()
        .flat_map(|&comp| {
            [1u8, 2u8]
                .into_iter()
                .flat_map(move |kind| {
                    [BoundarySide::Ket, BoundarySide::Bra]
                        .into_iter()
                        .map(move |side| check_boundary_eigen(kind, side, comp, orders))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let mut report = Report::new("boundary");
    for r in reports {
        report.absorb(r);
    }
    report
}

/// `i^k` as a Gaussian-rational unit.
pub(crate) fn i_pow(k: i64) -> GaussianRational {
    let mut out = GaussianRational::one();
    let unit = GaussianRational::i();
    for _ in 0..k.rem_euclid(4) {
        out = &out * &unit;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qsymbols::poch;

    fn scal(p: LaurentPoly) -> Scalar {
        Scalar::from_poly(p)
    }

    #[test]
    fn vacuum_element_is_one() {
        assert!(r_element(&RIndex::new(0, 0, 0, 0, 0, 0)).is_one());
    }

    #[test]
    fn element_1_1_k() {
        // R^{1,1,k}_{1,1,k} = 1 - (1+q^2) q^(2k)
        for k in 0..=4u32 {
            let got = r_element(&RIndex::new(1, 1, k, 1, 1, k));
            let expect = &Scalar::one()
                - &(&(&Scalar::one() + &Scalar::q_pow(2)) * &Scalar::q_pow(2 * i64::from(k)));
            assert_eq!(got, expect, "k={k}");
        }
    }

    #[test]
    fn element_b_zero_row() {
        // R^{a,0,c}_{i,j,k} = q^(ik) delta_(a,i+j) delta_(c,j+k)
        for i in 0..=3u32 {
            for j in 0..=3u32 {
                for k in 0..=3u32 {
                    let got = r_element(&RIndex::new(i + j, 0, j + k, i, j, k));
                    assert_eq!(got, Scalar::q_pow(i64::from(i) * i64::from(k)));
                }
            }
        }
    }

    #[test]
    fn element_j_zero_row() {
        // R^{a,b,c}_{i,0,k} = q^(ac) (q^2)_i (q^2)_k / ((q^2)_a (q^2)_b (q^2)_c)
        for a in 0..=3u32 {
            for b in 0..=3u32 {
                for c in 0..=3u32 {
                    let (i, k) = (a + b, b + c);
                    let got = r_element(&RIndex::new(a, b, c, i, 0, k));
                    let num = &scal(poch_self_poly(i64::from(i), 4)) * &scal(poch_self_poly(i64::from(k), 4));
                    let den = &(&scal(poch_self_poly(i64::from(a), 4)) * &scal(poch_self_poly(i64::from(b), 4)))
                        * &scal(poch_self_poly(i64::from(c), 4));
                    let expect = &(&Scalar::q_pow(i64::from(a) * i64::from(c)) * &num) / &den;
                    assert_eq!(got, expect, "a={a} b={b} c={c}");
                }
            }
        }
    }

    #[test]
    fn element_i_zero_and_a_zero_rows() {
        // R^{a,b,c}_{0,j,k} = (-1)^b q^(b(k+1)) binom(j, b)_(q^2), with a+b=j, b+c=j+k.
        for j in 0..=4u32 {
            for b in 0..=j {
                for k in 0..=3u32 {
                    let (a, c) = (j - b, j + k - b);
                    let got = r_element(&RIndex::new(a, b, c, 0, j, k));
                    let mut expect = &Scalar::v_pow(2 * i64::from(b) * (i64::from(k) + 1))
                        * &scal(gauss_binom_poly(i64::from(j), i64::from(b), 4));
                    if b % 2 == 1 {
                        expect = -&expect;
                    }
                    assert_eq!(got, expect, "j={j} b={b} k={k}");
                }
            }
        }
        // R^{0,b,c}_{i,j,k} = (-1)^j q^(j(c+1)) (q^2)_k/(q^2)_c with b=i+j, c=k-i.
        for i in 0..=3u32 {
            for j in 0..=3u32 {
                for k in i..=3u32 {
                    let (b, c) = (i + j, k - i);
                    let got = r_element(&RIndex::new(0, b, c, i, j, k));
                    let ratio = &scal(poch_self_poly(i64::from(k), 4)) / &scal(poch_self_poly(i64::from(c), 4));
                    let mut expect = &Scalar::v_pow(2 * i64::from(j) * (i64::from(c) + 1)) * &ratio;
                    if j % 2 == 1 {
                        expect = -&expect;
                    }
                    assert_eq!(got, expect, "i={i} j={j} k={k}");
                }
            }
        }
    }

    #[test]
    fn conservation_sweep() {
        for a in 0..=5i64 {
            for b in 0..=5i64 {
                for c in 0..=5i64 {
                    for i in 0..=5i64 {
                        for j in 0..=5i64 {
                            for k in 0..=5i64 {
                                if a + b != i + j || b + c != j + k {
                                    assert!(r_element_poly(a, b, c, i, j, k).is_zero());
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn elements_are_polynomial() {
        for a in 0..=4u32 {
            for b in 0..=4u32 {
                for c in 0..=4u32 {
                    for j in 0..=b.min(4) {
                        let i = a + b - j;
                        if b + c < j {
                            continue;
                        }
                        let k = b + c - j;
                        let s = r_element(&RIndex::new(a, b, c, i, j, k));
                        assert!(s.is_laurent(), "denominator appeared at ({a},{b},{c};{i},{j},{k})");
                    }
                }
            }
        }
    }

    #[test]
    fn r_apply_small_cases() {
        let vac = VectorState::basis(MultiIndex::new(vec![0, 0, 0]), Scalar::one());
        assert_eq!(r_apply(&vac, 3, (0, 1, 2)).unwrap(), vac);

        // |1,0,0>: the only conservation-feasible out-triple is (1,0,0), coefficient q^0.
        let s100 = VectorState::basis(MultiIndex::new(vec![1, 0, 0]), Scalar::one());
        assert_eq!(r_apply(&s100, 3, (0, 1, 2)).unwrap(), s100);

        // |0,1,0>: out-triples (1,0,1) and (0,1,0).
        let s010 = VectorState::basis(MultiIndex::new(vec![0, 1, 0]), Scalar::one());
        let out = r_apply(&s010, 3, (0, 1, 2)).unwrap();
        assert_eq!(out.len(), 2);
        assert_eq!(
            out.coeff(&MultiIndex::new(vec![1, 0, 1])).unwrap(),
            &r_element(&RIndex::new(1, 0, 1, 0, 1, 0))
        );
        assert_eq!(
            out.coeff(&MultiIndex::new(vec![0, 1, 0])).unwrap(),
            &r_element(&RIndex::new(0, 1, 0, 0, 1, 0))
        );
    }

    #[test]
    fn leg_collision_is_an_error() {
        assert!(r_operator(3, (0, 0, 1)).is_err());
    }

    #[test]
    fn involution_small() {
        assert!(check_involution(2).pass);
    }

    #[test]
    fn symmetries_small() {
        assert!(check_symmetries(2).pass);
    }

    #[test]
    fn tetrahedron_single_inputs() {
        assert!(check_tetrahedron([0, 0, 0, 0, 0, 0]).pass);
        assert!(check_tetrahedron([1, 0, 0, 0, 0, 0]).pass);
        assert!(check_tetrahedron([1, 2, 0, 1, 0, 1]).pass);
    }

    #[test]
    fn boundary_vector_coefficients() {
        let spec = BoundaryVector { kind: 1, side: BoundarySide::Ket, cutoff: 3, order: 6 };
        let v = boundary_vector(&spec);
        let c1 = v.coeff(&MultiIndex::new(vec![1])).unwrap();
        // z/(1-q)
        let expect = TruncatedSeries::monomial(
            SeriesVars::Z,
            6,
            (1, 0),
            &Scalar::one() / &(&Scalar::one() - &Scalar::q()),
        );
        assert_eq!(c1, &expect);

        let spec2 = BoundaryVector { kind: 2, side: BoundarySide::Ket, cutoff: 4, order: 6 };
        let v2 = boundary_vector(&spec2);
        assert!(v2.coeff(&MultiIndex::new(vec![1])).is_none());
        let c2 = v2.coeff(&MultiIndex::new(vec![2])).unwrap();
        // z/(1 - q^4)
        let expect2 = TruncatedSeries::monomial(
            SeriesVars::Z,
            6,
            (1, 0),
            &Scalar::one() / &poch(&Scalar::q_pow(4), &Scalar::q_pow(4), 1).unwrap(),
        );
        assert_eq!(c2, &expect2);
    }

    #[test]
    fn boundary_eigen_components() {
        assert!(check_boundary_eigen(1, BoundarySide::Ket, (0, 0, 0), (8, 8)).pass);
        assert!(check_boundary_eigen(1, BoundarySide::Ket, (1, 1, 0), (8, 8)).pass);
        assert!(check_boundary_eigen(2, BoundarySide::Ket, (2, 0, 2), (8, 8)).pass);
        assert!(check_boundary_eigen(1, BoundarySide::Bra, (1, 0, 1), (8, 8)).pass);
        assert!(check_boundary_eigen(2, BoundarySide::Bra, (2, 2, 0), (8, 8)).pass);
    }
}
