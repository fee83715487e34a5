//! Morse stratification engine.
//!
//! The space of Higgs pairs is stratified by the degree `d` of the
//! destabilising `Phi`-invariant line subbundle. `X_d` is the union of the
//! semistable locus with the strata of index `<= d`, and `X_0` is the
//! semistable locus itself. Each attached stratum changes the equivariant
//! Betti numbers by a shifted difference of two known series:
//!
//! ```text
//! P(X_d) - P(X_{d-1}) = t^{2 mu_d} (P(eta_d) - P(T_d))
//! ```
//!
//! where `eta_d` is the critical set and `T_d` the correction locus, which is
//! empty once `n_d = 2g - 2 + d_E - 2d` is negative. Summing over all strata
//! telescopes to the classifying space of the gauge group.

use num::{BigInt, Signed};

use crate::cohomology::{
    bg_series, bu1_series, jacobian_series, sym_cover_series, sym_series, Determinant, SurfaceSpec,
};
use crate::error::{Error, Result};
use crate::series::{Poly, RatFn, TruncSeries};

/// Which moduli problem is being computed: genus, degree of the bundle,
/// determinant variant and truncation order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModuliSpec {
    surface: SurfaceSpec,
    degree: u8,
    determinant: Determinant,
    truncation: usize,
}

impl ModuliSpec {
    pub fn new(genus: u32, degree: u8, determinant: Determinant, truncation: usize) -> Result<Self> {
        let surface = SurfaceSpec::new(genus)?;
        if degree > 1 {
            return Err(Error::Range {
                what: "bundle degree",
                range: "{0, 1}".into(),
                value: degree.into(),
            });
        }
        if truncation < 1 {
            return Err(Error::Range {
                what: "truncation order",
                range: "N >= 1".into(),
                value: truncation as i64,
            });
        }
        Ok(ModuliSpec {
            surface,
            degree,
            determinant,
            truncation,
        })
    }

    /// Uses [`default_truncation`] for the order.
    pub fn with_default_truncation(genus: u32, degree: u8, determinant: Determinant) -> Result<Self> {
        Self::new(genus, degree, determinant, default_truncation(genus, degree))
    }

    pub fn surface(&self) -> SurfaceSpec {
        self.surface
    }

    pub fn genus(&self) -> u32 {
        self.surface.genus()
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn determinant(&self) -> Determinant {
        self.determinant
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn with_truncation(&self, truncation: usize) -> Result<Self> {
        Self::new(self.genus(), self.degree, self.determinant, truncation)
    }
}

/// `6g + 10` in degree zero, `12g - 8` in degree one (past the real
/// dimension of the smooth moduli space, so its finite support is visible).
pub fn default_truncation(genus: u32, degree: u8) -> usize {
    let g = genus as usize;
    if degree == 0 {
        6 * g + 10
    } else {
        (12 * g).saturating_sub(8).max(1)
    }
}

/// Index data of the `d`-th stratum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StratumIndex {
    pub d: u32,
    /// Rank of the part of the negative normal bundle with well-defined
    /// index, `g - 1 + 2d - d_E`.
    pub mu: u32,
    /// Symmetric-product index `2g - 2 + d_E - 2d` of the correction locus;
    /// negative when that locus is empty.
    pub n: i64,
}

impl StratumIndex {
    /// Power of `t` by which the stratum's contribution is shifted.
    pub fn shift(&self) -> usize {
        2 * self.mu as usize
    }

    pub fn correction_index(&self) -> Option<usize> {
        usize::try_from(self.n).ok()
    }
}

pub fn mu_index(spec: &ModuliSpec, d: u32) -> StratumIndex {
    assert!(d >= 1, "strata are indexed from d = 1");
    let g = spec.genus() as i64;
    let de = spec.degree() as i64;
    let d64 = d as i64;
    StratumIndex {
        d,
        mu: (g - 1 + 2 * d64 - de) as u32,
        n: 2 * g - 2 + de - 2 * d64,
    }
}

/// Smallest `d` with `2 mu_d > N`; strata from this one on cannot affect
/// any coefficient up to `t^N`.
pub fn d_max(spec: &ModuliSpec) -> u32 {
    let mut d = 1;
    while mu_index(spec, d).shift() <= spec.truncation() {
        d += 1;
    }
    d
}

/// Strata visible at the spec's truncation, `1..d_max`.
pub fn visible_strata(spec: &ModuliSpec) -> impl Iterator<Item = StratumIndex> + '_ {
    (1..d_max(spec)).map(move |d| mu_index(spec, d))
}

/// Strata with a nonempty correction locus, `d = 1..=g-1`.
fn correction_strata(spec: &ModuliSpec) -> impl Iterator<Item = StratumIndex> + '_ {
    (1..spec.genus()).map(move |d| mu_index(spec, d))
}

fn one_plus_t() -> Poly {
    Poly::from_ints(&[1, 1])
}

fn one_minus_t2() -> Poly {
    Poly::from_ints(&[1, 0, -1])
}

/// Per-stratum term of the unstable sum as it appears in the closed
/// statements: `(1+t)^{2g}/(1-t^2)` for fixed determinant in both degrees,
/// `(1+t)^{4g}/(1-t^2)^2` for non-fixed degree zero and `(1+t)^{4g}/(1-t^2)`
/// for non-fixed degree one (which already absorbs the `BU(1)` factor
/// dropped from the ordinary moduli space).
pub fn unstable_factor(spec: &ModuliSpec) -> RatFn {
    let two_g = spec.surface().b1();
    match (spec.determinant(), spec.degree()) {
        (Determinant::Fixed, _) => RatFn::new(one_plus_t().pow(two_g), one_minus_t2()),
        (Determinant::NonFixed, 0) => RatFn::new(one_plus_t().pow(2 * two_g), one_minus_t2().pow(2)),
        (Determinant::NonFixed, _) => RatFn::new(one_plus_t().pow(2 * two_g), one_minus_t2()),
    }
}

/// `sum_{d >= 1} t^{2 mu_d} U` truncated at `t^N`, summed stratum by stratum.
pub fn unstable_sum(spec: &ModuliSpec) -> TruncSeries {
    let n = spec.truncation();
    let term = unstable_factor(spec)
        .expand(n)
        .expect("denominator is a power of 1 - t^2");
    visible_strata(spec)
        .map(|idx| term.shift(idx.shift()))
        .fold(TruncSeries::zero(n), |acc, s| &acc + &s)
}

/// The same sum resummed as a geometric series: `t^{2 mu_1} U / (1 - t^4)`.
pub fn unstable_sum_resummed(spec: &ModuliSpec) -> TruncSeries {
    let n = spec.truncation();
    let geometric = RatFn::new(Poly::one(), Poly::from_ints(&[1, 0, 0, 0, -1]));
    (&unstable_factor(spec) * &geometric)
        .expand(n)
        .expect("denominator has constant term 1")
        .shift(mu_index(spec, 1).shift())
}

/// The correction term `C_d` attached to stratum `d`, before the
/// `t^{2 mu_d}` shift, in the form used by the closed statements.
pub fn correction_term(spec: &ModuliSpec, idx: StratumIndex) -> Result<TruncSeries> {
    let order = spec.truncation();
    let s = spec.surface();
    let Some(n) = idx.correction_index() else {
        return Ok(TruncSeries::zero(order));
    };
    Ok(match (spec.determinant(), spec.degree()) {
        (Determinant::Fixed, _) => sym_cover_series(s, n, order)?,
        (Determinant::NonFixed, 0) => {
            let factor = RatFn::new(one_plus_t().pow(s.b1()), one_minus_t2()).expand(order)?;
            &sym_series(s, n, order) * &factor
        }
        (Determinant::NonFixed, _) => {
            &sym_series(s, n, order) * &TruncSeries::from_poly(&one_plus_t().pow(s.b1()), order)
        }
    })
}

/// `sum_{d=1}^{g-1} t^{2 mu_d} C_d`.
pub fn correction_sum(spec: &ModuliSpec) -> Result<TruncSeries> {
    let mut acc = TruncSeries::zero(spec.truncation());
    for idx in correction_strata(spec) {
        acc = &acc + &correction_term(spec, idx)?.shift(idx.shift());
    }
    Ok(acc)
}

/// The right-hand side of the closed stratified formula:
/// `P(BG) - unstable + correction`, with `P(BG)` multiplied by `(1 - t^2)`
/// for non-fixed determinant in degree one. For that case this is the
/// Poincaré series of the ordinary moduli space; otherwise it is the
/// equivariant series of the semistable locus.
pub fn stratified_display(spec: &ModuliSpec) -> Result<TruncSeries> {
    let order = spec.truncation();
    let mut bg = bg_series(spec.surface(), spec.determinant(), order);
    if needs_bu1_factor(spec) {
        bg = &bg * &TruncSeries::from_poly(&one_minus_t2(), order);
    }
    Ok(&(&bg - &unstable_sum(spec)) + &correction_sum(spec)?)
}

fn needs_bu1_factor(spec: &ModuliSpec) -> bool {
    spec.determinant() == Determinant::NonFixed && spec.degree() == 1
}

/// Equivariant Poincaré series of the semistable locus `B^ss`.
///
/// Errors if a coefficient is negative or fractional, which can only mean an
/// implementation bug since the result is the Poincaré series of a space.
pub fn semistable_series(spec: &ModuliSpec) -> Result<TruncSeries> {
    let display = stratified_display(spec)?;
    let series = if needs_bu1_factor(spec) {
        // U(1) scalars act trivially on B^ss, so the equivariant series is the
        // ordinary one times P(BU(1)).
        &display * &bu1_series(spec.truncation())
    } else {
        display
    };
    series.betti_numbers("semistable series")?;
    Ok(series)
}

/// Poincaré series reported for the moduli space.
///
/// In degree one this is the ordinary Poincaré polynomial of the smooth
/// moduli space. In degree zero the moduli space is singular and the
/// equivariant series of `B^ss` is returned unchanged.
pub fn moduli_series(spec: &ModuliSpec) -> Result<TruncSeries> {
    let semistable = semistable_series(spec)?;
    if !needs_bu1_factor(spec) {
        return Ok(semistable);
    }
    let series = &semistable * &TruncSeries::from_poly(&one_minus_t2(), spec.truncation());
    series.betti_numbers("moduli series")?;
    Ok(series)
}

/// Generating function of `dim H^k(X_d) - dim H^k(X_{d-1})`, assembled from
/// the critical set and the correction locus of stratum `d`.
///
/// Fixed determinant: `eta_d ~ J_d x BU(1)` and `T_d ~ S~^n M`.
/// Non-fixed: `eta_d ~ J_d x J_n x BU(1)^2` and `T_d ~ S^n M x J_d x BU(1)`.
pub fn stratum_difference(spec: &ModuliSpec, d: u32) -> Result<TruncSeries> {
    let order = spec.truncation();
    let idx = mu_index(spec, d);
    if idx.shift() > order {
        return Ok(TruncSeries::zero(order));
    }
    let s = spec.surface();
    let jac = jacobian_series(s, order);
    let bu1 = bu1_series(order);
    let (critical, correction) = match spec.determinant() {
        Determinant::Fixed => {
            let critical = &jac * &bu1;
            let correction = match idx.correction_index() {
                Some(n) => sym_cover_series(s, n, order)?,
                None => TruncSeries::zero(order),
            };
            (critical, correction)
        }
        Determinant::NonFixed => {
            let critical = &(&jac * &jac) * &(&bu1 * &bu1);
            let correction = match idx.correction_index() {
                Some(n) => &(&sym_series(s, n, order) * &jac) * &bu1,
                None => TruncSeries::zero(order),
            };
            (critical, correction)
        }
    };
    Ok((&critical - &correction).shift(idx.shift()))
}

/// `P(X_0), P(X_1), ..., P(X_{d_max - 1})`. The last entry agrees with the
/// classifying space up to `t^N`.
pub fn stratum_chain(spec: &ModuliSpec) -> Result<Vec<TruncSeries>> {
    let mut chain = vec![semistable_series(spec)?];
    for d in 1..d_max(spec) {
        let next = chain.last().expect("chain starts nonempty") + &stratum_difference(spec, d)?;
        next.betti_numbers(&format!("X_{d}"))?;
        chain.push(next);
    }
    Ok(chain)
}

/// Equivariant Poincaré series of `X_d`; `d = 0` is the semistable locus.
pub fn stratum_space_series(spec: &ModuliSpec, d: u32) -> Result<TruncSeries> {
    let mut acc = semistable_series(spec)?;
    for l in 1..=d {
        acc = &acc + &stratum_difference(spec, l)?;
        acc.betti_numbers(&format!("X_{l}"))?;
    }
    Ok(acc)
}

/// A degree where attaching stratum `d` lowers a Betti number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub d: u32,
    pub degree: usize,
    /// `b_k(X_{d-1})`
    pub before: BigInt,
    /// `b_k(X_d)`
    pub after: BigInt,
}

/// Outcome of comparing consecutive spaces in the stratification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monotonicity {
    /// `(d, passed)` for each attached stratum.
    pub per_stratum: Vec<(u32, bool)>,
    pub violations: Vec<Violation>,
}

impl Monotonicity {
    pub fn all_pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `b_k(X_{d-1}) <= b_k(X_d)` for every stratum and every `k <= N`.
///
/// Surjectivity of the hyperkähler Kirwan map forces this for non-fixed
/// determinant. For fixed determinant the list of violations witnesses its
/// failure.
pub fn kirwan_monotonicity_check(spec: &ModuliSpec) -> Result<Monotonicity> {
    let chain = stratum_chain(spec)?;
    let mut per_stratum = Vec::new();
    let mut violations = Vec::new();
    for (d, pair) in (1u32..).zip(chain.windows(2)) {
        let before = pair[0].betti_numbers("X_{d-1}")?;
        let after = pair[1].betti_numbers("X_d")?;
        let mut passed = true;
        for (k, (b, a)) in before.iter().zip(&after).enumerate() {
            if a < b {
                passed = false;
                violations.push(Violation {
                    d,
                    degree: k,
                    before: b.clone(),
                    after: a.clone(),
                });
            }
        }
        per_stratum.push((d, passed));
    }
    Ok(Monotonicity {
        per_stratum,
        violations,
    })
}

/// The `Gamma_2`-invariant part of the semistable series for fixed
/// determinant: the covered symmetric products are replaced by the plain
/// ones, dropping the anti-invariant classes.
pub fn invariant_part_series(spec: &ModuliSpec) -> Result<TruncSeries> {
    if spec.determinant() != Determinant::Fixed {
        return Err(Error::Unsupported(
            "the invariant part is defined for fixed determinant only",
        ));
    }
    let order = spec.truncation();
    let s = spec.surface();
    let mut acc = &bg_series(s, Determinant::Fixed, order) - &unstable_sum(spec);
    for idx in correction_strata(spec) {
        let n = idx.correction_index().expect("d <= g - 1 has n >= 0");
        acc = &acc + &sym_series(s, n, order).shift(idx.shift());
    }
    acc.betti_numbers("invariant part")?;
    Ok(acc)
}

/// Degrees `k <= N` with `lhs_k > rhs_k`, as `(k, lhs_k, rhs_k)`.
pub fn coefficientwise_excess(
    lhs: &TruncSeries,
    rhs: &TruncSeries,
) -> Vec<(usize, num::BigRational, num::BigRational)> {
    lhs.coeffs()
        .iter()
        .zip(rhs.coeffs())
        .enumerate()
        .filter(|(_, (a, b))| (*a - *b).is_positive())
        .map(|(k, (a, b))| (k, a.clone(), b.clone()))
        .collect()
}
