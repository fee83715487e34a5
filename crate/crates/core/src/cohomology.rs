//! Poincaré series of the spaces the stratified formulas are assembled from.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{binomial, BiSeries, Poly, RatFn, TruncSeries};

/// A compact Riemann surface, recorded by its genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceSpec {
    genus: u32,
}

impl SurfaceSpec {
    /// The stratification sums run over `d = 1..g-1`, so `g >= 2`.
    pub fn new(genus: u32) -> Result<Self> {
        if genus < 2 {
            return Err(Error::Range {
                what: "genus",
                range: "g >= 2".into(),
                value: genus.into(),
            });
        }
        Ok(SurfaceSpec { genus })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// `2g`, the first Betti number of the curve.
    pub fn b1(&self) -> u32 {
        2 * self.genus
    }
}

/// Fixed (`SU(2)` gauge group) or non-fixed (`U(2)`) determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Determinant {
    Fixed,
    NonFixed,
}

impl fmt::Display for Determinant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Determinant::Fixed => "fixed",
            Determinant::NonFixed => "non-fixed",
        })
    }
}

impl FromStr for Determinant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fixed" => Ok(Determinant::Fixed),
            "non-fixed" | "nonfixed" | "non_fixed" => Ok(Determinant::NonFixed),
            other => Err(Error::Usage(format!(
                "unknown determinant '{other}', expected 'fixed' or 'non-fixed'"
            ))),
        }
    }
}

/// `(1 + t)^{2g}`: the Jacobian `J_d(M)` is a real `2g`-torus for every `d`.
pub fn jacobian_series(s: SurfaceSpec, order: usize) -> TruncSeries {
    TruncSeries::from_poly(&Poly::from_ints(&[1, 1]).pow(s.b1()), order)
}

/// `1 / (1 - t^2)`.
pub fn bu1_series(order: usize) -> TruncSeries {
    TruncSeries::from_coeffs(
        (0..=order)
            .map(|k| if k % 2 == 0 { BigRational::one() } else { num::zero() })
            .collect(),
        order,
    )
}

/// The classifying space of the gauge group as a rational function in `t`.
pub fn bg_rational(s: SurfaceSpec, det: Determinant) -> RatFn {
    let two_g = s.b1();
    let one_minus_t2 = Poly::from_ints(&[1, 0, -1]);
    let one_minus_t4 = Poly::from_ints(&[1, 0, 0, 0, -1]);
    let cubic = Poly::from_ints(&[1, 0, 0, 1]).pow(two_g);
    match det {
        Determinant::Fixed => RatFn::new(cubic, &one_minus_t2 * &one_minus_t4),
        Determinant::NonFixed => RatFn::new(
            &Poly::from_ints(&[1, 1]).pow(two_g) * &cubic,
            &one_minus_t2.pow(2) * &one_minus_t4,
        ),
    }
}

/// Equivariant Poincaré series of the full space of Higgs pairs, i.e. of the
/// classifying space of the gauge group.
pub fn bg_series(s: SurfaceSpec, det: Determinant, order: usize) -> TruncSeries {
    bg_rational(s, det)
        .expand(order)
        .expect("gauge group denominators have constant term 1")
}

/// The MacDonald generating function `(1 + x t)^{2g} / ((1 - x)(1 - x t^2))`
/// truncated at `x^x_order`, `t^t_order`.
pub fn macdonald_generating_function(s: SurfaceSpec, x_order: usize, t_order: usize) -> BiSeries {
    let num = BiSeries::binomial_power(1, 1, 1, s.b1(), x_order, t_order);
    let den = &BiSeries::binomial_power(-1, 1, 0, 1, x_order, t_order)
        * &BiSeries::binomial_power(-1, 1, 2, 1, x_order, t_order);
    &num * &den.inv().expect("1 - x has invertible constant term")
}

/// Poincaré series of the symmetric product `S^n M`, read off as the
/// coefficient of `x^n` in the MacDonald generating function.
///
/// The result is a polynomial of degree `2n`, so only `t^0..=t^{min(N, 2n)}`
/// is computed and the rest is padded with zeros.
pub fn sym_series(s: SurfaceSpec, n: usize, order: usize) -> TruncSeries {
    let t_order = order.min(2 * n);
    let f = macdonald_generating_function(s, n, t_order);
    let coeff = f.x_coeff(n).expect("x-order equals n");
    TruncSeries::from_coeffs(coeff.coeffs().to_vec(), order)
}

/// Poincaré series of `S^n M` by direct enumeration of a monomial basis.
///
/// Cohomology of `S^n M` is spanned by `xi_A * eta^j` where `A` is a set of
/// `a` of the `2g` degree-one generators and `eta` has degree two, subject to
/// `a + j <= n`. So `b_k = sum over a + 2j = k, a + j <= n of C(2g, a)`.
pub fn sym_oracle(s: SurfaceSpec, n: usize) -> TruncSeries {
    let two_g = s.b1() as usize;
    let top = 2 * n;
    let mut b = vec![BigInt::from(0); top + 1];
    for a in 0..=two_g.min(n) {
        for j in 0..=(n - a) {
            b[a + 2 * j] += binomial(two_g as u64, a as i64);
        }
    }
    TruncSeries::from_coeffs(b.into_iter().map(BigRational::from_integer).collect(), top)
}

fn check_cover_range(s: SurfaceSpec, n: usize) -> Result<()> {
    let max = 2 * s.genus() as usize - 2;
    if n > max {
        return Err(Error::Range {
            what: "covered symmetric product index",
            range: format!("0 <= n <= 2g-2 = {max}"),
            value: n as i64,
        });
    }
    Ok(())
}

/// Dimension of the anti-invariant cohomology of the `2^{2g}`-fold cover of
/// `S^n M`, all of which sits in degree `n`: `(2^{2g} - 1) C(2g-2, n)`.
pub fn anti_invariant_dim(s: SurfaceSpec, n: usize) -> Result<BigInt> {
    check_cover_range(s, n)?;
    let sheets_minus_one = (BigInt::one() << s.b1()) - 1;
    Ok(sheets_minus_one * binomial(s.b1() as u64 - 2, n as i64))
}

/// Poincaré series of the covered symmetric product `S~^n M`.
pub fn sym_cover_series(s: SurfaceSpec, n: usize, order: usize) -> Result<TruncSeries> {
    let extra = anti_invariant_dim(s, n)?;
    let bump = TruncSeries::monomial(BigRational::from_integer(extra), n, order);
    Ok(&sym_series(s, n, order) + &bump)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn g(genus: u32) -> SurfaceSpec {
        SurfaceSpec::new(genus).unwrap()
    }

    fn ts(c: &[i64], n: usize) -> TruncSeries {
        TruncSeries::from_ints(c, n)
    }

    #[test]
    fn genus_below_two_is_rejected() {
        assert!(SurfaceSpec::new(1).is_err());
        assert!(SurfaceSpec::new(0).is_err());
    }

    #[test]
    fn jacobian() {
        assert_eq!(jacobian_series(g(2), 6), ts(&[1, 4, 6, 4, 1], 6));
        assert_eq!(jacobian_series(g(3), 6).coeff(1), rat(6));
        assert_eq!(jacobian_series(g(2), 6).coeff(5), rat(0));
    }

    #[test]
    fn bu1() {
        assert_eq!(bu1_series(6), ts(&[1, 0, 1, 0, 1, 0, 1], 6));
        assert_eq!(bu1_series(6).coeff(3), rat(0));
        assert_eq!(bu1_series(0), TruncSeries::one(0));
    }

    #[test]
    fn classifying_space() {
        let fixed = bg_series(g(2), Determinant::Fixed, 10);
        assert_eq!(fixed.coeff(5), rat(4));
        // (1 + 4t^3 + 6t^6) against partitions into {2,4}: 1 1 2 2 3 3 4 ...
        // t^6: 6*1 + 4*0 (t^3 * odd) + 1*p(6)=2  =>  8
        assert_eq!(fixed.coeff(6), rat(8));
        for genus in 2..6 {
            for det in [Determinant::Fixed, Determinant::NonFixed] {
                assert_eq!(bg_series(g(genus), det, 4).coeff(0), rat(1));
            }
        }
    }

    #[test]
    fn symmetric_products_small() {
        assert_eq!(sym_series(g(2), 0, 6), TruncSeries::one(6));
        assert_eq!(sym_series(g(2), 1, 6), ts(&[1, 4, 1], 6));
        assert_eq!(sym_series(g(2), 2, 6), ts(&[1, 4, 7, 4, 1], 6));
        assert_eq!(sym_oracle(g(2), 1), ts(&[1, 4, 1], 2));
        assert_eq!(sym_oracle(g(2), 2).coeff(2), rat(7));
        assert_eq!(sym_oracle(g(5), 0), TruncSeries::one(0));
    }

    #[test]
    fn sym_series_truncates_below_top_degree() {
        assert_eq!(sym_series(g(2), 2, 2), ts(&[1, 4, 7], 2));
    }

    #[test]
    fn covered_symmetric_products() {
        assert_eq!(sym_cover_series(g(2), 0, 4).unwrap(), ts(&[16], 4));
        assert_eq!(sym_cover_series(g(2), 1, 4).unwrap(), ts(&[1, 34, 1], 4));
        assert_eq!(sym_cover_series(g(2), 2, 4).unwrap(), ts(&[1, 4, 22, 4, 1], 4));
        assert!(matches!(sym_cover_series(g(2), 3, 4), Err(Error::Range { .. })));
    }

    #[test]
    fn anti_invariant_dimensions() {
        assert_eq!(anti_invariant_dim(g(2), 0).unwrap(), BigInt::from(15));
        assert_eq!(anti_invariant_dim(g(2), 1).unwrap(), BigInt::from(30));
        assert_eq!(anti_invariant_dim(g(2), 2).unwrap(), BigInt::from(15));
        assert!(anti_invariant_dim(g(3), 5).is_err());
    }

    #[test]
    fn cover_of_curve_matches_riemann_hurwitz() {
        // S~^1 M is an unramified 2^{2g}-sheeted cover of M, so its genus is
        // 2^{2g}(g - 1) + 1.
        for genus in 2..7u32 {
            let sheets = BigInt::one() << (2 * genus);
            let b1 = (sheets * BigInt::from(genus - 1) + 1) * 2;
            let cover = sym_cover_series(g(genus), 1, 2).unwrap();
            assert_eq!(cover.coeff(1), BigRational::from_integer(b1));
        }
    }

    #[test]
    fn determinant_parsing() {
        assert_eq!("fixed".parse::<Determinant>().unwrap(), Determinant::Fixed);
        assert_eq!("non-fixed".parse::<Determinant>().unwrap(), Determinant::NonFixed);
        assert_eq!("NonFixed".parse::<Determinant>().unwrap(), Determinant::NonFixed);
        assert!("both".parse::<Determinant>().is_err());
    }
}
