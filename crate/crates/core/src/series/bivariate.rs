//! Series in an auxiliary variable `x` whose coefficients are truncated
//! series in `t`. Used for generating-function coefficient extraction,
//! where the quantity of interest is the coefficient of a fixed power of `x`.

use std::ops::{Add, Mul, Sub};

use num::BigRational;

use super::{Poly, TruncSeries};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    t_order: usize,
    coeffs: Vec<TruncSeries>,
}

impl BiSeries {
    pub fn zero(x_order: usize, t_order: usize) -> Self {
        BiSeries {
            t_order,
            coeffs: vec![TruncSeries::zero(t_order); x_order + 1],
        }
    }

    pub fn one(x_order: usize, t_order: usize) -> Self {
        let mut b = Self::zero(x_order, t_order);
        b.coeffs[0] = TruncSeries::one(t_order);
        b
    }

    /// Builds a series from `(m, p)` pairs meaning `p(t) * x^m`. Terms with
    /// `m > x_order` are dropped.
    pub fn from_terms<'a>(
        terms: impl IntoIterator<Item = (usize, &'a Poly)>,
        x_order: usize,
        t_order: usize,
    ) -> Self {
        let mut b = Self::zero(x_order, t_order);
        for (m, p) in terms {
            if m <= x_order {
                b.coeffs[m] = &b.coeffs[m] + &TruncSeries::from_poly(p, t_order);
            }
        }
        b
    }

    /// `(1 + c x t^k)^e`, the building block for binomial factors like
    /// `(1 + x t)^{2g}` or `(1 - x t^2)`.
    pub fn binomial_power(c: i64, x_pow: usize, t_pow: usize, e: u32, x_order: usize, t_order: usize) -> Self {
        let term = Poly::monomial(BigRational::from_integer(c.into()), t_pow);
        let base = Self::from_terms([(0, &Poly::one()), (x_pow, &term)], x_order, t_order);
        let mut acc = Self::one(x_order, t_order);
        for _ in 0..e {
            acc = &acc * &base;
        }
        acc
    }

    pub fn x_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn t_order(&self) -> usize {
        self.t_order
    }

    /// The `t`-series multiplying `x^m`.
    pub fn x_coeff(&self, m: usize) -> Result<TruncSeries> {
        self.coeffs.get(m).cloned().ok_or(Error::XOrderExceeded {
            requested: m,
            available: self.x_order(),
        })
    }

    fn aligned(&self, other: &Self) -> (usize, usize) {
        (
            self.x_order().min(other.x_order()),
            self.t_order.min(other.t_order),
        )
    }

    /// Multiplicative inverse, treating the ring of truncated `t`-series as
    /// coefficients: `c_0 = a_0^{-1}`, `c_m = -a_0^{-1} sum_{j>=1} a_j c_{m-j}`.
    pub fn inv(&self) -> Result<Self> {
        let a0_inv = self.coeffs[0].inv()?;
        let mut out: Vec<TruncSeries> = Vec::with_capacity(self.coeffs.len());
        out.push(a0_inv.clone());
        for m in 1..self.coeffs.len() {
            let mut acc = TruncSeries::zero(self.t_order);
            for j in 1..=m {
                if !self.coeffs[j].is_zero() {
                    acc = &acc + &(&self.coeffs[j] * &out[m - j]);
                }
            }
            out.push(-(&acc * &a0_inv));
        }
        Ok(BiSeries {
            t_order: self.t_order,
            coeffs: out,
        })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        BiSeries {
            t_order: self.t_order,
            coeffs: self.coeffs.iter().map(|s| s.scale(c)).collect(),
        }
    }
}

impl<'a> Mul<&'a BiSeries> for &'a BiSeries {
    type Output = BiSeries;

    fn mul(self, rhs: &BiSeries) -> BiSeries {
        let (m, n) = self.aligned(rhs);
        let mut out = BiSeries::zero(m, n);
        for i in 0..=m {
            let a = &self.coeffs[i];
            if a.is_zero() {
                continue;
            }
            for j in 0..=(m - i) {
                let b = &rhs.coeffs[j];
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = (&out.coeffs[i + j] + &(a * b)).truncate(n);
            }
        }
        out
    }
}

impl<'a> Add<&'a BiSeries> for &'a BiSeries {
    type Output = BiSeries;

    fn add(self, rhs: &BiSeries) -> BiSeries {
        let (m, n) = self.aligned(rhs);
        BiSeries {
            t_order: n,
            coeffs: (0..=m)
                .map(|i| (&self.coeffs[i] + &rhs.coeffs[i]).truncate(n))
                .collect(),
        }
    }
}

impl<'a> Sub<&'a BiSeries> for &'a BiSeries {
    type Output = BiSeries;

    fn sub(self, rhs: &BiSeries) -> BiSeries {
        let (m, n) = self.aligned(rhs);
        BiSeries {
            t_order: n,
            coeffs: (0..=m)
                .map(|i| (&self.coeffs[i] - &rhs.coeffs[i]).truncate(n))
                .collect(),
        }
    }
}

impl BiSeries {
    pub fn is_one(&self) -> bool {
        self.coeffs[0] == TruncSeries::one(self.t_order)
            && self.coeffs[1..].iter().all(TruncSeries::is_zero)
    }
}
