use std::ops::{Add, Mul, Neg, Sub};

use num::BigRational;

use super::{expand_rational, Poly, TruncSeries};
use crate::error::Result;

/// A quotient of two polynomials kept as an unreduced numerator and
/// denominator pair.
///
/// No gcd is ever taken. Sums and products just combine numerators and
/// denominators, and the only requirement downstream is that the final
/// denominator has a nonzero constant term so it can be expanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFn {
    pub num: Poly,
    pub den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        RatFn { num, den }
    }

    pub fn poly(p: Poly) -> Self {
        RatFn::new(p, Poly::one())
    }

    pub fn int(c: i64) -> Self {
        RatFn::poly(Poly::from_int(c))
    }

    pub fn rational(c: BigRational) -> Self {
        RatFn::poly(Poly::constant(c))
    }

    pub fn recip(&self) -> Self {
        RatFn::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: u32) -> Self {
        RatFn::new(self.num.pow(k), self.den.pow(k))
    }

    pub fn expand(&self, order: usize) -> Result<TruncSeries> {
        expand_rational(&self.num, &self.den, order)
    }
}

impl<'a> Add<&'a RatFn> for &'a RatFn {
    type Output = RatFn;

    fn add(self, rhs: &RatFn) -> RatFn {
        if self.den == rhs.den {
            return RatFn::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFn::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RatFn> for &'a RatFn {
    type Output = RatFn;

    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFn> for &'a RatFn {
    type Output = RatFn;

    fn mul(self, rhs: &RatFn) -> RatFn {
        RatFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFn {
    type Output = RatFn;

    fn neg(self) -> RatFn {
        RatFn::new(-&self.num, self.den.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<RatFn> for RatFn {
            type Output = RatFn;
            fn $method(self, rhs: RatFn) -> RatFn {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFn {
    type Output = RatFn;

    fn neg(self) -> RatFn {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_fractions_recombine() {
        // 1/(1-t) + 1/(1+t) = 2/(1-t^2)
        let a = RatFn::poly(Poly::one()) * RatFn::poly(Poly::from_ints(&[1, -1])).recip();
        let b = RatFn::poly(Poly::from_ints(&[1, 1])).recip();
        let sum = (&a + &b).expand(10).unwrap();
        let direct = RatFn::new(Poly::from_int(2), Poly::from_ints(&[1, 0, -1]))
            .expand(10)
            .unwrap();
        assert_eq!(sum, direct);
    }
}
