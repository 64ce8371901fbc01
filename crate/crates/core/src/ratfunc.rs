//! Rational functions over the rationals.
//!
//! Always reduced: gcd(num, den) = 1 and the denominator is monic.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::PolyQ;
use crate::rat::Rat;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: PolyQ,
    den: PolyQ,
}

impl RatFunc {
    /// num/den with a nonzero denominator; reduces and normalizes.
    pub fn new(num: PolyQ, den: PolyQ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroPolyDivision);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: PolyQ::zero(),
                den: PolyQ::one(),
            });
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g).expect("gcd divides");
        let mut den = den.exact_div(&g).expect("gcd divides");
        let lead = den.leading().expect("nonzero").recip();
        num = num.scale(&lead);
        den = den.scale(&lead);
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: PolyQ) -> Self {
        RatFunc {
            num: p,
            den: PolyQ::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc::from_poly(PolyQ::constant(c))
    }

    pub fn num(&self) -> &PolyQ {
        &self.num
    }

    pub fn den(&self) -> &PolyQ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The underlying polynomial, when the denominator is trivial.
    pub fn as_poly(&self) -> Option<PolyQ> {
        self.den.as_constant().map(|c| self.num.scale(&c.recip()))
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::ZeroPolyDivision);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn eval_int(&self, n: i64) -> Result<Rat> {
        self.eval(&Rat::from_int(n))
    }

    /// f(x + offset).
    pub fn shift(&self, offset: &Rat) -> RatFunc {
        RatFunc::new(self.num.shift(offset), self.den.shift(offset)).expect("den stays nonzero")
    }

    pub fn recip(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            let p = self.as_poly().unwrap();
            write!(f, "{p}")
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &self.num * &rhs.den + &rhs.num * &self.den;
        let den = &self.den * &rhs.den;
        RatFunc::new(num, den).expect("nonzero denominator")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        let num = &self.num * &rhs.den - &rhs.num * &self.den;
        let den = &self.den * &rhs.den;
        RatFunc::new(num, den).expect("nonzero denominator")
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "RatFunc: division by zero");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num).expect("nonzero denominator")
    }
}

macro_rules! forward_rf_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
        impl $trait<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                self.$method(&rhs)
            }
        }
    };
}

forward_rf_binop!(Add, add);
forward_rf_binop!(Sub, sub);
forward_rf_binop!(Mul, mul);
forward_rf_binop!(Div, div);

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_monic_denominator() {
        // (2x^2 + 2x) / (4x) = (x + 1) / 2
        let f = RatFunc::new(PolyQ::from_ints(&[0, 2, 2]), PolyQ::from_ints(&[0, 4])).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(
            f.as_poly().unwrap(),
            PolyQ::from_coeffs(vec![Rat::new(1, 2), Rat::new(1, 2)])
        );
    }

    #[test]
    fn cube_over_linear() {
        // n^3 / (n + 1)
        let f = RatFunc::new(PolyQ::monomial(Rat::one(), 3), PolyQ::from_ints(&[1, 1])).unwrap();
        assert_eq!(f.eval_int(2).unwrap(), Rat::new(8, 3));
        assert!(f.eval_int(-1).is_err());
        let g = f.shift(&Rat::from_int(-1));
        // (n-1)^3 / n
        assert_eq!(g.eval_int(3).unwrap(), Rat::new(8, 3));
    }

    #[test]
    fn arithmetic() {
        let x = RatFunc::from_poly(PolyQ::x());
        let one = RatFunc::constant(Rat::one());
        let f = &one / &(&x + &one); // 1/(x+1)
        let g = &f + &f;
        assert_eq!(g.eval_int(1).unwrap(), Rat::one());
        assert!((&f - &f).is_zero());
    }
}
