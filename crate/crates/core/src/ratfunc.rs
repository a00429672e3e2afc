//! Rational functions in X, kept reduced with a monic denominator.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::Error;
use crate::num::Rat;
use crate::unipoly::{UniPoly, Var};

/// Element of Q(X): a reduced fraction of polynomials with monic denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    /// Builds `num/den`, reducing to lowest terms. Errors when `den = 0`.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut num = num;
        let mut den = den;
        if !num.is_zero() {
            let g = num.gcd(&den);
            if g.degree().map_or(false, |d| d > 0) {
                num = num.exact_div(&g).expect("gcd divides");
                den = den.exact_div(&g).expect("gcd divides");
            }
        } else {
            den = UniPoly::one(Var::X);
        }
        // normalize denominator monic
        let lc = den.lc();
        let num = num.scale(&lc.recip());
        let den = den.monic();
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFunc::new(p, UniPoly::one(Var::X)).expect("unit denominator")
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(UniPoly::constant(c, Var::X))
    }

    pub fn zero() -> Self {
        Self::from_poly(UniPoly::zero(Var::X))
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one(Var::X))
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is constant (the value lies in Q[X]).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Extracts the polynomial part when the denominator is one.
    pub fn as_polynomial(&self) -> Option<&UniPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<RatFunc, Error> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Evaluates at a rational point; `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).expect("nonzero denominator")
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
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num).expect("division by zero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    fn x() -> UniPoly {
        UniPoly::variable(Var::X)
    }

    #[test]
    fn reduction_invariants() {
        // (X^2-1)/(X-1) reduces to X+1
        let num = &(&x() * &x()) - &UniPoly::one(Var::X);
        let den = &x() - &UniPoly::one(Var::X);
        let r = RatFunc::new(num, den).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r.numer(), &(&x() + &UniPoly::one(Var::X)));
        // denominators normalize monic: 1/(2X) has den X, num 1/2
        let r = RatFunc::new(UniPoly::one(Var::X), x().scale(&rat(2))).unwrap();
        assert_eq!(r.denom(), &x());
        assert_eq!(r.numer().coeff(0), crate::num::ratio(1, 2));
    }

    #[test]
    fn field_ops() {
        let a = RatFunc::new(UniPoly::one(Var::X), x()).unwrap(); // 1/X
        let b = RatFunc::from_poly(x()); // X
        assert_eq!(&a * &b, RatFunc::one());
        let s = &a + &b; // (1+X^2)/X
        assert_eq!(s.denom(), &x());
        assert_eq!(&s - &b, a);
        assert!((&a / &a).numer().is_one());
    }
}
