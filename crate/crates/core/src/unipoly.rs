//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored lowest degree first and kept trimmed, so equality
//! is structural. Each polynomial carries a variable tag; arithmetic demands
//! matching tags except that constants unify with anything.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::num::{rat, rat_to_string, Rat};

/// Variable tag for univariate polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Var {
    X,
    T,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X => write!(f, "X"),
            Var::T => write!(f, "T"),
        }
    }
}

/// Univariate polynomial with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
    var: Var,
}

impl UniPoly {
    /// Builds a polynomial from coefficients, lowest degree first.
    pub fn new(mut coeffs: Vec<Rat>, var: Var) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs, var }
    }

    pub fn zero(var: Var) -> Self {
        UniPoly { coeffs: vec![], var }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(Rat::one(), var)
    }

    pub fn constant(c: Rat, var: Var) -> Self {
        Self::new(vec![c], var)
    }

    /// The monomial `c * var^e`.
    pub fn monomial(c: Rat, e: usize, var: Var) -> Self {
        if c.is_zero() {
            return Self::zero(var);
        }
        let mut coeffs = vec![Rat::zero(); e + 1];
        coeffs[e] = c;
        UniPoly { coeffs, var }
    }

    /// The identity polynomial `var`.
    pub fn variable(var: Var) -> Self {
        Self::monomial(Rat::one(), 1, var)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Retags the variable. Used when moving between charts.
    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = -1`, convenient for bounds.
    pub fn degree_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(self.var);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect();
        UniPoly::new(coeffs, self.var)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero(self.var);
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            var: self.var,
        }
    }

    /// Monic normalization; zero stays zero.
    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    /// Multiplies by `var^e`.
    pub fn shift_up(&self, e: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rat::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs, var: self.var }
    }

    pub fn pow(&self, mut e: usize) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one(self.var);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn check_var(&self, other: &UniPoly) -> Var {
        if self.var == other.var || other.is_constant() {
            self.var
        } else if self.is_constant() {
            other.var
        } else {
            panic!("variable mismatch: {} vs {}", self.var, other.var);
        }
    }

    /// Euclidean division. Errors on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly), Error> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let var = self.check_var(divisor);
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return Ok((UniPoly::zero(var), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rat::zero(); rem.len() - dlen + 1];
        let inv_lc = divisor.lc().recip();
        for i in (0..quo.len()).rev() {
            let q = &rem[i + dlen - 1] * &inv_lc;
            if !q.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    let delta = dc * &q;
                    rem[i + j] -= delta;
                }
            }
            quo[i] = q;
        }
        rem.truncate(dlen - 1);
        Ok((UniPoly::new(quo, var), UniPoly::new(rem, var)))
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic gcd. `gcd(0, p)` is the monic normalization of `p`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` monic with `s*self + t*other = g`.
    pub fn extended_gcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let var = if self.is_constant() { other.var } else { self.var };
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UniPoly::one(var), UniPoly::zero(var));
        let (mut t0, mut t1) = (UniPoly::zero(var), UniPoly::one(var));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// The monic product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Result<UniPoly, Error> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let g = self.gcd(&self.derivative());
        Ok(self.exact_div(&g).expect("gcd divides").monic())
    }

    /// Yun's squarefree decomposition: returns `(q_j, j)` with
    /// `self = lc * prod q_j^j`, each `q_j` monic squarefree, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(UniPoly, usize)>, Error> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let f = self.monic();
        if f.is_constant() {
            return Ok(vec![]);
        }
        let df = f.derivative();
        let a = f.gcd(&df);
        let mut b = f.exact_div(&a).expect("gcd divides");
        let mut c = df.exact_div(&a).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut j = 1usize;
        loop {
            let q = b.gcd(&d);
            if q.degree().map_or(false, |deg| deg > 0) {
                out.push((q.clone(), j));
            }
            b = b.exact_div(&q).expect("gcd divides");
            if b.is_constant() {
                break;
            }
            c = d.exact_div(&q).expect("gcd divides");
            d = &c - &b.derivative();
            j += 1;
        }
        Ok(out)
    }

    /// Taylor shift: returns `p(var + a)`.
    pub fn translate(&self, a: &Rat) -> UniPoly {
        if a.is_zero() || self.is_zero() {
            return self.clone();
        }
        // Horner on p(y) with y = var + a.
        let mut acc = UniPoly::zero(self.var);
        let shift = UniPoly::new(vec![a.clone(), Rat::one()], self.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &shift) + &UniPoly::constant(c.clone(), self.var);
        }
        acc
    }

    /// Composition `self(g)`.
    pub fn compose(&self, g: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero(g.var());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &UniPoly::constant(c.clone(), g.var());
        }
        acc
    }

    /// Least common multiple, monic.
    pub fn lcm(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.var);
        }
        let g = self.gcd(other);
        (self * &other.exact_div(&g).expect("gcd divides")).monic()
    }

    /// Reverses coefficients: `var^deg * p(1/var)`.
    pub fn reverse(&self) -> UniPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        UniPoly::new(coeffs, self.var)
    }

    /// Maximum absolute value of the coefficients.
    pub fn height(&self) -> Rat {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rat::zero)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let var = self.check_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::new(coeffs, var)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let var = self.check_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::new(coeffs, var)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let var = self.check_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(var);
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        UniPoly::new(coeffs, var)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            var: self.var,
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", rat_to_string(&mag))?;
            }
            if i > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.var)?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::ratio;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| rat(c)).collect(), Var::T)
    }

    #[test]
    fn division_and_gcd() {
        // (T-1)^2 (T+2) = T^3 - 3T + 2
        let f = p(&[2, -3, 0, 1]);
        let g = p(&[-1, 1]); // T - 1
        let (q, r) = f.div_rem(&g).unwrap();
        assert!(r.is_zero());
        assert_eq!(&q * &g, f);
        assert_eq!(f.gcd(&f.derivative()), p(&[-1, 1]));
    }

    #[test]
    fn squarefree() {
        // (T-1)^2 (T+2) -> (T-1)(T+2) = T^2 + T - 2
        let f = p(&[2, -3, 0, 1]);
        assert_eq!(f.squarefree_part().unwrap(), p(&[-2, 1, 1]));
        // T^3 -> T
        assert_eq!(p(&[0, 0, 0, 1]).squarefree_part().unwrap(), p(&[0, 1]));
        let decomp = f.squarefree_decomposition().unwrap();
        assert_eq!(decomp, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);
    }

    #[test]
    fn extended_gcd_bezout() {
        let a = p(&[1, 0, 1]); // T^2+1
        let b = p(&[0, 1]); // T
        let (g, s, t) = a.extended_gcd(&b);
        assert!(g.is_one());
        assert_eq!(&(&s * &a) + &(&t * &b), UniPoly::one(Var::T));
    }

    #[test]
    fn translate_compose() {
        let f = p(&[0, 0, 1]); // T^2
        let shifted = f.translate(&rat(1)); // (T+1)^2
        assert_eq!(shifted, p(&[1, 2, 1]));
        assert_eq!(shifted.eval(&rat(2)), rat(9));
        assert_eq!(f.compose(&p(&[1, 1])), p(&[1, 2, 1]));
    }

    #[test]
    fn display_format() {
        let f = UniPoly::new(vec![rat(3), ratio(-1, 2), rat(1)], Var::X);
        assert_eq!(f.to_string(), "X^2 - 1/2*X + 3");
        assert_eq!(UniPoly::zero(Var::X).to_string(), "0");
    }
}
