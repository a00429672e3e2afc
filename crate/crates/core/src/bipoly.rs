//! Bivariate polynomials in Q[X][T] and the (k,d) grading.
//!
//! A `BiPoly` is stored as a dense list of T-coefficients, each a `UniPoly`
//! in X. The grading set consists of the `sum a_i T^i` with
//! `deg a_i <= k(d-i)`; it controls both the perturbation pipeline and the
//! degree law for determinantal representations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::Error;
use crate::num::Rat;
use crate::ratfunc::RatFunc;
use crate::unipoly::{UniPoly, Var};

/// Polynomial in Q[X][T], dense in T.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiPoly {
    t_coeffs: Vec<UniPoly>,
}

impl BiPoly {
    /// Builds from T-coefficients (index i is the coefficient of T^i).
    pub fn new(mut t_coeffs: Vec<UniPoly>) -> Self {
        while t_coeffs.last().map_or(false, |c| c.is_zero()) {
            t_coeffs.pop();
        }
        for c in &t_coeffs {
            assert_eq!(c.var(), Var::X, "T-coefficients must be polynomials in X");
        }
        BiPoly { t_coeffs }
    }

    pub fn zero() -> Self {
        BiPoly { t_coeffs: vec![] }
    }

    pub fn one() -> Self {
        BiPoly::new(vec![UniPoly::one(Var::X)])
    }

    pub fn constant(c: Rat) -> Self {
        BiPoly::new(vec![UniPoly::constant(c, Var::X)])
    }

    /// Embeds a polynomial in X as a T-degree-zero bivariate.
    pub fn from_x_poly(p: UniPoly) -> Self {
        assert_eq!(p.var(), Var::X);
        BiPoly::new(vec![p])
    }

    /// Lifts a polynomial in T with constant coefficients.
    pub fn from_t_poly(p: &UniPoly) -> Self {
        assert_eq!(p.var(), Var::T);
        BiPoly::new(
            p.coeffs()
                .iter()
                .map(|c| UniPoly::constant(c.clone(), Var::X))
                .collect(),
        )
    }

    /// The monomial `c * X^i * T^j`.
    pub fn monomial(c: Rat, i: usize, j: usize) -> Self {
        let mut t_coeffs = vec![UniPoly::zero(Var::X); j + 1];
        t_coeffs[j] = UniPoly::monomial(c, i, Var::X);
        BiPoly::new(t_coeffs)
    }

    /// The variable T.
    pub fn t() -> Self {
        BiPoly::monomial(Rat::from_integer(1.into()), 0, 1)
    }

    /// The variable X.
    pub fn x() -> Self {
        BiPoly::monomial(Rat::from_integer(1.into()), 1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.t_coeffs.is_empty()
    }

    /// Degree in T, or `None` for zero.
    pub fn degree_t(&self) -> Option<usize> {
        self.t_coeffs.len().checked_sub(1)
    }

    /// Maximum X-degree over all T-coefficients; `None` for zero.
    pub fn degree_x(&self) -> Option<usize> {
        self.t_coeffs
            .iter()
            .filter_map(|c| c.degree())
            .max()
    }

    pub fn t_coeff(&self, i: usize) -> UniPoly {
        self.t_coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| UniPoly::zero(Var::X))
    }

    pub fn t_coeffs(&self) -> &[UniPoly] {
        &self.t_coeffs
    }

    /// Leading T-coefficient; zero polynomial for zero input.
    pub fn lc_t(&self) -> UniPoly {
        self.t_coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| UniPoly::zero(Var::X))
    }

    /// True when the coefficient of the top T-power is the constant 1.
    pub fn is_monic_t(&self) -> bool {
        self.t_coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn require_monic(&self) -> Result<(), Error> {
        if self.is_monic_t() {
            Ok(())
        } else {
            Err(Error::NotMonic)
        }
    }

    /// True when this is a polynomial in T alone.
    pub fn is_x_free(&self) -> bool {
        self.t_coeffs.iter().all(|c| c.is_constant())
    }

    /// Extracts a T-polynomial when no coefficient involves X.
    pub fn as_t_poly(&self) -> Option<UniPoly> {
        if !self.is_x_free() {
            return None;
        }
        Some(UniPoly::new(
            self.t_coeffs.iter().map(|c| c.coeff(0)).collect(),
            Var::T,
        ))
    }

    /// Substitutes a rational for X, yielding a polynomial in T.
    pub fn eval_x(&self, x: &Rat) -> UniPoly {
        UniPoly::new(self.t_coeffs.iter().map(|c| c.eval(x)).collect(), Var::T)
    }

    /// Full evaluation at a rational point.
    pub fn eval(&self, x: &Rat, t: &Rat) -> Rat {
        self.eval_x(x).eval(t)
    }

    pub fn derivative_t(&self) -> BiPoly {
        if self.t_coeffs.len() <= 1 {
            return BiPoly::zero();
        }
        BiPoly::new(
            self.t_coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&crate::num::rat(i as i64)))
                .collect(),
        )
    }

    pub fn derivative_x(&self) -> BiPoly {
        BiPoly::new(self.t_coeffs.iter().map(|c| c.derivative()).collect())
    }

    pub fn scale(&self, c: &Rat) -> BiPoly {
        BiPoly::new(self.t_coeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn mul_x_poly(&self, p: &UniPoly) -> BiPoly {
        BiPoly::new(self.t_coeffs.iter().map(|a| a * p).collect())
    }

    /// Shifts X: returns `f(X + a, T)`.
    pub fn translate_x(&self, a: &Rat) -> BiPoly {
        BiPoly::new(self.t_coeffs.iter().map(|c| c.translate(a)).collect())
    }

    /// Drops all monomials of X-degree >= `l` (X-adic truncation).
    pub fn truncate_x(&self, l: usize) -> BiPoly {
        BiPoly::new(
            self.t_coeffs
                .iter()
                .map(|c| UniPoly::new(c.coeffs().iter().take(l).cloned().collect(), Var::X))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: usize) -> BiPoly {
        let mut base = self.clone();
        let mut acc = BiPoly::one();
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

    /// Membership in the grading set: `deg_T <= d` and `deg a_i <= k(d-i)`.
    pub fn grading_member(&self, k: usize, d: usize) -> bool {
        if self.is_zero() {
            return true;
        }
        let deg_t = self.degree_t().expect("nonzero");
        if deg_t > d {
            return false;
        }
        self.t_coeffs.iter().enumerate().all(|(i, a)| {
            a.degree().map_or(true, |deg| deg <= k * (d - i))
        })
    }

    /// View as a polynomial in T over the field Q(X).
    pub fn to_ratfunc_coeffs(&self) -> Vec<RatFunc> {
        self.t_coeffs
            .iter()
            .map(|c| RatFunc::from_poly(c.clone()))
            .collect()
    }

    /// Rebuilds from Q(X)-coefficients by clearing the common denominator;
    /// returns the primitive polynomial (content removed, normalized so the
    /// leading T-coefficient has leading coefficient 1 in X).
    pub fn from_ratfunc_coeffs_primitive(coeffs: &[RatFunc]) -> BiPoly {
        let mut den = UniPoly::one(Var::X);
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let polys: Vec<UniPoly> = coeffs
            .iter()
            .map(|c| {
                let factor = den.exact_div(c.denom()).expect("lcm divides");
                c.numer() * &factor
            })
            .collect();
        let f = BiPoly::new(polys);
        f.primitive_part()
    }

    /// Content in Q[X]: monic gcd of all T-coefficients.
    pub fn content_x(&self) -> UniPoly {
        let mut g = UniPoly::zero(Var::X);
        for c in &self.t_coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Removes the content and normalizes the leading T-coefficient to have
    /// leading X-coefficient 1.
    pub fn primitive_part(&self) -> BiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let content = self.content_x();
        let stripped = BiPoly::new(
            self.t_coeffs
                .iter()
                .map(|c| c.exact_div(&content).expect("content divides"))
                .collect(),
        );
        let lc = stripped.lc_t().lc();
        stripped.scale(&lc.recip())
    }

    /// Division in Q(X)[T]; requires the result to stay in Q[X][T].
    /// Returns `None` when the division is not exact over Q[X][T].
    pub fn exact_div(&self, divisor: &BiPoly) -> Option<BiPoly> {
        if divisor.is_zero() {
            return None;
        }
        let mut rem = self.to_ratfunc_coeffs();
        let div = divisor.to_ratfunc_coeffs();
        let dlen = div.len();
        if rem.len() < dlen {
            return self.is_zero().then(BiPoly::zero);
        }
        let mut quo = vec![RatFunc::zero(); rem.len() - dlen + 1];
        let inv_lc = div.last().expect("nonzero").recip().ok()?;
        for i in (0..quo.len()).rev() {
            let q = &rem[i + dlen - 1] * &inv_lc;
            if !q.is_zero() {
                for (j, dc) in div.iter().enumerate() {
                    let delta = dc * &q;
                    rem[i + j] = &rem[i + j] - &delta;
                }
            }
            quo[i] = q;
        }
        if rem.iter().any(|r| !r.is_zero()) {
            return None;
        }
        let mut polys = Vec::with_capacity(quo.len());
        for q in &quo {
            polys.push(q.as_polynomial()?.clone());
        }
        Some(BiPoly::new(polys))
    }

    /// Bivariate gcd in Q[X,T], primitive and normalized.
    pub fn gcd(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return other.primitive_content_normalized();
        }
        if other.is_zero() {
            return self.primitive_content_normalized();
        }
        let cf = self.content_x();
        let cg = other.content_x();
        let content_gcd = cf.gcd(&cg);
        let pf = self.primitive_part();
        let pg = other.primitive_part();
        // gcd of the primitive parts over Q(X)[T]
        let prim = if pf.degree_t() == Some(0) || pg.degree_t() == Some(0) {
            // primitive T-degree-0 polys are constants after normalization
            if pf.degree_t() == Some(0) && pg.degree_t() == Some(0) {
                BiPoly::one()
            } else {
                BiPoly::one()
            }
        } else {
            let mut a = pf.to_ratfunc_coeffs();
            let mut b = pg.to_ratfunc_coeffs();
            while b.iter().any(|c| !c.is_zero()) {
                let r = ratfunc_poly_rem(&a, &b);
                a = b;
                b = r;
            }
            BiPoly::from_ratfunc_coeffs_primitive(&a)
        };
        prim.mul_x_poly(&content_gcd)
    }

    fn primitive_content_normalized(&self) -> BiPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.primitive_part().mul_x_poly(&self.content_x())
    }

    /// The squarefree core: the product of the distinct irreducible factors.
    pub fn squarefree_core(&self) -> Result<BiPoly, Error> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        if self.degree_t() == Some(0) {
            let core = self.t_coeff(0).squarefree_part()?;
            return Ok(BiPoly::from_x_poly(core));
        }
        let g = self.gcd(&self.derivative_t());
        let g = g.gcd(&self.derivative_x());
        let core = self.exact_div(&g).expect("gcd divides");
        Ok(core.primitive_content_normalized())
    }

    /// Resultant with respect to T, an element of Q[X].
    ///
    /// Computed from the Sylvester matrix by fraction-free elimination; zero
    /// exactly when the inputs share a factor of positive T-degree.
    pub fn resultant_t(&self, other: &BiPoly) -> Result<UniPoly, Error> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroInput);
        }
        let m = self.degree_t().expect("nonzero");
        let n = other.degree_t().expect("nonzero");
        if m == 0 {
            // Res(a0, g) = a0^{deg g}
            return Ok(self.t_coeff(0).pow(n));
        }
        if n == 0 {
            return Ok(other.t_coeff(0).pow(m));
        }
        let size = m + n;
        let mut rows: Vec<Vec<UniPoly>> = Vec::with_capacity(size);
        for i in 0..n {
            let mut row = vec![UniPoly::zero(Var::X); size];
            for j in 0..=m {
                row[i + j] = self.t_coeff(m - j);
            }
            rows.push(row);
        }
        for i in 0..m {
            let mut row = vec![UniPoly::zero(Var::X); size];
            for j in 0..=n {
                row[i + j] = other.t_coeff(n - j);
            }
            rows.push(row);
        }
        Ok(crate::matpoly::MatPoly::from_rows(rows).det_bareiss())
    }

    /// Discriminant-style separability test: true when `gcd(f, f_T)` is
    /// constant, i.e. f is squarefree as a polynomial in T over Q(X).
    pub fn is_separable_t(&self) -> bool {
        match self.degree_t() {
            None | Some(0) => false,
            _ => {
                let g = self.gcd(&self.derivative_t());
                g.degree_t() == Some(0) && g.degree_x() == Some(0)
            }
        }
    }

    /// Yun decomposition with respect to T: `self = c(X) * prod q_j^j` with
    /// each `q_j` monic in T (for monic input), squarefree, pairwise coprime.
    pub fn squarefree_decomposition_t(&self) -> Result<Vec<(BiPoly, usize)>, Error> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        if self.degree_t().unwrap_or(0) == 0 {
            return Ok(vec![]);
        }
        let f = self.clone();
        let df = f.derivative_t();
        let a = f.gcd(&df);
        let mut b = f.exact_div(&a).expect("gcd divides");
        let mut c = df.exact_div(&a).expect("gcd divides");
        let mut d = &c - &b.derivative_t();
        let mut out = Vec::new();
        let mut j = 1usize;
        loop {
            let q = b.gcd(&d);
            if q.degree_t().map_or(false, |deg| deg > 0) {
                out.push((q.clone(), j));
            }
            b = b.exact_div(&q).expect("gcd divides");
            if b.degree_t().unwrap_or(0) == 0 {
                break;
            }
            c = d.exact_div(&q).expect("gcd divides");
            d = &c - &b.derivative_t();
            j += 1;
        }
        Ok(out)
    }

    /// Maximum absolute value over all coefficients.
    pub fn height(&self) -> Rat {
        self.t_coeffs
            .iter()
            .map(|c| c.height())
            .max()
            .unwrap_or_else(Rat::zero)
    }

    /// Maximum coefficient-wise deviation from `other`.
    pub fn distance(&self, other: &BiPoly) -> Rat {
        (self - other).height()
    }
}

/// Remainder of dense T-polynomials over Q(X).
fn ratfunc_poly_rem(a: &[RatFunc], b: &[RatFunc]) -> Vec<RatFunc> {
    let blen = b.iter().rposition(|c| !c.is_zero()).map(|i| i + 1).unwrap_or(0);
    assert!(blen > 0, "division by zero");
    let mut rem: Vec<RatFunc> = a.to_vec();
    while rem.iter().rposition(|c| !c.is_zero()).map(|i| i + 1).unwrap_or(0) >= blen {
        let rlen = rem.iter().rposition(|c| !c.is_zero()).map(|i| i + 1).unwrap();
        let q = &rem[rlen - 1] / &b[blen - 1];
        let shift = rlen - blen;
        for (j, bc) in b.iter().take(blen).enumerate() {
            let delta = bc * &q;
            rem[shift + j] = &rem[shift + j] - &delta;
        }
        rem.truncate(rlen - 1);
        if rem.is_empty() {
            break;
        }
    }
    rem
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.t_coeffs.len().max(rhs.t_coeffs.len());
        BiPoly::new((0..n).map(|i| &self.t_coeff(i) + &rhs.t_coeff(i)).collect())
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let n = self.t_coeffs.len().max(rhs.t_coeffs.len());
        BiPoly::new((0..n).map(|i| &self.t_coeff(i) - &rhs.t_coeff(i)).collect())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![UniPoly::zero(Var::X); self.t_coeffs.len() + rhs.t_coeffs.len() - 1];
        for (i, a) in self.t_coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.t_coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        BiPoly::new(out)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::new(self.t_coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.t_coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "T{}", if i > 1 { format!("^{i}") } else { String::new() })?;
            } else {
                write!(
                    f,
                    "({c})*T{}",
                    if i > 1 { format!("^{i}") } else { String::new() }
                )?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    /// T^2 - X^2
    fn t2_minus_x2() -> BiPoly {
        &(&BiPoly::t() * &BiPoly::t()) - &(&BiPoly::x() * &BiPoly::x())
    }

    #[test]
    fn grading_examples() {
        // T^2 - X^2 in the (1,2) grading
        assert!(t2_minus_x2().grading_member(1, 2));
        // T^2 - X^3 violates deg a_0 <= 2
        let f = &(&BiPoly::t() * &BiPoly::t()) - &BiPoly::x().pow(3);
        assert!(!f.grading_member(1, 2));
        // X*T^2 + T violates deg a_2 <= 0
        let f = &BiPoly::x().mul_x_poly(&UniPoly::zero(Var::X)) + &BiPoly::zero();
        assert!(f.is_zero());
        let f = &(&BiPoly::x() * &BiPoly::t().pow(2)) + &BiPoly::t();
        assert!(!f.grading_member(1, 2));
    }

    #[test]
    fn resultant_examples() {
        // Res_T(T^2 - X, 2T) = -4X (sign is the Sylvester convention)
        let f = &BiPoly::t().pow(2) - &BiPoly::x();
        let g = BiPoly::t().scale(&rat(2));
        let r = f.resultant_t(&g).unwrap();
        assert_eq!(r, UniPoly::monomial(rat(-4), 1, Var::X));
        // common factor gives zero
        let h = &BiPoly::t() - &BiPoly::one();
        assert!(h.resultant_t(&h).unwrap().is_zero());
        // Res_T(T^2+1, T^2+1+X) = X^2
        let a = &BiPoly::t().pow(2) + &BiPoly::one();
        let b = &a + &BiPoly::x();
        assert_eq!(a.resultant_t(&b).unwrap(), UniPoly::monomial(rat(1), 2, Var::X));
    }

    #[test]
    fn gcd_and_squarefree() {
        let f = t2_minus_x2(); // (T-X)(T+X), squarefree
        assert_eq!(f.squarefree_core().unwrap(), f);
        let tmx = &BiPoly::t() - &BiPoly::x();
        let sq = &(&tmx * &tmx) * &(&BiPoly::t() + &BiPoly::x());
        let core = sq.squarefree_core().unwrap();
        assert_eq!(core, t2_minus_x2());
        assert_eq!(sq.gcd(&sq.derivative_t()).primitive_part(), tmx);
    }

    #[test]
    fn exact_division() {
        let f = t2_minus_x2();
        let g = &BiPoly::t() - &BiPoly::x();
        let q = f.exact_div(&g).unwrap();
        assert_eq!(q, &BiPoly::t() + &BiPoly::x());
        assert!(f.exact_div(&(&g + &BiPoly::one())).is_none());
    }

    #[test]
    fn yun_in_t() {
        let tmx = &BiPoly::t() - &BiPoly::x();
        let tpx = &BiPoly::t() + &BiPoly::x();
        let f = &tmx.pow(2) * &tpx;
        let decomp = f.squarefree_decomposition_t().unwrap();
        assert_eq!(decomp.len(), 2);
        assert_eq!(decomp[0], (tpx, 1));
        assert_eq!(decomp[1], (tmx, 2));
    }
}
