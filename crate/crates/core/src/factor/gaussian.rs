//! Arithmetic over Q(i) and exact two-squares decompositions.
//!
//! A positive rational is a sum of two rational squares exactly when every
//! prime congruent to 3 mod 4 divides it to an even power; a real polynomial
//! without real roots is a sum of two squares in Q[X] exactly when it splits
//! as a conjugate pair over the Gaussian rationals. Both tests are exact and
//! constructive here.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::num::Rat;
use crate::unipoly::{UniPoly, Var};

use super::univariate::factor_squarefree;

/// Gaussian rational a + b*i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussRat { re, im: Rat::zero() }
    }

    pub fn zero() -> Self {
        Self::from_rat(Rat::zero())
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn i() -> Self {
        GaussRat { re: Rat::zero(), im: Rat::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> GaussRat {
        GaussRat { re: self.re.clone(), im: -&self.im }
    }

    pub fn add(&self, rhs: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }

    pub fn sub(&self, rhs: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }

    pub fn mul(&self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }

    pub fn norm(&self) -> Rat {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn recip(&self) -> GaussRat {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        GaussRat { re: &self.re / &n, im: -&(&self.im / &n) }
    }
}

/// Dense polynomial over Q(i), lowest degree first, trimmed.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussPoly {
    pub coeffs: Vec<GaussRat>,
}

impl GaussPoly {
    pub fn new(mut coeffs: Vec<GaussRat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        GaussPoly { coeffs }
    }

    pub fn from_unipoly(p: &UniPoly) -> Self {
        GaussPoly::new(p.coeffs().iter().map(|c| GaussRat::from_rat(c.clone())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn lc(&self) -> GaussRat {
        self.coeffs.last().cloned().unwrap_or_else(GaussRat::zero)
    }

    /// Real and imaginary parts as rational polynomials.
    pub fn split(&self) -> (UniPoly, UniPoly) {
        let re = UniPoly::new(self.coeffs.iter().map(|c| c.re.clone()).collect(), Var::X);
        let im = UniPoly::new(self.coeffs.iter().map(|c| c.im.clone()).collect(), Var::X);
        (re, im)
    }

    pub fn conj(&self) -> GaussPoly {
        GaussPoly::new(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    pub fn mul(&self, rhs: &GaussPoly) -> GaussPoly {
        if self.is_zero() || rhs.is_zero() {
            return GaussPoly::new(vec![]);
        }
        let mut out = vec![GaussRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        GaussPoly::new(out)
    }

    pub fn scale(&self, s: &GaussRat) -> GaussPoly {
        GaussPoly::new(self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    pub fn monic(&self) -> GaussPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    pub fn rem(&self, d: &GaussPoly) -> GaussPoly {
        assert!(!d.is_zero());
        let mut rem = self.coeffs.clone();
        let dlen = d.coeffs.len();
        if rem.len() < dlen {
            return self.clone();
        }
        let inv = d.lc().recip();
        for i in (0..rem.len() - dlen + 1).rev() {
            let q = rem[i + dlen - 1].mul(&inv);
            if q.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub(&dc.mul(&q));
            }
        }
        rem.truncate(dlen - 1);
        GaussPoly::new(rem)
    }

    pub fn gcd(&self, rhs: &GaussPoly) -> GaussPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Substitutes `X + shift*i` for X.
    pub fn shift_by_imaginary(&self, shift: i64) -> GaussPoly {
        let s = GaussRat::new(Rat::zero(), crate::num::rat(shift));
        let lin = GaussPoly::new(vec![s, GaussRat::one()]);
        let mut acc = GaussPoly::new(vec![]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin);
            if acc.is_zero() {
                acc = GaussPoly::new(vec![c.clone()]);
            } else {
                acc.coeffs[0] = acc.coeffs[0].add(c);
                acc = GaussPoly::new(acc.coeffs);
            }
        }
        acc
    }
}

/// Splits a monic Q-irreducible polynomial with no real roots into a
/// conjugate pair `q = g * conj(g)` over Q(i). Returns `None` when `q`
/// stays irreducible over Q(i) (then `q` is not a sum of two squares).
///
/// Trager's reduction: pick a shift `s` with `N(X) = q(X-si) q(X+si)`
/// squarefree, factor `N` over Q, and pull factors back by Gaussian gcds.
pub fn split_over_gaussian(q: &UniPoly) -> Option<GaussPoly> {
    let deg = q.degree()?;
    if deg % 2 == 1 {
        return None; // odd degree has a real root
    }
    for s in 1i64..=20 {
        let shifted = GaussPoly::from_unipoly(q).shift_by_imaginary(-s);
        let norm = shifted.mul(&shifted.conj());
        let (re, im) = norm.split();
        debug_assert!(im.is_zero());
        if !re.gcd(&re.derivative()).is_one() {
            continue;
        }
        let factors = factor_squarefree(&re.monic());
        if factors.len() == 1 {
            return None;
        }
        // any irreducible Q-factor of the norm pulls back to a Q(i)-factor
        for h in &factors {
            let g_shifted = shifted.gcd(&GaussPoly::from_unipoly(h));
            let e = g_shifted.deg();
            if e > 0 && e < deg as i64 {
                let g = g_shifted.shift_by_imaginary(s).monic();
                // certify: q = g * conj(g)
                let prod = g.mul(&g.conj());
                let (pre, pim) = prod.split();
                if pim.is_zero() && pre == q.monic() {
                    return Some(g);
                }
            }
        }
        return None;
    }
    None
}

fn mod_pow_big(b: &BigInt, e: &BigInt, m: &BigInt) -> BigInt {
    b.modpow(e, m)
}

fn is_probable_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigInt::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    // deterministic Miller-Rabin witness set for the 64-bit range, and a
    // strong probable-prime test beyond it
    let one = BigInt::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigInt::from(a);
        let mut x = mod_pow_big(&a, &d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 0..s.saturating_sub(1) {
            x = &x * &x % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Writes a nonnegative integer as a sum of two integer squares, or `None`
/// when impossible (a prime 3 mod 4 divides it to an odd power).
pub fn two_squares_int(n: &BigInt) -> Option<(BigInt, BigInt)> {
    if n.is_negative() {
        return None;
    }
    if n.is_zero() {
        return Some((BigInt::zero(), BigInt::zero()));
    }
    // factor by trial division at desk scale
    let mut m = n.clone();
    let mut rep = (BigInt::one(), BigInt::zero()); // 1 = 1^2 + 0^2
    let mut square = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000u64);
    while &p * &p <= m && p <= limit {
        if (&m % &p).is_zero() {
            let mut e = 0u32;
            while (&m % &p).is_zero() {
                m /= &p;
                e += 1;
            }
            accumulate_prime_power(&p, e, &mut rep, &mut square)?;
        }
        p += 1u32;
    }
    if m > BigInt::one() {
        if !is_probable_prime(&m) {
            return None; // out of factoring range
        }
        accumulate_prime_power(&m, 1, &mut rep, &mut square)?;
    }
    let (a, b) = rep;
    Some((a * &square, b * &square))
}

fn accumulate_prime_power(
    p: &BigInt,
    e: u32,
    rep: &mut (BigInt, BigInt),
    square: &mut BigInt,
) -> Option<()> {
    let r4 = (p % BigInt::from(4)).to_string();
    if r4 == "3" {
        if e % 2 == 1 {
            return None;
        }
        *square *= p.pow(e / 2);
        return Some(());
    }
    // even part of the exponent goes into the square factor
    *square *= p.pow(e / 2);
    if e % 2 == 1 {
        let (a, b) = prime_two_squares(p)?;
        // Gauss composition (a^2+b^2)(c^2+d^2) = (ac-bd)^2 + (ad+bc)^2
        let (c, d) = rep.clone();
        *rep = (&a * &c - &b * &d, &a * &d + &b * &c);
        rep.0 = rep.0.abs();
        rep.1 = rep.1.abs();
    }
    Some(())
}

/// Two-squares representation of a prime (2 or 1 mod 4) by Cornacchia.
fn prime_two_squares(p: &BigInt) -> Option<(BigInt, BigInt)> {
    if *p == BigInt::from(2) {
        return Some((BigInt::one(), BigInt::one()));
    }
    // find z with z^2 = -1 mod p
    let exp = (p - BigInt::one()) / BigInt::from(4);
    let p_minus_1 = p - BigInt::one();
    let mut z = BigInt::zero();
    let mut a = BigInt::from(2);
    loop {
        let cand = mod_pow_big(&a, &exp, p);
        if (&cand * &cand % p) == p_minus_1 {
            z = cand;
            break;
        }
        a += 1u32;
        if &a * &a > *p {
            break;
        }
    }
    if z.is_zero() {
        return None;
    }
    // Euclid descent until the remainder drops below sqrt(p)
    let mut r0 = p.clone();
    let mut r1 = z;
    while &r1 * &r1 > *p {
        let r = &r0 % &r1;
        r0 = std::mem::replace(&mut r1, r);
    }
    let x = r1;
    let y2 = p - &x * &x;
    let y = y2.sqrt();
    (&y * &y == y2).then_some((x, y))
}

/// Two-squares representation of a nonnegative rational.
pub fn two_squares_rat(c: &Rat) -> Option<(Rat, Rat)> {
    if c.is_negative() {
        return None;
    }
    let n = c.numer() * c.denom();
    let (a, b) = two_squares_int(&n)?;
    let d = c.denom().clone();
    Some((Rat::new(a, d.clone()), Rat::new(b, d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, ratio};

    #[test]
    fn integer_two_squares() {
        for (n, ok) in [(2i64, true), (5, true), (13, true), (3, false), (21, false), (45, true)] {
            let r = two_squares_int(&BigInt::from(n));
            assert_eq!(r.is_some(), ok, "n = {n}");
            if let Some((a, b)) = r {
                assert_eq!(&a * &a + &b * &b, BigInt::from(n));
            }
        }
        // 45 = 9 * 5 = (3*1)^2 + (3*2)^2
        let (a, b) = two_squares_int(&BigInt::from(45)).unwrap();
        assert_eq!(&a * &a + &b * &b, BigInt::from(45));
    }

    #[test]
    fn rational_two_squares() {
        let c = ratio(5, 2); // 5/2 = 10/4
        let (a, b) = two_squares_rat(&c).unwrap();
        assert_eq!(&(&a * &a) + &(&b * &b), c);
        assert!(two_squares_rat(&ratio(3, 1)).is_none());
    }

    #[test]
    fn gaussian_split_of_x2_plus_1() {
        let q = UniPoly::new(vec![rat(1), rat(0), rat(1)], Var::X);
        let g = split_over_gaussian(&q).unwrap();
        assert_eq!(g.deg(), 1);
        let prod = g.mul(&g.conj());
        let (re, im) = prod.split();
        assert!(im.is_zero());
        assert_eq!(re, q);
    }

    #[test]
    fn inert_quadratic() {
        // X^2 + 2 does not split over Q(i)
        let q = UniPoly::new(vec![rat(2), rat(0), rat(1)], Var::X);
        assert!(split_over_gaussian(&q).is_none());
    }

    #[test]
    fn quartic_split() {
        // X^4 + 1 = (X^2+i)(X^2-i) over Q(i)
        let q = UniPoly::new(vec![rat(1), rat(0), rat(0), rat(0), rat(1)], Var::X);
        let g = split_over_gaussian(&q).unwrap();
        assert_eq!(g.deg(), 2);
        let prod = g.mul(&g.conj());
        let (re, im) = prod.split();
        assert!(im.is_zero());
        assert_eq!(re, q);
    }
}
