//! Univariate factorization over Q.
//!
//! Classic Zassenhaus: reduce to a primitive squarefree integer polynomial,
//! factor modulo a good small prime by Cantor-Zassenhaus, Hensel-lift to a
//! Mignotte-sized modulus, and recombine subsets with exact trial division.
//! Degrees here stay small, so the exponential recombination is harmless.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;
use crate::num::Rat;
use crate::unipoly::{UniPoly, Var};

/// Deterministic 64-bit generator for the equal-degree splitting step.
/// Factor output is canonicalized by sorting, so the seed never affects
/// results, only the path taken.
pub(crate) struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub(crate) fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub(crate) fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

// ---------------------------------------------------------------------------
// arithmetic mod a small prime
// ---------------------------------------------------------------------------

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense polynomial over F_p, lowest degree first, trimmed.
#[derive(Debug, Clone, PartialEq)]
struct PolyP {
    c: Vec<u64>,
}

impl PolyP {
    fn new(mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyP { c }
    }

    fn zero() -> Self {
        PolyP { c: vec![] }
    }

    fn one() -> Self {
        PolyP { c: vec![1] }
    }

    fn x() -> Self {
        PolyP { c: vec![0, 1] }
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn deg(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    fn lc(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    fn add(&self, rhs: &PolyP, p: u64) -> PolyP {
        let n = self.c.len().max(rhs.c.len());
        PolyP::new(
            (0..n)
                .map(|i| {
                    (self.c.get(i).copied().unwrap_or(0) + rhs.c.get(i).copied().unwrap_or(0)) % p
                })
                .collect(),
        )
    }

    fn sub(&self, rhs: &PolyP, p: u64) -> PolyP {
        let n = self.c.len().max(rhs.c.len());
        PolyP::new(
            (0..n)
                .map(|i| {
                    (p + self.c.get(i).copied().unwrap_or(0) - rhs.c.get(i).copied().unwrap_or(0))
                        % p
                })
                .collect(),
        )
    }

    fn mul(&self, rhs: &PolyP, p: u64) -> PolyP {
        if self.is_zero() || rhs.is_zero() {
            return PolyP::zero();
        }
        let mut out = vec![0u64; self.c.len() + rhs.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.c.iter().enumerate() {
                out[i + j] = ((out[i + j] as u128 + a as u128 * b as u128) % p as u128) as u64;
            }
        }
        PolyP::new(out)
    }

    fn scale(&self, s: u64, p: u64) -> PolyP {
        PolyP::new(
            self.c
                .iter()
                .map(|&a| ((a as u128 * s as u128) % p as u128) as u64)
                .collect(),
        )
    }

    fn monic(&self, p: u64) -> PolyP {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(mod_inv(self.lc(), p), p)
    }

    fn div_rem(&self, d: &PolyP, p: u64) -> (PolyP, PolyP) {
        assert!(!d.is_zero());
        if self.deg() < d.deg() {
            return (PolyP::zero(), self.clone());
        }
        let mut rem = self.c.clone();
        let dlen = d.c.len();
        let mut quo = vec![0u64; rem.len() - dlen + 1];
        let inv = mod_inv(d.lc(), p);
        for i in (0..quo.len()).rev() {
            let q = ((rem[i + dlen - 1] as u128 * inv as u128) % p as u128) as u64;
            quo[i] = q;
            if q != 0 {
                for (j, &dc) in d.c.iter().enumerate() {
                    let sub = (q as u128 * dc as u128 % p as u128) as u64;
                    rem[i + j] = (rem[i + j] + p - sub) % p;
                }
            }
        }
        rem.truncate(dlen - 1);
        (PolyP::new(quo), PolyP::new(rem))
    }

    fn rem(&self, d: &PolyP, p: u64) -> PolyP {
        self.div_rem(d, p).1
    }

    fn gcd(&self, rhs: &PolyP, p: u64) -> PolyP {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b, p);
            a = b;
            b = r;
        }
        a.monic(p)
    }

    /// Extended gcd: `(g, s, t)` with `s*self + t*rhs = g`, g monic.
    fn extended_gcd(&self, rhs: &PolyP, p: u64) -> (PolyP, PolyP, PolyP) {
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (PolyP::one(), PolyP::zero());
        let (mut t0, mut t1) = (PolyP::zero(), PolyP::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1, p);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1, p), p);
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1, p), p);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = mod_inv(r0.lc(), p);
        (r0.scale(inv, p), s0.scale(inv, p), t0.scale(inv, p))
    }

    fn pow_mod(&self, e: &BigUint, modulus: &PolyP, p: u64) -> PolyP {
        let mut acc = PolyP::one();
        let mut base = self.rem(modulus, p);
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = acc.mul(&base, p).rem(modulus, p);
            }
            base = base.mul(&base, p).rem(modulus, p);
        }
        acc
    }

    fn derivative(&self, p: u64) -> PolyP {
        if self.c.len() <= 1 {
            return PolyP::zero();
        }
        PolyP::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &a)| ((i as u128 % p as u128) as u64 as u128 * a as u128 % p as u128) as u64)
                .collect(),
        )
    }
}

// ---------------------------------------------------------------------------
// integer polynomials
// ---------------------------------------------------------------------------

/// Dense polynomial over Z, lowest degree first, trimmed.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct ZPoly {
    pub(crate) c: Vec<BigInt>,
}

impl ZPoly {
    pub(crate) fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        ZPoly { c }
    }

    fn deg(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn mul(&self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::new(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in rhs.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::new(out)
    }

    fn sub(&self, rhs: &ZPoly) -> ZPoly {
        let n = self.c.len().max(rhs.c.len());
        ZPoly::new(
            (0..n)
                .map(|i| {
                    self.c.get(i).cloned().unwrap_or_else(BigInt::zero)
                        - rhs.c.get(i).cloned().unwrap_or_else(BigInt::zero)
                })
                .collect(),
        )
    }

    fn to_mod_p(&self, p: u64) -> PolyP {
        let pp = BigInt::from(p);
        PolyP::new(
            self.c
                .iter()
                .map(|a| a.mod_floor(&pp).to_u64().expect("reduced"))
                .collect(),
        )
    }

    /// Reduces every coefficient into the balanced range (-q/2, q/2].
    fn balanced_mod(&self, q: &BigInt) -> ZPoly {
        let half = q / 2;
        ZPoly::new(
            self.c
                .iter()
                .map(|a| {
                    let mut r = a.mod_floor(q);
                    if r > half {
                        r -= q;
                    }
                    r
                })
                .collect(),
        )
    }

    fn norm2_sq(&self) -> BigInt {
        self.c.iter().map(|a| a * a).sum()
    }
}

fn unipoly_to_primitive_zpoly(p: &UniPoly) -> ZPoly {
    let mut den = BigInt::one();
    for c in p.coeffs() {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer() * &den / c.denom()).collect();
    let mut content = BigInt::zero();
    for a in &ints {
        content = content.gcd(a);
    }
    if content.is_zero() {
        return ZPoly::new(vec![]);
    }
    ZPoly::new(ints.into_iter().map(|a| a / &content).collect())
}

fn zpoly_to_monic_unipoly(p: &ZPoly, var: Var) -> UniPoly {
    let lc = p.c.last().expect("nonzero").clone();
    UniPoly::new(
        p.c.iter().map(|a| Rat::new(a.clone(), lc.clone())).collect(),
        var,
    )
}

// ---------------------------------------------------------------------------
// factorization mod p
// ---------------------------------------------------------------------------

/// Factors a squarefree monic polynomial mod p into monic irreducibles.
fn factor_mod_p(f: &PolyP, p: u64, rng: &mut SplitMix64) -> Vec<PolyP> {
    let mut out = Vec::new();
    // distinct-degree decomposition
    let mut f = f.clone();
    let mut h = PolyP::x();
    let mut d = 0usize;
    while f.deg() > 0 {
        d += 1;
        if (f.deg() as usize) < 2 * d {
            out.push((f.clone(), f.deg() as usize));
            break;
        }
        h = h.pow_mod(&BigUint::from(p), &f, p);
        let diff = h.sub(&PolyP::x(), p);
        let g = f.gcd(&diff, p);
        if g.deg() > 0 {
            out.push((g.clone(), d));
            f = f.div_rem(&g, p).0;
            h = h.rem(&f, p);
        }
    }
    let mut result = Vec::new();
    for (prod, deg) in out {
        equal_degree_split(&prod, deg, p, rng, &mut result);
    }
    result
}

/// Cantor-Zassenhaus equal-degree splitting (p odd).
fn equal_degree_split(f: &PolyP, d: usize, p: u64, rng: &mut SplitMix64, out: &mut Vec<PolyP>) {
    if f.deg() as usize == d {
        out.push(f.monic(p));
        return;
    }
    let exp = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let n = f.deg() as usize;
        let a = PolyP::new((0..n).map(|_| rng.next() % p).collect());
        if a.deg() < 1 {
            continue;
        }
        let g0 = f.gcd(&a, p);
        if g0.deg() > 0 && (g0.deg() as usize) < n {
            equal_degree_split(&g0, d, p, rng, out);
            equal_degree_split(&f.div_rem(&g0, p).0, d, p, rng, out);
            return;
        }
        let b = a.pow_mod(&exp, f, p);
        let g = f.gcd(&b.sub(&PolyP::one(), p), p);
        if g.deg() > 0 && (g.deg() as usize) < n {
            equal_degree_split(&g, d, p, rng, out);
            equal_degree_split(&f.div_rem(&g, p).0, d, p, rng, out);
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

/// Lifts `f = g*h mod p^m` to mod `p^(m+1)` for monic g, h with a fixed
/// Bezout pair mod p. Linear lifting, one digit per call.
fn hensel_step(
    f: &ZPoly,
    g: &mut ZPoly,
    h: &mut ZPoly,
    u: &PolyP,
    v: &PolyP,
    p: u64,
    pm: &BigInt,
) {
    let prod = g.mul(h);
    let diff = f.sub(&prod);
    // divide by p^m exactly
    let e = ZPoly::new(diff.c.iter().map(|a| a / pm).collect());
    let ebar = e.to_mod_p(p);
    let gp = g.to_mod_p(p);
    let hp = h.to_mod_p(p);
    let ve = v.mul(&ebar, p);
    let (q, sigma) = ve.div_rem(&gp, p);
    let tau = u.mul(&ebar, p).add(&q.mul(&hp, p), p);
    debug_assert!(tau.deg() < hp.deg());
    // balanced lifts of the corrections, scaled by p^m
    let lift = |poly: &PolyP| -> ZPoly {
        let half = p / 2;
        ZPoly::new(
            poly.c
                .iter()
                .map(|&a| {
                    let v = if a > half { BigInt::from(a) - BigInt::from(p) } else { BigInt::from(a) };
                    v * pm
                })
                .collect(),
        )
    };
    *g = zpoly_add(g, &lift(&sigma));
    *h = zpoly_add(h, &lift(&tau));
}

fn zpoly_add(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.c.len().max(b.c.len());
    ZPoly::new(
        (0..n)
            .map(|i| {
                a.c.get(i).cloned().unwrap_or_else(BigInt::zero)
                    + b.c.get(i).cloned().unwrap_or_else(BigInt::zero)
            })
            .collect(),
    )
}

/// Lifts a pairwise factorization of monic `f` from mod p to mod p^k.
fn lift_factorization(f: &ZPoly, factors_p: &[PolyP], p: u64, k: u32) -> Vec<ZPoly> {
    if factors_p.len() == 1 {
        let q = BigInt::from(p).pow(k);
        return vec![f.balanced_mod(&q)];
    }
    let g0 = factors_p[0].clone();
    let mut h0 = PolyP::one();
    for fac in &factors_p[1..] {
        h0 = h0.mul(fac, p);
    }
    let (one, u, v) = g0.extended_gcd(&h0, p);
    debug_assert_eq!(one.deg(), 0);
    // lift pair (g0, h0): u*g0 + v*h0 = 1, so sigma uses v on g-side
    let lift_from = |poly: &PolyP| -> ZPoly {
        let half = p / 2;
        ZPoly::new(
            poly.c
                .iter()
                .map(|&a| if a > half { BigInt::from(a) - BigInt::from(p) } else { BigInt::from(a) })
                .collect(),
        )
    };
    let mut g = lift_from(&g0);
    let mut h = lift_from(&h0);
    let mut pm = BigInt::from(p);
    for _ in 1..k {
        hensel_step(f, &mut g, &mut h, &u, &v, p, &pm);
        pm *= p;
        g = g.balanced_mod(&pm);
        h = h.balanced_mod(&pm);
    }
    let qk = BigInt::from(p).pow(k);
    g = g.balanced_mod(&qk);
    h = h.balanced_mod(&qk);
    let mut out = vec![g];
    out.extend(lift_factorization(&h, &factors_p[1..], p, k));
    out
}

// ---------------------------------------------------------------------------
// public entry points
// ---------------------------------------------------------------------------

/// Factors a squarefree polynomial over Q into monic irreducibles.
/// The leading coefficient is dropped; callers track it separately.
pub fn factor_squarefree(p: &UniPoly) -> Vec<UniPoly> {
    let var = p.var();
    let n = match p.degree() {
        None | Some(0) => return vec![],
        Some(n) => n,
    };
    if n == 1 {
        return vec![p.monic()];
    }
    let z = unipoly_to_primitive_zpoly(p);
    // monic transform: ft(T) = lc^(n-1) * f(T/lc), coefficient i picks up lc^(n-1-i)
    let lc = z.c.last().expect("nonzero").clone();
    let ft = ZPoly::new(
        z.c.iter()
            .enumerate()
            .map(|(i, a)| {
                if i == n {
                    BigInt::one()
                } else {
                    a * lc.pow((n - 1 - i) as u32)
                }
            })
            .collect(),
    );
    debug_assert!(ft.c.last().unwrap().is_one());

    // choose a prime keeping ft squarefree
    let mut prime = 3u64;
    let fp = loop {
        while !is_prime_u64(prime) {
            prime += 2;
        }
        let fp = ft.to_mod_p(prime);
        if fp.deg() == n as i64 {
            let d = fp.derivative(prime);
            if fp.gcd(&d, prime).deg() == 0 {
                break fp;
            }
        }
        prime += 2;
    };

    let mut rng = SplitMix64::new(0x5eed_u64 ^ prime);
    let mut factors_p = factor_mod_p(&fp.monic(prime), prime, &mut rng);
    if factors_p.len() == 1 {
        return vec![p.monic()];
    }
    factors_p.sort_by_key(|f| (f.deg(), f.c.clone()));

    // Mignotte-style bound on factor coefficients of the monic ft
    let norm_sq = ft.norm2_sq();
    let mut bound = BigInt::one() << (n + 1);
    let mut s = BigInt::one();
    while &s * &s < norm_sq {
        s += 1;
    }
    bound *= s;
    let mut k = 1u32;
    let mut pk = BigInt::from(prime);
    while pk <= &bound * 2 {
        pk *= prime;
        k += 1;
    }

    let lifted = lift_factorization(&ft, &factors_p, prime, k);

    // subset recombination with exact division over Z
    let mut remaining: Vec<ZPoly> = lifted;
    let mut target = ft;
    let mut found: Vec<ZPoly> = Vec::new();
    'restart: loop {
        let r = remaining.len();
        if r == 0 {
            break;
        }
        let max_size = r / 2;
        for size in 1..=max_size {
            for mask in 1u32..(1u32 << r) {
                if mask.count_ones() as usize != size {
                    continue;
                }
                let mut cand = ZPoly::new(vec![BigInt::one()]);
                for (i, fac) in remaining.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        cand = cand.mul(fac).balanced_mod(&pk);
                    }
                }
                if divides_monic(&target, &cand) {
                    target = exact_div_monic(&target, &cand);
                    found.push(cand);
                    remaining = remaining
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << *i) == 0)
                        .map(|(_, f)| f.clone())
                        .collect();
                    continue 'restart;
                }
            }
        }
        // rest is irreducible
        found.push(target.clone());
        break;
    }

    let mut out: Vec<UniPoly> = found
        .iter()
        .filter(|f| f.deg() > 0)
        .map(|f| {
            // undo the monic transform: g(T) -> monic(g(lc*T))
            let g = zpoly_to_monic_unipoly(f, var);
            let lc_rat = Rat::from_integer(lc.clone());
            let scaled = UniPoly::new(
                g.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c * &lc_rat.clone().pow(i as i32))
                    .collect(),
                var,
            );
            scaled.monic()
        })
        .collect();
    out.sort_by(|a, b| compare_polys(a, b));
    debug_assert_eq!(
        out.iter().fold(UniPoly::one(var), |acc, f| &acc * f),
        p.monic()
    );
    out
}

fn divides_monic(f: &ZPoly, g: &ZPoly) -> bool {
    if g.deg() <= 0 || g.deg() > f.deg() || !g.c.last().unwrap().is_one() {
        return false;
    }
    let mut rem = f.c.clone();
    let glen = g.c.len();
    for i in (0..rem.len() - glen + 1).rev() {
        let q = rem[i + glen - 1].clone();
        if q.is_zero() {
            continue;
        }
        for (j, gc) in g.c.iter().enumerate() {
            let delta = gc * &q;
            rem[i + j] -= delta;
        }
    }
    rem.truncate(glen - 1);
    rem.iter().all(|a| a.is_zero())
}

fn exact_div_monic(f: &ZPoly, g: &ZPoly) -> ZPoly {
    let mut rem = f.c.clone();
    let glen = g.c.len();
    let mut quo = vec![BigInt::zero(); rem.len() - glen + 1];
    for i in (0..quo.len()).rev() {
        let q = rem[i + glen - 1].clone();
        quo[i] = q.clone();
        if q.is_zero() {
            continue;
        }
        for (j, gc) in g.c.iter().enumerate() {
            let delta = gc * &q;
            rem[i + j] -= delta;
        }
    }
    ZPoly::new(quo)
}

/// Deterministic ordering of polynomials: by degree, then coefficients.
pub fn compare_polys(a: &UniPoly, b: &UniPoly) -> std::cmp::Ordering {
    a.degree_i64()
        .cmp(&b.degree_i64())
        .then_with(|| {
            for i in (0..a.coeffs().len().max(b.coeffs().len())).rev() {
                let ord = a.coeff(i).cmp(&b.coeff(i));
                if ord != std::cmp::Ordering::Equal {
                    return ord;
                }
            }
            std::cmp::Ordering::Equal
        })
}

/// Full factorization over Q: monic irreducible factors with multiplicity,
/// sorted canonically. The input's leading coefficient is not returned.
pub fn factor_unipoly(p: &UniPoly) -> Result<Vec<(UniPoly, usize)>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut out = Vec::new();
    for (part, mult) in p.squarefree_decomposition()? {
        for f in factor_squarefree(&part) {
            out.push((f, mult));
        }
    }
    out.sort_by(|a, b| compare_polys(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| rat(c)).collect(), Var::T)
    }

    #[test]
    fn splits_quadratics() {
        // T^2 - 1 = (T-1)(T+1)
        let f = p(&[-1, 0, 1]);
        let fs = factor_unipoly(&f).unwrap();
        assert_eq!(fs, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
        // T^2 + 1 irreducible
        let f = p(&[1, 0, 1]);
        assert_eq!(factor_unipoly(&f).unwrap(), vec![(f, 1)]);
    }

    #[test]
    fn multiplicities() {
        // (T-1)^2 (T+2); canonical order compares coefficients from the top
        let f = p(&[2, -3, 0, 1]);
        let fs = factor_unipoly(&f).unwrap();
        assert_eq!(fs, vec![(p(&[-1, 1]), 2), (p(&[2, 1]), 1)]);
    }

    #[test]
    fn bigger_example() {
        // (T^2+T+1)(T^3-2)(T-5)
        let f = &(&p(&[1, 1, 1]) * &p(&[-2, 0, 0, 1])) * &p(&[-5, 1]);
        let fs = factor_unipoly(&f).unwrap();
        let expect = vec![(p(&[-5, 1]), 1), (p(&[1, 1, 1]), 1), (p(&[-2, 0, 0, 1]), 1)];
        assert_eq!(fs, expect);
    }

    #[test]
    fn rational_coefficients() {
        // (T - 1/2)(T + 1/3)
        let f = &p(&[0, 1]) + &UniPoly::constant(rat(-1) / rat(2), Var::T);
        let g = &p(&[0, 1]) + &UniPoly::constant(rat(1) / rat(3), Var::T);
        let prod = &f * &g;
        let fs = factor_unipoly(&prod).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().any(|(x, _)| x == &f));
        assert!(fs.iter().any(|(x, _)| x == &g));
    }

    #[test]
    fn degree_eight_two_quartics() {
        // (T^4+1)(T^4-2) stays as two irreducible quartics
        let f = &p(&[1, 0, 0, 0, 1]) * &p(&[-2, 0, 0, 0, 1]);
        let fs = factor_unipoly(&f).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(g, m)| g.degree() == Some(4) && *m == 1));
    }
}
