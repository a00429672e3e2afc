//! Exact real-root counting and certification.
//!
//! Sturm chains decide counts over intervals and the whole line; sign
//! conditions on Hermite-matrix minors decide T-real-rootedness everywhere
//! on R without sampling. Rejections carry replayable witnesses.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bipoly::BiPoly;
use crate::error::Error;
use crate::factor::factor_unipoly;
use crate::hermite::hermite_matrix;
use crate::num::{rat, Rat};
use crate::ternary::TernaryForm;
use crate::unipoly::{UniPoly, Var};

/// Interval endpoint for Sturm queries.
#[derive(Debug, Clone, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

/// Sturm chain of p: the signed remainder sequence starting (p, p').
pub fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().expect("nonempty").is_zero() {
        let n = chain.len();
        let r = chain[n - 2]
            .div_rem(&chain[n - 1])
            .expect("nonzero divisor")
            .1;
        chain.push(-&r);
    }
    chain.pop();
    chain
}

fn sign_at(p: &UniPoly, at: &Bound) -> i32 {
    if p.is_zero() {
        return 0;
    }
    match at {
        Bound::Finite(x) => crate::num::sign(&p.eval(x)),
        Bound::PosInf => crate::num::sign(&p.lc()),
        Bound::NegInf => {
            let s = crate::num::sign(&p.lc());
            if p.degree().expect("nonzero") % 2 == 0 {
                s
            } else {
                -s
            }
        }
    }
}

fn sign_variations(chain: &[UniPoly], at: &Bound) -> usize {
    let mut count = 0;
    let mut last = 0i32;
    for p in chain {
        let s = sign_at(p, at);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `p` in `(a, b]`.
///
/// Works for non-squarefree `p` (the chain shares the repeated part, which
/// drops out of the variation count). Errors when a finite endpoint is a
/// root of `p`.
pub fn sturm_count(p: &UniPoly, a: &Bound, b: &Bound) -> Result<usize, Error> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    for end in [a, b] {
        if let Bound::Finite(x) = end {
            if p.eval(x).is_zero() {
                return Err(Error::RootAtEndpoint);
            }
        }
    }
    let chain = sturm_chain(p);
    let va = sign_variations(&chain, a);
    let vb = sign_variations(&chain, b);
    Ok(va.saturating_sub(vb))
}

/// Number of distinct real roots on the whole line.
pub fn count_real_roots(p: &UniPoly) -> Result<usize, Error> {
    sturm_count(p, &Bound::NegInf, &Bound::PosInf)
}

/// All complex roots real (with multiplicity allowed), for monic p.
pub fn univariate_real_rooted(p: &UniPoly) -> Result<bool, Error> {
    let q = p.squarefree_part()?;
    match q.degree() {
        None | Some(0) => Ok(true),
        Some(d) => Ok(count_real_roots(&q)? == d),
    }
}

/// All roots real and simple, for monic p.
pub fn univariate_strictly_real_rooted(p: &UniPoly) -> Result<bool, Error> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !p.gcd(&p.derivative()).is_one() && p.degree() != Some(0) {
        return Ok(false);
    }
    match p.degree() {
        None | Some(0) => Ok(true),
        Some(d) => Ok(count_real_roots(p)? == d),
    }
}

/// Strict upper bound on the absolute value of all real roots.
pub fn root_bound(p: &UniPoly) -> Rat {
    if p.is_constant() {
        return Rat::one();
    }
    Rat::one() + p.height() / p.lc().abs()
}

/// Isolating intervals for the distinct real roots of a squarefree `p`:
/// `(r, r)` marks an exact rational root, `(a, b)` an open interval holding
/// exactly one root, with `a`, `b` non-roots.
pub fn isolate_real_roots(p: &UniPoly) -> Result<Vec<(Rat, Rat)>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    if p.is_constant() {
        return Ok(vec![]);
    }
    debug_assert!(p.gcd(&p.derivative()).is_one(), "input must be squarefree");
    let bound = root_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-&bound, bound.clone())];
    while let Some((a, b)) = stack.pop() {
        let n = sturm_count(p, &Bound::Finite(a.clone()), &Bound::Finite(b.clone()))?;
        match n {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let mid = (&a + &b) / rat(2);
                if p.eval(&mid).is_zero() {
                    let mut delta = (&b - &a) / rat(4);
                    loop {
                        let lo = &mid - &delta;
                        let hi = &mid + &delta;
                        if !p.eval(&lo).is_zero()
                            && !p.eval(&hi).is_zero()
                            && sturm_count(p, &Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()))? == 1
                        {
                            out.push((mid.clone(), mid.clone()));
                            stack.push((a.clone(), lo));
                            stack.push((hi, b.clone()));
                            break;
                        }
                        delta = delta / rat(2);
                    }
                } else {
                    stack.push((a, mid.clone()));
                    stack.push((mid, b));
                }
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Halves an isolating interval once, keeping the root inside.
pub fn refine_interval(p: &UniPoly, iv: &(Rat, Rat)) -> Result<(Rat, Rat), Error> {
    if iv.0 == iv.1 {
        return Ok(iv.clone());
    }
    let mid = (&iv.0 + &iv.1) / rat(2);
    if p.eval(&mid).is_zero() {
        return Ok((mid.clone(), mid));
    }
    let left = sturm_count(p, &Bound::Finite(iv.0.clone()), &Bound::Finite(mid.clone()))?;
    if left == 1 {
        Ok((iv.0.clone(), mid))
    } else {
        Ok((mid, iv.1.clone()))
    }
}

// ---------------------------------------------------------------------------
// sign conditions on the whole line
// ---------------------------------------------------------------------------

/// Decides `p(x) >= 0` for all real x. On failure returns a rational
/// witness with `p(x) < 0` (one always exists).
pub fn nonneg_on_r(p: &UniPoly) -> Result<(bool, Option<Rat>), Error> {
    if p.is_zero() {
        return Ok((true, None));
    }
    let deg = p.degree().expect("nonzero");
    if deg == 0 {
        return if p.coeff(0).is_positive() {
            Ok((true, None))
        } else {
            Ok((false, Some(Rat::zero())))
        };
    }
    if deg % 2 == 1 || p.lc().is_negative() {
        // negative beyond the root bound on at least one side
        let b = &root_bound(p) + &Rat::one();
        for x in [-&b, b.clone()] {
            if p.eval(&x).is_negative() {
                return Ok((false, Some(x)));
            }
        }
        unreachable!("odd degree or negative lc is negative at one end");
    }
    // even degree, positive leading coefficient: sign changes happen exactly
    // at real roots of odd multiplicity
    let parts = p.squarefree_decomposition()?;
    let squarefree = p.squarefree_part()?;
    for (q, j) in &parts {
        if j % 2 == 0 {
            continue;
        }
        if count_real_roots(q)? == 0 {
            continue;
        }
        // p flips sign at each real root of q: isolate one against the full
        // squarefree part so no other root interferes
        let roots_q = isolate_real_roots(q)?;
        let (mut lo, mut hi) = roots_q[0].clone();
        if lo == hi {
            // exact rational root: step off it within the isolation of p
            let mut iv = exact_root_neighborhood(&squarefree, &lo)?;
            loop {
                for x in [&iv.0, &iv.1] {
                    if p.eval(x).is_negative() {
                        return Ok((false, Some(x.clone())));
                    }
                }
                iv = shrink_toward(&iv, &lo);
            }
        }
        // refine against the squarefree part until it isolates there too
        loop {
            if !squarefree.eval(&lo).is_zero()
                && !squarefree.eval(&hi).is_zero()
                && sturm_count(
                    &squarefree,
                    &Bound::Finite(lo.clone()),
                    &Bound::Finite(hi.clone()),
                )? == 1
            {
                break;
            }
            let r = refine_interval(q, &(lo.clone(), hi.clone()))?;
            lo = r.0;
            hi = r.1;
            if lo == hi {
                let mut iv = exact_root_neighborhood(&squarefree, &lo)?;
                loop {
                    for x in [&iv.0, &iv.1] {
                        if p.eval(x).is_negative() {
                            return Ok((false, Some(x.clone())));
                        }
                    }
                    iv = shrink_toward(&iv, &lo);
                }
            }
        }
        let (pa, pb) = (p.eval(&lo), p.eval(&hi));
        debug_assert!(pa.is_negative() != pb.is_negative());
        let witness = if pa.is_negative() { lo } else { hi };
        return Ok((false, Some(witness)));
    }
    Ok((true, None))
}

/// An interval around an exact root `r` of squarefree `q` containing no other
/// root of `q`, with non-root endpoints.
fn exact_root_neighborhood(q: &UniPoly, r: &Rat) -> Result<(Rat, Rat), Error> {
    let mut delta = Rat::one();
    loop {
        let lo = r - &delta;
        let hi = r + &delta;
        if !q.eval(&lo).is_zero() && !q.eval(&hi).is_zero() {
            let n = sturm_count(q, &Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()))?;
            if n == 1 {
                return Ok((lo, hi));
            }
        }
        delta = delta / rat(2);
    }
}

fn shrink_toward(iv: &(Rat, Rat), center: &Rat) -> (Rat, Rat) {
    (
        (&iv.0 + center) / rat(2),
        (&iv.1 + center) / rat(2),
    )
}

/// Decides `p(x) > 0` for all real x. On failure the witness (if rational)
/// satisfies `p(x) <= 0`; a touch at an irrational point yields `None`.
pub fn positive_on_r(p: &UniPoly) -> Result<(bool, Option<Rat>), Error> {
    if p.is_zero() {
        return Ok((false, Some(Rat::zero())));
    }
    let (nonneg, witness) = nonneg_on_r(p)?;
    if !nonneg {
        return Ok((false, witness));
    }
    let squarefree = p.squarefree_part()?;
    if squarefree.is_constant() {
        return Ok((p.coeff(0).is_positive(), (!p.coeff(0).is_positive()).then(Rat::zero)));
    }
    if count_real_roots(&squarefree)? == 0 {
        return Ok((true, None));
    }
    // p >= 0 with a real zero: rational zeros give exact witnesses
    let witness = factor_unipoly(&squarefree)?
        .into_iter()
        .find(|(g, _)| g.degree() == Some(1))
        .map(|(g, _)| -&g.coeff(0));
    Ok((false, witness))
}

// ---------------------------------------------------------------------------
// certificates
// ---------------------------------------------------------------------------

/// Outcome of a real-rootedness certification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    RealRooted,
    StrictlyRealRooted,
    Rejected,
}

/// One principal minor of the Hermite matrix and its sign evidence.
#[derive(Debug, Clone)]
pub struct MinorEvidence {
    /// Row/column subset of the Hermite matrix (empty marks auxiliary checks).
    pub indices: Vec<usize>,
    pub minor: UniPoly,
    /// Whether the required sign condition holds on all of R.
    pub ok: bool,
}

/// Replayable certificate for (strict) T-real-rootedness.
#[derive(Debug, Clone)]
pub struct RootCertificate {
    pub verdict: Verdict,
    pub witnesses: Vec<MinorEvidence>,
    /// Rational x with a concrete failure of the certified property, when
    /// one exists (sign-touching at irrational points has none).
    pub sample: Option<Rat>,
}

impl RootCertificate {
    pub fn accepted(&self) -> bool {
        self.verdict != Verdict::Rejected
    }
}

/// Certifies that `f(x, T)` has only real roots for every real x, through
/// positive semidefiniteness of the Hermite matrix over the whole line:
/// every principal minor must be nonnegative on R.
pub fn certify_real_rooted(f: &BiPoly) -> Result<RootCertificate, Error> {
    f.require_monic()?;
    let h = hermite_matrix(f)?;
    let mut witnesses = Vec::new();
    for (indices, minor) in h.principal_minors() {
        let (ok, wit) = nonneg_on_r(&minor)?;
        witnesses.push(MinorEvidence { indices, minor, ok });
        if !ok {
            let sample = wit.expect("nonnegativity failures have rational witnesses");
            return Ok(RootCertificate {
                verdict: Verdict::Rejected,
                witnesses,
                sample: Some(sample),
            });
        }
    }
    Ok(RootCertificate {
        verdict: Verdict::RealRooted,
        witnesses,
        sample: None,
    })
}

/// Certifies that `f(x, T)` has only real simple roots for every real x:
/// every leading principal minor of the Hermite matrix must be strictly
/// positive on R.
pub fn certify_strictly_real_rooted(f: &BiPoly) -> Result<RootCertificate, Error> {
    f.require_monic()?;
    let h = hermite_matrix(f)?;
    let mut witnesses = Vec::new();
    for (k, minor) in h.leading_principal_minors().into_iter().enumerate() {
        let (ok, wit) = positive_on_r(&minor)?;
        witnesses.push(MinorEvidence {
            indices: (0..=k).collect(),
            minor,
            ok,
        });
        if !ok {
            return Ok(RootCertificate {
                verdict: Verdict::Rejected,
                witnesses,
                sample: wit,
            });
        }
    }
    Ok(RootCertificate {
        verdict: Verdict::StrictlyRealRooted,
        witnesses,
        sample: None,
    })
}

/// Runs both certifications and reports the strongest verdict.
pub fn certify(f: &BiPoly) -> Result<RootCertificate, Error> {
    let strict = certify_strictly_real_rooted(f)?;
    if strict.accepted() {
        return Ok(strict);
    }
    certify_real_rooted(f)
}

// ---------------------------------------------------------------------------
// roots at infinity
// ---------------------------------------------------------------------------

/// The fiber over infinity after rescaling by X^k: substitutes X^{-1} = 0
/// into `X^{-kd} f(X, X^k T)`. Requires the (k,d) grading; the result is
/// monic of degree d.
pub fn roots_at_infinity(f: &BiPoly, k: usize, d: usize) -> Result<UniPoly, Error> {
    f.require_monic()?;
    if f.degree_t() != Some(d) {
        return Err(Error::Precondition(format!(
            "degree in T is {:?}, expected {d}",
            f.degree_t()
        )));
    }
    if !f.grading_member(k, d) {
        return Err(Error::GradingViolated(format!(
            "polynomial leaves Q[X^-1, T] under the (k={k}, d={d}) rescaling"
        )));
    }
    let coeffs = (0..=d)
        .map(|i| f.t_coeff(i).coeff(k * (d - i)))
        .collect();
    Ok(UniPoly::new(coeffs, Var::T))
}

// ---------------------------------------------------------------------------
// smoothness
// ---------------------------------------------------------------------------

/// Decides whether the affine curve of the squarefree core is smooth over C:
/// no point of V(f~) annihilates both partial derivatives.
///
/// Exact procedure: candidate x-coordinates of singular points are the roots
/// of `Res_T(p, p_T) * lc_T(p)` (p the primitive part) plus the roots of the
/// content; for each irreducible factor m of those, the gcd of
/// {p, p_T, p_X} is computed over the field Q[X]/(m) and a positive T-degree
/// flags a singular point.
pub fn smoothness_check(f: &BiPoly) -> Result<bool, Error> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let core = f.squarefree_core()?;
    if core.degree_t().is_none() {
        return Ok(true); // constant: empty curve
    }
    let content = core.content_x();
    let pp = core.primitive_part();
    // vertical-line components: singular iff the rest of the curve meets them
    if content.degree().map_or(false, |d| d > 0) {
        for (m, _) in factor_unipoly(&content)? {
            let reduced = reduce_bipoly_mod(&pp, &m);
            if reduced.len() > 1 {
                return Ok(false);
            }
        }
    }
    let d = pp.degree_t().expect("nonzero");
    if d == 0 {
        return Ok(true); // only disjoint vertical lines
    }
    let pt = pp.derivative_t();
    let px = pp.derivative_x();
    let res = pp.resultant_t(&pt)?;
    let candidates = (&res * &pp.lc_t()).squarefree_part()?;
    if candidates.is_constant() {
        return Ok(true);
    }
    for (m, _) in factor_unipoly(&candidates)? {
        let a = reduce_bipoly_mod(&pp, &m);
        let b = reduce_bipoly_mod(&pt, &m);
        let c = reduce_bipoly_mod(&px, &m);
        let g = gcd_mod(&gcd_mod(&a, &b, &m), &c, &m);
        if g.len() > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// T-coefficients of `f` reduced mod the irreducible m(X), trimmed in T.
fn reduce_bipoly_mod(f: &BiPoly, m: &UniPoly) -> Vec<UniPoly> {
    let mut coeffs: Vec<UniPoly> = f
        .t_coeffs()
        .iter()
        .map(|c| c.div_rem(m).expect("nonzero modulus").1)
        .collect();
    while coeffs.last().map_or(false, |c| c.is_zero()) {
        coeffs.pop();
    }
    coeffs
}

/// Monic gcd of T-polynomials with coefficients in the field Q[X]/(m).
fn gcd_mod(a: &[UniPoly], b: &[UniPoly], m: &UniPoly) -> Vec<UniPoly> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let r = rem_mod(&a, &b, m);
        a = b;
        b = r;
    }
    // normalize monic over the extension field
    if let Some(lc) = a.last().cloned() {
        let inv = invert_mod(&lc, m);
        for c in &mut a {
            *c = (&*c * &inv).div_rem(m).expect("nonzero modulus").1;
        }
    }
    a
}

fn rem_mod(a: &[UniPoly], b: &[UniPoly], m: &UniPoly) -> Vec<UniPoly> {
    assert!(!b.is_empty());
    let mut rem = a.to_vec();
    let inv_lc = invert_mod(b.last().expect("nonzero"), m);
    while rem.len() >= b.len() {
        let q = (&rem.last().expect("nonempty").clone() * &inv_lc)
            .div_rem(m)
            .expect("nonzero modulus")
            .1;
        let shift = rem.len() - b.len();
        for (j, bc) in b.iter().enumerate() {
            let delta = (&q * bc).div_rem(m).expect("nonzero modulus").1;
            rem[shift + j] = &rem[shift + j] - &delta;
        }
        rem.pop();
        while rem.last().map_or(false, |c| {
            c.div_rem(m).expect("nonzero modulus").1.is_zero()
        }) {
            rem.pop();
        }
    }
    rem.iter()
        .map(|c| c.div_rem(m).expect("nonzero modulus").1)
        .collect()
}

/// Inverse in Q[X]/(m) for irreducible m.
fn invert_mod(a: &UniPoly, m: &UniPoly) -> UniPoly {
    let a = a.div_rem(m).expect("nonzero modulus").1;
    let (g, s, _) = a.extended_gcd(m);
    assert!(g.is_one(), "element not invertible mod irreducible modulus");
    s.div_rem(m).expect("nonzero modulus").1
}

// ---------------------------------------------------------------------------
// hyperbolicity
// ---------------------------------------------------------------------------

/// Decides hyperbolicity of a ternary form with respect to a direction:
/// `F(e) > 0` and all restrictions to lines through e are real rooted.
/// Two affine charts of the normalized form cover every line.
pub fn is_hyperbolic(form: &TernaryForm, e: &[Rat; 3]) -> Result<bool, Error> {
    let _d = form.homogeneous_degree()?;
    let fe = form.eval(e);
    if fe.is_zero() {
        return Err(Error::ZeroAtDirection);
    }
    if fe.is_negative() {
        return Ok(false);
    }
    let m = basis_through(e);
    let g = form.substitute_linear(&m).scale(&fe.recip());
    let chart1 = g.chart_y();
    let chart2 = g.chart_x();
    Ok(certify_real_rooted(&chart1)?.accepted() && certify_real_rooted(&chart2)?.accepted())
}

/// Completes `e` to a rational basis with `e` as the last column.
pub fn basis_through(e: &[Rat; 3]) -> [[Rat; 3]; 3] {
    let pivot = (0..3)
        .max_by(|&i, &j| e[i].abs().cmp(&e[j].abs()))
        .expect("three entries");
    let others: Vec<usize> = (0..3).filter(|&i| i != pivot).collect();
    let mut m = [
        [Rat::zero(), Rat::zero(), e[0].clone()],
        [Rat::zero(), Rat::zero(), e[1].clone()],
        [Rat::zero(), Rat::zero(), e[2].clone()],
    ];
    m[others[0]][0] = Rat::one();
    m[others[1]][1] = Rat::one();
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::ratio;

    fn t_poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| rat(c)).collect(), Var::T)
    }

    #[test]
    fn sturm_examples() {
        // T^2 + 1: no real roots
        assert_eq!(count_real_roots(&t_poly(&[1, 0, 1])).unwrap(), 0);
        // T^2 - 1 on (-2, 2]: both roots
        assert_eq!(
            sturm_count(
                &t_poly(&[-1, 0, 1]),
                &Bound::Finite(rat(-2)),
                &Bound::Finite(rat(2))
            )
            .unwrap(),
            2
        );
        // T^3 - T on (-2, 1/2]: roots -1 and 0
        assert_eq!(
            sturm_count(
                &t_poly(&[0, -1, 0, 1]),
                &Bound::Finite(rat(-2)),
                &Bound::Finite(ratio(1, 2))
            )
            .unwrap(),
            2
        );
        // endpoint at a root errors
        assert!(sturm_count(
            &t_poly(&[-1, 0, 1]),
            &Bound::Finite(rat(1)),
            &Bound::PosInf
        )
        .is_err());
        // non-squarefree input still counts distinct roots
        let sq = &t_poly(&[-1, 1]).pow(2) * &t_poly(&[2, 1]);
        assert_eq!(count_real_roots(&sq).unwrap(), 2);
    }

    #[test]
    fn isolation() {
        let p = t_poly(&[0, -1, 0, 1]); // T^3 - T, roots -1, 0, 1
        let ivs = isolate_real_roots(&p).unwrap();
        assert_eq!(ivs.len(), 3);
        for (a, b) in &ivs {
            if a == b {
                assert!(p.eval(a).is_zero());
            } else {
                assert_eq!(
                    sturm_count(&p, &Bound::Finite(a.clone()), &Bound::Finite(b.clone())).unwrap(),
                    1
                );
            }
        }
    }

    #[test]
    fn sign_conditions() {
        // X^2 + 1 > 0
        let p = UniPoly::new(vec![rat(1), rat(0), rat(1)], Var::X);
        assert_eq!(positive_on_r(&p).unwrap(), (true, None));
        // X^2 >= 0 but not > 0, witness 0
        let p = UniPoly::monomial(rat(1), 2, Var::X);
        assert_eq!(nonneg_on_r(&p).unwrap(), (true, None));
        assert_eq!(positive_on_r(&p).unwrap(), (false, Some(Rat::zero())));
        // X^2 - 1 is negative somewhere
        let p = UniPoly::new(vec![rat(-1), rat(0), rat(1)], Var::X);
        let (ok, w) = nonneg_on_r(&p).unwrap();
        assert!(!ok);
        assert!(p.eval(&w.unwrap()).is_negative());
        // -2 < 0
        let (ok, w) = nonneg_on_r(&UniPoly::constant(rat(-2), Var::X)).unwrap();
        assert!(!ok && w.is_some());
    }

    #[test]
    fn certify_examples() {
        // T^2 - X^2: real rooted, not strictly
        let f = &BiPoly::t().pow(2) - &BiPoly::x().pow(2);
        assert_eq!(certify_real_rooted(&f).unwrap().verdict, Verdict::RealRooted);
        let strict = certify_strictly_real_rooted(&f).unwrap();
        assert_eq!(strict.verdict, Verdict::Rejected);
        assert_eq!(strict.sample, Some(Rat::zero()));
        // T^2 + X^2 + 1: rejected with witness x = 0
        let g = &(&BiPoly::t().pow(2) + &BiPoly::x().pow(2)) + &BiPoly::one();
        let cert = certify_real_rooted(&g).unwrap();
        assert_eq!(cert.verdict, Verdict::Rejected);
        let x = cert.sample.unwrap();
        let fiber = g.eval_x(&x);
        assert!(count_real_roots(&fiber).unwrap() < 2);
        // (T-X)^2 (T+X): real rooted everywhere, never strict
        let tmx = &BiPoly::t() - &BiPoly::x();
        let h = &tmx.pow(2) * &(&BiPoly::t() + &BiPoly::x());
        assert!(certify_real_rooted(&h).unwrap().accepted());
        assert!(!certify_strictly_real_rooted(&h).unwrap().accepted());
        // T^2 - X^2 - 1: strictly real rooted
        let c = &f - &BiPoly::one();
        assert_eq!(
            certify_strictly_real_rooted(&c).unwrap().verdict,
            Verdict::StrictlyRealRooted
        );
        // T^3 - (X^2+1)T: strictly real rooted
        let k = &BiPoly::t().pow(3)
            - &(&BiPoly::t() * &(&BiPoly::x().pow(2) + &BiPoly::one()));
        assert!(certify_strictly_real_rooted(&k).unwrap().accepted());
    }

    #[test]
    fn infinity_examples() {
        // T^2 - X^2 - 1 with k=1: T^2 - 1
        let f = &(&BiPoly::t().pow(2) - &BiPoly::x().pow(2)) - &BiPoly::one();
        assert_eq!(roots_at_infinity(&f, 1, 2).unwrap(), t_poly(&[-1, 0, 1]));
        // (T+X)^2 with k=1: (T+1)^2
        let g = (&BiPoly::t() + &BiPoly::x()).pow(2);
        assert_eq!(roots_at_infinity(&g, 1, 2).unwrap(), t_poly(&[1, 2, 1]));
        // T^3 - (X^2+1)T with k=1: T^3 - T
        let h = &BiPoly::t().pow(3)
            - &(&BiPoly::t() * &(&BiPoly::x().pow(2) + &BiPoly::one()));
        assert_eq!(roots_at_infinity(&h, 1, 3).unwrap(), t_poly(&[0, -1, 0, 1]));
        // grading violation errors
        let bad = &BiPoly::t().pow(2) - &BiPoly::x().pow(3);
        assert!(roots_at_infinity(&bad, 1, 2).is_err());
    }

    #[test]
    fn smoothness_examples() {
        // node at the origin
        let f = &BiPoly::t().pow(2) - &BiPoly::x().pow(2);
        assert!(!smoothness_check(&f).unwrap());
        // smooth conic
        let g = &f - &BiPoly::one();
        assert!(smoothness_check(&g).unwrap());
        // cusp
        let h = &BiPoly::t().pow(2) - &BiPoly::x().pow(3);
        assert!(!smoothness_check(&h).unwrap());
        // squarefree core is taken first: (T^2 - X^2 - 1)^2 is smooth
        assert!(smoothness_check(&g.pow(2)).unwrap());
        // vertical line times conic meeting it: singular crossings
        let crossing = &BiPoly::x() * &g;
        assert!(!smoothness_check(&crossing).unwrap());
        // horizontal lines: smooth
        let lines = &BiPoly::t().pow(2) - &BiPoly::one();
        assert!(smoothness_check(&lines).unwrap());
    }

    #[test]
    fn hyperbolicity_examples() {
        let e3 = [rat(0), rat(0), rat(1)];
        // cone Z^2 - X^2 - Y^2
        let cone = TernaryForm::from_terms([
            ((0, 0, 2), rat(1)),
            ((2, 0, 0), rat(-1)),
            ((0, 2, 0), rat(-1)),
        ]);
        assert!(is_hyperbolic(&cone, &e3).unwrap());
        // sphere is not hyperbolic
        let sphere = TernaryForm::from_terms([
            ((0, 0, 2), rat(1)),
            ((2, 0, 0), rat(1)),
            ((0, 2, 0), rat(1)),
        ]);
        assert!(!is_hyperbolic(&sphere, &e3).unwrap());
        // XYZ with direction (1,1,1)
        let xyz = TernaryForm::monomial(rat(1), (1, 1, 1));
        let e = [rat(1), rat(1), rat(1)];
        assert!(is_hyperbolic(&xyz, &e).unwrap());
        // zero at direction errors
        assert!(is_hyperbolic(&xyz, &e3).is_err());
    }
}
