//! Multiplicity-reducing perturbations and the smooth approximation pipeline.
//!
//! The operator `P_a: g -> g + a g'` strips one unit of multiplicity off
//! every root while keeping real-rootedness; the scaling operator
//! `Q_{d,b}: g -> b^{-d} g(bT)` with `b = X^k` moves the fiber at infinity
//! into view. The pipeline runs the four perturbation stages with exact
//! re-verification after every step, halving epsilon on failure.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bipoly::BiPoly;
use crate::error::Error;
use crate::num::{rat, Rat};
use crate::real_roots::{
    certify_real_rooted, certify_strictly_real_rooted, isolate_real_roots, refine_interval,
    roots_at_infinity, smoothness_check, univariate_real_rooted,
    univariate_strictly_real_rooted,
};
use crate::unipoly::{UniPoly, Var};

// ---------------------------------------------------------------------------
// operators
// ---------------------------------------------------------------------------

/// `P_a g = g + a * dg/dT` for bivariate g and a in Q[X].
pub fn apply_p(g: &BiPoly, a: &UniPoly) -> BiPoly {
    &(g.derivative_t().mul_x_poly(a)) + g
}

/// `P_eps g = g + eps g'` for univariate g.
pub fn apply_p_uni(g: &UniPoly, eps: &Rat) -> UniPoly {
    &g.derivative().scale(eps) + g
}

/// Element of Q[X, X^-1][T], stored as `X^-shift * poly`.
#[derive(Debug, Clone)]
pub struct LaurentBiPoly {
    poly: BiPoly,
    shift: usize,
}

impl LaurentBiPoly {
    pub fn new(poly: BiPoly, shift: usize) -> Self {
        LaurentBiPoly { poly, shift }.normalized()
    }

    fn normalized(self) -> Self {
        if self.shift == 0 || self.poly.is_zero() {
            return LaurentBiPoly { poly: self.poly, shift: 0 };
        }
        // strip the largest common power of X, capped by the shift
        let mut common = self.shift;
        for c in self.poly.t_coeffs() {
            if c.is_zero() {
                continue;
            }
            let low = c
                .coeffs()
                .iter()
                .position(|x| !x.is_zero())
                .expect("nonzero");
            common = common.min(low);
            if common == 0 {
                return self;
            }
        }
        let reduced = BiPoly::new(
            self.poly
                .t_coeffs()
                .iter()
                .map(|c| {
                    UniPoly::new(c.coeffs().iter().skip(common).cloned().collect(), Var::X)
                })
                .collect(),
        );
        LaurentBiPoly {
            poly: reduced,
            shift: self.shift - common,
        }
    }

    pub fn poly(&self) -> &BiPoly {
        &self.poly
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    /// `P_a` on Laurent elements: the shift is untouched.
    pub fn apply_p(&self, a: &UniPoly) -> LaurentBiPoly {
        LaurentBiPoly::new(apply_p(&self.poly, a), self.shift)
    }

    /// Value at X = infinity, i.e. X^-1 = 0: picks the coefficient of
    /// X^shift in every T-coefficient. Errors when some coefficient carries
    /// a higher power of X (the element leaves Q[X^-1, T]).
    pub fn eval_at_infinity(&self) -> Result<UniPoly, Error> {
        let mut coeffs = Vec::with_capacity(self.poly.t_coeffs().len());
        for c in self.poly.t_coeffs() {
            if c.degree().map_or(false, |d| d > self.shift) {
                return Err(Error::GradingViolated(
                    "positive powers of X survive at infinity".into(),
                ));
            }
            coeffs.push(c.coeff(self.shift));
        }
        Ok(UniPoly::new(coeffs, Var::T))
    }
}

impl PartialEq for LaurentBiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.shift == other.shift && self.poly == other.poly
    }
}

impl fmt::Display for LaurentBiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shift == 0 {
            write!(f, "{}", self.poly)
        } else {
            write!(f, "X^-{} * ({})", self.shift, self.poly)
        }
    }
}

/// `Q_{d, X^k} g = X^{-kd} g(X, X^k T)`, as a Laurent polynomial.
pub fn apply_q(g: &BiPoly, k: usize, d: usize) -> Result<LaurentBiPoly, Error> {
    if g.degree_t().map_or(false, |deg| deg > d) {
        return Err(Error::Precondition(format!(
            "degree in T exceeds {d}"
        )));
    }
    let scaled = BiPoly::new(
        g.t_coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c.shift_up(k * i))
            .collect(),
    );
    Ok(LaurentBiPoly::new(scaled, k * d))
}

// ---------------------------------------------------------------------------
// multiplicity bookkeeping
// ---------------------------------------------------------------------------

/// Isolating intervals with exact multiplicities for the real roots of a
/// monic real-rooted polynomial. Intervals are pairwise disjoint; `(r, r)`
/// marks an exact rational root.
pub fn multiplicity_profile(p: &UniPoly) -> Result<Vec<((Rat, Rat), usize)>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !univariate_real_rooted(p)? {
        return Err(Error::Precondition("polynomial is not real rooted".into()));
    }
    let parts = p.squarefree_decomposition()?;
    let mut entries: Vec<((Rat, Rat), usize, UniPoly)> = Vec::new();
    for (q, mult) in &parts {
        for iv in isolate_real_roots(q)? {
            entries.push((iv, *mult, q.clone()));
        }
    }
    // roots of distinct squarefree parts differ; refine until disjoint
    loop {
        let mut overlaps = false;
        for i in 0..entries.len() {
            for j in i + 1..entries.len() {
                if intervals_touch(&entries[i].0, &entries[j].0) {
                    overlaps = true;
                    let q = entries[i].2.clone();
                    entries[i].0 = refine_interval(&q, &entries[i].0)?;
                    let q = entries[j].2.clone();
                    entries[j].0 = refine_interval(&q, &entries[j].0)?;
                }
            }
        }
        if !overlaps {
            break;
        }
    }
    let mut out: Vec<((Rat, Rat), usize)> =
        entries.into_iter().map(|(iv, m, _)| (iv, m)).collect();
    out.sort_by(|a, b| a.0 .0.cmp(&b.0 .0));
    Ok(out)
}

fn intervals_touch(a: &(Rat, Rat), b: &(Rat, Rat)) -> bool {
    // treat (r, r) as the point r, (a0, a1) as the open interval
    let disjoint = if a.0 == a.1 && b.0 == b.1 {
        a.0 != b.0
    } else {
        a.1 <= b.0 || b.1 <= a.0
    };
    !disjoint
}

// ---------------------------------------------------------------------------
// the density pipeline
// ---------------------------------------------------------------------------

/// Record of one pipeline stage.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StageRecord {
    pub name: String,
    pub operator: String,
    /// Accepted epsilon; zero when the stage predicate already held.
    pub epsilon: String,
    pub attempts: u32,
    /// Predicate results re-verified after the stage.
    pub verdicts: Vec<(String, bool)>,
}

/// Replayable transcript of a smooth approximation run.
#[derive(Debug, Clone)]
pub struct PerturbTranscript {
    pub input: BiPoly,
    pub output: BiPoly,
    pub k: usize,
    pub d: usize,
    pub epsilon0: Rat,
    pub budget: u32,
    pub stages: Vec<StageRecord>,
    /// Maximum coefficient deviation between input and output.
    pub distance: Rat,
    pub success: bool,
}

#[derive(Clone, Copy, PartialEq)]
enum Stage {
    M1,
    M2,
    M3,
    M4,
}

impl Stage {
    fn name(self) -> &'static str {
        match self {
            Stage::M1 => "M1",
            Stage::M2 => "M2",
            Stage::M3 => "M3",
            Stage::M4 => "M4",
        }
    }

    fn operator(self, k: usize, d: usize) -> String {
        match self {
            Stage::M1 => format!("P_eps^{}", d.saturating_sub(1)),
            Stage::M2 => format!("P_(eps*X^{k})^{}", d.saturating_sub(1)),
            Stage::M3 => "f + eps*T".into(),
            Stage::M4 => "f + eps".into(),
        }
    }
}

fn stage_transform(f: &BiPoly, stage: Stage, eps: &Rat, k: usize, d: usize) -> BiPoly {
    match stage {
        Stage::M1 => {
            let a = UniPoly::constant(eps.clone(), Var::X);
            let mut g = f.clone();
            for _ in 1..d {
                g = apply_p(&g, &a);
            }
            g
        }
        Stage::M2 => {
            let a = UniPoly::monomial(eps.clone(), k, Var::X);
            let mut g = f.clone();
            for _ in 1..d {
                g = apply_p(&g, &a);
            }
            g
        }
        Stage::M3 => &(BiPoly::t().scale(eps)) + f,
        Stage::M4 => &BiPoly::constant(eps.clone()) + f,
    }
}

/// The membership predicate of each stage set, exact.
fn stage_predicate(f: &BiPoly, stage: Stage, k: usize, d: usize) -> Result<bool, Error> {
    match stage {
        Stage::M1 => univariate_strictly_real_rooted(&f.eval_x(&Rat::zero())),
        Stage::M2 => {
            if !certify_strictly_real_rooted(f)?.accepted() {
                return Ok(false);
            }
            match roots_at_infinity(f, k, d) {
                Ok(at_inf) => univariate_strictly_real_rooted(&at_inf),
                Err(Error::GradingViolated(_)) => Ok(false),
                Err(e) => Err(e),
            }
        }
        Stage::M3 => {
            let fx = f.derivative_x();
            let ft = f.derivative_t();
            if fx.is_zero() {
                // no X at all: the finitely-many-singular-points purpose of
                // coprimality holds vacuously when the curve is smooth
                return smoothness_check(f);
            }
            let g = fx.gcd(&ft);
            Ok(g.degree_t() == Some(0) && g.degree_x() == Some(0))
        }
        Stage::M4 => smoothness_check(f),
    }
}

fn verdict_names(stage: Stage) -> &'static str {
    match stage {
        Stage::M1 => "strict_at_zero",
        Stage::M2 => "strict_on_line_and_infinity",
        Stage::M3 => "coprime_partials",
        Stage::M4 => "smooth_curve",
    }
}

/// Perturbs a T-real-rooted `f` in the (k,d) grading into a strictly
/// real-rooted polynomial with simple roots at infinity, coprime partials
/// and a smooth curve, recording a replayable transcript. Every stage
/// re-verifies all previous predicates exactly and halves epsilon on
/// failure, up to `budget` attempts per stage.
pub fn smooth_approximate(
    f: &BiPoly,
    k: usize,
    d: usize,
    epsilon0: &Rat,
    budget: u32,
) -> Result<PerturbTranscript, Error> {
    f.require_monic()?;
    if f.degree_t() != Some(d) {
        return Err(Error::Precondition(format!(
            "degree in T is {:?}, expected {d}",
            f.degree_t()
        )));
    }
    if !f.grading_member(k, d) {
        return Err(Error::GradingViolated("input leaves the grading".into()));
    }
    if !certify_real_rooted(f)?.accepted() {
        return Err(Error::Precondition("input is not T-real rooted".into()));
    }
    if epsilon0.is_zero() || budget == 0 {
        return Err(Error::Precondition("need positive epsilon0 and budget".into()));
    }

    let stages = [Stage::M1, Stage::M2, Stage::M3, Stage::M4];
    let mut transcript = PerturbTranscript {
        input: f.clone(),
        output: f.clone(),
        k,
        d,
        epsilon0: epsilon0.clone(),
        budget,
        stages: Vec::new(),
        distance: Rat::zero(),
        success: false,
    };

    if d <= 1 {
        // degenerate degrees: every predicate holds, f + eps*T would break
        // monicity, so all stages are skipped
        for stage in stages {
            transcript.stages.push(StageRecord {
                name: stage.name().into(),
                operator: stage.operator(k, d),
                epsilon: "0".into(),
                attempts: 0,
                verdicts: vec![(verdict_names(stage).into(), true)],
            });
        }
        transcript.success = true;
        return Ok(transcript);
    }

    let mut current = f.clone();
    for (idx, stage) in stages.into_iter().enumerate() {
        if stage_predicate(&current, stage, k, d)? {
            transcript.stages.push(StageRecord {
                name: stage.name().into(),
                operator: stage.operator(k, d),
                epsilon: "0".into(),
                attempts: 0,
                verdicts: vec![(verdict_names(stage).into(), true)],
            });
            continue;
        }
        let mut eps = epsilon0.clone();
        let mut attempts = 0u32;
        let mut accepted = false;
        while attempts < budget {
            attempts += 1;
            let candidate = stage_transform(&current, stage, &eps, k, d);
            let mut verdicts = Vec::new();
            let mut all_ok = candidate.grading_member(k, d);
            verdicts.push(("grading".to_string(), all_ok));
            if all_ok {
                for s in &stages[..=idx] {
                    let ok = stage_predicate(&candidate, *s, k, d)?;
                    verdicts.push((verdict_names(*s).into(), ok));
                    if !ok {
                        all_ok = false;
                        break;
                    }
                }
            }
            if all_ok {
                current = candidate;
                transcript.stages.push(StageRecord {
                    name: stage.name().into(),
                    operator: stage.operator(k, d),
                    epsilon: crate::num::rat_to_string(&eps),
                    attempts,
                    verdicts,
                });
                accepted = true;
                break;
            }
            eps = eps / rat(2);
        }
        if !accepted {
            transcript.stages.push(StageRecord {
                name: stage.name().into(),
                operator: stage.operator(k, d),
                epsilon: "exhausted".into(),
                attempts,
                verdicts: vec![(verdict_names(stage).into(), false)],
            });
            transcript.output = current;
            transcript.distance = transcript.output.distance(f);
            return Ok(transcript);
        }
    }

    transcript.output = current;
    transcript.distance = transcript.output.distance(f);
    transcript.success = true;
    Ok(transcript)
}

/// Replays the recorded operators on the transcript input; the result must
/// reproduce the output exactly.
pub fn replay_transcript(t: &PerturbTranscript) -> Result<BiPoly, Error> {
    let mut current = t.input.clone();
    for (stage, record) in [Stage::M1, Stage::M2, Stage::M3, Stage::M4]
        .into_iter()
        .zip(&t.stages)
    {
        if record.epsilon == "0" {
            continue;
        }
        if record.epsilon == "exhausted" {
            return Ok(current);
        }
        let eps = crate::num::parse_rat(&record.epsilon)?;
        current = stage_transform(&current, stage, &eps, t.k, t.d);
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::ratio;

    fn t() -> BiPoly {
        BiPoly::t()
    }

    fn x() -> BiPoly {
        BiPoly::x()
    }

    #[test]
    fn p_operator_examples() {
        // P_eps(T^2 - 2T + 1) = T^2 + (2eps-2)T + (1-2eps)
        let f = UniPoly::new(vec![rat(1), rat(-2), rat(1)], Var::T);
        let eps = ratio(1, 4);
        let out = apply_p_uni(&f, &eps);
        assert_eq!(
            out,
            UniPoly::new(vec![ratio(1, 2), ratio(-3, 2), rat(1)], Var::T)
        );
        // P_0 is the identity
        assert_eq!(apply_p_uni(&f, &Rat::zero()), f);
        // P_X(T^2) = T^2 + 2XT
        let g = t().pow(2);
        let out = apply_p(&g, &UniPoly::variable(Var::X));
        assert_eq!(out, &t().pow(2) + &(&t() * &x()).scale(&rat(2)));
    }

    #[test]
    fn q_operator_examples() {
        // Q_{2,X}(T^2 - X^2) = T^2 - 1
        let f = &t().pow(2) - &x().pow(2);
        let q = apply_q(&f, 1, 2).unwrap();
        assert_eq!(
            q.eval_at_infinity().unwrap(),
            UniPoly::new(vec![rat(-1), rat(0), rat(1)], Var::T)
        );
        // k = 0 is the identity
        let q = apply_q(&f, 0, 2).unwrap();
        assert_eq!(q.poly(), &f);
        assert_eq!(q.shift(), 0);
        // T^3 - (X^2+1)T: value at infinity T^3 - T
        let h = &t().pow(3) - &(&t() * &(&x().pow(2) + &BiPoly::one()));
        let q = apply_q(&h, 1, 3).unwrap();
        assert_eq!(
            q.eval_at_infinity().unwrap(),
            UniPoly::new(vec![rat(0), rat(-1), rat(0), rat(1)], Var::T)
        );
    }

    #[test]
    fn commutation_law() {
        // P_a Q_{d,b} = Q_{d,b} P_{ab} with b = X^k
        let f = &(&t().pow(3) - &(&t() * &x().pow(2))) + &BiPoly::one();
        let k = 2;
        let d = 3;
        let a = UniPoly::constant(ratio(1, 3), Var::X);
        let lhs = apply_q(&f, k, d).unwrap().apply_p(&a);
        let ab = a.shift_up(k); // a * X^k
        let rhs = apply_q(&apply_p(&f, &ab), k, d).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplicity_profiles() {
        // (T-1)^2 (T+2)
        let p = &UniPoly::new(vec![rat(-1), rat(1)], Var::T).pow(2)
            * &UniPoly::new(vec![rat(2), rat(1)], Var::T);
        let profile = multiplicity_profile(&p).unwrap();
        assert_eq!(profile.len(), 2);
        assert_eq!(profile[0].1, 1); // root near -2
        assert_eq!(profile[1].1, 2); // root near 1
        // T^3: triple root at 0
        let p = UniPoly::monomial(rat(1), 3, Var::T);
        let profile = multiplicity_profile(&p).unwrap();
        assert_eq!(profile, vec![((Rat::zero(), Rat::zero()), 3)]);
        // P_eps(T^3) = T^3 + 3eps T^2: double 0 and simple -3eps
        let eps = ratio(1, 8);
        let p = apply_p_uni(&UniPoly::monomial(rat(1), 3, Var::T), &eps);
        let profile = multiplicity_profile(&p).unwrap();
        assert_eq!(profile.len(), 2);
        let exact: Vec<usize> = profile.iter().map(|(_, m)| *m).collect();
        assert_eq!(exact, vec![1, 2]); // -3eps before 0
        // non-real-rooted input errors
        assert!(multiplicity_profile(&UniPoly::new(vec![rat(1), rat(0), rat(1)], Var::T)).is_err());
    }

    #[test]
    fn pipeline_skips_when_already_smooth() {
        // T^2 - X^2 - 1 is already strictly real rooted with smooth curve
        let f = &(&t().pow(2) - &x().pow(2)) - &BiPoly::one();
        let tr = smooth_approximate(&f, 1, 2, &ratio(1, 64), 20).unwrap();
        assert!(tr.success);
        assert_eq!(tr.output, f);
        assert!(tr.stages.iter().all(|s| s.epsilon == "0"));
        assert!(tr.distance.is_zero());
    }

    #[test]
    fn pipeline_on_node() {
        // T^2 - X^2 has a node; the pipeline must fix it
        let f = &t().pow(2) - &x().pow(2);
        let tr = smooth_approximate(&f, 1, 2, &ratio(1, 64), 30).unwrap();
        assert!(tr.success);
        let out = &tr.output;
        assert!(certify_strictly_real_rooted(out).unwrap().accepted());
        assert!(smoothness_check(out).unwrap());
        assert!(out.grading_member(1, 2));
        assert!(univariate_strictly_real_rooted(&roots_at_infinity(out, 1, 2).unwrap()).unwrap());
        // replay reproduces the output
        assert_eq!(replay_transcript(&tr).unwrap(), *out);
    }

    #[test]
    fn pipeline_on_triple_point() {
        // (T-X)^2 (T+X) with k=1, d=3
        let tmx = &t() - &x();
        let f = &tmx.pow(2) * &(&t() + &x());
        let tr = smooth_approximate(&f, 1, 3, &ratio(1, 64), 40).unwrap();
        assert!(tr.success, "stages: {:?}", tr.stages);
        let out = &tr.output;
        assert!(certify_strictly_real_rooted(out).unwrap().accepted());
        assert!(smoothness_check(out).unwrap());
        assert!(out.grading_member(1, 3));
        assert_eq!(replay_transcript(&tr).unwrap(), *out);
    }
}
