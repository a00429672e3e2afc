//! Factorization of monic-in-T bivariate polynomials over Q.
//!
//! Squarefree parts are split off with respect to T, then each squarefree
//! part is factored through a good rational fiber: factor `h(x0, T)` over Q,
//! lift the coprime factors X-adically past a degree bound for any true
//! factor, and recombine subsets with an exact division test.

use num_traits::Zero;

use crate::bipoly::BiPoly;
use crate::error::Error;
use crate::num::{rat, Rat};
use crate::unipoly::{UniPoly, Var};

use super::univariate::{compare_polys, factor_squarefree};

/// Factors a monic-in-T polynomial into monic irreducible factors over Q,
/// with multiplicities. The product of the factors reproduces the input
/// exactly. Errors on non-monic input.
pub fn factor_bipoly(f: &BiPoly) -> Result<Vec<(BiPoly, usize)>, Error> {
    f.require_monic()?;
    let mut out: Vec<(BiPoly, usize)> = Vec::new();
    for (part, mult) in f.squarefree_decomposition_t()? {
        for g in factor_squarefree_bipoly(&part)? {
            out.push((g, mult));
        }
    }
    out.sort_by(|a, b| compare_bipolys(&a.0, &b.0).then(a.1.cmp(&b.1)));
    debug_assert_eq!(
        out.iter()
            .fold(BiPoly::one(), |acc, (g, m)| &acc * &g.pow(*m)),
        *f
    );
    Ok(out)
}

/// Deterministic ordering: by T-degree, X-degree, then coefficient lists.
pub fn compare_bipolys(a: &BiPoly, b: &BiPoly) -> std::cmp::Ordering {
    let key = |p: &BiPoly| (p.degree_t().map_or(-1, |d| d as i64), p.degree_x().map_or(-1, |d| d as i64));
    key(a).cmp(&key(b)).then_with(|| {
        let n = a.t_coeffs().len().max(b.t_coeffs().len());
        for i in (0..n).rev() {
            let ord = compare_polys(&a.t_coeff(i), &b.t_coeff(i));
            if ord != std::cmp::Ordering::Equal {
                return ord;
            }
        }
        std::cmp::Ordering::Equal
    })
}

fn factor_squarefree_bipoly(h: &BiPoly) -> Result<Vec<BiPoly>, Error> {
    let d = h.degree_t().ok_or(Error::ZeroInput)?;
    if d == 0 {
        return Ok(vec![]);
    }
    if d == 1 {
        return Ok(vec![h.clone()]);
    }
    if let Some(t_poly) = h.as_t_poly() {
        // no X present: univariate factorization lifts directly
        return Ok(factor_squarefree(&t_poly)
            .into_iter()
            .map(|g| BiPoly::from_t_poly(&g))
            .collect());
    }

    // pick a fiber x0 where h(x0, T) stays squarefree
    let shift = (0i64..)
        .flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] })
        .map(rat)
        .find(|x0| {
            let u = h.eval_x(x0);
            u.gcd(&u.derivative()).is_one()
        })
        .expect("squarefree fiber exists");
    let centered = h.translate_x(&-&shift);
    let fiber = centered.eval_x(&Rat::zero());

    let base_factors = factor_squarefree(&fiber);
    if base_factors.len() == 1 {
        return Ok(vec![h.clone()]);
    }

    // X-degree of any monic-in-T factor is at most deg_T * deg_X of the input
    let prec = d * centered.degree_x().unwrap_or(0) + 1;
    let lifted = lift_factorization_x(&centered, &base_factors, prec);

    let mut remaining: Vec<BiPoly> = lifted;
    let mut target = centered;
    let mut found = Vec::new();
    'restart: loop {
        let r = remaining.len();
        if r == 0 {
            break;
        }
        for size in 1..r {
            for mask in 1u32..(1u32 << r) {
                if mask.count_ones() as usize != size {
                    continue;
                }
                let mut cand = BiPoly::one();
                for (i, fac) in remaining.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        cand = (&cand * fac).truncate_x(prec);
                    }
                }
                if let Some(quot) = target.exact_div(&cand) {
                    found.push(cand);
                    target = quot;
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
        found.push(target.clone());
        break;
    }

    Ok(found
        .into_iter()
        .filter(|g| g.degree_t().map_or(false, |e| e > 0))
        .map(|g| g.translate_x(&shift))
        .collect())
}

/// Multifactor X-adic Hensel lifting of a coprime fiber factorization of a
/// monic-in-T polynomial, to precision `X^prec`.
fn lift_factorization_x(f: &BiPoly, base: &[UniPoly], prec: usize) -> Vec<BiPoly> {
    if base.len() == 1 {
        return vec![f.truncate_x(prec)];
    }
    let g0 = base[0].clone();
    let h0 = base[1..]
        .iter()
        .fold(UniPoly::one(Var::T), |acc, u| &acc * u);
    let (one, u, v) = g0.extended_gcd(&h0);
    debug_assert!(one.is_one());
    let mut g = BiPoly::from_t_poly(&g0);
    let mut h = BiPoly::from_t_poly(&h0);
    for m in 1..prec {
        // error term at X-order m
        let diff = f - &(&g * &h);
        let ebar = UniPoly::new(
            diff.t_coeffs().iter().map(|c| c.coeff(m)).collect(),
            Var::T,
        );
        if ebar.is_zero() {
            continue;
        }
        let ve = &v * &ebar;
        let (q, sigma) = ve.div_rem(&g0).expect("monic divisor");
        let tau = &(&u * &ebar) + &(&q * &h0);
        debug_assert!(tau.degree_i64() < h0.degree_i64());
        g = &g + &t_poly_times_x_power(&sigma, m);
        h = &h + &t_poly_times_x_power(&tau, m);
    }
    let mut out = vec![g.truncate_x(prec)];
    out.extend(lift_factorization_x(&h.truncate_x(prec), &base[1..], prec));
    out
}

fn t_poly_times_x_power(p: &UniPoly, m: usize) -> BiPoly {
    BiPoly::new(
        p.coeffs()
            .iter()
            .map(|c| UniPoly::monomial(c.clone(), m, Var::X))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> BiPoly {
        BiPoly::t()
    }

    fn x() -> BiPoly {
        BiPoly::x()
    }

    #[test]
    fn difference_of_squares() {
        // T^2 - X^2 = (T-X)(T+X)
        let f = &t().pow(2) - &x().pow(2);
        let fs = factor_bipoly(&f).unwrap();
        assert_eq!(fs, vec![(&t() - &x(), 1), (&t() + &x(), 1)]);
    }

    #[test]
    fn repeated_factor() {
        // (T - X)^2
        let g = &t() - &x();
        let fs = factor_bipoly(&g.pow(2)).unwrap();
        assert_eq!(fs, vec![(g, 2)]);
    }

    #[test]
    fn t_times_conic() {
        // T(T^2 - X^2 - 1): the conic is irreducible
        let conic = &(&t().pow(2) - &x().pow(2)) - &BiPoly::one();
        let f = &t() * &conic;
        let fs = factor_bipoly(&f).unwrap();
        assert_eq!(fs, vec![(t(), 1), (conic, 1)]);
    }

    #[test]
    fn irreducible_cubic() {
        // T^3 - (X^2+2)T + 1 is irreducible over Q
        let f = &(&t().pow(3) - &(&t() * &(&x().pow(2) + &BiPoly::constant(rat(2))))) + &BiPoly::one();
        let fs = factor_bipoly(&f).unwrap();
        assert_eq!(fs, vec![(f, 1)]);
    }

    #[test]
    fn x_free_polynomial() {
        // T^2 - 1 factors without X appearing
        let f = &t().pow(2) - &BiPoly::one();
        let fs = factor_bipoly(&f).unwrap();
        assert_eq!(fs.len(), 2);
    }

    #[test]
    fn nontrivial_split_needing_lift() {
        // (T^2 - X^3 - 1)(T - X^2 + 2), needs lifting past degree 3
        let a = &t().pow(2) - &(&x().pow(3) + &BiPoly::one());
        let b = &(&t() - &x().pow(2)) + &BiPoly::constant(rat(2));
        let f = &a * &b;
        let fs = factor_bipoly(&f).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().any(|(g, _)| g == &a));
        assert!(fs.iter().any(|(g, _)| g == &b));
    }

    #[test]
    fn rejects_non_monic() {
        let f = &x() * &t();
        assert!(factor_bipoly(&f).is_err());
    }

    use crate::num::rat;
}
