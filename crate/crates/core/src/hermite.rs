//! The Hermite matrix of a monic bivariate polynomial and its definiteness
//! over the whole real line.
//!
//! Entry (i, j) is the power sum p_{i+j-2} of the roots of f in T, an
//! element of Q[X] by Newton's identities. Positive definiteness of the
//! matrix at x is equivalent to f(x, T) being strictly real rooted, which
//! turns a quantifier over R into finitely many exact sign conditions.

use crate::bipoly::BiPoly;
use crate::error::Error;
use crate::matpoly::{MatPoly, SymMatrixPoly};
use crate::num::rat;
use crate::real_roots::{nonneg_on_r, positive_on_r};
use crate::unipoly::UniPoly;

/// Power sums `p_0..p_upto` of the roots of monic f, via Newton's identities
/// on the T-coefficients. All entries lie in Q[X].
pub fn power_sums(f: &BiPoly, upto: usize) -> Result<Vec<UniPoly>, Error> {
    f.require_monic()?;
    let d = f.degree_t().expect("monic");
    // e_j = (-1)^j a_{d-j}
    let e: Vec<UniPoly> = (0..=d)
        .map(|j| {
            let a = f.t_coeff(d - j);
            if j % 2 == 0 {
                a
            } else {
                -&a
            }
        })
        .collect();
    let mut p = Vec::with_capacity(upto + 1);
    p.push(UniPoly::constant(rat(d as i64), crate::unipoly::Var::X));
    for m in 1..=upto {
        let mut acc = UniPoly::zero(crate::unipoly::Var::X);
        for i in 1..m.min(d) + 1 {
            if i == m {
                break;
            }
            let term = &e[i] * &p[m - i];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        if m <= d {
            let term = e[m].scale(&rat(m as i64));
            acc = if m % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        p.push(acc);
    }
    Ok(p)
}

/// The Hermite matrix of f: the d x d symmetric matrix with entry (i, j)
/// the power sum p_{i+j-2} of the roots.
pub fn hermite_matrix(f: &BiPoly) -> Result<SymMatrixPoly, Error> {
    f.require_monic()?;
    let d = f.degree_t().expect("monic");
    if d == 0 {
        return SymMatrixPoly::new(MatPoly::identity(0));
    }
    let p = power_sums(f, 2 * d - 2)?;
    let mat = MatPoly::from_fn(d, d, |i, j| p[i + j].clone());
    SymMatrixPoly::new(mat)
}

/// True when every leading principal minor is strictly positive at every
/// real x, i.e. the matrix is positive definite on the whole line.
pub fn pd_on_line(h: &SymMatrixPoly) -> Result<bool, Error> {
    for minor in h.leading_principal_minors() {
        if !positive_on_r(&minor)?.0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True when every principal minor is nonnegative at every real x, i.e. the
/// matrix is positive semidefinite on the whole line.
pub fn psd_on_line(h: &SymMatrixPoly) -> Result<bool, Error> {
    for (_, minor) in h.principal_minors() {
        if !nonneg_on_r(&minor)?.0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unipoly::Var;

    fn c(v: i64) -> UniPoly {
        UniPoly::constant(rat(v), Var::X)
    }

    #[test]
    fn quadratic_forms() {
        // T^2 - a: [[2, 0], [0, 2a]]
        let a = UniPoly::monomial(rat(3), 1, Var::X); // a = 3X
        let f = &BiPoly::t().pow(2) - &BiPoly::from_x_poly(a.clone());
        let h = hermite_matrix(&f).unwrap();
        assert_eq!(h.at(0, 0), &c(2));
        assert_eq!(h.at(0, 1), &c(0));
        assert_eq!(h.at(1, 1), &a.scale(&rat(2)));
        // T^2 + pT + q: [[2, -p], [-p, p^2 - 2q]]
        let p = UniPoly::monomial(rat(1), 1, Var::X);
        let q = c(5);
        let f = &(&BiPoly::t().pow(2) + &(&BiPoly::t() * &BiPoly::from_x_poly(p.clone())))
            + &BiPoly::from_x_poly(q.clone());
        let h = hermite_matrix(&f).unwrap();
        assert_eq!(h.at(0, 1), &-&p);
        assert_eq!(h.at(1, 1), &(&(&p * &p) - &q.scale(&rat(2))));
    }

    #[test]
    fn cubic_example() {
        // H(T^3 - T) = [[3,0,2],[0,2,0],[2,0,2]]
        let f = &BiPoly::t().pow(3) - &BiPoly::t();
        let h = hermite_matrix(&f).unwrap();
        let expect = [[3, 0, 2], [0, 2, 0], [2, 0, 2]];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(h.at(i, j), &c(expect[i][j]));
            }
        }
    }

    #[test]
    fn definiteness_on_line() {
        // T^2 - X^2 - 1: minors 2 and 4(X^2+1), PD everywhere
        let f = &(&BiPoly::t().pow(2) - &BiPoly::x().pow(2)) - &BiPoly::one();
        let h = hermite_matrix(&f).unwrap();
        let minors = h.leading_principal_minors();
        assert_eq!(minors[0], c(2));
        assert_eq!(
            minors[1],
            UniPoly::new(vec![rat(4), rat(0), rat(4)], Var::X)
        );
        assert!(pd_on_line(&h).unwrap());
        // T^2 - X^2: minor 4X^2 vanishes at 0
        let g = &BiPoly::t().pow(2) - &BiPoly::x().pow(2);
        assert!(!pd_on_line(&hermite_matrix(&g).unwrap()).unwrap());
        assert!(psd_on_line(&hermite_matrix(&g).unwrap()).unwrap());
        // T^2 + 1: minor -2 < 0
        let b = &BiPoly::t().pow(2) + &BiPoly::one();
        assert!(!pd_on_line(&hermite_matrix(&b).unwrap()).unwrap());
        assert!(!psd_on_line(&hermite_matrix(&b).unwrap()).unwrap());
    }

    #[test]
    fn top_left_entry_is_degree() {
        let f = &BiPoly::t().pow(4) - &BiPoly::x();
        let h = hermite_matrix(&f).unwrap();
        assert_eq!(h.at(0, 0), &c(4));
    }
}
