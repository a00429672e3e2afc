//! Homogeneous ternary forms in (X, Y, Z) with exact coefficients.
//!
//! Only what the hyperbolicity and pencil machinery needs: linear changes of
//! variables, dehomogenization to the two affine charts, and exact expansion
//! of small pencil determinants.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::bipoly::BiPoly;
use crate::error::Error;
use crate::num::{rat_to_string, Rat};
use crate::unipoly::{UniPoly, Var};

/// Sparse trivariate polynomial keyed by exponents (i, j, k) of (X, Y, Z).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryForm {
    terms: BTreeMap<(u32, u32, u32), Rat>,
}

impl TernaryForm {
    pub fn zero() -> Self {
        TernaryForm { terms: BTreeMap::new() }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32, u32), Rat)>) -> Self {
        let mut f = TernaryForm::zero();
        for (e, c) in terms {
            f.add_term(e, c);
        }
        f
    }

    pub fn monomial(c: Rat, e: (u32, u32, u32)) -> Self {
        Self::from_terms([(e, c)])
    }

    pub fn add_term(&mut self, e: (u32, u32, u32), c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree when homogeneous; error when mixed degrees appear.
    pub fn homogeneous_degree(&self) -> Result<u32, Error> {
        let mut deg = None;
        for (i, j, k) in self.terms.keys() {
            let d = i + j + k;
            match deg {
                None => deg = Some(d),
                Some(existing) if existing != d => return Err(Error::NotHomogeneous),
                _ => {}
            }
        }
        deg.ok_or(Error::NotHomogeneous)
    }

    pub fn add(&self, rhs: &TernaryForm) -> TernaryForm {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &TernaryForm) -> TernaryForm {
        let mut out = TernaryForm::zero();
        for ((i1, j1, k1), c1) in &self.terms {
            for ((i2, j2, k2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2, k1 + k2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> TernaryForm {
        if c.is_zero() {
            return TernaryForm::zero();
        }
        TernaryForm {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn eval(&self, v: &[Rat; 3]) -> Rat {
        let mut acc = Rat::zero();
        for ((i, j, k), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..*i {
                t *= &v[0];
            }
            for _ in 0..*j {
                t *= &v[1];
            }
            for _ in 0..*k {
                t *= &v[2];
            }
            acc += t;
        }
        acc
    }

    /// Composition with a linear change of variables: returns `F(M v)`.
    /// The old variable r is replaced by row r of `m` applied to the new
    /// variables.
    pub fn substitute_linear(&self, m: &[[Rat; 3]; 3]) -> TernaryForm {
        let images: Vec<TernaryForm> = (0..3)
            .map(|r| {
                TernaryForm::from_terms([
                    ((1, 0, 0), m[r][0].clone()),
                    ((0, 1, 0), m[r][1].clone()),
                    ((0, 0, 1), m[r][2].clone()),
                ])
            })
            .collect();
        let mut out = TernaryForm::zero();
        for ((i, j, k), c) in &self.terms {
            let mut term = TernaryForm::monomial(c.clone(), (0, 0, 0));
            for _ in 0..*i {
                term = term.mul(&images[0]);
            }
            for _ in 0..*j {
                term = term.mul(&images[1]);
            }
            for _ in 0..*k {
                term = term.mul(&images[2]);
            }
            out = out.add(&term);
        }
        out
    }

    /// Chart Y = 1: the bivariate `F(X, 1, T)` with Z renamed to T.
    pub fn chart_y(&self) -> BiPoly {
        let mut t_coeffs: Vec<UniPoly> = Vec::new();
        for ((i, _j, k), c) in &self.terms {
            let k = *k as usize;
            if t_coeffs.len() <= k {
                t_coeffs.resize(k + 1, UniPoly::zero(Var::X));
            }
            t_coeffs[k] = &t_coeffs[k] + &UniPoly::monomial(c.clone(), *i as usize, Var::X);
        }
        BiPoly::new(t_coeffs)
    }

    /// Chart X = 1: the bivariate `F(1, Y, T)` with Y renamed to X.
    pub fn chart_x(&self) -> BiPoly {
        let mut t_coeffs: Vec<UniPoly> = Vec::new();
        for ((_i, j, k), c) in &self.terms {
            let k = *k as usize;
            if t_coeffs.len() <= k {
                t_coeffs.resize(k + 1, UniPoly::zero(Var::X));
            }
            t_coeffs[k] = &t_coeffs[k] + &UniPoly::monomial(c.clone(), *j as usize, Var::X);
        }
        BiPoly::new(t_coeffs)
    }

    /// Homogenizes a bivariate `f(X, T)` of total degree `d` with Y, mapping
    /// T to Z: the unique form with `F(X, 1, Z) = f(X, Z)`.
    pub fn homogenize(f: &BiPoly, d: u32) -> Result<TernaryForm, Error> {
        let mut out = TernaryForm::zero();
        for (k, coeff) in f.t_coeffs().iter().enumerate() {
            for (i, c) in coeff.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let total = i as u32 + k as u32;
                if total > d {
                    return Err(Error::Precondition(format!(
                        "total degree {total} exceeds homogenization degree {d}"
                    )));
                }
                out.add_term((i as u32, d - total, k as u32), c.clone());
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j, k), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", rat_to_string(c))?;
            for (e, name) in [(i, "X"), (j, "Y"), (k, "Z")] {
                if *e > 0 {
                    write!(f, "*{name}")?;
                    if *e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Exact determinant of the linear pencil `X*A + Y*B + Z*C` as a ternary
/// form, by Leibniz expansion (sizes here are small).
pub fn pencil_det(a: &[Vec<Rat>], b: &[Vec<Rat>], c: &[Vec<Rat>]) -> TernaryForm {
    let n = a.len();
    let entry = |i: usize, j: usize| -> TernaryForm {
        TernaryForm::from_terms([
            ((1, 0, 0), a[i][j].clone()),
            ((0, 1, 0), b[i][j].clone()),
            ((0, 0, 1), c[i][j].clone()),
        ])
    };
    let mut total = TernaryForm::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    permute_det(&mut perm, 0, true, &entry, &mut total);
    total
}

fn permute_det(
    perm: &mut Vec<usize>,
    k: usize,
    even: bool,
    entry: &impl Fn(usize, usize) -> TernaryForm,
    total: &mut TernaryForm,
) {
    let n = perm.len();
    if k == n {
        let mut prod = TernaryForm::monomial(
            if even { crate::num::rat(1) } else { crate::num::rat(-1) },
            (0, 0, 0),
        );
        for (i, &j) in perm.iter().enumerate() {
            prod = prod.mul(&entry(i, j));
        }
        *total = total.add(&prod);
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute_det(perm, k + 1, even == (i == k), entry, total);
        perm.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    fn cone() -> TernaryForm {
        // Z^2 - X^2 - Y^2
        TernaryForm::from_terms([
            ((0, 0, 2), rat(1)),
            ((2, 0, 0), rat(-1)),
            ((0, 2, 0), rat(-1)),
        ])
    }

    #[test]
    fn charts_of_the_cone() {
        let f = cone().chart_y(); // T^2 - X^2 - 1
        let expect = &(&BiPoly::t().pow(2) - &BiPoly::x().pow(2)) - &BiPoly::one();
        assert_eq!(f, expect);
        let g = cone().chart_x(); // T^2 - 1 - X^2 (same shape)
        assert_eq!(g, expect);
    }

    #[test]
    fn homogenize_roundtrip() {
        let f = cone();
        let back = TernaryForm::homogenize(&f.chart_y(), 2).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn substitution_and_eval() {
        let f = cone();
        assert_eq!(f.eval(&[rat(0), rat(0), rat(1)]), rat(1));
        // swap X and Z
        let m = [
            [rat(0), rat(0), rat(1)],
            [rat(0), rat(1), rat(0)],
            [rat(1), rat(0), rat(0)],
        ];
        let g = f.substitute_linear(&m);
        assert_eq!(g.eval(&[rat(1), rat(0), rat(0)]), rat(1));
        assert_eq!(g.homogeneous_degree().unwrap(), 2);
        // asymmetric shear: G(v) = F(Mv) pointwise
        let shear = [
            [rat(1), rat(2), rat(0)],
            [rat(0), rat(1), rat(0)],
            [rat(3), rat(0), rat(1)],
        ];
        let g = f.substitute_linear(&shear);
        let v = [rat(1), rat(-2), rat(5)];
        let mv = [
            &v[0] + &(&rat(2) * &v[1]),
            v[1].clone(),
            &(&rat(3) * &v[0]) + &v[2],
        ];
        assert_eq!(g.eval(&v), f.eval(&mv));
    }

    #[test]
    fn pencil_determinant() {
        // det([[Z-X, -Y], [-Y, Z+X]]) = Z^2 - X^2 - Y^2
        let a = vec![vec![rat(-1), rat(0)], vec![rat(0), rat(1)]];
        let b = vec![vec![rat(0), rat(-1)], vec![rat(-1), rat(0)]];
        let c = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        assert_eq!(pencil_det(&a, &b, &c), cone());
    }
}
