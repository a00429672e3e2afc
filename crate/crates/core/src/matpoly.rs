//! Matrices over Q[X]: exact determinants, characteristic polynomials,
//! and the column Hermite normal form used for module canonicalization.

use std::fmt;


use crate::bipoly::BiPoly;
use crate::error::Error;
use crate::num::Rat;
use crate::ratfunc::RatFunc;
use crate::unipoly::{UniPoly, Var};

/// Dense matrix with entries in Q[X].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatPoly {
    rows: usize,
    cols: usize,
    entries: Vec<UniPoly>, // row major
}

impl MatPoly {
    pub fn from_rows(rows: Vec<Vec<UniPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        MatPoly {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> UniPoly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        MatPoly { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| UniPoly::zero(Var::X))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                UniPoly::one(Var::X)
            } else {
                UniPoly::zero(Var::X)
            }
        })
    }

    /// Constant diagonal matrix.
    pub fn diagonal(d: &[Rat]) -> Self {
        Self::from_fn(d.len(), d.len(), |i, j| {
            if i == j {
                UniPoly::constant(d[i].clone(), Var::X)
            } else {
                UniPoly::zero(Var::X)
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &UniPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: UniPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> MatPoly {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn mul(&self, rhs: &MatPoly) -> MatPoly {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = UniPoly::zero(Var::X);
            for k in 0..self.cols {
                acc = &acc + &(self.at(i, k) * rhs.at(k, j));
            }
            acc
        })
    }

    pub fn add(&self, rhs: &MatPoly) -> MatPoly {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + rhs.at(i, j))
    }

    pub fn scale(&self, c: &Rat) -> MatPoly {
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j).scale(c))
    }

    /// Evaluates every entry at a rational point.
    pub fn eval(&self, x: &Rat) -> MatPoly {
        Self::from_fn(self.rows, self.cols, |i, j| {
            UniPoly::constant(self.at(i, j).eval(x), Var::X)
        })
    }

    /// Maximum degree over all entries; `None` for the zero matrix.
    pub fn max_degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(|e| e.degree()).max()
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> MatPoly {
        Self::from_fn(row_idx.len(), col_idx.len(), |i, j| {
            self.at(row_idx[i], col_idx[j]).clone()
        })
    }

    /// Fraction-free determinant (Bareiss). Exact over Q[X].
    pub fn det_bareiss(&self) -> UniPoly {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return UniPoly::one(Var::X);
        }
        let mut m: Vec<Vec<UniPoly>> = (0..n)
            .map(|i| (0..n).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut sign = 1i32;
        let mut prev = UniPoly::one(Var::X);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return UniPoly::zero(Var::X),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
                }
                m[i][k] = UniPoly::zero(Var::X);
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if sign < 0 {
            -&det
        } else {
            det
        }
    }

    /// Characteristic polynomial `det(T - A)` by the Faddeev-LeVerrier
    /// recurrence: trace arithmetic only, no matrix inverses.
    pub fn char_poly(&self) -> BiPoly {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut coeffs = vec![UniPoly::zero(Var::X); n + 1];
        coeffs[n] = UniPoly::one(Var::X);
        let mut m = MatPoly::identity(n);
        for k in 1..=n {
            let b = self.mul(&m);
            let mut tr = UniPoly::zero(Var::X);
            for i in 0..n {
                tr = &tr + b.at(i, i);
            }
            let c = tr.scale(&Rat::new((-1).into(), (k as i64).into()));
            m = b;
            for i in 0..n {
                m.set(i, i, &m.at(i, i).clone() + &c);
            }
            coeffs[n - k] = c;
        }
        BiPoly::new(coeffs)
    }

    /// Inverse of a matrix whose determinant is a nonzero constant;
    /// the result has polynomial entries.
    pub fn inverse_unimodular(&self) -> Result<MatPoly, Error> {
        assert_eq!(self.rows, self.cols);
        let det = self.det_bareiss();
        if det.is_zero() || !det.is_constant() {
            return Err(Error::NotUnimodular);
        }
        let n = self.rows;
        let inv_det = det.coeff(0).recip();
        let adj = Self::from_fn(n, n, |i, j| {
            // cofactor C_{ji}
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let minor = self.submatrix(&rows, &cols).det_bareiss();
            let s = if (i + j) % 2 == 0 { 1 } else { -1 };
            minor.scale(&Rat::new(s.into(), 1.into()))
        });
        Ok(adj.scale(&inv_det))
    }

    /// Block-diagonal assembly.
    pub fn block_diag(blocks: &[MatPoly]) -> MatPoly {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = MatPoly::zero(n, n);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, b.cols);
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(off + i, off + j, b.at(i, j).clone());
                }
            }
            off += b.rows;
        }
        out
    }

    /// Row Hermite normal form over Q[X], pivots monic, entries above each
    /// pivot reduced to lower degree. Rows span the same Q[X]-module.
    pub fn hnf_rows(&self) -> MatPoly {
        let mut rows: Vec<Vec<UniPoly>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row >= rows.len() {
                break;
            }
            loop {
                let nonzero: Vec<usize> = (pivot_row..rows.len())
                    .filter(|&r| !rows[r][col].is_zero())
                    .collect();
                match nonzero.len() {
                    0 => break,
                    1 => {
                        rows.swap(pivot_row, nonzero[0]);
                        break;
                    }
                    _ => {
                        // reduce all entries by the minimal-degree one
                        let best = *nonzero
                            .iter()
                            .min_by_key(|&&r| rows[r][col].degree().expect("nonzero"))
                            .expect("nonempty");
                        for &r in &nonzero {
                            if r == best {
                                continue;
                            }
                            let (q, _) = rows[r][col].div_rem(&rows[best][col]).expect("nonzero");
                            if q.is_zero() {
                                continue;
                            }
                            for j in 0..self.cols {
                                let delta = &q * &rows[best][j];
                                rows[r][j] = &rows[r][j] - &delta;
                            }
                        }
                        // if no row changed (all were lower degree already),
                        // the minimal one still clears the rest eventually;
                        // the loop re-enters with strictly smaller degrees.
                    }
                }
            }
            if rows[pivot_row][col].is_zero() {
                continue;
            }
            // monic pivot
            let inv = rows[pivot_row][col].lc().recip();
            for j in 0..self.cols {
                rows[pivot_row][j] = rows[pivot_row][j].scale(&inv);
            }
            // reduce entries above the pivot
            for r in 0..pivot_row {
                let (q, _) = rows[r][col].div_rem(&rows[pivot_row][col]).expect("nonzero");
                if q.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    let delta = &q * &rows[pivot_row][j];
                    rows[r][j] = &rows[r][j] - &delta;
                }
            }
            pivot_row += 1;
        }
        rows.truncate(pivot_row);
        // drop zero rows (none remain by construction) and repackage
        MatPoly::from_rows(rows)
    }
}

impl fmt::Display for MatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Symmetric matrix over Q[X]; the constructor enforces symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrixPoly {
    mat: MatPoly,
}

impl SymMatrixPoly {
    pub fn new(mat: MatPoly) -> Result<Self, Error> {
        if !mat.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(SymMatrixPoly { mat })
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &MatPoly {
        &self.mat
    }

    pub fn at(&self, i: usize, j: usize) -> &UniPoly {
        self.mat.at(i, j)
    }

    /// Leading principal minors, sizes 1..=d.
    pub fn leading_principal_minors(&self) -> Vec<UniPoly> {
        (1..=self.dim())
            .map(|k| {
                let idx: Vec<usize> = (0..k).collect();
                self.mat.submatrix(&idx, &idx).det_bareiss()
            })
            .collect()
    }

    /// All principal minors (one per nonempty index subset), with the subset.
    pub fn principal_minors(&self) -> Vec<(Vec<usize>, UniPoly)> {
        let d = self.dim();
        let mut out = Vec::with_capacity((1usize << d) - 1);
        for mask in 1u32..(1u32 << d) {
            let idx: Vec<usize> = (0..d).filter(|&i| mask & (1 << i) != 0).collect();
            let m = self.mat.submatrix(&idx, &idx).det_bareiss();
            out.push((idx, m));
        }
        out
    }

    pub fn det(&self) -> UniPoly {
        self.mat.det_bareiss()
    }
}

/// Solves `A x = b` over Q(X) by Gaussian elimination.
/// Returns `None` when `A` is singular.
pub fn solve_ratfunc(a: &[Vec<RatFunc>], b: &[RatFunc]) -> Option<Vec<RatFunc>> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    let mut m: Vec<Vec<RatFunc>> = a.to_vec();
    let mut rhs = b.to_vec();
    for k in 0..n {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, pivot);
        rhs.swap(k, pivot);
        let inv = m[k][k].recip().ok()?;
        for j in k..n {
            m[k][j] = &m[k][j] * &inv;
        }
        rhs[k] = &rhs[k] * &inv;
        for i in 0..n {
            if i == k || m[i][k].is_zero() {
                continue;
            }
            let factor = m[i][k].clone();
            for j in k..n {
                let delta = &factor * &m[k][j];
                m[i][j] = &m[i][j] - &delta;
            }
            let delta = &factor * &rhs[k];
            rhs[i] = &rhs[i] - &delta;
        }
    }
    Some(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    fn x() -> UniPoly {
        UniPoly::variable(Var::X)
    }

    fn c(v: i64) -> UniPoly {
        UniPoly::constant(rat(v), Var::X)
    }

    #[test]
    fn det_and_charpoly() {
        // companion of T^2 - X: [[0, X], [1, 0]]
        let m = MatPoly::from_rows(vec![vec![c(0), x()], vec![c(1), c(0)]]);
        assert_eq!(m.det_bareiss(), -&x());
        let cp = m.char_poly();
        let expect = &BiPoly::t().pow(2) - &BiPoly::x();
        assert_eq!(cp, expect);
    }

    #[test]
    fn charpoly_symmetric_example() {
        // [[X, 1], [1, -X]] has char poly T^2 - X^2 - 1
        let m = MatPoly::from_rows(vec![vec![x(), c(1)], vec![c(1), -&x()]]);
        let cp = m.char_poly();
        let expect = &(&BiPoly::t().pow(2) - &BiPoly::x().pow(2)) - &BiPoly::one();
        assert_eq!(cp, expect);
    }

    #[test]
    fn unimodular_inverse() {
        let m = MatPoly::from_rows(vec![vec![c(1), x()], vec![c(0), c(1)]]);
        let inv = m.inverse_unimodular().unwrap();
        assert_eq!(m.mul(&inv), MatPoly::identity(2));
        let sing = MatPoly::from_rows(vec![vec![x(), x()], vec![x(), x()]]);
        assert!(sing.inverse_unimodular().is_err());
    }

    #[test]
    fn hnf_canonicalizes() {
        // rows X*e1, e2, X*e2 span <X e1, e2>
        let m = MatPoly::from_rows(vec![
            vec![x(), c(0)],
            vec![c(0), c(1)],
            vec![c(0), x()],
        ]);
        let h = m.hnf_rows();
        assert_eq!(
            h,
            MatPoly::from_rows(vec![vec![x(), c(0)], vec![c(0), c(1)]])
        );
        // idempotent
        assert_eq!(h.hnf_rows(), h);
    }

    #[test]
    fn solve_system() {
        let a = vec![
            vec![RatFunc::from_poly(x()), RatFunc::one()],
            vec![RatFunc::zero(), RatFunc::one()],
        ];
        let b = vec![RatFunc::from_poly(&x() + &c(1)), RatFunc::one()];
        let sol = solve_ratfunc(&a, &b).unwrap();
        assert_eq!(sol[1], RatFunc::one());
        // x*s0 + 1 = x + 1 => s0 = 1
        assert_eq!(sol[0], RatFunc::one());
    }
}
