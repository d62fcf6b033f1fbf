//! Exact dense linear algebra over an abstract field.
//!
//! Everything is plain fraction-field Gaussian elimination; matrices stay
//! small (at most a few dozen rows) throughout the crate, so asymptotics are
//! irrelevant and exactness is the only requirement.

use alloc::vec;
use alloc::vec::Vec;

/// Minimal exact-field interface. Implemented by `Rational` and `CycNum`.
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` iff zero.
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Matrix<F> {
        assert_eq!(rows * cols, data.len(), "shape mismatch");
        Matrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Matrix<F> {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<F>]) -> Matrix<F> {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.iter().cloned()).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// In-place reduced row echelon form. Returns the pivot columns (their
    /// count is the rank).
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.at(row, col).inv().expect("pivot is nonzero");
            for c in col..self.cols {
                let v = self.at(row, c).mul(&inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    for c in col..self.cols {
                        let v = self.at(r, c).sub(&factor.mul(self.at(row, c)));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Determinant of a square matrix by elimination with row swaps.
    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return F::zero();
            };
            if p != col {
                m.swap_rows(col, p);
                det = det.neg();
            }
            let pivot = m.at(col, col).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).mul(&inv);
                for c in col..n {
                    let v = m.at(r, c).sub(&factor.mul(m.at(col, c)));
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    pub fn transpose(&self) -> Matrix<F> {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        Matrix::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols).fold(F::zero(), |acc, k| {
                acc.add(&self.at(r, k).mul(other.at(k, c)))
            })
        })
    }

    /// One solution of `self * x = b`, if the system is consistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let mut aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug.at(row, self.cols).clone();
        }
        Some(x)
    }

    /// Basis of the right nullspace.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![F::zero(); self.cols];
            v[f] = F::one();
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = m.at(row, f).neg();
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat_int, CycNum, Rational};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect::<alloc::vec::Vec<_>>(),
        )
    }

    #[test]
    fn rank_and_rref() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[1, 2], &[3, 4]]).rank(), 2);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).rank(), 2);
    }

    #[test]
    fn determinant() {
        assert_eq!(m(&[&[1, 2], &[3, 4]]).det(), rat_int(-2));
        assert_eq!(m(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]]).det(), rat_int(24));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det(), rat_int(0));
        // Swap-parity check.
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), rat_int(-1));
    }

    #[test]
    fn solve_and_nullspace() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = a.solve(&[rat_int(3), rat_int(1)]).unwrap();
        assert_eq!(x, alloc::vec![rat_int(2), rat_int(1)]);
        assert!(m(&[&[1, 0], &[1, 0]]).solve(&[rat_int(0), rat_int(1)]).is_none());

        let n = m(&[&[1, 2, 3]]).nullspace();
        assert_eq!(n.len(), 2);
        for v in n {
            let s = &v[0] + &(&v[1] * &rat_int(2)) + &(&v[2] * &rat_int(3));
            assert!(num_traits::Zero::is_zero(&s));
        }
    }

    #[test]
    fn works_over_cyclotomic_field() {
        // (1  i; i  1) has determinant 1 - i^2 = 2.
        let i = CycNum::zeta(4);
        let a = Matrix::from_rows(&[
            alloc::vec![CycNum::one(), i.clone()],
            alloc::vec![i.clone(), CycNum::one()],
        ]);
        assert!(a.det().field_eq(&CycNum::from_int(2)));
        assert_eq!(a.rank(), 2);
    }
}
