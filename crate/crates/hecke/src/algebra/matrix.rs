//! Dense linear algebra over a finite field.
//!
//! Row reduction uses a fixed pivot rule (leftmost column, first nonzero row
//! from the top), so reduced forms and the subspace enumerations built on
//! them are deterministic.

use crate::algebra::field::Field;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::El>,
}

impl<F: Field> Matrix<F> {
    pub fn from_rows(field: F, rows: Vec<Vec<F::El>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::validation("ragged matrix: rows of unequal length"));
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zero(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::El {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::El) {
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

    /// In-place reduced row echelon form; returns the rank.
    pub fn rref(&mut self) -> usize {
        let f = self.field.clone();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let mut sel = None;
            for r in pivot_row..self.rows {
                if !f.is_zero(self.get(r, col)) {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            self.swap_rows(pivot_row, sel);
            let inv = f.inv(self.get(pivot_row, col)).expect("pivot nonzero");
            for c in col..self.cols {
                let v = f.mul(self.get(pivot_row, c), &inv);
                self.set(pivot_row, c, v);
            }
            for r in 0..self.rows {
                if r == pivot_row || f.is_zero(self.get(r, col)) {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = f.sub(self.get(r, c), &f.mul(&factor, self.get(pivot_row, c)));
                    self.set(r, c, v);
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    pub fn rank(&self) -> usize {
        self.clone().rref()
    }

    /// Dimension of the right kernel: cols - rank.
    pub fn kernel_dimension(&self) -> usize {
        self.cols - self.rank()
    }
}

/// Incremental column-space rank tracker.
///
/// Feeds columns one at a time into an echelonized basis of the column
/// space. Used by the section-space ladders, where the condition matrix at
/// twist m+1 extends the one at twist m by new columns only, so a single
/// pass over all columns yields the whole rank profile.
pub struct ColumnSpace<F: Field> {
    field: F,
    height: usize,
    // (leading index, reduced column with leading entry 1)
    basis: Vec<(usize, Vec<F::El>)>,
}

impl<F: Field> ColumnSpace<F> {
    pub fn new(field: F, height: usize) -> Self {
        ColumnSpace { field, height, basis: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Insert a column; returns true when it enlarged the span.
    pub fn push(&mut self, mut col: Vec<F::El>) -> bool {
        debug_assert_eq!(col.len(), self.height);
        let f = &self.field;
        for (lead, vec) in &self.basis {
            if f.is_zero(&col[*lead]) {
                continue;
            }
            let factor = col[*lead].clone();
            for i in *lead..self.height {
                col[i] = f.sub(&col[i], &f.mul(&factor, &vec[i]));
            }
        }
        let lead = (0..self.height).find(|&i| !f.is_zero(&col[i]));
        match lead {
            None => false,
            Some(lead) => {
                let inv = f.inv(&col[lead]).expect("nonzero lead");
                for x in col.iter_mut() {
                    *x = f.mul(x, &inv);
                }
                self.basis.push((lead, col));
                true
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::PrimeField;

    #[test]
    fn identity_has_zero_kernel() {
        let f = PrimeField::new(2).unwrap();
        let m = Matrix::identity(f, 3);
        assert_eq!(m.kernel_dimension(), 0);
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let f = PrimeField::new(3).unwrap();
        let m = Matrix::zero(f, 2, 4);
        assert_eq!(m.kernel_dimension(), 4);
    }

    #[test]
    fn rank_plus_kernel_is_column_count() {
        let f = PrimeField::new(5).unwrap();
        let m = Matrix::from_rows(
            f,
            vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]],
        )
        .unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.kernel_dimension(), 1);
    }

    #[test]
    fn ragged_matrix_is_rejected() {
        let f = PrimeField::new(2).unwrap();
        assert!(Matrix::from_rows(f, vec![vec![1, 0], vec![1]]).is_err());
    }

    #[test]
    fn column_space_matches_matrix_rank() {
        let f = PrimeField::new(3).unwrap();
        // note [2,1,0] = 2 * [1,2,0] over F_3
        let cols = vec![vec![1, 2, 0], vec![2, 1, 0], vec![0, 0, 0], vec![1, 0, 1]];
        let mut cs = ColumnSpace::new(f.clone(), 3);
        let mut ranks = vec![];
        for c in &cols {
            cs.push(c.clone());
            ranks.push(cs.rank());
        }
        assert_eq!(ranks, vec![1, 1, 1, 2]);
        // cross-check against rref of the transpose
        let m = Matrix::from_rows(f, cols).unwrap();
        assert_eq!(m.rank(), 2);
    }
}
