//! Small dense matrices: characteristic polynomials and kernels.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Poly;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_columns(cols: Vec<Vec<T>>) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), r, "ragged matrix columns");
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j).clone() + a.clone() * rhs.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// `det(xI − M)` by Faddeev–LeVerrier; monic of degree `n`.
    pub fn char_poly(&self) -> Result<Poly<T>> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            // M_k = A·M_{k−1} + c_{n−k+1}·I
            m = self.mul(&m);
            for i in 0..n {
                let v = m.get(i, i).clone() + coeffs[n - k + 1].clone();
                m.set(i, i, v);
            }
            let tr = self.mul(&m).trace();
            coeffs[n - k] = -tr / T::from_usize_lossy(k);
        }
        Ok(Poly::new(coeffs))
    }

    /// Row echelon form by fraction-free (Bareiss) elimination. Returns the
    /// reduced matrix and the pivot columns.
    pub fn echelon(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut prev = T::one();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..a.cols {
                    a.data.swap(p * a.cols + j, r * a.cols + j);
                }
            }
            let piv = a.get(r, c).clone();
            for i in r + 1..a.rows {
                let lead = a.get(i, c).clone();
                for j in c + 1..a.cols {
                    let v = (piv.clone() * a.get(i, j).clone() - lead.clone() * a.get(r, j).clone()) / prev.clone();
                    a.set(i, j, v);
                }
                a.set(i, c, T::zero());
            }
            prev = piv;
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// A basis of the right null space, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let (a, pivots) = self.echelon();
        let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![T::zero(); a.cols];
                x[f] = T::one();
                for (r, &pc) in pivots.iter().enumerate().rev() {
                    let s = (pc + 1..a.cols).fold(T::zero(), |acc, j| acc + a.get(r, j).clone() * x[j].clone());
                    x[pc] = -s / a.get(r, pc).clone();
                }
                x
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::q;
    use crate::{QMatrix, QPoly};

    fn qm(rows: &[&[i64]]) -> QMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v, 1)).collect()).collect())
    }

    #[test]
    fn char_poly_of_identity() {
        let p = QMatrix::identity(2).char_poly().unwrap();
        assert_eq!(p, QPoly::new(vec![q(1, 1), q(-2, 1), q(1, 1)]));
    }

    #[test]
    fn char_poly_rejects_non_square() {
        let m = QMatrix::zeros(2, 3);
        assert_eq!(m.char_poly(), Err(Error::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn char_poly_matches_cofactor_expansion_3x3() {
        let m = qm(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // cofactor oracle: det(xI - M) expanded by hand
        // = x^3 - 3x^2 - 22x + 66 ... verified below by evaluation at several points
        let p = m.char_poly().unwrap();
        for x in -3i64..=3 {
            let xi = QMatrix::identity(3);
            let mut d = xi.clone();
            for i in 0..3 {
                for j in 0..3 {
                    d.set(i, j, q(x, 1) * xi.get(i, j).clone() - m.get(i, j).clone());
                }
            }
            let det = d.get(0, 0).clone()
                * (d.get(1, 1).clone() * d.get(2, 2).clone() - d.get(1, 2).clone() * d.get(2, 1).clone())
                - d.get(0, 1).clone()
                    * (d.get(1, 0).clone() * d.get(2, 2).clone() - d.get(1, 2).clone() * d.get(2, 0).clone())
                + d.get(0, 2).clone()
                    * (d.get(1, 0).clone() * d.get(2, 1).clone() - d.get(1, 1).clone() * d.get(2, 0).clone());
            assert_eq!(p.eval(&q(x, 1)), det);
        }
    }

    #[test]
    fn kernel_of_rank_deficient() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        for i in 0..3 {
            let s = (0..3).fold(q(0, 1), |acc, j| acc + m.get(i, j).clone() * k[0][j].clone());
            assert_eq!(s, q(0, 1));
        }
    }

    #[test]
    fn f64_char_poly() {
        let m: Matrix<f64> = Matrix::from_rows(vec![vec![0.0, 2.0], vec![1.0, 0.0]]);
        assert_eq!(m.char_poly().unwrap().coeffs(), &[-2.0, 0.0, 1.0]);
    }
}
