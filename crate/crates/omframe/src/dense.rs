//! General dense matrices over a field, with textbook elimination.

use crate::field::{Field, Scalar};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

/// Reduced row echelon form together with its pivot columns (0-based).
#[derive(Clone, Debug)]
pub struct Rref<E> {
    pub matrix: Matrix<E>,
    pub pivots: Vec<usize>,
}

impl<E: Scalar> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows<F: Field<Elem = E>>(field: &F, rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Sub-matrix made of the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                data.push(self[(i, j)].clone());
            }
        }
        Self {
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    /// Leading principal `k x k` sub-matrix.
    pub fn principal(&self, k: usize) -> Self {
        assert!(k <= self.rows && k <= self.cols);
        let rows = (0..k).map(|i| self.row(i)[..k].to_vec()).collect();
        Self::from_rows(rows)
    }

    pub fn mul<F: Field<Elem = E>>(&self, other: &Self, field: &F) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = field.mul(a, &other[(k, j)]);
                    out[(i, j)] = field.add(&out[(i, j)], &t);
                }
            }
        }
        out
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, v: &[E], field: &F) -> Vec<E> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b)))
            })
            .collect()
    }

    /// Gauss-Jordan elimination to reduced row echelon form.
    pub fn rref<F: Field<Elem = E>>(&self, field: &F) -> Rref<E> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = field.inv(&m[(r, c)]).unwrap();
            for j in c..m.cols {
                m[(r, j)] = field.mul(&m[(r, j)], &inv);
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    let t = field.mul(&factor, &m[(r, j)]);
                    m[(i, j)] = field.sub(&m[(i, j)], &t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank<F: Field<Elem = E>>(&self, field: &F) -> usize {
        self.rref(field).pivots.len()
    }

    /// Dimension of the right kernel.
    pub fn nullity<F: Field<Elem = E>>(&self, field: &F) -> usize {
        self.cols - self.rank(field)
    }

    /// One solution of `self * x = b`, or `None` if inconsistent. Free
    /// variables are set to zero.
    pub fn solve<F: Field<Elem = E>>(&self, b: &[E], field: &F) -> Option<Vec<E>> {
        assert_eq!(b.len(), self.rows, "right-hand side has wrong length");
        let mut aug = Self::zeros(field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let Rref { matrix, pivots } = aug.rref(field);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![field.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = matrix[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse<F: Field<Elem = E>>(&self, field: &F) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Self::zeros(field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = field.one();
        }
        let Rref { matrix, pivots } = aug.rref(field);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let rows = (0..n).map(|i| matrix.row(i)[n..].to_vec()).collect();
        Some(Self::from_rows(rows))
    }

    pub fn det<F: Field<Elem = E>>(&self, field: &F) -> E {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = field.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return field.zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = field.neg(&det);
            }
            det = field.mul(&det, &m[(c, c)]);
            let inv = field.inv(&m[(c, c)]).unwrap();
            for i in c + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = field.mul(&m[(i, c)], &inv);
                for j in c..m.cols {
                    let t = field.mul(&factor, &m[(c, j)]);
                    m[(i, j)] = field.sub(&m[(i, j)], &t);
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<E> std::ops::Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    fn index(&self, (i, j): (usize, usize)) -> &E {
        &self.data[i * self.cols + j]
    }
}

impl<E> std::ops::IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn q(rows: &[Vec<i64>]) -> Matrix<BigRational> {
        Matrix::from_i64_rows(&Rationals, rows)
    }

    #[test]
    fn rref_and_rank() {
        let m = q(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        let r = m.rref(&Rationals);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(m.rank(&Rationals), 2);
        assert_eq!(m.nullity(&Rationals), 1);
        assert_eq!(r.matrix, q(&[vec![1, 0, 1], vec![0, 1, 1], vec![0, 0, 0]]));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f = Rationals;
        let m = q(&[vec![1, 1], vec![1, -1]]);
        let x = m.solve(&[f.from_i64(3), f.from_i64(1)], &f).unwrap();
        assert_eq!(x, vec![f.from_i64(2), f.from_i64(1)]);
        let singular = q(&[vec![1, 1], vec![2, 2]]);
        assert!(singular.solve(&[f.from_i64(1), f.from_i64(1)], &f).is_none());
    }

    #[test]
    fn inverse_and_det() {
        let f = Rationals;
        let m = q(&[vec![2, 3, 6], vec![1, 0, 0], vec![0, 1, 0]]);
        assert_eq!(m.det(&f), f.from_i64(6));
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&inv, &f), Matrix::identity(&f, 3));
        assert!(q(&[vec![1, 2], vec![2, 4]]).inverse(&f).is_none());
        assert_eq!(q(&[vec![0, 1], vec![1, 0]]).det(&f), f.from_i64(-1));
    }

    #[test]
    fn works_over_prime_fields() {
        let gf = PrimeField::new(7).unwrap();
        let m = Matrix::from_i64_rows(&gf, &[vec![1, 2], vec![3, 6]]);
        assert_eq!(m.rank(&gf), 1);
        let m = Matrix::from_i64_rows(&gf, &[vec![1, 2], vec![3, 5]]);
        let inv = m.inverse(&gf).unwrap();
        assert_eq!(m.mul(&inv, &gf), Matrix::identity(&gf, 2));
    }
}
