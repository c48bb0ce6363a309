//! Polynomial vectors and matrices, and the coefficient isomorphisms between
//! degree-bounded polynomial vectors and flat scalar vectors.

use crate::dense::Matrix;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::poly::{self, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Row,
    Column,
}

/// A vector of `m >= 1` polynomials.
///
/// The degree of a vector is the largest degree of its entries, and its
/// leading vector collects the coefficients of `s^deg` across all entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyVec<E> {
    entries: Vec<Poly<E>>,
    orientation: Orientation,
}

impl<E: Scalar> PolyVec<E> {
    pub fn new(entries: Vec<Poly<E>>, orientation: Orientation) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Dimension("polynomial vector must have at least one entry".into()));
        }
        Ok(Self { entries, orientation })
    }

    pub fn row(entries: Vec<Poly<E>>) -> Result<Self> {
        Self::new(entries, Orientation::Row)
    }

    pub fn column(entries: Vec<Poly<E>>) -> Result<Self> {
        Self::new(entries, Orientation::Column)
    }

    /// Row vector from dense integer coefficient lists (ascending powers).
    pub fn row_from_i64s<F: Field<Elem = E>>(field: &F, entries: &[&[i64]]) -> Result<Self> {
        Self::row(entries.iter().map(|c| Poly::from_i64s(field, c)).collect())
    }

    pub fn column_from_i64s<F: Field<Elem = E>>(field: &F, entries: &[&[i64]]) -> Result<Self> {
        Self::column(entries.iter().map(|c| Poly::from_i64s(field, c)).collect())
    }

    pub fn zeros(m: usize, orientation: Orientation) -> Self {
        assert!(m >= 1);
        Self {
            entries: vec![Poly::zero(); m],
            orientation,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Poly<E>] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &Poly<E> {
        &self.entries[i]
    }

    pub fn into_entries(self) -> Vec<Poly<E>> {
        self.entries
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn transpose(mut self) -> Self {
        self.orientation = match self.orientation {
            Orientation::Row => Orientation::Column,
            Orientation::Column => Orientation::Row,
        };
        self
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// Maximum entry degree; `None` for the zero vector.
    pub fn degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(Poly::degree).max()
    }

    /// Coefficients of `s^deg` across the entries; `None` for the zero vector.
    pub fn leading_vector<F: Field<Elem = E>>(&self, field: &F) -> Option<Vec<E>> {
        let t = self.degree()?;
        Some(self.entries.iter().map(|p| p.coeff_or_zero(field, t)).collect())
    }

    /// Coefficient vector of `s^k` across the entries.
    pub fn coefficient_row<F: Field<Elem = E>>(&self, field: &F, k: usize) -> Vec<E> {
        self.entries.iter().map(|p| p.coeff_or_zero(field, k)).collect()
    }

    /// Inner product `sum_i self_i * other_i`, regardless of orientation.
    pub fn dot<F: Field<Elem = E>>(&self, other: &Self, field: &F) -> Result<Poly<E>> {
        if self.len() != other.len() {
            return Err(Error::Dimension(format!(
                "inner product of lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(Poly::zero(), |acc, (a, b)| acc.add(&a.mul(b, field), field)))
    }

    pub fn add<F: Field<Elem = E>>(&self, other: &Self, field: &F) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::Dimension("vector sum of different lengths".into()));
        }
        Ok(Self {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b, field)).collect(),
            orientation: self.orientation,
        })
    }

    pub fn scale<F: Field<Elem = E>>(&self, c: &E, field: &F) -> Self {
        self.map(|p| p.scale(c, field))
    }

    pub fn mul_poly<F: Field<Elem = E>>(&self, lambda: &Poly<E>, field: &F) -> Self {
        self.map(|p| p.mul(lambda, field))
    }

    /// Divide every entry by `divisor`; `None` if some entry is not divisible.
    pub fn exact_div<F: Field<Elem = E>>(&self, divisor: &Poly<E>, field: &F) -> Option<Self> {
        let entries = self
            .entries
            .iter()
            .map(|p| p.exact_div(divisor, field))
            .collect::<Option<Vec<_>>>()?;
        Some(Self {
            entries,
            orientation: self.orientation,
        })
    }

    /// Row vector times a constant matrix: `self * m`.
    pub fn mul_constant<F: Field<Elem = E>>(&self, m: &Matrix<E>, field: &F) -> Result<Self> {
        if m.rows() != self.len() {
            return Err(Error::Dimension(format!(
                "vector of length {} times {}x{} matrix",
                self.len(),
                m.rows(),
                m.cols()
            )));
        }
        let entries = (0..m.cols())
            .map(|j| {
                self.entries.iter().enumerate().fold(Poly::zero(), |acc, (i, p)| {
                    acc.add(&p.scale(&m[(i, j)], field), field)
                })
            })
            .collect();
        Ok(Self {
            entries,
            orientation: self.orientation,
        })
    }

    fn map(&self, f: impl Fn(&Poly<E>) -> Poly<E>) -> Self {
        Self {
            entries: self.entries.iter().map(f).collect(),
            orientation: self.orientation,
        }
    }
}

/// Monic gcd of all entries of a nonzero vector.
pub fn vec_gcd<F: Field>(field: &F, a: &PolyVec<F::Elem>) -> Result<Poly<F::Elem>> {
    if a.is_zero() {
        return Err(Error::ZeroVector);
    }
    let mut g = Poly::zero();
    for p in a.entries() {
        if p.is_zero() {
            continue;
        }
        g = poly::poly_gcd(field, &g, p)?;
        if g.degree() == Some(0) {
            break;
        }
    }
    Ok(g)
}

/// Flat coefficient vector: position `k*m + r` holds the coefficient of
/// `s^k` in entry `r` (both 0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffVector<E>(pub Vec<E>);

impl<E> CoeffVector<E> {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[E] {
        &self.0
    }
}

/// Coefficient vector of `h` for the degree bound `t`, of length
/// `m * (t + 1)`.
pub fn sharp<F: Field>(field: &F, h: &PolyVec<F::Elem>, t: usize) -> Result<CoeffVector<F::Elem>> {
    if let Some(deg) = h.degree() {
        if deg > t {
            return Err(Error::DegreeBound { degree: deg, bound: t });
        }
    }
    let m = h.len();
    let mut out = Vec::with_capacity(m * (t + 1));
    for k in 0..=t {
        out.extend(h.entries().iter().map(|p| p.coeff_or_zero(field, k)));
    }
    Ok(CoeffVector(out))
}

/// Inverse of [`sharp`]: regroups a flat vector into a column vector of
/// length `m`.
pub fn flat<F: Field>(field: &F, v: &CoeffVector<F::Elem>, m: usize) -> Result<PolyVec<F::Elem>> {
    let _ = field;
    if m == 0 || v.len() % m != 0 || v.is_empty() {
        return Err(Error::NotDivisible { len: v.len(), m });
    }
    let blocks = v.len() / m;
    let entries = (0..m)
        .map(|r| Poly::new((0..blocks).map(|k| v.0[k * m + r].clone()).collect()))
        .collect();
    PolyVec::column(entries)
}

/// Dense matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix<E> {
    rows: usize,
    cols: usize,
    entries: Vec<Poly<E>>,
}

impl<E: Scalar> PolyMatrix<E> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Poly::zero(); rows * cols],
        }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Poly::one(field);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Poly<E>>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged polynomial matrix".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience for tests and examples: `rows[i][j]` is the ascending
    /// coefficient list of entry `(i, j)`.
    pub fn from_i64s<F: Field<Elem = E>>(field: &F, rows: &[Vec<&[i64]>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|c| Poly::from_i64s(field, c)).collect())
                .collect(),
        )
    }

    pub fn from_columns(columns: &[PolyVec<E>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, PolyVec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Dimension("columns of different lengths".into()));
        }
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            for (i, p) in col.entries().iter().enumerate() {
                m[(i, j)] = p.clone();
            }
        }
        Ok(m)
    }

    pub fn from_constant(m: &Matrix<E>) -> Self {
        let mut out = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out[(i, j)] = Poly::constant(m[(i, j)].clone());
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> PolyVec<E> {
        let entries = (0..self.rows).map(|i| self[(i, j)].clone()).collect();
        PolyVec {
            entries,
            orientation: Orientation::Column,
        }
    }

    pub fn columns(&self) -> Vec<PolyVec<E>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Degree of each column (as a vector).
    pub fn column_degrees(&self) -> Vec<Option<usize>> {
        (0..self.cols).map(|j| self.column(j).degree()).collect()
    }

    /// Maximum entry degree; `None` for the zero matrix.
    pub fn degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(Poly::degree).max()
    }

    pub fn mul<F: Field<Elem = E>>(&self, other: &Self, field: &F) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a.mul(&other[(k, j)], field);
                    out[(i, j)] = out[(i, j)].add(&t, field);
                }
            }
        }
        Ok(out)
    }

    pub fn scale<F: Field<Elem = E>>(&self, c: &E, field: &F) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|p| p.scale(c, field)).collect(),
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination over `K[s]`; every
    /// division is exact.
    pub fn det<F: Field<Elem = E>>(&self, field: &F) -> Result<Poly<E>> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one(field));
        }
        let mut m = self.clone();
        let mut scale = field.one();
        for j in 0..n {
            let coeffs: Vec<E> = (0..n).flat_map(|i| m[(i, j)].coeffs().to_vec()).collect();
            let c = field.common_denominator(&coeffs);
            if !field.is_one(&c) {
                for i in 0..n {
                    m[(i, j)] = m[(i, j)].scale(&c, field);
                }
                scale = field.mul(&scale, &c);
            }
        }
        let mut negate = false;
        let mut prev = Poly::one(field);
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return Ok(Poly::zero());
                };
                m.swap_rows(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(i, j)]
                        .mul(&m[(k, k)], field)
                        .sub(&m[(i, k)].mul(&m[(k, j)], field), field);
                    m[(i, j)] = num
                        .exact_div(&prev, field)
                        .expect("Bareiss division is exact");
                }
                m[(i, k)] = Poly::zero();
            }
            prev = m[(k, k)].clone();
        }
        let det = m[(n - 1, n - 1)].scale(&field.inv(&scale).expect("nonzero scale"), field);
        Ok(if negate { det.neg(field) } else { det })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<E> std::ops::Index<(usize, usize)> for PolyMatrix<E> {
    type Output = Poly<E>;
    fn index(&self, (i, j): (usize, usize)) -> &Poly<E> {
        &self.entries[i * self.cols + j]
    }
}

impl<E> std::ops::IndexMut<(usize, usize)> for PolyMatrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Poly<E> {
        &mut self.entries[i * self.cols + j]
    }
}

/// Exact product of the row vector `a` with the square matrix `p`.
pub fn row_times_matrix<F: Field>(
    field: &F,
    a: &PolyVec<F::Elem>,
    p: &PolyMatrix<F::Elem>,
) -> Result<PolyVec<F::Elem>> {
    if a.len() != p.rows() {
        return Err(Error::Dimension(format!(
            "row vector of length {} times {}x{} matrix",
            a.len(),
            p.rows(),
            p.cols()
        )));
    }
    let denominator = |v: &PolyVec<F::Elem>| {
        let coeffs: Vec<F::Elem> = v.entries().iter().flat_map(|e| e.coeffs().to_vec()).collect();
        field.common_denominator(&coeffs)
    };
    let ca = denominator(a);
    let a_int = a.scale(&ca, field);
    let entries = (0..p.cols())
        .map(|j| {
            let col = p.column(j);
            let c = denominator(&col);
            let dot = a_int.dot(&col.scale(&c, field), field)?;
            Ok(dot.scale(&field.inv(&field.mul(&ca, &c)).expect("nonzero scale"), field))
        })
        .collect::<Result<Vec<_>>>()?;
    PolyVec::row(entries)
}
