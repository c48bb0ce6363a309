//! The Sylvester-type matrix of a polynomial row vector and its partial
//! Gauss-Jordan elimination.
//!
//! For `a = c_0 + c_1 s + ... + c_d s^d` with `c_k` in `K^n`, the matrix `A`
//! has `2d + 1` rows and `n(d + 1)` columns made of `d + 1` copies of the
//! coefficient block, each shifted down by one row. It realizes `h -> a h`
//! on vectors of degree at most `d` under the [`sharp`](crate::polyvec::sharp)
//! and [`flat`](crate::polyvec::flat) maps.
//!
//! Column indices in this module are 1-based, matching the usual numbering
//! of the columns of `A`; the augmented column `e_1` sits at `n(d + 1) + 1`.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::polyvec::{CoeffVector, PolyVec};

/// The augmented matrix `W = [A | e_1]`, stored as its coefficient block.
/// Columns are produced on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylvesterSystem<E> {
    n: usize,
    d: usize,
    /// `coeffs[k][r]` is the coefficient of `s^k` in component `r`.
    coeffs: Vec<Vec<E>>,
}

impl<E: Scalar> SylvesterSystem<E> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn rows(&self) -> usize {
        2 * self.d + 1
    }

    /// Number of columns of `A` (without the augmented column).
    pub fn cols(&self) -> usize {
        self.n * (self.d + 1)
    }

    pub fn augmented_index(&self) -> usize {
        self.cols() + 1
    }

    pub fn coefficient_rows(&self) -> &[Vec<E>] {
        &self.coeffs
    }

    /// Block and component of column `j`.
    pub fn locate(&self, j: usize) -> (usize, usize) {
        assert!(j >= 1 && j <= self.cols(), "column {j} out of range");
        ((j - 1) / self.n, (j - 1) % self.n)
    }

    /// Entry `(i, j)` of `W`, with `i` 0-based and `j` 1-based.
    pub fn entry<F: Field<Elem = E>>(&self, field: &F, i: usize, j: usize) -> E {
        if j == self.augmented_index() {
            return if i == 0 { field.one() } else { field.zero() };
        }
        let (b, r) = self.locate(j);
        match i.checked_sub(b) {
            Some(k) if k <= self.d => self.coeffs[k][r].clone(),
            _ => field.zero(),
        }
    }

    /// Column `j` of `W` as a dense vector of length `2d + 1`.
    pub fn column<F: Field<Elem = E>>(&self, field: &F, j: usize) -> Vec<E> {
        let mut col = vec![field.zero(); self.rows()];
        if j == self.augmented_index() {
            col[0] = field.one();
            return col;
        }
        let (b, r) = self.locate(j);
        for (k, c) in self.coeffs.iter().enumerate() {
            col[b + k] = c[r].clone();
        }
        col
    }

    /// All of `W`, row by row. Intended for display and testing.
    pub fn to_rows<F: Field<Elem = E>>(&self, field: &F, augmented: bool) -> Vec<Vec<E>> {
        let cols = self.cols() + usize::from(augmented);
        (0..self.rows())
            .map(|i| (1..=cols).map(|j| self.entry(field, i, j)).collect())
            .collect()
    }
}

/// Builds the system for a nonzero row vector of length at least 2.
pub fn build_system<F: Field>(field: &F, a: &PolyVec<F::Elem>) -> Result<SylvesterSystem<F::Elem>> {
    let n = a.len();
    if n < 2 {
        return Err(Error::TooShort(n));
    }
    let d = a.degree().ok_or(Error::ZeroVector)?;
    let coeffs = (0..=d).map(|k| a.coefficient_row(field, k)).collect();
    Ok(SylvesterSystem { n, d, coeffs })
}

/// The product `A v` for `v` of length `n(d + 1)`.
pub fn apply_a<F: Field>(
    field: &F,
    sys: &SylvesterSystem<F::Elem>,
    v: &CoeffVector<F::Elem>,
) -> Result<CoeffVector<F::Elem>> {
    if v.len() != sys.cols() {
        return Err(Error::Dimension(format!(
            "expected a vector of length {}, got {}",
            sys.cols(),
            v.len()
        )));
    }
    let mut out = vec![field.zero(); sys.rows()];
    for (jj, x) in v.as_slice().iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let (b, r) = (jj / sys.n, jj % sys.n);
        for (k, c) in sys.coeffs.iter().enumerate() {
            if !c[r].is_zero() {
                out[b + k] = field.add(&out[b + k], &field.mul(&c[r], x));
            }
        }
    }
    Ok(CoeffVector(out))
}

/// A basic non-pivotal column together with its expansion
/// `A_j = sum_i alpha[i] A_{p_i}` over the pivots to its left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicColumn<E> {
    pub index: usize,
    pub alpha: Vec<E>,
}

/// Outcome of the partial elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotProfile<E> {
    n: usize,
    d: usize,
    pivots: Vec<usize>,
    basic: Vec<BasicColumn<E>>,
    periodic: Vec<usize>,
    augmented: Option<Vec<E>>,
    transform: Vec<Vec<E>>,
    scale: E,
}

impl<E: Scalar> PivotProfile<E> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Pivotal column indices, increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basic non-pivotal columns in increasing index order.
    pub fn basic(&self) -> &[BasicColumn<E>] {
        &self.basic
    }

    pub fn basic_indices(&self) -> Vec<usize> {
        self.basic.iter().map(|b| b.index).collect()
    }

    /// Non-pivotal columns skipped because their residue class mod `n`
    /// already had a non-pivotal column.
    pub fn periodic(&self) -> &[usize] {
        &self.periodic
    }

    /// Coordinates of `e_1` over all pivot columns, or `None` when `e_1` is
    /// outside the column space of `A`.
    pub fn augmented(&self) -> Option<&[E]> {
        self.augmented.as_deref()
    }

    pub fn gcd_nontrivial(&self) -> bool {
        self.augmented.is_none()
    }

    pub fn is_pivot(&self, j: usize) -> bool {
        self.pivots.binary_search(&j).is_ok()
    }

    /// Coordinates of column `j` of `W` over the pivot columns. Every column
    /// of `A` lies in their span, so this is its unique expansion; for the
    /// augmented column it is meaningful only when the gcd is trivial.
    pub fn expand_column<F: Field<Elem = E>>(
        &self,
        field: &F,
        sys: &SylvesterSystem<E>,
        j: usize,
    ) -> Vec<E> {
        let col = sys.column(field, j);
        let mut out = transform_apply(field, &self.transform[..self.rank()], &col);
        field.div_all(&mut out, &self.scale);
        out
    }
}

fn transform_apply<F: Field>(field: &F, t: &[Vec<F::Elem>], col: &[F::Elem]) -> Vec<F::Elem> {
    let support: Vec<usize> = (0..col.len()).filter(|&k| !col[k].is_zero()).collect();
    t.iter()
        .map(|row| {
            support.iter().fold(field.zero(), |acc, &k| {
                if row[k].is_zero() {
                    acc
                } else {
                    field.add(&acc, &field.mul(&row[k], &col[k]))
                }
            })
        })
        .collect()
}

/// Left-to-right partial reduction of `W`.
///
/// A transformation `T` with `T A_{p_i} = e_i` is accumulated as pivots are
/// found, stored fraction-free as `U = delta T` where `delta` is the last
/// pivot of the fraction-free elimination; over the rationals with integer
/// input every intermediate value stays an integer. Each candidate column is
/// reduced as `U A_j`; columns in a residue class mod `n` that already
/// produced a non-pivotal column are skipped with no arithmetic.
pub fn partial_rref<F: Field>(field: &F, sys: &SylvesterSystem<F::Elem>) -> PivotProfile<F::Elem> {
    let m = sys.rows();
    let n = sys.n;
    let mut u: Vec<Vec<F::Elem>> = (0..m)
        .map(|i| (0..m).map(|k| if i == k { field.one() } else { field.zero() }).collect())
        .collect();
    let mut delta = field.one();
    let mut pivots = Vec::new();
    let mut basic = Vec::new();
    let mut periodic = Vec::new();
    let mut class_done = vec![false; n];

    for j in 1..=sys.cols() {
        let r = (j - 1) % n;
        if class_done[r] {
            periodic.push(j);
            continue;
        }
        let rank = pivots.len();
        let mut col = transform_apply(field, &u, &sys.column(field, j));
        let Some(p) = (rank..m).find(|&i| !col[i].is_zero()) else {
            col.truncate(rank);
            field.div_all(&mut col, &delta);
            basic.push(BasicColumn { index: j, alpha: col });
            class_done[r] = true;
            continue;
        };
        u.swap(p, rank);
        col.swap(p, rank);
        let pivot = col[rank].clone();
        let (before, rest) = u.split_at_mut(rank);
        let (pivot_row, after) = rest.split_first_mut().expect("rank < m");
        for (row, c) in before.iter_mut().chain(after.iter_mut()).zip(col[..rank].iter().chain(&col[rank + 1..])) {
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                let scaled = if x.is_zero() { field.zero() } else { field.mul(x, &pivot) };
                let next = if c.is_zero() || y.is_zero() {
                    scaled
                } else {
                    field.sub(&scaled, &field.mul(c, y))
                };
                *x = next;
            }
            field.div_all(row, &delta);
        }
        delta = pivot;
        pivots.push(j);
    }

    let rank = pivots.len();
    let augmented = if u[rank..].iter().all(|row| row[0].is_zero()) {
        let mut aug: Vec<F::Elem> = u[..rank].iter().map(|row| row[0].clone()).collect();
        field.div_all(&mut aug, &delta);
        Some(aug)
    } else {
        None
    };
    PivotProfile {
        n,
        d: sys.d,
        pivots,
        basic,
        periodic,
        augmented,
        transform: u,
        scale: delta,
    }
}
