//! Frames that transform predictably under constant changes of basis.
//!
//! For inputs whose components are linearly independent over `K`,
//! [`eomf`] satisfies `eomf(a g) = g^-1 eomf(a)` for every invertible
//! constant matrix `g`. It normalizes `a` by a canonical invertible matrix
//! built from its own coefficient rows, runs [`omf`] on the normalized
//! vector and transforms back.

use std::sync::Once;

use crate::dense::Matrix;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::frame::{omf, MovingFrame};
use crate::polyvec::{PolyMatrix, PolyVec};

/// The lexicographically smallest index vector `I` whose coefficient rows
/// `c_{i_1}, ..., c_{i_n}` are independent, and the matrix stacking them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientSection<E> {
    pub indices: Vec<usize>,
    pub c_hat: Matrix<E>,
}

pub fn coefficient_section<F: Field>(
    field: &F,
    a: &PolyVec<F::Elem>,
) -> Result<CoefficientSection<F::Elem>> {
    let n = a.len();
    let d = a.degree().ok_or(Error::ZeroVector)?;
    let mut indices = Vec::with_capacity(n);
    let mut rows: Vec<Vec<F::Elem>> = Vec::with_capacity(n);
    for k in 0..=d {
        if rows.len() == n {
            break;
        }
        let c = a.coefficient_row(field, k);
        rows.push(c);
        if Matrix::from_rows(rows.clone()).rank(field) == rows.len() {
            indices.push(k);
        } else {
            rows.pop();
        }
    }
    if rows.len() < n {
        return Err(Error::DependentComponents);
    }
    Ok(CoefficientSection {
        indices,
        c_hat: Matrix::from_rows(rows),
    })
}

/// Equivariant degree-optimal moving frame.
pub fn eomf<F: Field>(field: &F, a: &PolyVec<F::Elem>) -> Result<MovingFrame<F::Elem>> {
    if a.len() < 2 {
        return Err(Error::TooShort(a.len()));
    }
    if cfg!(debug_assertions) {
        determinism_canary(field);
    }
    let section = coefficient_section(field, a)?;
    let c_inv = section
        .c_hat
        .inverse(field)
        .expect("coefficient section is invertible");
    let normalized = a.mul_constant(&c_inv, field)?;
    let inner = omf(field, &normalized)?;
    let matrix = PolyMatrix::from_constant(&c_inv).mul(&inner.matrix, field)?;
    Ok(MovingFrame { matrix, ..inner })
}

fn determinism_canary<F: Field>(field: &F) {
    static CANARY: Once = Once::new();
    CANARY.call_once(|| {
        let a = PolyVec::row_from_i64s(field, &[&[2, 1, 0, 0, 1], &[3, 0, 1, 0, 1], &[6, 0, 0, 2, 1]])
            .expect("nonempty");
        if let (Ok(x), Ok(y)) = (omf(field, &a), omf(field, &a)) {
            assert_eq!(x, y, "frame computation is not deterministic");
        }
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::poly::Poly;
    use num_rational::BigRational;

    fn running_a() -> PolyVec<BigRational> {
        PolyVec::row_from_i64s(&Rationals, &[&[2, 1, 0, 0, 1], &[3, 0, 1, 0, 1], &[6, 0, 0, 2, 1]]).unwrap()
    }

    fn q(rows: &[Vec<i64>]) -> Matrix<BigRational> {
        Matrix::from_i64_rows(&Rationals, rows)
    }

    // Oracle: try every increasing index tuple in lexicographic order.
    fn brute_section(a: &PolyVec<BigRational>) -> Option<Vec<usize>> {
        let n = a.len();
        let d = a.degree()?;
        fn rec(
            a: &PolyVec<BigRational>,
            start: usize,
            d: usize,
            n: usize,
            acc: &mut Vec<usize>,
        ) -> Option<Vec<usize>> {
            if acc.len() == n {
                let rows = acc.iter().map(|&k| a.coefficient_row(&Rationals, k)).collect();
                return (Matrix::from_rows(rows).rank(&Rationals) == n).then(|| acc.clone());
            }
            for k in start..=d {
                acc.push(k);
                if let Some(found) = rec(a, k + 1, d, n, acc) {
                    return Some(found);
                }
                acc.pop();
            }
            None
        }
        rec(a, 0, d, n, &mut Vec::new())
    }

    #[test]
    fn running_section() {
        let s = coefficient_section(&Rationals, &running_a()).unwrap();
        assert_eq!(s.indices, vec![0, 1, 2]);
        assert_eq!(s.c_hat, q(&[vec![2, 3, 6], vec![1, 0, 0], vec![0, 1, 0]]));
        assert_eq!(brute_section(&running_a()), Some(vec![0, 1, 2]));
    }

    #[test]
    fn section_skips_dependent_rows() {
        let a = PolyVec::row_from_i64s(&Rationals, &[&[1, 2, 0, 1], &[0, 0, 1], &[1, 2, 0, 0]]).unwrap();
        let s = coefficient_section(&Rationals, &a).unwrap();
        assert_eq!(Some(s.indices), brute_section(&a));
    }

    #[test]
    fn identity_section() {
        let a = PolyVec::row_from_i64s(&Rationals, &[&[1], &[0, 1], &[0, 0, 1]]).unwrap();
        let s = coefficient_section(&Rationals, &a).unwrap();
        assert_eq!(s.indices, vec![0, 1, 2]);
        assert_eq!(s.c_hat, Matrix::identity(&Rationals, 3));
    }

    #[test]
    fn dependent_components_rejected() {
        let a = PolyVec::row_from_i64s(&Rationals, &[&[1, 1], &[0, 1], &[1]]).unwrap();
        assert_eq!(coefficient_section(&Rationals, &a), Err(Error::DependentComponents));
        assert_eq!(eomf(&Rationals, &a), Err(Error::DependentComponents));
    }

    fn transform(a: &PolyVec<BigRational>, g: &Matrix<BigRational>) -> PolyVec<BigRational> {
        a.mul_constant(g, &Rationals).unwrap()
    }

    #[test]
    fn equivariance_examples() {
        let base = eomf(&Rationals, &running_a()).unwrap();
        for g in [
            q(&[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            Matrix::identity(&Rationals, 3),
            q(&[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]]),
        ] {
            let moved = eomf(&Rationals, &transform(&running_a(), &g)).unwrap();
            let g_inv = PolyMatrix::from_constant(&g.inverse(&Rationals).unwrap());
            assert_eq!(moved.matrix, g_inv.mul(&base.matrix, &Rationals).unwrap());
        }
        let halved = base.matrix.scale(&BigRational::new(1.into(), 2.into()), &Rationals);
        let doubled = PolyVec::row(running_a().entries().iter().map(|p| p.scale(&Rationals.from_i64(2), &Rationals)).collect()).unwrap();
        assert_eq!(eomf(&Rationals, &doubled).unwrap().matrix, halved);
    }

    #[test]
    fn eomf_is_degree_optimal() {
        let f = eomf(&Rationals, &running_a()).unwrap();
        assert_eq!((f.beta, f.mu.clone()), (1, vec![2, 2]));
        assert_eq!(f.gcd, Poly::one(&Rationals));
        assert!(crate::frame::verify_frame(&Rationals, &running_a(), &f).unwrap().all_passed());
    }

    #[test]
    fn section_consistency() {
        let g = q(&[vec![1, 2, 0], vec![0, 1, 3], vec![1, 0, 1]]);
        let s = coefficient_section(&Rationals, &running_a()).unwrap();
        let t = coefficient_section(&Rationals, &transform(&running_a(), &g)).unwrap();
        assert_eq!(t.c_hat, s.c_hat.mul(&g, &Rationals));
    }
}
