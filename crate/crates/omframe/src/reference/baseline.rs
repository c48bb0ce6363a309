use rand::{Rng, RngCore};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{self, Poly};
use crate::polyvec::{vec_gcd, PolyMatrix, PolyVec};

/// Frame produced by the unimodular-completion baseline, with the constants
/// used to make the first two entries coprime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaselineFrame<E> {
    pub matrix: PolyMatrix<E>,
    pub k: Vec<E>,
    pub attempts: usize,
}

pub const K_BOUND: i64 = 5;
pub const MAX_ATTEMPTS: usize = 100;

/// Moving frame by extended Euclid on `(a_1 + k_3 a_3 + ... + k_n a_n, a_2)`,
/// completed to `K E U` with a lower unitriangular `K`, the 2x2 Euclid block
/// `E` and an upper unitriangular `U`. No degree guarantee.
pub fn fq_frame<F: Field>(
    field: &F,
    a: &PolyVec<F::Elem>,
    rng: &mut dyn RngCore,
) -> Result<PolyMatrix<F::Elem>> {
    fq_frame_with(field, a, rng, K_BOUND, MAX_ATTEMPTS).map(|f| f.matrix)
}

pub fn fq_frame_with<F: Field>(
    field: &F,
    a: &PolyVec<F::Elem>,
    rng: &mut dyn RngCore,
    bound: i64,
    max_attempts: usize,
) -> Result<BaselineFrame<F::Elem>> {
    let n = a.len();
    if n < 2 {
        return Err(Error::TooShort(n));
    }
    if vec_gcd(field, a)? != Poly::one(field) {
        return Err(Error::GcdNotOne);
    }
    let e = a.entries();
    let combine = |k: &[F::Elem]| {
        k.iter()
            .zip(&e[2..])
            .fold(e[0].clone(), |acc, (c, p)| acc.add(&p.scale(c, field), field))
    };
    let coprime = |a1: &Poly<F::Elem>| {
        !(a1.is_zero() && e[1].is_zero())
            && poly::poly_gcd(field, a1, &e[1]).is_ok_and(|g| g.degree() == Some(0))
    };

    let mut k = vec![field.zero(); n - 2];
    let mut attempts = 1;
    let mut a1 = combine(&k);
    while !coprime(&a1) {
        if n == 2 || attempts > max_attempts {
            return Err(Error::SearchExhausted(attempts - 1));
        }
        k = (0..n - 2)
            .map(|_| field.from_i64(rng.gen_range(-bound..=bound)))
            .collect();
        a1 = combine(&k);
        attempts += 1;
    }
    let (_, f1, f2) = poly::xgcd(field, &a1, &e[1])?;

    let mut lower = PolyMatrix::identity(field, n);
    for (i, c) in k.iter().enumerate() {
        lower[(i + 2, 0)] = Poly::constant(c.clone());
    }
    let mut euclid = PolyMatrix::identity(field, n);
    euclid[(0, 0)] = f1;
    euclid[(0, 1)] = e[1].neg(field);
    euclid[(1, 0)] = f2;
    euclid[(1, 1)] = a1;
    let mut upper = PolyMatrix::identity(field, n);
    for i in 2..n {
        upper[(0, i)] = e[i].neg(field);
    }
    let matrix = lower.mul(&euclid, field)?.mul(&upper, field)?;
    Ok(BaselineFrame {
        matrix,
        k,
        attempts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::polyvec::row_times_matrix;
    use num_rational::BigRational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn is_frame(a: &PolyVec<BigRational>, p: &PolyMatrix<BigRational>) -> bool {
        let mut e1 = vec![Poly::zero(); a.len()];
        e1[0] = Poly::one(&Rationals);
        row_times_matrix(&Rationals, a, p).unwrap() == PolyVec::row(e1).unwrap()
            && p.det(&Rationals).unwrap().degree() == Some(0)
    }

    #[test]
    fn running_example() {
        let a = PolyVec::row_from_i64s(&Rationals, &[&[2, 1, 0, 0, 1], &[3, 0, 1, 0, 1], &[6, 0, 0, 2, 1]])
            .unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = fq_frame_with(&Rationals, &a, &mut rng, K_BOUND, MAX_ATTEMPTS).unwrap();
        assert_eq!(f.attempts, 1);
        assert!(is_frame(&a, &f.matrix));
        assert!(f.matrix.degree().unwrap() >= 4);
    }

    #[test]
    fn unit_first_entry() {
        let a = PolyVec::row_from_i64s(&Rationals, &[&[1], &[1, 2, 3], &[0, 5]]).unwrap();
        let f = fq_frame_with(&Rationals, &a, &mut ChaCha8Rng::seed_from_u64(0), 5, 100).unwrap();
        assert!(f.k.iter().all(|c| *c == Rationals.zero()));
        assert!(is_frame(&a, &f.matrix));
    }

    #[test]
    fn two_components() {
        let a = PolyVec::row_from_i64s(&Rationals, &[&[0, 1], &[1, 1]]).unwrap();
        let p = fq_frame(&Rationals, &a, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        assert_eq!(p.column(0), PolyVec::column_from_i64s(&Rationals, &[&[-1], &[1]]).unwrap());
        assert!(is_frame(&a, &p));
    }

    #[test]
    fn random_search_when_first_pair_shares_a_factor() {
        let a = PolyVec::row_from_i64s(&Rationals, &[&[0, 1], &[0, 2], &[1]]).unwrap();
        let f = fq_frame_with(&Rationals, &a, &mut ChaCha8Rng::seed_from_u64(3), 5, 100).unwrap();
        assert!(f.attempts > 1);
        assert!(is_frame(&a, &f.matrix));
        let b = PolyVec::row_from_i64s(&Rationals, &[&[0, 1], &[0, 2]]).unwrap();
        assert_eq!(fq_frame(&Rationals, &b, &mut ChaCha8Rng::seed_from_u64(3)), Err(Error::GcdNotOne));
    }
}
