//! Seeded random inputs.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dense::Matrix;
use crate::field::{Field, Scalar};
use crate::poly::Poly;
use crate::polyvec::{vec_gcd, PolyVec};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Polynomial of degree at most `d` with coefficients drawn by
/// [`Field::sample`].
pub fn random_poly<F: Field>(field: &F, rng: &mut dyn RngCore, d: usize, bound: i64) -> Poly<F::Elem> {
    Poly::new((0..=d).map(|_| field.sample(rng, bound)).collect())
}

/// Row vector of length `n` and degree exactly `d`.
pub fn random_vector<F: Field>(
    field: &F,
    rng: &mut dyn RngCore,
    n: usize,
    d: usize,
    bound: i64,
) -> PolyVec<F::Elem> {
    loop {
        let entries = (0..n).map(|_| random_poly(field, rng, d, bound)).collect();
        let v = PolyVec::row(entries).expect("n >= 1");
        if v.degree() == Some(d) {
            return v;
        }
    }
}

/// Like [`random_vector`], resampled until the gcd is 1.
pub fn random_coprime_vector<F: Field>(
    field: &F,
    rng: &mut dyn RngCore,
    n: usize,
    d: usize,
    bound: i64,
) -> PolyVec<F::Elem> {
    loop {
        let v = random_vector(field, rng, n, d, bound);
        if vec_gcd(field, &v).is_ok_and(|g| g.degree() == Some(0)) {
            return v;
        }
    }
}

/// Sparse row vector: each coefficient is zero with probability `zero_p`.
pub fn random_sparse_vector<F: Field>(
    field: &F,
    rng: &mut dyn RngCore,
    n: usize,
    d: usize,
    bound: i64,
    zero_p: f64,
) -> PolyVec<F::Elem> {
    loop {
        let entries = (0..n)
            .map(|_| {
                Poly::new(
                    (0..=d)
                        .map(|_| {
                            if rng.gen_bool(zero_p) {
                                field.zero()
                            } else {
                                field.sample(rng, bound)
                            }
                        })
                        .collect(),
                )
            })
            .collect();
        let v = PolyVec::row(entries).expect("n >= 1");
        if !v.is_zero() {
            return v;
        }
    }
}

/// Monic polynomial of degree exactly `deg`.
pub fn random_monic<F: Field>(field: &F, rng: &mut dyn RngCore, deg: usize, bound: i64) -> Poly<F::Elem> {
    let mut c: Vec<F::Elem> = (0..deg).map(|_| field.sample(rng, bound)).collect();
    c.push(field.one());
    Poly::new(c)
}

/// Invertible constant `n x n` matrix.
pub fn random_invertible<F: Field>(field: &F, rng: &mut dyn RngCore, n: usize, bound: i64) -> Matrix<F::Elem> {
    loop {
        let rows = (0..n)
            .map(|_| (0..n).map(|_| field.sample(rng, bound)).collect())
            .collect();
        let m = Matrix::from_rows(rows);
        if !m.det(field).is_zero() {
            return m;
        }
    }
}
