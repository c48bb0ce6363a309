use crate::dense::Matrix;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;
use crate::polyvec::{flat, vec_gcd, CoeffVector, PolyVec};

/// Matrix of `h -> a h` from vectors of degree at most `t` to polynomials
/// of degree at most `d + t`, in the monomial bases. Column `l n + r` is the
/// coefficient list of `s^l a_r`.
pub fn product_matrix<F: Field>(field: &F, a: &PolyVec<F::Elem>, t: usize) -> Matrix<F::Elem> {
    let n = a.len();
    let d = a.degree().unwrap_or(0);
    let mut m = Matrix::zeros(field, d + t + 1, n * (t + 1));
    for l in 0..=t {
        for (r, p) in a.entries().iter().enumerate() {
            let shifted = p.shift(l, field);
            for (k, c) in shifted.coeffs().iter().enumerate() {
                m[(k, l * n + r)] = c.clone();
            }
        }
    }
    m
}

fn require_coprime<F: Field>(field: &F, a: &PolyVec<F::Elem>) -> Result<usize> {
    if vec_gcd(field, a)? != Poly::one(field) {
        return Err(Error::GcdNotOne);
    }
    Ok(a.degree().expect("nonzero"))
}

fn unit<F: Field>(field: &F, len: usize, i: usize) -> Vec<F::Elem> {
    let mut e = vec![field.zero(); len];
    e[i] = field.one();
    e
}

/// Smallest `t` admitting a Bézout vector of degree `t`, found by solving
/// `a h = 1` for `t = 0, 1, 2, ...`, together with one such vector.
pub fn brute_min_bezout<F: Field>(field: &F, a: &PolyVec<F::Elem>) -> Result<(usize, PolyVec<F::Elem>)> {
    let d = require_coprime(field, a)?;
    for t in 0..=d {
        let m = product_matrix(field, a, t);
        if let Some(x) = m.solve(&unit(field, m.rows(), 0), field) {
            return Ok((t, flat(field, &CoeffVector(x), a.len())?));
        }
    }
    panic!("no Bézout vector of degree at most {d}; this contradicts the degree bound");
}

/// μ-type recovered from the dimensions `k_t` of the syzygy spaces of degree
/// at most `t`, using `k_t = sum_i max(0, t - mu_i + 1)`.
pub fn brute_mu_type<F: Field>(field: &F, a: &PolyVec<F::Elem>) -> Result<Vec<usize>> {
    let d = require_coprime(field, a)?;
    let k: Vec<usize> = (0..=d).map(|t| product_matrix(field, a, t).nullity(field)).collect();
    let at_most = |t: usize| k[t] - if t == 0 { 0 } else { k[t - 1] };
    let mut mu = Vec::with_capacity(a.len() - 1);
    for t in 0..=d {
        let exactly = at_most(t) - if t == 0 { 0 } else { at_most(t - 1) };
        mu.extend(std::iter::repeat_n(t, exactly));
    }
    assert_eq!(mu.len(), a.len() - 1, "syzygy dimensions inconsistent with a basis of rank n - 1");
    assert_eq!(mu.iter().sum::<usize>(), d, "μ-type must sum to the degree");
    Ok(mu)
}

/// Some `h` with `a h = s^i` and `deg h <= d`, for `0 <= i <= 2d`.
pub fn monomial_representation<F: Field>(
    field: &F,
    a: &PolyVec<F::Elem>,
    i: usize,
) -> Result<PolyVec<F::Elem>> {
    let d = require_coprime(field, a)?;
    if i > 2 * d {
        return Err(Error::Dimension(format!("exponent {i} exceeds 2d = {}", 2 * d)));
    }
    let m = product_matrix(field, a, d);
    let x = m
        .solve(&unit(field, m.rows(), i), field)
        .expect("the degree-d product map is onto when gcd is 1");
    flat(field, &CoeffVector(x), a.len())
}
