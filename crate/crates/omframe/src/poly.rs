//! Dense univariate polynomials in `s` and their gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// A dense polynomial `c0 + c1 s + ... + ck s^k`.
///
/// The coefficient list never ends in a zero, so the zero polynomial is the
/// empty list and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Scalar> Poly<E> {
    pub fn new(mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: E) -> Self {
        Self::new(vec![c])
    }

    /// `c * s^k`.
    pub fn monomial<F: Field<Elem = E>>(field: &F, c: E, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn one<F: Field<Elem = E>>(field: &F) -> Self {
        Self::constant(field.one())
    }

    /// The variable `s`.
    pub fn s<F: Field<Elem = E>>(field: &F) -> Self {
        Self::monomial(field, field.one(), 1)
    }

    pub fn from_i64s<F: Field<Elem = E>>(field: &F, coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial; `None` orders below
    /// every `Some(k)`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    /// Coefficient of `s^k`; `None` above the degree.
    pub fn coeff(&self, k: usize) -> Option<&E> {
        self.coeffs.get(k)
    }

    /// Coefficient of `s^k`, zero above the degree.
    pub fn coeff_or_zero<F: Field<Elem = E>>(&self, field: &F, k: usize) -> E {
        self.coeffs.get(k).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add<F: Field<Elem = E>>(&self, other: &Self, field: &F) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o = field.add(o, c);
        }
        Self::new(out)
    }

    pub fn neg<F: Field<Elem = E>>(&self, field: &F) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| field.neg(c)).collect(),
        }
    }

    pub fn sub<F: Field<Elem = E>>(&self, other: &Self, field: &F) -> Self {
        self.add(&other.neg(field), field)
    }

    pub fn mul<F: Field<Elem = E>>(&self, other: &Self, field: &F) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = field.add(&out[i + j], &field.mul(a, b));
            }
        }
        Self::new(out)
    }

    pub fn scale<F: Field<Elem = E>>(&self, c: &E, field: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|x| field.mul(x, c)).collect())
    }

    /// Multiply by `s^k`.
    pub fn shift<F: Field<Elem = E>>(&self, k: usize, field: &F) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn eval<F: Field<Elem = E>>(&self, x: &E, field: &F) -> E {
        self.coeffs
            .iter()
            .rev()
            .fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
    }

    /// Scale so that the leading coefficient is one. The zero polynomial is
    /// returned unchanged.
    pub fn monic<F: Field<Elem = E>>(&self, field: &F) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&field.inv(lc).expect("nonzero leading coefficient"), field),
        }
    }

    /// Euclidean division: `(q, r)` with `self = q * divisor + r` and
    /// `deg r < deg divisor`.
    pub fn div_rem<F: Field<Elem = E>>(&self, divisor: &Self, field: &F) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quo = vec![field.zero(); rem.len() - dd];
        for k in (0..quo.len()).rev() {
            if rem[k + dd].is_zero() {
                continue;
            }
            let c = field.div(&rem[k + dd], lc);
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = field.sub(&rem[k + i], &field.mul(&c, dc));
            }
            quo[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quo), Self::new(rem))
    }

    /// `self / divisor`, or `None` if the division leaves a remainder.
    pub fn exact_div<F: Field<Elem = E>>(&self, divisor: &Self, field: &F) -> Option<Self> {
        let (q, r) = self.div_rem(divisor, field);
        r.is_zero().then_some(q)
    }
}

/// Monic gcd of `f` and `g`.
pub fn poly_gcd<F: Field>(field: &F, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(field.poly_gcd(f, g))
}

/// Plain Euclidean algorithm, monic result. Not both inputs zero.
pub fn euclid_gcd<F: Field>(field: &F, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b, field);
        a = b;
        b = r;
    }
    a.monic(field)
}

/// Extended Euclid: `(h, u, v)` with `u f + v g = h` and `h` the monic gcd.
pub fn xgcd<F: Field>(
    field: &F,
    f: &Poly<F::Elem>,
    g: &Poly<F::Elem>,
) -> Result<(Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>)> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroVector);
    }
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut u0, mut u1) = (Poly::one(field), Poly::zero());
    let (mut v0, mut v1) = (Poly::zero(), Poly::one(field));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1, field);
        let u = u0.sub(&q.mul(&u1, field), field);
        let v = v0.sub(&q.mul(&v1, field), field);
        r0 = std::mem::replace(&mut r1, r);
        u0 = std::mem::replace(&mut u1, u);
        v0 = std::mem::replace(&mut v1, v);
    }
    let lc_inv = field.inv(r0.leading().unwrap()).unwrap();
    Ok((
        r0.scale(&lc_inv, field),
        u0.scale(&lc_inv, field),
        v0.scale(&lc_inv, field),
    ))
}

/// Gcd over Q by content extraction and a primitive remainder sequence over
/// the integers, which keeps coefficient growth in check.
pub fn rational_gcd(f: &Poly<BigRational>, g: &Poly<BigRational>) -> Poly<BigRational> {
    let mut a = primitive_integer_part(f);
    let mut b = primitive_integer_part(g);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive(r);
    }
    let lc = BigRational::from_integer(a.last().expect("not both zero").clone());
    Poly::new(
        a.into_iter()
            .map(|c| BigRational::from_integer(c) / &lc)
            .collect(),
    )
}

fn primitive_integer_part(f: &Poly<BigRational>) -> Vec<BigInt> {
    let lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = f
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    primitive(ints)
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        return v;
    }
    v.into_iter().map(|c| c / &content).collect()
}

/// Pseudo-remainder of integer polynomials; `b` nonzero.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &lr * bc;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    if r.last().is_some_and(Signed::is_negative) {
        for c in r.iter_mut() {
            *c = -&*c;
        }
    }
    r
}
