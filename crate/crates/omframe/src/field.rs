//! Exact coefficient fields.
//!
//! Arithmetic goes through a field context: [`Rationals`] is a zero-sized
//! marker and [`PrimeField`] carries its modulus.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, RngCore};

use crate::error::{Error, Result};
use crate::poly::{self, Poly};

/// A field element that can tell whether it is zero.
pub trait Scalar: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static {
    fn is_zero(&self) -> bool;
}

impl Scalar for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// A computable field.
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Scalar;

    /// Short name used on the command line and in output documents
    /// (`q`, `gf:101`).
    fn name(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// `a / b`. Panics if `b` is zero; callers check first.
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let inv = self.inv(b).expect("division by zero in field");
        self.mul(a, &inv)
    }

    /// Divides every entry of `values` by the nonzero `d`.
    fn div_all(&self, values: &mut [Self::Elem], d: &Self::Elem) {
        let inv = self.inv(d).expect("division by zero in field");
        for v in values.iter_mut().filter(|v| !v.is_zero()) {
            *v = self.mul(v, &inv);
        }
    }

    /// A nonzero `c` with every `c * v` integral (an integer over Q). Fields
    /// without denominators return one.
    fn common_denominator(&self, values: &[Self::Elem]) -> Self::Elem {
        let _ = values;
        self.one()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Exact textual form: `num/den` (or `num` for integers) over Q, the
    /// canonical residue over GF(p).
    fn format(&self, a: &Self::Elem) -> String;

    /// Inverse of [`Field::format`]; also accepts any integer or `a/b`.
    fn parse_scalar(&self, text: &str) -> Result<Self::Elem>;

    /// Draws a coefficient. Over Q this is an integer uniform in
    /// `[-bound, bound]`; over GF(p) it is uniform over the whole field.
    fn sample(&self, rng: &mut dyn RngCore, bound: i64) -> Self::Elem;

    /// Monic gcd of two polynomials, not both zero.
    fn poly_gcd(&self, f: &Poly<Self::Elem>, g: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        poly::euclid_gcd(self, f, g)
    }
}

/// The rational numbers, with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn name(&self) -> String {
        "q".to_string()
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        if a.is_integer() && b.is_integer() {
            return BigRational::from_integer(a.numer() + b.numer());
        }
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        if a.is_integer() && b.is_integer() {
            return BigRational::from_integer(a.numer() - b.numer());
        }
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        if a.is_integer() && b.is_integer() {
            return BigRational::from_integer(a.numer() * b.numer());
        }
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if Zero::is_zero(a) {
            None
        } else {
            Some(a.recip())
        }
    }

    fn div(&self, a: &BigRational, b: &BigRational) -> BigRational {
        assert!(!Zero::is_zero(b), "division by zero in field");
        if a.is_integer() && b.is_integer() {
            let (q, r) = a.numer().div_rem(b.numer());
            if Zero::is_zero(&r) {
                return BigRational::from_integer(q);
            }
        }
        a / b
    }

    fn div_all(&self, values: &mut [BigRational], d: &BigRational) {
        for v in values.iter_mut().filter(|v| !Zero::is_zero(*v)) {
            *v = self.div(v, d);
        }
    }

    fn common_denominator(&self, values: &[BigRational]) -> BigRational {
        BigRational::from_integer(values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom())))
    }

    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn parse_scalar(&self, text: &str) -> Result<BigRational> {
        let (num, den) = parse_fraction(text)?;
        if den.is_zero() {
            return Err(Error::Parse {
                position: 0,
                message: format!("zero denominator in `{text}`"),
            });
        }
        Ok(BigRational::new(num, den))
    }

    fn sample(&self, rng: &mut dyn RngCore, bound: i64) -> BigRational {
        self.from_i64(rng.gen_range(-bound..=bound))
    }

    fn poly_gcd(&self, f: &Poly<BigRational>, g: &Poly<BigRational>) -> Poly<BigRational> {
        poly::rational_gcd(f, g)
    }
}

/// A residue modulo the prime of its [`PrimeField`], stored in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue(pub u64);

impl Scalar for Residue {
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The prime field GF(p) for a prime `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 63 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^63")));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i128(&self, v: i128) -> Residue {
        Residue(v.rem_euclid(self.p as i128) as u64)
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base, self.p);
            }
            base = mulmod(base, base, self.p);
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = Residue;

    fn name(&self) -> String {
        format!("gf:{}", self.p)
    }

    fn zero(&self) -> Residue {
        Residue(0)
    }

    fn one(&self) -> Residue {
        Residue(1 % self.p)
    }

    fn from_i64(&self, v: i64) -> Residue {
        self.reduce_i128(v as i128)
    }

    fn from_bigint(&self, v: &BigInt) -> Residue {
        let r = v.mod_floor(&BigInt::from(self.p));
        Residue(r.to_u64().expect("residue fits in u64"))
    }

    fn add(&self, a: &Residue, b: &Residue) -> Residue {
        Residue(((a.0 as u128 + b.0 as u128) % self.p as u128) as u64)
    }

    fn sub(&self, a: &Residue, b: &Residue) -> Residue {
        Residue(((a.0 as u128 + self.p as u128 - b.0 as u128) % self.p as u128) as u64)
    }

    fn mul(&self, a: &Residue, b: &Residue) -> Residue {
        Residue(mulmod(a.0, b.0, self.p))
    }

    fn neg(&self, a: &Residue) -> Residue {
        if a.0 == 0 {
            *a
        } else {
            Residue(self.p - a.0)
        }
    }

    fn inv(&self, a: &Residue) -> Option<Residue> {
        if a.0 == 0 {
            None
        } else {
            Some(Residue(self.pow(a.0, self.p - 2)))
        }
    }

    fn format(&self, a: &Residue) -> String {
        a.0.to_string()
    }

    fn parse_scalar(&self, text: &str) -> Result<Residue> {
        let (num, den) = parse_fraction(text)?;
        let den = self.from_bigint(&den);
        match self.inv(&den) {
            Some(inv) => Ok(self.mul(&self.from_bigint(&num), &inv)),
            None => Err(Error::Parse {
                position: 0,
                message: format!("denominator of `{text}` vanishes modulo {}", self.p),
            }),
        }
    }

    fn sample(&self, rng: &mut dyn RngCore, _bound: i64) -> Residue {
        Residue(rng.gen_range(0..self.p))
    }
}

/// Runtime choice between the two shipped fields, as selected by
/// `--field q|gf:<p>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(PrimeField),
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("gf:") {
            let p: u64 = p
                .trim()
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad modulus in `{s}`")))?;
            return Ok(FieldSpec::Prime(PrimeField::new(p)?));
        }
        Err(Error::InvalidField(format!("unknown field `{s}` (expected q or gf:<p>)")))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("q"),
            FieldSpec::Prime(gf) => write!(f, "gf:{}", gf.modulus()),
        }
    }
}

fn parse_fraction(text: &str) -> Result<(BigInt, BigInt)> {
    let bad = || Error::Parse {
        position: 0,
        message: format!("`{text}` is not an exact scalar"),
    };
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_negative() {
        return Ok((-num, -den));
    }
    Ok((num, den))
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    let powmod = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        base %= n;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base, n);
            }
            base = mulmod(base, base, n);
            exp >>= 1;
        }
        acc
    };
    'witness: for &a in &BASES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rationals_reduce_eagerly() {
        let f = Rationals;
        let s = f.add(&q(1, 6), &q(1, 3));
        assert_eq!(s, q(1, 2));
        assert_eq!(*s.denom(), BigInt::from(2));
        let neg = f.parse_scalar("3/-6").unwrap();
        assert_eq!(neg, q(-1, 2));
        assert!(neg.denom().is_positive());
        assert_eq!(f.format(&q(-4, 6)), "-2/3");
        assert_eq!(f.format(&q(4, 2)), "2");
    }

    #[test]
    fn rational_parse_rejects_garbage() {
        assert!(Rationals.parse_scalar("1/0").is_err());
        assert!(Rationals.parse_scalar("x").is_err());
        assert!(Rationals.parse_scalar("").is_err());
    }

    #[test]
    fn prime_field_basics() {
        let f = PrimeField::new(101).unwrap();
        assert_eq!(f.from_i64(-1), Residue(100));
        assert_eq!(f.mul(&Residue(50), &Residue(3)), Residue(49));
        for v in 1..101 {
            let inv = f.inv(&Residue(v)).unwrap();
            assert_eq!(f.mul(&Residue(v), &inv), Residue(1));
        }
        assert_eq!(f.inv(&Residue(0)), None);
        assert_eq!(f.parse_scalar("1/2").unwrap(), Residue(51));
        assert!(f.parse_scalar("1/101").is_err());
        assert_eq!(f.from_bigint(&BigInt::from(-203)), Residue(100));
    }

    #[test]
    fn prime_field_rejects_composites() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(91).is_err());
        assert!(PrimeField::new(2_147_483_647).is_ok());
        assert!(PrimeField::new(2_147_483_649).is_err());
        assert!(PrimeField::new(18_446_744_073_709_551_557).is_err());
    }

    #[test]
    fn field_spec_round_trips() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        let gf: FieldSpec = "gf:101".parse().unwrap();
        assert_eq!(gf.to_string(), "gf:101");
        assert!("gf:100".parse::<FieldSpec>().is_err());
        assert!("r".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn randomized_field_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = Rationals;
        for _ in 0..200 {
            let a = f.div(&f.sample(&mut rng, 50), &f.from_i64(rng.gen_range(1..20)));
            let b = f.sample(&mut rng, 50);
            let c = f.sample(&mut rng, 50);
            assert_eq!(f.add(&a, &b), f.add(&b, &a));
            assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            assert_eq!(
                f.mul(&a, &f.add(&b, &c)),
                f.add(&f.mul(&a, &b), &f.mul(&a, &c))
            );
            assert_eq!(f.sub(&f.add(&a, &b), &b), a);
        }
        let g = PrimeField::new(101).unwrap();
        for _ in 0..200 {
            let a = g.sample(&mut rng, 0);
            let b = g.sample(&mut rng, 0);
            let c = g.sample(&mut rng, 0);
            assert!(a.0 < 101);
            assert_eq!(g.mul(&g.mul(&a, &b), &c), g.mul(&a, &g.mul(&b, &c)));
            assert_eq!(g.add(&g.neg(&a), &a), Residue(0));
        }
    }
}
