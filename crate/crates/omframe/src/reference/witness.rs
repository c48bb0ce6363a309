use std::fmt;

use crate::dense::Matrix;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::poly::Poly;
use crate::polyvec::PolyVec;

use super::oracle::product_matrix;

/// Parameters of an explicit extremal input.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WitnessSpec {
    /// Minimal Bézout degree `j` and μ-type `mu` (length `n - 1`).
    BetaMu { mu: Vec<usize>, j: usize },
    /// Optimal frame degree equal to `ceil(d / (n - 1))`.
    LowerBound { n: usize, d: usize },
    /// Optimal frame degree equal to `d`.
    UpperBound { n: usize, d: usize },
    /// Nonsingular principal block `C` of the Sylvester-type matrix.
    DetC { n: usize, d: usize },
}

impl WitnessSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            WitnessSpec::BetaMu { .. } => "beta-mu",
            WitnessSpec::LowerBound { .. } => "lower-bound",
            WitnessSpec::UpperBound { .. } => "upper-bound",
            WitnessSpec::DetC { .. } => "detC",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            WitnessSpec::BetaMu { mu, .. } => mu.len() + 1,
            WitnessSpec::LowerBound { n, .. }
            | WitnessSpec::UpperBound { n, .. }
            | WitnessSpec::DetC { n, .. } => *n,
        }
    }

    pub fn d(&self) -> usize {
        match self {
            WitnessSpec::BetaMu { mu, .. } => mu.iter().sum(),
            WitnessSpec::LowerBound { d, .. }
            | WitnessSpec::UpperBound { d, .. }
            | WitnessSpec::DetC { d, .. } => *d,
        }
    }

    /// Degree that every degree-optimal frame at the witness must have.
    pub fn frame_degree(&self) -> usize {
        match self {
            WitnessSpec::BetaMu { mu, .. } => mu.last().copied().unwrap_or(0),
            WitnessSpec::UpperBound { d, .. } => *d,
            WitnessSpec::LowerBound { n, d } | WitnessSpec::DetC { n, d } => d.div_ceil(n - 1),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidWitness(msg));
        match self {
            WitnessSpec::BetaMu { mu, j } => {
                if mu.is_empty() {
                    return bad("mu must have at least one entry".into());
                }
                if mu.windows(2).any(|w| w[0] > w[1]) {
                    return bad("mu must be nondecreasing".into());
                }
                let top = *mu.last().unwrap();
                if top == 0 {
                    return bad("the largest entry of mu must be positive".into());
                }
                if *j >= top {
                    return bad(format!("j must satisfy 0 <= j <= {}", top - 1));
                }
                Ok(())
            }
            WitnessSpec::LowerBound { n, d }
            | WitnessSpec::UpperBound { n, d }
            | WitnessSpec::DetC { n, d } => {
                if *n < 2 {
                    return bad(format!("n must be at least 2 (got {n})"));
                }
                if *d == 0 {
                    return bad("d must be positive".into());
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for WitnessSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessSpec::BetaMu { mu, j } => {
                let mu: Vec<String> = mu.iter().map(ToString::to_string).collect();
                write!(f, "beta-mu(mu=({}), j={j})", mu.join(","))
            }
            other => write!(f, "{}(n={}, d={})", other.kind(), other.n(), other.d()),
        }
    }
}

fn monomial<F: Field>(field: &F, k: usize) -> Poly<F::Elem> {
    Poly::monomial(field, field.one(), k)
}

pub fn gen_witness<F: Field>(field: &F, spec: &WitnessSpec) -> Result<PolyVec<F::Elem>> {
    spec.validate()?;
    let entries = match spec {
        WitnessSpec::BetaMu { mu, j } => {
            let top = *mu.last().unwrap();
            let mut e = top - j;
            let mut out = vec![monomial(field, e)];
            for m in &mu[..mu.len() - 1] {
                e += m;
                out.push(monomial(field, e));
            }
            let total: usize = mu.iter().sum();
            out.push(monomial(field, total).add(&Poly::one(field), field));
            out
        }
        WitnessSpec::LowerBound { n, d } => {
            let (n, d) = (*n, *d);
            let c = d.div_ceil(n - 1);
            let k = d.div_ceil(c) - 1;
            let mut out = vec![Poly::one(field)];
            out.extend(std::iter::repeat_n(Poly::zero(), n - k - 2));
            out.extend((0..=k).rev().map(|i| monomial(field, d - i * c)));
            out
        }
        WitnessSpec::UpperBound { n, d } => {
            let mut out = vec![Poly::zero(); *n];
            out[0] = Poly::one(field);
            out[n - 1] = monomial(field, *d);
            out
        }
        WitnessSpec::DetC { n, d } => {
            let (k, r) = (d / (n - 1), d % (n - 1));
            (0..*n).map(|i| monomial(field, d - (i * k + i.min(r)))).collect()
        }
    };
    PolyVec::row(entries)
}

/// Leading principal `(d + k + 1)`-square block of the Sylvester-type matrix,
/// where `k = floor(d / (n - 1))`.
pub fn c_matrix<F: Field>(field: &F, a: &PolyVec<F::Elem>) -> Result<Matrix<F::Elem>> {
    let n = a.len();
    if n < 2 {
        return Err(Error::TooShort(n));
    }
    let d = a.degree().ok_or(Error::ZeroVector)?;
    let k = d / (n - 1);
    Ok(product_matrix(field, a, d).principal(d + k + 1))
}

pub fn c_matrix_nonsingular<F: Field>(field: &F, a: &PolyVec<F::Elem>) -> Result<bool> {
    Ok(!c_matrix(field, a)?.det(field).is_zero())
}
