//! Degree-optimal moving frames.
//!
//! A moving frame at a row vector `a` is an invertible polynomial matrix `P`
//! with `a P = [gcd(a), 0, ..., 0]`. It is degree-optimal when its first
//! column is a Bézout vector of minimal degree and the remaining columns
//! form a μ-basis sorted by degree. [`omf`] reads such a frame off a single
//! partial elimination of the Sylvester-type matrix.

use std::fmt;

use crate::dense::Matrix;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::poly::Poly;
use crate::polyvec::{row_times_matrix, vec_gcd, PolyMatrix, PolyVec};
use crate::sylvester::{build_system, partial_rref, PivotProfile};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MovingFrame<E> {
    pub matrix: PolyMatrix<E>,
    /// Monic gcd of the input.
    pub gcd: Poly<E>,
    /// Degree of the Bézout column.
    pub beta: usize,
    /// Degrees of the μ-basis columns, nondecreasing.
    pub mu: Vec<usize>,
    pub profile: PivotProfile<E>,
}

impl<E: Scalar> MovingFrame<E> {
    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn bezout(&self) -> PolyVec<E> {
        self.matrix.column(0)
    }

    pub fn mu_basis(&self) -> Vec<PolyVec<E>> {
        (1..self.n()).map(|j| self.matrix.column(j)).collect()
    }

    /// Maximum entry degree of the frame.
    pub fn degree(&self) -> usize {
        self.mu.iter().copied().chain([self.beta]).max().unwrap_or(0)
    }
}

/// Degree-optimal moving frame at `a`.
///
/// Inputs with a nontrivial gcd `g` are divided by `g` first; the resulting
/// frame still satisfies `a P = [g, 0, ..., 0]`.
pub fn omf<F: Field>(field: &F, a: &PolyVec<F::Elem>) -> Result<MovingFrame<F::Elem>> {
    if a.len() < 2 {
        return Err(Error::TooShort(a.len()));
    }
    let gcd = vec_gcd(field, a)?;
    let reduced = if gcd.is_constant() {
        a.clone()
    } else {
        a.exact_div(&gcd, field).expect("gcd divides every component")
    };
    let sys = build_system(field, &reduced)?;
    let profile = partial_rref(field, &sys);
    let bezout = extract_bezout(field, &profile)?;
    let mu_cols = extract_mu_basis(field, &profile)?;

    let n = profile.n();
    let beta = profile
        .pivots()
        .iter()
        .zip(profile.augmented().unwrap_or_default())
        .filter(|(_, x)| !x.is_zero())
        .map(|(&p, _)| p.div_ceil(n) - 1)
        .max()
        .unwrap_or(0);
    let mu = profile.basic_indices().iter().map(|&q| q.div_ceil(n) - 1).collect();

    let mut columns = vec![bezout];
    columns.extend(mu_cols);
    let matrix = PolyMatrix::from_columns(&columns)?;
    Ok(MovingFrame {
        matrix,
        gcd,
        beta,
        mu,
        profile,
    })
}

/// Accumulates `c s^k` terms into dense coefficient lists, one per component.
struct ColumnBuilder<E> {
    entries: Vec<Vec<E>>,
}

impl<E: Scalar> ColumnBuilder<E> {
    fn new(n: usize) -> Self {
        Self {
            entries: vec![Vec::new(); n],
        }
    }

    fn add<F: Field<Elem = E>>(&mut self, field: &F, r: usize, k: usize, c: &E) {
        let slot = &mut self.entries[r];
        if slot.len() <= k {
            slot.resize(k + 1, field.zero());
        }
        slot[k] = field.add(&slot[k], c);
    }

    fn finish(self) -> PolyVec<E> {
        PolyVec::column(self.entries.into_iter().map(Poly::new).collect()).expect("n >= 1")
    }
}

fn locate(n: usize, j: usize) -> (usize, usize) {
    ((j - 1) % n, (j - 1) / n)
}

/// Minimal-degree Bézout vector: `v` is zero except `v[p_i] = alpha_i`.
pub fn extract_bezout<F: Field>(field: &F, profile: &PivotProfile<F::Elem>) -> Result<PolyVec<F::Elem>> {
    let alpha = profile.augmented().ok_or(Error::GcdNotOne)?;
    let n = profile.n();
    let mut col = ColumnBuilder::new(n);
    for (&p, x) in profile.pivots().iter().zip(alpha) {
        if !x.is_zero() {
            let (r, k) = locate(n, p);
            col.add(field, r, k, x);
        }
    }
    Ok(col.finish())
}

/// Degree-ordered μ-basis, one column per basic non-pivotal index.
pub fn extract_mu_basis<F: Field>(
    field: &F,
    profile: &PivotProfile<F::Elem>,
) -> Result<Vec<PolyVec<F::Elem>>> {
    if profile.gcd_nontrivial() {
        return Err(Error::GcdNotOne);
    }
    let n = profile.n();
    let one = field.one();
    Ok(profile
        .basic()
        .iter()
        .map(|b| {
            let mut col = ColumnBuilder::new(n);
            let (r, k) = locate(n, b.index);
            col.add(field, r, k, &one);
            for (&p, x) in profile.pivots().iter().zip(&b.alpha) {
                if !x.is_zero() {
                    let (r, k) = locate(n, p);
                    col.add(field, r, k, &field.neg(x));
                }
            }
            col.finish()
        })
        .collect())
}

/// One named pass/fail entry of a [`VerificationReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "{mark:4}  {:16} {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Names of the checks, in report order.
pub const CHECK_NAMES: [&str; 7] = [
    "product",
    "determinant",
    "mu-order",
    "degree-bounds",
    "beta-mu",
    "mu-sum",
    "leading-vectors",
];

/// Checks that `frame` is a degree-optimal moving frame at `a`.
pub fn verify_frame<F: Field>(
    field: &F,
    a: &PolyVec<F::Elem>,
    frame: &MovingFrame<F::Elem>,
) -> Result<VerificationReport> {
    verify_matrix(field, a, &frame.matrix)
}

/// Checks an arbitrary square matrix against the frame laws and the degree
/// properties of degree-optimal frames. Failures are reported, not raised;
/// errors are only returned for inputs of the wrong shape.
pub fn verify_matrix<F: Field>(
    field: &F,
    a: &PolyVec<F::Elem>,
    p: &PolyMatrix<F::Elem>,
) -> Result<VerificationReport> {
    let n = a.len();
    if n < 2 {
        return Err(Error::TooShort(n));
    }
    if p.rows() != n || p.cols() != n {
        return Err(Error::Dimension(format!(
            "frame is {}x{} but the input has {n} components",
            p.rows(),
            p.cols()
        )));
    }
    let gcd = vec_gcd(field, a)?;
    let d = a.degree().unwrap_or(0) - gcd.degree().unwrap_or(0);
    let degs = p.column_degrees();
    let beta = degs[0];
    let mu = &degs[1..];
    let fmt_deg = |x: Option<usize>| x.map_or("-inf".to_string(), |v| v.to_string());
    let mut checks = Vec::with_capacity(7);

    let product = row_times_matrix(field, a, p)?;
    let expected_product = {
        let mut e = vec![Poly::zero(); n];
        e[0] = gcd.clone();
        PolyVec::row(e)?
    };
    checks.push(Check {
        name: "product",
        passed: product == expected_product,
        detail: "a P = [gcd(a), 0, ..., 0]".into(),
    });

    let det = p.det(field)?;
    checks.push(Check {
        name: "determinant",
        passed: det.degree() == Some(0),
        detail: match det.degree() {
            Some(0) => format!("det P = {}", field.format(&det.coeffs()[0])),
            Some(k) => format!("det P has degree {k}"),
            None => "det P = 0".into(),
        },
    });

    let ordered = mu.iter().all(Option::is_some) && mu.windows(2).all(|w| w[0] <= w[1]);
    checks.push(Check {
        name: "mu-order",
        passed: ordered,
        detail: format!(
            "mu = ({})",
            mu.iter().map(|&x| fmt_deg(x)).collect::<Vec<_>>().join(", ")
        ),
    });

    let deg_p = p.degree();
    let lower = d.div_ceil(n - 1);
    checks.push(Check {
        name: "degree-bounds",
        passed: deg_p.is_some_and(|k| lower <= k && k <= d),
        detail: format!("{lower} <= deg P = {} <= {d}", fmt_deg(deg_p)),
    });

    let max_mu = mu.iter().copied().max().flatten();
    let beta_mu = if d == 0 {
        beta == Some(0) && mu.iter().all(|&x| x == Some(0))
    } else {
        matches!((beta, max_mu), (Some(b), Some(m)) if b < m)
    };
    checks.push(Check {
        name: "beta-mu",
        passed: beta_mu,
        detail: format!("beta = {}, max mu = {}", fmt_deg(beta), fmt_deg(max_mu)),
    });

    let sum: Option<usize> = mu.iter().copied().sum();
    checks.push(Check {
        name: "mu-sum",
        passed: sum == Some(d),
        detail: format!("sum mu = {} (expected {d})", sum.map_or("-inf".into(), |v| v.to_string())),
    });

    let lv_rank = {
        let rows: Option<Vec<Vec<F::Elem>>> =
            (1..n).map(|j| p.column(j).leading_vector(field)).collect();
        rows.map(|r| Matrix::from_rows(r).rank(field))
    };
    checks.push(Check {
        name: "leading-vectors",
        passed: lv_rank == Some(n - 1),
        detail: format!(
            "rank of mu leading vectors = {} of {}",
            lv_rank.map_or("-".into(), |v| v.to_string()),
            n - 1
        ),
    });

    Ok(VerificationReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn running_a() -> PolyVec<BigRational> {
        PolyVec::row_from_i64s(&Rationals, &[&[2, 1, 0, 0, 1], &[3, 0, 1, 0, 1], &[6, 0, 0, 2, 1]]).unwrap()
    }

    fn running_p() -> PolyMatrix<BigRational> {
        PolyMatrix::from_i64s(
            &Rationals,
            &[
                vec![&[2, -1], &[3, -3, -1], &[9, -12, -1]],
                vec![&[1, 2], &[2, 5, 1], &[8, 15]],
                vec![&[-1, -1], &[-2, -2], &[-7, -5, 1]],
            ],
        )
        .unwrap()
    }

    #[test]
    fn running_example_frame() {
        let f = omf(&Rationals, &running_a()).unwrap();
        assert_eq!(f.matrix, running_p());
        assert_eq!((f.beta, f.mu.clone()), (1, vec![2, 2]));
        assert_eq!(f.gcd, Poly::one(&Rationals));
        assert_eq!(f.degree(), 2);
        assert!(verify_frame(&Rationals, &running_a(), &f).unwrap().all_passed());
    }

    #[test]
    fn running_example_pieces() {
        let f = omf(&Rationals, &running_a()).unwrap();
        let b = extract_bezout(&Rationals, &f.profile).unwrap();
        assert_eq!(b, PolyVec::column_from_i64s(&Rationals, &[&[2, -1], &[1, 2], &[-1, -1]]).unwrap());
        let mu = extract_mu_basis(&Rationals, &f.profile).unwrap();
        assert_eq!(mu, vec![running_p().column(1), running_p().column(2)]);
    }

    #[test]
    fn standard_basis_vector() {
        let a = PolyVec::row_from_i64s(&Rationals, &[&[1], &[], &[]]).unwrap();
        let f = omf(&Rationals, &a).unwrap();
        assert_eq!(f.matrix, PolyMatrix::identity(&Rationals, 3));
        assert_eq!((f.beta, f.mu), (0, vec![0, 0]));
    }

    #[test]
    fn small_vector() {
        let a = PolyVec::row_from_i64s(&Rationals, &[&[0, 1], &[1, 1]]).unwrap();
        let f = omf(&Rationals, &a).unwrap();
        assert_eq!(f.bezout(), PolyVec::column_from_i64s(&Rationals, &[&[-1], &[1]]).unwrap());
        assert_eq!(f.mu_basis(), vec![PolyVec::column_from_i64s(&Rationals, &[&[-1, -1], &[0, 1]]).unwrap()]);
    }

    #[test]
    fn nontrivial_gcd_is_divided_out() {
        let a = PolyVec::row_from_i64s(&Rationals, &[&[0, 1, 1], &[0, 0, 1]]).unwrap();
        let f = omf(&Rationals, &a).unwrap();
        assert_eq!(f.gcd, Poly::from_i64s(&Rationals, &[0, 1]));
        assert_eq!((f.beta, f.mu.clone()), (0, vec![1]));
        let listed = PolyMatrix::from_i64s(&Rationals, &[vec![&[1], &[0, 1]], vec![&[-1], &[-1, -1]]]).unwrap();
        let flipped = PolyMatrix::from_columns(&[listed.column(0), listed.column(1).scale(&Rationals.from_i64(-1), &Rationals)]).unwrap();
        assert!(f.matrix == listed || f.matrix == flipped);
        assert!(verify_frame(&Rationals, &a, &f).unwrap().all_passed());
    }

    #[test]
    fn rejects_bad_input() {
        let zero = PolyVec::row_from_i64s(&Rationals, &[&[], &[]]).unwrap();
        assert_eq!(omf(&Rationals, &zero), Err(Error::ZeroVector));
        let short = PolyVec::row_from_i64s(&Rationals, &[&[1, 1]]).unwrap();
        assert_eq!(omf(&Rationals, &short), Err(Error::TooShort(1)));
    }

    #[test]
    fn identity_is_not_a_frame_for_running_example() {
        let report = verify_matrix(&Rationals, &running_a(), &PolyMatrix::identity(&Rationals, 3)).unwrap();
        assert!(!report.passed("product"));
        assert!(report.passed("determinant"));
        assert!(!report.all_passed());
    }

    #[test]
    fn upper_bound_frame() {
        let d = 5;
        let mut top = vec![0; d + 1];
        top[d] = 1;
        let a = PolyVec::row_from_i64s(&Rationals, &[&[1], &[], &top]).unwrap();
        let f = omf(&Rationals, &a).unwrap();
        let report = verify_frame(&Rationals, &a, &f).unwrap();
        assert!(report.all_passed(), "{report}");
        assert_eq!(f.degree(), d);
    }

    #[test]
    fn constant_vectors() {
        let a = PolyVec::row_from_i64s(&Rationals, &[&[], &[2], &[]]).unwrap();
        let f = omf(&Rationals, &a).unwrap();
        assert_eq!((f.beta, f.mu.clone()), (0, vec![0, 0]));
        assert!(verify_frame(&Rationals, &a, &f).unwrap().all_passed());
    }

    #[test]
    fn prime_field_frame() {
        let gf = PrimeField::new(101).unwrap();
        let a = PolyVec::row_from_i64s(&gf, &[&[2, 1, 0, 0, 1], &[3, 0, 1, 0, 1], &[6, 0, 0, 2, 1]]).unwrap();
        let f = omf(&gf, &a).unwrap();
        assert_eq!((f.beta, f.mu.clone()), (1, vec![2, 2]));
        assert!(verify_frame(&gf, &a, &f).unwrap().all_passed());
    }
}
