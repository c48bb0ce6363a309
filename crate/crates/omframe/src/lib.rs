//! Degree-optimal moving frames for univariate polynomial vectors.
//!
//! Given a nonzero row vector `a` of polynomials over a field, a moving
//! frame is an invertible polynomial matrix `P` with
//! `a P = [gcd(a), 0, ..., 0]`. Its first column is a Bézout vector and the
//! remaining columns form a basis of the syzygies of `a`. [`omf`] computes a
//! frame whose columns all have the smallest possible degrees, using one
//! partial row reduction of a Sylvester-type matrix.
//!
//! ```
//! use omframe::{omf, parse_vector, Rationals};
//!
//! let a = parse_vector(&Rationals, "2+s+s^4, 3+s^2+s^4, 6+2*s^3+s^4").unwrap();
//! let frame = omf(&Rationals, &a).unwrap();
//! assert_eq!(frame.beta, 1);
//! assert_eq!(frame.mu, vec![2, 2]);
//! ```
//!
//! Arithmetic is exact. Two fields ship with the crate: [`Rationals`] and
//! [`PrimeField`].

pub mod dense;
pub mod document;
pub mod equivariant;
pub mod error;
pub mod field;
pub mod frame;
pub mod parse;
pub mod poly;
pub mod polyvec;
pub mod random;
pub mod reference;
pub mod sylvester;

pub use equivariant::{coefficient_section, eomf, CoefficientSection};
pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals, Residue, Scalar};
pub use frame::{extract_bezout, extract_mu_basis, omf, verify_frame, verify_matrix, MovingFrame, VerificationReport};
pub use parse::{format_poly, format_vector, parse_poly, parse_vector};
pub use poly::Poly;
pub use polyvec::{flat, row_times_matrix, sharp, vec_gcd, CoeffVector, Orientation, PolyMatrix, PolyVec};
pub use sylvester::{apply_a, build_system, partial_rref, PivotProfile, SylvesterSystem};
