//! Independent oracles, a non-optimal baseline frame, and generators for
//! the extremal examples of the degree theory.
//!
//! Everything here is built on the generic dense solver in
//! [`crate::dense`] and never calls into [`crate::sylvester`].

mod baseline;
mod oracle;
mod witness;

pub use baseline::{fq_frame, fq_frame_with, BaselineFrame};
pub use oracle::{brute_min_bezout, brute_mu_type, monomial_representation, product_matrix};
pub use witness::{c_matrix, c_matrix_nonsingular, gen_witness, WitnessSpec};
