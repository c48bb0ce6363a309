//! Compiles and runs the code listings of the guide in `book/` as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/frames.md")]
pub mod frames {}

#[doc = include_str!("../../../book/src/sylvester.md")]
pub mod sylvester {}

#[doc = include_str!("../../../book/src/algorithm.md")]
pub mod algorithm {}

#[doc = include_str!("../../../book/src/degrees.md")]
pub mod degrees {}

#[doc = include_str!("../../../book/src/equivariance.md")]
pub mod equivariance {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
