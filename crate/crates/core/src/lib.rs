//! Exact symbolic kernel for the two-parameter quantum group `U_{r,s}(so_{2n+1})`.
//!
//! Coefficients live in `Q(r^(1/2), s^(1/2))` with `r`, `s` independent
//! indeterminates. Everything is computed exactly; nothing here allocates
//! outside `alloc`.
#![no_std]

extern crate alloc;

pub mod center;
pub mod error;
pub mod linalg;
pub mod pairing;
pub mod qgroup;
pub mod repn;
pub mod rootdata;
pub mod scalars;

pub use error::Error;
pub use scalars::{LaurentBi, Scalar};
