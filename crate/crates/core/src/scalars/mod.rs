//! Exact coefficients: rational functions in `u = r^(1/2)` and `v = s^(1/2)`.

mod laurent;
mod poly;
mod scalar;

pub use laurent::{grlex, Exp, LaurentBi};
pub use scalar::Scalar;
