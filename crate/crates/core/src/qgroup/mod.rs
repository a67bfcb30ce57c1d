//! The algebra `U_{r,s}(so_{2n+1})`: presentation, normal form, Hopf maps.

mod algebra;
mod basis;
mod element;
mod hopf;
mod presentation;

pub use algebra::QuantumGroup;
pub use basis::{words_of_content, GradedBasis};
pub use element::{content, Element, Side, Term, Toral, Word};
pub use hopf::{Tensor, TensorElement};
pub use presentation::{Presentation, Relator};
