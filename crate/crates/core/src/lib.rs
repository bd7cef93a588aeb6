//! Gerstenhaber brackets on the Hochschild cohomology of the truncated
//! polynomial ring A = k[x]/(x^p) and the Taft algebra T_p, and on the Hopf
//! cohomology of T_p, computed exactly over ℚ(ω).

pub mod algebras;
pub mod bracket;
pub mod diagonal;
pub mod error;
pub mod homotopy;
pub mod hopf;
pub mod lincomb;
pub mod linalg;
pub mod oracle;
pub mod resolution;
pub mod scalars;

pub use algebras::{hopf_axioms, AlgElem, Algebra, AlgebraKind, HopfAxioms, Mono, TensorElem};
pub use error::{Error, Result};
pub use lincomb::LinComb;
pub use scalars::{Cyc, CycField, Rational};
