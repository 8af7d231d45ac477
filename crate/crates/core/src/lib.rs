//! Klein's reflection group `G336`, its invariant rank-6 lattice, and the
//! singularities of the quotient of the torus `C^3 / Lambda` by it.

pub mod error;
pub mod forms;
pub mod group;
pub mod linalg;
pub mod orbits;
pub mod qnum;
pub mod torus;

pub use error::{Error, Result};
pub use qnum::{hermitian, CVec3, QNum, Rational};
