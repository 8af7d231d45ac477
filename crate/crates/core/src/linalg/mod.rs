//! Exact linear algebra over `K` and `Z`.

pub mod basis;
pub mod intmat;
pub mod mat3;
pub mod ratmat;

pub use basis::{from_eps_coords, lattice_contains, mat3_to_int6, to_eps_coords, BasisMap};
pub use intmat::{hnf_row_lattice, integer_kernel, saturate, smith_normal_form, IntMat, Lattice, Snf};
pub use mat3::{kernel_k, Mat3};
pub use ratmat::RatMat;
