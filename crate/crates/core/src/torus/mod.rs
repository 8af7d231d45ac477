//! Torsion points of the torus `C^3 / Lambda` and fixed loci of group elements.

mod fixed;
mod point;
pub mod registry;

pub use fixed::{
    component_of, det_minus_identity, enumerate_fixed_points, fixed_locus_structure, fixed_point_count, Axis,
    FixedLocus, LocusKind, Splitting,
};
pub use point::TorusPoint;
