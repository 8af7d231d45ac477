//! Stabilizers and orbits of torus points, special curves, and the
//! singularities of the quotients `J/G` and `J/H`.

mod curve;
mod local;
mod locus;
mod report;
mod weights;

use std::collections::BTreeSet;

use crate::group::{Ambient, ElemSet, Group};
use crate::torus::TorusPoint;

pub use curve::{generic_curve_stabilizer, Curve};
pub use local::{invariant_eigen_exponents, local_type};
pub use locus::{classify_locus, classify_points, doubling_check, DoublingCheck, Locus, OrbitRecord};
pub use report::{
    dissident_on_curve_check, singularity_report, special_curves, CurveRecord, DissidentCheck, SingularityReport,
};
pub use weights::{cyclic_generator, cyclic_weights, eigen_exponents, singularity_weights, ImageStatus, Weights};

pub fn stabilizer(group: &Group, u: &TorusPoint, ambient: Ambient) -> ElemSet {
    group.set(ambient).iter().filter(|&g| u.apply(&group.element(g).int6) == *u).collect()
}

pub fn orbit(group: &Group, u: &TorusPoint, ambient: Ambient) -> BTreeSet<TorusPoint> {
    group.set(ambient).iter().map(|g| u.apply(&group.element(g).int6)).collect()
}

/// `true` iff `s` is generated by the reflections it contains.
pub fn reflection_generated(group: &Group, s: &ElemSet) -> bool {
    let refl: Vec<_> = s.iter().filter(|&x| group.is_reflection(x)).collect();
    group.closure(&refl) == *s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::recognize;
    use crate::torus::registry::PointName;

    fn label(s: &ElemSet) -> String {
        recognize(Group::get(), s).unwrap().to_string()
    }

    #[test]
    fn stabilizers_of_named_points() {
        let g = Group::get();
        assert_eq!(stabilizer(g, &TorusPoint::zero(), Ambient::G).len(), 336);
        assert_eq!(stabilizer(g, &TorusPoint::zero(), Ambient::H).len(), 168);
        let eta1 = PointName::Eta(1).point();
        let s = stabilizer(g, &eta1, Ambient::H);
        assert_eq!((s.len(), label(&s)), (7, "C7".to_string()));
        let b = stabilizer(g, &PointName::Beta(0b1000).point(), Ambient::G);
        assert_eq!((b.len(), label(&b)), (16, "±D8".to_string()));
    }

    #[test]
    fn orbit_sizes() {
        let g = Group::get();
        assert_eq!(orbit(g, &PointName::Omega(1, 0).point(), Ambient::G).len(), 7);
        assert_eq!(orbit(g, &PointName::Omega(0, 1).point(), Ambient::G).len(), 28);
        assert_eq!(orbit(g, &PointName::Eta(1).point(), Ambient::G).len(), 48);
        assert_eq!(orbit(g, &PointName::Eta(1).point(), Ambient::H).len(), 24);
    }

    #[test]
    fn reflection_generation() {
        let g = Group::get();
        let r1 = g.named("r1").unwrap();
        assert!(reflection_generated(g, &g.closure(&[r1])));
        assert!(reflection_generated(g, g.set(Ambient::G)));
        assert!(!reflection_generated(g, g.set(Ambient::H)));
        let c4 = stabilizer(g, &PointName::Beta(0b0011).point(), Ambient::G);
        assert_eq!(label(&c4), "C4");
        assert!(!reflection_generated(g, &c4));
        let s4 = stabilizer(g, &PointName::Omega(1, 0).point(), Ambient::G);
        assert_eq!(label(&s4), "±S4");
        assert!(reflection_generated(g, &s4));
    }
}
