use klein_core::forms::verify_quartic_invariance;
use klein_core::group::{conjugacy_classes, recognize, Ambient, Group};
use klein_core::orbits::{classify_locus, local_type, orbit, singularity_report, stabilizer, Locus};
use klein_core::torus::registry::{name_of, resolve, PointName};
use klein_core::torus::{enumerate_fixed_points, fixed_point_count};

#[test]
fn group_and_classes() {
    let g = Group::get();
    assert_eq!(g.len(), 336);
    assert!(g.verify_presentation());
    let h = conjugacy_classes(g, Ambient::H);
    assert_eq!(h.iter().map(|c| c.size()).collect::<Vec<_>>(), vec![1, 21, 56, 42, 24, 24]);
    assert!(verify_quartic_invariance(g));
}

#[test]
fn elliptic_fixed_points_are_named() {
    let g = Group::get();
    let c = g.named("c").unwrap();
    assert_eq!(fixed_point_count(g, c).unwrap(), 4);
    let mut names: Vec<String> =
        enumerate_fixed_points(g, c).unwrap().iter().map(|p| name_of(p).unwrap().to_string()).collect();
    names.sort();
    assert_eq!(names, vec!["omega00", "omega01", "omega10", "omega11"]);
}

#[test]
fn stabilizers_and_orbits() {
    let g = Group::get();
    let q = resolve("beta0011").unwrap();
    let s = stabilizer(g, &q, Ambient::G);
    assert_eq!(recognize(g, &s).unwrap().to_string(), "C4");
    assert_eq!(orbit(g, &q, Ambient::G).len(), 84);
    assert_eq!(local_type(g, &s).unwrap().to_string(), "1/4(1,2,3)");
    let literal = resolve(&q.to_string()).unwrap();
    assert_eq!(literal, q);
    assert_eq!(name_of(&PointName::Eta(3).point()), Some(PointName::Eta(3)));
}

#[test]
fn omega_and_seven_torsion_loci() {
    let g = Group::get();
    let omega = classify_locus(g, Locus::Omega, Ambient::G).unwrap();
    assert_eq!(omega.iter().map(|r| r.orbit_size).collect::<Vec<_>>(), vec![7, 7, 28]);
    let t7 = classify_locus(g, Locus::T7, Ambient::H).unwrap();
    assert_eq!(t7.len(), 2);
}

#[test]
fn report_isolates_one_point_of_order_seven() {
    let g = Group::get();
    let r = singularity_report(g, Ambient::G, 7).unwrap();
    assert_eq!(r.isolated.len(), 1);
    assert_eq!(r.isolated[0].local_type.to_string(), "1/7(1,2,4)");
    assert_eq!(r.curves.len(), 1);
    let changes: Vec<String> = r.curves[0].type_changes().iter().map(|o| o.local_type.to_string()).collect();
    assert_eq!(changes, vec!["1/4(1,2,3)"]);
}
