use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{local_type, orbit, reflection_generated, singularity_weights, stabilizer, ImageStatus};
use crate::error::{Error, Result};
use crate::group::{recognize, Ambient, Group, SubgroupLabel};
use crate::qnum::{rat, Rational};
use crate::torus::registry::{name_of, PointName};
use crate::torus::{enumerate_fixed_points, TorusPoint};

/// Loci of special torsion points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Locus {
    /// Non-zero half-periods.
    T2,
    /// Non-zero fixed points of elements of order 6.
    T6,
    /// Non-zero fixed points of elements of order 4 and determinant -1.
    T4p,
    /// Non-zero fixed points of elements of order 7.
    T7,
    /// The 15 non-zero `beta` points.
    Beta,
    /// The 3 non-zero `omega` points.
    Omega,
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Locus::T2 => "T2",
            Locus::T6 => "T6",
            Locus::T4p => "T4p",
            Locus::T7 => "T7",
            Locus::Beta => "beta",
            Locus::Omega => "omega",
        })
    }
}

impl FromStr for Locus {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "T2" => Ok(Locus::T2),
            "T6" => Ok(Locus::T6),
            "T4p" | "T4prime" | "T4'" => Ok(Locus::T4p),
            "T7" => Ok(Locus::T7),
            "beta" => Ok(Locus::Beta),
            "omega" => Ok(Locus::Omega),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

impl Locus {
    /// Registry family naming the points of this locus.
    fn names(self, n: PointName) -> bool {
        match self {
            Locus::T2 => matches!(n, PointName::Xi(_)),
            Locus::T7 => matches!(n, PointName::Eta(_)),
            Locus::T6 | Locus::Omega => matches!(n, PointName::Omega(..)),
            Locus::T4p | Locus::Beta => matches!(n, PointName::Beta(_)),
        }
    }

    pub fn points(self, group: &Group) -> Result<Vec<TorusPoint>> {
        let fixed_by = |keep: &dyn Fn(usize) -> bool| -> Result<Vec<TorusPoint>> {
            let mut out = BTreeSet::new();
            for el in group.elements() {
                if keep(el.id) {
                    out.extend(enumerate_fixed_points(group, el.id)?);
                }
            }
            out.remove(&TorusPoint::zero());
            Ok(out.into_iter().collect())
        };
        match self {
            Locus::T2 => Ok((1..64).map(|k| PointName::Xi(k).point()).collect()),
            Locus::T6 => fixed_by(&|g| group.order(g) == 6),
            Locus::T4p => fixed_by(&|g| group.order(g) == 4 && group.det_sign(g) == -1),
            Locus::T7 => fixed_by(&|g| group.order(g) == 7),
            Locus::Beta => Ok((1..16).map(|b| PointName::Beta(b).point()).collect()),
            Locus::Omega => Ok([(0, 1), (1, 0), (1, 1)].iter().map(|&(i, j)| PointName::Omega(i, j).point()).collect()),
        }
    }
}

/// One orbit meeting a locus.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitRecord {
    pub quotient: Ambient,
    pub representative: TorusPoint,
    pub name: Option<String>,
    /// Named locus points in this orbit.
    pub members: Vec<String>,
    /// Number of locus points in this orbit.
    pub locus_points: usize,
    pub orbit_size: usize,
    pub stabilizer_order: usize,
    pub label: SubgroupLabel,
    pub h_label: SubgroupLabel,
    pub contains_minus_one: bool,
    pub reflection_count: usize,
    pub reflection_generated: bool,
    pub image_status: ImageStatus,
    pub local_type: ImageStatus,
}

impl OrbitRecord {
    pub fn of(group: &Group, u: &TorusPoint, quotient: Ambient) -> Result<OrbitRecord> {
        let s = stabilizer(group, u, quotient);
        let h = s.intersection(group.set(Ambient::H));
        let orbit_size = orbit(group, u, quotient).len();
        if orbit_size * s.len() != group.set(quotient).len() {
            return Err(Error::Consistency(format!("orbit-stabilizer fails at {u}")));
        }
        let label = recognize(group, &s)?;
        let rg = reflection_generated(group, &s);
        let image_status = singularity_weights(group, &s)?;
        let local = local_type(group, &s)?;
        if rg != local.is_smooth() {
            return Err(Error::Consistency(format!("{u}: reflection generation and local type disagree")));
        }
        Ok(OrbitRecord {
            quotient,
            representative: u.clone(),
            name: name_of(u).map(|n| n.to_string()),
            members: Vec::new(),
            locus_points: 0,
            orbit_size,
            stabilizer_order: s.len(),
            label,
            h_label: recognize(group, &h)?,
            contains_minus_one: label.contains_minus_one(),
            reflection_count: s.iter().filter(|&x| group.is_reflection(x)).count(),
            reflection_generated: rg,
            image_status,
            local_type: local,
        })
    }

    pub fn is_smooth(&self) -> bool {
        self.local_type.is_smooth()
    }
}

fn name_key(p: &TorusPoint) -> ((u8, PointName), TorusPoint) {
    (name_of(p).map(|n| n.preference()).unwrap_or((u8::MAX, PointName::Xi(0))), p.clone())
}

fn preferred(points: &[TorusPoint]) -> TorusPoint {
    points.iter().min_by_key(|p| name_key(p)).expect("non-empty orbit").clone()
}

/// Orbit decomposition of `points`, ordered by orbit size and then by the
/// representative's name.
pub fn classify_points(group: &Group, points: &[TorusPoint], quotient: Ambient) -> Result<Vec<OrbitRecord>> {
    classify_named(group, points, quotient, &|_| true)
}

fn classify_named(
    group: &Group,
    points: &[TorusPoint],
    quotient: Ambient,
    family: &dyn Fn(PointName) -> bool,
) -> Result<Vec<OrbitRecord>> {
    let mut remaining: BTreeSet<TorusPoint> = points.iter().cloned().collect();
    let mut out = Vec::new();
    while let Some(u) = remaining.iter().next().cloned() {
        let orb = orbit(group, &u, quotient);
        let here: Vec<TorusPoint> = remaining.iter().filter(|p| orb.contains(p)).cloned().collect();
        for p in &here {
            remaining.remove(p);
        }
        let mut rec = OrbitRecord::of(group, &preferred(&here), quotient)?;
        rec.locus_points = here.len();
        let mut members: Vec<PointName> =
            PointName::all().into_iter().filter(|&n| family(n) && here.contains(&n.point())).collect();
        members.sort_by_key(|n| n.preference());
        members.dedup();
        rec.members = members.iter().map(|n| n.to_string()).collect();
        out.push(rec);
    }
    out.sort_by_key(|r| (r.orbit_size, name_key(&r.representative)));
    Ok(out)
}

pub fn classify_locus(group: &Group, locus: Locus, quotient: Ambient) -> Result<Vec<OrbitRecord>> {
    classify_named(group, &locus.points(group)?, quotient, &|n| locus.names(n))
}

/// The H-orbit structure of the 7-torsion points fixed by `g7`.
#[derive(Clone, Debug, Serialize)]
pub struct DoublingCheck {
    /// `h3 (eta1) - 2 eta1` for the lift `eta1 = (-1,-1,1,1,1,-1)/7` in eps-coordinates.
    pub difference_in_lattice: bool,
    pub h3_doubles_eta1: bool,
    pub multiples: bool,
    pub first_orbit: bool,
    pub second_orbit: bool,
    pub orbits_distinct: bool,
    pub minus_one_swaps: bool,
}

impl DoublingCheck {
    pub fn holds(&self) -> bool {
        self.difference_in_lattice
            && self.h3_doubles_eta1
            && self.multiples
            && self.first_orbit
            && self.second_orbit
            && self.orbits_distinct
            && self.minus_one_swaps
    }
}

pub fn doubling_check(group: &Group) -> Result<DoublingCheck> {
    let h3 = group.named("h3")?;
    let m = &group.element(h3).int6;
    let lift: Vec<Rational> = [-1, -1, 1, 1, 1, -1].iter().map(|&s| rat(s, 7)).collect();
    let image: Vec<Rational> =
        (0..6).map(|i| (0..6).map(|j| Rational::from_integer(m[(i, j)].into()) * &lift[j]).sum()).collect();
    let difference_in_lattice = (0..6).all(|i| (&image[i] - &lift[i] * rat(2, 1)).is_integer());

    let eta = |i: u8| PointName::Eta(i).point();
    let eta1 = eta(1);
    let h3_doubles_eta1 = eta1.apply(m) == eta1.scale(2);
    let multiples = eta(2) == eta1.scale(2) && eta(4) == eta1.scale(4);
    let o1 = orbit(group, &eta1, Ambient::H);
    let o3 = orbit(group, &eta(3), Ambient::H);
    let first_orbit = [1, 2, 4].iter().all(|&i| o1.contains(&eta(i)));
    let second_orbit = [3, 5, 6].iter().all(|&i| o3.contains(&eta(i)));
    let orbits_distinct = o1.is_disjoint(&o3);
    let minus = eta1.neg();
    let minus_one_swaps = o3.contains(&minus) && o1.iter().all(|p| o3.contains(&p.neg()));
    Ok(DoublingCheck {
        difference_in_lattice,
        h3_doubles_eta1,
        multiples,
        first_orbit,
        second_orbit,
        orbits_distinct,
        minus_one_swaps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn summary(recs: &[OrbitRecord]) -> Vec<(usize, String)> {
        recs.iter().map(|r| (r.orbit_size, r.label.to_string())).collect()
    }

    #[test]
    fn locus_sizes() {
        let g = Group::get();
        assert_eq!(Locus::T2.points(g).unwrap().len(), 63);
        assert_eq!(Locus::T7.points(g).unwrap().len(), 48);
        assert_eq!(Locus::Beta.points(g).unwrap().len(), 15);
        for l in ["T2", "T6", "T4p", "T7", "beta", "omega"] {
            assert_eq!(l.parse::<Locus>().unwrap().to_string(), l);
        }
    }

    #[test]
    fn t7_orbits() {
        let g = Group::get();
        let h = classify_locus(g, Locus::T7, Ambient::H).unwrap();
        assert_eq!(summary(&h), vec![(24, "C7".into()), (24, "C7".into())]);
        for r in &h {
            assert_eq!(r.image_status.to_string(), "1/7(1,2,4)");
        }
        let gg = classify_locus(g, Locus::T7, Ambient::G).unwrap();
        assert_eq!(summary(&gg), vec![(48, "C7".into())]);
    }

    #[test]
    fn t2_orbits() {
        let g = Group::get();
        let recs = classify_locus(g, Locus::T2, Ambient::G).unwrap();
        assert_eq!(summary(&recs), vec![(7, "±S4".into()), (7, "±S4".into()), (21, "±D8".into()), (28, "±S3".into())]);
        // {±1} x S3 contains only three reflections, generating S′3
        let s3 = &recs[3];
        assert_eq!(s3.name.as_deref(), Some("omega01"));
        assert!(!s3.reflection_generated);
        assert_eq!(s3.reflection_count, 3);
        assert_eq!(s3.image_status, ImageStatus::NonCyclic);
        assert_eq!(s3.local_type.to_string(), "1/2(0,1,1)");
        assert!(recs[..3].iter().all(|r| r.reflection_generated && r.is_smooth()));
    }

    #[test]
    fn t2_matches_brute_force() {
        let g = Group::get();
        let recs = classify_locus(g, Locus::T2, Ambient::G).unwrap();
        let halves: Vec<TorusPoint> = (1..64).map(|k| PointName::Xi(k).point()).collect();
        let mut sizes = Vec::new();
        let mut seen = BTreeSet::new();
        for u in &halves {
            if seen.contains(u) {
                continue;
            }
            let mut orb = BTreeSet::new();
            for el in g.elements() {
                orb.insert(u.apply(&el.int6));
            }
            let fixing = g.elements().iter().filter(|el| u.apply(&el.int6) == *u).count();
            assert_eq!(orb.len() * fixing, 336);
            sizes.push(orb.len());
            seen.extend(orb);
        }
        sizes.sort();
        assert_eq!(sizes, recs.iter().map(|r| r.orbit_size).collect::<Vec<_>>());
    }

    #[test]
    fn beta_table() {
        let g = Group::get();
        let recs = classify_locus(g, Locus::Beta, Ambient::G).unwrap();
        let mut cols: Vec<(String, String, usize, usize)> = Vec::new();
        for r in &recs {
            match cols.iter_mut().find(|c| c.0 == r.label.to_string()) {
                Some(c) => {
                    c.2 += r.locus_points;
                    c.3 += 1;
                }
                None => cols.push((r.label.to_string(), r.h_label.to_string(), r.locus_points, 1)),
            }
        }
        let labels: Vec<(&str, &str, usize)> = cols.iter().map(|c| (c.0.as_str(), c.1.as_str(), c.2)).collect();
        assert_eq!(
            labels,
            vec![("±S4", "S4", 2), ("S′4", "A4", 4), ("±D8", "D8", 1), ("D″8", "2²", 4), ("C4", "C2-antirefl", 4)]
        );
        let images: Vec<usize> = cols.iter().map(|c| c.3).collect();
        assert_eq!(images, vec![2, 2, 1, 2, 1]);
        let s4: Vec<String> = recs.iter().filter(|r| r.orbit_size == 7).flat_map(|r| r.members.clone()).collect();
        assert_eq!(s4, vec!["beta0100", "beta1100"]);
        let c4: Vec<&OrbitRecord> = recs.iter().filter(|r| r.label.to_string() == "C4").collect();
        assert!(c4.iter().all(|r| r.image_status.to_string() == "1/4(1,2,3)"));
        let d8: Vec<&OrbitRecord> = recs.iter().filter(|r| r.label.to_string() == "D″8").collect();
        assert!(d8.iter().all(|r| r.reflection_count == 2 && !r.reflection_generated));
        assert!(d8.iter().all(|r| r.local_type.to_string() == "1/2(0,1,1)"));
    }

    #[test]
    fn omega_locus() {
        let g = Group::get();
        let recs = classify_locus(g, Locus::Omega, Ambient::G).unwrap();
        let names: Vec<(usize, String, Vec<String>)> =
            recs.iter().map(|r| (r.orbit_size, r.label.to_string(), r.members.clone())).collect();
        assert_eq!(
            names,
            vec![
                (7, "±S4".into(), vec!["omega10".into()]),
                (7, "±S4".into(), vec!["omega11".into()]),
                (28, "±S3".into(), vec!["omega01".into()]),
            ]
        );
    }

    #[test]
    fn doubling() {
        let d = doubling_check(Group::get()).unwrap();
        assert!(d.holds(), "{d:?}");
    }
}
