//! Named torsion points.
//!
//! * `xi{k}`, `k < 64`: half-periods, bit `i` of `k` adding `eps_(i+1) / 2`.
//! * `beta{abcd}`: fixed points of `h4p`,
//!   `a (1,0,0) + b (w,0,0) + c (w/2,w/2,-w/2) + d (w'/2,1,0)`.
//! * `omega{ij}`: fixed points of `c`, `i (1,1,1) + (j/2)(w',w',w')`.
//! * `eta{i}`, `i < 7`: fixed points of `g7`, `i (-1,-1,1,1,1,-1) / 7` in eps-coordinates.
//! * `theta{ij}`, `i, j < 3`: `(i/3)(-w,-w,2w) + (j/3)(-2,-2,4)`.
//! * `kappa{i}`, `i < 4`: translates of the axis of `rho2`, `kappa1 = (1,0,0)`,
//!   `kappa2 = (w/2,w/2,0)`, `kappa3 = kappa1 + kappa2`.

use std::fmt;
use std::str::FromStr;

use super::TorusPoint;
use crate::error::{Error, Result};
use crate::qnum::{rat, CVec3, QNum, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointName {
    Xi(u8),
    /// Bits `iota0 iota1 iota2 iota3`, most significant first.
    Beta(u8),
    Omega(u8, u8),
    Eta(u8),
    Theta(u8, u8),
    Kappa(u8),
}

impl PointName {
    pub fn point(self) -> TorusPoint {
        let v = match self {
            PointName::Xi(k) => {
                let c: Vec<Rational> = (0..6).map(|i| if k >> i & 1 == 1 { rat(1, 2) } else { rat(0, 1) }).collect();
                return TorusPoint::from_rationals(&c).expect("half-period");
            }
            PointName::Eta(i) => {
                let i = i as i64;
                let c: Vec<Rational> = [-1, -1, 1, 1, 1, -1].iter().map(|s| rat(s * i, 7)).collect();
                return TorusPoint::from_rationals(&c).expect("7-torsion");
            }
            PointName::Beta(b) => {
                let a = QNum::alpha();
                let ha = a.scale(&rat(1, 2));
                let hab = QNum::alpha_bar().scale(&rat(1, 2));
                let gens = [
                    CVec3::from_ints([1, 0, 0]),
                    CVec3::new(a.clone(), QNum::from(0), QNum::from(0)),
                    CVec3::new(ha.clone(), ha.clone(), -&ha),
                    CVec3::new(hab, QNum::from(1), QNum::from(0)),
                ];
                (0..4).filter(|k| b >> (3 - k) & 1 == 1).fold(CVec3::zero(), |acc, k| acc.add(&gens[k]))
            }
            PointName::Omega(i, j) => {
                let hab = QNum::alpha_bar().scale(&rat(j as i64, 2));
                CVec3::from_ints([i as i64; 3]).add(&CVec3::new(hab.clone(), hab.clone(), hab))
            }
            PointName::Theta(i, j) => {
                let a = QNum::alpha().scale(&rat(i as i64, 3));
                let first = CVec3::new(-&a, -&a, &a + &a);
                let second = CVec3::from_ints([-2, -2, 4]).scale(&QNum::from_rational(rat(j as i64, 3)));
                first.add(&second)
            }
            PointName::Kappa(i) => {
                let ha = QNum::alpha().scale(&rat(1, 2));
                let k1 = CVec3::from_ints([1, 0, 0]);
                let k2 = CVec3::new(ha.clone(), ha, QNum::from(0));
                match i {
                    0 => CVec3::zero(),
                    1 => k1,
                    2 => k2,
                    _ => k1.add(&k2),
                }
            }
        };
        TorusPoint::from_cvec(&v).expect("torsion point")
    }

    /// Sort key choosing among several names of one point: omega, beta,
    /// eta, kappa, theta, then xi.
    pub fn preference(self) -> (u8, PointName) {
        let rank = match self {
            PointName::Omega(..) => 0,
            PointName::Beta(_) => 1,
            PointName::Eta(_) => 2,
            PointName::Kappa(_) => 3,
            PointName::Theta(..) => 4,
            PointName::Xi(_) => 5,
        };
        (rank, self)
    }

    /// Every registry name.
    pub fn all() -> Vec<PointName> {
        let mut out: Vec<PointName> = (0..64).map(PointName::Xi).collect();
        out.extend((0..16).map(PointName::Beta));
        for i in 0..2 {
            for j in 0..2 {
                out.push(PointName::Omega(i, j));
            }
        }
        out.extend((0..7).map(PointName::Eta));
        for i in 0..3 {
            for j in 0..3 {
                out.push(PointName::Theta(i, j));
            }
        }
        out.extend((0..4).map(PointName::Kappa));
        out
    }
}

impl fmt::Display for PointName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PointName::Xi(k) => write!(f, "xi{k}"),
            PointName::Beta(b) => write!(f, "beta{b:04b}"),
            PointName::Omega(i, j) => write!(f, "omega{i}{j}"),
            PointName::Eta(i) => write!(f, "eta{i}"),
            PointName::Theta(i, j) => write!(f, "theta{i}{j}"),
            PointName::Kappa(i) => write!(f, "kappa{i}"),
        }
    }
}

impl FromStr for PointName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownName(s.to_string());
        let digits = |t: &str, radix: u32, len: Option<usize>, max: u8| -> Result<u8> {
            if t.is_empty() || len.is_some_and(|l| t.len() != l) || !t.chars().all(|c| c.is_digit(radix)) {
                return Err(unknown());
            }
            let v = u8::from_str_radix(t, radix).map_err(|_| unknown())?;
            if v > max {
                return Err(unknown());
            }
            Ok(v)
        };
        let pair = |t: &str, max: u8| -> Result<(u8, u8)> {
            let v: Vec<u8> =
                t.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect::<Option<_>>().ok_or_else(unknown)?;
            match v[..] {
                [i, j] if i <= max && j <= max => Ok((i, j)),
                _ => Err(unknown()),
            }
        };
        if let Some(t) = s.strip_prefix("xi") {
            Ok(PointName::Xi(digits(t, 10, None, 63)?))
        } else if let Some(t) = s.strip_prefix("beta") {
            Ok(PointName::Beta(digits(t, 2, Some(4), 15)?))
        } else if let Some(t) = s.strip_prefix("omega") {
            let (i, j) = pair(t, 1)?;
            Ok(PointName::Omega(i, j))
        } else if let Some(t) = s.strip_prefix("eta") {
            Ok(PointName::Eta(digits(t, 10, Some(1), 6)?))
        } else if let Some(t) = s.strip_prefix("theta") {
            let (i, j) = pair(t, 2)?;
            Ok(PointName::Theta(i, j))
        } else if let Some(t) = s.strip_prefix("kappa") {
            Ok(PointName::Kappa(digits(t, 10, Some(1), 3)?))
        } else {
            Err(unknown())
        }
    }
}

/// The preferred registry name of `u`, if it has one.
pub fn name_of(u: &TorusPoint) -> Option<PointName> {
    PointName::all().into_iter().filter(|n| n.point() == *u).min_by_key(|n| n.preference())
}

/// A registry name or a literal `[n1/d1,...]` point.
pub fn resolve(s: &str) -> Result<TorusPoint> {
    if s.trim_start().starts_with('[') {
        s.parse()
    } else {
        Ok(s.trim().parse::<PointName>()?.point())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::torus::enumerate_fixed_points;
    use std::collections::BTreeSet;

    fn set(names: impl Iterator<Item = PointName>) -> BTreeSet<TorusPoint> {
        names.map(PointName::point).collect()
    }

    #[test]
    fn names_round_trip() {
        for n in PointName::all() {
            assert_eq!(n.to_string().parse::<PointName>().unwrap(), n);
        }
        for bad in ["xi64", "beta2", "beta012", "omega20", "eta7", "kappa4", "theta3", "zeta1", "xi"] {
            assert!(bad.parse::<PointName>().is_err(), "{bad}");
        }
        assert_eq!(resolve("omega00").unwrap(), TorusPoint::zero());
        assert_eq!(resolve("[1/2,0,0,0,0,0]").unwrap(), PointName::Xi(1).point());
        assert_eq!(name_of(&TorusPoint::zero()), Some(PointName::Omega(0, 0)));
        assert_eq!(name_of(&PointName::Xi(1).point()), Some(PointName::Xi(1)));
        assert_eq!(name_of(&PointName::Eta(1).point().scale(2)), Some(PointName::Eta(2)));
    }

    #[test]
    fn registry_matches_fixed_point_sets() {
        let g = Group::get();
        let fixed = |n: &str| -> BTreeSet<TorusPoint> {
            let id = g.named(n).unwrap();
            enumerate_fixed_points(g, id).unwrap().into_iter().collect()
        };
        assert_eq!(fixed("m1"), set((0..64).map(PointName::Xi)));
        assert_eq!(fixed("h4p"), set((0..16).map(PointName::Beta)));
        assert_eq!(fixed("c"), set([(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().map(|(i, j)| PointName::Omega(i, j))));
        assert_eq!(fixed("g7"), set((0..7).map(PointName::Eta)));
        assert_eq!(set((0..16).map(PointName::Beta)).len(), 16);
    }

    #[test]
    fn relations_between_named_points() {
        let k = |i| PointName::Kappa(i).point();
        assert_eq!(k(3), k(1).add(&k(2)));
        assert_eq!(k(0), TorusPoint::zero());
        for i in 1..4 {
            assert_eq!(k(i).order(), 2);
        }
        let halves = set((0..64).map(PointName::Xi));
        for (i, j) in [(0, 1), (1, 0), (1, 1)] {
            assert!(halves.contains(&PointName::Omega(i, j).point()));
        }
        assert!(PointName::Omega(0, 0).point().is_zero());
        let eta1 = PointName::Eta(1).point();
        for i in 0..7 {
            assert_eq!(PointName::Eta(i).point(), eta1.scale(i as i64));
        }
    }

    #[test]
    fn theta_points_are_fixed_by_c3_on_the_anti_invariant_part() {
        let g = Group::get();
        let c3 = &g.element(g.named("c3").unwrap()).int6;
        for i in 0..3 {
            for j in 0..3 {
                let t = PointName::Theta(i, j).point();
                assert_eq!(t.apply(c3), t);
            }
        }
    }
}
