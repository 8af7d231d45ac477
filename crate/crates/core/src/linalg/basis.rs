//! The Z-basis `(w e1, w e2, w e3, w' e1, w' e2, w' e3)` of the lattice, with
//! `e1 = (0, w, w)`, `e2 = (0, 0, 2)`, `e3 = (1, 1, w')` and `w' = conj(w)`.
//!
//! Real coordinates of `C^3` are the `Q`-coefficients `(x1, y1, x2, y2, x3, y3)`
//! of `v = x + y w` entrywise, so the change of basis is a rational 6x6 matrix.

use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::intmat::IntMat;
use crate::linalg::mat3::Mat3;
use crate::linalg::ratmat::RatMat;
use crate::qnum::{CVec3, QNum, Rational};

pub struct BasisMap {
    /// Columns are `eps_1..eps_6` in chart coordinates.
    pub forward: RatMat,
    pub inverse: RatMat,
    eps: [CVec3; 6],
}

/// The three basic roots `e1, e2, e3`.
pub fn basic_roots() -> [CVec3; 3] {
    let a = QNum::alpha();
    [
        CVec3::new(QNum::zero(), a.clone(), a),
        CVec3::from_ints([0, 0, 2]),
        CVec3::new(QNum::from(1), QNum::from(1), QNum::alpha_bar()),
    ]
}

impl BasisMap {
    pub fn standard() -> &'static BasisMap {
        static MAP: OnceLock<BasisMap> = OnceLock::new();
        MAP.get_or_init(|| {
            let e = basic_roots();
            let a = QNum::alpha();
            let ab = QNum::alpha_bar();
            let eps =
                [e[0].scale(&a), e[1].scale(&a), e[2].scale(&a), e[0].scale(&ab), e[1].scale(&ab), e[2].scale(&ab)];
            let cols: Vec<Vec<Rational>> = eps.iter().map(|v| v.to_chart().to_vec()).collect();
            let forward = RatMat::from_columns(&cols);
            let inverse = forward.inverse().expect("eps vectors form a Q-basis");
            BasisMap { forward, inverse, eps }
        })
    }

    pub fn eps(&self, i: usize) -> &CVec3 {
        &self.eps[i]
    }
}

pub fn to_eps_coords(v: &CVec3) -> [Rational; 6] {
    let c = BasisMap::standard().inverse.apply(&v.to_chart());
    c.try_into().expect("six coordinates")
}

pub fn from_eps_coords(c: &[Rational; 6]) -> CVec3 {
    let chart = BasisMap::standard().forward.apply(c);
    CVec3::from_chart(&chart.try_into().expect("six coordinates"))
}

/// Matrix of `m` on the lattice in the eps-basis. Fails unless every entry is
/// an integer, i.e. unless `m` maps the lattice into itself.
pub fn mat3_to_int6(m: &Mat3) -> Result<IntMat> {
    let basis = BasisMap::standard();
    let mut out = IntMat::zeros(6, 6);
    for j in 0..6 {
        let image = m.apply(basis.eps(j));
        let coords = to_eps_coords(&image);
        for (i, c) in coords.iter().enumerate() {
            if !c.is_integer() {
                return Err(Error::NonIntegral { row: i, col: j, value: c.to_string() });
            }
            out[(i, j)] = i128::try_from(c.to_integer()).map_err(|_| Error::NonIntegral {
                row: i,
                col: j,
                value: c.to_string(),
            })?;
        }
    }
    Ok(out)
}

/// Lattice membership through integrality of eps-coordinates.
pub fn lattice_contains(v: &CVec3) -> bool {
    to_eps_coords(v).iter().all(|c| c.is_integer())
}

/// Lattice membership through the defining congruences: entries in `Z[w]`,
/// pairwise congruent mod `w`, and summing to `0 mod w'`.
pub fn lattice_contains_by_congruence(v: &CVec3) -> bool {
    let divisible = |a: &QNum, d: &QNum| (a / d).is_integral();
    if !v.0.iter().all(QNum::is_integral) {
        return false;
    }
    let a = QNum::alpha();
    let pairs = [(0, 1), (1, 2), (0, 2)];
    if !pairs.iter().all(|&(i, j)| divisible(&(&v.0[i] - &v.0[j]), &a)) {
        return false;
    }
    let sum = &(&v.0[0] + &v.0[1]) + &v.0[2];
    sum.is_zero() || divisible(&sum, &QNum::alpha_bar())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::{rat, rat_int};
    use proptest::prelude::*;

    #[test]
    fn basis_vectors_have_unit_coordinates() {
        let b = BasisMap::standard();
        assert_eq!(b.forward.mul(&b.inverse), RatMat::identity(6));
        let c = to_eps_coords(b.eps(2));
        let expected: Vec<Rational> = (0..6).map(|i| rat_int(i64::from(i == 2))).collect();
        assert_eq!(c.to_vec(), expected);
    }

    #[test]
    fn e1_round_trips() {
        let e1 = basic_roots()[0].clone();
        let c = to_eps_coords(&e1);
        assert_eq!(from_eps_coords(&c), e1);
        // e1 = (w + w') e1 = eps1 + eps4
        assert_eq!(c.to_vec(), vec![rat_int(1), rat_int(0), rat_int(0), rat_int(1), rat_int(0), rat_int(0)]);
    }

    #[test]
    fn eta_one_in_complex_coordinates() {
        let s = QNum::i_sqrt7();
        let v = CVec3::new(s.scale(&rat(1, 7)), &QNum::from(7) + &s, &QNum::from(1) - &s.scale(&rat(2, 7)));
        let v = CVec3::new(v.0[0].clone(), v.0[1].scale(&rat(1, 14)), v.0[2].clone());
        let c = to_eps_coords(&v);
        let expected: Vec<Rational> = [-1, -1, 1, 1, 1, -1].iter().map(|&k| rat(k, 7)).collect();
        assert_eq!(c.to_vec(), expected);
    }

    #[test]
    fn identity_and_minus_identity() {
        assert_eq!(mat3_to_int6(&Mat3::identity()).unwrap(), IntMat::identity(6));
        let m = mat3_to_int6(&Mat3::identity().neg()).unwrap();
        assert_eq!(m, IntMat::zeros(6, 6).sub(&IntMat::identity(6)));
    }

    #[test]
    fn non_lattice_matrix_is_rejected() {
        let half = Mat3::scalar(QNum::from_fracs(1, 2, 0, 1));
        assert!(matches!(mat3_to_int6(&half), Err(Error::NonIntegral { .. })));
    }

    #[test]
    fn membership_examples() {
        for v in [
            CVec3::new(QNum::from(1), QNum::from(1), QNum::alpha_bar()),
            CVec3::from_ints([2, 2, 2]),
            CVec3::from_ints([2, 0, 0]),
        ] {
            assert!(lattice_contains(&v), "{v}");
            assert!(lattice_contains_by_congruence(&v), "{v}");
        }
        for v in [CVec3::from_ints([1, 0, 0]), CVec3::from_ints([1, 1, 1])] {
            assert!(!lattice_contains(&v), "{v}");
            assert!(!lattice_contains_by_congruence(&v), "{v}");
        }
    }

    proptest! {
        #[test]
        fn eps_coordinates_round_trip(c in prop::collection::vec((-20i64..20, 1i64..9), 6)) {
            let c: [Rational; 6] = c.iter().map(|&(p, q)| rat(p, q)).collect::<Vec<_>>().try_into().unwrap();
            prop_assert_eq!(to_eps_coords(&from_eps_coords(&c)), c);
        }

        #[test]
        fn membership_routes_agree(v in prop::collection::vec(-6i64..6, 6), den in 1i64..3) {
            let q = |i: usize| QNum::from_fracs(v[2 * i], den, v[2 * i + 1], den);
            let x = CVec3::new(q(0), q(1), q(2));
            prop_assert_eq!(lattice_contains(&x), lattice_contains_by_congruence(&x));
        }
    }
}
