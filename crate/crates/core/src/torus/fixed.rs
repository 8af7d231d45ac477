//! Fixed loci of single group elements on the torus.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::TorusPoint;
use crate::error::{Error, Result};
use crate::group::{ElemId, Group};
use crate::linalg::{
    from_eps_coords, integer_kernel, kernel_k, saturate, smith_normal_form, to_eps_coords, IntMat, Lattice, Mat3,
    RatMat,
};
use crate::qnum::{hermitian, CVec3, QNum, Rational};

/// `det(gamma - id)` on `C^3`.
pub fn det_minus_identity(group: &Group, id: ElemId) -> QNum {
    group.element(id).mat.sub(&Mat3::identity()).det()
}

fn int6_minus_identity(group: &Group, id: ElemId) -> IntMat {
    group.element(id).int6.sub(&IntMat::identity(6))
}

/// Number of fixed points of an elliptic element: `|det(int6 - id)|`.
pub fn fixed_point_count(group: &Group, id: ElemId) -> Result<u64> {
    let d = int6_minus_identity(group, id).det();
    if d == 0 {
        return Err(Error::ParabolicElement(id));
    }
    Ok(d.unsigned_abs() as u64)
}

/// All `x` in `Q^m / Z^m` with `a x` integral, for square nonsingular `a`,
/// as (common denominator, numerator vectors).
fn torsion_solutions(a: &IntMat) -> Vec<(i128, Vec<i128>)> {
    let snf = smith_normal_form(a);
    let diag = snf.diagonal();
    let n = diag.len();
    let den = diag.iter().fold(1i128, |l, d| l.lcm(d));
    let mut out = Vec::new();
    let mut k = vec![0i128; n];
    loop {
        // y_i = k_i / d_i, x = v y
        let y: Vec<i128> = (0..n).map(|i| k[i] * (den / diag[i])).collect();
        out.push((den, snf.v.apply(&y)));
        let mut i = 0;
        while i < n {
            k[i] += 1;
            if k[i] < diag[i] {
                break;
            }
            k[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    out
}

/// Fixed points of an elliptic element, sorted.
pub fn enumerate_fixed_points(group: &Group, id: ElemId) -> Result<Vec<TorusPoint>> {
    let a = int6_minus_identity(group, id);
    if a.det() == 0 {
        return Err(Error::ParabolicElement(id));
    }
    let mut pts: Vec<TorusPoint> =
        torsion_solutions(&a).into_iter().map(|(den, num)| TorusPoint::from_parts(den, &num)).collect::<Result<_>>()?;
    pts.sort();
    Ok(pts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LocusKind {
    Elliptic,
    Parabolic,
}

/// The invariant subspace of a parabolic element.
#[derive(Clone, Debug, Serialize)]
pub struct Axis {
    /// `K`-basis of the eigenspace for eigenvalue 1.
    pub k_basis: Vec<CVec3>,
    /// HNF basis (eps-coordinates) of the lattice points on it.
    pub lattice: Vec<Vec<i128>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixedLocus {
    pub element: ElemId,
    pub kind: LocusKind,
    /// Fixed points (elliptic case).
    pub points: Vec<TorusPoint>,
    /// Mirror or axis (parabolic case).
    pub axis: Option<Axis>,
    /// Complex dimension of the fixed locus.
    pub dimension: usize,
    /// One point on each connected component.
    pub translates: Vec<TorusPoint>,
    pub component_count: usize,
    /// Fixed points of the induced action on the anti-invariant torus.
    pub anti_fixed_points: usize,
    /// How many of those are zero modulo the axis plus the lattice.
    pub anti_fixed_on_axis: usize,
    /// `[Lambda : Lambda_1 + Lambda_a]`.
    pub index: i128,
}

/// Orthogonal decomposition of `C^3` into the fixed space of an element and
/// its complement, with the lattices on both sides.
#[derive(Clone)]
pub struct Splitting {
    pub v1: Vec<CVec3>,
    /// Orthogonal `K`-basis of `v1`.
    orth: Vec<CVec3>,
    pub lambda1: Lattice,
    pub lambda_a: Lattice,
    /// `scale * pi_a(Lambda)` as an integer lattice.
    proj_lattice: Lattice,
    proj_scale: BigInt,
}

impl Splitting {
    pub fn of(group: &Group, id: ElemId) -> Result<Splitting> {
        let el = group.element(id);
        let v1 = kernel_k(&el.mat.sub(&Mat3::identity()));
        if v1.is_empty() {
            return Err(Error::EllipticElement(id));
        }
        if v1.len() == 3 {
            return Err(Error::IdentityElement);
        }
        let a = int6_minus_identity(group, id);
        let lambda1 = Lattice::from_generators(&integer_kernel(&a), 6);
        let image: Vec<Vec<i128>> = (0..6).map(|j| a.column(j)).collect();
        let lambda_a = saturate(&image, 6);

        let mut orth: Vec<CVec3> = Vec::new();
        for v in &v1 {
            let mut f = v.clone();
            for g in &orth {
                let c = &hermitian(g, v) / &hermitian(g, g);
                f = f.sub(&g.scale(&c));
            }
            orth.push(f);
        }
        let mut s = Splitting {
            v1,
            orth,
            lambda1,
            lambda_a,
            proj_lattice: Lattice::from_generators(&[], 6),
            proj_scale: BigInt::from(1),
        };
        let gens: Vec<[Rational; 6]> = (0..6)
            .map(|j| {
                let mut e = [(); 6].map(|_| Rational::zero());
                e[j] = Rational::from_integer(1.into());
                s.project_anti(&e)
            })
            .collect();
        let scale = gens.iter().flatten().fold(BigInt::from(1), |l, x| l.lcm(x.denom()));
        let rows: Vec<Vec<i128>> = gens.iter().map(|g| scaled_integers(g, &scale).expect("cleared")).collect();
        s.proj_lattice = Lattice::from_generators(&rows, 6);
        s.proj_scale = scale;
        Ok(s)
    }

    /// Hermitian-orthogonal projection to the anti-invariant part, in eps-coordinates.
    pub fn project_anti(&self, c: &[Rational; 6]) -> [Rational; 6] {
        let v = from_eps_coords(c);
        let mut p = v.clone();
        for f in &self.orth {
            let t = &hermitian(f, &v) / &hermitian(f, f);
            p = p.sub(&f.scale(&t));
        }
        to_eps_coords(&p)
    }

    /// `u in V_1 + Lambda`, decided as `pi_a(u) in pi_a(Lambda)`.
    pub fn on_axis_mod_lattice(&self, u: &TorusPoint) -> bool {
        let p = self.project_anti(&u.coords());
        match scaled_integers(&p, &self.proj_scale) {
            Some(v) => self.proj_lattice.contains(&v),
            None => false,
        }
    }
}

fn scaled_integers(c: &[Rational], scale: &BigInt) -> Option<Vec<i128>> {
    c.iter()
        .map(|x| {
            let y = x * Rational::from_integer(scale.clone());
            if y.is_integer() {
                y.to_integer().to_i128()
            } else {
                None
            }
        })
        .collect()
}

/// Matrix of the element on `lambda_a` in its HNF basis.
fn restricted_matrix(group: &Group, id: ElemId, lambda_a: &Lattice) -> IntMat {
    let basis = lambda_a.basis();
    let to_rat = |v: &[i128]| v.iter().map(|&x| Rational::from_integer(x.into())).collect::<Vec<_>>();
    let b = RatMat::from_columns(&basis.iter().map(|v| to_rat(v)).collect::<Vec<_>>());
    let int6 = &group.element(id).int6;
    let cols: Vec<Vec<i128>> = basis
        .iter()
        .map(|v| {
            let y = b.solve(&to_rat(&int6.apply(v))).expect("lambda_a is invariant");
            y.iter().map(|x| x.to_integer().to_i128().expect("integral")).collect()
        })
        .collect();
    IntMat::from_columns(&cols, basis.len())
}

pub fn fixed_locus_structure(group: &Group, id: ElemId) -> Result<FixedLocus> {
    if id == group.identity() {
        return Err(Error::IdentityElement);
    }
    if group.is_elliptic(id) {
        let points = enumerate_fixed_points(group, id)?;
        let n = points.len();
        return Ok(FixedLocus {
            element: id,
            kind: LocusKind::Elliptic,
            translates: points.clone(),
            points,
            axis: None,
            dimension: 0,
            component_count: n,
            anti_fixed_points: n,
            anti_fixed_on_axis: 1,
            index: 1,
        });
    }
    let split = Splitting::of(group, id)?;
    let m = restricted_matrix(group, id, &split.lambda_a);
    let basis = split.lambda_a.basis();
    let a = m.sub(&IntMat::identity(m.rows));
    let anti: Vec<TorusPoint> = torsion_solutions(&a)
        .into_iter()
        .map(|(den, y)| {
            let num: Vec<i128> = (0..6).map(|i| (0..y.len()).map(|k| y[k] * basis[k][i]).sum()).collect();
            TorusPoint::from_parts(den, &num)
        })
        .collect::<Result<_>>()?;

    let on_axis = anti.iter().filter(|u| split.on_axis_mod_lattice(u)).count();
    let mut translates: Vec<TorusPoint> = Vec::new();
    let mut sorted = anti.clone();
    sorted.sort();
    for u in sorted {
        if !translates.iter().any(|t| split.on_axis_mod_lattice(&u.sub(t))) {
            translates.push(u);
        }
    }
    if translates.len() * on_axis != anti.len() {
        return Err(Error::Consistency(format!(
            "{} anti-invariant fixed points, {} on the axis, {} classes",
            anti.len(),
            on_axis,
            translates.len()
        )));
    }
    let mut both = split.lambda1.basis();
    both.extend(split.lambda_a.basis());
    let index = Lattice::from_generators(&both, 6)
        .full_rank_index()
        .ok_or_else(|| Error::Consistency("Lambda_1 + Lambda_a has rank < 6".into()))?;
    Ok(FixedLocus {
        element: id,
        kind: LocusKind::Parabolic,
        points: Vec::new(),
        dimension: split.v1.len(),
        axis: Some(Axis { k_basis: split.v1.clone(), lattice: split.lambda1.basis() }),
        component_count: translates.len(),
        translates,
        anti_fixed_points: anti.len(),
        anti_fixed_on_axis: on_axis,
        index,
    })
}

/// The component of the fixed locus of `locus.element` containing `u`, as an
/// index into `locus.translates`; `None` if `u` is not fixed.
pub fn component_of(group: &Group, locus: &FixedLocus, u: &TorusPoint) -> Result<Option<usize>> {
    let g = &group.element(locus.element).int6;
    if u.apply(g) != *u {
        return Ok(None);
    }
    if locus.kind == LocusKind::Elliptic {
        return Ok(locus.points.iter().position(|p| p == u));
    }
    let split = Splitting::of(group, locus.element)?;
    Ok(locus.translates.iter().position(|t| split.on_axis_mod_lattice(&u.sub(t))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::rat;

    fn named(n: &str) -> ElemId {
        Group::get().named(n).unwrap()
    }

    #[test]
    fn determinants_and_counts() {
        let g = Group::get();
        let m1 = g.minus_one();
        let mg7 = g.mul(m1, named("g7"));
        let cases = [
            (m1, QNum::from(-8), 64),
            (named("h4p"), QNum::from(-4), 16),
            (named("c"), QNum::from(-2), 4),
            (named("g7"), QNum::i_sqrt7(), 7),
            (mg7, QNum::from(-1), 1),
        ];
        for (id, det, count) in cases {
            assert_eq!(det_minus_identity(g, id), det);
            assert_eq!(fixed_point_count(g, id).unwrap(), count);
            assert_eq!(enumerate_fixed_points(g, id).unwrap().len() as u64, count);
        }
        assert!(matches!(fixed_point_count(g, named("r1")), Err(Error::ParabolicElement(_))));
    }

    #[test]
    fn norm_of_det3_is_det6() {
        let g = Group::get();
        for el in g.elements() {
            let d3 = det_minus_identity(g, el.id);
            let d6 = int6_minus_identity(g, el.id).det();
            assert_eq!(d3.norm(), rat(d6 as i64, 1));
        }
    }

    #[test]
    fn fixed_points_are_fixed() {
        let g = Group::get();
        for el in g.elements() {
            if !g.is_elliptic(el.id) {
                continue;
            }
            let pts = enumerate_fixed_points(g, el.id).unwrap();
            let mut dedup = pts.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), pts.len());
            for p in &pts {
                assert_eq!(p.apply(&el.int6), *p);
            }
        }
    }

    #[test]
    fn parabolic_components() {
        let g = Group::get();
        let c3 = named("c3");
        for (name, comps, dim, anti, on) in
            [("r2", 1, 2, 4, 4), ("rho2", 4, 1, 16, 4), ("c3", 1, 1, 9, 9), ("h4", 1, 1, 4, 4)]
        {
            let id = if name == "c3" { c3 } else { named(name) };
            let f = fixed_locus_structure(g, id).unwrap();
            assert_eq!(f.kind, LocusKind::Parabolic, "{name}");
            assert_eq!(f.component_count, comps, "{name}");
            assert_eq!(f.dimension, dim, "{name}");
            assert_eq!(f.axis.as_ref().unwrap().lattice.len(), 2 * dim, "{name}");
            assert_eq!((f.anti_fixed_points, f.anti_fixed_on_axis), (anti, on), "{name}");
            assert!(f.index >= 1);
        }
        assert!(matches!(fixed_locus_structure(g, 0), Err(Error::IdentityElement)));
        assert!(matches!(fixed_locus_structure(g, named("g7")).map(|f| f.kind), Ok(LocusKind::Elliptic)));
    }

    #[test]
    fn rho2_translates_are_the_kappa_points() {
        let g = Group::get();
        let id = named("rho2");
        let f = fixed_locus_structure(g, id).unwrap();
        let a = QNum::alpha();
        let half_a = a.scale(&rat(1, 2));
        let reps = [
            CVec3::zero(),
            CVec3::from_ints([1, 0, 0]),
            CVec3::new(half_a.clone(), half_a.clone(), QNum::zero()),
            CVec3::new(&QNum::from(1) + &half_a, half_a, QNum::zero()),
        ];
        let mut hit = Vec::new();
        for r in &reps {
            let u = TorusPoint::from_cvec(r).unwrap();
            hit.push(component_of(g, &f, &u).unwrap().expect("fixed by rho2"));
        }
        hit.sort();
        assert_eq!(hit, vec![0, 1, 2, 3]);
    }

    #[test]
    fn hermitian_projection_matches_direct_sum_projection() {
        let g = Group::get();
        for name in ["r2", "rho2", "c3", "h4", "rho1", "r3"] {
            let id = named(name);
            let s = Splitting::of(g, id).unwrap();
            let cols: Vec<Vec<Rational>> = s
                .lambda1
                .basis()
                .into_iter()
                .chain(s.lambda_a.basis())
                .map(|v| v.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect();
            let k = s.lambda1.rank();
            let b = RatMat::from_columns(&cols);
            for j in 0..6 {
                let mut e = [(); 6].map(|_| Rational::zero());
                e[j] = rat(1, 1);
                let y = b.solve(&e).unwrap();
                let mut direct = [(); 6].map(|_| Rational::zero());
                for (c, col) in cols.iter().enumerate().skip(k) {
                    for i in 0..6 {
                        direct[i] += &y[c] * &col[i];
                    }
                }
                assert_eq!(s.project_anti(&e), direct, "{name} eps{j}");
            }
        }
    }
}
