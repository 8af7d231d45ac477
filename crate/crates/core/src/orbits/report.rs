use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{classify_points, local_type, orbit, singularity_weights, Curve, ImageStatus, OrbitRecord};
use crate::error::{Error, Result};
use crate::group::{recognize, Ambient, ElemId, Group, SubgroupLabel};
use crate::torus::registry::{name_of, PointName};
use crate::torus::{enumerate_fixed_points, TorusPoint};

/// A component of the fixed locus of a parabolic element of `H`, up to the
/// action of the quotient group.
#[derive(Clone, Debug, Serialize)]
pub struct CurveRecord {
    pub element: String,
    pub translate: TorusPoint,
    pub translate_name: Option<String>,
    pub direction: Vec<Vec<i128>>,
    pub generic_order: usize,
    pub generic_label: SubgroupLabel,
    pub generic_h_label: SubgroupLabel,
    pub reflection_generated: bool,
    pub generic_weights: ImageStatus,
    pub generic_type: ImageStatus,
    pub setwise_label: SubgroupLabel,
    /// Orbits of points whose stabilizer is larger than the generic one;
    /// `locus_points` counts the special points of this component in each.
    pub dissident: Vec<OrbitRecord>,
    #[serde(skip)]
    pub curve: Curve,
}

impl CurveRecord {
    pub fn is_singular(&self) -> bool {
        !self.generic_type.is_smooth()
    }

    /// Dissident orbits where the analytic type differs from the generic one.
    pub fn type_changes(&self) -> Vec<&OrbitRecord> {
        self.dissident.iter().filter(|r| r.local_type != self.generic_type).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularityReport {
    pub quotient: Ambient,
    pub seed: u64,
    /// Singular orbits not on any singular curve.
    pub isolated: Vec<OrbitRecord>,
    /// Singular curves.
    pub curves: Vec<CurveRecord>,
    /// Special curves whose generic points have smooth image.
    pub smooth_curves: Vec<CurveRecord>,
    /// Singular special orbits lying on a singular curve.
    pub on_curves: Vec<OrbitRecord>,
    pub special_orbits: usize,
    pub smooth_special_orbits: usize,
    pub notes: Vec<String>,
}

fn element_name(group: &Group, id: ElemId) -> String {
    group
        .named_elements()
        .iter()
        .find(|(_, &v)| v == id)
        .map(|(k, _)| k.to_string())
        .unwrap_or_else(|| group.element(id).word_string())
}

/// Named parabolic elements of `H`, one per conjugacy class of cyclic
/// subgroups; checked to cover every parabolic element.
const CURVE_ELEMENTS: [&str; 3] = ["rho2", "c3", "h4"];

fn parabolic_representatives(group: &Group) -> Result<Vec<ElemId>> {
    let reps: Vec<ElemId> = CURVE_ELEMENTS.iter().map(|n| group.named(n)).collect::<Result<_>>()?;
    let mut covered: BTreeSet<ElemId> = BTreeSet::new();
    for &x in &reps {
        let order = group.order(x);
        for k in (1..order).filter(|&k| num_integer::gcd(k, order) == 1) {
            for g in group.set(Ambient::H).iter() {
                covered.insert(group.conjugate(g, group.pow(x, k)));
            }
        }
    }
    let missing =
        group.set(Ambient::H).iter().find(|&x| x != group.identity() && !group.is_elliptic(x) && !covered.contains(&x));
    match missing {
        Some(x) => Err(Error::Consistency(format!("parabolic element {x} is not covered"))),
        None => Ok(reps),
    }
}

fn curve_record(group: &Group, curve: Curve, quotient: Ambient, rng: &mut ChaCha8Rng) -> Result<CurveRecord> {
    let generic = curve.generic_stabilizer(group, quotient, rng);
    if generic != curve.pointwise_stabilizer(group, quotient) {
        return Err(Error::Consistency(format!("sampled generic stabilizer of {curve:?} is not the pointwise one")));
    }
    let special = curve.special_points(group, quotient, &generic)?;
    let mut dissident = classify_points(group, &special, quotient)?;
    for r in &mut dissident {
        let orb = orbit(group, &r.representative, quotient);
        r.locus_points = special.iter().filter(|p| orb.contains(p)).count();
    }
    let generic_label = recognize(group, &generic)?;
    Ok(CurveRecord {
        element: element_name(group, curve.element),
        translate: curve.translate.clone(),
        translate_name: name_of(&curve.translate).map(|n| n.to_string()),
        direction: curve.direction.clone(),
        generic_order: generic.len(),
        generic_label,
        generic_h_label: recognize(group, &generic.intersection(group.set(Ambient::H)))?,
        reflection_generated: super::reflection_generated(group, &generic),
        generic_weights: singularity_weights(group, &generic)?,
        generic_type: local_type(group, &generic)?,
        setwise_label: recognize(group, &curve.setwise_stabilizer(group, quotient))?,
        dissident,
        curve,
    })
}

/// Special curves up to the action of `quotient`.
pub fn special_curves(group: &Group, quotient: Ambient, seed: u64) -> Result<Vec<CurveRecord>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reps: Vec<Curve> = Vec::new();
    for g in parabolic_representatives(group)? {
        for c in Curve::components(group, g)? {
            let known = reps.iter().any(|r| group.set(quotient).iter().any(|a| c.maps_onto(group, a, r)));
            if !known {
                reps.push(c);
            }
        }
    }
    reps.into_iter().map(|c| curve_record(group, c, quotient, &mut rng)).collect()
}

fn meets(group: &Group, u: &TorusPoint, curve: &Curve, quotient: Ambient) -> bool {
    orbit(group, u, quotient).iter().any(|p| curve.contains(p))
}

pub fn singularity_report(group: &Group, quotient: Ambient, seed: u64) -> Result<SingularityReport> {
    let all_curves = special_curves(group, quotient, seed)?;
    let (curves, smooth_curves): (Vec<CurveRecord>, Vec<CurveRecord>) =
        all_curves.into_iter().partition(|c| c.is_singular());

    // every point with a stabilizer larger than that of a generic point of
    // a special curve is fixed by an elliptic element or is dissident on
    // some special curve
    let mut candidates: BTreeSet<TorusPoint> = BTreeSet::new();
    candidates.insert(TorusPoint::zero());
    for g in group.set(quotient).iter() {
        if g != group.identity() && group.is_elliptic(g) {
            candidates.extend(enumerate_fixed_points(group, g)?);
        }
    }
    for c in curves.iter().chain(&smooth_curves) {
        for r in &c.dissident {
            candidates.insert(r.representative.clone());
        }
    }
    let candidates: Vec<TorusPoint> = candidates.into_iter().collect();
    let orbits = classify_points(group, &candidates, quotient)?;

    let mut isolated = Vec::new();
    let mut on_curves = Vec::new();
    let mut smooth = 0;
    for r in &orbits {
        if r.is_smooth() {
            smooth += 1;
            continue;
        }
        if quotient == Ambient::G && r.local_type == ImageStatus::NonCyclic {
            return Err(Error::Consistency(format!(
                "{}: stabilizer {} has a non-cyclic quotient by its reflections",
                r.representative, r.label
            )));
        }
        let host = curves.iter().find(|c| meets(group, &r.representative, &c.curve, quotient));
        match host {
            Some(c) => {
                if !c.dissident.iter().any(|d| orbit(group, &d.representative, quotient).contains(&r.representative)) {
                    return Err(Error::Consistency(format!(
                        "{} lies on a singular curve but is not among its dissident points",
                        r.representative
                    )));
                }
                on_curves.push(r.clone());
            }
            None => isolated.push(r.clone()),
        }
    }

    let mut notes = vec![
        "weights are in canonical form: 1/2(0,1,1) is also written 1/2(1,1,0) or 1/2(1,0,1), the germ C x A1"
            .to_string(),
        "local types of non-cyclic stabilizers are computed on the quotient by the reflection subgroup".to_string(),
        "the isomorphism l = P^1 and strong simple connectedness of J/G are claims, not computed here".to_string(),
    ];
    for r in &on_curves {
        if r.image_status == ImageStatus::NonCyclic {
            notes.push(format!(
                "{} ({}) has non-cyclic stabilizer {} with {} reflections; local type {}",
                r.name.clone().unwrap_or_else(|| r.representative.to_string()),
                r.orbit_size,
                r.label,
                r.reflection_count,
                r.local_type
            ));
        }
    }
    Ok(SingularityReport {
        quotient,
        seed,
        isolated,
        curves,
        smooth_curves,
        on_curves,
        special_orbits: orbits.len(),
        smooth_special_orbits: smooth,
        notes,
    })
}

/// Membership of `beta0011` in the axis of the antireflection `(h4p)^2`.
#[derive(Clone, Debug, Serialize)]
pub struct DissidentCheck {
    pub point: TorusPoint,
    pub antireflection: String,
    pub is_antireflection: bool,
    pub fixed: bool,
    /// Translate of the axis component through the point.
    pub component: Option<TorusPoint>,
    pub component_generic_label: Option<SubgroupLabel>,
    /// The component is a `G`-translate of `kappa3 + V_1(rho2)`.
    pub kappa3_type: bool,
    pub stabilizer_label: SubgroupLabel,
    pub weights: ImageStatus,
}

impl DissidentCheck {
    pub fn holds(&self) -> bool {
        self.is_antireflection
            && self.fixed
            && self.kappa3_type
            && self.component_generic_label.is_some_and(|l| l.to_string() == "C2-antirefl")
            && self.weights.to_string() == "1/4(1,2,3)"
    }
}

pub fn dissident_on_curve_check(group: &Group) -> Result<DissidentCheck> {
    let h4p = group.named("h4p")?;
    let sigma = group.mul(h4p, h4p);
    let q = PointName::Beta(0b0011).point();
    let fixed = q.apply(&group.element(sigma).int6) == q;
    let component = Curve::components(group, sigma)?.into_iter().find(|c| c.contains(&q));
    let rho2 = group.named("rho2")?;
    let kappa3 = PointName::Kappa(3).point();
    let ell = Curve::components(group, rho2)?
        .into_iter()
        .find(|c| c.contains(&kappa3))
        .ok_or_else(|| Error::Consistency("kappa3 is not on a component of Fix(rho2)".into()))?;
    let kappa3_type =
        component.as_ref().is_some_and(|c| group.set(Ambient::G).iter().any(|a| c.maps_onto(group, a, &ell)));
    let component_generic_label = match &component {
        Some(c) => Some(recognize(group, &c.pointwise_stabilizer(group, Ambient::G))?),
        None => None,
    };
    let s = super::stabilizer(group, &q, Ambient::G);
    Ok(DissidentCheck {
        point: q,
        antireflection: "h4p^2".into(),
        is_antireflection: group.is_antireflection(sigma),
        fixed,
        component: component.map(|c| c.translate),
        component_generic_label,
        kappa3_type,
        stabilizer_label: recognize(group, &s)?,
        weights: singularity_weights(group, &s)?,
    })
}
