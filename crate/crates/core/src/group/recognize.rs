//! Naming subgroups of `G` up to the distinctions the orbit tables need.
//!
//! Every subgroup `S` of `G = {±1} x H` is one of
//! * a subgroup of `H`;
//! * `±K = {±1} x K` for `K = S ∩ H`;
//! * a twist `{χ(k) k : k ∈ P}` of a subgroup `P` of `H` by a character
//!   `χ: P -> {±1}` with kernel `K = S ∩ H` of index 2.
//!
//! The label is read off from the `H`-type of `K` (and of the projection `P`
//! for twists). Twists are primed: `S′3`, `D′8` (kernel `C4`, four
//! reflections), `D″8` (kernel `2²`, two reflections), `S′4`, `C2×C2′` (two
//! commuting reflections), `C2-refl`, and `C4` generated by an element of
//! determinant -1.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{ElemSet, Group};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HType {
    Trivial,
    C2,
    C3,
    C4,
    V4,
    S3,
    C7,
    D8,
    A4,
    F21,
    S4,
    H168,
}

impl HType {
    fn name(self) -> &'static str {
        match self {
            HType::Trivial => "1",
            HType::C2 => "C2",
            HType::C3 => "C3",
            HType::C4 => "C4",
            HType::V4 => "2²",
            HType::S3 => "S3",
            HType::C7 => "C7",
            HType::D8 => "D8",
            HType::A4 => "A4",
            HType::F21 => "7:3",
            HType::S4 => "S4",
            HType::H168 => "H168",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubgroupLabel {
    /// A subgroup of `H`.
    InH(HType),
    /// `{±1} x K`.
    Pm(HType),
    /// Twist of `projection` with kernel `kernel`.
    Twisted { projection: HType, kernel: HType },
}

impl SubgroupLabel {
    pub fn contains_minus_one(self) -> bool {
        matches!(self, SubgroupLabel::Pm(_))
    }
}

impl fmt::Display for SubgroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use HType::*;
        let s: String = match *self {
            SubgroupLabel::InH(C2) => "C2-antirefl".into(),
            SubgroupLabel::InH(t) => t.name().into(),
            SubgroupLabel::Pm(Trivial) => "±1".into(),
            SubgroupLabel::Pm(C3) => "C6".into(),
            SubgroupLabel::Pm(C7) => "C14".into(),
            SubgroupLabel::Pm(H168) => "G336".into(),
            SubgroupLabel::Pm(t) => format!("±{}", t.name()),
            SubgroupLabel::Twisted { projection, kernel } => match (projection, kernel) {
                (C2, _) => "C2-refl".into(),
                (C4, _) => "C4".into(),
                (V4, _) => "C2×C2′".into(),
                (S3, _) => "S′3".into(),
                (D8, C4) => "D′8".into(),
                (D8, _) => "D″8".into(),
                (S4, _) => "S′4".into(),
                (p, k) => format!("{}~{}", p.name(), k.name()),
            },
        };
        f.write_str(&s)
    }
}

impl Serialize for SubgroupLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Invariants a label is computed from; printed when recognition fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub order: usize,
    pub element_orders: BTreeMap<u32, usize>,
    pub contains_minus_one: bool,
    pub reflection_count: usize,
    pub abelian: bool,
    pub dets: Vec<i32>,
}

impl Signature {
    pub fn of(group: &Group, s: &ElemSet) -> Signature {
        let mut element_orders = BTreeMap::new();
        for x in s.iter() {
            *element_orders.entry(group.order(x)).or_insert(0) += 1;
        }
        let mut dets: Vec<i32> = s.iter().map(|x| group.det_sign(x)).collect();
        dets.sort();
        dets.dedup();
        Signature {
            order: s.len(),
            element_orders,
            contains_minus_one: s.contains(group.minus_one()),
            reflection_count: s.iter().filter(|&x| group.is_reflection(x)).count(),
            abelian: s.iter().all(|a| s.iter().all(|b| group.mul(a, b) == group.mul(b, a))),
            dets,
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "order={} orders={:?} minus_one={} reflections={} abelian={} dets={:?}",
            self.order, self.element_orders, self.contains_minus_one, self.reflection_count, self.abelian, self.dets
        )
    }
}

/// Type of a subgroup of `H` from its order and element orders.
fn h_type(group: &Group, k: &ElemSet) -> Option<HType> {
    let has_order = |o: u32| k.iter().any(|x| group.order(x) == o);
    Some(match k.len() {
        1 => HType::Trivial,
        2 => HType::C2,
        3 => HType::C3,
        4 if has_order(4) => HType::C4,
        4 => HType::V4,
        6 => HType::S3,
        7 => HType::C7,
        8 => HType::D8,
        12 => HType::A4,
        21 => HType::F21,
        24 => HType::S4,
        168 => HType::H168,
        _ => return None,
    })
}

pub fn recognize(group: &Group, s: &ElemSet) -> Result<SubgroupLabel> {
    let unrecognized = || Error::UnrecognizedSubgroup(Signature::of(group, s).to_string());
    if !group.is_subgroup(s) {
        return Err(unrecognized());
    }
    let h = group.set(super::Ambient::H);
    let kernel = s.intersection(h);
    let kt = h_type(group, &kernel).ok_or_else(unrecognized)?;
    if kernel.len() == s.len() {
        return Ok(SubgroupLabel::InH(kt));
    }
    if s.contains(group.minus_one()) {
        return Ok(SubgroupLabel::Pm(kt));
    }
    let m1 = group.minus_one();
    let projection: ElemSet = s.iter().map(|x| if group.det_sign(x) == 1 { x } else { group.mul(m1, x) }).collect();
    let pt = h_type(group, &projection).ok_or_else(unrecognized)?;
    Ok(SubgroupLabel::Twisted { projection: pt, kernel: kt })
}
