use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Serialize, Serializer};

use super::reflection_generated;
use crate::error::{Error, Result};
use crate::group::{ElemId, ElemSet, Group};

const SNAP_TOLERANCE: f64 = 1e-6;
const TRACE_TOLERANCE: f64 = 1e-9;

/// A cyclic quotient singularity `1/d(nu1, nu2, nu3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weights {
    pub d: u32,
    pub nu: Vec<u32>,
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nu: Vec<String> = self.nu.iter().map(u32::to_string).collect();
        write!(f, "1/{}({})", self.d, nu.join(","))
    }
}

impl Serialize for Weights {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Image of a point in a quotient, from its stabilizer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ImageStatus {
    Smooth,
    Cyclic(Weights),
    NonCyclic,
}

impl ImageStatus {
    pub fn is_smooth(&self) -> bool {
        matches!(self, ImageStatus::Smooth)
    }

    pub fn weights(&self) -> Option<&Weights> {
        match self {
            ImageStatus::Cyclic(w) => Some(w),
            _ => None,
        }
    }
}

impl fmt::Display for ImageStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImageStatus::Smooth => f.write_str("smooth"),
            ImageStatus::Cyclic(w) => write!(f, "{w}"),
            ImageStatus::NonCyclic => f.write_str("non-cyclic-singular"),
        }
    }
}

impl Serialize for ImageStatus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A generator of `s` if it is cyclic.
pub fn cyclic_generator(group: &Group, s: &ElemSet) -> Option<ElemId> {
    s.iter().find(|&x| group.order(x) as usize == s.len())
}

/// Eigenvalue exponents of `g` with respect to `exp(2 pi i / d)`, `d` the
/// order of `g`, sorted.
pub fn eigen_exponents(group: &Group, g: ElemId) -> Result<Vec<u32>> {
    let d = group.order(g);
    let root = |k: i64| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / d as f64);
    let traces: Vec<Complex64> = (0..d).map(|j| group.element(group.pow(g, j)).mat.trace().embed()).collect();
    let mut nu = Vec::new();
    for k in 0..d {
        let m: Complex64 =
            traces.iter().enumerate().map(|(j, t)| t * root(-(j as i64) * k as i64)).sum::<Complex64>() / d as f64;
        let snapped = m.re.round();
        if (m - Complex64::new(snapped, 0.0)).norm() > SNAP_TOLERANCE || snapped < 0.0 {
            return Err(Error::Snapping(format!("multiplicity of exponent {k} for element {g} is {m}")));
        }
        nu.extend(std::iter::repeat_n(k, snapped as usize));
    }
    if nu.len() != 3 {
        return Err(Error::Snapping(format!("element {g}: {} eigenvalues", nu.len())));
    }
    let sum: Complex64 = nu.iter().map(|&k| root(k as i64)).sum();
    if (sum - traces[1 % traces.len()]).norm() > TRACE_TOLERANCE {
        return Err(Error::Snapping(format!("element {g}: eigenvalue sum {sum} differs from the trace")));
    }
    let prod: Complex64 = nu.iter().map(|&k| root(k as i64)).product();
    let det = group.element(g).det.embed();
    if (prod - det).norm() > TRACE_TOLERANCE {
        return Err(Error::Snapping(format!("element {g}: eigenvalue product {prod} differs from det {det}")));
    }
    Ok(nu)
}

/// `1/d(nu)` for a cyclic group generated by `g`: the lexicographically
/// smallest sorted exponent tuple over all generators of the group.
pub fn cyclic_weights(group: &Group, g: ElemId) -> Result<Weights> {
    let d = group.order(g);
    let nu = eigen_exponents(group, g)?;
    let best = (1..d.max(2))
        .filter(|j| j.gcd(&d) == 1)
        .map(|j| {
            let mut v: Vec<u32> = nu.iter().map(|&k| (k * j) % d).collect();
            v.sort();
            v
        })
        .min()
        .expect("at least one generator");
    Ok(Weights { d, nu: best })
}

pub fn singularity_weights(group: &Group, s: &ElemSet) -> Result<ImageStatus> {
    if reflection_generated(group, s) {
        return Ok(ImageStatus::Smooth);
    }
    match cyclic_generator(group, s) {
        Some(g) => Ok(ImageStatus::Cyclic(cyclic_weights(group, g)?)),
        None => Ok(ImageStatus::NonCyclic),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponents_of_named_elements() {
        let g = Group::get();
        let w = |n: &str| cyclic_weights(g, g.named(n).unwrap()).unwrap().to_string();
        assert_eq!(w("g7"), "1/7(1,2,4)");
        assert_eq!(w("h4p"), "1/4(1,2,3)");
        assert_eq!(w("rho2"), "1/2(0,1,1)");
        assert_eq!(w("r2"), "1/2(0,0,1)");
        assert_eq!(w("m1"), "1/2(1,1,1)");
        assert_eq!(w("c3"), "1/3(0,1,2)");
    }

    #[test]
    fn every_element_snaps() {
        let g = Group::get();
        for el in g.elements() {
            let nu = eigen_exponents(g, el.id).unwrap();
            assert_eq!(nu.contains(&0), !g.is_elliptic(el.id), "element {}", el.id);
        }
    }
}
