use rand::Rng;
use serde::Serialize;

use super::stabilizer;
use crate::error::{Error, Result};
use crate::group::{Ambient, ElemId, ElemSet, Group};
use crate::linalg::{smith_normal_form, IntMat, Lattice};
use crate::qnum::Rational;
use crate::torus::{fixed_locus_structure, Splitting, TorusPoint};

/// Primes between 336 and 1000, the denominators of sample parameters.
const SAMPLE_PRIMES: [i64; 100] = [
    337, 347, 349, 353, 359, 367, 373, 379, 383, 389, 397, 401, 409, 419, 421, 431, 433, 439, 443, 449, 457, 461, 463,
    467, 479, 487, 491, 499, 503, 509, 521, 523, 541, 547, 557, 563, 569, 571, 577, 587, 593, 599, 601, 607, 613, 617,
    619, 631, 641, 643, 647, 653, 659, 661, 673, 677, 683, 691, 701, 709, 719, 727, 733, 739, 743, 751, 757, 761, 769,
    773, 787, 797, 809, 811, 821, 823, 827, 829, 839, 853, 857, 859, 863, 877, 881, 883, 887, 907, 911, 919, 929, 937,
    941, 947, 953, 967, 971, 977, 983, 991,
];

const SAMPLES: usize = 3;

fn rational(x: i128) -> Rational {
    Rational::from_integer(x.into())
}

/// `translate + sum (a_i / p) b_i` for random `a_i` and a random prime `p > 336`.
fn sample_point<R: Rng>(translate: &TorusPoint, direction: &[Vec<i128>], rng: &mut R) -> TorusPoint {
    let p = SAMPLE_PRIMES[rng.gen_range(0..SAMPLE_PRIMES.len())] as i128;
    let mut num = [0i128; 6];
    for b in direction {
        let a = rng.gen_range(1..p);
        for i in 0..6 {
            num[i] += a * b[i];
        }
    }
    translate.add(&TorusPoint::from_parts(p, &num).expect("prime denominator"))
}

/// Stabilizer of a generic point of `translate + span_R(direction)`, as the
/// intersection of the stabilizers of three random points on it.
pub fn generic_curve_stabilizer<R: Rng>(
    group: &Group,
    translate: &TorusPoint,
    direction: &[Vec<i128>],
    ambient: Ambient,
    rng: &mut R,
) -> ElemSet {
    (0..SAMPLES)
        .map(|_| stabilizer(group, &sample_point(translate, direction, rng), ambient))
        .reduce(|a, b| a.intersection(&b))
        .expect("at least one sample")
}

/// A component of the fixed locus of a parabolic element: the image of
/// `translate + V_1`.
#[derive(Clone, Serialize)]
pub struct Curve {
    pub element: ElemId,
    pub translate: TorusPoint,
    /// Basis of `Lambda ∩ V_1` in eps-coordinates.
    pub direction: Vec<Vec<i128>>,
    #[serde(skip)]
    split: Splitting,
}

impl std::fmt::Debug for Curve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Curve(element {}, {})", self.element, self.translate)
    }
}

impl Curve {
    pub fn new(group: &Group, element: ElemId, translate: TorusPoint) -> Result<Curve> {
        if translate.apply(&group.element(element).int6) != translate {
            return Err(Error::Consistency(format!("{translate} is not fixed by element {element}")));
        }
        let split = Splitting::of(group, element)?;
        Ok(Curve { element, translate, direction: split.lambda1.basis(), split })
    }

    /// The connected components of the fixed locus of `element`.
    pub fn components(group: &Group, element: ElemId) -> Result<Vec<Curve>> {
        let locus = fixed_locus_structure(group, element)?;
        locus.translates.into_iter().map(|t| Curve::new(group, element, t)).collect()
    }

    /// Complex dimension.
    pub fn dimension(&self) -> usize {
        self.direction.len() / 2
    }

    pub fn contains(&self, u: &TorusPoint) -> bool {
        self.split.on_axis_mod_lattice(&u.sub(&self.translate))
    }

    pub fn generic_stabilizer<R: Rng>(&self, group: &Group, ambient: Ambient, rng: &mut R) -> ElemSet {
        generic_curve_stabilizer(group, &self.translate, &self.direction, ambient, rng)
    }

    /// Elements fixing every point of the component, decided exactly.
    pub fn pointwise_stabilizer(&self, group: &Group, ambient: Ambient) -> ElemSet {
        group
            .set(ambient)
            .iter()
            .filter(|&g| {
                let m = &group.element(g).int6;
                self.direction.iter().all(|b| m.apply(b) == *b) && self.translate.apply(m) == self.translate
            })
            .collect()
    }

    /// Elements mapping the component onto itself.
    pub fn setwise_stabilizer(&self, group: &Group, ambient: Ambient) -> ElemSet {
        let lattice = Lattice::from_generators(&self.direction, 6);
        group
            .set(ambient)
            .iter()
            .filter(|&g| {
                let m = &group.element(g).int6;
                self.direction.iter().all(|b| lattice.contains(&m.apply(b))) && self.contains(&self.translate.apply(m))
            })
            .collect()
    }

    /// `true` iff `g` maps this component onto `other`.
    pub fn maps_onto(&self, group: &Group, g: ElemId, other: &Curve) -> bool {
        if self.direction.len() != other.direction.len() {
            return false;
        }
        let m = &group.element(g).int6;
        let lattice = Lattice::from_generators(&other.direction, 6);
        self.direction.iter().all(|b| lattice.contains(&m.apply(b))) && other.contains(&self.translate.apply(m))
    }

    /// Points of the component fixed by `g`; `None` if `g` fixes all of it.
    pub fn fixed_points_of(&self, group: &Group, g: ElemId) -> Result<Option<Vec<TorusPoint>>> {
        let a = group.element(g).int6.sub(&IntMat::identity(6));
        let k = self.direction.len();
        let b = IntMat::from_columns(&self.direction, 6);
        let m = a.mul(&b);
        let snf = smith_normal_form(&m);
        let r = snf.rank();

        // c = (g - 1) t, and we need m s = -c mod Z^6
        let t = self.translate.coords();
        let c: Vec<Rational> = (0..6).map(|i| (0..6).map(|j| rational(a[(i, j)]) * &t[j]).sum()).collect();
        let uc: Vec<Rational> = (0..6).map(|i| (0..6).map(|j| rational(snf.u[(i, j)]) * &c[j]).sum()).collect();
        if uc[r..].iter().any(|x| !x.is_integer()) {
            return Ok(Some(Vec::new()));
        }
        if r == 0 {
            return Ok(None);
        }
        if r < k {
            return Err(Error::Consistency(format!("element {g} fixes a positive-dimensional part of {self:?}")));
        }
        let diag = snf.diagonal();
        let mut out = Vec::new();
        let mut n = vec![0i128; r];
        loop {
            let y: Vec<Rational> = (0..r).map(|i| (rational(n[i]) - &uc[i]) / rational(diag[i])).collect();
            let s: Vec<Rational> = (0..k).map(|i| (0..r).map(|j| rational(snf.v[(i, j)]) * &y[j]).sum()).collect();
            let coords: Vec<Rational> = (0..6)
                .map(|i| (0..k).map(|j| rational(self.direction[j][i]) * &s[j]).sum::<Rational>() + &t[i])
                .collect();
            out.push(TorusPoint::from_rationals(&coords)?);
            let mut i = 0;
            while i < r {
                n[i] += 1;
                if n[i] < diag[i] {
                    break;
                }
                n[i] = 0;
                i += 1;
            }
            if i == r {
                break;
            }
        }
        out.sort();
        out.dedup();
        Ok(Some(out))
    }

    /// Points of the component whose stabilizer is larger than `generic`.
    pub fn special_points(&self, group: &Group, ambient: Ambient, generic: &ElemSet) -> Result<Vec<TorusPoint>> {
        let mut out = Vec::new();
        for g in group.set(ambient).iter() {
            if generic.contains(g) {
                continue;
            }
            match self.fixed_points_of(group, g)? {
                Some(pts) => out.extend(pts),
                None => {
                    return Err(Error::Consistency(format!(
                        "element {g} fixes {self:?} but is not in its generic stabilizer"
                    )))
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::recognize;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sampled_and_exact_generic_stabilizers_agree() {
        let g = Group::get();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for name in ["rho2", "c3", "h4", "r2"] {
            let id = g.named(name).unwrap();
            for c in Curve::components(g, id).unwrap() {
                for amb in [Ambient::G, Ambient::H] {
                    assert_eq!(c.generic_stabilizer(g, amb, &mut rng), c.pointwise_stabilizer(g, amb), "{name}");
                }
            }
        }
    }

    #[test]
    fn fixed_points_on_a_curve_are_fixed_and_on_it() {
        let g = Group::get();
        let id = g.named("rho2").unwrap();
        for c in Curve::components(g, id).unwrap() {
            let generic = c.pointwise_stabilizer(g, Ambient::G);
            for x in g.set(Ambient::G).iter() {
                match c.fixed_points_of(g, x).unwrap() {
                    None => assert!(generic.contains(x)),
                    Some(pts) => {
                        assert!(!generic.contains(x));
                        for p in pts {
                            assert!(c.contains(&p));
                            assert_eq!(p.apply(&g.element(x).int6), p);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn setwise_stabilizer_of_the_diagonal() {
        let g = Group::get();
        let c3 = g.named("c3").unwrap();
        let comps = Curve::components(g, c3).unwrap();
        assert_eq!(comps.len(), 1);
        let h = comps[0].setwise_stabilizer(g, Ambient::H);
        assert_eq!(recognize(g, &h).unwrap().to_string(), "S3");
        let gg = comps[0].setwise_stabilizer(g, Ambient::G);
        assert_eq!(recognize(g, &gg).unwrap().to_string(), "±S3");
    }
}
