//! The group `G336 = {±1} x H168` as 3x3 unitary matrices over `(1/2)Z[w]`,
//! enumerated by closure of the three basic reflections.

mod classes;
mod elemset;
mod recognize;
mod roots;
mod subgroups;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{mat3_to_int6, IntMat, Mat3};
use crate::qnum::{rat, QNum};

pub use classes::{conjugacy_classes, ConjClass};
pub use elemset::ElemSet;
pub use recognize::{recognize, Signature, SubgroupLabel};
pub use roots::{positive_roots, reflection_matrix, roots};
pub use subgroups::{all_subgroups, SubgroupClass, SubgroupLattice};

pub type ElemId = usize;

pub const GROUP_ORDER: usize = 336;

#[derive(Clone, Debug)]
pub struct GroupElement {
    pub id: ElemId,
    pub mat: Mat3,
    pub int6: IntMat,
    pub det: QNum,
    pub order: u32,
    /// Generator indices `1..=3`; the element is `r_{w[0]} r_{w[1]} ...`.
    pub word: Vec<u8>,
}

impl GroupElement {
    pub fn det_sign(&self) -> i32 {
        if self.det.is_one() {
            1
        } else {
            -1
        }
    }

    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            return "1".into();
        }
        self.word.iter().map(|g| format!("r{g}")).collect::<Vec<_>>().join("*")
    }
}

/// Which group a query runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Ambient {
    G,
    H,
}

impl std::str::FromStr for Ambient {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "G" | "g" => Ok(Ambient::G),
            "H" | "h" => Ok(Ambient::H),
            _ => Err(Error::Parse(format!("expected G or H, got {s:?}"))),
        }
    }
}

impl std::fmt::Display for Ambient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Ambient::G => "G",
            Ambient::H => "H",
        })
    }
}

pub fn generator_matrices() -> [Mat3; 3] {
    let half = rat(1, 2);
    let a = QNum::alpha();
    let ab = QNum::alpha_bar();
    let r1 = Mat3::from_ints([[1, 0, 0], [0, 0, 1], [0, 1, 0]]);
    let r2 = Mat3::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, -1]]);
    let r3 =
        Mat3([[QNum::from(1), QNum::from(-1), -&a], [QNum::from(-1), QNum::from(1), -&a], [-&ab, -&ab, QNum::zero()]])
            .scale(&QNum::from_rational(half));
    [r1, r2, r3]
}

/// `c: (z1, z2, z3) -> (-z3, -z1, -z2)`.
pub fn c_matrix() -> Mat3 {
    Mat3::from_ints([[0, 0, -1], [-1, 0, 0], [0, -1, 0]])
}

pub struct Group {
    elements: Vec<GroupElement>,
    index: HashMap<IntMat, ElemId>,
    mult: Vec<u16>,
    inverse: Vec<ElemId>,
    minus_one: ElemId,
    named: BTreeMap<&'static str, ElemId>,
    g_set: ElemSet,
    h_set: ElemSet,
}

/// Names accepted by [`Group::named`], with the element orders they must have.
pub const NAMED_ELEMENTS: [(&str, u32); 14] = [
    ("1", 1),
    ("m1", 2),
    ("r1", 2),
    ("r2", 2),
    ("r3", 2),
    ("rho1", 2),
    ("rho2", 2),
    ("rho3", 2),
    ("g7", 7),
    ("h3", 3),
    ("h4", 4),
    ("h4p", 4),
    ("c", 6),
    ("c3", 3),
];

impl Group {
    /// The group table, built on first use.
    pub fn get() -> &'static Group {
        static GROUP: OnceLock<Group> = OnceLock::new();
        GROUP.get_or_init(|| Group::build().expect("group construction"))
    }

    pub fn build() -> Result<Group> {
        let gens = generator_matrices();
        let mut elements: Vec<GroupElement> = Vec::new();
        let mut index = HashMap::new();
        let mut queue = VecDeque::new();

        let push = |mat: Mat3,
                    word: Vec<u8>,
                    elements: &mut Vec<GroupElement>,
                    index: &mut HashMap<IntMat, ElemId>,
                    queue: &mut VecDeque<ElemId>|
         -> Result<()> {
            let int6 = mat3_to_int6(&mat)?;
            if index.contains_key(&int6) {
                return Ok(());
            }
            let id = elements.len();
            index.insert(int6.clone(), id);
            let det = mat.det();
            elements.push(GroupElement { id, mat, int6, det, order: 0, word });
            queue.push_back(id);
            Ok(())
        };

        push(Mat3::identity(), vec![], &mut elements, &mut index, &mut queue)?;
        while let Some(id) = queue.pop_front() {
            for (k, g) in gens.iter().enumerate() {
                let mat = elements[id].mat.mul(g);
                let mut word = elements[id].word.clone();
                word.push(k as u8 + 1);
                push(mat, word, &mut elements, &mut index, &mut queue)?;
            }
            if elements.len() > GROUP_ORDER {
                return Err(Error::ClosureSize(elements.len()));
            }
        }
        let n = elements.len();
        if n != GROUP_ORDER {
            return Err(Error::ClosureSize(n));
        }

        let mut mult = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let prod = elements[a].int6.mul(&elements[b].int6);
                let id = *index.get(&prod).ok_or(Error::ClosureSize(n + 1))?;
                mult[a * n + b] = id as u16;
            }
        }
        let inverse = (0..n).map(|a| (0..n).find(|&b| mult[a * n + b] == 0).expect("finite group")).collect();

        let minus_one = *index
            .get(&mat3_to_int6(&Mat3::identity().neg())?)
            .ok_or_else(|| Error::Consistency("-1 is not in the closure".into()))?;

        let mut group = Group {
            elements,
            index,
            mult,
            inverse,
            minus_one,
            named: BTreeMap::new(),
            g_set: (0..n).collect(),
            h_set: ElemSet::new(),
        };
        for id in 0..n {
            let order = group.compute_order(id);
            group.elements[id].order = order;
        }
        group.h_set = (0..n).filter(|&i| group.elements[i].det.is_one()).collect();
        group.register_named()?;
        Ok(group)
    }

    fn compute_order(&self, id: ElemId) -> u32 {
        let mut x = id;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, id);
            k += 1;
        }
        k
    }

    fn register_named(&mut self) -> Result<()> {
        let find = |g: &Group, m: &Mat3, name: &str| {
            g.find(m).ok_or_else(|| Error::NamedElement { name: name.into(), reason: "not in G".into() })
        };
        let [r1, r2, r3] = generator_matrices();
        let ids = [find(self, &r1, "r1")?, find(self, &r2, "r2")?, find(self, &r3, "r3")?];
        let m1 = self.minus_one;
        let rho: Vec<ElemId> = ids.iter().map(|&r| self.mul(m1, r)).collect();
        let g7 = self.product(&[rho[0], rho[1], rho[2]]);
        let h3 = self.product(&[rho[0], rho[2], rho[0], rho[1]]);
        let h4 = self.mul(rho[0], rho[1]);
        let h4p = self.mul(m1, self.mul(ids[0], ids[1]));
        let c = find(self, &c_matrix(), "c")?;
        let c3 = self.mul(m1, c);
        let table: [(&'static str, ElemId); 14] = [
            ("1", 0),
            ("m1", m1),
            ("r1", ids[0]),
            ("r2", ids[1]),
            ("r3", ids[2]),
            ("rho1", rho[0]),
            ("rho2", rho[1]),
            ("rho3", rho[2]),
            ("g7", g7),
            ("h3", h3),
            ("h4", h4),
            ("h4p", h4p),
            ("c", c),
            ("c3", c3),
        ];
        for ((name, id), (_, order)) in table.iter().zip(NAMED_ELEMENTS) {
            let got = self.order(*id);
            if got != order {
                return Err(Error::NamedElement {
                    name: (*name).into(),
                    reason: format!("order {got}, expected {order}"),
                });
            }
            self.named.insert(name, *id);
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, id: ElemId) -> &GroupElement {
        &self.elements[id]
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    pub fn minus_one(&self) -> ElemId {
        self.minus_one
    }

    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        self.mult[a * self.elements.len() + b] as ElemId
    }

    pub fn product(&self, ids: &[ElemId]) -> ElemId {
        ids.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    pub fn inv(&self, a: ElemId) -> ElemId {
        self.inverse[a]
    }

    pub fn pow(&self, a: ElemId, k: u32) -> ElemId {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    /// `g x g^-1`
    pub fn conjugate(&self, g: ElemId, x: ElemId) -> ElemId {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn order(&self, a: ElemId) -> u32 {
        self.elements[a].order
    }

    pub fn det_sign(&self, a: ElemId) -> i32 {
        self.elements[a].det_sign()
    }

    pub fn find(&self, m: &Mat3) -> Option<ElemId> {
        let int6 = mat3_to_int6(m).ok()?;
        let id = *self.index.get(&int6)?;
        (self.elements[id].mat == *m).then_some(id)
    }

    pub fn named(&self, name: &str) -> Result<ElemId> {
        self.named.get(name).copied().ok_or_else(|| Error::UnknownName(name.into()))
    }

    pub fn named_elements(&self) -> &BTreeMap<&'static str, ElemId> {
        &self.named
    }

    /// Order-2 elements of determinant -1 other than -1: fix a plane pointwise.
    pub fn is_reflection(&self, a: ElemId) -> bool {
        self.order(a) == 2 && a != self.minus_one && self.det_sign(a) == -1
    }

    /// Negatives of reflections: order 2, determinant 1.
    pub fn is_antireflection(&self, a: ElemId) -> bool {
        self.order(a) == 2 && self.det_sign(a) == 1
    }

    /// True when 1 is not an eigenvalue.
    pub fn is_elliptic(&self, a: ElemId) -> bool {
        !self.elements[a].mat.sub(&Mat3::identity()).det().is_zero()
    }

    pub fn set(&self, ambient: Ambient) -> &ElemSet {
        match ambient {
            Ambient::G => &self.g_set,
            Ambient::H => &self.h_set,
        }
    }

    /// The subgroup generated by `gens`.
    pub fn closure(&self, gens: &[ElemId]) -> ElemSet {
        let mut set = ElemSet::new();
        set.insert(0);
        let mut list = vec![0];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    list.push(y);
                }
            }
            i += 1;
        }
        set
    }

    pub fn is_subgroup(&self, s: &ElemSet) -> bool {
        s.contains(0) && s.iter().all(|a| s.iter().all(|b| s.contains(self.mul(a, self.inv(b)))))
    }

    pub fn conjugate_set(&self, g: ElemId, s: &ElemSet) -> ElemSet {
        s.iter().map(|x| self.conjugate(g, x)).collect()
    }

    /// `{g in ambient : g S g^-1 = S}`.
    pub fn normalizer(&self, s: &ElemSet, ambient: Ambient) -> ElemSet {
        self.set(ambient).iter().filter(|&g| self.conjugate_set(g, s) == *s).collect()
    }

    pub fn centralizer(&self, x: ElemId, ambient: Ambient) -> ElemSet {
        self.set(ambient).iter().filter(|&g| self.mul(g, x) == self.mul(x, g)).collect()
    }

    /// Checks the defining relations of the Shephard–Todd presentation.
    pub fn verify_presentation(&self) -> bool {
        self.relations().iter().all(|(_, id)| *id == 0)
    }

    /// Each relator word with its evaluated element.
    pub fn relations(&self) -> Vec<(&'static str, ElemId)> {
        let r1 = self.named["r1"];
        let r2 = self.named["r2"];
        let r3 = self.named["r3"];
        vec![
            ("r1^2", self.pow(r1, 2)),
            ("r2^2", self.pow(r2, 2)),
            ("r3^2", self.pow(r3, 2)),
            ("(r1r2)^4", self.pow(self.mul(r1, r2), 4)),
            ("(r2r3)^4", self.pow(self.mul(r2, r3), 4)),
            ("(r3r1)^3", self.pow(self.mul(r3, r1), 3)),
            ("(r1r2r1r3)^3", self.pow(self.product(&[r1, r2, r1, r3]), 3)),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::CVec3;

    fn g() -> &'static Group {
        Group::get()
    }

    #[test]
    fn closure_sizes() {
        let g = g();
        assert_eq!(g.len(), 336);
        assert_eq!(g.set(Ambient::H).len(), 168);
        assert_eq!((0..336).filter(|&a| g.is_reflection(a)).count(), 21);
        assert_eq!((0..336).filter(|&a| g.is_antireflection(a)).count(), 21);
    }

    #[test]
    fn elements_are_unitary_and_unimodular_on_the_lattice() {
        for e in g().elements() {
            assert!(e.mat.is_unitary(), "element {}", e.id);
            assert_eq!(e.int6.det(), 1, "element {}", e.id);
            assert!(e.det == QNum::one() || e.det == QNum::from(-1));
        }
    }

    #[test]
    fn coxeter_element() {
        let g = g();
        let [r1, r2, r3] = ["r1", "r2", "r3"].map(|n| g.named(n).unwrap());
        let x = g.product(&[r1, r2, r3]);
        assert_eq!(g.order(x), 14);
        assert_eq!(g.pow(x, 7), g.minus_one());
        let half = QNum::from_rational(rat(1, 2));
        let a = QNum::alpha();
        let ab = QNum::alpha_bar();
        let expected = Mat3([
            [QNum::from(1), QNum::from(-1), -&a],
            [ab.clone(), ab, QNum::zero()],
            [QNum::from(-1), QNum::from(1), -&a],
        ])
        .scale(&half);
        assert_eq!(g.element(x).mat, expected);
    }

    #[test]
    fn presentation() {
        let g = g();
        assert!(g.verify_presentation());
        let r1r2 = g.mul(g.named("r1").unwrap(), g.named("r2").unwrap());
        assert_ne!(g.pow(r1r2, 2), 0);
        assert_eq!(g.order(r1r2), 4);
    }

    #[test]
    fn named_matrices_match_the_displayed_ones() {
        let g = g();
        let half = QNum::from_rational(rat(1, 2));
        let a = QNum::alpha();
        let ab = QNum::alpha_bar();
        let g7 = Mat3([
            [QNum::from(-1), QNum::from(1), a.clone()],
            [-&ab, -&ab, QNum::zero()],
            [QNum::from(1), QNum::from(-1), a.clone()],
        ])
        .scale(&half);
        assert_eq!(g.element(g.named("g7").unwrap()).mat, g7);
        // the (2,3) entry is +w'/2; with -w'/2 the matrix is not unitary
        let h3 = Mat3([
            [QNum::from(1), -&a, QNum::from(1)],
            [-&ab, QNum::zero(), ab.clone()],
            [QNum::from(-1), -&a, QNum::from(-1)],
        ])
        .scale(&half);
        assert_eq!(g.element(g.named("h3").unwrap()).mat, h3);
        // h3 g7 h3^-1 = g7^2
        let (h3, g7) = (g.named("h3").unwrap(), g.named("g7").unwrap());
        assert_eq!(g.conjugate(h3, g7), g.pow(g7, 2));
        let h4p = g.element(g.named("h4p").unwrap()).mat.clone();
        assert_eq!(h4p, Mat3::from_ints([[-1, 0, 0], [0, 0, 1], [0, -1, 0]]));
        let h4 = g.element(g.named("h4").unwrap()).mat.clone();
        assert_eq!(h4, Mat3::from_ints([[1, 0, 0], [0, 0, -1], [0, 1, 0]]));
    }

    #[test]
    fn order_spectrum() {
        let g = g();
        let mut orders: Vec<u32> = g.elements().iter().map(|e| e.order).collect();
        orders.sort();
        orders.dedup();
        assert_eq!(orders, vec![1, 2, 3, 4, 6, 7, 14]);
    }

    #[test]
    fn columns_are_half_roots() {
        let rs = roots();
        for e in g().elements() {
            for j in 0..3 {
                let col = e.mat.column(j).scale(&QNum::from(2));
                assert!(rs.contains(&col), "element {} column {j}", e.id);
            }
        }
        let _ = CVec3::zero();
    }

    #[test]
    fn words_reproduce_elements() {
        let g = g();
        let gens = generator_matrices();
        for e in g.elements().iter().step_by(17) {
            let m = e.word.iter().fold(Mat3::identity(), |acc, &k| acc.mul(&gens[k as usize - 1]));
            assert_eq!(m, e.mat);
        }
    }

    #[test]
    fn normalizer_of_g7_has_order_21() {
        let g = g();
        let s = g.closure(&[g.named("g7").unwrap()]);
        let n = g.normalizer(&s, Ambient::H);
        assert_eq!(n.len(), 21);
        assert_eq!(g.normalizer(g.set(Ambient::G), Ambient::G).len(), 336);
        let rho1 = g.closure(&[g.named("rho1").unwrap()]);
        assert_eq!(g.normalizer(&rho1, Ambient::H).len(), 8);
    }

    #[test]
    fn int6_is_a_homomorphism() {
        let g = g();
        for a in (0..336).step_by(7) {
            for b in (0..336).step_by(11) {
                let ab = g.mul(a, b);
                assert_eq!(g.element(a).mat.mul(&g.element(b).mat), g.element(ab).mat);
            }
        }
    }
}
