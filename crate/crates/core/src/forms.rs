//! Ternary quartic forms over `K` and the invariance of the Klein quartic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::group::{Group, GroupElement};
use crate::linalg::Mat3;
use crate::qnum::QNum;

pub type Exponent = [u8; 3];

/// Degree reverse lexicographic order with `x > y > z`, largest first.
fn degrevlex(a: &Exponent, b: &Exponent) -> Ordering {
    for i in (0..3).rev() {
        if a[i] != b[i] {
            // smaller power of the last variable is larger
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

/// The 15 exponents of degree 4, largest first.
pub fn monomials() -> Vec<Exponent> {
    let mut out = Vec::new();
    for a in 0..=4u8 {
        for b in 0..=4 - a {
            out.push([a, b, 4 - a - b]);
        }
    }
    out.sort_by(|p, q| degrevlex(q, p));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticForm {
    coeffs: Vec<QNum>,
}

impl QuarticForm {
    pub fn zero() -> Self {
        QuarticForm { coeffs: vec![QNum::zero(); 15] }
    }

    pub fn from_terms(terms: &[(Exponent, QNum)]) -> Self {
        let mons = monomials();
        let mut f = QuarticForm::zero();
        for (e, c) in terms {
            let i = mons.iter().position(|m| m == e).expect("degree 4 exponent");
            f.coeffs[i] += c;
        }
        f
    }

    /// `x^4 + y^4 + z^4 - 3 w' (x^2 y^2 + x^2 z^2 + y^2 z^2)`.
    pub fn klein() -> Self {
        let one = QNum::one();
        let mixed = -&QNum::alpha_bar() * &QNum::from(3);
        QuarticForm::from_terms(&[
            ([4, 0, 0], one.clone()),
            ([0, 4, 0], one.clone()),
            ([0, 0, 4], one),
            ([2, 2, 0], mixed.clone()),
            ([2, 0, 2], mixed.clone()),
            ([0, 2, 2], mixed),
        ])
    }

    pub fn coeffs(&self) -> &[QNum] {
        &self.coeffs
    }

    pub fn coeff(&self, e: Exponent) -> &QNum {
        &self.coeffs[monomials().iter().position(|m| *m == e).expect("degree 4 exponent")]
    }
}

impl fmt::Display for QuarticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = ["x", "y", "z"];
        let terms: Vec<String> = monomials()
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| {
                let m: Vec<String> = (0..3)
                    .filter(|&i| e[i] > 0)
                    .map(|i| if e[i] == 1 { vars[i].to_string() } else { format!("{}^{}", vars[i], e[i]) })
                    .collect();
                format!("({c})*{}", m.join("*"))
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

type Poly = BTreeMap<Exponent, QNum>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
            *out.entry(e).or_insert_with(QNum::zero) += &(ca * cb);
        }
    }
    out
}

/// `F o m`: each variable `x_i` is replaced by `sum_j m_ij x_j`.
pub fn substitute(m: &Mat3, f: &QuarticForm) -> QuarticForm {
    let linear: Vec<Poly> = (0..3)
        .map(|i| {
            (0..3)
                .filter(|&j| !m.entry(i, j).is_zero())
                .map(|j| {
                    let mut e = [0u8; 3];
                    e[j] = 1;
                    (e, m.entry(i, j).clone())
                })
                .collect()
        })
        .collect();
    let mut acc = Poly::new();
    for (e, c) in monomials().iter().zip(&f.coeffs) {
        if c.is_zero() {
            continue;
        }
        let mut term: Poly = [([0, 0, 0], c.clone())].into_iter().collect();
        for i in 0..3 {
            for _ in 0..e[i] {
                term = poly_mul(&term, &linear[i]);
            }
        }
        for (k, v) in term {
            *acc.entry(k).or_insert_with(QNum::zero) += &v;
        }
    }
    let terms: Vec<(Exponent, QNum)> = acc.into_iter().collect();
    QuarticForm::from_terms(&terms)
}

/// `F o gamma`; a right action.
pub fn act(gamma: &GroupElement, f: &QuarticForm) -> QuarticForm {
    substitute(&gamma.mat, f)
}

/// `true` iff the Klein quartic is fixed by every element of `G`.
pub fn verify_quartic_invariance(group: &Group) -> bool {
    let k = QuarticForm::klein();
    group.elements().iter().all(|g| act(g, &k) == k)
}
