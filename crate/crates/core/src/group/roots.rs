//! The 42 roots: signed coordinate permutations of `(2,0,0)`, `(0,w,w)`, `(1,1,w')`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::linalg::Mat3;
use crate::qnum::{rat, CVec3, QNum};

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

pub fn roots() -> Vec<CVec3> {
    let seeds = [
        CVec3::from_ints([2, 0, 0]),
        CVec3::new(QNum::zero(), QNum::alpha(), QNum::alpha()),
        CVec3::new(QNum::one(), QNum::one(), QNum::alpha_bar()),
    ];
    let mut out = BTreeSet::new();
    for s in &seeds {
        for p in PERMS {
            for signs in 0..8u8 {
                let mut v = CVec3::zero();
                for i in 0..3 {
                    let x = s.0[p[i]].clone();
                    v.0[i] = if signs & (1 << i) != 0 { -x } else { x };
                }
                out.insert(v);
            }
        }
    }
    out.into_iter().collect()
}

/// One root from each pair `±e`: the larger in the lexicographic order of
/// `(x1, y1, x2, y2, x3, y3)`.
pub fn positive_roots() -> Vec<CVec3> {
    roots().into_iter().filter(|e| e.to_chart() > e.neg().to_chart()).collect()
}

/// `x -> x - (e, x) e`, i.e. `I - e e^* / 2`.
pub fn reflection_matrix(e: &CVec3) -> Mat3 {
    let mut m = Mat3::identity();
    let half = rat(1, 2);
    for i in 0..3 {
        for j in 0..3 {
            let t = (&e.0[i] * &e.0[j].conj()).scale(&half);
            m.0[i][j] -= &t;
        }
    }
    m
}
