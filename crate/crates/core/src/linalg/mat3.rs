use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qnum::{CVec3, QNum};

/// 3x3 matrix over `K`, acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Mat3(pub [[QNum; 3]; 3]);

impl Mat3 {
    pub fn zero() -> Self {
        Mat3::default()
    }

    pub fn identity() -> Self {
        Mat3::scalar(QNum::one())
    }

    pub fn scalar(s: QNum) -> Self {
        let mut m = Mat3::zero();
        for i in 0..3 {
            m.0[i][i] = s.clone();
        }
        m
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Mat3(rows.map(|r| r.map(QNum::from)))
    }

    pub fn entry(&self, i: usize, j: usize) -> &QNum {
        &self.0[i][j]
    }

    pub fn column(&self, j: usize) -> CVec3 {
        CVec3([self.0[0][j].clone(), self.0[1][j].clone(), self.0[2][j].clone()])
    }

    pub fn mul(&self, o: &Mat3) -> Mat3 {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = QNum::zero();
                for k in 0..3 {
                    acc += &(&self.0[i][k] * &o.0[k][j]);
                }
                m.0[i][j] = acc;
            }
        }
        m
    }

    pub fn add(&self, o: &Mat3) -> Mat3 {
        let mut m = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] += &o.0[i][j];
            }
        }
        m
    }

    pub fn sub(&self, o: &Mat3) -> Mat3 {
        let mut m = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] -= &o.0[i][j];
            }
        }
        m
    }

    pub fn neg(&self) -> Mat3 {
        Mat3(self.0.clone().map(|r| r.map(|e| -e)))
    }

    pub fn scale(&self, s: &QNum) -> Mat3 {
        Mat3(self.0.clone().map(|r| r.map(|e| e * s)))
    }

    pub fn apply(&self, v: &CVec3) -> CVec3 {
        let mut out = CVec3::zero();
        for i in 0..3 {
            let mut acc = QNum::zero();
            for k in 0..3 {
                acc += &(&self.0[i][k] * &v.0[k]);
            }
            out.0[i] = acc;
        }
        out
    }

    pub fn conj_transpose(&self) -> Mat3 {
        let mut m = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> QNum {
        &(&self.0[0][0] + &self.0[1][1]) + &self.0[2][2]
    }

    pub fn det(&self) -> QNum {
        let a = &self.0;
        let t1 = &a[0][0] * &(&(&a[1][1] * &a[2][2]) - &(&a[1][2] * &a[2][1]));
        let t2 = &a[0][1] * &(&(&a[1][0] * &a[2][2]) - &(&a[1][2] * &a[2][0]));
        let t3 = &a[0][2] * &(&(&a[1][0] * &a[2][1]) - &(&a[1][1] * &a[2][0]));
        &(&t1 - &t2) + &t3
    }

    pub fn is_unitary(&self) -> bool {
        self.conj_transpose().mul(self) == Mat3::identity()
    }

    pub fn pow(&self, n: u32) -> Mat3 {
        let mut acc = Mat3::identity();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Reduced row echelon form; returns the pivot columns.
    fn rref(&self) -> (Mat3, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..3 {
            let Some(p) = (row..3).find(|&r| !m.0[r][col].is_zero()) else {
                continue;
            };
            m.0.swap(row, p);
            let inv = m.0[row][col].inv().expect("pivot is nonzero");
            for j in 0..3 {
                m.0[row][j] = &m.0[row][j] * &inv;
            }
            for r in 0..3 {
                if r != row && !m.0[r][col].is_zero() {
                    let f = m.0[r][col].clone();
                    for j in 0..3 {
                        let d = &f * &m.0[row][j];
                        m.0[r][j] -= &d;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == 3 {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// `K`-basis of the kernel, one vector per free column of the echelon form.
    pub fn kernel(&self) -> Vec<CVec3> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..3).filter(|c| !pivots.contains(c)) {
            let mut v = CVec3::zero();
            v.0[free] = QNum::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v.0[pc] = -&r.0[row][free];
            }
            basis.push(v);
        }
        basis
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}, {}, {}]", r[0], r[1], r[2])?;
        }
        Ok(())
    }
}

/// Rows separated by `;` or newlines, entries by `,`, each row optionally
/// bracketed: `[1, 0, 0]; [0, w, 0]; [0, 0, 1]`.
impl std::str::FromStr for Mat3 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mat3> {
        let bad = || Error::Parse(format!("expected three rows of three entries, got {s:?}"));
        let rows: Vec<&str> = s.split([';', '\n']).map(str::trim).filter(|r| !r.is_empty()).collect();
        if rows.len() != 3 {
            return Err(bad());
        }
        let mut m = Mat3::zero();
        for (i, r) in rows.iter().enumerate() {
            let r = r.trim_start_matches('[').trim_end_matches(']');
            let entries: Vec<&str> = r.split(',').collect();
            if entries.len() != 3 {
                return Err(bad());
            }
            for (j, e) in entries.iter().enumerate() {
                m.0[i][j] = e.parse()?;
            }
        }
        Ok(m)
    }
}

impl serde::Serialize for Mat3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl fmt::Debug for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat3[")?;
        for r in &self.0 {
            write!(f, "[{}, {}, {}]", r[0], r[1], r[2])?;
        }
        write!(f, "]")
    }
}

/// The kernel of `m` as a `K`-subspace; empty for invertible `m`.
pub fn kernel_k(m: &Mat3) -> Vec<CVec3> {
    m.kernel()
}
