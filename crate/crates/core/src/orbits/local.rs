//! Analytic type of `C^3 / S` for a point stabilizer `S` that need not be
//! cyclic.
//!
//! With `R` the subgroup generated by the reflections of `S`, `C^3 / R` is
//! smooth with coordinates the basic invariants `f1, f2, f3` of `R`, and
//! `C^3 / S = (C^3 / R) / (S / R)`. An element `g` of `S` can be made to act
//! diagonally on the `f_i`; its eigenvalues are read off the series
//! `(1/|R|) sum_r 1 / det(1 - t g r) = prod_i 1 / (1 - mu_i t^(d_i))`.
//! When `S / R` is cyclic the quotient is then a diagonal cyclic quotient,
//! reduced further by its own reflections.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::weights::{ImageStatus, Weights};
use crate::error::{Error, Result};
use crate::group::{ElemId, ElemSet, Group};
use crate::qnum::{rat, QNum};

const SNAP_TOLERANCE: f64 = 1e-6;

fn series_of(group: &Group, h: ElemId, len: usize) -> Vec<QNum> {
    let m = &group.element(h).mat;
    let e1 = m.trace();
    let e2 = (&(&e1 * &e1) - &m.mul(m).trace()).scale(&rat(1, 2));
    let e3 = m.det();
    let mut c = vec![QNum::one()];
    for n in 1..len {
        let mut x = &e1 * &c[n - 1];
        if n >= 2 {
            x -= &(&e2 * &c[n - 2]);
        }
        if n >= 3 {
            x += &(&e3 * &c[n - 3]);
        }
        c.push(x);
    }
    c
}

/// Graded trace of `g` on the `R`-invariants, up to `t^(len-1)`.
fn invariant_series(group: &Group, g: ElemId, r: &ElemSet, len: usize) -> Vec<Complex64> {
    let mut acc = vec![QNum::zero(); len];
    for x in r.iter() {
        for (a, c) in acc.iter_mut().zip(series_of(group, group.mul(g, x), len)) {
            *a += &c;
        }
    }
    let n = rat(1, r.len() as i64);
    acc.iter().map(|a| a.scale(&n).embed()).collect()
}

fn mul_factor(s: &mut [Complex64], mu: Complex64, d: usize) {
    // s *= (1 - mu t^d)
    for k in (d..s.len()).rev() {
        let v = s[k - d] * mu;
        s[k] -= v;
    }
}

/// Degrees of the basic invariants of `r` and, for each, the exponent `k`
/// of the eigenvalue `exp(2 pi i k / n)` of `g` on it, `n` the order of `g`.
pub fn invariant_eigen_exponents(group: &Group, g: ElemId, r: &ElemSet) -> Result<Vec<(usize, u32)>> {
    let n = group.order(g) as usize;
    let len = r.len() + 2;
    let root = |k: i64| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64);
    let mut series: Vec<Vec<Complex64>> =
        (0..n).map(|j| invariant_series(group, group.pow(g, j as u32), r, len)).collect();
    let mut found: Vec<(usize, u32)> = Vec::new();
    while found.len() < 3 {
        // lowest remaining degree, read off the identity's series
        let d = (1..len)
            .find(|&k| series[0][k].norm() > SNAP_TOLERANCE)
            .ok_or_else(|| Error::Snapping("fewer than three basic invariants".into()))?;
        let count = series[0][d].re.round();
        if (series[0][d] - Complex64::new(count, 0.0)).norm() > SNAP_TOLERANCE || count < 1.0 {
            return Err(Error::Snapping(format!("degree {d} multiplicity {}", series[0][d])));
        }
        let mut at_d = Vec::new();
        for k in 0..n {
            let m: Complex64 = (0..n).map(|j| series[j][d] * root(-((j * k) as i64))).sum::<Complex64>() / n as f64;
            let mr = m.re.round();
            if (m - Complex64::new(mr, 0.0)).norm() > SNAP_TOLERANCE || mr < 0.0 {
                return Err(Error::Snapping(format!("degree {d} exponent {k} multiplicity {m}")));
            }
            at_d.extend(std::iter::repeat_n(k as u32, mr as usize));
        }
        if at_d.len() as f64 != count {
            return Err(Error::Snapping(format!("degree {d}: {} eigenvalues for {count} invariants", at_d.len())));
        }
        for &k in &at_d {
            for (j, s) in series.iter_mut().enumerate() {
                mul_factor(s, root((j as i64) * k as i64), d);
            }
            found.push((d, k));
        }
    }
    if found.len() != 3 || series[0][1..].iter().any(|c| c.norm() > SNAP_TOLERANCE) {
        return Err(Error::Snapping("invariant ring is not polynomial in three generators".into()));
    }
    Ok(found)
}

/// Removes the reflections of the diagonal cyclic group generated by
/// `exp(2 pi i nu / m)` and returns the reduced `(m, nu)`.
fn reduce_diagonal(mut m: u32, mut nu: Vec<u32>) -> (u32, Vec<u32>) {
    loop {
        let elems: Vec<Vec<u32>> = (0..m).map(|j| nu.iter().map(|&v| (v * j) % m).collect()).collect();
        // order of the subgroup acting on coordinate i alone
        let a: Vec<u32> =
            (0..3).map(|i| elems.iter().filter(|e| (0..3).all(|l| l == i || e[l] == 0)).count() as u32).collect();
        let p: u32 = a.iter().product();
        if p == 1 {
            return (m, nu);
        }
        let m2 = m / p;
        nu = (0..3).map(|i| (a[i] * nu[i] / p) % m2.max(1)).collect();
        m = m2;
    }
}

fn canonical(m: u32, nu: &[u32]) -> Weights {
    let best = (1..m.max(2))
        .filter(|&j| num_integer::gcd(j, m) == 1)
        .map(|j| {
            let mut v: Vec<u32> = nu.iter().map(|&k| (k * j) % m).collect();
            v.sort();
            v
        })
        .min()
        .expect("a generator");
    Weights { d: m, nu: best }
}

/// Analytic type of the image of a point with stabilizer `s`.
pub fn local_type(group: &Group, s: &ElemSet) -> Result<ImageStatus> {
    let refl: Vec<ElemId> = s.iter().filter(|&x| group.is_reflection(x)).collect();
    let r = group.closure(&refl);
    if r == *s {
        return Ok(ImageStatus::Smooth);
    }
    let index = (s.len() / r.len()) as u32;
    // an element whose image generates s / r
    let gen = s.iter().find(|&g| {
        let mut x = g;
        let mut k = 1;
        while !r.contains(x) {
            x = group.mul(x, g);
            k += 1;
        }
        k == index
    });
    let Some(g) = gen else {
        return Ok(ImageStatus::NonCyclic);
    };
    let n = group.order(g);
    let ex: Vec<u32> = invariant_eigen_exponents(group, g, &r)?.into_iter().map(|(_, k)| k).collect();
    // g^index lies in r, so the exponents live in Z / index
    let step = n / index;
    if ex.iter().any(|&k| k % step != 0) {
        return Err(Error::Snapping(format!("exponents {ex:?} of element {g} are not {index}-torsion")));
    }
    let nu: Vec<u32> = ex.iter().map(|&k| k / step).collect();
    let (m, nu) = reduce_diagonal(index, nu);
    Ok(if m == 1 { ImageStatus::Smooth } else { ImageStatus::Cyclic(canonical(m, &nu)) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Ambient;

    #[test]
    fn degrees_of_small_reflection_groups() {
        let g = Group::get();
        let r1 = g.named("r1").unwrap();
        let r2 = g.named("r2").unwrap();
        let degs = |s: &ElemSet| {
            let mut d: Vec<usize> =
                invariant_eigen_exponents(g, g.identity(), s).unwrap().into_iter().map(|(d, _)| d).collect();
            d.sort();
            d
        };
        assert_eq!(degs(&g.closure(&[])), vec![1, 1, 1]);
        assert_eq!(degs(&g.closure(&[r2])), vec![1, 1, 2]);
        let s3 = g.closure(&[r1, g.named("c3").unwrap()]);
        assert_eq!(s3.len(), 6);
        assert_eq!(degs(&s3), vec![1, 2, 3]);
        assert_eq!(degs(g.set(Ambient::G)), vec![4, 6, 14]);
    }

    #[test]
    fn reduce_diagonal_removes_reflections() {
        assert_eq!(reduce_diagonal(2, vec![0, 0, 1]), (1, vec![0, 0, 0]));
        assert_eq!(reduce_diagonal(4, vec![1, 2, 3]), (4, vec![1, 2, 3]));
        assert_eq!(reduce_diagonal(4, vec![0, 0, 1]).0, 1);
        // 1/4(2,0,1): the square is a reflection in the last coordinate
        assert_eq!(reduce_diagonal(4, vec![2, 0, 1]), (2, vec![1, 0, 1]));
    }

    #[test]
    fn cyclic_and_reflection_groups() {
        let g = Group::get();
        let rho2 = g.closure(&[g.named("rho2").unwrap()]);
        assert_eq!(local_type(g, &rho2).unwrap().to_string(), "1/2(0,1,1)");
        assert!(local_type(g, g.set(Ambient::G)).unwrap().is_smooth());
        let g7 = g.closure(&[g.named("g7").unwrap()]);
        assert_eq!(local_type(g, &g7).unwrap().to_string(), "1/7(1,2,4)");
    }
}
