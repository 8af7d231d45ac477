//! Dense integer matrices with Smith and Hermite normal forms.
//!
//! Everything here is sized for the rank-6 lattice: naive elementary
//! operations, smallest-nonzero pivoting, and checked `i128` arithmetic. Transform
//! entries of the naive Smith reduction reach ~1e17 on random 6x6 inputs with
//! entries in [-10, 10], far inside the `i128` range.

use std::fmt;

use serde::Serialize;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i128>,
}

fn ck_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("integer overflow in matrix arithmetic")
}

fn ck_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("integer overflow in matrix arithmetic")
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i128>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = IntMat::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    pub fn from_columns(cols: &[Vec<i128>], nrows: usize) -> Self {
        let mut m = IntMat::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), nrows, "ragged columns");
            for (i, &v) in c.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> &[i128] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<i128>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<i128> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, o: &IntMat) -> IntMat {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut m = IntMat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    m[(i, j)] = ck_add(m[(i, j)], ck_mul(a, o[(k, j)]));
                }
            }
        }
        m
    }

    pub fn apply(&self, v: &[i128]) -> Vec<i128> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(0i128, |acc, (&a, &b)| ck_add(acc, ck_mul(a, b))))
            .collect()
    }

    pub fn sub(&self, o: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&o.data) {
            *a -= b;
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> i128 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut a = self.data.clone();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k * n + k] == 0 {
                let Some(p) = (k + 1..n).find(|&r| a[r * n + k] != 0) else {
                    return 0;
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
                }
            }
            prev = a[k * n + k];
        }
        sign * a[n * n - 1]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += f * row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: i128) {
        if f == 0 {
            return;
        }
        for j in 0..self.cols {
            let v = ck_add(self[(dst, j)], ck_mul(f, self[(src, j)]));
            self[(dst, j)] = v;
        }
    }

    /// col[dst] += f * col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: i128) {
        if f == 0 {
            return;
        }
        for i in 0..self.rows {
            let v = ck_add(self[(i, dst)], ck_mul(f, self[(i, src)]));
            self[(i, dst)] = v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)];
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = i128;
    fn index(&self, (i, j): (usize, usize)) -> &i128 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i128 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// `u * a * v = d` with `u`, `v` unimodular and `d` diagonal, `d_i | d_(i+1)`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<i128> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d[(i, i)]).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|&&x| x != 0).count()
    }
}

pub fn smith_normal_form(a: &IntMat) -> Snf {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMat::identity(m);
    let mut v = IntMat::identity(n);

    for t in 0..m.min(n) {
        loop {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = d[(i, j)];
                    if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return Snf { u, d, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = d[(t, t)];
            let mut clean = true;
            for i in t + 1..m {
                let q = d[(i, t)].div_euclid(p);
                d.add_row(i, t, -q);
                u.add_row(i, t, -q);
                clean &= d[(i, t)] == 0;
            }
            for j in t + 1..n {
                let q = d[(t, j)].div_euclid(p);
                d.add_col(j, t, -q);
                v.add_col(j, t, -q);
                clean &= d[(t, j)] == 0;
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| d[(i, j)] % p != 0));
            match offender {
                Some(i) => {
                    d.add_row(t, i, 1);
                    u.add_row(t, i, 1);
                }
                None => break,
            }
        }
        if d[(t, t)] < 0 {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    Snf { u, d, v }
}

/// Integer solutions of `a x = 0`, as columns of a basis. The result is
/// saturated: any integer vector in the rational kernel is an integer
/// combination of it.
pub fn integer_kernel(a: &IntMat) -> Vec<Vec<i128>> {
    let snf = smith_normal_form(a);
    let r = snf.rank();
    (r..a.cols).map(|j| snf.v.column(j)).collect()
}

/// `span_Q(vectors) ∩ Z^n`, returned as an HNF lattice.
pub fn saturate(vectors: &[Vec<i128>], n: usize) -> Lattice {
    if vectors.is_empty() {
        return Lattice::from_generators(&[], n);
    }
    let perp = integer_kernel(&IntMat::from_rows(vectors));
    if perp.is_empty() {
        return Lattice::from_generators(&(0..n).map(|i| unit(n, i)).collect::<Vec<_>>(), n);
    }
    let basis = integer_kernel(&IntMat::from_rows(&perp));
    Lattice::from_generators(&basis, n)
}

fn unit(n: usize, i: usize) -> Vec<i128> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Row-style Hermite normal form of the lattice generated by `rows`.
///
/// The result is echelon with positive pivots, entries above a pivot reduced
/// into `[0, pivot)`, and no zero rows.
pub fn hnf_row_lattice(rows: &[Vec<i128>], n: usize) -> IntMat {
    let mut m = if rows.is_empty() { IntMat::zeros(0, n) } else { IntMat::from_rows(rows) };
    assert_eq!(m.cols, n);
    let k = m.rows;
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..n {
        if r == k {
            break;
        }
        loop {
            let best = (r..k).filter(|&i| m[(i, c)] != 0).min_by_key(|&i| m[(i, c)].abs());
            let Some(b) = best else { break };
            m.swap_rows(r, b);
            let p = m[(r, c)];
            let mut done = true;
            for i in r + 1..k {
                let q = m[(i, c)].div_euclid(p);
                m.add_row(i, r, -q);
                done &= m[(i, c)] == 0;
            }
            if done {
                break;
            }
        }
        if m[(r, c)] == 0 {
            continue;
        }
        if m[(r, c)] < 0 {
            m.negate_row(r);
        }
        let p = m[(r, c)];
        for i in 0..r {
            let q = m[(i, c)].div_euclid(p);
            m.add_row(i, r, -q);
        }
        pivots.push(c);
        r += 1;
    }
    let rows: Vec<Vec<i128>> = (0..r).map(|i| m.row(i).to_vec()).collect();
    if rows.is_empty() {
        IntMat::zeros(0, n)
    } else {
        IntMat::from_rows(&rows)
    }
}

/// A sublattice of `Z^n` in canonical Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    pub dim: usize,
    pub hnf: IntMat,
}

impl Lattice {
    pub fn from_generators(rows: &[Vec<i128>], n: usize) -> Self {
        Lattice { dim: n, hnf: hnf_row_lattice(rows, n) }
    }

    pub fn rank(&self) -> usize {
        self.hnf.rows
    }

    pub fn basis(&self) -> Vec<Vec<i128>> {
        self.hnf.rows_vec()
    }

    pub fn contains(&self, v: &[i128]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        let mut r = 0;
        for c in 0..self.dim {
            if r < self.hnf.rows && self.hnf[(r, c)] != 0 {
                let p = self.hnf[(r, c)];
                if w[c] % p != 0 {
                    return false;
                }
                let q = w[c] / p;
                for j in c..self.dim {
                    w[j] = ck_add(w[j], ck_mul(-q, self.hnf[(r, j)]));
                }
                r += 1;
            } else if w[c] != 0 {
                return false;
            }
        }
        true
    }

    /// Index in its saturation, i.e. `[span ∩ Z^n : L]`, for full-rank lattices
    /// the product of the pivots.
    pub fn full_rank_index(&self) -> Option<i128> {
        (self.rank() == self.dim).then(|| (0..self.dim).map(|i| self.hnf[(i, i)]).product())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check_snf(a: &IntMat) -> Result<(), TestCaseError> {
        let s = smith_normal_form(a);
        prop_assert_eq!(s.u.mul(a).mul(&s.v), s.d.clone());
        prop_assert_eq!(s.u.det().abs(), 1);
        prop_assert_eq!(s.v.det().abs(), 1);
        let diag = s.diagonal();
        for i in 0..s.d.rows {
            for j in 0..s.d.cols {
                if i != j {
                    prop_assert_eq!(s.d[(i, j)], 0);
                }
            }
        }
        for w in diag.windows(2) {
            prop_assert!(w[0] >= 0);
            if w[0] == 0 {
                prop_assert_eq!(w[1], 0);
            } else {
                prop_assert_eq!(w[1] % w[0], 0);
            }
        }
        Ok(())
    }

    #[test]
    fn snf_of_scalar_matrices() {
        let two = IntMat::from_rows(
            &(0..6)
                .map(|i| {
                    let mut r = vec![0; 6];
                    r[i] = 2;
                    r
                })
                .collect::<Vec<_>>(),
        );
        assert_eq!(smith_normal_form(&two).diagonal(), vec![2; 6]);
        let minus = IntMat::from_rows(
            &(0..6)
                .map(|i| {
                    let mut r = vec![0; 6];
                    r[i] = -2;
                    r
                })
                .collect::<Vec<_>>(),
        );
        let s = smith_normal_form(&minus);
        assert_eq!(s.diagonal(), vec![2; 6]);
        assert_eq!(s.diagonal().iter().product::<i128>(), 64);
    }

    #[test]
    fn snf_known_example() {
        let a = IntMat::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(smith_normal_form(&a).diagonal(), vec![2, 6, 12]);
    }

    #[test]
    fn hnf_basics() {
        let id: Vec<Vec<i128>> = (0..6).map(|i| unit(6, i)).collect();
        assert_eq!(hnf_row_lattice(&id, 6), IntMat::identity(6));
        let twos: Vec<Vec<i128>> = (0..6).map(|i| unit(6, i).iter().map(|x| 2 * x).collect()).collect();
        let h = hnf_row_lattice(&twos, 6);
        for i in 0..6 {
            assert_eq!(h[(i, i)], 2);
        }
        let l = Lattice::from_generators(&[vec![2, 1], vec![0, 3]], 2);
        assert!(l.contains(&[2, 4]));
        assert!(!l.contains(&[1, 0]));
        assert_eq!(l.full_rank_index(), Some(6));
    }

    #[test]
    fn kernel_and_saturation() {
        let a = IntMat::from_rows(&[vec![2, 4, 0]]);
        let k = integer_kernel(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(a.apply(v), vec![0]);
        }
        let sat = saturate(&[vec![2, 4, 0]], 3);
        assert_eq!(sat.basis(), vec![vec![1, 2, 0]]);
    }

    fn arb_mat() -> impl Strategy<Value = IntMat> {
        (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
            prop::collection::vec(-10i128..=10, r * c)
                .prop_map(move |d| IntMat::from_rows(&d.chunks(c).map(<[i128]>::to_vec).collect::<Vec<_>>()))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn snf_contract(a in arb_mat()) {
            check_snf(&a)?;
        }

        #[test]
        fn hnf_is_canonical(a in arb_mat(), shuffle in any::<u64>()) {
            let rows = a.rows_vec();
            let h = hnf_row_lattice(&rows, a.cols);
            // generators in another order, plus a redundant sum, give the same form
            let mut alt = rows.clone();
            let k = alt.len();
            alt.rotate_left((shuffle as usize) % k);
            let sum: Vec<i128> = (0..a.cols).map(|j| rows.iter().map(|r| r[j]).sum()).collect();
            alt.push(sum);
            prop_assert_eq!(hnf_row_lattice(&alt, a.cols), h.clone());
            let lat = Lattice::from_generators(&rows, a.cols);
            for r in &rows {
                prop_assert!(lat.contains(r));
            }
        }
    }
}
