//! Dense matrices over a [`FieldSpec`] with exact elimination.

use num::{One, Zero};

use crate::field::{FieldSpec, Q};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<Q>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Matrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vec<Q>]) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    pub fn col(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, other: &Matrix, f: FieldSpec) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = f.add(out.get(i, j), &f.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q], f: FieldSpec) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Q::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                f.reduce(&acc)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Reduced row echelon form in place; returns pivot columns in order.
    pub fn rref(&mut self, f: FieldSpec) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = f.inv(self.get(r, c)).expect("nonzero pivot");
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let rv = self.get(r, j);
                    if rv.is_zero() {
                        continue;
                    }
                    let v = f.sub(self.get(i, j), &f.mul(&factor, rv));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self, f: FieldSpec) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis of the right nullspace, one vector per free column, in column order.
    pub fn nullspace(&self, f: FieldSpec) -> Vec<Vec<Q>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(row, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Some solution of `self * x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[Q], f: FieldSpec) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, f.reduce(bi));
        }
        let pivots = aug.rref(f);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(row, self.cols).clone();
        }
        Some(x)
    }
}

/// Incrementally maintained echelon basis of a subspace of `F^n`.
#[derive(Clone, Debug)]
pub struct EchelonSpan {
    field: FieldSpec,
    dim: usize,
    rows: Vec<(usize, Vec<Q>)>,
}

impl EchelonSpan {
    pub fn new(field: FieldSpec, dim: usize) -> Self {
        EchelonSpan { field, dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.dim
    }

    /// Residual of `v` after elimination against the current rows.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let f = self.field;
        let mut w: Vec<Q> = v.iter().map(|x| f.reduce(x)).collect();
        for (p, row) in &self.rows {
            let c = w[*p].clone();
            if c.is_zero() {
                continue;
            }
            for (k, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    w[k] = f.sub(&w[k], &f.mul(&c, r));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns true when the span grew.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let f = self.field;
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(&w[p]).expect("nonzero");
        let w: Vec<Q> = w.iter().map(|x| f.mul(x, &inv)).collect();
        for (_, row) in self.rows.iter_mut() {
            let c = row[p].clone();
            if c.is_zero() {
                continue;
            }
            for k in 0..row.len() {
                if !w[k].is_zero() {
                    row[k] = f.sub(&row[k], &f.mul(&c, &w[k]));
                }
            }
        }
        self.rows.push((p, w));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::qi;

    #[test]
    fn nullspace_and_solve() {
        let f = FieldSpec::Rationals;
        let m = Matrix::from_rows(&[vec![qi(1), qi(1), qi(0)], vec![qi(0), qi(1), qi(1)]]);
        let ns = m.nullspace(f);
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0], f).iter().all(Zero::is_zero));
        let x = m.solve(&[qi(2), qi(3)], f).unwrap();
        assert_eq!(m.mul_vec(&x, f), vec![qi(2), qi(3)]);
        assert_eq!(m.rank(f), 2);
    }

    #[test]
    fn inconsistent_system() {
        let f = FieldSpec::Rationals;
        let m = Matrix::from_rows(&[vec![qi(1), qi(1)], vec![qi(2), qi(2)]]);
        assert!(m.solve(&[qi(1), qi(3)], f).is_none());
    }

    #[test]
    fn echelon_span_tracks_rank() {
        let f = FieldSpec::Prime(2);
        let mut s = EchelonSpan::new(f, 3);
        assert!(s.insert(&[qi(1), qi(1), qi(0)]));
        assert!(s.insert(&[qi(0), qi(1), qi(1)]));
        assert!(!s.insert(&[qi(1), qi(0), qi(1)]));
        assert_eq!(s.rank(), 2);
    }
}
