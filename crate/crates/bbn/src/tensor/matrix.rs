use std::collections::BTreeMap;
use std::fmt;

use crate::coeffs::Coeff;

/// Square sparse matrix stored by rows.
#[derive(Clone, PartialEq)]
pub struct Mat<F: Coeff> {
    dim: usize,
    rows: Vec<BTreeMap<usize, F>>,
}

impl<F: Coeff> Mat<F> {
    pub fn zero(dim: usize) -> Self {
        Mat { dim, rows: vec![BTreeMap::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Mat::diagonal((0..dim).map(|_| F::one()).collect())
    }

    pub fn diagonal(d: Vec<F>) -> Self {
        let mut m = Mat::zero(d.len());
        for (i, v) in d.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        self.rows[i].get(&j).cloned().unwrap_or_else(F::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        if v.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, v);
        }
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &F) {
        let cur = self.get(i, j);
        self.set(i, j, cur.add(v));
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (i, row) in o.rows.iter().enumerate() {
            for (j, v) in row {
                r.add_at(i, *j, v);
            }
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&F::one().neg()))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Mat::zero(self.dim);
        }
        Mat {
            dim: self.dim,
            rows: self.rows.iter().map(|r| r.iter().map(|(j, v)| (*j, v.mul(c))).collect()).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim, "dimension mismatch");
        let mut r = Mat::zero(self.dim);
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, F> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &o.rows[*k] {
                    let p = a.mul(b);
                    match acc.get_mut(j) {
                        Some(v) => *v = v.add(&p),
                        None => {
                            acc.insert(*j, p);
                        }
                    }
                }
            }
            acc.retain(|_, v| !v.is_zero());
            r.rows[i] = acc;
        }
        r
    }

    /// Kronecker product `self ⊗ o`.
    pub fn kron(&self, o: &Self) -> Self {
        let d = self.dim * o.dim;
        let mut r = Mat::zero(d);
        for (i1, row1) in self.rows.iter().enumerate() {
            for (j1, a) in row1 {
                for (i2, row2) in o.rows.iter().enumerate() {
                    for (j2, b) in row2 {
                        r.rows[i1 * o.dim + i2].insert(j1 * o.dim + j2, a.mul(b));
                    }
                }
            }
        }
        r
    }

    pub fn trace(&self) -> F {
        let mut t = F::zero();
        for i in 0..self.dim {
            t = t.add(&self.get(i, i));
        }
        t
    }

    pub fn map<G: Coeff>(&self, f: impl Fn(&F) -> G) -> Mat<G> {
        let mut r = Mat::zero(self.dim);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                r.set(i, *j, f(v));
            }
        }
        r
    }

    pub fn try_map<G: Coeff, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<Mat<G>, E> {
        let mut r = Mat::zero(self.dim);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                r.set(i, *j, f(v)?);
            }
        }
        Ok(r)
    }

    /// Row-major list of entries.
    pub fn dense(&self) -> Vec<F> {
        (0..self.dim).flat_map(|i| (0..self.dim).map(move |j| (i, j))).map(|(i, j)| self.get(i, j)).collect()
    }
}

impl<F: Coeff> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.dense().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", strs.join(", "))
    }
}
