use std::collections::BTreeMap;

use crate::algebra::{Element, Letter};
use crate::coeffs::{Coeff, Params};

use super::{Mat, Rep};

/// `R_i(t) = -δt(t + qλ^-1) + (t - 1)(t + qλ^-1) X_i + δt(t - 1) e_i` as
/// its coefficients of `t^0, t^1, t^2`.
pub fn baxter_r<F: Coeff>(pr: &Params<F>, n: usize, i: u8) -> [Element<F>; 3] {
    let c = pr.q.mul(&pr.l_inv);
    let one = Element::<F>::one(n);
    let x = Element::word(n, vec![Letter::X(i)]);
    let e = Element::word(n, vec![Letter::E(i)]);
    let d = &pr.delta;
    [
        x.scale(&c.neg()),
        one.scale(&d.mul(&c).neg()).add(&x.scale(&c.sub(&F::one()))).add(&e.scale(&d.neg())),
        one.scale(&d.neg()).add(&x).add(&e.scale(d)),
    ]
}

/// `(1 - t^2) K(t) = t^2 q1 + (1 - t^2) Y` with `f1 = 1`, as coefficients
/// of `t^0, t^1, t^2`.
pub fn reflection_k<F: Coeff>(pr: &Params<F>, n: usize) -> [Element<F>; 3] {
    let one = Element::<F>::one(n);
    let y = Element::word(n, vec![Letter::Y]);
    [y.clone(), Element::zero(n), one.scale(&pr.p).sub(&y)]
}

/// Polynomial in two spectral parameters with matrix coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct TPoly<F: Coeff> {
    pub terms: BTreeMap<(u32, u32), Mat<F>>,
    dim: usize,
}

impl<F: Coeff> TPoly<F> {
    fn zero(dim: usize) -> Self {
        TPoly { terms: BTreeMap::new(), dim }
    }

    fn add_term(&mut self, k: (u32, u32), m: &Mat<F>) {
        let cur = self.terms.remove(&k).unwrap_or_else(|| Mat::zero(self.dim));
        let s = cur.add(m);
        if !s.is_zero() {
            self.terms.insert(k, s);
        }
    }

    /// `sum_k c_k a^k b^(deg - k)` for monomials `a`, `b`.
    fn subst(coeffs: &[Mat<F>], a: (u32, u32), b: (u32, u32)) -> Self {
        let deg = coeffs.len() as u32 - 1;
        let mut p = TPoly::zero(coeffs[0].dim());
        for (k, c) in coeffs.iter().enumerate() {
            let k = k as u32;
            p.add_term((a.0 * k + b.0 * (deg - k), a.1 * k + b.1 * (deg - k)), c);
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = TPoly::zero(self.dim);
        for (k1, m1) in &self.terms {
            for (k2, m2) in &o.terms {
                p.add_term((k1.0 + k2.0, k1.1 + k2.1), &m1.mul(m2));
            }
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (k, m) in &o.terms {
            p.add_term(*k, &m.scale(&F::one().neg()));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, t1: &F, t2: &F) -> Mat<F> {
        let pow = |t: &F, k: u32| (0..k).fold(F::one(), |a, _| a.mul(t));
        let mut m = Mat::zero(self.dim);
        for ((a, b), c) in &self.terms {
            m = m.add(&c.scale(&pow(t1, *a).mul(&pow(t2, *b))));
        }
        m
    }
}

fn images<F: Coeff>(rep: &Rep<F>, els: &[Element<F>; 3]) -> Vec<Mat<F>> {
    els.iter().map(|e| rep.represent(e)).collect()
}

/// `R_1(t1) R_2(t1 t2) R_1(t2) - R_2(t2) R_1(t1 t2) R_2(t1)` under the
/// representation; needs at least three strands.
pub fn ybe_residual<F: Coeff>(rep: &Rep<F>) -> TPoly<F> {
    let r1 = images(rep, &baxter_r(&rep.params, rep.n, 1));
    let r2 = images(rep, &baxter_r(&rep.params, rep.n, 2));
    let one = (0, 0);
    let (t1, t2, t12) = ((1, 0), (0, 1), (1, 1));
    let lhs = TPoly::subst(&r1, t1, one).mul(&TPoly::subst(&r2, t12, one)).mul(&TPoly::subst(&r1, t2, one));
    let rhs = TPoly::subst(&r2, t2, one).mul(&TPoly::subst(&r1, t12, one)).mul(&TPoly::subst(&r2, t1, one));
    lhs.sub(&rhs)
}

/// `R(t1/t2)(K(t1)⊗1)R(t1 t2)(K(t2)⊗1) - (K(t2)⊗1)R(t1 t2)(K(t1)⊗1)R(t1/t2)`
/// with every factor cleared of denominators by the same monomials on both
/// sides.
pub fn reflection_residual<F: Coeff>(rep: &Rep<F>) -> TPoly<F> {
    reflection_residual_with(rep, &reflection_k(&rep.params, rep.n))
}

/// The reflection residual for a cleared `K` given by its coefficients of
/// `t^0, t^1, t^2`.
pub fn reflection_residual_with<F: Coeff>(rep: &Rep<F>, k: &[Element<F>; 3]) -> TPoly<F> {
    let r = images(rep, &baxter_r(&rep.params, rep.n, 1));
    let k = images(rep, k);
    let one = (0, 0);
    let (t1, t2, t12) = ((1, 0), (0, 1), (1, 1));
    let r_ratio = TPoly::subst(&r, t1, t2);
    let r_prod = TPoly::subst(&r, t12, one);
    let (k1, k2) = (TPoly::subst(&k, t1, one), TPoly::subst(&k, t2, one));
    let lhs = r_ratio.mul(&k1).mul(&r_prod).mul(&k2);
    let rhs = k2.mul(&r_prod).mul(&k1).mul(&r_ratio);
    lhs.sub(&rhs)
}
