//! The tensor representation on `V^{⊗n}` built from the `U_q(so_N)`
//! R-matrix, its weighted matrix trace, and the spectral-parameter
//! Yang-Baxter and reflection equation checks.

mod baxter;
mod matrix;

use std::collections::HashMap;

use crate::algebra::{Element, Letter};
use crate::coeffs::{Coeff, CoeffError, EvalPoint, Params, Scalar, Q};

pub use baxter::{baxter_r, reflection_k, reflection_residual, reflection_residual_with, ybe_residual, TPoly};
pub use matrix::Mat;

/// Rank `N = 2m + 1` and the ordered index set `-N+2, -N+4, ..., -1, 0, 1, ..., N-2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepConfig {
    pub big_n: usize,
    pub index: Vec<i32>,
}

impl RepConfig {
    pub fn new(big_n: usize) -> Self {
        assert!(big_n >= 3 && big_n % 2 == 1, "N must be odd and at least 3");
        let top = big_n as i32 - 2;
        let mut index: Vec<i32> = (0..(big_n - 1) / 2).map(|k| -top + 2 * k as i32).collect();
        index.push(0);
        index.extend((0..(big_n - 1) / 2).map(|k| 1 + 2 * k as i32));
        RepConfig { big_n, index }
    }

    fn pos(&self, i: i32) -> usize {
        self.index.iter().position(|&v| v == i).expect("index in I")
    }

    /// Position of `f_{a,b} ⊗ f_{c,d}` in an `N^2` matrix.
    fn pair(&self, a: i32, c: i32) -> usize {
        self.pos(a) * self.big_n + self.pos(c)
    }

    pub fn params(&self) -> Params<Scalar> {
        Params::tensor(self.big_n)
    }
}

fn s_pow(k: i32) -> Scalar {
    Scalar::laurent_monomial(Q::from_integer(1.into()), [k, 0, 0])
}

pub fn build_b(cfg: &RepConfig) -> Mat<Scalar> {
    let d = cfg.big_n * cfg.big_n;
    let mut m = Mat::zero(d);
    let delta = cfg.params().delta;
    for &i in &cfg.index {
        for &j in &cfg.index {
            if i == j && i != 0 {
                m.add_at(cfg.pair(i, i), cfg.pair(i, i), &s_pow(2));
            }
            if i == -j && i != 0 {
                m.add_at(cfg.pair(i, -i), cfg.pair(-i, i), &s_pow(-2));
            }
            if i == 0 && j == 0 {
                m.add_at(cfg.pair(0, 0), cfg.pair(0, 0), &Scalar::int(1));
            }
            if i != j && i != -j {
                m.add_at(cfg.pair(i, j), cfg.pair(j, i), &Scalar::int(1));
            }
            if i < j {
                m.add_at(cfg.pair(i, j), cfg.pair(i, j), &delta);
            }
            if j < -i {
                m.add_at(cfg.pair(i, -i), cfg.pair(j, -j), &delta.mul(&s_pow(i + j)).neg());
            }
        }
    }
    m
}

pub fn build_e(cfg: &RepConfig) -> Mat<Scalar> {
    let mut m = Mat::zero(cfg.big_n * cfg.big_n);
    for &i in &cfg.index {
        for &j in &cfg.index {
            m.set(cfg.pair(i, -i), cfg.pair(j, -j), s_pow(i + j));
        }
    }
    m
}

pub fn build_f(cfg: &RepConfig) -> Mat<Scalar> {
    let mut m = Mat::zero(cfg.big_n);
    let q1 = s_pow(-2).sub(&Scalar::int(1));
    for &i in &cfg.index {
        if i == 0 {
            m.set(cfg.pos(0), cfg.pos(0), Scalar::int(-1));
        } else {
            m.set(cfg.pos(-i), cfg.pos(i), s_pow(-1));
        }
        if i > 0 {
            m.add_at(cfg.pos(i), cfg.pos(i), &q1);
        }
    }
    m
}

pub fn build_d(cfg: &RepConfig) -> Mat<Scalar> {
    Mat::diagonal(cfg.index.iter().map(|&i| s_pow(2 * i)).collect())
}

/// `phi` on `n` strands over coefficients `F`.
pub struct Rep<F: Coeff> {
    pub cfg: RepConfig,
    pub n: usize,
    pub params: Params<F>,
    b: Mat<F>,
    e: Mat<F>,
    f: Mat<F>,
    d: Mat<F>,
    gens: std::cell::RefCell<HashMap<Letter, Mat<F>>>,
}

impl Rep<Scalar> {
    pub fn symbolic(cfg: RepConfig, n: usize) -> Self {
        let params = cfg.params();
        Rep::from_parts(cfg.clone(), n, params, build_b(&cfg), build_e(&cfg), build_f(&cfg), build_d(&cfg))
    }
}

impl Rep<Q> {
    /// The representation with `s` set to a rational value; only `pt.s` is used.
    pub fn numeric(cfg: RepConfig, n: usize, s: &Q) -> Result<Self, CoeffError> {
        let pt = EvalPoint::new(s.clone(), Q::from_integer(1.into()), Q::from_integer(1.into()));
        let sp = |c: &Scalar| c.specialize(&pt);
        let pr = cfg.params();
        let params = Params::from_base(sp(&pr.s)?, sp(&pr.l)?, sp(&pr.p)?)?;
        let b = build_b(&cfg).try_map(sp)?;
        let e = build_e(&cfg).try_map(sp)?;
        let f = build_f(&cfg).try_map(sp)?;
        let d = build_d(&cfg).try_map(sp)?;
        Ok(Rep::from_parts(cfg, n, params, b, e, f, d))
    }
}

impl<F: Coeff> Rep<F> {
    fn from_parts(cfg: RepConfig, n: usize, params: Params<F>, b: Mat<F>, e: Mat<F>, f: Mat<F>, d: Mat<F>) -> Self {
        Rep { cfg, n, params, b, e, f, d, gens: std::cell::RefCell::new(HashMap::new()) }
    }

    pub fn dim(&self) -> usize {
        self.cfg.big_n.pow(self.n as u32)
    }

    pub fn b(&self) -> &Mat<F> {
        &self.b
    }

    pub fn e(&self) -> &Mat<F> {
        &self.e
    }

    pub fn f(&self) -> &Mat<F> {
        &self.f
    }

    /// `1^{⊗a} ⊗ m ⊗ 1^{⊗rest}` on `n` strands.
    fn insert(&self, a: usize, m: &Mat<F>, width: usize) -> Mat<F> {
        let nn = self.cfg.big_n;
        let left = Mat::identity(nn.pow(a as u32));
        let right = Mat::identity(nn.pow((self.n - a - width) as u32));
        left.kron(m).kron(&right)
    }

    pub fn generator(&self, l: Letter) -> Mat<F> {
        if let Some(m) = self.gens.borrow().get(&l) {
            return m.clone();
        }
        let pr = &self.params;
        let m = match l {
            Letter::Y => self.insert(0, &self.f, 1),
            Letter::Yinv => {
                // Y^-1 = q (Y - q1)
                let id = Mat::identity(self.cfg.big_n);
                let finv = self.f.sub(&id.scale(&pr.p)).scale(&pr.q);
                self.insert(0, &finv, 1)
            }
            Letter::X(i) => self.insert(i as usize - 1, &self.b, 2),
            Letter::Xinv(i) => {
                let id = Mat::identity(self.b.dim());
                let binv = self.b.sub(&id.scale(&pr.delta)).add(&self.e.scale(&pr.delta));
                self.insert(i as usize - 1, &binv, 2)
            }
            Letter::E(i) => self.insert(i as usize - 1, &self.e, 2),
        };
        self.gens.borrow_mut().insert(l, m.clone());
        m
    }

    pub fn word(&self, w: &[Letter]) -> Mat<F> {
        let mut m = Mat::identity(self.dim());
        for l in w {
            m = m.mul(&self.generator(*l));
        }
        m
    }

    pub fn represent(&self, a: &Element<F>) -> Mat<F> {
        let mut m = Mat::zero(self.dim());
        for (w, c) in a.terms() {
            m = m.add(&self.word(w).scale(c));
        }
        m
    }

    fn weights(&self) -> Vec<F> {
        let dd: Vec<F> = (0..self.cfg.big_n).map(|i| self.d.get(i, i)).collect();
        let mut out = vec![F::one()];
        for _ in 0..self.n {
            out = out.iter().flat_map(|a| dd.iter().map(move |b| a.mul(b))).collect();
        }
        out
    }

    /// `Tr(M D^{⊗n}) / Tr(D^{⊗n})`.
    pub fn psi(&self, m: &Mat<F>) -> F {
        let w = self.weights();
        let mut num = F::zero();
        let mut den = F::zero();
        for (i, wi) in w.iter().enumerate() {
            num = num.add(&m.get(i, i).mul(wi));
            den = den.add(wi);
        }
        num.div(&den).expect("Tr(D) is nonzero")
    }
}
