//! Coefficients: exact rational functions in `s` (with `q = s^2`), `l` (lambda)
//! and `p` (q1), their specializations at rational points, and the derived
//! parameters of the algebra.

mod parse;
pub mod poly;
mod scalar;

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use thiserror::Error;

pub use parse::parse_scalar;
pub use poly::{Poly, Q};
pub use scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at {0}")]
    Pole(String),
    #[error("cannot parse scalar: {0}")]
    Parse(String),
}

/// Field operations shared by symbolic scalars and specialized rationals.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, CoeffError>;

    fn div(&self, o: &Self) -> Result<Self, CoeffError> {
        Ok(self.mul(&o.inv()?))
    }
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar::int(0)
    }
    fn one() -> Self {
        Scalar::int(1)
    }
    fn from_i64(v: i64) -> Self {
        Scalar::int(v)
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Scalar::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Scalar::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Scalar::mul(self, o)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn inv(&self) -> Result<Self, CoeffError> {
        Scalar::inv(self)
    }
}

impl Coeff for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        Q::from_integer(v.into())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn inv(&self) -> Result<Self, CoeffError> {
        if Zero::is_zero(self) {
            Err(CoeffError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

/// Rational values for `s`, `l`, `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalPoint {
    pub s: Q,
    pub l: Q,
    pub p: Q,
}

impl EvalPoint {
    pub fn new(s: Q, l: Q, p: Q) -> Self {
        EvalPoint { s, l, p }
    }

    pub fn from_ints(s: (i64, i64), l: (i64, i64), p: (i64, i64)) -> Self {
        let f = |(a, b): (i64, i64)| Q::new(a.into(), b.into());
        EvalPoint::new(f(s), f(l), f(p))
    }

    pub fn values(&self) -> [Q; 3] {
        [self.s.clone(), self.l.clone(), self.p.clone()]
    }

    /// A point with small numerators and denominators at which every derived
    /// parameter is finite and nonzero and `l` avoids `±q^k` for `|k| <= 8`.
    pub fn random<R: Rng>(rng: &mut R) -> Self {
        loop {
            let mut pick = || {
                let a: i64 = rng.gen_range(-30..=30);
                let b: i64 = rng.gen_range(1..=20);
                Q::new(a.into(), b.into())
            };
            let pt = EvalPoint::new(pick(), pick(), pick());
            if Params::<Q>::at(&pt).is_ok() && !pt.l_is_power_of_q(8) {
                return pt;
            }
        }
    }

    fn l_is_power_of_q(&self, bound: i32) -> bool {
        let q = &self.s * &self.s;
        if Zero::is_zero(&q) {
            return false;
        }
        (-bound..=bound).any(|k| {
            let qk = num_traits::pow::Pow::pow(&q, k);
            self.l == qk || self.l == -qk
        })
    }
}

/// `k` random points drawn from a ChaCha stream seeded with `seed`.
pub fn seeded_points(seed: u64, k: usize) -> Vec<EvalPoint> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..k).map(|_| EvalPoint::random(&mut rng)).collect()
}

impl fmt::Display for EvalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={}, l={}, p={}", self.s, self.l, self.p)
    }
}

/// The parameters of the algebra over a coefficient field.
#[derive(Debug, Clone)]
pub struct Params<F: Coeff> {
    pub s: F,
    pub l: F,
    pub l_inv: F,
    pub q: F,
    pub q_inv: F,
    /// q1
    pub p: F,
    /// q0 = 1/q
    pub q0: F,
    pub q0_inv: F,
    pub delta: F,
    pub x: F,
    pub x_inv: F,
    pub a: F,
}

impl<F: Coeff> Params<F> {
    /// Builds every derived constant from `s`, `l`, `p`; fails at a pole or
    /// where `delta`, `x` or `A` vanish.
    pub fn from_base(s: F, l: F, p: F) -> Result<Self, CoeffError> {
        let q = s.mul(&s);
        let q_inv = q.inv()?;
        let l_inv = l.inv()?;
        let q0 = q_inv.clone();
        let q0_inv = q.clone();
        let delta = q.sub(&q_inv);
        let x = delta.sub(&l).add(&l_inv).div(&delta)?;
        let x_inv = x.inv()?;
        let a = p.mul(&x).div(&F::one().sub(&q0.mul(&l)))?;
        if a.is_zero() || p.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Params { s, l, l_inv, q, q_inv, p, q0, q0_inv, delta, x, x_inv, a })
    }

    pub fn a_inv(&self) -> F {
        self.a.inv().expect("A is nonzero by construction")
    }
}

impl Params<Scalar> {
    pub fn symbolic() -> Self {
        Params::from_base(Scalar::s(), Scalar::l(), Scalar::p()).expect("generic parameters")
    }

    /// The specialization used by the tensor representation of rank `big_n`:
    /// `l = q^(1 - N)` and `p = 1/q - 1`, still symbolic in `s`.
    pub fn tensor(big_n: usize) -> Self {
        let e = 2 * (1 - big_n as i32);
        let l = Scalar::laurent_monomial(<Q as One>::one(), [e, 0, 0]);
        let p = Scalar::laurent_monomial(<Q as One>::one(), [-2, 0, 0]).sub(&Scalar::int(1));
        Params::from_base(Scalar::s(), l, p).expect("tensor parameters are generic in s")
    }
}

impl Params<Q> {
    pub fn at(pt: &EvalPoint) -> Result<Self, CoeffError> {
        Params::from_base(pt.s.clone(), pt.l.clone(), pt.p.clone())
            .map_err(|_| CoeffError::Pole(pt.to_string()))
    }
}

/// `delta = q - 1/q`.
pub fn delta() -> Scalar {
    Params::symbolic().delta
}

/// `x = (delta - l + 1/l) / delta`.
pub fn x() -> Scalar {
    Params::symbolic().x
}

/// `A = q1 x / (1 - q0 l)`.
pub fn a_param() -> Scalar {
    Params::symbolic().a
}

pub fn star_scalar(c: &Scalar) -> Scalar {
    c.star()
}

pub fn specialize(c: &Scalar, pt: &EvalPoint) -> Result<Q, CoeffError> {
    c.specialize(pt)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq(a: i64, b: i64) -> Q {
        Q::new(a.into(), b.into())
    }

    #[test]
    fn delta_at_s_two() {
        let pt = EvalPoint::from_ints((2, 1), (1, 1), (1, 1));
        assert_eq!(delta().specialize(&pt).unwrap(), qq(15, 4));
    }

    #[test]
    fn x_and_a_at_q_four() {
        let pt = EvalPoint::from_ints((2, 1), (3, 1), (1, 1));
        // Hand evaluation: delta = 15/4, x = (15/4 - 3 + 1/3) / (15/4).
        let d = qq(15, 4);
        let x_val = (d.clone() - qq(3, 1) + qq(1, 3)) / d;
        assert_eq!(x_val, qq(13, 45));
        assert_eq!(x().specialize(&pt).unwrap(), x_val);
        let a_val = x_val / (qq(1, 1) - qq(3, 4));
        assert_eq!(a_param().specialize(&pt).unwrap(), a_val);
        assert_eq!(a_val, qq(52, 45));
    }

    #[test]
    fn star_flips_delta_and_maps_a() {
        let pr = Params::symbolic();
        assert_eq!(pr.delta.star(), pr.delta.neg());
        let expect = pr.a.sub(&pr.p.mul(&pr.x)).div(&pr.q0).unwrap();
        assert_eq!(pr.a.star(), expect);
        assert_eq!(pr.p.star().star(), pr.p);
    }

    #[test]
    fn pole_is_reported() {
        let pt = EvalPoint::from_ints((1, 1), (2, 1), (1, 1));
        assert!(matches!(x().specialize(&pt), Err(CoeffError::Pole(_))));
    }

    #[test]
    fn canonical_form_of_delta() {
        assert_eq!(delta().canonical(), "s^2 - s^-2");
    }
}
