use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::{One, Zero};


use super::poly::{fmt_sum, gcd, Mono, Poly, NVARS, Q};
use super::{CoeffError, EvalPoint};

/// An exact rational function in `s`, `l`, `p`, kept as a gcd-reduced
/// fraction with a monic denominator.
#[derive(Clone)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn from_parts(num: Poly, den: Poly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Scalar { num, den: Poly::one() };
        }
        if let Some(c) = den.as_constant() {
            return Scalar { num: num.scale(&c.recip()), den: Poly::one() };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let lc = den.leading_coeff().recip();
        Scalar { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn from_poly(p: Poly) -> Self {
        Scalar { num: p, den: Poly::one() }
    }

    pub fn rational(c: Q) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn int(v: i64) -> Self {
        Self::rational(Q::from_integer(v.into()))
    }

    /// `c * s^e0 * l^e1 * p^e2` with possibly negative exponents.
    pub fn laurent_monomial(c: Q, e: [i32; NVARS]) -> Self {
        let pos: Mono = [e[0].max(0) as u32, e[1].max(0) as u32, e[2].max(0) as u32];
        let neg: Mono = [(-e[0]).max(0) as u32, (-e[1]).max(0) as u32, (-e[2]).max(0) as u32];
        Scalar::normalized(Poly::monomial(c, pos), Poly::monomial(Q::one(), neg))
    }

    pub fn var(i: usize) -> Self {
        Self::from_poly(Poly::var(i))
    }

    pub fn s() -> Self {
        Self::var(0)
    }

    pub fn l() -> Self {
        Self::var(1)
    }

    pub fn p() -> Self {
        Self::var(2)
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_constant() && self.num == Poly::one()
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Scalar::normalized(self.num.add(&o.num), self.den.clone());
        }
        Scalar::normalized(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn neg(&self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::int(0);
        }
        if self.den.is_constant() && o.den.is_constant() {
            return Scalar::from_poly(self.num.mul(&o.num));
        }
        // Cross-cancel first so the products stay small.
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = o.den.div_exact(&g1).expect("gcd divides");
        let n2 = o.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let lc = den.leading_coeff().recip();
        Scalar { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn inv(&self) -> Result<Scalar, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Scalar::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar, CoeffError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<Scalar, CoeffError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut r = Scalar::int(1);
        for _ in 0..k.unsigned_abs() {
            r = r.mul(&base);
        }
        Ok(r)
    }

    /// The coefficient involution: `s -> 1/s`, `l -> 1/l`, `p -> -p*s^2`.
    pub fn star(&self) -> Scalar {
        let minus_one = -Q::one();
        let image = [
            (Q::one(), [-1, 0, 0]),
            (Q::one(), [0, -1, 0]),
            (minus_one, [2, 0, 1]),
        ];
        let (n, ln) = self.num.substitute_monomial(&image);
        let (d, ld) = self.den.substitute_monomial(&image);
        let shift = [ln[0] - ld[0], ln[1] - ld[1], ln[2] - ld[2]];
        let m = Scalar::laurent_monomial(Q::one(), shift);
        Scalar::normalized(n, d).mul(&m)
    }

    pub fn specialize(&self, pt: &EvalPoint) -> Result<Q, CoeffError> {
        let vals = pt.values();
        let d = self.den.eval(&vals);
        if d.is_zero() {
            return Err(CoeffError::Pole(pt.to_string()));
        }
        Ok(self.num.eval(&vals) / d)
    }

    /// Constant value if the scalar does not depend on any variable.
    pub fn as_rational(&self) -> Option<Q> {
        if self.den.is_constant() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Canonical text form, see the crate README for the grammar.
    pub fn canonical(&self) -> String {
        if let Some(t) = self.laurent_terms() {
            return fmt_sum(&t);
        }
        let num = self.num.to_string();
        if self.den == Poly::one() {
            num
        } else {
            format!("({})/({})", num, self.den)
        }
    }

    /// Terms of `num/den` as Laurent monomials when `den` is a monomial.
    pub fn laurent_terms(&self) -> Option<Vec<([i32; NVARS], Q)>> {
        if self.den.len() != 1 {
            return None;
        }
        let (dm, dc) = self.den.leading().map(|(m, c)| (*m, c.clone()))?;
        Some(
            self.num
                .terms()
                .rev()
                .map(|(m, c)| {
                    (
                        [m[0] as i32 - dm[0] as i32, m[1] as i32 - dm[1] as i32, m[2] as i32 - dm[2] as i32],
                        c / &dc,
                    )
                })
                .collect(),
        )
    }
}

impl PartialEq for Scalar {
    fn eq(&self, o: &Self) -> bool {
        // Both sides are normalized, so structural equality is exact.
        self.num == o.num && self.den == o.den
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.num.hash(h);
        self.den.hash(h);
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical())
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::int(0)
    }
}
