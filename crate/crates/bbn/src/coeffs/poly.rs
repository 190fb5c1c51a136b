//! Sparse polynomials over the rationals in the three variables `s`, `l`, `p`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

/// Number of variables. Index 0 is `s`, 1 is `l` (lambda), 2 is `p` (q1).
pub const NVARS: usize = 3;
pub const VAR_NAMES: [&str; NVARS] = ["s", "l", "p"];

pub type Mono = [u32; NVARS];

/// Terms keyed by exponent vector; map order is lexicographic, so the leading
/// term is the last entry.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Q>,
}

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn mono_div(a: &Mono, b: &Mono) -> Option<Mono> {
    if a.iter().zip(b).all(|(x, y)| x >= y) {
        Some([a[0] - b[0], a[1] - b[1], a[2] - b[2]])
    } else {
        None
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Poly::monomial(c, [0; NVARS])
    }

    pub fn monomial(c: Q, m: Mono) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn var(i: usize) -> Self {
        let mut m = [0; NVARS];
        m[i] = 1;
        Poly::monomial(Q::one(), m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == [0; NVARS])
    }

    pub fn as_constant(&self) -> Option<Q> {
        if self.is_zero() {
            Some(Q::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Mono, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Q {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Q::zero)
    }

    fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, -c.clone());
        }
        r
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, d)| (*m, d * c)).collect(),
        }
    }

    pub fn mul_mono(&self, c: &Q, mo: &Mono) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, d)| (mono_mul(m, mo), d * c)).collect(),
        }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut r = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(mono_mul(m1, m2), c1 * c2);
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut r = Poly::one();
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        let (dm, dc) = d.leading().map(|(m, c)| (*m, c.clone()))?;
        let mut r = self.clone();
        let mut q = Poly::zero();
        while let Some((rm, rc)) = r.leading().map(|(m, c)| (*m, c.clone())) {
            let m = mono_div(&rm, &dm)?;
            let c = rc / &dc;
            r = r.sub(&d.mul_mono(&c, &m));
            q.add_term(m, c);
        }
        Some(q)
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_mono(&self) -> Mono {
        let mut it = self.terms.keys();
        let mut m = match it.next() {
            Some(m) => *m,
            None => return [0; NVARS],
        };
        for k in it {
            for i in 0..NVARS {
                m[i] = m[i].min(k[i]);
            }
        }
        m
    }

    pub fn shift_down(&self, by: &Mono) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (mono_div(m, by).expect("shift below zero"), c.clone()))
                .collect(),
        }
    }

    pub fn degree_in(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|m| m[v]).max()
    }

    pub fn has_var(&self, v: usize) -> bool {
        self.terms.keys().any(|m| m[v] > 0)
    }

    /// Coefficients of `self` viewed as a polynomial in variable `v`.
    pub fn coeffs_in(&self, v: usize) -> Vec<Poly> {
        let d = self.degree_in(v).unwrap_or(0) as usize;
        let mut out = vec![Poly::zero(); d + 1];
        for (m, c) in &self.terms {
            let mut mm = *m;
            mm[v] = 0;
            out[m[v] as usize].add_term(mm, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: usize, cs: &[Poly]) -> Poly {
        let mut r = Poly::zero();
        for (k, c) in cs.iter().enumerate() {
            for (m, x) in &c.terms {
                let mut mm = *m;
                mm[v] += k as u32;
                r.add_term(mm, x.clone());
            }
        }
        r
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, pt: &[Q; NVARS]) -> Q {
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..NVARS {
                for _ in 0..m[i] {
                    t *= &pt[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes each variable by a (Laurent) monomial given as exponent
    /// rows and a coefficient; returns the result multiplied by the
    /// monomial `shift` needed to keep exponents non-negative.
    pub fn substitute_monomial(&self, image: &[(Q, [i32; NVARS]); NVARS]) -> (Poly, [i32; NVARS]) {
        let mut raw: Vec<([i32; NVARS], Q)> = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = [0i32; NVARS];
            let mut coef = c.clone();
            for i in 0..NVARS {
                let (ref ci, ref ei) = image[i];
                for _ in 0..m[i] {
                    coef *= ci;
                }
                for j in 0..NVARS {
                    e[j] += ei[j] * m[i] as i32;
                }
            }
            raw.push((e, coef));
        }
        let mut low = [0i32; NVARS];
        for (e, _) in &raw {
            for j in 0..NVARS {
                low[j] = low[j].min(e[j]);
            }
        }
        let mut r = Poly::zero();
        for (e, c) in raw {
            let m = [
                (e[0] - low[0]) as u32,
                (e[1] - low[1]) as u32,
                (e[2] - low[2]) as u32,
            ];
            r.add_term(m, c);
        }
        (r, low)
    }

    /// Multiplies by the lcm of denominators and divides by the gcd of the
    /// numerators, leaving integer coefficients with unit content.
    fn integer_primitive(&self) -> Poly {
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(&(c.numer() * (&l / c.denom())));
        }
        if g.is_zero() {
            return self.clone();
        }
        let f = Q::new(l, g);
        self.scale(&f)
    }
}

/// Pseudo-remainder of `a` by `b` as polynomials in variable `v`.
fn prem(a: &Poly, b: &Poly, v: usize) -> Poly {
    let bc = b.coeffs_in(v);
    let db = bc.len() - 1;
    let lb = bc[db].clone();
    let mut r = a.clone();
    loop {
        let dr = match r.degree_in(v) {
            Some(d) if !r.is_zero() && d as usize >= db => d as usize,
            _ => return r,
        };
        let rc = r.coeffs_in(v);
        let lr = rc[dr].clone();
        let mut shift = [0; NVARS];
        shift[v] = (dr - db) as u32;
        let t = lr.mul_mono(&Q::one(), &shift);
        r = r.mul(&lb).sub(&t.mul(b));
    }
}

fn content_in(a: &Poly, v: usize) -> Poly {
    let mut g = Poly::zero();
    for c in a.coeffs_in(v) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_constant() {
            break;
        }
    }
    g
}

fn primitive_in(a: &Poly, v: usize) -> (Poly, Poly) {
    let c = content_in(a, v);
    let p = a.div_exact(&c).expect("content divides");
    (c, p)
}

/// Monic greatest common divisor. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let ma = a.min_mono();
    let mb = b.min_mono();
    let mg = [ma[0].min(mb[0]), ma[1].min(mb[1]), ma[2].min(mb[2])];
    let a = a.shift_down(&ma);
    let b = b.shift_down(&mb);
    let core = gcd_core(&a, &b);
    core.mul_mono(&Q::one(), &mg).monic()
}

fn gcd_core(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a.len() == 1 || b.len() == 1 {
        // A monomial-free polynomial shares no factor with a monomial.
        return Poly::one();
    }
    if let Some(q) = a.div_exact(b) {
        let _ = q;
        return b.monic();
    }
    if let Some(q) = b.div_exact(a) {
        let _ = q;
        return a.monic();
    }
    let v = match (0..NVARS).rev().find(|&v| a.has_var(v) || b.has_var(v)) {
        Some(v) => v,
        None => return Poly::one(),
    };
    if !a.has_var(v) {
        return gcd(a, &content_in(b, v));
    }
    if !b.has_var(v) {
        return gcd(&content_in(a, v), b);
    }
    let (ca, pa) = primitive_in(a, v);
    let (cb, pb) = primitive_in(b, v);
    let c = gcd(&ca, &cb);
    let (mut x, mut y) = if pa.degree_in(v) >= pb.degree_in(v) { (pa, pb) } else { (pb, pa) };
    while !y.is_zero() {
        let r = prem(&x, &y, v);
        x = y;
        if r.is_zero() {
            break;
        }
        if !r.has_var(v) {
            x = Poly::one();
            break;
        }
        y = primitive_in(&r.integer_primitive(), v).1;
    }
    let g = if x.has_var(v) { primitive_in(&x, v).1 } else { Poly::one() };
    g.mul(&c).monic()
}

fn fmt_q(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Renders the coefficient and monomial parts with explicit exponent shift.
pub(crate) fn fmt_term(c: &Q, e: &[i32; NVARS]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let vars: Vec<String> = (0..NVARS)
        .filter(|&i| e[i] != 0)
        .map(|i| if e[i] == 1 { VAR_NAMES[i].to_string() } else { format!("{}^{}", VAR_NAMES[i], e[i]) })
        .collect();
    if vars.is_empty() || !c.abs().is_one() {
        parts.push(fmt_q(&c.abs()));
    }
    parts.extend(vars);
    parts.join("*")
}

/// Joins signed terms, highest exponent vector first.
pub(crate) fn fmt_sum(terms: &[([i32; NVARS], Q)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (e, c)) in terms.iter().enumerate() {
        let body = fmt_term(c, e);
        if k == 0 {
            if c.is_negative() {
                s.push('-');
            }
        } else {
            s.push_str(if c.is_negative() { " - " } else { " + " });
        }
        s.push_str(&body);
    }
    s
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<([i32; NVARS], Q)> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| ([m[0] as i32, m[1] as i32, m[2] as i32], c.clone()))
            .collect();
        f.write_str(&fmt_sum(&terms))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn gcd_of_shared_linear_factor() {
        let s = Poly::var(0);
        let l = Poly::var(1);
        let f = s.sub(&l);
        let a = f.mul(&s.add(&Poly::one()));
        let b = f.mul(&l.add(&Poly::constant(q(2))));
        assert_eq!(gcd(&a, &b), f.monic());
    }

    #[test]
    fn gcd_coprime_is_one() {
        let s = Poly::var(0);
        let p = Poly::var(2);
        assert_eq!(gcd(&s.add(&Poly::one()), &p.add(&Poly::one())), Poly::one());
    }

    #[test]
    fn exact_division_round_trip() {
        let s = Poly::var(0);
        let l = Poly::var(1);
        let a = s.pow(3).add(&l).mul(&s.sub(&Poly::one()));
        assert_eq!(a.div_exact(&s.sub(&Poly::one())), Some(s.pow(3).add(&l)));
        assert_eq!(a.div_exact(&s.add(&Poly::one())), None);
    }
}
