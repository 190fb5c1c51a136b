use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::coeffs::Q;

/// A Laurent polynomial in the loop parameters `x` and `A`, keyed by the
/// exponent pair `(deg_x, deg_A)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct XA(BTreeMap<(i32, i32), Q>);

impl XA {
    pub fn zero() -> Self {
        XA(BTreeMap::new())
    }

    pub fn one() -> Self {
        XA::monomial(0, 0)
    }

    pub fn monomial(dx: i32, da: i32) -> Self {
        let mut m = BTreeMap::new();
        m.insert((dx, da), Q::one());
        XA(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &Q)> {
        self.0.iter()
    }

    fn push(&mut self, k: (i32, i32), c: Q) {
        let v = self.0.entry(k).or_insert_with(Q::zero);
        *v += c;
        if v.is_zero() {
            self.0.remove(&k);
        }
    }

    pub fn add(&self, o: &XA) -> XA {
        let mut r = self.clone();
        for (k, c) in &o.0 {
            r.push(*k, c.clone());
        }
        r
    }

    pub fn mul(&self, o: &XA) -> XA {
        let mut r = XA::zero();
        for ((a, b), c) in &self.0 {
            for ((d, e), f) in &o.0 {
                r.push((a + d, b + e), c * f);
            }
        }
        r
    }

    /// Substitutes `A = x^-1`, leaving a Laurent polynomial in `x` alone.
    pub fn at_a_inverse_x(&self) -> BTreeMap<i32, Q> {
        let mut m: BTreeMap<i32, Q> = BTreeMap::new();
        for ((dx, da), c) in &self.0 {
            *m.entry(dx - da).or_insert_with(Q::zero) += c;
        }
        m.retain(|_, c| !c.is_zero());
        m
    }
}

impl fmt::Display for XA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .rev()
            .map(|((dx, da), c)| {
                let mut fac = Vec::new();
                match dx {
                    0 => {}
                    1 => fac.push("x".to_string()),
                    _ => fac.push(format!("x^{dx}")),
                }
                match da {
                    0 => {}
                    1 => fac.push("A".to_string()),
                    _ => fac.push(format!("A^{da}")),
                }
                let m = fac.join("*");
                match (c.is_one(), m.is_empty()) {
                    (_, true) => c.to_string(),
                    (true, false) => m,
                    (false, false) if *c == -Q::one() => format!("-{m}"),
                    _ => format!("{c}*{m}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

impl fmt::Debug for XA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
