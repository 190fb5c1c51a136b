//! Dotted Brauer diagrams: the classical shadow of the algebra, with its own
//! loop-counting trace.
//!
//! Points `0..n` are the top row `t1..tn` and `n..2n` the bottom row
//! `b1..bn`. In a product `d1 d2` the bottom row of `d1` is glued to the top
//! row of `d2`.

mod laurent;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::{spanning_set, Letter};

pub use laurent::XA;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed diagram text: {0}")]
    Parse(String),
    #[error("not a perfect matching on {0} strands")]
    Matching(usize),
}

/// A perfect matching on `2n` points with a dot parity per arc.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DottedDiagram {
    partner: Vec<usize>,
    dot: Vec<bool>,
}

impl DottedDiagram {
    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|p| if p < n { p + n } else { p - n }).collect();
        DottedDiagram { partner, dot: vec![false; 2 * n] }
    }

    /// Builds a diagram from arcs `(p, q, dot)` given as point indices.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize, bool)]) -> Result<Self, DiagramError> {
        let mut partner = vec![usize::MAX; 2 * n];
        let mut dot = vec![false; 2 * n];
        for &(p, q, d) in arcs {
            if p >= 2 * n || q >= 2 * n || p == q || partner[p] != usize::MAX || partner[q] != usize::MAX {
                return Err(DiagramError::Matching(n));
            }
            partner[p] = q;
            partner[q] = p;
            dot[p] = d;
            dot[q] = d;
        }
        if partner.contains(&usize::MAX) {
            return Err(DiagramError::Matching(n));
        }
        Ok(DottedDiagram { partner, dot })
    }

    pub fn strands(&self) -> usize {
        self.partner.len() / 2
    }

    /// Arcs sorted by first endpoint.
    pub fn arcs(&self) -> Vec<(usize, usize, bool)> {
        (0..self.partner.len()).filter(|&p| p < self.partner[p]).map(|p| (p, self.partner[p], self.dot[p])).collect()
    }

    /// Transposition of strands `i` and `i + 1` (1-based).
    pub fn crossing(n: usize, i: usize) -> Self {
        let mut d = DottedDiagram::identity(n);
        let (a, b) = (i - 1, i);
        d.partner[a] = b + n;
        d.partner[b + n] = a;
        d.partner[b] = a + n;
        d.partner[a + n] = b;
        d
    }

    /// Cap on top points `i, i + 1` and cup on the matching bottom points.
    pub fn cup_cap(n: usize, i: usize) -> Self {
        let mut d = DottedDiagram::identity(n);
        let (a, b) = (i - 1, i);
        d.partner[a] = b;
        d.partner[b] = a;
        d.partner[a + n] = b + n;
        d.partner[b + n] = a + n;
        d
    }

    /// The identity with a dot on strand `i` (1-based).
    pub fn dotted(n: usize, i: usize) -> Self {
        let mut d = DottedDiagram::identity(n);
        d.dot[i - 1] = true;
        d.dot[i - 1 + n] = true;
        d
    }

    /// Mirror image across the horizontal axis; dots are kept.
    pub fn star(&self) -> Self {
        let n = self.strands();
        let flip = |p: usize| if p < n { p + n } else { p - n };
        let mut partner = vec![0; 2 * n];
        let mut dot = vec![false; 2 * n];
        for p in 0..2 * n {
            partner[flip(p)] = flip(self.partner[p]);
            dot[flip(p)] = self.dot[p];
        }
        DottedDiagram { partner, dot }
    }

    /// Stacks `self` over `o`. Returns the result, the number of closed
    /// undotted loops and the number of closed dotted loops.
    pub fn compose(&self, o: &Self) -> (Self, usize, usize) {
        let n = self.strands();
        assert_eq!(n, o.strands(), "composing diagrams on different strand counts");
        // Vertices: 0..n top of self, n..2n middle, 2n..3n bottom of o.
        let upper = |v: usize| self.partner[v];
        let lower = |v: usize| o.partner[v - n] + n;
        let upper_dot = |v: usize| self.dot[v];
        let lower_dot = |v: usize| o.dot[v - n];
        let is_middle = |v: usize| (n..2 * n).contains(&v);
        let mut seen_mid = vec![false; n];
        let mut partner = vec![0; 2 * n];
        let mut dot = vec![false; 2 * n];
        let out_index = |v: usize| if v < n { v } else { v - n };
        for start in (0..n).chain(2 * n..3 * n) {
            let mut v = start;
            let mut parity = false;
            let mut in_upper = start < n;
            loop {
                let (w, d) = if in_upper { (upper(v), upper_dot(v)) } else { (lower(v), lower_dot(v)) };
                parity ^= d;
                if !is_middle(w) {
                    partner[out_index(start)] = out_index(w);
                    dot[out_index(start)] = parity;
                    break;
                }
                seen_mid[w - n] = true;
                v = w;
                in_upper = !in_upper;
            }
        }
        let (mut n0, mut n1) = (0, 0);
        for m in 0..n {
            if seen_mid[m] {
                continue;
            }
            let start = m + n;
            let mut v = start;
            let mut parity = false;
            let mut in_upper = true;
            loop {
                seen_mid[v - n] = true;
                let (w, d) = if in_upper { (upper(v), upper_dot(v)) } else { (lower(v), lower_dot(v)) };
                parity ^= d;
                in_upper = !in_upper;
                v = w;
                if v == start {
                    break;
                }
            }
            if parity {
                n1 += 1;
            } else {
                n0 += 1;
            }
        }
        (DottedDiagram { partner, dot }, n0, n1)
    }

    /// Closed loops `(undotted, dotted)` after joining `t_i` to `b_i`.
    pub fn closure_loops(&self) -> (usize, usize) {
        let n = self.strands();
        let mut seen = vec![false; 2 * n];
        let (mut n0, mut n1) = (0, 0);
        for s in 0..2 * n {
            if seen[s] {
                continue;
            }
            let mut v = s;
            let mut parity = false;
            loop {
                seen[v] = true;
                let w = self.partner[v];
                seen[w] = true;
                parity ^= self.dot[v];
                v = if w < n { w + n } else { w - n };
                if v == s {
                    break;
                }
            }
            if parity {
                n1 += 1;
            } else {
                n0 += 1;
            }
        }
        (n0, n1)
    }

    /// `x^(n0 - n) A^n1`.
    pub fn trace(&self) -> XA {
        let (n0, n1) = self.closure_loops();
        XA::monomial(n0 as i32 - self.strands() as i32, n1 as i32)
    }

    /// Parses `[(t1,b1,0),(t2,b2,1)]`.
    pub fn parse(n: usize, text: &str) -> Result<Self, DiagramError> {
        let bad = || DiagramError::Parse(text.to_string());
        let body = text.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
        let point = |t: &str| -> Result<usize, DiagramError> {
            let t = t.trim();
            let (row, idx) = t.split_at(1.min(t.len()));
            let i: usize = idx.parse().map_err(|_| bad())?;
            if i == 0 || i > n {
                return Err(bad());
            }
            match row {
                "t" => Ok(i - 1),
                "b" => Ok(i - 1 + n),
                _ => Err(bad()),
            }
        };
        let mut arcs = Vec::new();
        for chunk in body.split(')').map(str::trim).filter(|c| !c.is_empty()) {
            let chunk = chunk.trim_start_matches(',').trim().strip_prefix('(').ok_or_else(bad)?;
            let f: Vec<&str> = chunk.split(',').collect();
            if f.len() != 3 {
                return Err(bad());
            }
            let d = match f[2].trim() {
                "0" => false,
                "1" => true,
                _ => return Err(bad()),
            };
            arcs.push((point(f[0])?, point(f[1])?, d));
        }
        DottedDiagram::from_arcs(n, &arcs)
    }
}

impl fmt::Display for DottedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.strands();
        let label = |p: usize| if p < n { format!("t{}", p + 1) } else { format!("b{}", p - n + 1) };
        let parts: Vec<String> =
            self.arcs().iter().map(|&(p, q, d)| format!("({},{},{})", label(p), label(q), d as u8)).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for DottedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A linear combination of diagrams with coefficients in `x`, `A`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DiagramElement {
    pub terms: BTreeMap<DottedDiagram, XA>,
}

impl DiagramElement {
    pub fn single(d: DottedDiagram, c: XA) -> Self {
        let mut e = DiagramElement::default();
        e.add_term(d, c);
        e
    }

    pub fn add_term(&mut self, d: DottedDiagram, c: XA) {
        let v = self.terms.entry(d.clone()).or_default().add(&c);
        if v.is_zero() {
            self.terms.remove(&d);
        } else {
            self.terms.insert(d, v);
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = DiagramElement::default();
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                let (ab, n0, n1) = a.compose(b);
                r.add_term(ab, c.mul(d).mul(&XA::monomial(n0 as i32, n1 as i32)));
            }
        }
        r
    }

    pub fn trace(&self) -> XA {
        self.terms.iter().fold(XA::zero(), |t, (d, c)| t.add(&c.mul(&d.trace())))
    }
}

/// Generator image under forgetting over and under crossings.
pub fn letter_shadow(n: usize, l: Letter) -> DottedDiagram {
    match l {
        Letter::Y | Letter::Yinv => DottedDiagram::dotted(n, 1),
        Letter::X(i) | Letter::Xinv(i) => DottedDiagram::crossing(n, i as usize),
        Letter::E(i) => DottedDiagram::cup_cap(n, i as usize),
    }
}

/// The shadow of a word: its diagram together with the collected loop factor.
pub fn word_shadow(n: usize, w: &[Letter]) -> DiagramElement {
    let mut d = DottedDiagram::identity(n);
    let (mut n0, mut n1) = (0, 0);
    for &l in w {
        let (next, a, b) = d.compose(&letter_shadow(n, l));
        d = next;
        n0 += a;
        n1 += b;
    }
    DiagramElement::single(d, XA::monomial(n0 as i32, n1 as i32))
}

/// Every dotted diagram on `n` strands.
pub fn all_diagrams(n: usize) -> Vec<DottedDiagram> {
    fn matchings(free: &[usize]) -> Vec<Vec<(usize, usize)>> {
        let Some((&a, rest)) = free.split_first() else { return vec![Vec::new()] };
        let mut out = Vec::new();
        for k in 0..rest.len() {
            let b = rest[k];
            let others: Vec<usize> = rest.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &p)| p).collect();
            for mut m in matchings(&others) {
                m.push((a, b));
                out.push(m);
            }
        }
        out
    }
    let points: Vec<usize> = (0..2 * n).collect();
    let mut out = Vec::new();
    for m in matchings(&points) {
        for mask in 0..1u32 << n {
            let arcs: Vec<(usize, usize, bool)> =
                m.iter().enumerate().map(|(k, &(p, q))| (p, q, mask >> k & 1 == 1)).collect();
            out.push(DottedDiagram::from_arcs(n, &arcs).expect("enumerated matchings are perfect"));
        }
    }
    out.sort();
    out
}

/// Checks that the Gram matrix `tr(a b*)` over all diagrams, at `A = x^-1`,
/// has unit diagonal and strictly lower `x`-degree off the diagonal in
/// every row. The determinant then has leading term `1`, so it is nonzero.
pub fn diagram_gram_nondegenerate(n: usize) -> bool {
    let ds = all_diagrams(n);
    for a in &ds {
        for b in &ds {
            let (ab, n0, n1) = a.compose(&b.star());
            let v = ab.trace().mul(&XA::monomial(n0 as i32, n1 as i32)).at_a_inverse_x();
            let ok = if a == b {
                v.len() == 1 && v.get(&0).is_some_and(|c| *c == crate::coeffs::Q::from_integer(1.into()))
            } else {
                v.keys().all(|&k| k < 0)
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// True when the shadows of `spanning_set(n)` are distinct and loop free and
/// cover every diagram.
pub fn shadow_is_bijective(n: usize) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    for w in spanning_set(n) {
        let s = word_shadow(n, &w);
        let Some((d, c)) = s.terms.iter().next() else { return false };
        if *c != XA::one() || !seen.insert(d.clone()) {
            return false;
        }
    }
    seen.len() == all_diagrams(n).len()
}
