//! The reduction engine.
//!
//! A word on `n` strands is in normal form when it contains at most one top
//! token, where the top tokens are `X_{n-1}`, `e_{n-1}` and the block
//! `Y'_n = X_{n-1} Y'_{n-1} X_{n-1}`, and the pieces on either side are in
//! normal form on `n - 1` strands. `Y'_n` commutes with every word on
//! `n - 1` strands, so it is always placed last.
//!
//! Two neighbouring top tokens `t1 w t2` are merged by reducing `w` one level
//! down to `v0 a v1` with `a` in `{1, X_{n-2}, e_{n-2}, Y'_{n-1}}`, sliding
//! `v0`, `v1` outside, and rewriting `t1 a t2` with the local rule table.

use std::cell::{Cell, RefCell};
use std::collections::HashMap;

use crate::coeffs::{Coeff, Params};

use super::element::Element;
use super::AlgebraError;
use super::word::{bar_word, yprime, yprime_inv, Letter, Word};

type Lin<F> = Vec<(Word, F)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    X,
    E,
    Z,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mid {
    One,
    X,
    E,
    W,
}

/// Reduction and conditional expectation over a fixed parameter set.
pub struct Engine<F: Coeff> {
    pub params: Params<F>,
    cache: RefCell<HashMap<(usize, Word), Lin<F>>>,
    eps_cache: RefCell<HashMap<(usize, Word), Lin<F>>>,
    step_cap: Option<usize>,
    steps: Cell<usize>,
}

/// True when `w` lives on `m - 1` strands.
fn word_below(w: &[Letter], m: usize) -> bool {
    m >= 1 && super::word::word_level(w) < m
}

fn cat(parts: &[&[Letter]]) -> Word {
    let mut w = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
    for p in parts {
        w.extend_from_slice(p);
    }
    w
}

fn accumulate<F: Coeff>(acc: &mut HashMap<Word, F>, w: Word, c: F) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&w) {
        Some(v) => *v = v.add(&c),
        None => {
            acc.insert(w, c);
        }
    }
}

fn finish<F: Coeff>(acc: HashMap<Word, F>) -> Lin<F> {
    let mut v: Lin<F> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}

impl<F: Coeff> Engine<F> {
    pub fn new(params: Params<F>) -> Self {
        Engine {
            params,
            cache: RefCell::new(HashMap::new()),
            eps_cache: RefCell::new(HashMap::new()),
            step_cap: None,
            steps: Cell::new(0),
        }
    }

    /// Bounds the number of uncached word reductions done by one
    /// [`Engine::try_reduce`] call.
    pub fn with_step_cap(mut self, cap: usize) -> Self {
        self.step_cap = Some(cap);
        self
    }

    /// Like [`Engine::reduce`] but fails once the step cap is exceeded.
    pub fn try_reduce(&self, e: &Element<F>) -> Result<Element<F>, AlgebraError> {
        self.steps.set(0);
        let r = self.reduce(e);
        match self.step_cap {
            Some(cap) if self.steps.get() > cap => {
                // Entries computed after the cap was hit are truncated.
                self.cache.borrow_mut().clear();
                Err(AlgebraError::StepCap(cap))
            }
            _ => Ok(r),
        }
    }

    /// Product of two elements on the same number of strands.
    pub fn try_mul(&self, a: &Element<F>, b: &Element<F>) -> Result<Element<F>, AlgebraError> {
        if a.strands() != b.strands() {
            return Err(AlgebraError::StrandMismatch(a.strands(), b.strands()));
        }
        self.try_reduce(&a.concat(b))
    }

    pub fn cache_size(&self) -> usize {
        self.cache.borrow().len()
    }

    /// Normal form of an element; the result is flagged as reduced.
    pub fn reduce(&self, e: &Element<F>) -> Element<F> {
        let n = e.strands().max(e.max_level());
        let mut acc = HashMap::new();
        for (w, c) in e.terms() {
            for (v, d) in self.reduce_word(n, w) {
                accumulate(&mut acc, v, c.mul(&d));
            }
        }
        Element::from_terms(e.strands(), finish(acc)).mark_reduced()
    }

    pub fn mul(&self, a: &Element<F>, b: &Element<F>) -> Element<F> {
        self.reduce(&a.concat(b))
    }

    /// Normal form of a single word viewed on `n` strands.
    pub fn reduce_word(&self, n: usize, w: &[Letter]) -> Lin<F> {
        let key = (n, w.to_vec());
        if let Some(v) = self.cache.borrow().get(&key) {
            return v.clone();
        }
        let v = self.reduce_uncached(n, w);
        self.cache.borrow_mut().insert(key, v.clone());
        v
    }

    fn reduce_sum(&self, n: usize, words: Vec<(Word, F)>) -> Lin<F> {
        let mut acc = HashMap::new();
        for (w, c) in words {
            if c.is_zero() {
                continue;
            }
            for (v, d) in self.reduce_word(n, &w) {
                accumulate(&mut acc, v, c.mul(&d));
            }
        }
        finish(acc)
    }

    fn reduce_uncached(&self, n: usize, w: &[Letter]) -> Lin<F> {
        let pr = &self.params;
        self.steps.set(self.steps.get() + 1);
        if self.step_cap.is_some_and(|c| self.steps.get() > c) {
            return Vec::new();
        }
        if w.is_empty() {
            return vec![(Vec::new(), F::one())];
        }
        assert!(n >= 1, "letter outside the algebra on 0 strands");
        if n == 1 {
            // a + b Y with Y^2 = q1 Y + q0.
            let (mut a, mut b) = (F::one(), F::zero());
            for l in w {
                let (na, nb) = match l {
                    Letter::Y => (b.mul(&pr.q0), a.add(&b.mul(&pr.p))),
                    Letter::Yinv => {
                        // Y^-1 = Y/q0 - q1/q0
                        let (ya, yb) = (b.mul(&pr.q0), a.add(&b.mul(&pr.p)));
                        let c = pr.p.mul(&pr.q0_inv);
                        (ya.mul(&pr.q0_inv).sub(&a.mul(&c)), yb.mul(&pr.q0_inv).sub(&b.mul(&c)))
                    }
                    other => panic!("letter {} on one strand", other),
                };
                a = na;
                b = nb;
            }
            let mut out = Vec::new();
            if !a.is_zero() {
                out.push((Vec::new(), a));
            }
            if !b.is_zero() {
                out.push((vec![Letter::Y], b));
            }
            return out;
        }
        let k = (n - 1) as u8;
        if let Some(i) = w.iter().position(|l| *l == Letter::Xinv(k)) {
            // X^-1 = X - delta + delta e
            let (pre, post) = (&w[..i], &w[i + 1..]);
            return self.reduce_sum(
                n,
                vec![
                    (cat(&[pre, &[Letter::X(k)], post]), F::one()),
                    (cat(&[pre, post]), pr.delta.neg()),
                    (cat(&[pre, &[Letter::E(k)], post]), pr.delta.clone()),
                ],
            );
        }
        let toks = self.tokens(n, w);
        match toks.len() {
            0 => self.reduce_word(n - 1, w),
            1 => {
                let (t, s, e) = toks[0];
                let (left, right) = (&w[..s], &w[e + 1..]);
                if t == Tok::Z {
                    let z = yprime(n);
                    let mut acc = HashMap::new();
                    for (u, c) in self.reduce_word(n - 1, &cat(&[left, right])) {
                        accumulate(&mut acc, cat(&[&u, &z]), c);
                    }
                    return finish(acc);
                }
                if t == Tok::X {
                    self.single_x(n, left, right)
                } else {
                    self.single_e(n, left, right)
                }
            }
            _ => {
                let (t1, s1, e1) = toks[0];
                let (t2, s2, e2) = toks[1];
                let (pre, mid, post) = (&w[..s1], &w[e1 + 1..s2], &w[e2 + 1..]);
                if t1 == Tok::Z || t2 == Tok::Z {
                    // Y'_n commutes with the middle part.
                    let words = self
                        .pair_rule(n, t1, t2)
                        .into_iter()
                        .map(|(r, c)| {
                            let w = if t1 == Tok::Z { cat(&[pre, mid, &r, post]) } else { cat(&[pre, &r, mid, post]) };
                            (w, c)
                        })
                        .collect();
                    return self.reduce_sum(n, words);
                }
                let mut words = Vec::new();
                for (v, c) in self.reduce_word(n - 1, mid) {
                    let (v0, a, v1) = self.split(n - 1, &v);
                    for (r, d) in self.triple_rule(n, t1, a, t2) {
                        words.push((cat(&[pre, v0, &r, v1, post]), c.mul(&d)));
                    }
                }
                self.reduce_sum(n, words)
            }
        }
    }

    /// Splits a normal word on `m` strands into the part on `m - 1` strands
    /// before its top token and the rest, and reports whether that token is `e`.
    fn cut(&self, m: usize, v: &[Letter]) -> (usize, bool) {
        if m == 1 {
            return (0, false);
        }
        match self.tokens(m, v).as_slice() {
            [] => (v.len(), false),
            [(t, s, _)] => (*s, *t == Tok::E),
            _ => panic!("non-normal word"),
        }
    }

    /// `left X right` as `s X c'` with a right chain `c'`. Terms where
    /// `right` starts with a cap are kept as `s X v`.
    fn single_x(&self, n: usize, left: &[Letter], right: &[Letter]) -> Lin<F> {
        let k = (n - 1) as u8;
        let mut acc = HashMap::new();
        let mut caps = Vec::new();
        for (v, c) in self.reduce_word(n - 1, right) {
            let (s, is_e) = self.cut(n - 1, &v);
            if is_e {
                caps.push((v, c));
                continue;
            }
            for (u, d) in self.reduce_word(n - 1, &cat(&[left, &v[..s]])) {
                accumulate(&mut acc, cat(&[&u, &[Letter::X(k)], &v[s..]]), c.mul(&d));
            }
        }
        if !caps.is_empty() {
            let l_inv = self.params.l_inv.clone();
            self.join_caps(n, left, &caps, Letter::X(k), l_inv, &mut acc);
        }
        finish(acc)
    }

    /// `left e right` as `c e s` with a left chain `c`. Terms where `left`
    /// ends in a cap are kept as `u e s`.
    fn single_e(&self, n: usize, left: &[Letter], right: &[Letter]) -> Lin<F> {
        let k = (n - 1) as u8;
        let mut acc = HashMap::new();
        let mut low = Vec::new();
        for (v, c) in self.reduce_word(n - 1, &bar_word(left)) {
            let (s, is_e) = self.cut(n - 1, &v);
            if is_e {
                low.push((bar_word(&v), c));
                continue;
            }
            let (head, tail) = (bar_word(&v[s..]), bar_word(&v[..s]));
            for (u, d) in self.reduce_word(n - 1, &cat(&[&tail, right])) {
                accumulate(&mut acc, cat(&[&head, &[Letter::E(k)], &u]), c.mul(&d));
            }
        }
        if !low.is_empty() {
            let mut caps = Vec::new();
            let mut plain = Vec::new();
            for (v, c) in self.reduce_word(n - 1, right) {
                if self.cut(n - 1, &v).1 {
                    caps.push((v, c));
                } else {
                    plain.push((v, c));
                }
            }
            for (l, c) in &low {
                for (u, d) in self.reduce_word(n - 1, l) {
                    for (r, f) in &plain {
                        accumulate(&mut acc, cat(&[&u, &[Letter::E(k)], r]), c.mul(&d).mul(f));
                    }
                }
                if !caps.is_empty() {
                    let mut part = HashMap::new();
                    self.join_caps(n, l, &caps, Letter::E(k), F::one(), &mut part);
                    for (w, d) in part {
                        accumulate(&mut acc, w, c.mul(&d));
                    }
                }
            }
        }
        finish(acc)
    }

    /// `left t right` where every word of `right` starts with a cap
    /// `m' e' r`. Where `left` ends in `h e' m` and `m m'` lies below both
    /// caps, `e' m m' t e' = f m m' e'`; other terms are kept.
    fn join_caps(&self, n: usize, left: &[Letter], caps: &Lin<F>, t: Letter, f: F, acc: &mut HashMap<Word, F>) {
        let mut keep: Vec<(Word, F)> = Vec::new();
        for (v, c) in self.reduce_word(n - 1, &bar_word(left)) {
            let (s, is_e) = self.cut(n - 1, &v);
            let bv = bar_word(&v);
            if !is_e {
                keep.push((bv, c));
                continue;
            }
            // bv = h e' m with m = bar(v[..s])
            let cut_at = bv.len() - s;
            for (r, d) in caps {
                let (s2, _) = self.cut(n - 1, r);
                let (m, m2) = (&bv[cut_at..], &r[..s2]);
                for (b, g) in self.reduce_word(n - 2, &cat(&[m, m2])) {
                    let coeff = c.mul(d).mul(&g);
                    if n >= 3 && self.cut(n - 2, &b).0 == b.len() && word_below(&b, n - 2) {
                        let w = cat(&[&bv[..cut_at], &b, &r[s2 + 1..]]);
                        for (u, h) in self.reduce_word(n - 1, &w) {
                            accumulate(acc, u, coeff.mul(&f).mul(&h));
                        }
                    } else {
                        for (u, h) in self.reduce_word(n - 1, &cat(&[&bv[..cut_at], &b])) {
                            accumulate(acc, cat(&[&u, &[t], &r[s2..]]), coeff.mul(&h));
                        }
                    }
                }
            }
        }
        for (l, c) in keep {
            for (u, d) in self.reduce_word(n - 1, &l) {
                for (r, g) in caps {
                    accumulate(acc, cat(&[&u, &[t], r]), c.mul(&d).mul(g));
                }
            }
        }
    }

    /// Top tokens of `w` on `n >= 2` strands as `(kind, first, last)` positions.
    fn tokens(&self, n: usize, w: &[Letter]) -> Vec<(Tok, usize, usize)> {
        let k = (n - 1) as u8;
        let pos: Vec<usize> = (0..w.len()).filter(|&i| w[i] == Letter::X(k) || w[i] == Letter::E(k)).collect();
        let wp = yprime(n - 1);
        let mut out = Vec::new();
        let mut j = 0;
        while j < pos.len() {
            let i = pos[j];
            if w[i] == Letter::X(k) && j + 1 < pos.len() {
                let i2 = pos[j + 1];
                if w[i2] == Letter::X(k) && w[i + 1..i2] == wp[..] {
                    out.push((Tok::Z, i, i2));
                    j += 2;
                    continue;
                }
            }
            out.push((if w[i] == Letter::X(k) { Tok::X } else { Tok::E }, i, i));
            j += 1;
        }
        out
    }

    /// Splits a normal word on `m` strands as `v0 a v1` with `v0`, `v1` on
    /// `m - 1` strands.
    fn split<'a>(&self, m: usize, v: &'a [Letter]) -> (&'a [Letter], Mid, &'a [Letter]) {
        if m == 1 {
            return match v {
                [] => (v, Mid::One, v),
                [Letter::Y] => (&v[..0], Mid::W, &v[..0]),
                _ => panic!("non-normal word on one strand"),
            };
        }
        let toks = self.tokens(m, v);
        match toks.as_slice() {
            [] => (v, Mid::One, &v[v.len()..]),
            [(t, s, e)] => {
                let a = match t {
                    Tok::X => Mid::X,
                    Tok::E => Mid::E,
                    Tok::Z => Mid::W,
                };
                (&v[..*s], a, &v[*e + 1..])
            }
            _ => panic!("non-normal word in split"),
        }
    }

    fn pair_rule(&self, n: usize, t1: Tok, t2: Tok) -> Lin<F> {
        let pr = &self.params;
        let k = (n - 1) as u8;
        let (x, e) = (Letter::X(k), Letter::E(k));
        let w = yprime(n - 1);
        let wi = yprime_inv(n - 1);
        let z = yprime(n);
        let dl = pr.delta.mul(&pr.l);
        match (t1, t2) {
            (Tok::X, Tok::X) => vec![(vec![], F::one()), (vec![x], pr.delta.clone()), (vec![e], dl.neg())],
            (Tok::X, Tok::E) | (Tok::E, Tok::X) => vec![(vec![e], pr.l.clone())],
            (Tok::E, Tok::E) => vec![(vec![e], pr.x.clone())],
            (Tok::X, Tok::Z) => vec![
                (cat(&[&w, &[x]]), F::one()),
                (z, pr.delta.clone()),
                (cat(&[&[e], &wi]), dl.neg()),
            ],
            (Tok::Z, Tok::X) => vec![
                (cat(&[&[x], &w]), F::one()),
                (z, pr.delta.clone()),
                (cat(&[&wi, &[e]]), dl.neg()),
            ],
            (Tok::E, Tok::Z) => vec![(cat(&[&[e], &wi]), pr.l.clone())],
            (Tok::Z, Tok::E) => vec![(cat(&[&wi, &[e]]), pr.l.clone())],
            (Tok::Z, Tok::Z) => vec![
                (cat(&[&[x], &w, &w, &[x]]), F::one()),
                (cat(&[&w, &z, &[x]]), pr.delta.clone()),
                (cat(&[&wi, &[e], &wi]), dl.neg()),
            ],
        }
    }

    fn triple_rule(&self, n: usize, t1: Tok, a: Mid, t2: Tok) -> Lin<F> {
        let pr = &self.params;
        let k = (n - 1) as u8;
        let (x, e) = (Letter::X(k), Letter::E(k));
        let w = || yprime(n - 1);
        let wi = || yprime_inv(n - 1);
        let one = F::one;
        match a {
            Mid::One => self.pair_rule(n, t1, t2),
            Mid::X => {
                let (xp, ep) = (Letter::X(k - 1), Letter::E(k - 1));
                match (t1, t2) {
                    (Tok::X, Tok::X) => vec![(vec![xp, x, xp], one())],
                    (Tok::X, Tok::E) => vec![(vec![ep, e], one())],
                    (Tok::E, Tok::X) => vec![(vec![e, ep], one())],
                    (Tok::E, Tok::E) => vec![(vec![e], pr.l_inv.clone())],
                    _ => unreachable!(),
                }
            }
            Mid::E => {
                let xpi = Letter::Xinv(k - 1);
                match (t1, t2) {
                    (Tok::X, Tok::X) => vec![(vec![xpi, e, xpi], one())],
                    (Tok::X, Tok::E) => vec![(vec![xpi, e], one())],
                    (Tok::E, Tok::X) => vec![(vec![e, xpi], one())],
                    (Tok::E, Tok::E) => vec![(vec![e], one())],
                    _ => unreachable!(),
                }
            }
            Mid::W => match (t1, t2) {
                (Tok::X, Tok::X) => vec![(cat(&[&[x], &w(), &[x]]), one())],
                (Tok::X, Tok::E) => vec![(cat(&[&wi(), &[e]]), one())],
                (Tok::E, Tok::X) => vec![(cat(&[&[e], &wi()]), one())],
                (Tok::E, Tok::E) => {
                    // e Y'_{n-1} e = x eps(Y'_{n-1}) e
                    let mut out = vec![(vec![e], pr.a.clone())];
                    let dli = pr.delta.mul(&pr.l_inv);
                    for j in 1..n - 1 {
                        out.push((cat(&[&yprime(j), &[e]]), dli.clone()));
                        out.push((cat(&[&yprime_inv(j), &[e]]), pr.delta.neg()));
                    }
                    out
                }
                _ => unreachable!(),
            },
        }
    }

    /// `eps_{m-1}(Y'_m)` as a linear combination of words on `m - 1` strands.
    pub fn eps_yprime(&self, m: usize) -> Lin<F> {
        let pr = &self.params;
        let mut out = vec![(Vec::new(), pr.a.mul(&pr.x_inv))];
        let c1 = pr.delta.mul(&pr.x_inv).mul(&pr.l_inv);
        let c2 = pr.delta.mul(&pr.x_inv).neg();
        for j in 1..m {
            out.push((yprime(j), c1.clone()));
            out.push((yprime_inv(j), c2.clone()));
        }
        out
    }

    /// Conditional expectation from `n` strands to `n - 1` strands of one
    /// word, returned in normal form on `n - 1` strands.
    pub fn eps_word(&self, n: usize, w: &[Letter]) -> Lin<F> {
        let key = (n, w.to_vec());
        if let Some(v) = self.eps_cache.borrow().get(&key) {
            return v.clone();
        }
        let pr = &self.params;
        let mut acc = HashMap::new();
        for (v, c) in self.reduce_word(n, w) {
            let words: Lin<F> = if n == 1 {
                match v.as_slice() {
                    [] => vec![(vec![], F::one())],
                    _ => vec![(vec![], pr.a.mul(&pr.x_inv))],
                }
            } else {
                let toks = self.tokens(n, &v);
                match toks.as_slice() {
                    [] => vec![(v.clone(), F::one())],
                    [(Tok::X, s, _)] => vec![(cat(&[&v[..*s], &v[s + 1..]]), pr.x_inv.mul(&pr.l_inv))],
                    [(Tok::E, s, _)] => vec![(cat(&[&v[..*s], &v[s + 1..]]), pr.x_inv.clone())],
                    [(Tok::Z, s, _)] => self
                        .eps_yprime(n)
                        .into_iter()
                        .map(|(y, d)| (cat(&[&v[..*s], &y]), d))
                        .collect(),
                    _ => panic!("non-normal word after reduction"),
                }
            };
            for (u, d) in self.reduce_sum(n.saturating_sub(1), words) {
                accumulate(&mut acc, u, c.mul(&d));
            }
        }
        let out = finish(acc);
        self.eps_cache.borrow_mut().insert(key, out.clone());
        out
    }

    /// Conditional expectation of an element on `n` strands.
    pub fn cond_expect(&self, a: &Element<F>) -> Element<F> {
        let n = a.strands();
        assert!(n >= 1, "no conditional expectation below one strand");
        let mut acc = HashMap::new();
        for (w, c) in a.terms() {
            for (u, d) in self.eps_word(n, w) {
                accumulate(&mut acc, u, c.mul(&d));
            }
        }
        Element::from_terms(n - 1, finish(acc)).mark_reduced()
    }

    /// Markov trace of a single word on `n` strands.
    pub fn trace_word(&self, n: usize, w: &[Letter]) -> F {
        let mut cur: Lin<F> = vec![(w.to_vec(), F::one())];
        for m in (1..=n).rev() {
            let mut acc = HashMap::new();
            for (v, c) in &cur {
                for (u, d) in self.eps_word(m, v) {
                    accumulate(&mut acc, u, c.mul(&d));
                }
            }
            cur = finish(acc);
        }
        let mut t = F::zero();
        for (v, c) in cur {
            debug_assert!(v.is_empty());
            t = t.add(&c);
        }
        t
    }

    pub fn trace(&self, a: &Element<F>) -> F {
        let n = a.strands().max(a.max_level());
        let mut t = F::zero();
        for (w, c) in a.terms() {
            t = t.add(&c.mul(&self.trace_word(n, w)));
        }
        t
    }

    /// Zero test. Normal forms of zero need not be empty, so a nonempty
    /// normal form is paired with every word of [`spanning_set`] under the
    /// trace form, which is nondegenerate for generic parameters.
    pub fn is_zero(&self, a: &Element<F>) -> bool {
        let r = self.reduce(a);
        if r.is_empty() {
            return true;
        }
        let n = r.strands().max(r.max_level());
        spanning_set(n).iter().all(|v| {
            let mut t = F::zero();
            for (w, c) in r.terms() {
                t = t.add(&c.mul(&self.trace_word(n, &cat(&[w, v]))));
            }
            t.is_zero()
        })
    }

    pub fn equal(&self, a: &Element<F>, b: &Element<F>) -> bool {
        self.is_zero(&a.sub(b))
    }

    /// Image in the Hecke quotient, where every `e` is sent to zero.
    pub fn project_hecke(&self, a: &Element<F>) -> Element<F> {
        self.reduce(a).drop_e_words()
    }
}

/// One word per dotted diagram on `n` strands: `s`, `s Y'_n`,
/// `c e_{n-1} s` with a left chain `c` and `s X_{n-1} c'` with a right
/// chain `c'`, where `s` runs over the set for `n - 1`.
pub fn spanning_set(n: usize) -> Vec<Word> {
    if n == 0 {
        return vec![Vec::new()];
    }
    if n == 1 {
        return vec![Vec::new(), vec![Letter::Y]];
    }
    let prev = spanning_set(n - 1);
    let k = (n - 1) as u8;
    let left_chain = |i: usize, d: bool| -> Word {
        let mut w = if d { yprime(i) } else { Vec::new() };
        w.extend((i..n - 1).map(|j| Letter::X(j as u8)));
        w
    };
    let mut out = Vec::with_capacity(prev.len() * (4 * n - 2));
    for s in &prev {
        out.push(s.clone());
    }
    for s in &prev {
        out.push(cat(&[s, &yprime(n)]));
    }
    for i in 1..n {
        for d in [false, true] {
            let c = left_chain(i, d);
            for s in &prev {
                out.push(cat(&[&c, &[Letter::E(k)], s]));
            }
            let c2 = bar_word(&c);
            for s in &prev {
                out.push(cat(&[s, &[Letter::X(k)], &c2]));
            }
        }
    }
    out
}
