use std::collections::BTreeMap;
use std::fmt;

use crate::coeffs::{parse_scalar, Coeff, Scalar};

use super::word::{format_word, parse_word, star_word, bar_word, word_level, Word, WordError};
use super::AlgebraError;

/// A finitely supported linear combination of words on `n` strands.
#[derive(Clone)]
pub struct Element<F: Coeff> {
    n: usize,
    terms: BTreeMap<Word, F>,
    reduced: bool,
}

impl<F: Coeff> Element<F> {
    pub fn zero(n: usize) -> Self {
        Element { n, terms: BTreeMap::new(), reduced: true }
    }

    pub fn one(n: usize) -> Self {
        Element::word(n, Vec::new())
    }

    pub fn word(n: usize, w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, F::one());
        Element { n, terms, reduced: false }
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, F)>>(n: usize, it: I) -> Self {
        let mut e = Element::zero(n);
        for (w, c) in it {
            e.add_term(w, c);
        }
        e.reduced = false;
        e
    }

    pub(crate) fn mark_reduced(mut self) -> Self {
        self.reduced = true;
        self
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn with_strands(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[super::Letter]) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, w: Word, c: F) {
        if c.is_zero() {
            return;
        }
        self.reduced = false;
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c.clone());
        }
        r.reduced = self.reduced && o.reduced;
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&F::one().neg()))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Element::zero(self.n);
        }
        Element {
            n: self.n,
            terms: self.terms.iter().map(|(w, d)| (w.clone(), d.mul(c))).collect(),
            reduced: self.reduced,
        }
    }

    /// Concatenation product without reduction.
    pub fn concat(&self, o: &Self) -> Self {
        let mut r = Element::zero(self.n.max(o.n));
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                r.add_term(w, c1.mul(c2));
            }
        }
        r.reduced = false;
        r
    }

    /// Reverses words, fixing letters and coefficients.
    pub fn bar(&self) -> Self {
        Element::from_terms(self.n, self.terms.iter().map(|(w, c)| (bar_word(w), c.clone())))
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<G: Coeff>(&self, f: impl Fn(&F) -> G) -> Element<G> {
        Element::from_terms(self.n, self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Drops every word that contains an `e` letter.
    pub fn drop_e_words(&self) -> Self {
        let mut r = Element::from_terms(
            self.n,
            self.terms
                .iter()
                .filter(|(w, _)| !w.iter().any(|l| matches!(l, super::Letter::E(_))))
                .map(|(w, c)| (w.clone(), c.clone())),
        );
        r.reduced = self.reduced;
        r
    }

    pub fn max_level(&self) -> usize {
        self.terms.keys().map(|w| word_level(w)).max().unwrap_or(0)
    }
}

impl Element<Scalar> {
    /// Reverses words, inverts letters and applies the coefficient involution.
    pub fn star(&self) -> Self {
        Element::from_terms(self.n, self.terms.iter().map(|(w, c)| (star_word(w), c.star())))
    }

    /// Parses `<scalar> * <word> [+ <scalar> * <word> ...]`; a bare word
    /// means coefficient one.
    pub fn parse(n: usize, text: &str) -> Result<Self, AlgebraError> {
        let mut e = Element::zero(n);
        for chunk in split_top_level(text) {
            let (coef, word) = match chunk.rfind('*') {
                Some(i) if is_word_text(&chunk[i + 1..]) => (parse_scalar(&chunk[..i])?, &chunk[i + 1..]),
                _ if is_word_text(&chunk) => (Scalar::int(1), chunk.as_str()),
                _ => (parse_scalar(&chunk)?, ""),
            };
            let w = parse_word(word)?;
            super::word::check_range(&w, n)?;
            e.add_term(w, coef);
        }
        e.reduced = false;
        Ok(e)
    }
}

fn is_word_text(t: &str) -> bool {
    let t = t.trim();
    !t.is_empty() && parse_word(t).is_ok()
}

fn ends_with_word(t: &str) -> bool {
    is_word_text(t) || t.rfind('*').is_some_and(|i| is_word_text(&t[i + 1..]))
}

/// Splits on `+` outside parentheses once the current chunk ends in a word.
fn split_top_level(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 && ends_with_word(&cur) => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    if !cur.trim().is_empty() {
        out.push(cur);
    }
    out.into_iter().map(|s| s.trim().to_string()).collect()
}

impl<F: Coeff> PartialEq for Element<F> {
    fn eq(&self, o: &Self) -> bool {
        self.n == o.n && self.terms == o.terms
    }
}

impl<F: Coeff> fmt::Display for Element<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({}) * {}", c, format_word(w)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<F: Coeff> fmt::Debug for Element<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<WordError> for AlgebraError {
    fn from(e: WordError) -> Self {
        AlgebraError::Word(e)
    }
}
