//! B-type braid words and the Kauffman-type invariant of their closures in
//! the solid torus.

use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::algebra::{Element, Engine, Letter};
use crate::coeffs::{Coeff, CoeffError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("unknown token '{token}' at position {pos}")]
    Token { token: String, pos: usize },
    #[error("index {index} at position {pos} out of range for {strands} strands")]
    Range { index: usize, pos: usize, strands: usize },
}

/// `tau_0^{±1}` or `tau_i^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BraidLetter {
    Tau0(bool),
    Tau(usize, bool),
}

impl BraidLetter {
    pub fn inverse(self) -> Self {
        match self {
            BraidLetter::Tau0(p) => BraidLetter::Tau0(!p),
            BraidLetter::Tau(i, p) => BraidLetter::Tau(i, !p),
        }
    }

    /// Image under `tau_0 -> Y`, `tau_i -> X_i`.
    pub fn image(self) -> Letter {
        match self {
            BraidLetter::Tau0(true) => Letter::Y,
            BraidLetter::Tau0(false) => Letter::Yinv,
            BraidLetter::Tau(i, true) => Letter::X(i as u8),
            BraidLetter::Tau(i, false) => Letter::Xinv(i as u8),
        }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidLetter::Tau0(true) => write!(f, "y"),
            BraidLetter::Tau0(false) => write!(f, "Y"),
            BraidLetter::Tau(i, true) => write!(f, "x{i}"),
            BraidLetter::Tau(i, false) => write!(f, "X{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<BraidLetter>,
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Parses `y Y x<i> X<i>` tokens on `n` strands; positions are 0-based token
/// indices.
pub fn parse_braid(text: &str, n: usize) -> Result<BraidWord, BraidError> {
    let mut letters = Vec::new();
    for (pos, tok) in text.split_whitespace().enumerate() {
        let bad = || BraidError::Token { token: tok.to_string(), pos };
        let l = match tok {
            "y" => BraidLetter::Tau0(true),
            "Y" => BraidLetter::Tau0(false),
            _ => {
                let (head, rest) = tok.split_at(1);
                let i: usize = rest.parse().map_err(|_| bad())?;
                let positive = match head {
                    "x" => true,
                    "X" => false,
                    _ => return Err(bad()),
                };
                if i == 0 {
                    return Err(bad());
                }
                if i >= n {
                    return Err(BraidError::Range { index: i, pos, strands: n });
                }
                BraidLetter::Tau(i, positive)
            }
        };
        letters.push(l);
    }
    Ok(BraidWord { strands: n, letters })
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Self {
        BraidWord { strands, letters }
    }

    pub fn inverse(&self) -> Self {
        BraidWord::new(self.strands, self.letters.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Reversed word with every letter inverted.
    pub fn star(&self) -> Self {
        self.inverse()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| match l {
                BraidLetter::Tau0(_) => 0,
                BraidLetter::Tau(_, true) => 1,
                BraidLetter::Tau(_, false) => -1,
            })
            .sum()
    }

    pub fn image<F: Coeff>(&self) -> Element<F> {
        Element::word(self.strands, self.letters.iter().map(|l| l.image()).collect())
    }
}

pub fn exponent_sum(b: &BraidWord) -> i64 {
    b.exponent_sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct InvariantResult<F: Coeff> {
    pub strands: usize,
    pub exponent_sum: i64,
    pub value: F,
}

fn power<F: Coeff>(a: &F, k: i64) -> Result<F, CoeffError> {
    let base = if k < 0 { a.inv()? } else { a.clone() };
    Ok((0..k.unsigned_abs()).fold(F::one(), |acc, _| acc.mul(&base)))
}

/// `L = x^(n-1) l^e tr(image(b))`.
pub fn kauffman_b<F: Coeff>(eng: &Engine<F>, b: &BraidWord) -> Result<InvariantResult<F>, CoeffError> {
    let pr = &eng.params;
    let e = b.exponent_sum();
    let tr = eng.trace(&b.image());
    let value = power(&pr.x, b.strands as i64 - 1)?.mul(&power(&pr.l, e)?).mul(&tr);
    Ok(InvariantResult { strands: b.strands, exponent_sum: e, value })
}

/// `a b a^-1`.
pub fn markov_conjugate(b: &BraidWord, a: &BraidWord) -> BraidWord {
    let mut letters = a.letters.clone();
    letters.extend_from_slice(&b.letters);
    letters.extend(a.inverse().letters);
    BraidWord::new(b.strands.max(a.strands), letters)
}

/// `b tau_n` on `n + 1` strands.
pub fn markov_stabilize(b: &BraidWord) -> BraidWord {
    let mut letters = b.letters.clone();
    letters.push(BraidLetter::Tau(b.strands, true));
    BraidWord::new(b.strands + 1, letters)
}

/// `b tau_n^-1` on `n + 1` strands.
pub fn markov_stabilize_negative(b: &BraidWord) -> BraidWord {
    let mut letters = b.letters.clone();
    letters.push(BraidLetter::Tau(b.strands, false));
    BraidWord::new(b.strands + 1, letters)
}

/// A uniformly random word of length `len` on `n` strands.
pub fn random_braid<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let positive = rng.gen_bool(0.5);
            let k = rng.gen_range(0..n);
            if k == 0 {
                BraidLetter::Tau0(positive)
            } else {
                BraidLetter::Tau(k, positive)
            }
        })
        .collect();
    BraidWord::new(n, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let b = parse_braid("y x1 X1", 2).unwrap();
        assert_eq!(b.letters, vec![BraidLetter::Tau0(true), BraidLetter::Tau(1, true), BraidLetter::Tau(1, false)]);
        assert_eq!(b.to_string(), "y x1 X1");
        assert!(parse_braid("", 1).unwrap().letters.is_empty());
        assert!(matches!(parse_braid("x3", 2), Err(BraidError::Range { .. })));
        assert!(matches!(parse_braid("y x0", 2), Err(BraidError::Token { pos: 1, .. })));
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(parse_braid("x1 x1", 2).unwrap().exponent_sum(), 2);
        assert_eq!(parse_braid("y X1", 2).unwrap().exponent_sum(), -1);
    }
}
