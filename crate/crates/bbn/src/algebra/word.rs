use std::fmt;

use thiserror::Error;

/// A generator or generator inverse. Indices are 1-based strand gaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Y,
    Yinv,
    X(u8),
    Xinv(u8),
    E(u8),
}

impl Letter {
    /// Strand count needed to host this letter.
    pub fn level(self) -> usize {
        match self {
            Letter::Y | Letter::Yinv => 1,
            Letter::X(i) | Letter::Xinv(i) | Letter::E(i) => i as usize + 1,
        }
    }

    pub fn star(self) -> Letter {
        match self {
            Letter::Y => Letter::Yinv,
            Letter::Yinv => Letter::Y,
            Letter::X(i) => Letter::Xinv(i),
            Letter::Xinv(i) => Letter::X(i),
            Letter::E(i) => Letter::E(i),
        }
    }

    pub fn inverse(self) -> Option<Letter> {
        match self {
            Letter::E(_) => None,
            l => Some(l.star()),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Y => write!(f, "y"),
            Letter::Yinv => write!(f, "Y"),
            Letter::X(i) => write!(f, "x{}", i),
            Letter::Xinv(i) => write!(f, "X{}", i),
            Letter::E(i) => write!(f, "e{}", i),
        }
    }
}

pub type Word = Vec<Letter>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown token '{0}'")]
    Token(String),
    #[error("index {index} out of range for {strands} strands")]
    Range { index: usize, strands: usize },
}

pub fn word_level(w: &[Letter]) -> usize {
    w.iter().map(|l| l.level()).max().unwrap_or(0)
}

pub fn format_word(w: &[Letter]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

/// Parses whitespace separated tokens `y Y x<i> X<i> e<i> 1`.
pub fn parse_word(text: &str) -> Result<Word, WordError> {
    let mut out = Vec::new();
    for tok in text.split_whitespace() {
        let bad = || WordError::Token(tok.to_string());
        match tok {
            "1" => continue,
            "y" => out.push(Letter::Y),
            "Y" => out.push(Letter::Yinv),
            _ => {
                let (head, rest) = tok.split_at(1);
                let i: u8 = rest.parse().map_err(|_| bad())?;
                if i == 0 {
                    return Err(bad());
                }
                out.push(match head {
                    "x" => Letter::X(i),
                    "X" => Letter::Xinv(i),
                    "e" => Letter::E(i),
                    _ => return Err(bad()),
                });
            }
        }
    }
    Ok(out)
}

/// Checks that every letter fits on `n` strands.
pub fn check_range(w: &[Letter], n: usize) -> Result<(), WordError> {
    for l in w {
        if l.level() > n {
            return Err(WordError::Range { index: l.level() - 1, strands: n });
        }
    }
    Ok(())
}

pub fn star_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.star()).collect()
}

pub fn bar_word(w: &[Letter]) -> Word {
    w.iter().rev().copied().collect()
}

/// `X_{i-1} ... X_1 Y X_1 ... X_{i-1}`.
pub fn yprime(i: usize) -> Word {
    let mut w: Word = (1..i).rev().map(|k| Letter::X(k as u8)).collect();
    w.push(Letter::Y);
    w.extend((1..i).map(|k| Letter::X(k as u8)));
    w
}

/// Inverse of `Y'_i`: `X_{i-1}^-1 ... X_1^-1 Y^-1 X_1^-1 ... X_{i-1}^-1`.
pub fn yprime_inv(i: usize) -> Word {
    star_word(&yprime(i))
}

/// `X_{i-1} ... X_1 Y X_1^-1 ... X_{i-1}^-1`.
pub fn ysub(i: usize) -> Word {
    let mut w: Word = (1..i).rev().map(|k| Letter::X(k as u8)).collect();
    w.push(Letter::Y);
    w.extend((1..i).map(|k| Letter::Xinv(k as u8)));
    w
}

pub fn ysub_inv(i: usize) -> Word {
    star_word(&ysub(i))
}

/// Composite symbols that expand to literal words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Macro {
    Yprime(usize),
    Ysub(usize),
    YprimeInv(usize),
    YsubInv(usize),
}

pub fn expand_macro(m: Macro, n: usize) -> Result<Word, WordError> {
    let i = match m {
        Macro::Yprime(i) | Macro::Ysub(i) | Macro::YprimeInv(i) | Macro::YsubInv(i) => i,
    };
    if i == 0 || i > n {
        return Err(WordError::Range { index: i, strands: n });
    }
    Ok(match m {
        Macro::Yprime(i) => yprime(i),
        Macro::Ysub(i) => ysub(i),
        Macro::YprimeInv(i) => yprime_inv(i),
        Macro::YsubInv(i) => ysub_inv(i),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn macros_expand_literally() {
        assert_eq!(expand_macro(Macro::Yprime(1), 1).unwrap(), vec![Letter::Y]);
        assert_eq!(
            expand_macro(Macro::Yprime(2), 2).unwrap(),
            vec![Letter::X(1), Letter::Y, Letter::X(1)]
        );
        assert_eq!(
            expand_macro(Macro::Ysub(2), 2).unwrap(),
            vec![Letter::X(1), Letter::Y, Letter::Xinv(1)]
        );
        assert!(expand_macro(Macro::Ysub(3), 2).is_err());
    }

    #[test]
    fn parse_and_format_round_trip() {
        let w = parse_word("y x1 X2 e1 Y").unwrap();
        assert_eq!(format_word(&w), "y x1 X2 e1 Y");
        assert_eq!(parse_word("1").unwrap(), Vec::<Letter>::new());
        assert!(parse_word("z1").is_err());
        assert!(parse_word("x0").is_err());
    }
}
