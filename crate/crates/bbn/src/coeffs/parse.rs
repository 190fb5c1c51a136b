//! Recursive-descent parser for scalar expressions.
//!
//! Accepts the canonical form as well as general arithmetic in `s`, `l`, `p`
//! and the derived names `q`, `q0`, `delta`, `x`, `A`.

use num_bigint::BigInt;

use super::{CoeffError, Params, Scalar, Q};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    params: &'a Params<Scalar>,
}

pub fn parse_scalar(text: &str) -> Result<Scalar, CoeffError> {
    let params = Params::symbolic();
    let mut p = Parser { src: text.as_bytes(), pos: 0, params: &params };
    let v = p.expr()?;
    p.ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

impl<'a> Parser<'a> {
    fn err(&self, what: &str) -> CoeffError {
        CoeffError::Parse(format!("{} at offset {}", what, self.pos))
    }

    fn ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Scalar, CoeffError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, CoeffError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                b'/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.div(&d)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar, CoeffError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer()?;
            let e: i32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64, CoeffError> {
        self.ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected integer"))
    }

    fn atom(&mut self) -> Result<Scalar, CoeffError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let t = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                let n: BigInt = t.parse().map_err(|_| self.err("bad number"))?;
                Ok(Scalar::rational(Q::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let pr = self.params;
                Ok(match name {
                    "s" => pr.s.clone(),
                    "l" => pr.l.clone(),
                    "p" => pr.p.clone(),
                    "q" => pr.q.clone(),
                    "q0" => pr.q0.clone(),
                    "delta" => pr.delta.clone(),
                    "x" => pr.x.clone(),
                    "A" => pr.a.clone(),
                    _ => return Err(self.err(&format!("unknown name '{}'", name))),
                })
            }
            _ => Err(self.err("expected number, name or '('")),
        }
    }
}
