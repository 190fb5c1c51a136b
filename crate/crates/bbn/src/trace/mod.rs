//! The Markov trace, its Gram form and the closure identity.

use std::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{format_word, parse_word, spanning_set, star_word, AlgebraError, Element, Engine, Letter, Word};
use crate::coeffs::{parse_scalar, Coeff, CoeffError, EvalPoint, Params, Scalar, Q};

/// `epsilon_{n-1}`: from `n` strands to `n - 1`.
pub fn cond_expect<F: Coeff>(eng: &Engine<F>, a: &Element<F>) -> Element<F> {
    eng.cond_expect(a)
}

pub fn markov_trace<F: Coeff>(eng: &Engine<F>, a: &Element<F>) -> F {
    eng.trace(a)
}

/// Entries `tr(v_i star(v_j))` over `spanning_set(n)`.
pub fn gram_matrix<F: Coeff>(eng: &Engine<F>, n: usize) -> Vec<Vec<F>> {
    let basis = spanning_set(n);
    let starred: Vec<Word> = basis.iter().map(|v| star_word(v)).collect();
    basis
        .iter()
        .map(|u| {
            starred
                .iter()
                .map(|v| {
                    let mut w = u.clone();
                    w.extend_from_slice(v);
                    eng.trace_word(n, &w)
                })
                .collect()
        })
        .collect()
}

/// Exact rank of a rational matrix, by fraction-free elimination after
/// clearing denominators row by row.
pub fn rank(m: Vec<Vec<Q>>) -> usize {
    let mut m: Vec<Vec<BigInt>> = m
        .into_iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
            row.iter().map(|c| c.numer() * (&l / c.denom())).collect()
        })
        .collect();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Rank of the Gram matrix on `n` strands at `pt`.
pub fn gram_rank(n: usize, pt: &EvalPoint) -> Result<usize, CoeffError> {
    let eng: Engine<Q> = Engine::new(Params::at(pt)?);
    Ok(rank(gram_matrix(&eng, n)))
}

/// `X_i X_{i+1} ... X_j`, empty when `i > j`.
fn chain_x(i: usize, j: usize) -> Word {
    (i..=j).map(|k| Letter::X(k as u8)).collect()
}

/// `H_1 = e_1`, `H_{k+1} = e_{k+1} X(k+2, 2k+1) X(k+1, 2k) H_k`.
pub fn closure_h(n: usize) -> Word {
    let mut h = vec![Letter::E(1)];
    for k in 1..n {
        let mut w = vec![Letter::E(k as u8 + 1)];
        w.extend(chain_x(k + 2, 2 * k + 1));
        w.extend(chain_x(k + 1, 2 * k));
        w.extend(h);
        h = w;
    }
    h
}

/// `e_1 e_3 ... e_{2n-1}`.
pub fn closure_e(n: usize) -> Word {
    (0..n).map(|k| Letter::E(2 * k as u8 + 1)).collect()
}

/// Tests `bar(H_n) a H_n = x^n tr(a) E(1, 2n-1)` in the algebra on `2n`
/// strands.
pub fn closure_identity_check<F: Coeff>(eng: &Engine<F>, n: usize, a: &Element<F>) -> bool {
    let h = closure_h(n);
    let hb: Word = h.iter().rev().copied().collect();
    let big = 2 * n;
    let lhs = Element::word(big, hb).concat(&a.clone().with_strands(big)).concat(&Element::word(big, h));
    let mut scale = eng.trace(a);
    for _ in 0..n {
        scale = scale.mul(&eng.params.x);
    }
    let rhs = Element::word(big, closure_e(n)).scale(&scale);
    eng.equal(&lhs, &rhs)
}

/// One `<word>\t<scalar>` line per spanning word.
pub fn golden_traces(eng: &Engine<Scalar>, n: usize) -> String {
    let mut out = String::new();
    for w in spanning_set(n) {
        let _ = writeln!(out, "{}\t{}", format_word(&w), eng.trace_word(n, &w).canonical());
    }
    out
}

/// Parses the golden format back into word and scalar pairs.
pub fn parse_golden(text: &str) -> Result<Vec<(Word, Scalar)>, AlgebraError> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let (w, c) = l.split_once('\t').ok_or_else(|| AlgebraError::Parse(l.to_string()))?;
            Ok((parse_word(w)?, parse_scalar(c)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_words() {
        assert_eq!(format_word(&closure_h(1)), "e1");
        assert_eq!(format_word(&closure_h(2)), "e2 x3 x2 e1");
        assert_eq!(format_word(&closure_e(2)), "e1 e3");
    }

    #[test]
    fn rank_of_small_matrices() {
        let q = |v: i64| Q::from_integer(v.into());
        assert_eq!(rank(vec![vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
        assert_eq!(rank(vec![vec![q(0), q(1)], vec![q(1), q(0)]]), 2);
    }
}
