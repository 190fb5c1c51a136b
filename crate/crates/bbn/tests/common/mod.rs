#![allow(dead_code)]

use bbn::algebra::{Element, Engine, Letter, Word};
use bbn::coeffs::{EvalPoint, Params, Scalar, Q};
use proptest::prelude::*;

pub fn point() -> EvalPoint {
    EvalPoint::from_ints((3, 2), (5, 3), (2, 7))
}

pub fn engine_q() -> Engine<Q> {
    Engine::new(Params::at(&point()).unwrap())
}

pub fn engine_s() -> Engine<Scalar> {
    Engine::new(Params::symbolic())
}

pub fn q(a: i64, b: i64) -> Q {
    Q::new(a.into(), b.into())
}

pub fn el(n: usize, text: &str) -> Element<Scalar> {
    Element::parse(n, text).unwrap()
}

pub fn letter(n: usize) -> impl Strategy<Value = Letter> {
    let k = (n - 1) as u8;
    prop_oneof![
        Just(Letter::Y),
        Just(Letter::Yinv),
        (1..=k.max(1)).prop_map(Letter::X),
        (1..=k.max(1)).prop_map(Letter::Xinv),
        (1..=k.max(1)).prop_map(Letter::E),
    ]
    .prop_filter("fits on n strands", move |l| l.level() <= n)
}

pub fn word(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(letter(n), 0..=max_len)
}

/// A combination of up to three words with small integer coefficients.
pub fn element(n: usize, max_len: usize) -> impl Strategy<Value = Element<Q>> {
    prop::collection::vec((word(n, max_len), -3i64..=3), 1..=3)
        .prop_map(move |ts| Element::from_terms(n, ts.into_iter().map(|(w, c)| (w, q(c, 1)))))
}
