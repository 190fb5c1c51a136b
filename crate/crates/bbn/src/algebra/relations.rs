//! Defining and derived relations of the algebra, instantiated at every
//! valid index for a given strand count.

use crate::coeffs::{specialize, EvalPoint, Params, Scalar, Q};

use super::element::Element;
use super::engine::Engine;
use super::AlgebraError;
use super::word::{parse_word, yprime, yprime_inv, ysub, ysub_inv, Word};

/// An identity `lhs = rhs` in the algebra on `strands` strands.
#[derive(Debug, Clone)]
pub struct Relation {
    pub name: String,
    pub strands: usize,
    pub lhs: Element<Scalar>,
    pub rhs: Element<Scalar>,
}

/// Expands a template: word tokens plus `P<i>` = Y'_i, `Q<i>` = Y'_i^-1,
/// `S<i>` = Y_i, `T<i>` = Y_i^-1.
fn tw(text: &str) -> Word {
    let mut out = Vec::new();
    for tok in text.split_whitespace() {
        let idx = || tok[1..].parse::<usize>().expect("macro index");
        match tok.as_bytes()[0] {
            b'P' => out.extend(yprime(idx())),
            b'Q' => out.extend(yprime_inv(idx())),
            b'S' => out.extend(ysub(idx())),
            b'T' => out.extend(ysub_inv(idx())),
            _ => out.extend(parse_word(tok).expect("template token")),
        }
    }
    out
}

struct Ctx {
    n: usize,
    pr: Params<Scalar>,
    out: Vec<Relation>,
}

impl Ctx {
    fn el(&self, terms: &[(Scalar, String)]) -> Element<Scalar> {
        Element::from_terms(self.n, terms.iter().map(|(c, t)| (tw(t), c.clone())))
    }

    fn rel(&mut self, name: String, lhs: &[(Scalar, String)], rhs: &[(Scalar, String)]) {
        let (lhs, rhs) = (self.el(lhs), self.el(rhs));
        self.out.push(Relation { name, strands: self.n, lhs, rhs });
    }

    /// Word equals word.
    fn eq(&mut self, name: String, lhs: String, rhs: String) {
        let one = Scalar::int(1);
        self.rel(name, &[(one.clone(), lhs)], &[(one, rhs)]);
    }

    fn one(&self) -> Scalar {
        Scalar::int(1)
    }
}

fn inv_tok(letter: char, i: usize, sign: i32) -> String {
    if sign > 0 {
        format!("{}{}", letter, i)
    } else {
        format!("{}{}", letter.to_ascii_uppercase(), i)
    }
}

fn adjacent(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) == 1 {
                v.push((i, j));
            }
        }
    }
    v
}

fn far(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                v.push((i, j));
            }
        }
    }
    v
}

/// The braid, absorption and tangle relations among `X_i` and `e_i`.
pub fn type_a_relations(n: usize, pr: &Params<Scalar>) -> Vec<Relation> {
    let pr = pr.clone();
    let mut c = Ctx { n, pr, out: Vec::new() };
    let (d, l, li, x) = (c.pr.delta.clone(), c.pr.l.clone(), c.pr.l_inv.clone(), c.pr.x.clone());
    let one = c.one();
    for (i, j) in far(n) {
        c.eq(format!("x-far-commute[{i},{j}]"), format!("x{i} x{j}"), format!("x{j} x{i}"));
        c.eq(format!("e-far-commute[{i},{j}]"), format!("e{i} e{j}"), format!("e{j} e{i}"));
    }
    for (i, j) in adjacent(n) {
        c.eq(format!("braid[{i},{j}]"), format!("x{i} x{j} x{i}"), format!("x{j} x{i} x{j}"));
    }
    for i in 1..n {
        c.rel(format!("x-e-absorb[{i}]"), &[(one.clone(), format!("x{i} e{i}"))], &[(l.clone(), format!("e{i}"))]);
        c.rel(format!("e-x-absorb[{i}]"), &[(one.clone(), format!("e{i} x{i}"))], &[(l.clone(), format!("e{i}"))]);
        if i >= 2 {
            let k = i - 1;
            c.rel(format!("e-x-e-lower[{i},+]"), &[(one.clone(), format!("e{i} x{k} e{i}"))], &[(li.clone(), format!("e{i}"))]);
            c.rel(format!("e-x-e-lower[{i},-]"), &[(one.clone(), format!("e{i} X{k} e{i}"))], &[(l.clone(), format!("e{i}"))]);
        }
        c.rel(format!("e-square[{i}]"), &[(one.clone(), format!("e{i} e{i}"))], &[(x.clone(), format!("e{i}"))]);
        c.rel(
            format!("x-inverse[{i}]"),
            &[(one.clone(), format!("X{i}"))],
            &[(one.clone(), format!("x{i}")), (d.neg(), "1".into()), (d.clone(), format!("e{i}"))],
        );
        c.rel(
            format!("x-square[{i}]"),
            &[(one.clone(), format!("x{i} x{i}"))],
            &[(one.clone(), "1".into()), (d.clone(), format!("x{i}")), (d.mul(&l).neg(), format!("e{i}"))],
        );
        c.rel(
            format!("x-cube[{i}]"),
            &[(one.clone(), format!("x{i} x{i} x{i}"))],
            &[
                (l.add(&d), format!("x{i} x{i}")),
                (one.sub(&l.mul(&d)), format!("x{i}")),
                (l.neg(), "1".into()),
            ],
        );
        c.rel(
            format!("x-inverse-square[{i},a]"),
            &[(one.clone(), format!("X{i} X{i}"))],
            &[
                (one.add(&d.mul(&d)), "1".into()),
                (d.neg(), format!("x{i}")),
                (d.mul(&li.sub(&d)), format!("e{i}")),
            ],
        );
        c.rel(
            format!("x-inverse-square[{i},b]"),
            &[(one.clone(), format!("X{i} X{i}"))],
            &[(one.clone(), "1".into()), (d.neg(), format!("X{i}")), (d.mul(&li), format!("e{i}"))],
        );
        // (X - l)(X + 1/q)(X - q) expanded
        let (q, qi) = (c.pr.q.clone(), c.pr.q_inv.clone());
        let (a1, a2, a3) = (l.neg(), qi.clone(), q.neg());
        let s1 = a1.add(&a2).add(&a3);
        let s2 = a1.mul(&a2).add(&a1.mul(&a3)).add(&a2.mul(&a3));
        let s3 = a1.mul(&a2).mul(&a3);
        c.rel(
            format!("cubic[{i}]"),
            &[(one.clone(), format!("x{i} x{i} x{i}")), (s1, format!("x{i} x{i}")), (s2, format!("x{i}")), (s3, "1".into())],
            &[],
        );
    }
    for (i, j) in adjacent(n) {
        for sg in [1, -1] {
            let (xj, xi) = (inv_tok('x', j, sg), inv_tok('x', i, sg));
            let xjm = inv_tok('x', j, -sg);
            let tag = if sg > 0 { "+" } else { "-" };
            c.eq(format!("conjugate-x[{i},{j},{tag}]"), format!("X{i} {xj} x{i}"), format!("x{j} {xi} X{j}"));
            c.eq(format!("slide-e[{i},{j},{tag}]"), format!("e{i} {xj} {xi}"), format!("{xj} {xi} e{j}"));
            let lam = if sg > 0 { li.clone() } else { l.clone() };
            c.rel(format!("e-x-e[{i},{j},{tag}]"), &[(one.clone(), format!("e{i} {xj} e{i}"))], &[(lam, format!("e{i}"))]);
            c.eq(format!("x-e-e[{i},{j},{tag}]"), format!("{xi} e{j} e{i}"), format!("{xjm} e{i}"));
            c.eq(format!("e-e-x[{i},{j},{tag}]"), format!("e{i} e{j} {xi}"), format!("e{i} {xjm}"));
            c.eq(format!("e-x-x[{i},{j},{tag}]"), format!("e{i} {xj} {xi}"), format!("e{i} e{j}"));
            c.eq(format!("x-x-e[{i},{j},{tag}]"), format!("{xi} {xj} e{i}"), format!("e{j} e{i}"));
        }
        c.eq(format!("e-e-e[{i},{j}]"), format!("e{i} e{j} e{i}"), format!("e{i}"));
        c.eq(format!("conjugate-e[{i},{j}]"), format!("x{i} e{j} X{i}"), format!("X{j} e{i} x{j}"));
        c.eq(format!("twisted-conjugate-e[{i},{j}]"), format!("x{i} e{j} x{i}"), format!("X{j} e{i} X{j}"));
    }
    c.out
}

/// The relations involving `Y`: the defining ones and their consequences for
/// `Y_i` and `Y'_i`.
pub fn type_b_relations(n: usize, pr: &Params<Scalar>) -> Vec<Relation> {
    let pr = pr.clone();
    let mut c = Ctx { n, pr, out: Vec::new() };
    let p = c.pr.clone();
    let (d, l, li, a) = (p.delta.clone(), p.l.clone(), p.l_inv.clone(), p.a.clone());
    let (q0, q0i, q1) = (p.q0.clone(), p.q0_inv.clone(), p.p.clone());
    let one = c.one();
    let s = |t: &str| t.to_string();
    if n >= 2 {
        c.eq(s("four-term-braid"), s("x1 y x1 y"), s("y x1 y x1"));
        c.eq(s("y-x-y-e"), s("y x1 y e1"), s("e1"));
        c.rel(s("e-y-e"), &[(one.clone(), s("e1 y e1"))], &[(a.clone(), s("e1"))]);
        for g in ["y", "e1", "x1"] {
            c.eq(format!("four-term-center[{g}]"), format!("x1 y x1 y {g}"), format!("{g} x1 y x1 y"));
        }
    }
    c.rel(s("y-quadratic"), &[(one.clone(), s("y y"))], &[(q1.clone(), s("y")), (q0.clone(), s("1"))]);
    for i in 2..n {
        c.eq(format!("y-far-commute[{i}]"), format!("y x{i}"), format!("x{i} y"));
    }
    c.rel(s("y-inverse"), &[(one.clone(), s("Y"))], &[(q0i.clone(), s("y")), (q1.mul(&q0i).neg(), s("1"))]);
    for i in 1..=n {
        c.rel(format!("yi-quadratic[{i}]"), &[(one.clone(), format!("S{i} S{i}"))], &[(q1.clone(), format!("S{i}")), (q0.clone(), s("1"))]);
        c.rel(
            format!("yi-inverse[{i}]"),
            &[(one.clone(), format!("T{i}"))],
            &[(q0i.clone(), format!("S{i}")), (q1.mul(&q0i).neg(), s("1"))],
        );
        for j in i + 1..=n {
            c.eq(format!("yprime-commute[{i},{j}]"), format!("P{i} P{j}"), format!("P{j} P{i}"));
        }
        for j in 1..n {
            if j != i && j + 1 != i {
                c.eq(format!("yi-x-commute[{i},{j}]"), format!("S{i} x{j}"), format!("x{j} S{i}"));
                c.eq(format!("yi-e-commute[{i},{j}]"), format!("S{i} e{j}"), format!("e{j} S{i}"));
                c.eq(format!("yprime-x-commute[{i},{j}]"), format!("P{i} x{j}"), format!("x{j} P{i}"));
                c.eq(format!("yprime-e-commute[{i},{j}]"), format!("P{i} e{j}"), format!("e{j} P{i}"));
            }
        }
    }
    for i in 1..n {
        let k = i + 1;
        c.eq(format!("yprime-shift[{i}]"), format!("P{k} X{i}"), format!("x{i} P{i}"));
        c.eq(format!("yi-shift[{i}]"), format!("S{k} x{i}"), format!("x{i} S{i}"));
        c.eq(format!("e-yi-x-yi[{i}]"), format!("e{i} S{i} x{i} S{i}"), format!("e{i}"));
        c.eq(format!("yi-x-yi-e[{i}]"), format!("S{i} x{i} S{i} e{i}"), format!("e{i}"));
        c.eq(format!("e-yprime-x-yprime[{i}]"), format!("e{i} P{i} x{i} P{i}"), format!("e{i}"));
        c.eq(format!("yprime-x-yprime-e[{i}]"), format!("P{i} x{i} P{i} e{i}"), format!("e{i}"));
        c.rel(format!("e-yi-e[{i}]"), &[(one.clone(), format!("e{i} S{i} e{i}"))], &[(a.clone(), format!("e{i}"))]);
        c.eq(format!("yi-braid[{i}]"), format!("x{i} S{i} x{i} S{i}"), format!("S{i} x{i} S{i} x{i}"));
        c.rel(
            format!("x-yi-shift[{i}]"),
            &[(one.clone(), format!("x{i} S{k}"))],
            &[
                (one.clone(), format!("S{i} x{i}")),
                (d.neg(), format!("S{i}")),
                (d.clone(), format!("S{i} e{i}")),
                (d.clone(), format!("S{k}")),
                (d.mul(&d).mul(&l).sub(&d.mul(&l).mul(&q0i)), format!("e{i} S{i}")),
                (d.mul(&l).mul(&q1).mul(&q0i).sub(&d.mul(&d).mul(&l).mul(&a)), format!("e{i}")),
            ],
        );
        c.rel(
            format!("x-yi-e[{i}]"),
            &[(one.sub(&q0.mul(&d)), format!("x{i} S{i} e{i}"))],
            &[(q1.mul(&l).sub(&q0.mul(&d).mul(&l).mul(&a)), format!("e{i}")), (q0.clone(), format!("S{i} e{i}"))],
        );
        c.rel(
            format!("yi-product[{i}]"),
            &[(one.clone(), format!("S{k} S{i}"))],
            &[
                (one.clone(), format!("x{i} S{i} x{i} S{i}")),
                (d.mul(&q1).neg(), format!("x{i} S{i}")),
                (d.mul(&q0).neg(), format!("x{i}")),
                (d.mul(&q0i), format!("S{i} e{i} S{i}")),
                (d.mul(&q1).mul(&q0i).neg(), format!("e{i} S{i}")),
            ],
        );
    }
    for i in 2..=n {
        let k = i - 1;
        if k >= n {
            continue;
        }
        c.rel(
            format!("yi-e-lower[{i}]"),
            &[(one.clone(), format!("S{i} e{k}"))],
            &[(li.mul(&q0i), format!("S{k} e{k}")), (q1.mul(&q0i).mul(&li).neg(), format!("e{k}"))],
        );
        c.rel(
            format!("e-yi-lower[{i}]"),
            &[(one.clone(), format!("e{k} S{i}"))],
            &[(l.mul(&q0i.sub(&d)), format!("e{k} S{k}")), (l.mul(&d.mul(&a).sub(&q1.mul(&q0i))), format!("e{k}"))],
        );
        c.rel(format!("e-yprime-lower[{i}]"), &[(one.clone(), format!("e{k} P{i}"))], &[(l.clone(), format!("e{k} Q{k}"))]);
        c.rel(format!("yprime-e-lower[{i}]"), &[(one.clone(), format!("P{i} e{k}"))], &[(l.clone(), format!("Q{k} e{k}"))]);
    }
    if n >= 3 {
        c.rel(
            s("e-y-x-e"),
            &[(one.clone(), s("e1 S1 x2 e1"))],
            &[(q0.clone(), s("e1 S1 e2 e1")), (q1.mul(&li), s("e1"))],
        );
    }
    c.out
}

/// Every relation on `n` strands, with coefficients in the parameter set `pr`.
pub fn all_relations(n: usize, pr: &Params<Scalar>) -> Vec<Relation> {
    let mut v = type_a_relations(n, pr);
    v.extend(type_b_relations(n, pr));
    v
}

/// Base names of the defining relations.
const DEFINING: &[&str] = &[
    "x-far-commute",
    "braid",
    "x-e-absorb",
    "e-x-absorb",
    "e-x-e-lower",
    "four-term-braid",
    "y-quadratic",
    "y-x-y-e",
    "y-far-commute",
    "e-y-e",
];

impl Relation {
    pub fn base_name(&self) -> &str {
        self.name.split('[').next().unwrap_or(&self.name)
    }

    pub fn is_defining(&self) -> bool {
        DEFINING.contains(&self.base_name())
    }

    pub fn residual(&self) -> Element<Scalar> {
        self.lhs.sub(&self.rhs)
    }

    /// Checks the relation over the field of rational functions.
    pub fn verify(&self, eng: &Engine<Scalar>) -> Result<(), AlgebraError> {
        let r = self.residual();
        if eng.is_zero(&r) {
            return Ok(());
        }
        Err(AlgebraError::Mismatch { name: self.name.clone(), residual: eng.reduce(&r).to_string() })
    }

    /// Checks the relation with parameters specialized to `pt`.
    pub fn verify_at(&self, eng: &Engine<Q>, pt: &EvalPoint) -> Result<(), AlgebraError> {
        let mut r = Element::zero(self.strands);
        for (w, c) in self.residual().terms() {
            r.add_term(w.clone(), specialize(c, pt)?);
        }
        if eng.is_zero(&r) {
            return Ok(());
        }
        Err(AlgebraError::Mismatch { name: self.name.clone(), residual: eng.reduce(&r).to_string() })
    }
}
