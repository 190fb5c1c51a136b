use bbn::algebra::{parse_word, spanning_set};
use bbn::diagrams::{
    all_diagrams, diagram_gram_nondegenerate, shadow_is_bijective, word_shadow, DiagramElement, DottedDiagram, XA,
};
use proptest::prelude::*;

fn diagram(n: usize) -> impl Strategy<Value = DottedDiagram> {
    let all = all_diagrams(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

#[test]
fn composition_examples() {
    let e = DottedDiagram::cup_cap(2, 1);
    assert_eq!(e.compose(&e), (e.clone(), 1, 0));
    let d = DottedDiagram::dotted(2, 1);
    assert_eq!(d.compose(&d), (DottedDiagram::identity(2), 0, 0));
    let x = DottedDiagram::crossing(3, 2);
    assert_eq!(DottedDiagram::identity(3).compose(&x), (x, 0, 0));
    let ed = e.compose(&DottedDiagram::dotted(2, 1)).0;
    assert_eq!(ed.compose(&e), (e.clone(), 0, 1));
    let de = DottedDiagram::dotted(2, 1).compose(&e).0;
    assert_eq!(de.compose(&e), (de, 1, 0));
}

#[test]
fn trace_values() {
    for n in 1..=4 {
        assert_eq!(DottedDiagram::identity(n).trace(), XA::one());
    }
    assert_eq!(DottedDiagram::cup_cap(2, 1).trace(), XA::monomial(-1, 0));
    assert_eq!(DottedDiagram::dotted(1, 1).trace(), XA::monomial(-1, 1));
}

#[test]
fn shadows() {
    let s = |w: &str| word_shadow(2, &parse_word(w).unwrap());
    assert_eq!(s("x1"), s("X1"));
    assert_eq!(s("y y"), DiagramElement::single(DottedDiagram::identity(2), XA::one()));
    assert_eq!(s("e1 e1"), DiagramElement::single(DottedDiagram::cup_cap(2, 1), XA::monomial(1, 0)));
    assert_eq!(s("e1 y e1"), DiagramElement::single(DottedDiagram::cup_cap(2, 1), XA::monomial(0, 1)));
}

#[test]
fn counts_match_the_dimension_formula() {
    assert_eq!(all_diagrams(1).len(), 2);
    assert_eq!(all_diagrams(2).len(), 12);
    assert_eq!(all_diagrams(3).len(), 120);
    assert_eq!(all_diagrams(4).len(), 1680);
}

#[test]
fn spanning_words_shadow_bijectively() {
    for n in 1..=3 {
        assert!(shadow_is_bijective(n), "n = {n}");
        assert_eq!(spanning_set(n).len(), all_diagrams(n).len());
    }
}

#[test]
fn gram_nondegenerate() {
    for n in 1..=3 {
        assert!(diagram_gram_nondegenerate(n), "n = {n}");
    }
}

#[test]
fn text_round_trip() {
    let d = DottedDiagram::parse(2, "[(t1,b2,1),(t2,b1,0)]").unwrap();
    assert_eq!(d.to_string(), "[(t1,b2,1),(t2,b1,0)]");
    assert_eq!(DottedDiagram::parse(2, &d.to_string()).unwrap(), d);
    assert!(DottedDiagram::parse(2, "[(t1,b2,1)]").is_err());
    assert!(DottedDiagram::parse(2, "[(t1,t1,0),(b1,b2,0)]").is_err());
    assert!(DottedDiagram::parse(2, "(t1,b1,0),(t2,b2,0)").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(a in diagram(3), b in diagram(3), c in diagram(3)) {
        let (ab, p0, p1) = a.compose(&b);
        let (l, q0, q1) = ab.compose(&c);
        let (bc, r0, r1) = b.compose(&c);
        let (r, s0, s1) = a.compose(&bc);
        prop_assert_eq!(l, r);
        prop_assert_eq!((p0 + q0, p1 + q1), (r0 + s0, r1 + s1));
    }

    #[test]
    fn star_reverses_products(a in diagram(3), b in diagram(3)) {
        let (ab, n0, n1) = a.compose(&b);
        let (ba, m0, m1) = b.star().compose(&a.star());
        prop_assert_eq!(ab.star(), ba);
        prop_assert_eq!((n0, n1), (m0, m1));
        prop_assert_eq!(a.star().trace(), a.trace());
        prop_assert_eq!(a.star().star(), a);
    }

    #[test]
    fn trace_of_a_times_star_a_is_one_at_a_inverse_x(a in diagram(3)) {
        let (d, n0, n1) = a.compose(&a.star());
        let t = d.trace().mul(&XA::monomial(n0 as i32, n1 as i32)).at_a_inverse_x();
        prop_assert_eq!(t.len(), 1);
        prop_assert!(t.contains_key(&0));
    }
}
