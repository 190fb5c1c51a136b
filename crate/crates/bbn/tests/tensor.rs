use bbn::algebra::{parse_word, spanning_set, Element, Engine, Letter};
use bbn::coeffs::{Scalar, Q};
use bbn::tensor::{reflection_k, reflection_residual, reflection_residual_with, ybe_residual, Mat, Rep, RepConfig};

fn rep(n: usize) -> Rep<Scalar> {
    Rep::symbolic(RepConfig::new(3), n)
}

#[test]
fn index_sets() {
    assert_eq!(RepConfig::new(3).index, vec![-1, 0, 1]);
    assert_eq!(RepConfig::new(5).index, vec![-3, -1, 0, 1, 3]);
}

#[test]
fn local_matrix_identities() {
    let r = rep(2);
    let p = r.params.clone();
    let (b, e, f) = (r.b().clone(), r.e().clone(), r.f().clone());
    let id = Mat::identity(9);
    let binv = b.sub(&id.scale(&p.delta)).add(&e.scale(&p.delta));
    assert_eq!(b.mul(&binv), id);
    assert_eq!(e.mul(&e), e.scale(&p.x));
    let id3 = Mat::identity(3);
    assert_eq!(f.mul(&f), f.scale(&p.p).add(&id3.scale(&p.q0)));
    let cubic = b.sub(&id.scale(&p.l)).mul(&b.add(&id.scale(&p.q_inv))).mul(&b.sub(&id.scale(&p.q)));
    assert!(cubic.is_zero());
}

#[test]
fn generator_relations_in_the_representation() {
    let r = rep(2);
    let p = r.params.clone();
    let w = |t: &str| r.word(&parse_word(t).unwrap());
    assert_eq!(w("x1 e1"), w("e1").scale(&p.l));
    assert_eq!(w("y x1 y x1"), w("x1 y x1 y"));
    assert_eq!(w("y x1 y e1"), w("e1"));
    assert_eq!(w("e1 y e1"), w("e1").scale(&p.a));
    assert_eq!(w("y Y"), Mat::identity(9));
}

#[test]
fn trace_agrees_with_weighted_matrix_trace_on_two_strands() {
    let cfg = RepConfig::new(3);
    let eng: Engine<Scalar> = Engine::new(cfg.params());
    for n in 1..=2 {
        let r = Rep::symbolic(cfg.clone(), n);
        for w in spanning_set(n) {
            assert_eq!(eng.trace_word(n, &w), r.psi(&r.word(&w)));
        }
    }
}

#[test]
fn trace_of_y_closed_form() {
    let r = rep(1);
    let q = Scalar::s().mul(&Scalar::s());
    let q1n = q.pow(-2).unwrap();
    let want = q.sub(&Scalar::int(1)).neg().div(&q.sub(&q1n)).unwrap();
    assert_eq!(r.psi(&r.generator(Letter::Y)), want);
}

#[test]
fn numeric_representation_matches_specialized_symbolic() {
    let s = Q::new(5.into(), 3.into());
    let pt = bbn::coeffs::EvalPoint::new(s.clone(), Q::from_integer(1.into()), Q::from_integer(1.into()));
    let rs = rep(2);
    let rn = Rep::numeric(RepConfig::new(3), 2, &s).unwrap();
    let w = parse_word("y x1 e1 X1").unwrap();
    assert_eq!(rs.word(&w).try_map(|c| c.specialize(&pt)).unwrap(), rn.word(&w));
}

#[test]
fn baxterized_equations() {
    let r = rep(3);
    assert!(ybe_residual(&r).is_zero());
    assert!(reflection_residual(&r).is_zero());
}

#[test]
fn reflection_fails_without_the_boundary_term() {
    let r = rep(2);
    let y = Element::word(2, vec![Letter::Y]);
    let bare = [y.clone(), Element::zero(2), y.scale(&Scalar::int(-1))];
    assert!(!reflection_residual_with(&r, &bare).is_zero());
    let k = reflection_k(&r.params, 2);
    assert!(reflection_residual_with(&r, &k).is_zero());
}
