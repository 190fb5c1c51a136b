//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use bbn::algebra::{all_relations, spanning_set, Element, Engine, Letter};
use bbn::coeffs::{seeded_points, Params, Scalar};
use bbn::combinatorics::{dimension_check, dimension_formula, gamma_hat, path_counts};
use bbn::diagrams::{all_diagrams, diagram_gram_nondegenerate, DottedDiagram, XA};
use bbn::invariant::{kauffman_b, markov_conjugate, markov_stabilize, parse_braid, random_braid, BraidWord};
use bbn::tensor::{reflection_residual, ybe_residual, Rep, RepConfig};
use bbn::trace::{closure_identity_check, gram_rank};
use rand::SeedableRng;

const SEED: u64 = 20240611;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn relations() -> Check {
    let eng = Engine::new(Params::symbolic());
    let rels = all_relations(3, &Params::symbolic());
    for r in &rels {
        r.verify(&eng).map_err(|e| e.to_string())?;
    }
    let cfg = RepConfig::new(3);
    let rep = Rep::symbolic(cfg.clone(), 3);
    let specialized = all_relations(3, &cfg.params());
    for r in &specialized {
        ensure(rep.represent(&r.lhs) == rep.represent(&r.rhs), format!("{} fails in the N = 3 representation", r.name))?;
    }
    Ok(format!("{} relations symbolically, {} as N = 3 matrices", rels.len(), specialized.len()))
}

fn dimension() -> Check {
    for n in 1..=4 {
        let got = spanning_set(n).len();
        ensure(got as u128 == dimension_formula(n), format!("|S_{n}| = {got}"))?;
    }
    let pts = seeded_points(SEED, 3);
    for pt in &pts {
        for n in 1..=3 {
            let r = gram_rank(n, pt).map_err(|e| e.to_string())?;
            ensure(r as u128 == dimension_formula(n), format!("rank {r} at n = {n}, {pt}"))?;
        }
    }
    Ok("sizes 2, 12, 120, 1680; full Gram rank at 3 points for n <= 3".into())
}

fn trace_identity() -> Check {
    let cfg = RepConfig::new(3);
    let eng = Engine::new(cfg.params());
    let mut count = 0;
    for n in 1..=3 {
        let rep = Rep::symbolic(cfg.clone(), n);
        for w in spanning_set(n) {
            let (t, p) = (eng.trace_word(n, &w), rep.psi(&rep.word(&w)));
            ensure(t.canonical() == p.canonical(), format!("{w:?}: {t} vs {p}"))?;
            count += 1;
        }
    }
    let q = Scalar::s().mul(&Scalar::s());
    let ty = eng.trace_word(1, &[Letter::Y]);
    let abstract_form = q.inv().unwrap().sub(&Scalar::int(1)).div(&Scalar::int(1).sub(&q.pow(-3).unwrap())).unwrap();
    let psi_form = q.sub(&Scalar::int(1)).neg().div(&q.sub(&q.pow(-2).unwrap())).unwrap();
    ensure(ty == abstract_form && ty == psi_form, format!("tr(Y) = {ty}"))?;
    Ok(format!("{count} spanning words agree, tr(Y) closed forms match"))
}

fn classical_oracle() -> Check {
    ensure(DottedDiagram::cup_cap(2, 1).trace() == XA::monomial(-1, 0), "tr(e)")?;
    ensure(DottedDiagram::dotted(1, 1).trace() == XA::monomial(-1, 1), "tr(dotted strand)")?;
    for n in 1..=3 {
        for a in all_diagrams(n) {
            let (d, n0, n1) = a.compose(&a.star());
            let t = d.trace().mul(&XA::monomial(n0 as i32, n1 as i32)).at_a_inverse_x();
            ensure(t.len() == 1 && t.get(&0).is_some_and(|c| *c == bbn::coeffs::Q::from_integer(1.into())), format!("tr(a a*) for {a}"))?;
        }
        ensure(diagram_gram_nondegenerate(n), format!("diagram Gram degenerate at n = {n}"))?;
    }
    Ok("trace values, tr(a a*) = 1 and nondegenerate Gram for n <= 3".into())
}

fn bratteli() -> Check {
    let t = Instant::now();
    for n in 0..=8 {
        ensure(dimension_check(n), format!("dimension identity at n = {n}"))?;
    }
    ensure(gamma_hat(2).len() == 6, "six nodes at level 2")?;
    let mut counts: Vec<u128> = path_counts(2).into_values().collect();
    counts.sort_unstable_by(|a, b| b.cmp(a));
    ensure(counts == [2, 2, 1, 1, 1, 1], format!("level 2 counts {counts:?}"))?;
    let dt = t.elapsed();
    ensure(dt.as_secs_f64() < 1.0, format!("took {dt:?}"))?;
    Ok(format!("identity holds for n <= 8 in {dt:?}"))
}

fn invariant() -> Check {
    let eng = Engine::new(Params::symbolic());
    let l = |b: &BraidWord| kauffman_b(&eng, b).map(|r| r.value).map_err(|e| e.to_string());
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(SEED);
    use rand::Rng;
    for k in 0..100 {
        let n = rng.gen_range(1..=3);
        let (lb, la) = (rng.gen_range(0..=6), rng.gen_range(0..=6));
        let b = random_braid(&mut rng, n, lb);
        let a = random_braid(&mut rng, n, la);
        ensure(l(&markov_conjugate(&b, &a))? == l(&b)?, format!("conjugation {k}: {b} by {a}"))?;
    }
    for k in 0..50 {
        let n = rng.gen_range(1..=2);
        let len = rng.gen_range(0..=6);
        let b = random_braid(&mut rng, n, len);
        ensure(l(&markov_stabilize(&b))? == l(&b)?, format!("stabilization {k}: {b}"))?;
    }
    let p = Params::symbolic();
    ensure(l(&parse_braid("", 1).unwrap())? == Scalar::int(1), "L(unknot) != 1")?;
    ensure(l(&parse_braid("y", 1).unwrap())? == p.a.div(&p.x).unwrap(), "L(axis loop) != A/x")?;
    Ok("100 conjugations, 50 stabilizations, L(unknot) = 1, L(y) = A/x".into())
}

fn integrability() -> Check {
    let rep = Rep::symbolic(RepConfig::new(3), 3);
    ensure(ybe_residual(&rep).is_zero(), "YBE residual at N = 3")?;
    ensure(reflection_residual(&rep).is_zero(), "reflection residual at N = 3")?;
    let pts = seeded_points(SEED, 5);
    for pt in &pts {
        let rep = Rep::numeric(RepConfig::new(5), 3, &pt.s).map_err(|e| e.to_string())?;
        ensure(ybe_residual(&rep).is_zero(), format!("YBE residual at N = 5, s = {}", pt.s))?;
        ensure(reflection_residual(&rep).is_zero(), format!("reflection residual at N = 5, s = {}", pt.s))?;
    }
    Ok("symbolic at N = 3, 5 points at N = 5".into())
}

fn closure_identity() -> Check {
    let eng = Engine::new(Params::symbolic());
    for w in spanning_set(1) {
        ensure(closure_identity_check(&eng, 1, &Element::word(1, w.clone())), format!("{w:?} on 1 strand"))?;
    }
    for t in ["1", "y", "x1", "e1", "y x1"] {
        ensure(closure_identity_check(&eng, 2, &Element::parse(2, t).unwrap()), format!("{t} on 2 strands"))?;
    }
    Ok("BB_1 spanning words and 5 elements of BB_2".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("relation suites", relations),
        ("dimension and Gram rank", dimension),
        ("trace equals weighted matrix trace", trace_identity),
        ("classical diagram oracle", classical_oracle),
        ("Bratteli dimension identity", bratteli),
        ("invariant under Markov moves", invariant),
        ("Yang-Baxter and reflection equations", integrability),
        ("closure identity", closure_identity),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match f() {
            Ok(detail) => println!("PASS {} {name}: {detail} ({:.1?})", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} ({:.1?})", i + 1, t.elapsed());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
