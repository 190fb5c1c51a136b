use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bbn::algebra::{all_relations, spanning_set, Element, Engine, Relation};
use bbn::coeffs::{seeded_points, EvalPoint, Params, Scalar, Q};
use bbn::combinatorics::{bratteli_export, dimension_check, dimension_formula, path_counts};
use bbn::diagrams::{all_diagrams, diagram_gram_nondegenerate, word_shadow, DottedDiagram};
use bbn::invariant::{kauffman_b, parse_braid};
use bbn::tensor::{reflection_residual, ybe_residual, Rep, RepConfig};
use bbn::trace::gram_rank;

#[derive(Parser)]
#[command(name = "bbn", version, about = "Exact computations in the type-B BMW algebra")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[arg(long, value_enum, default_value_t = Mode::Symbolic, global = true)]
    mode: Mode,
    #[arg(long, default_value_t = 1, global = true)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Symbolic,
    Numeric,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Def,
    LemmaA,
    LemmaB,
    Ybe,
    Reflection,
    TracePsi,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DiagramOp {
    Trace,
    Compose,
    Star,
    Shadow,
    Gram,
    Count,
}

#[derive(Subcommand)]
enum Cmd {
    /// Invariant of the closure of a braid.
    Invariant {
        #[arg(long)]
        strands: usize,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        braid: String,
    },
    /// Markov trace of an algebra element.
    Trace {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        element: String,
    },
    /// Runs a relation or representation check suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long = "N", default_value_t = 3)]
        big_n: usize,
    },
    /// Spanning set size and Gram rank.
    Dimension {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        points: usize,
    },
    /// Bratteli diagram path counts and the dimension identity.
    Bratteli {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long)]
        export: bool,
    },
    /// Dotted Brauer diagram operations.
    Diagram {
        #[arg(long, value_enum)]
        op: DiagramOp,
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        diagram: Vec<String>,
        #[arg(long, default_value = "")]
        word: String,
    },
}

/// A usage error (exit 2) or a failed check (exit 1).
enum Failure {
    Usage(String),
    Check(Value),
}

type Outcome = Result<Value, Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn point(seed: u64) -> EvalPoint {
    seeded_points(seed, 1).remove(0)
}

fn engine_q(seed: u64) -> Result<(Engine<Q>, EvalPoint), Failure> {
    let pt = point(seed);
    Ok((Engine::new(Params::at(&pt).map_err(usage)?), pt))
}

fn specialize_element(a: &Element<Scalar>, pt: &EvalPoint) -> Result<Element<Q>, Failure> {
    let mut r = Element::zero(a.strands());
    for (w, c) in a.terms() {
        r.add_term(w.clone(), c.specialize(pt).map_err(usage)?);
    }
    Ok(r)
}

fn invariant(cli: &Cli, strands: usize, braid: &str) -> Outcome {
    let b = parse_braid(braid, strands).map_err(usage)?;
    let (e, value) = match cli.mode {
        Mode::Symbolic => {
            let eng = Engine::new(Params::symbolic());
            let r = kauffman_b(&eng, &b).map_err(usage)?;
            (r.exponent_sum, r.value.canonical())
        }
        Mode::Numeric => {
            let (eng, _) = engine_q(cli.seed)?;
            let r = kauffman_b(&eng, &b).map_err(usage)?;
            (r.exponent_sum, r.value.to_string())
        }
    };
    Ok(json!({ "strands": strands, "braid": b.to_string(), "exponent_sum": e, "invariant": value }))
}

fn trace(cli: &Cli, strands: usize, element: &str) -> Outcome {
    let a = Element::parse(strands, element).map_err(usage)?;
    let value = match cli.mode {
        Mode::Symbolic => Engine::new(Params::symbolic()).trace(&a).canonical(),
        Mode::Numeric => {
            let (eng, pt) = engine_q(cli.seed)?;
            eng.trace(&specialize_element(&a, &pt)?).to_string()
        }
    };
    Ok(json!({ "strands": strands, "element": element, "trace": value }))
}

fn relation_cases(cli: &Cli, rels: Vec<Relation>) -> Result<Vec<(String, bool)>, Failure> {
    match cli.mode {
        Mode::Symbolic => {
            let eng = Engine::new(Params::symbolic());
            Ok(rels.iter().map(|r| (r.name.clone(), r.verify(&eng).is_ok())).collect())
        }
        Mode::Numeric => {
            let (eng, pt) = engine_q(cli.seed)?;
            Ok(rels.iter().map(|r| (r.name.clone(), r.verify_at(&eng, &pt).is_ok())).collect())
        }
    }
}

fn suite_cases(cli: &Cli, suite: Suite, n: usize, big_n: usize) -> Result<Vec<(String, bool)>, Failure> {
    if !(1..=4).contains(&n) {
        return Err(Failure::Usage(format!("--n must be in 1..=4, got {n}")));
    }
    if big_n < 3 || big_n.is_multiple_of(2) {
        return Err(Failure::Usage(format!("--N must be odd and at least 3, got {big_n}")));
    }
    let rels = all_relations(n, &Params::symbolic());
    Ok(match suite {
        Suite::Def => relation_cases(cli, rels.into_iter().filter(|r| r.is_defining()).collect())?,
        Suite::LemmaA | Suite::LemmaB => {
            let type_a: Vec<String> = bbn::algebra::type_a_relations(n, &Params::symbolic()).into_iter().map(|r| r.name).collect();
            let want_a = suite == Suite::LemmaA;
            let pick = rels.into_iter().filter(|r| !r.is_defining() && type_a.contains(&r.name) == want_a).collect();
            relation_cases(cli, pick)?
        }
        Suite::Ybe | Suite::Reflection => {
            if n < 2 || (suite == Suite::Ybe && n < 3) {
                return Err(Failure::Usage("the check needs more strands".into()));
            }
            let check = |zero: bool| ((if suite == Suite::Ybe { "ybe" } else { "reflection" }).to_string(), zero);
            let mut out = Vec::new();
            let cfg = RepConfig::new(big_n);
            match cli.mode {
                Mode::Symbolic => {
                    let rep = Rep::symbolic(cfg, n);
                    let z = if suite == Suite::Ybe { ybe_residual(&rep).is_zero() } else { reflection_residual(&rep).is_zero() };
                    out.push(check(z));
                }
                Mode::Numeric => {
                    for pt in seeded_points(cli.seed, 5) {
                        let rep = Rep::numeric(cfg.clone(), n, &pt.s).map_err(usage)?;
                        let z = if suite == Suite::Ybe { ybe_residual(&rep).is_zero() } else { reflection_residual(&rep).is_zero() };
                        let (name, ok) = check(z);
                        out.push((format!("{name}[s={}]", pt.s), ok));
                    }
                }
            }
            out
        }
        Suite::TracePsi => {
            let cfg = RepConfig::new(big_n);
            let eng = Engine::new(cfg.params());
            let rep = Rep::symbolic(cfg, n);
            spanning_set(n)
                .into_iter()
                .map(|w| {
                    let ok = eng.trace_word(n, &w) == rep.psi(&rep.word(&w));
                    (bbn::algebra::format_word(&w), ok)
                })
                .collect()
        }
        Suite::All => {
            let mut out = Vec::new();
            for s in [Suite::Def, Suite::LemmaA, Suite::LemmaB, Suite::Ybe, Suite::Reflection, Suite::TracePsi] {
                if (s == Suite::Ybe && n < 3) || (s == Suite::Reflection && n < 2) {
                    continue;
                }
                out.extend(suite_cases(cli, s, n, big_n)?);
            }
            out
        }
    })
}

fn verify(cli: &Cli, suite: Suite, n: usize, big_n: usize) -> Outcome {
    let cases = suite_cases(cli, suite, n, big_n)?;
    let failed: Vec<&String> = cases.iter().filter(|c| !c.1).map(|c| &c.0).collect();
    let v = json!({
        "n": n,
        "N": big_n,
        "cases": cases.len(),
        "failed": failed,
        "pass": failed.is_empty(),
    });
    if failed.is_empty() {
        Ok(v)
    } else {
        Err(Failure::Check(v))
    }
}

fn dimension(cli: &Cli, n: usize, points: usize) -> Outcome {
    let size = spanning_set(n).len();
    let expected = dimension_formula(n) as usize;
    let mut ranks = Vec::new();
    for pt in seeded_points(cli.seed, points) {
        ranks.push(json!({ "point": pt.to_string(), "rank": gram_rank(n, &pt).map_err(usage)? }));
    }
    let full = ranks.iter().all(|r| r["rank"] == json!(expected));
    let v = json!({ "n": n, "spanning": size, "expected": expected, "ranks": ranks, "pass": full && size == expected });
    if full && size == expected {
        Ok(v)
    } else {
        Err(Failure::Check(v))
    }
}

fn bratteli(n: usize, export: bool) -> Outcome {
    let counts: Vec<Value> =
        path_counts(n).iter().map(|(p, c)| json!({ "node": p.to_string(), "paths": c.to_string() })).collect();
    let ok = (0..=n).all(dimension_check);
    let mut v = json!({ "n": n, "nodes": counts, "dimension_check": ok });
    if export {
        v["export"] = json!(bratteli_export(n));
    }
    if ok {
        Ok(v)
    } else {
        Err(Failure::Check(v))
    }
}

fn diagram(op: DiagramOp, strands: usize, texts: &[String], word: &str) -> Outcome {
    let ds: Vec<DottedDiagram> =
        texts.iter().map(|t| DottedDiagram::parse(strands, t)).collect::<Result<_, _>>().map_err(usage)?;
    let need = |k: usize| {
        if ds.len() < k {
            Err(Failure::Usage(format!("expected {k} --diagram arguments")))
        } else {
            Ok(())
        }
    };
    Ok(match op {
        DiagramOp::Trace => {
            need(1)?;
            json!({ "diagram": ds[0].to_string(), "trace": ds[0].trace().to_string() })
        }
        DiagramOp::Compose => {
            need(2)?;
            let (d, n0, n1) = ds[0].compose(&ds[1]);
            json!({ "diagram": d.to_string(), "undotted_loops": n0, "dotted_loops": n1 })
        }
        DiagramOp::Star => {
            need(1)?;
            json!({ "diagram": ds[0].star().to_string() })
        }
        DiagramOp::Shadow => {
            let w = bbn::algebra::parse_word(word).map_err(usage)?;
            bbn::algebra::check_range(&w, strands).map_err(usage)?;
            let s = word_shadow(strands, &w);
            let (d, c) = s.terms.iter().next().expect("a word has one shadow");
            json!({ "diagram": d.to_string(), "factor": c.to_string() })
        }
        DiagramOp::Gram => {
            let ok = diagram_gram_nondegenerate(strands);
            let v = json!({ "strands": strands, "nondegenerate": ok });
            if !ok {
                return Err(Failure::Check(v));
            }
            v
        }
        DiagramOp::Count => json!({ "strands": strands, "diagrams": all_diagrams(strands).len() }),
    })
}

fn render(v: &Value) -> String {
    match v {
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) if s.contains('\n') => format!("{k}:\n{}", s.trim_end()),
                Value::String(s) => format!("{k}: {s}"),
                Value::Array(a) => {
                    let items: Vec<String> = a.iter().map(|x| format!("  {}", compact(x))).collect();
                    if items.is_empty() {
                        format!("{k}: []")
                    } else {
                        format!("{k}:\n{}", items.join("\n"))
                    }
                }
                other => format!("{k}: {other}"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => other.to_string(),
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) => m.iter().map(|(k, v)| format!("{k}={}", compact(v))).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.cmd {
        Cmd::Invariant { strands, braid } => invariant(&cli, *strands, braid),
        Cmd::Trace { strands, element } => trace(&cli, *strands, element),
        Cmd::Verify { suite, n, big_n } => verify(&cli, *suite, *n, *big_n),
        Cmd::Dimension { n, points } => dimension(&cli, *n, *points),
        Cmd::Bratteli { n, export } => bratteli(*n, *export),
        Cmd::Diagram { op, strands, diagram: d, word } => diagram(*op, *strands, d, word),
    };
    let print = |v: &Value| match cli.format {
        Format::Json => println!("{v}"),
        Format::Text => println!("{}", render(v)),
    };
    match out {
        Ok(v) => {
            print(&v);
            ExitCode::SUCCESS
        }
        Err(Failure::Check(v)) => {
            print(&v);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
