use std::path::Path;

use num_rational::BigRational;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use qlogic::classical::{two_state_demo, ClassicalStateFile, PhaseSpace};
use qlogic::dsl::{self, CheckReport, Structure, Verdict};
use qlogic::process::{self, check_distributivity, holds_surely, prob_of, Demo, History};
use qlogic::{spin, Proposition, ScalarField, Subspace, Vector};

use crate::{CliError, Inputs, LatticeOp, Results};

fn ok(value: Value) -> Result<Results, CliError> {
    Ok(Results { value, failed: false })
}

/// `a ∧ (b ∨ c)` against `(a ∧ b′) ∨ (a ∧ c′)`.
fn law(demo: &Demo, hs: &[History], a: &str, bc: (&str, &str), bc2: (&str, &str)) -> Result<Value, CliError> {
    let (left, right) = demo.distributive_sides(a, bc, bc2);
    let v = check_distributivity(&left, &right, hs)?;
    Ok(json!({
        "left": format!("{a} ∧ ({} ∨ {})", bc.0, bc.1),
        "right": format!("({a} ∧ {}) ∨ ({a} ∧ {})", bc2.0, bc2.1),
        "left_surely": v.left_surely,
        "right_surely": v.right_surely,
        "agree_per_history": v.agree_per_history,
        "verdict": v.status.to_string(),
    }))
}

fn probabilities(demo: &Demo, hs: &[History], names: &[&[&str]]) -> Result<Value, CliError> {
    let mut out = Map::new();
    for conj in names {
        let mut f = demo.f(conj[0]);
        for n in &conj[1..] {
            f = f.and(demo.f(n));
        }
        out.insert(conj.join(" ∧ "), Value::String(prob_of(&f, hs)?.to_string()));
    }
    Ok(Value::Object(out))
}

fn surely(demo: &Demo, hs: &[History], names: &[&str]) -> Result<Value, CliError> {
    let mut out = Map::new();
    for n in names {
        let mut f = demo.f(n.split(" ∨ ").next().expect("nonempty"));
        for part in n.split(" ∨ ").skip(1) {
            f = f.or(demo.f(part));
        }
        out.insert(n.to_string(), Value::Bool(holds_surely(&f, hs)?));
    }
    Ok(Value::Object(out))
}

fn process_report(demo: &Demo, hs: &[History]) -> Result<Value, CliError> {
    let r = process::report(hs, &demo.formulas)?;
    Ok(serde_json::to_value(r).expect("reports serialize"))
}

pub(crate) fn demo_spin() -> Result<Results, CliError> {
    let demo = process::spin_demo();
    let hs = process::run(&demo.process)?;
    let s_y = spin::s_y();
    let exp = |v: Vector| qlogic::expectation(&s_y, &v).map(|e| e.to_string());
    let q_f_tracks_q_o = hs
        .iter()
        .map(|h| Ok(demo.f("q_f").eval(h)? == demo.f("q_o").eval(h)?))
        .collect::<Result<Vec<bool>, qlogic::Error>>()?
        .into_iter()
        .all(|b| b);
    ok(json!({
        "demo": "spin",
        "process": process_report(&demo, &hs)?,
        "probabilities": probabilities(&demo, &hs, &[&["q_o"], &["r_o"], &["p_i", "q_o"], &["p_i", "r_o"]])?,
        "surely": surely(&demo, &hs, &["p_i", "q_i ∨ r_i", "q_o ∨ r_o", "q'_i ∨ r'_i", "p_f ∨ q_f"])?,
        "expectations": {
            "S_y at (1, 1)": exp(spin::x_up())?,
            "S_y at (1, i)": exp(spin::y_up())?,
            "S_y at (1, -i)": exp(spin::y_down())?,
        },
        "q_f iff q_o on every history": q_f_tracks_q_o,
        "laws": [
            law(&demo, &hs, "p_i", ("q_i", "r_i"), ("q_i", "r_i"))?,
            law(&demo, &hs, "p_i", ("q_o", "r_o"), ("q_o", "r_o"))?,
            law(&demo, &hs, "p_i", ("q_o", "r_o"), ("q_i", "r_i"))?,
        ],
    }))
}

pub(crate) fn demo_hatch() -> Result<Results, CliError> {
    let demo = process::hatch_demo();
    let hs = process::run(&demo.process)?;
    ok(json!({
        "demo": "hatch",
        "process": process_report(&demo, &hs)?,
        "probabilities": probabilities(&demo, &hs, &[&["q_o"], &["r_o"], &["p_i", "q_o"]])?,
        "surely": surely(&demo, &hs, &["p_i", "q_i", "r_i", "q_i ∨ r_i", "q_o ∨ r_o"])?,
        "laws": [
            law(&demo, &hs, "p_i", ("q_i", "r_i"), ("q_i", "r_i"))?,
            law(&demo, &hs, "p_i", ("q_o", "r_o"), ("q_o", "r_o"))?,
            law(&demo, &hs, "p_i", ("q_o", "r_o"), ("q_i", "r_i"))?,
        ],
    }))
}

fn named(v: &qlogic::classical::TwoStateVerdict, s: &Subspace) -> Value {
    json!({ "name": v.name_of(s), "subspace": s })
}

pub(crate) fn demo_two_state() -> Result<Results, CliError> {
    let mut fields = Map::new();
    let mut verdicts = Vec::new();
    for field in [ScalarField::RationalReal, ScalarField::GaussianRational] {
        let v = two_state_demo(field)?;
        fields.insert(
            field.to_string(),
            json!({
                "first": named(&v, &v.first),
                "second": named(&v, &v.second),
                "even": named(&v, &v.even),
                "first ∨ second": named(&v, &v.whole),
                "pairwise meets": v.pairwise_meets.iter().map(|s| v.name_of(s)).collect::<Vec<_>>(),
                "left": named(&v, &v.left),
                "right": named(&v, &v.right),
                "distributes": v.distributes,
            }),
        );
        verdicts.push(v);
    }
    let [real, gaussian] = [&verdicts[0], &verdicts[1]];
    let same = real.left == gaussian.left && real.right == gaussian.right && real.distributes == gaussian.distributes;
    ok(json!({
        "demo": "two-state",
        "law": "[k,k] ∧ ([k,0] ∨ [0,k]) = ([k,k] ∧ [k,0]) ∨ ([k,k] ∧ [0,k])",
        "left": real.name_of(&real.left),
        "right": real.name_of(&real.right),
        "verdict": if real.distributes { "distributive" } else { "not distributive" },
        "field_insensitive": same,
        "fields": fields,
    }))
}

pub(crate) fn lattice(op: LatticeOp, a: &Path, b: Option<&Path>, inputs: &mut Inputs) -> Result<Results, CliError> {
    let s: Subspace = inputs.json(a)?;
    let value = match (op, b) {
        (LatticeOp::Ortho, None) => json!({ "op": "ortho", "result": s.ortho() }),
        (LatticeOp::Ortho, Some(_)) => return Err(CliError::Usage("ortho takes one subspace file".into())),
        (_, None) => return Err(CliError::Usage("this operation takes two subspace files".into())),
        (op, Some(b)) => {
            let t: Subspace = inputs.json(b)?;
            match op {
                LatticeOp::Meet => json!({ "op": "meet", "result": s.meet(&t)? }),
                LatticeOp::Join => json!({ "op": "join", "result": s.join(&t)? }),
                LatticeOp::Leq => json!({ "op": "leq", "result": s.leq(&t)? }),
                LatticeOp::Ortho => unreachable!(),
            }
        }
    };
    ok(value)
}

pub(crate) enum Statements {
    Inline(String),
    File(String),
}

fn summary(r: &CheckReport) -> String {
    match (&r.counterexample, r.exhaustive) {
        (Some(c), _) => format!("counterexample at trial {}", c.trial),
        (None, true) => "no counterexample (exhaustive)".into(),
        (None, false) => format!("no counterexample in {} trials", r.trials),
    }
}

fn checked(r: CheckReport) -> Value {
    let mut v = serde_json::to_value(&r).expect("reports serialize");
    v["summary"] = Value::String(summary(&r));
    v
}

pub(crate) fn check(source: Statements, s: &Structure, trials: u64, seed: u64) -> Result<Results, CliError> {
    match source {
        Statements::Inline(text) => {
            let stmt = dsl::parse(&text).map_err(qlogic::Error::from)?;
            let r = dsl::check(&stmt, s, trials, seed)?;
            let failed = r.verdict == Verdict::Counterexample;
            Ok(Results {
                value: checked(r),
                failed,
            })
        }
        Statements::File(text) => {
            let stmts =
                dsl::parse_statements(&text).map_err(|(line, e)| CliError::Usage(format!("line {line}: {e}")))?;
            let mut failed = false;
            let mut out = Vec::new();
            for (line, stmt) in stmts {
                let r = dsl::check(&stmt, s, trials, seed)?;
                failed |= r.verdict == Verdict::Counterexample;
                let mut v = checked(r);
                v["line"] = json!(line);
                out.push(v);
            }
            Ok(Results {
                value: json!({ "statements": out }),
                failed,
            })
        }
    }
}

/// A bare amplitude list, or `{"amplitude": [...]}` with optional point labels.
#[derive(Deserialize)]
#[serde(untagged)]
enum StateFile {
    Bare(Vector),
    Labelled {
        amplitude: Vector,
        points: Option<PhaseSpace>,
    },
}

pub(crate) fn props_eval(prop: &Path, state: &Path, inputs: &mut Inputs) -> Result<Results, CliError> {
    let p: Proposition = inputs.json(prop)?;
    let (psi, points) = match inputs.json::<StateFile>(state)? {
        StateFile::Bare(v) => (v, None),
        StateFile::Labelled {
            amplitude,
            points: None,
        } => (amplitude, None),
        StateFile::Labelled {
            amplitude,
            points: Some(points),
        } => {
            let (points, s) = ClassicalStateFile { points, amplitude }.into_state()?;
            (s.amplitude().clone(), Some(points))
        }
    };
    if let Some(dim) = p.validate()? {
        if dim != psi.dim() {
            return Err(qlogic::Error::DimensionMismatch {
                expected: dim,
                found: psi.dim(),
            }
            .into());
        }
    }
    let holds = p.eval(&psi)?;
    let norm: BigRational = psi.norm_sqr();
    ok(json!({
        "holds": holds,
        "state": psi,
        "norm_sqr": norm.to_string(),
        "points": points,
    }))
}
