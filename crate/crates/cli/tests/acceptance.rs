//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Every comparison is exact.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_rational::BigRational;
use serde_json::Value;

use qlogic::classical::two_state_demo;
use qlogic::dsl::{self, Structure, Verdict};
use qlogic::process::{
    check_distributivity, hatch_demo, holds_surely, prob_of, run, spin_demo, DistributivityStatus, History,
};
use qlogic::propositions::{find_closure_violation, is_subspace_closed, spin_bound_witness};
use qlogic::random::{small_scalar, trial_rng};
use qlogic::subspace::{check_orthomodular, distributes, find_nondistributive_witness, random_subspace};
use qlogic::{expectation, inner, spin, Interval, Matrix, Proposition, Scalar, ScalarField, Subspace, Vector};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = qlogic_cli::run(std::iter::once("qlogic").chain(args.iter().copied()));
    (out.code, out.stdout)
}

fn cli_json(args: &[&str]) -> Result<Value, String> {
    let (code, stdout) = cli(args);
    ensure!(code == 0, "{args:?} exited with {code}");
    e(serde_json::from_str(&stdout))
}

fn spin_histories() -> Result<(qlogic::process::Demo, Vec<History>), String> {
    let demo = spin_demo();
    let hs = e(run(&demo.process))?;
    Ok((demo, hs))
}

fn criterion_1() -> Outcome {
    let (demo, hs) = spin_histories()?;
    let (left, right) = demo.distributive_sides("p_i", ("q_i", "r_i"), ("q_i", "r_i"));
    ensure!(!e(holds_surely(&left, &hs))?, "p_i ∧ (q_i ∨ r_i) holds surely");
    ensure!(!e(holds_surely(&right, &hs))?, "(p_i∧q_i) ∨ (p_i∧r_i) holds surely");
    ensure!(e(prob_of(&left, &hs))? == q(0, 1), "left side is not ⊥");
    ensure!(e(prob_of(&right, &hs))? == q(0, 1), "right side is not ⊥");
    let v = e(check_distributivity(&left, &right, &hs))?;
    ensure!(v.status == DistributivityStatus::Satisfied, "status {}", v.status);
    Ok("both sides ⊥".into())
}

fn criterion_2() -> Outcome {
    let (demo, hs) = spin_histories()?;
    let (left, right) = demo.distributive_sides("p_i", ("q_o", "r_o"), ("q_o", "r_o"));
    ensure!(e(holds_surely(&left, &hs))?, "p_i ∧ (q_o ∨ r_o) fails somewhere");
    ensure!(e(holds_surely(&right, &hs))?, "(p_i∧q_o) ∨ (p_i∧r_o) fails somewhere");
    let v = e(check_distributivity(&left, &right, &hs))?;
    ensure!(v.agree_per_history, "sides differ on some history: {:?}", v.per_history);
    ensure!(v.status == DistributivityStatus::Satisfied, "status {}", v.status);
    let report = cli_json(&["demo", "spin"])?;
    let verdicts: Vec<&str> = report["results"]["laws"]
        .as_array()
        .ok_or("no laws")?
        .iter()
        .filter_map(|l| l["verdict"].as_str())
        .collect();
    ensure!(verdicts[..2] == ["satisfied", "satisfied"], "CLI verdicts {verdicts:?}");
    Ok(format!("both sides ⊤ on all {} histories", hs.len()))
}

fn criterion_3() -> Outcome {
    let (demo, hs) = spin_histories()?;
    let p = e(prob_of(&demo.f("p_i").and(demo.f("q_o")), &hs))?;
    ensure!(p == q(1, 2), "prob = {p}");
    let report = cli_json(&["demo", "spin"])?;
    let shown = &report["results"]["probabilities"]["p_i ∧ q_o"];
    ensure!(shown == "1/2", "CLI shows {shown}");
    Ok("prob(p_i ∧ q_o) = 1/2".into())
}

fn criterion_4() -> Outcome {
    let s_y = spin::s_y();
    ensure!(e(expectation(&s_y, &spin::x_up()))? == q(0, 1), "⟨S_y⟩ at (1,1)");
    ensure!(e(expectation(&s_y, &spin::y_up()))? == q(1, 2), "⟨S_y⟩ at (1,i)");
    ensure!(e(expectation(&s_y, &spin::y_down()))? == q(-1, 2), "⟨S_y⟩ at (1,-i)");
    let (demo, hs) = spin_histories()?;
    let either = demo.f("q'_i").or(demo.f("r'_i"));
    for h in &hs {
        ensure!(!e(either.eval(h))?, "q'_i ∨ r'_i true on a history");
    }
    let q_prime = Proposition::or([
        e(Proposition::expectation_in(s_y.clone(), vec![Interval::point(q(1, 2))]))?,
        e(Proposition::expectation_in(
            s_y.clone(),
            vec![Interval::point(q(-1, 2))],
        ))?,
    ]);
    ensure!(!e(q_prime.eval(&spin::x_up()))?, "q'_i ∨ r'_i true at (1,1)");

    // ρ = |ψ⟩⟨ψ| / ⟨ψ,ψ⟩
    let psi = spin::x_up();
    let norm = Scalar::real(psi.norm_sqr());
    let rows: Vec<Vec<Scalar>> = (0..2)
        .map(|j| (0..2).map(|k| &(&psi[j] * &psi[k].conj()) / &norm).collect())
        .collect();
    let rho = e(Matrix::new(rows))?;
    ensure!(e(rho.trace())? == Scalar::from_int(1), "Tr ρ ≠ 1");
    let t = e(e(rho.mul(&s_y))?.trace())?;
    ensure!(t == Scalar::from_int(0), "Tr(ρ S_y) = {t}");
    Ok("⟨S_y⟩ = 0, ±1/2; Tr(ρ S_y) = 0".into())
}

fn criterion_5() -> Outcome {
    let (demo, hs) = spin_histories()?;
    ensure!(
        e(holds_surely(&demo.f("p_f").or(demo.f("q_f")), &hs))?,
        "p_f ∨ q_f fails"
    );
    for h in &hs {
        ensure!(
            e(demo.f("q_f").eval(h))? == e(demo.f("q_o").eval(h))?,
            "q_f and q_o differ on a history"
        );
    }
    Ok("p_f ∨ q_f surely; q_f ⟷ q_o".into())
}

fn criterion_6() -> Outcome {
    let demo = hatch_demo();
    let hs = e(run(&demo.process))?;
    ensure!(e(prob_of(&demo.f("q_o"), &hs))? == q(1, 2), "prob(q_o)");
    ensure!(e(prob_of(&demo.f("r_o"), &hs))? == q(1, 2), "prob(r_o)");
    ensure!(
        e(holds_surely(&demo.f("q_o").or(demo.f("r_o")), &hs))?,
        "q_o ∨ r_o fails"
    );
    ensure!(e(holds_surely(&demo.f("p_i"), &hs))?, "p_i fails");
    ensure!(e(holds_surely(&demo.f("q_i").not(), &hs))?, "q_i holds somewhere");
    ensure!(e(holds_surely(&demo.f("r_i").not(), &hs))?, "r_i holds somewhere");
    let (left, right) = demo.distributive_sides("p_i", ("q_o", "r_o"), ("q_i", "r_i"));
    let v = e(check_distributivity(&left, &right, &hs))?;
    ensure!(
        v.left_surely && !v.right_surely,
        "expected ⊤ vs ⊥, got {} vs {}",
        v.left_surely,
        v.right_surely
    );
    ensure!(v.status == DistributivityStatus::IndexMismatched, "status {}", v.status);
    Ok("prob(q_o) = prob(r_o) = 1/2; mixed indices flagged".into())
}

fn criterion_7() -> Outcome {
    let mut seen = Vec::new();
    for field in [ScalarField::RationalReal, ScalarField::GaussianRational] {
        let v = e(two_state_demo(field))?;
        // recompute from the parts
        let left = e(v.even.meet(&e(v.first.join(&v.second))?))?;
        let right = e(e(v.even.meet(&v.first))?.join(&e(v.even.meet(&v.second))?))?;
        ensure!(left == v.even && v.name_of(&left) == "[k,k]", "{field}: left = {left}");
        ensure!(
            right.is_zero() && v.name_of(&right) == "[0,0]",
            "{field}: right = {right}"
        );
        ensure!(!e(distributes(&v.even, &v.first, &v.second))?, "{field}: distributes");
        ensure!(!v.distributes, "{field}: verdict says distributive");
        seen.push((left, right, v.distributes));
    }
    ensure!(seen[0] == seen[1], "fields disagree");
    let report = cli_json(&["demo", "two-state"])?;
    let r = &report["results"];
    ensure!(
        r["left"] == "[k,k]" && r["right"] == "[0,0]" && r["verdict"] == "not distributive",
        "CLI: {r}"
    );
    Ok("[k,k] vs [0,0] over both fields".into())
}

/// Every ortholattice law, orthomodularity and modularity on one sampled triple.
fn lattice_laws(trial: u64) -> Result<(), String> {
    let dim = 2 + (trial % 3) as usize;
    let field = if trial.is_multiple_of(2) {
        ScalarField::GaussianRational
    } else {
        ScalarField::RationalReal
    };
    let mut rng = trial_rng(2024, trial);
    let p = random_subspace(&mut rng, dim, field);
    let q_ = random_subspace(&mut rng, dim, field);
    let r = random_subspace(&mut rng, dim, field);
    let (zero, full) = (Subspace::zero(dim), Subspace::full(dim));
    let ctx = || format!("trial {trial}: p = {p}, q = {q_}, r = {r}");

    ensure!(p.ortho().ortho() == p, "involution, {}", ctx());
    ensure!(
        e(p.join(&q_))?.ortho() == e(p.ortho().meet(&q_.ortho()))?,
        "De Morgan (join), {}",
        ctx()
    );
    ensure!(
        e(p.meet(&q_))?.ortho() == e(p.ortho().join(&q_.ortho()))?,
        "De Morgan (meet), {}",
        ctx()
    );
    ensure!(e(p.join(&e(p.meet(&q_))?))? == p, "absorption (join), {}", ctx());
    ensure!(e(p.meet(&e(p.join(&q_))?))? == p, "absorption (meet), {}", ctx());
    ensure!(e(p.meet(&p.ortho()))? == zero, "p ∧ p⊥ = 0, {}", ctx());
    ensure!(e(p.join(&p.ortho()))? == full, "p ∨ p⊥ = 1, {}", ctx());
    ensure!(e(check_orthomodular(&p, &q_))?, "orthomodular (p, q), {}", ctx());
    let below = e(p.meet(&r))?;
    ensure!(e(check_orthomodular(&below, &r))?, "orthomodular (p ∧ r, r), {}", ctx());
    // modular law, with the hypothesis forced by replacing p with p ∧ r
    ensure!(
        e(below.join(&e(q_.meet(&r))?))? == e(e(below.join(&q_))?.meet(&r))?,
        "modular, {}",
        ctx()
    );
    if e(p.leq(&r))? {
        ensure!(
            e(p.join(&e(q_.meet(&r))?))? == e(e(p.join(&q_))?.meet(&r))?,
            "modular (raw), {}",
            ctx()
        );
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    const TRIPLES: u64 = 10_000;
    let start = Instant::now();
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()) as u64;
    let failures: Vec<String> = std::thread::scope(|scope| {
        let workers: Vec<_> = (0..threads)
            .map(|t| {
                scope.spawn(move || {
                    (t..TRIPLES)
                        .step_by(threads as usize)
                        .find_map(|k| lattice_laws(k).err())
                })
            })
            .collect();
        workers
            .into_iter()
            .filter_map(|w| w.join().expect("worker panicked"))
            .collect()
    });
    ensure!(failures.is_empty(), "{}", failures.join("; "));
    let w = e(find_nondistributive_witness(2, 1000, 42))?.ok_or("no witness in 1000 trials")?;
    ensure!(!e(distributes(&w.p, &w.q, &w.r))?, "reported witness distributes");
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    Ok(format!(
        "{TRIPLES} triples in dims 2-4, witness at trial {}, {:.1}s",
        w.trial,
        elapsed.as_secs_f64()
    ))
}

fn criterion_9() -> Outcome {
    // (a) zero mean of S_z is not a subspace
    let zero_mean = e(Proposition::expectation_in(spin::s_z(), vec![Interval::point(q(0, 1))]))?;
    let probes = [spin::x_up(), spin::x_down()];
    ensure!(!e(is_subspace_closed(&zero_mean, &probes))?, "closure reported");
    let v = e(find_closure_violation(&zero_mean, &probes))?.ok_or("no violation")?;
    let z_ray = e(Subspace::span(&[spin::z_up()], 2))?;
    ensure!(
        e(z_ray.contains(&v.combination))?,
        "combination {} is not along z+",
        v.combination
    );

    // (b) join is not union
    let first = e(Subspace::span(&[Vector::from_ints(&[1, 0])], 2))?;
    let second = e(Subspace::span(&[Vector::from_ints(&[0, 1])], 2))?;
    let probe = Vector::from_ints(&[1, 1]);
    let union = Proposition::or([
        Proposition::InSubspace(first.clone()),
        Proposition::InSubspace(second.clone()),
    ]);
    ensure!(!e(union.eval(&probe))?, "union holds at (1,1)");
    ensure!(
        e(Proposition::InSubspace(e(first.join(&second))?).eval(&probe))?,
        "join misses (1,1)"
    );

    // (c) |⟨S_y⟩| ≤ 1/2, attained only on the y rays
    let rays = [
        e(Subspace::span(&[spin::y_up()], 2))?,
        e(Subspace::span(&[spin::y_down()], 2))?,
    ];
    let half = q(1, 2);
    let (mut states, mut extremal) = (0u32, 0u32);
    for trial in 0..10_000u64 {
        let mut rng = trial_rng(9, trial);
        let psi = Vector::new(vec![small_scalar(&mut rng, true), small_scalar(&mut rng, true)]);
        if psi.is_zero() {
            continue;
        }
        states += 1;
        let m = e(spin_bound_witness(&psi))?;
        ensure!(m <= half && m >= -half.clone(), "⟨S_y⟩ = {m} at {psi}");
        let line = e(Subspace::span(std::slice::from_ref(&psi), 2))?;
        let on_ray = e(line.leq(&rays[0]))? || e(line.leq(&rays[1]))?;
        ensure!(
            (m == half || m == -half.clone()) == on_ray,
            "bound/ray mismatch at {psi}: {m}"
        );
        extremal += on_ray as u32;
    }
    ensure!(
        states >= 10_000 - 10 && extremal > 0,
        "{states} states, {extremal} on the y rays"
    );
    ensure!(
        inner(&spin::y_up(), &spin::y_down()).map_err(|e| e.to_string())? == Scalar::from_int(0),
        "y rays not orthogonal"
    );
    Ok(format!(
        "violation along z+; union ≠ join; {states} states, {extremal} extremal"
    ))
}

fn criterion_10() -> Outcome {
    let laws = [
        "x & (y | z) = (x & y) | (x & z)",
        "!(x | y) = !x & !y",
        "!(x & y) = !x | !y",
        "x | (x & y) = x",
        "x & (x | y) = x",
    ];
    let mut reports = Vec::new();
    for law in laws {
        let stmt = e(dsl::parse(law))?;
        for n in 1..=4 {
            let r = e(dsl::check(&stmt, &e(Structure::boolean(n))?, 1, 0))?;
            ensure!(
                r.exhaustive && r.verdict == Verdict::NoCounterexample,
                "{law} fails on {n} points"
            );
            reports.push(r);
        }
    }
    let weaker = e(dsl::parse("(x&y)|(x&z) <= x&(y|z)"))?;
    let lattice3 = e(Structure::subspace(3, ScalarField::GaussianRational))?;
    let r = e(dsl::check(&weaker, &lattice3, 1000, 0))?;
    ensure!(
        r.verdict == Verdict::NoCounterexample && r.trials == 1000,
        "weaker law: {r}"
    );
    reports.push(r);
    let distributive = e(dsl::parse(laws[0]))?;
    let lattice2 = e(Structure::subspace(2, ScalarField::GaussianRational))?;
    let r = e(dsl::check(&distributive, &lattice2, 1000, 0))?;
    ensure!(r.verdict == Verdict::Counterexample, "no counterexample in the plane");
    reports.push(r);
    for r in &reports {
        ensure!(e(r.verify())?, "report does not verify: {r}");
    }
    Ok(format!("{} reports self-verify", reports.len()))
}

fn criterion_11() -> Outcome {
    let dir = e(tempfile::tempdir())?;
    let write = |name: &str, body: &str| -> Result<String, String> {
        let path = dir.path().join(name);
        e(std::fs::write(&path, body))?;
        Ok(path.to_string_lossy().into_owned())
    };
    let a = write("a.json", r#"{"space_dim": 2, "basis": [["1", "1"]]}"#)?;
    let b = write("b.json", r#"{"space_dim": 2, "basis": [["1", "0"]]}"#)?;
    let prop = write(
        "p.json",
        r#"{"tag": "in_subspace", "subspace": {"space_dim": 2, "basis": [["1", "i"]]}}"#,
    )?;
    let state = write("s.json", r#"{"amplitude": ["2", "2i"]}"#)?;
    let invocations: Vec<Vec<&str>> = vec![
        vec!["demo", "spin"],
        vec!["demo", "hatch"],
        vec!["demo", "two-state"],
        vec!["lattice", "meet", &a, &b],
        vec!["lattice", "join", &a, &b],
        vec!["lattice", "ortho", &a],
        vec!["lattice", "leq", &a, &b],
        vec![
            "check",
            "x & (y | z) = (x & y) | (x & z)",
            "--structure",
            "subspace",
            "--dim",
            "2",
            "--trials",
            "500",
            "--seed",
            "17",
        ],
        vec![
            "check",
            "(x & y) | (x & z) <= x & (y | z)",
            "--structure",
            "subspace",
            "--dim",
            "3",
            "--trials",
            "200",
            "--seed",
            "5",
        ],
        vec![
            "check",
            "x & (y | z) = (x & y) | (x & z)",
            "--structure",
            "boolean",
            "--dim",
            "3",
        ],
        vec!["props", "eval", &prop, &state],
    ];
    for args in &invocations {
        let mut args = args.clone();
        args.extend(["--format", "json"]);
        let (c1, o1) = cli(&args);
        let (c2, o2) = cli(&args);
        ensure!(c1 == c2 && c1 != 2, "{args:?}: exit codes {c1}, {c2}");
        ensure!(o1 == o2, "{args:?}: output differs between runs");
        ensure!(serde_json::from_str::<Value>(&o1).is_ok(), "{args:?}: not JSON");
    }
    Ok(format!("{} invocations byte-identical", invocations.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("spin demo, prepared-index distributive law: both sides ⊥", criterion_1),
        ("spin demo, measured-index distributive law: both sides ⊤", criterion_2),
        ("spin demo, Born value of p_i ∧ q_o", criterion_3),
        ("S_y expectations and Tr(ρ S_y)", criterion_4),
        ("spin demo, final stage", criterion_5),
        ("hatch demo", criterion_6),
        ("two-state lattice verdict", criterion_7),
        ("ortholattice property suite", criterion_8),
        ("closure and bound witnesses", criterion_9),
        ("identity checker baseline", criterion_10),
        ("CLI determinism", criterion_11),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail})", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
