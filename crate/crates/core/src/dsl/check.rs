use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::structure::{holds, Assignment, Element, Structure};
use super::IdentityStatement;
use crate::error::{Error, Result};
use crate::random::trial_rng;

/// Boolean checks enumerate every assignment when `universe_size · |vars|`
/// is at most this many bits.
pub const EXHAUSTIVE_LIMIT_BITS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    NoCounterexample,
    Counterexample,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NoCounterexample => "no counterexample",
            Verdict::Counterexample => "counterexample",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub trial: u64,
    pub assignment: Assignment,
    pub lhs: Element,
    pub rhs: Element,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    #[serde(serialize_with = "as_text")]
    pub statement: IdentityStatement,
    pub structure: Structure,
    /// Size of the search space: every assignment when exhaustive, otherwise
    /// the requested number of samples.
    pub trials: u64,
    pub exhaustive: bool,
    pub seed: u64,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
}

fn as_text<S: Serializer>(stmt: &IdentityStatement, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(stmt)
}

impl CheckReport {
    /// Re-evaluates the reported counterexample; true when it reproduces the
    /// reported sides and really falsifies the statement.
    pub fn verify(&self) -> Result<bool> {
        match &self.counterexample {
            None => Ok(self.verdict == Verdict::NoCounterexample),
            Some(c) => {
                let (lhs, rhs, ok) = holds(&self.statement, &c.assignment, &self.structure)?;
                Ok(self.verdict == Verdict::Counterexample && !ok && lhs == c.lhs && rhs == c.rhs)
            }
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "statement: {}", self.statement)?;
        writeln!(f, "structure: {}", self.structure)?;
        match &self.counterexample {
            None => {
                let how = if self.exhaustive { "exhaustive" } else { "seeded" };
                write!(
                    f,
                    "verdict: no counterexample in {} trials ({how}, seed {})",
                    self.trials, self.seed
                )
            }
            Some(c) => {
                writeln!(f, "verdict: counterexample at trial {} (seed {})", c.trial, self.seed)?;
                for (name, e) in &c.assignment {
                    writeln!(f, "  {name} = {e}")?;
                }
                writeln!(f, "  lhs = {}", c.lhs)?;
                write!(f, "  rhs = {}", c.rhs)
            }
        }
    }
}

fn vars_of(stmt: &IdentityStatement) -> Vec<String> {
    stmt.vars().into_iter().map(str::to_string).collect()
}

fn exhaustive_bits(stmt: &IdentityStatement, s: &Structure) -> Option<usize> {
    match *s {
        Structure::BooleanSetAlgebra { universe_size } => {
            let bits = universe_size.checked_mul(stmt.vars().len())?;
            (bits <= EXHAUSTIVE_LIMIT_BITS).then_some(bits)
        }
        Structure::SubspaceLattice { .. } => None,
    }
}

/// Assignment number `index`: bit `v·n + x` puts point `x+1` into the set
/// for the `v`-th variable in sorted order.
fn decode(vars: &[String], universe_size: usize, index: u64) -> Assignment {
    vars.iter()
        .enumerate()
        .map(|(v, name)| {
            let set = (0..universe_size)
                .filter(|x| index >> (v * universe_size + x) & 1 == 1)
                .map(|x| x as u32 + 1)
                .collect();
            (name.clone(), Element::Set(set))
        })
        .collect()
}

fn sample(vars: &[String], s: &Structure, seed: u64, trial: u64) -> Assignment {
    let mut rng = trial_rng(seed, trial);
    vars.iter().map(|name| (name.clone(), s.sample(&mut rng))).collect()
}

fn falsify(
    stmt: &IdentityStatement,
    s: &Structure,
    trial: u64,
    assignment: Assignment,
) -> Result<Option<Counterexample>> {
    let (lhs, rhs, ok) = holds(stmt, &assignment, s)?;
    Ok((!ok).then_some(Counterexample {
        trial,
        assignment,
        lhs,
        rhs,
    }))
}

/// Searches for an assignment falsifying `stmt`. Small Boolean instances are
/// enumerated; everything else is sampled with one RNG stream per trial. The
/// reported counterexample always has the lowest index.
pub fn check(stmt: &IdentityStatement, s: &Structure, trials: u64, seed: u64) -> Result<CheckReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let vars = vars_of(stmt);
    let exhaustive = exhaustive_bits(stmt, s);
    let count = match exhaustive {
        Some(bits) => 1u64 << bits,
        None => trials,
    };
    let found = (0..count)
        .into_par_iter()
        .map(|trial| {
            let assignment = match (exhaustive, *s) {
                (Some(_), Structure::BooleanSetAlgebra { universe_size }) => decode(&vars, universe_size, trial),
                _ => sample(&vars, s, seed, trial),
            };
            falsify(stmt, s, trial, assignment)
        })
        .filter_map(|r| r.transpose())
        .find_first(|_| true)
        .transpose()?;
    Ok(CheckReport {
        statement: stmt.clone(),
        structure: *s,
        trials: count,
        exhaustive: exhaustive.is_some(),
        seed,
        verdict: if found.is_some() {
            Verdict::Counterexample
        } else {
            Verdict::NoCounterexample
        },
        counterexample: found,
    })
}

/// Evaluates `stmt` at one fixed assignment; `Some` when it fails there.
pub fn check_assignment(
    stmt: &IdentityStatement,
    s: &Structure,
    assignment: &Assignment,
) -> Result<Option<Counterexample>> {
    falsify(stmt, s, 0, assignment.clone())
}
