//! Branching preparation–measurement experiments with exact Born weights.
//!
//! [`run`] enumerates every history of a process. A stage index doubles as a
//! time stamp: the atom `(p, k)` of an [`IndexedFormula`] asks whether `p`
//! holds of the state right after stage `k` of a given history.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::classical::PhaseSpace;
use crate::error::{Error, Result};
use crate::linalg::{check_dim, inner, Matrix, Vector};
use crate::propositions::Proposition;
use crate::scalar::rational_string;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub label: String,
    #[serde(with = "rational_string")]
    pub value: BigRational,
    pub projector: Matrix,
}

impl Outcome {
    pub fn new(label: impl Into<String>, value: BigRational, projector: Matrix) -> Self {
        Outcome {
            label: label.into(),
            value,
            projector,
        }
    }
}

/// A projective measurement given by its spectral projectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ObservableFile")]
pub struct Observable {
    name: String,
    outcomes: Vec<Outcome>,
}

#[derive(Deserialize)]
struct ObservableFile {
    name: String,
    outcomes: Vec<Outcome>,
}

impl TryFrom<ObservableFile> for Observable {
    type Error = Error;
    fn try_from(file: ObservableFile) -> Result<Self> {
        Observable::new(file.name, file.outcomes)
    }
}

impl Observable {
    /// Checks that the projectors are Hermitian, idempotent, mutually
    /// orthogonal and sum to the identity, and that labels are distinct.
    pub fn new(name: impl Into<String>, outcomes: Vec<Outcome>) -> Result<Self> {
        let name = name.into();
        let fail = |reason: String| Error::InvalidProjectors {
            observable: name.clone(),
            reason,
        };
        let first = outcomes.first().ok_or_else(|| fail("no outcomes".into()))?;
        let dim = first.projector.ncols();
        let mut labels = BTreeSet::new();
        let mut total = Matrix::zeros(dim, dim);
        for (k, o) in outcomes.iter().enumerate() {
            let p = &o.projector;
            if !labels.insert(o.label.as_str()) {
                return Err(fail(format!("duplicate label {:?}", o.label)));
            }
            if !p.is_square() || p.ncols() != dim {
                return Err(fail(format!("projector {:?} is not {dim}x{dim}", o.label)));
            }
            if !p.is_hermitian()? {
                return Err(fail(format!("projector {:?} is not hermitian", o.label)));
            }
            if !p.is_idempotent()? {
                return Err(fail(format!("projector {:?} is not idempotent", o.label)));
            }
            for other in &outcomes[..k] {
                if !p.mul(&other.projector)?.is_zero() {
                    return Err(fail(format!("projectors {:?} and {:?} overlap", other.label, o.label)));
                }
            }
            total = total.add(p)?;
        }
        if total != Matrix::identity(dim) {
            return Err(fail("projectors do not sum to the identity".into()));
        }
        Ok(Observable { name, outcomes })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn outcomes(&self) -> &[Outcome] {
        &self.outcomes
    }

    pub fn dim(&self) -> usize {
        self.outcomes[0].projector.ncols()
    }

    /// `Σ value·P`, the Hermitian operator the projectors decompose.
    pub fn operator(&self) -> Matrix {
        self.outcomes
            .iter()
            .fold(Matrix::zeros(self.dim(), self.dim()), |acc, o| {
                acc.add(&o.projector.scale(&o.value.clone().into()))
                    .expect("same shape")
            })
    }
}

/// Predicate on the outcomes recorded so far in a history.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Condition {
    Always,
    OutcomeAt { stage: usize, label: String },
    Not { condition: Box<Condition> },
}

impl Condition {
    pub fn outcome_at(stage: usize, label: impl Into<String>) -> Self {
        Condition::OutcomeAt {
            stage,
            label: label.into(),
        }
    }

    fn holds(&self, trace: &[TraceEntry]) -> bool {
        match self {
            Condition::Always => true,
            Condition::OutcomeAt { stage, label } => {
                trace.get(*stage).and_then(|e| e.outcome.as_deref()) == Some(label.as_str())
            }
            Condition::Not { condition } => !condition.holds(trace),
        }
    }

    fn max_stage(&self) -> Option<usize> {
        match self {
            Condition::Always => None,
            Condition::OutcomeAt { stage, .. } => Some(*stage),
            Condition::Not { condition } => condition.max_stage(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transition {
    pub to: String,
    #[serde(with = "rational_string")]
    pub prob: BigRational,
}

/// Markov kernel on sample labels; every row sums to exactly one.
pub type Kernel = BTreeMap<String, Vec<Transition>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Stage {
    Prepare { state: Vector },
    Measure { observable: Observable },
    ConditionalUnitary { condition: Condition, unitary: Matrix },
    ClassicalPrepare { points: PhaseSpace, point: String },
    ClassicalStep { kernel: Kernel },
}

impl Stage {
    fn is_classical(&self) -> bool {
        matches!(self, Stage::ClassicalPrepare { .. } | Stage::ClassicalStep { .. })
    }
}

/// A validated stage list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Stage>", into = "Vec<Stage>")]
pub struct Process {
    stages: Vec<Stage>,
}

impl TryFrom<Vec<Stage>> for Process {
    type Error = Error;
    fn try_from(stages: Vec<Stage>) -> Result<Self> {
        Process::new(stages)
    }
}

impl From<Process> for Vec<Stage> {
    fn from(p: Process) -> Self {
        p.stages
    }
}

impl Process {
    pub fn new(stages: Vec<Stage>) -> Result<Self> {
        validate(&stages)?;
        Ok(Process { stages })
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn len(&self) -> usize {
        self.stages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stages.is_empty()
    }
}

fn validate(stages: &[Stage]) -> Result<()> {
    let invalid = |msg: String| Err(Error::InvalidProcess(msg));
    let Some(first) = stages.first() else {
        return invalid("no stages".into());
    };
    if !matches!(first, Stage::Prepare { .. } | Stage::ClassicalPrepare { .. }) {
        return invalid("the first stage must be a preparation".into());
    }
    let classical = first.is_classical();
    if stages.iter().any(|s| s.is_classical() != classical) {
        return invalid("quantum and classical stages cannot be mixed".into());
    }
    let mut dim = None;
    let mut space: Option<&PhaseSpace> = None;
    for (k, stage) in stages.iter().enumerate() {
        match stage {
            Stage::Prepare { state } => {
                if state.is_zero() {
                    return Err(Error::ZeroVector);
                }
                check_dim(*dim.get_or_insert(state.dim()), state.dim())?;
            }
            Stage::Measure { observable } => {
                // re-checked so hand-built stages get the same guarantees
                Observable::new(observable.name.clone(), observable.outcomes.clone())?;
                check_dim(dim.unwrap_or(observable.dim()), observable.dim())?;
            }
            Stage::ConditionalUnitary { condition, unitary } => {
                if !unitary.is_unitary()? {
                    return Err(Error::NotUnitary);
                }
                check_dim(dim.unwrap_or(unitary.ncols()), unitary.ncols())?;
                if condition.max_stage().is_some_and(|s| s >= k) {
                    return invalid(format!("stage {k} conditions on a later stage"));
                }
            }
            Stage::ClassicalPrepare { points, point } => {
                points.index_of(point)?;
                space = Some(points);
            }
            Stage::ClassicalStep { kernel } => {
                let space = space.expect("first stage is a preparation");
                for (from, row) in kernel {
                    space
                        .index_of(from)
                        .map_err(|e| Error::MalformedKernel(e.to_string()))?;
                    let mut total = BigRational::zero();
                    for t in row {
                        space
                            .index_of(&t.to)
                            .map_err(|e| Error::MalformedKernel(e.to_string()))?;
                        if t.prob < BigRational::zero() {
                            return Err(Error::MalformedKernel(format!("negative weight from {from:?}")));
                        }
                        total += &t.prob;
                    }
                    if !total.is_one() {
                        return Err(Error::MalformedKernel(format!("row {from:?} sums to {total}")));
                    }
                }
            }
        }
    }
    Ok(())
}

/// State right after a stage: an unnormalized vector, or a sample point
/// together with its indicator embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StateAfter {
    Quantum(Vector),
    Sample { label: String, embedding: Vector },
}

impl StateAfter {
    pub fn vector(&self) -> &Vector {
        match self {
            StateAfter::Quantum(v) => v,
            StateAfter::Sample { embedding, .. } => embedding,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub stage: usize,
    /// `None` for stages without an outcome (preparations, unitaries).
    pub outcome: Option<String>,
    pub state: StateAfter,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct History {
    pub probability: BigRational,
    pub trace: Vec<TraceEntry>,
}

impl History {
    pub fn state_after(&self, stage: usize) -> Result<&StateAfter> {
        self.trace.get(stage).map(|e| &e.state).ok_or(Error::StageOutOfRange {
            index: stage,
            len: self.trace.len(),
        })
    }

    pub fn outcome_at(&self, stage: usize) -> Option<&str> {
        self.trace.get(stage).and_then(|e| e.outcome.as_deref())
    }

    fn current(&self) -> &StateAfter {
        &self.trace.last().expect("histories start with a preparation").state
    }
}

/// Every positive-probability history, in depth-first outcome order.
pub fn run(process: &Process) -> Result<Vec<History>> {
    let mut histories = vec![History {
        probability: BigRational::one(),
        trace: Vec::new(),
    }];
    let mut space: Option<&PhaseSpace> = None;
    for (k, stage) in process.stages.iter().enumerate() {
        if let Stage::ClassicalPrepare { points, .. } = stage {
            space = Some(points);
        }
        let mut next = Vec::with_capacity(histories.len());
        for h in histories {
            extend(h, k, stage, space, &mut next)?;
        }
        histories = next;
    }
    debug_assert_eq!(
        histories
            .iter()
            .fold(BigRational::zero(), |acc, h| acc + &h.probability),
        BigRational::one()
    );
    Ok(histories)
}

fn extend(h: History, k: usize, stage: &Stage, space: Option<&PhaseSpace>, out: &mut Vec<History>) -> Result<()> {
    let push = |out: &mut Vec<History>, h: &History, prob: BigRational, outcome: Option<String>, state| {
        let mut trace = h.trace.clone();
        trace.push(TraceEntry {
            stage: k,
            outcome,
            state,
        });
        out.push(History {
            probability: prob,
            trace,
        });
    };
    match stage {
        Stage::Prepare { state } => {
            push(out, &h, h.probability.clone(), None, StateAfter::Quantum(state.clone()));
        }
        Stage::Measure { observable } => {
            let psi = h.current().vector();
            let norm = psi.norm_sqr();
            for o in &observable.outcomes {
                let projected = o.projector.apply(psi)?;
                let weight = inner(psi, &projected)?;
                debug_assert!(weight.is_real());
                let born = weight.re() / &norm;
                if born.is_zero() {
                    continue;
                }
                push(
                    out,
                    &h,
                    &h.probability * born,
                    Some(o.label.clone()),
                    StateAfter::Quantum(projected),
                );
            }
        }
        Stage::ConditionalUnitary { condition, unitary } => {
            let psi = h.current().vector();
            let state = if condition.holds(&h.trace) {
                unitary.apply(psi)?
            } else {
                psi.clone()
            };
            push(out, &h, h.probability.clone(), None, StateAfter::Quantum(state));
        }
        Stage::ClassicalPrepare { points, point } => {
            let embedding = points.indicator(point)?;
            let state = StateAfter::Sample {
                label: point.clone(),
                embedding,
            };
            push(out, &h, h.probability.clone(), None, state);
        }
        Stage::ClassicalStep { kernel } => {
            let space = space.expect("classical process starts with a preparation");
            let StateAfter::Sample { label, .. } = h.current() else {
                unreachable!("classical stages only see samples");
            };
            let row = kernel
                .get(label)
                .ok_or_else(|| Error::MalformedKernel(format!("no transitions from {label:?}")))?;
            for t in row {
                if t.prob.is_zero() {
                    continue;
                }
                let state = StateAfter::Sample {
                    label: t.to.clone(),
                    embedding: space.indicator(&t.to)?,
                };
                push(out, &h, &h.probability * &t.prob, Some(t.to.clone()), state);
            }
        }
    }
    Ok(())
}

/// Boolean formula over stage-stamped propositions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexedFormula {
    Atom { prop: Proposition, stage: usize },
    And(Vec<IndexedFormula>),
    Or(Vec<IndexedFormula>),
    Not(Box<IndexedFormula>),
    True,
    False,
}

impl IndexedFormula {
    pub fn atom(prop: Proposition, stage: usize) -> Self {
        IndexedFormula::Atom { prop, stage }
    }

    pub fn and(self, other: IndexedFormula) -> Self {
        IndexedFormula::And(vec![self, other])
    }

    pub fn or(self, other: IndexedFormula) -> Self {
        IndexedFormula::Or(vec![self, other])
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        IndexedFormula::Not(Box::new(self))
    }

    pub fn eval(&self, h: &History) -> Result<bool> {
        Ok(match self {
            IndexedFormula::Atom { prop, stage } => prop.eval(h.state_after(*stage)?.vector())?,
            IndexedFormula::And(fs) => {
                for f in fs {
                    if !f.eval(h)? {
                        return Ok(false);
                    }
                }
                true
            }
            IndexedFormula::Or(fs) => {
                for f in fs {
                    if f.eval(h)? {
                        return Ok(true);
                    }
                }
                false
            }
            IndexedFormula::Not(f) => !f.eval(h)?,
            IndexedFormula::True => true,
            IndexedFormula::False => false,
        })
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<(&'a Proposition, usize)>) {
        match self {
            IndexedFormula::Atom { prop, stage } => {
                if !out.iter().any(|(p, s)| *p == prop && *s == *stage) {
                    out.push((prop, *stage));
                }
            }
            IndexedFormula::And(fs) | IndexedFormula::Or(fs) => fs.iter().for_each(|f| f.collect_atoms(out)),
            IndexedFormula::Not(f) => f.collect_atoms(out),
            IndexedFormula::True | IndexedFormula::False => {}
        }
    }

    /// Distinct `(proposition, stage)` atoms in first-occurrence order.
    pub fn atoms(&self) -> Vec<(&Proposition, usize)> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    pub fn stages(&self) -> BTreeSet<usize> {
        self.atoms().into_iter().map(|(_, s)| s).collect()
    }
}

/// True iff `f` holds in every history.
pub fn holds_surely(f: &IndexedFormula, histories: &[History]) -> Result<bool> {
    for h in histories {
        if !f.eval(h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Total probability of the histories in which `f` holds.
pub fn prob_of(f: &IndexedFormula, histories: &[History]) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for h in histories {
        if f.eval(h)? {
            total += &h.probability;
        }
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistributivityStatus {
    /// Same atoms on both sides, and the sides agree on every history.
    Satisfied,
    /// Same atoms on both sides, yet some history tells them apart.
    Violated,
    /// The sides mention the same propositions at different stages, so the
    /// comparison is not an instance of the law at all.
    IndexMismatched,
    /// The sides mention different propositions.
    AtomMismatched,
}

impl fmt::Display for DistributivityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DistributivityStatus::Satisfied => "satisfied",
            DistributivityStatus::Violated => "violated",
            DistributivityStatus::IndexMismatched => "index-mismatched",
            DistributivityStatus::AtomMismatched => "atom-mismatched",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributivityVerdict {
    pub left_surely: bool,
    pub right_surely: bool,
    /// `left_surely == right_surely`.
    pub surely_agree: bool,
    /// Per history, `(left, right)` truth values.
    pub per_history: Vec<(bool, bool)>,
    pub agree_per_history: bool,
    pub status: DistributivityStatus,
}

/// Compares two sides of a claimed distributive identity over the histories.
pub fn check_distributivity(
    left: &IndexedFormula,
    right: &IndexedFormula,
    histories: &[History],
) -> Result<DistributivityVerdict> {
    let per_history = histories
        .iter()
        .map(|h| Ok((left.eval(h)?, right.eval(h)?)))
        .collect::<Result<Vec<_>>>()?;
    let left_surely = per_history.iter().all(|&(l, _)| l);
    let right_surely = per_history.iter().all(|&(_, r)| r);
    let agree_per_history = per_history.iter().all(|&(l, r)| l == r);

    let (la, ra) = (left.atoms(), right.atoms());
    let lp: Vec<&Proposition> = la.iter().map(|(p, _)| *p).collect();
    let rp: Vec<&Proposition> = ra.iter().map(|(p, _)| *p).collect();
    let status = if same_set(&la, &ra) {
        if agree_per_history {
            DistributivityStatus::Satisfied
        } else {
            DistributivityStatus::Violated
        }
    } else if same_set(&lp, &rp) {
        DistributivityStatus::IndexMismatched
    } else {
        DistributivityStatus::AtomMismatched
    };
    Ok(DistributivityVerdict {
        left_surely,
        right_surely,
        surely_agree: left_surely == right_surely,
        per_history,
        agree_per_history,
        status,
    })
}

fn same_set<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    a.iter().all(|x| b.contains(x)) && b.iter().all(|x| a.contains(x))
}

/// A process with its named stage-stamped statements.
#[derive(Debug, Clone)]
pub struct Demo {
    pub process: Process,
    pub formulas: BTreeMap<String, IndexedFormula>,
}

impl Demo {
    /// Named formula; panics on an unknown name.
    pub fn f(&self, name: &str) -> IndexedFormula {
        self.formulas
            .get(name)
            .cloned()
            .unwrap_or_else(|| panic!("no formula {name:?}"))
    }

    /// `a ∧ (b ∨ c)` and `(a∧b′) ∨ (a∧c′)` for named atoms.
    pub fn distributive_sides(
        &self,
        a: &str,
        bc: (&str, &str),
        bc_right: (&str, &str),
    ) -> (IndexedFormula, IndexedFormula) {
        let left = self.f(a).and(self.f(bc.0).or(self.f(bc.1)));
        let right = self.f(a).and(self.f(bc_right.0)).or(self.f(a).and(self.f(bc_right.1)));
        (left, right)
    }
}

pub const PREPARED: usize = 0;
pub const MEASURED: usize = 1;
pub const FINAL: usize = 2;

/// Prepare x-up, measure `S_y`, rotate the y-down branch onto x-up.
pub fn spin_demo() -> Demo {
    use crate::spin;

    let half = BigRational::new(1.into(), 2.into());
    let s_y = Observable::new(
        "S_y",
        vec![
            Outcome::new("y+", half.clone(), spin::proj_y_up()),
            Outcome::new("y-", -half.clone(), spin::proj_y_down()),
        ],
    )
    .expect("spin projectors are a resolution of the identity");
    let process = Process::new(vec![
        Stage::Prepare { state: spin::x_up() },
        Stage::Measure { observable: s_y },
        Stage::ConditionalUnitary {
            condition: Condition::outcome_at(MEASURED, "y-"),
            unitary: spin::quarter_turn(),
        },
    ])
    .expect("well-formed demo");

    let ray = |v: Vector| Proposition::InSubspace(crate::subspace::Subspace::span(&[v], 2).expect("dim 2"));
    let statements = [
        ("p", ray(spin::x_up())),
        ("q", ray(spin::y_up())),
        ("r", ray(spin::y_down())),
    ];
    let mut formulas = BTreeMap::new();
    for (name, prop) in statements {
        for (suffix, stage) in [("i", PREPARED), ("o", MEASURED), ("f", FINAL)] {
            formulas.insert(format!("{name}_{suffix}"), IndexedFormula::atom(prop.clone(), stage));
        }
    }
    let y_expectation = |v: BigRational| Proposition::expectation_is(spin::s_y(), v).expect("S_y is hermitian");
    formulas.insert(
        "q'_i".into(),
        IndexedFormula::atom(y_expectation(half.clone()), PREPARED),
    );
    formulas.insert("r'_i".into(), IndexedFormula::atom(y_expectation(-half), PREPARED));
    Demo { process, formulas }
}

/// A ball over a hatch at `p` drops to `q` or `r` with equal chance.
pub fn hatch_demo() -> Demo {
    let points = PhaseSpace::new(["p", "q", "r"]).expect("distinct points");
    let half = BigRational::new(1.into(), 2.into());
    let step = |to: &str, prob: BigRational| Transition { to: to.into(), prob };
    let kernel: Kernel = [
        ("p".to_string(), vec![step("q", half.clone()), step("r", half)]),
        ("q".to_string(), vec![step("q", BigRational::one())]),
        ("r".to_string(), vec![step("r", BigRational::one())]),
    ]
    .into_iter()
    .collect();
    let process = Process::new(vec![
        Stage::ClassicalPrepare {
            points: points.clone(),
            point: "p".into(),
        },
        Stage::ClassicalStep { kernel },
    ])
    .expect("well-formed demo");

    let mut formulas = BTreeMap::new();
    for name in ["p", "q", "r"] {
        let at = Proposition::EqualsVector(points.indicator(name).expect("known point"));
        for (suffix, stage) in [("i", PREPARED), ("o", MEASURED)] {
            formulas.insert(format!("{name}_{suffix}"), IndexedFormula::atom(at.clone(), stage));
        }
    }
    Demo { process, formulas }
}

/// JSON report: `{"histories":[{"prob":"1/2","trace":[…]}], "formulas":{…}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProcessReport {
    pub histories: Vec<HistoryReport>,
    pub formulas: BTreeMap<String, FormulaReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HistoryReport {
    pub prob: String,
    pub trace: Vec<TraceReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceReport {
    pub stage: usize,
    pub outcome: String,
    pub state: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaReport {
    pub surely: bool,
    pub prob: String,
}

pub fn report<'a>(
    histories: &[History],
    formulas: impl IntoIterator<Item = (&'a String, &'a IndexedFormula)>,
) -> Result<ProcessReport> {
    let histories_out = histories
        .iter()
        .map(|h| HistoryReport {
            prob: h.probability.to_string(),
            trace: h
                .trace
                .iter()
                .map(|e| TraceReport {
                    stage: e.stage,
                    outcome: e.outcome.clone().unwrap_or_else(|| "-".into()),
                    state: match &e.state {
                        StateAfter::Quantum(v) => serde_json::to_value(v).expect("vectors serialize"),
                        StateAfter::Sample { label, .. } => serde_json::Value::String(label.clone()),
                    },
                })
                .collect(),
        })
        .collect();
    let formulas = formulas
        .into_iter()
        .map(|(name, f)| {
            Ok((
                name.clone(),
                FormulaReport {
                    surely: holds_surely(f, histories)?,
                    prob: prob_of(f, histories)?.to_string(),
                },
            ))
        })
        .collect::<Result<_>>()?;
    Ok(ProcessReport {
        histories: histories_out,
        formulas,
    })
}
