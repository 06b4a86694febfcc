//! Boolean algebra of predicates over state vectors.
//!
//! A [`Proposition`] is an intensional tree; it is only ever compared
//! extensionally, by evaluating it on states. Subspace membership gives every
//! lattice element a proposition, but `Or` here is set union, not span, so
//! the two structures disagree exactly where the subspace lattice fails to be
//! Boolean.

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{check_dim, inner, Matrix, Vector};
use crate::scalar::{parse_rational, Scalar};
use crate::spin;
use crate::subspace::Subspace;

/// An interval of the real line with rational (or infinite) endpoints.
/// `None` stands for −∞ on the left and +∞ on the right; infinite ends are
/// always open.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Option<BigRational>,
    hi: Option<BigRational>,
    lo_closed: bool,
    hi_closed: bool,
}

impl Interval {
    pub fn new(lo: Option<BigRational>, hi: Option<BigRational>, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        if lo.is_none() && lo_closed || hi.is_none() && hi_closed {
            return Err(Error::InvalidInterval("an infinite endpoint cannot be closed".into()));
        }
        if let (Some(a), Some(b)) = (&lo, &hi) {
            if a > b {
                return Err(Error::InvalidInterval(format!("lower end {a} exceeds upper end {b}")));
            }
        }
        Ok(Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        })
    }

    pub fn closed(lo: BigRational, hi: BigRational) -> Result<Self> {
        Interval::new(Some(lo), Some(hi), true, true)
    }

    pub fn open(lo: BigRational, hi: BigRational) -> Result<Self> {
        Interval::new(Some(lo), Some(hi), false, false)
    }

    /// The degenerate closed interval `[a, a]`.
    pub fn point(a: BigRational) -> Self {
        Interval {
            lo: Some(a.clone()),
            hi: Some(a),
            lo_closed: true,
            hi_closed: true,
        }
    }

    pub fn everything() -> Self {
        Interval {
            lo: None,
            hi: None,
            lo_closed: false,
            hi_closed: false,
        }
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        let above = match &self.lo {
            None => true,
            Some(a) if self.lo_closed => x >= a,
            Some(a) => x > a,
        };
        let below = match &self.hi {
            None => true,
            Some(b) if self.hi_closed => x <= b,
            Some(b) => x < b,
        };
        above && below
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.lo_closed { "[" } else { "(" })?;
        match &self.lo {
            Some(a) => write!(f, "{a}")?,
            None => f.write_str("-inf")?,
        }
        f.write_str(", ")?;
        match &self.hi {
            Some(b) => write!(f, "{b}")?,
            None => f.write_str("inf")?,
        }
        f.write_str(if self.hi_closed { "]" } else { ")" })
    }
}

#[derive(Serialize, Deserialize)]
struct IntervalFile {
    lo: String,
    hi: String,
    lo_closed: bool,
    hi_closed: bool,
}

impl Serialize for Interval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IntervalFile {
            lo: self.lo.as_ref().map_or_else(|| "-inf".to_string(), ToString::to_string),
            hi: self.hi.as_ref().map_or_else(|| "inf".to_string(), ToString::to_string),
            lo_closed: self.lo_closed,
            hi_closed: self.hi_closed,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let file = IntervalFile::deserialize(d)?;
        let end = |text: &str, infinite: &str| -> std::result::Result<Option<BigRational>, D::Error> {
            if text == infinite {
                Ok(None)
            } else {
                parse_rational(text.trim())
                    .map(Some)
                    .map_err(|t| D::Error::custom(format!("invalid interval end {text:?}: bad token {t:?}")))
            }
        };
        let lo = end(&file.lo, "-inf")?;
        let hi = end(&file.hi, "inf")?;
        Interval::new(lo, hi, file.lo_closed, file.hi_closed).map_err(D::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PropositionFile", into = "PropositionFile")]
pub enum Proposition {
    InSubspace(Subspace),
    /// `⟨ψ,Aψ⟩/⟨ψ,ψ⟩` lies in one of the intervals.
    ExpectationIn(Matrix, Vec<Interval>),
    /// Exact componentwise equality; `ψ` and `e^{iθ}ψ` are different states here.
    EqualsVector(Vector),
    And(Vec<Proposition>),
    Or(Vec<Proposition>),
    Not(Box<Proposition>),
    True,
    False,
}

impl Proposition {
    /// Expectation predicate; the observable must be Hermitian.
    pub fn expectation_in(observable: Matrix, set: Vec<Interval>) -> Result<Self> {
        if !observable.is_hermitian()? {
            return Err(Error::NotHermitian);
        }
        Ok(Proposition::ExpectationIn(observable, set))
    }

    pub fn expectation_is(observable: Matrix, value: BigRational) -> Result<Self> {
        Proposition::expectation_in(observable, vec![Interval::point(value)])
    }

    pub fn and(children: impl IntoIterator<Item = Proposition>) -> Self {
        Proposition::And(children.into_iter().collect())
    }

    pub fn or(children: impl IntoIterator<Item = Proposition>) -> Self {
        Proposition::Or(children.into_iter().collect())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(child: Proposition) -> Self {
        Proposition::Not(Box::new(child))
    }

    /// Checks the tree's invariants and returns the shared state dimension,
    /// `None` when no node pins one down.
    pub fn validate(&self) -> Result<Option<usize>> {
        let own = match self {
            Proposition::InSubspace(s) => Some(s.space_dim()),
            Proposition::ExpectationIn(a, _) => {
                if !a.is_hermitian()? {
                    return Err(Error::NotHermitian);
                }
                Some(a.ncols())
            }
            Proposition::EqualsVector(v) => Some(v.dim()),
            Proposition::True | Proposition::False => None,
            Proposition::Not(c) => return c.validate(),
            Proposition::And(cs) | Proposition::Or(cs) => {
                let mut dim = None;
                for c in cs {
                    dim = merge_dim(dim, c.validate()?)?;
                }
                return Ok(dim);
            }
        };
        Ok(own)
    }

    /// Truth value on the (nonzero, possibly unnormalized) state `psi`.
    pub fn eval(&self, psi: &Vector) -> Result<bool> {
        if psi.is_zero() {
            return Err(Error::ZeroVector);
        }
        self.eval_nonzero(psi)
    }

    fn eval_nonzero(&self, psi: &Vector) -> Result<bool> {
        Ok(match self {
            Proposition::InSubspace(s) => s.contains(psi)?,
            Proposition::ExpectationIn(a, set) => {
                let e = expectation(a, psi)?;
                set.iter().any(|i| i.contains(&e))
            }
            Proposition::EqualsVector(v) => {
                check_dim(v.dim(), psi.dim())?;
                v == psi
            }
            Proposition::And(cs) => {
                for c in cs {
                    if !c.eval_nonzero(psi)? {
                        return Ok(false);
                    }
                }
                true
            }
            Proposition::Or(cs) => {
                for c in cs {
                    if c.eval_nonzero(psi)? {
                        return Ok(true);
                    }
                }
                false
            }
            Proposition::Not(c) => !c.eval_nonzero(psi)?,
            Proposition::True => true,
            Proposition::False => false,
        })
    }
}

fn merge_dim(a: Option<usize>, b: Option<usize>) -> Result<Option<usize>> {
    match (a, b) {
        (Some(x), Some(y)) => check_dim(x, y).map(|_| Some(x)),
        (x, None) => Ok(x),
        (None, y) => Ok(y),
    }
}

/// Exact `⟨ψ,Aψ⟩/⟨ψ,ψ⟩` for Hermitian `A` and nonzero `ψ`.
pub fn expectation(a: &Matrix, psi: &Vector) -> Result<BigRational> {
    if !a.is_hermitian()? {
        return Err(Error::NotHermitian);
    }
    check_dim(a.ncols(), psi.dim())?;
    if psi.is_zero() {
        return Err(Error::ZeroVector);
    }
    let num = inner(psi, &a.apply(psi)?)?;
    assert!(num.is_real(), "⟨ψ,Aψ⟩ has imaginary part {} for hermitian A", num.im());
    Ok(num.re() / psi.norm_sqr())
}

/// `⟨S_y⟩` on a two-dimensional state; bounded by ±1/2, with the bound
/// reached only on the y-spin rays.
pub fn spin_bound_witness(psi: &Vector) -> Result<BigRational> {
    check_dim(2, psi.dim())?;
    expectation(&spin::s_y(), psi)
}

/// Coefficients tried when combining two probe states.
pub const COMBINATION_COEFFICIENTS: [(i64, i64); 5] = [(1, 1), (-1, 1), (2, 1), (1, 2), (-1, 2)];

/// A pair of states satisfying a proposition whose combination does not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureViolation {
    pub u: Vector,
    pub w: Vector,
    pub alpha: Scalar,
    pub beta: Scalar,
    pub combination: Vector,
}

/// Searches the probes for `u, w` satisfying `p` and coefficients `α, β`
/// with `αu + βw ≠ 0` falsifying `p`. Finding nothing proves nothing.
pub fn find_closure_violation(p: &Proposition, probes: &[Vector]) -> Result<Option<ClosureViolation>> {
    if let Some(first) = probes.first() {
        for v in probes {
            check_dim(first.dim(), v.dim())?;
        }
        if let Some(dim) = p.validate()? {
            check_dim(dim, first.dim())?;
        }
    }
    let satisfying: Vec<&Vector> = probes
        .iter()
        .map(|v| p.eval(v).map(|ok| ok.then_some(v)))
        .filter_map(Result::transpose)
        .collect::<Result<_>>()?;
    let coeffs: Vec<Scalar> = COMBINATION_COEFFICIENTS
        .iter()
        .map(|&(n, d)| Scalar::ratio(n, d))
        .collect();
    for (k, u) in satisfying.iter().enumerate() {
        for w in &satisfying[k..] {
            for alpha in &coeffs {
                for beta in &coeffs {
                    let combination = u.scale(alpha).add(&w.scale(beta))?;
                    if combination.is_zero() {
                        continue;
                    }
                    if !p.eval(&combination)? {
                        return Ok(Some(ClosureViolation {
                            u: (*u).clone(),
                            w: (*w).clone(),
                            alpha: alpha.clone(),
                            beta: beta.clone(),
                            combination,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// One-sided closure check: `false` means a violating combination exists,
/// `true` only that none was found among the probes.
pub fn is_subspace_closed(p: &Proposition, probes: &[Vector]) -> Result<bool> {
    Ok(find_closure_violation(p, probes)?.is_none())
}

/// Open ball `{φ : |ψ − φ|² < ε²}` membership, the generating sets of the
/// norm topology.
pub fn in_ball(center: &Vector, radius_sqr: &BigRational, phi: &Vector) -> Result<bool> {
    Ok(center.distance_sqr(phi)? < *radius_sqr)
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
enum PropositionFile {
    InSubspace { subspace: Subspace },
    ExpectationIn { observable: Matrix, set: Vec<Interval> },
    Equals { vector: Vector },
    And { children: Vec<PropositionFile> },
    Or { children: Vec<PropositionFile> },
    Not { child: Box<PropositionFile> },
    True,
    False,
}

impl TryFrom<PropositionFile> for Proposition {
    type Error = Error;

    fn try_from(file: PropositionFile) -> Result<Self> {
        let p = build(file)?;
        p.validate()?;
        Ok(p)
    }
}

fn build(file: PropositionFile) -> Result<Proposition> {
    Ok(match file {
        PropositionFile::InSubspace { subspace } => Proposition::InSubspace(subspace),
        PropositionFile::ExpectationIn { observable, set } => Proposition::expectation_in(observable, set)?,
        PropositionFile::Equals { vector } => Proposition::EqualsVector(vector),
        PropositionFile::And { children } => Proposition::And(children.into_iter().map(build).collect::<Result<_>>()?),
        PropositionFile::Or { children } => Proposition::Or(children.into_iter().map(build).collect::<Result<_>>()?),
        PropositionFile::Not { child } => Proposition::not(build(*child)?),
        PropositionFile::True => Proposition::True,
        PropositionFile::False => Proposition::False,
    })
}

impl From<Proposition> for PropositionFile {
    fn from(p: Proposition) -> Self {
        match p {
            Proposition::InSubspace(subspace) => PropositionFile::InSubspace { subspace },
            Proposition::ExpectationIn(observable, set) => PropositionFile::ExpectationIn { observable, set },
            Proposition::EqualsVector(vector) => PropositionFile::Equals { vector },
            Proposition::And(cs) => PropositionFile::And {
                children: cs.into_iter().map(Into::into).collect(),
            },
            Proposition::Or(cs) => PropositionFile::Or {
                children: cs.into_iter().map(Into::into).collect(),
            },
            Proposition::Not(c) => PropositionFile::Not {
                child: Box::new((*c).into()),
            },
            Proposition::True => PropositionFile::True,
            Proposition::False => PropositionFile::False,
        }
    }
}
