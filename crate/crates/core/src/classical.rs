//! Classical distributions over a finite phase space, embedded as real
//! vectors whose squared entries are the probabilities.
//!
//! The subspaces of this real space form the same kind of lattice as the
//! quantum one, and fail distributivity for the same reason.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{check_dim, Matrix, Vector};
use crate::propositions::expectation;
use crate::scalar::{rational_string, Scalar};
use crate::subspace::{distributes, ScalarField, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct PhaseSpace {
    points: Vec<String>,
}

impl PhaseSpace {
    pub fn new<S: Into<String>>(points: impl IntoIterator<Item = S>) -> Result<Self> {
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        if points.is_empty() {
            return Err(Error::InvalidPhaseSpace("no points".into()));
        }
        let mut seen = BTreeSet::new();
        for p in &points {
            if !seen.insert(p.as_str()) {
                return Err(Error::InvalidPhaseSpace(format!("duplicate point {p:?}")));
            }
        }
        Ok(PhaseSpace { points })
    }

    pub fn dim(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.points
            .iter()
            .position(|p| p == label)
            .ok_or_else(|| Error::InvalidPhaseSpace(format!("unknown point {label:?}")))
    }

    /// The point mass at `label`, as the unit vector on that coordinate.
    pub fn indicator(&self, label: &str) -> Result<Vector> {
        Ok(Vector::basis(self.dim(), self.index_of(label)?))
    }
}

impl TryFrom<Vec<String>> for PhaseSpace {
    type Error = Error;
    fn try_from(points: Vec<String>) -> Result<Self> {
        PhaseSpace::new(points)
    }
}

impl From<PhaseSpace> for Vec<String> {
    fn from(space: PhaseSpace) -> Self {
        space.points
    }
}

/// Nonzero real amplitude vector; the distribution is `ψ_k²/⟨ψ,ψ⟩`.
/// Signs are allowed, so several states share one density.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalState {
    amplitude: Vector,
}

impl ClassicalState {
    pub fn new(amplitude: Vector) -> Result<Self> {
        if !amplitude.is_real() {
            return Err(Error::Format("classical amplitudes must be real".into()));
        }
        if amplitude.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(ClassicalState { amplitude })
    }

    pub fn from_ints(amplitude: &[i64]) -> Result<Self> {
        ClassicalState::new(Vector::from_ints(amplitude))
    }

    pub fn amplitude(&self) -> &Vector {
        &self.amplitude
    }

    pub fn dim(&self) -> usize {
        self.amplitude.dim()
    }
}

/// A diagonal operator: multiplication by `f(point)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicativeObservable {
    values: Vec<RationalValue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
struct RationalValue(#[serde(with = "rational_string")] BigRational);

impl MultiplicativeObservable {
    pub fn new(values: Vec<BigRational>) -> Self {
        MultiplicativeObservable {
            values: values.into_iter().map(RationalValue).collect(),
        }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        MultiplicativeObservable::new(values.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    pub fn values(&self) -> impl Iterator<Item = &BigRational> {
        self.values.iter().map(|v| &v.0)
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn as_matrix(&self) -> Matrix {
        Matrix::diag(&self.values().cloned().map(Scalar::real).collect::<Vec<_>>())
    }
}

/// `ρ_k = ψ_k² / ⟨ψ,ψ⟩`.
pub fn density(s: &ClassicalState) -> Vec<BigRational> {
    let norm = s.amplitude.norm_sqr();
    s.amplitude.entries().iter().map(|x| x.norm_sqr() / &norm).collect()
}

/// `Σ_k f_k ρ_k`, checked against `⟨ψ, diag(f) ψ⟩/⟨ψ,ψ⟩`.
pub fn classical_expectation(f: &MultiplicativeObservable, s: &ClassicalState) -> Result<BigRational> {
    check_dim(f.dim(), s.dim())?;
    let weighted = f
        .values()
        .zip(density(s))
        .fold(BigRational::zero(), |acc, (fk, rk)| acc + fk * rk);
    let via_operator = expectation(&f.as_matrix(), &s.amplitude)?;
    assert_eq!(weighted, via_operator, "density sum and operator expectation disagree");
    Ok(weighted)
}

/// On-disk form: `{"points":["1","2"],"amplitude":["1","1"]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalStateFile {
    pub points: PhaseSpace,
    pub amplitude: Vector,
}

impl ClassicalStateFile {
    pub fn into_state(self) -> Result<(PhaseSpace, ClassicalState)> {
        check_dim(self.points.dim(), self.amplitude.dim())?;
        Ok((self.points, ClassicalState::new(self.amplitude)?))
    }
}

/// Lattice verdicts for the two-point phase space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoStateVerdict {
    pub field: ScalarField,
    /// `[k,0]`: certainly in state 1.
    pub first: Subspace,
    /// `[0,k]`: certainly in state 2.
    pub second: Subspace,
    /// `[k,k]`: equally likely either way.
    pub even: Subspace,
    /// `[k,0] ∨ [0,k]`.
    pub whole: Subspace,
    /// `[k,0]∧[0,k]`, `[0,k]∧[k,k]`, `[k,k]∧[k,0]`.
    pub pairwise_meets: [Subspace; 3],
    /// `[k,k] ∧ ([k,0] ∨ [0,k])`.
    pub left: Subspace,
    /// `([k,k] ∧ [k,0]) ∨ ([k,k] ∧ [0,k])`.
    pub right: Subspace,
    pub distributes: bool,
}

impl TwoStateVerdict {
    /// Bracket name of a subspace of the two-point space, e.g. `"[k,k]"`.
    pub fn name_of(&self, s: &Subspace) -> String {
        if s.is_zero() {
            "[0,0]".into()
        } else if *s == self.first {
            "[k,0]".into()
        } else if *s == self.second {
            "[0,k]".into()
        } else if *s == self.even {
            "[k,k]".into()
        } else if s.is_full() {
            "[k,j]".into()
        } else {
            s.to_string()
        }
    }
}

pub fn two_state_demo(field: ScalarField) -> Result<TwoStateVerdict> {
    // Over ℚ(i) the spanning vectors carry non-real scale factors; the
    // canonical subspaces must come out identical.
    let (first, second, even) = match field {
        ScalarField::RationalReal => (["1", "0"], ["0", "1"], ["1", "1"]),
        ScalarField::GaussianRational => (["1+i", "0"], ["0", "2i"], ["-i", "-i"]),
    };
    let ray = |v: [&str; 2]| Vector::parse(&v).and_then(|v| Subspace::span(&[v], 2));
    let (first, second, even) = (ray(first)?, ray(second)?, ray(even)?);
    let whole = first.join(&second)?;
    let pairwise_meets = [first.meet(&second)?, second.meet(&even)?, even.meet(&first)?];
    let left = even.meet(&whole)?;
    let right = even.meet(&first)?.join(&even.meet(&second)?)?;
    let distributes = distributes(&even, &first, &second)?;
    Ok(TwoStateVerdict {
        field,
        first,
        second,
        even,
        whole,
        pairwise_meets,
        left,
        right,
        distributes,
    })
}
