//! The lattice of (closed) subspaces of a finite-dimensional space.
//!
//! Meet is intersection, join is span, negation is orthogonal complement and
//! the order is inclusion. Every [`Subspace`] stores its basis in reduced row
//! echelon form, so two subspaces are equal exactly when their fields are.

use std::fmt;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{check_dim, Matrix, Vector};
use crate::random::{small_scalar, trial_rng};
use crate::scalar::Scalar;

/// Which subfield of ℚ(i) sampled coordinates are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalarField {
    RationalReal,
    GaussianRational,
}

impl ScalarField {
    pub fn is_complex(self) -> bool {
        matches!(self, ScalarField::GaussianRational)
    }
}

impl fmt::Display for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScalarField::RationalReal => "rational-real",
            ScalarField::GaussianRational => "gaussian-rational",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    space_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(space_dim: usize) -> Self {
        Subspace {
            space_dim,
            basis: Matrix::empty(space_dim),
        }
    }

    pub fn full(space_dim: usize) -> Self {
        Subspace {
            space_dim,
            basis: Matrix::identity(space_dim),
        }
    }

    /// Smallest subspace containing every vector; the empty family spans
    /// the zero subspace.
    pub fn span(vectors: &[Vector], space_dim: usize) -> Result<Self> {
        let m = Matrix::from_vectors(space_dim, vectors)?;
        Ok(Subspace {
            space_dim,
            basis: m.row_basis(),
        })
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        Subspace {
            space_dim: m.ncols(),
            basis: m.row_basis(),
        }
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    /// Dimension of the subspace itself.
    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.space_dim
    }

    fn same_space(&self, other: &Subspace) -> Result<()> {
        check_dim(self.space_dim, other.space_dim)
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        check_dim(self.space_dim, v.dim())?;
        let stacked = self
            .basis
            .stack(&Matrix::from_vectors(self.space_dim, std::slice::from_ref(v))?)?;
        Ok(stacked.rank() == self.dim())
    }

    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        self.same_space(other)?;
        Ok(Subspace::row_space(&self.basis.stack(&other.basis)?))
    }

    /// `{w : ⟨v,w⟩ = 0 for all v}`: the kernel of the conjugated basis.
    pub fn ortho(&self) -> Subspace {
        Subspace {
            space_dim: self.space_dim,
            basis: self.basis.conj().nullspace(),
        }
    }

    /// Intersection, computed as `(S^⊥ ∨ T^⊥)^⊥`.
    pub fn meet(&self, other: &Subspace) -> Result<Subspace> {
        Ok(self.ortho().join(&other.ortho())?.ortho())
    }

    /// Inclusion `self ⊆ other`.
    pub fn leq(&self, other: &Subspace) -> Result<bool> {
        self.same_space(other)?;
        Ok(self.basis.stack(&other.basis)?.rank() == other.dim())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("span{")?;
        for (k, row) in self.basis.row_vectors().iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{row}")?;
        }
        write!(f, "}} ⊆ dim {}", self.space_dim)
    }
}

#[derive(Serialize, Deserialize)]
struct SubspaceFile {
    space_dim: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubspaceFile {
            space_dim: self.space_dim,
            basis: self.basis.rows().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file = SubspaceFile::deserialize(d)?;
        if file.space_dim == 0 {
            return Err(serde::de::Error::custom("space_dim must be positive"));
        }
        let m = Matrix::with_width(file.space_dim, file.basis).map_err(serde::de::Error::custom)?;
        Ok(Subspace::row_space(&m))
    }
}

/// Orthomodular law for one pair: `s ≤ t ⇒ t = s ∨ (t ∧ s^⊥)`.
pub fn check_orthomodular(s: &Subspace, t: &Subspace) -> Result<bool> {
    if !s.leq(t)? {
        return Ok(true);
    }
    Ok(*t == s.join(&t.meet(&s.ortho())?)?)
}

/// `p ∧ (q ∨ r) = (p ∧ q) ∨ (p ∧ r)` for this triple.
pub fn distributes(p: &Subspace, q: &Subspace, r: &Subspace) -> Result<bool> {
    let left = p.meet(&q.join(r)?)?;
    let right = p.meet(q)?.join(&p.meet(r)?)?;
    Ok(left == right)
}

/// Random proper nonzero subspace: dimension uniform on `1..space_dim`,
/// spanning vectors with small rational coordinates, redrawn until they are
/// independent. Needs `space_dim ≥ 2`.
pub fn random_subspace<R: Rng + ?Sized>(rng: &mut R, space_dim: usize, field: ScalarField) -> Subspace {
    assert!(space_dim >= 2, "proper nonzero subspaces need space_dim >= 2");
    let k = rng.gen_range(1..space_dim);
    loop {
        let rows: Vec<Vec<Scalar>> = (0..k)
            .map(|_| (0..space_dim).map(|_| small_scalar(rng, field.is_complex())).collect())
            .collect();
        let m = Matrix::with_width(space_dim, rows).expect("rows have space_dim entries");
        let s = Subspace::row_space(&m);
        if s.dim() == k {
            return s;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub trial: u64,
    pub p: Subspace,
    pub q: Subspace,
    pub r: Subspace,
}

/// Samples triples until one violates distributivity. The reported witness is
/// the one with the lowest trial index, independent of thread scheduling.
pub fn find_nondistributive_witness(space_dim: usize, trials: u64, seed: u64) -> Result<Option<Witness>> {
    find_nondistributive_witness_in(space_dim, ScalarField::GaussianRational, trials, seed)
}

pub fn find_nondistributive_witness_in(
    space_dim: usize,
    field: ScalarField,
    trials: u64,
    seed: u64,
) -> Result<Option<Witness>> {
    if space_dim < 2 {
        return Err(Error::DistributiveDimension);
    }
    (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(seed, trial);
            let p = random_subspace(&mut rng, space_dim, field);
            let q = random_subspace(&mut rng, space_dim, field);
            let r = random_subspace(&mut rng, space_dim, field);
            Ok((!distributes(&p, &q, &r)?).then_some(Witness { trial, p, q, r }))
        })
        .filter_map(|w: Result<Option<Witness>>| w.transpose())
        .find_first(|_| true)
        .transpose()
}
