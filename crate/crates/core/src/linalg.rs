//! Dense vectors and matrices over [`Scalar`], with exact Gauss–Jordan
//! elimination.

use std::fmt;
use std::ops::Index;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn new(entries: Vec<Scalar>) -> Self {
        Vector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Scalar::zero(); dim])
    }

    /// Unit vector `e_k` in dimension `dim`.
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut v = Vector::zeros(dim);
        v.0[k] = Scalar::one();
        v
    }

    /// Builds a vector from scalar literals; see [`Scalar`] for the grammar.
    pub fn parse<S: AsRef<str>>(entries: &[S]) -> Result<Self> {
        entries
            .iter()
            .map(|e| e.as_ref().parse())
            .collect::<Result<Vec<_>>>()
            .map(Vector)
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Vector(entries.iter().map(|&n| Scalar::from_int(n)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.0.iter().all(Scalar::is_real)
    }

    pub fn scale(&self, k: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        check_dim(self.dim(), other.dim())?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        check_dim(self.dim(), other.dim())?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// `⟨v,v⟩` as a rational.
    pub fn norm_sqr(&self) -> BigRational {
        self.0
            .iter()
            .map(Scalar::norm_sqr)
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Squared distance `⟨v−w, v−w⟩`.
    pub fn distance_sqr(&self, other: &Vector) -> Result<BigRational> {
        Ok(self.sub(other)?.norm_sqr())
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, k: usize) -> &Scalar {
        &self.0[k]
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// `Σ_k conj(v_k)·w_k`, conjugate-linear in the first argument.
pub fn inner(v: &Vector, w: &Vector) -> Result<Scalar> {
    check_dim(v.dim(), w.dim())?;
    Ok(v.0.iter().zip(&w.0).map(|(a, b)| &a.conj() * b).sum())
}

/// Row-major dense matrix. `ncols` is kept separately so that a matrix with
/// no rows (the basis of a zero subspace) still knows its width.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: Vec<Vec<Scalar>>,
    ncols: usize,
}

impl Matrix {
    /// Rectangular matrix from rows; there must be at least one row.
    pub fn new(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let ncols = rows
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::Format("matrix needs at least one row".into()))?;
        Matrix::with_width(ncols, rows)
    }

    pub fn with_width(ncols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        for (row, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(Error::Ragged {
                    row,
                    expected: ncols,
                    found: r.len(),
                });
            }
        }
        Ok(Matrix { rows, ncols })
    }

    pub fn from_vectors(ncols: usize, vectors: &[Vector]) -> Result<Self> {
        for v in vectors {
            check_dim(ncols, v.dim())?;
        }
        Ok(Matrix {
            rows: vectors.iter().map(|v| v.0.clone()).collect(),
            ncols,
        })
    }

    pub fn parse<S: AsRef<str>>(rows: &[&[S]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| Vector::parse(r).map(Vector::into_entries))
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(rows)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Matrix::new(rows.iter().map(|r| Vector::from_ints(r).0).collect())
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Matrix {
            rows: vec![vec![Scalar::zero(); ncols]; nrows],
            ncols,
        }
    }

    pub fn empty(ncols: usize) -> Self {
        Matrix {
            rows: Vec::new(),
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::diag(&vec![Scalar::one(); n])
    }

    pub fn diag(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (k, x) in entries.iter().enumerate() {
            m.rows[k][k] = x.clone();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn row(&self, k: usize) -> Vector {
        Vector(self.rows[k].clone())
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        self.rows.iter().cloned().map(Vector).collect()
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.rows[r][c]
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.nrows(),
                cols: self.ncols,
            })
        }
    }

    pub fn conj(&self) -> Matrix {
        Matrix {
            rows: self.rows.iter().map(|r| r.iter().map(Scalar::conj).collect()).collect(),
            ncols: self.ncols,
        }
    }

    pub fn conj_transpose(&self) -> Matrix {
        let rows = (0..self.ncols)
            .map(|c| self.rows.iter().map(|r| r[c].conj()).collect())
            .collect();
        Matrix {
            rows,
            ncols: self.nrows(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows.iter().map(|r| r.iter().map(|x| x * k).collect()).collect(),
            ncols: self.ncols,
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.nrows(), other.nrows())?;
        check_dim(self.ncols, other.ncols)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(Matrix {
            rows,
            ncols: self.ncols,
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.ncols, other.nrows())?;
        let rows = self
            .rows
            .iter()
            .map(|r| {
                (0..other.ncols)
                    .map(|c| r.iter().zip(&other.rows).map(|(a, o)| a * &o[c]).sum())
                    .collect()
            })
            .collect();
        Ok(Matrix {
            rows,
            ncols: other.ncols,
        })
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        check_dim(self.ncols, v.dim())?;
        Ok(Vector(
            self.rows
                .iter()
                .map(|r| r.iter().zip(&v.0).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    pub fn trace(&self) -> Result<Scalar> {
        self.require_square()?;
        Ok((0..self.ncols).map(|k| self.rows[k][k].clone()).sum())
    }

    /// Rows stacked below `other`'s rows.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.ncols, other.ncols)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Matrix {
            rows,
            ncols: self.ncols,
        })
    }

    /// Reduced row echelon form: every pivot is 1, pivot columns are zero
    /// elsewhere, and zero rows sit at the bottom.
    pub fn rref(&self) -> Matrix {
        let mut m = self.rows.clone();
        let mut pivot_row = 0;
        for col in 0..self.ncols {
            if pivot_row == m.len() {
                break;
            }
            let Some(found) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(pivot_row, found);
            if !m[pivot_row][col].is_one() {
                let inv = m[pivot_row][col].inv().expect("pivot is nonzero");
                for x in m[pivot_row].iter_mut().skip(col) {
                    *x = &*x * &inv;
                }
            }
            let pivot = m[pivot_row].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r == pivot_row || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot).skip(col) {
                    if !p.is_zero() {
                        *x -= &(p * &factor);
                    }
                }
            }
            pivot_row += 1;
        }
        Matrix {
            rows: m,
            ncols: self.ncols,
        }
    }

    /// Columns holding a leading one, assuming `self` is already in RREF.
    fn pivot_columns(&self) -> Vec<usize> {
        self.rows
            .iter()
            .filter_map(|r| r.iter().position(|x| !x.is_zero()))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rref()
            .rows
            .iter()
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .count()
    }

    /// RREF with the zero rows dropped.
    pub fn row_basis(&self) -> Matrix {
        let mut r = self.rref();
        r.rows.retain(|row| row.iter().any(|x| !x.is_zero()));
        r
    }

    /// Basis of `{x : self·x = 0}`, returned in RREF with
    /// `ncols − rank` rows.
    pub fn nullspace(&self) -> Matrix {
        let reduced = self.row_basis();
        let pivots = reduced.pivot_columns();
        let free = (0..self.ncols).filter(|c| !pivots.contains(c));
        let vectors: Vec<Vec<Scalar>> = free
            .map(|f| {
                let mut x = vec![Scalar::zero(); self.ncols];
                x[f] = Scalar::one();
                for (row, &p) in reduced.rows.iter().zip(&pivots) {
                    x[p] = -&row[f];
                }
                x
            })
            .collect();
        Matrix {
            rows: vectors,
            ncols: self.ncols,
        }
        .row_basis()
    }

    /// Exact check `self = self†`; errors on a non-square input.
    pub fn is_hermitian(&self) -> Result<bool> {
        self.require_square()?;
        Ok(*self == self.conj_transpose())
    }

    /// Exact check `self·self† = I`; errors on a non-square input.
    pub fn is_unitary(&self) -> Result<bool> {
        self.require_square()?;
        Ok(self.mul(&self.conj_transpose())? == Matrix::identity(self.ncols))
    }

    pub fn is_idempotent(&self) -> Result<bool> {
        self.require_square()?;
        Ok(self.mul(self)? == *self)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Zero::is_zero)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.rows).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    rows: Vec<Vec<Scalar>>,
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixFile {
            rows: self.rows.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file = MatrixFile::deserialize(d)?;
        Matrix::new(file.rows).map_err(serde::de::Error::custom)
    }
}
