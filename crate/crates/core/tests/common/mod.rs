#![allow(dead_code)]

use proptest::prelude::*;
use qlogic::random::trial_rng;
use qlogic::subspace::random_subspace;
use qlogic::{Matrix, Scalar, ScalarField, Subspace, Vector};

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| Scalar::gaussian(a, b, c, d))
}

pub fn real_scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| Scalar::ratio(a, b))
}

pub fn vector(dim: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(scalar(), dim).prop_map(Vector::new)
}

pub fn nonzero_vector(dim: usize) -> impl Strategy<Value = Vector> {
    vector(dim).prop_filter("nonzero", |v| !v.is_zero())
}

pub fn matrix(nrows: usize, ncols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(scalar(), ncols), nrows)
        .prop_map(move |rows| Matrix::with_width(ncols, rows).unwrap())
}

/// Matrices of 1–4 rows and 1–4 columns.
pub fn any_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c))
}

pub fn field() -> impl Strategy<Value = ScalarField> {
    prop_oneof![Just(ScalarField::RationalReal), Just(ScalarField::GaussianRational)]
}

/// `n` sampled subspaces of one space of dimension 2–4 (zero and full
/// included now and then).
pub fn subspaces(n: usize) -> impl Strategy<Value = Vec<Subspace>> {
    (2usize..=4, field(), any::<u64>(), prop::collection::vec(0u8..10, n)).prop_map(move |(dim, field, seed, kinds)| {
        let mut rng = trial_rng(seed, 0);
        kinds
            .into_iter()
            .map(|k| match k {
                0 => Subspace::zero(dim),
                1 => Subspace::full(dim),
                _ => random_subspace(&mut rng, dim, field),
            })
            .collect()
    })
}

pub fn hermitian(dim: usize) -> impl Strategy<Value = Matrix> {
    matrix(dim, dim).prop_map(|m| m.add(&m.conj_transpose()).unwrap())
}
