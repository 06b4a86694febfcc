mod common;

use common::*;
use proptest::prelude::*;
use qlogic::subspace::{check_orthomodular, distributes};
use qlogic::{Scalar, ScalarField, Subspace, Vector};

proptest! {
    #[test]
    fn meet_and_join_commute_and_associate(v in subspaces(3)) {
        let (p, q, r) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(p.meet(q).unwrap(), q.meet(p).unwrap());
        prop_assert_eq!(p.join(q).unwrap(), q.join(p).unwrap());
        prop_assert_eq!(p.meet(&q.meet(r).unwrap()).unwrap(), p.meet(q).unwrap().meet(r).unwrap());
        prop_assert_eq!(p.join(&q.join(r).unwrap()).unwrap(), p.join(q).unwrap().join(r).unwrap());
    }

    #[test]
    fn absorption(v in subspaces(2)) {
        let (p, q) = (&v[0], &v[1]);
        prop_assert_eq!(&p.join(&p.meet(q).unwrap()).unwrap(), p);
        prop_assert_eq!(&p.meet(&p.join(q).unwrap()).unwrap(), p);
    }

    #[test]
    fn orthocomplement_laws(v in subspaces(2)) {
        let (p, q) = (&v[0], &v[1]);
        let n = p.space_dim();
        prop_assert_eq!(&p.ortho().ortho(), p);
        prop_assert_eq!(p.meet(&p.ortho()).unwrap(), Subspace::zero(n));
        prop_assert_eq!(p.join(&p.ortho()).unwrap(), Subspace::full(n));
        prop_assert_eq!(p.join(q).unwrap().ortho(), p.ortho().meet(&q.ortho()).unwrap());
        prop_assert_eq!(p.meet(q).unwrap().ortho(), p.ortho().join(&q.ortho()).unwrap());
        if p.leq(q).unwrap() {
            prop_assert!(q.ortho().leq(&p.ortho()).unwrap());
        }
    }

    #[test]
    fn orthomodular_law(v in subspaces(2)) {
        prop_assert!(check_orthomodular(&v[0], &v[1]).unwrap());
        let below = v[0].meet(&v[1]).unwrap();
        prop_assert!(check_orthomodular(&below, &v[1]).unwrap());
    }

    #[test]
    fn modular_law(v in subspaces(3)) {
        let (p, q, r) = (&v[0], &v[1], &v[2]);
        // force p ≤ r
        let p = p.meet(r).unwrap();
        prop_assert_eq!(
            p.join(&q.meet(r).unwrap()).unwrap(),
            p.join(q).unwrap().meet(r).unwrap()
        );
    }

    #[test]
    fn leq_matches_meet_and_join(v in subspaces(2)) {
        let (p, q) = (&v[0], &v[1]);
        let leq = p.leq(q).unwrap();
        prop_assert_eq!(leq, &p.meet(q).unwrap() == p);
        prop_assert_eq!(leq, &p.join(q).unwrap() == q);
    }

    #[test]
    fn spanning_set_does_not_matter(
        v in subspaces(2),
        k in scalar().prop_filter("nonzero", |s| !num_traits::Zero::is_zero(s)),
    ) {
        let (p, q) = (&v[0], &v[1]);
        // rescale and mix basis rows, add a redundant vector
        let mut rows = p.basis().row_vectors();
        if rows.len() >= 2 {
            rows[0] = rows[0].add(&rows[1].scale(&k)).unwrap();
        }
        let rows: Vec<Vector> = rows.iter().map(|r| r.scale(&k)).collect();
        let mut spanning = rows.clone();
        if let Some(first) = rows.first() {
            spanning.push(first.scale(&Scalar::from_int(3)));
        }
        let p2 = Subspace::span(&spanning, p.space_dim()).unwrap();
        prop_assert_eq!(&p2, p);
        prop_assert_eq!(p2.meet(q).unwrap(), p.meet(q).unwrap());
        prop_assert_eq!(p2.join(q).unwrap(), p.join(q).unwrap());
    }

    #[test]
    fn subspace_json_round_trip(v in subspaces(1)) {
        let text = serde_json::to_string(&v[0]).unwrap();
        prop_assert_eq!(&serde_json::from_str::<Subspace>(&text).unwrap(), &v[0]);
    }
}

#[test]
fn spin_triple_fails_in_both_fields() {
    for field in [ScalarField::RationalReal, ScalarField::GaussianRational] {
        let scale = match field {
            ScalarField::RationalReal => Scalar::from_int(2),
            ScalarField::GaussianRational => Scalar::gaussian(1, 1, 1, 1),
        };
        let ray = |v: &[i64]| Subspace::span(&[Vector::from_ints(v).scale(&scale)], 2).unwrap();
        assert!(
            !distributes(&ray(&[1, 1]), &ray(&[1, 0]), &ray(&[0, 1])).unwrap(),
            "{field}"
        );
    }
}
