//! Spin-½ observables in units where ħ = 1, with their spectral projectors.
//! Every entry lies in ℚ(i).

use crate::linalg::{Matrix, Vector};

fn m(rows: &[&[&str]]) -> Matrix {
    Matrix::parse(rows).expect("constant matrix")
}

fn v(entries: &[&str]) -> Vector {
    Vector::parse(entries).expect("constant vector")
}

pub fn s_x() -> Matrix {
    m(&[&["0", "1/2"], &["1/2", "0"]])
}

pub fn s_y() -> Matrix {
    m(&[&["0", "-1/2i"], &["1/2i", "0"]])
}

pub fn s_z() -> Matrix {
    m(&[&["1/2", "0"], &["0", "-1/2"]])
}

pub fn x_up() -> Vector {
    v(&["1", "1"])
}

pub fn x_down() -> Vector {
    v(&["1", "-1"])
}

pub fn y_up() -> Vector {
    v(&["1", "i"])
}

pub fn y_down() -> Vector {
    v(&["1", "-i"])
}

pub fn z_up() -> Vector {
    v(&["1", "0"])
}

pub fn z_down() -> Vector {
    v(&["0", "1"])
}

pub fn proj_x_up() -> Matrix {
    m(&[&["1/2", "1/2"], &["1/2", "1/2"]])
}

pub fn proj_x_down() -> Matrix {
    m(&[&["1/2", "-1/2"], &["-1/2", "1/2"]])
}

pub fn proj_y_up() -> Matrix {
    m(&[&["1/2", "-1/2i"], &["1/2i", "1/2"]])
}

pub fn proj_y_down() -> Matrix {
    m(&[&["1/2", "1/2i"], &["-1/2i", "1/2"]])
}

pub fn proj_z_up() -> Matrix {
    m(&[&["1", "0"], &["0", "0"]])
}

pub fn proj_z_down() -> Matrix {
    m(&[&["0", "0"], &["0", "1"]])
}

/// `diag(1, i)`: maps the y-down ray onto the x-up ray.
pub fn quarter_turn() -> Matrix {
    m(&[&["1", "0"], &["0", "i"]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use crate::subspace::Subspace;

    fn ray(v: &Vector) -> Subspace {
        Subspace::span(std::slice::from_ref(v), 2).unwrap()
    }

    #[test]
    fn operators_are_hermitian_with_half_spectral_decomposition() {
        let half = Scalar::ratio(1, 2);
        for (op, up, down) in [
            (s_x(), proj_x_up(), proj_x_down()),
            (s_y(), proj_y_up(), proj_y_down()),
            (s_z(), proj_z_up(), proj_z_down()),
        ] {
            assert!(op.is_hermitian().unwrap());
            let rebuilt = up.scale(&half).add(&down.scale(&-half.clone())).unwrap();
            assert_eq!(rebuilt, op);
            assert_eq!(up.add(&down).unwrap(), Matrix::identity(2));
            assert!(up.is_idempotent().unwrap() && down.is_idempotent().unwrap());
        }
    }

    #[test]
    fn projectors_fix_their_eigenrays() {
        for (p, e) in [
            (proj_x_up(), x_up()),
            (proj_x_down(), x_down()),
            (proj_y_up(), y_up()),
            (proj_y_down(), y_down()),
            (proj_z_up(), z_up()),
            (proj_z_down(), z_down()),
        ] {
            assert_eq!(p.apply(&e).unwrap(), e);
        }
    }

    #[test]
    fn quarter_turn_maps_y_down_to_x_up() {
        let u = quarter_turn();
        assert!(u.is_unitary().unwrap());
        // diag(1,i)·(1,−i) = (1, −i·i) = (1, 1)
        assert_eq!(u.apply(&y_down()).unwrap(), x_up());
        assert_eq!(ray(&u.apply(&y_down()).unwrap()), ray(&x_up()));
    }
}
