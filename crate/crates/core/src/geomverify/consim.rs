//! The consimilarity action `c(A)B = A B Āᵀ⁻¹ = A B Aᵀ` of SU(3) on itself
//! and the map `Γ(A) = A Ā`, which carries consimilarity classes to
//! conjugacy classes.

use crate::error::Result;
use crate::liealg::{
    expm, real_coords, stabilizer_dim_linear, AlgebraElement, GroupMatrix, Tolerances,
};
use crate::scalar::Real;

pub fn consim_act<T: Real>(a: &GroupMatrix<T>, b: &GroupMatrix<T>) -> GroupMatrix<T> {
    GroupMatrix::from_matrix_unchecked(a.matrix() * b.matrix() * a.matrix().transpose())
}

pub fn gamma<T: Real>(a: &GroupMatrix<T>) -> GroupMatrix<T> {
    GroupMatrix::from_matrix_unchecked(a.matrix() * a.conjugate().matrix())
}

/// `B(t) = exp(t·w)` with `w = E₁₂ − E₂₁`; a real rotation in the first two
/// coordinates. Meets the symmetric orbit at `t = 0` and the other singular
/// orbit at `t = π/2`.
pub fn geodesic<T: Real>(t: T) -> GroupMatrix<T> {
    expm(&(AlgebraElement::w() * t))
}

/// Dimension of the stabilizer of `b` under consimilarity.
///
/// Differentiating `exp(sX) B exp(sX)ᵀ` at `s = 0` gives the linear
/// condition `X B + B Xᵀ = 0` on `X ∈ su(3)`.
pub fn consim_stabilizer_dim<T: Real>(b: &GroupMatrix<T>, tol: &Tolerances<T>) -> Result<usize> {
    let bm = b.matrix();
    stabilizer_dim_linear(
        |x| {
            let xm = x.matrix();
            real_coords(&(xm * bm + bm * xm.transpose()))
        },
        tol,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::max_abs;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn dist(a: &GroupMatrix<f64>, b: &GroupMatrix<f64>) -> f64 {
        a.distance(b)
    }

    #[test]
    fn action_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = GroupMatrix::<f64>::random(&mut rng);
        let b = GroupMatrix::random(&mut rng);
        let id = GroupMatrix::identity();
        assert!(dist(&consim_act(&id, &b), &b) < 1e-12);

        let s = consim_act(&a, &id);
        assert!(max_abs(&(s.matrix() - s.matrix().transpose())) < 1e-12);
        assert!(s.group_deviation() < 1e-12);

        let a2 = GroupMatrix::random(&mut rng);
        let lhs = consim_act(&(a * a2), &b);
        let rhs = consim_act(&a, &consim_act(&a2, &b));
        assert!(dist(&lhs, &rhs) < 1e-12);
    }

    #[test]
    fn gamma_examples() {
        let id = GroupMatrix::<f64>::identity();
        assert!(dist(&gamma(&id), &id) < 1e-15);
        for t in [0.1, 0.5, PI / 4.0] {
            assert!(dist(&gamma(&geodesic(t)), &geodesic(2.0 * t)) < 1e-12);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = GroupMatrix::<f64>::random(&mut rng);
        assert!(gamma(&a).trace().im.abs() < 1e-12);
    }

    #[test]
    fn stabilizer_examples() {
        let tol = Tolerances::default();
        assert_eq!(
            consim_stabilizer_dim(&GroupMatrix::<f64>::identity(), &tol),
            Ok(3)
        );
        assert_eq!(consim_stabilizer_dim(&geodesic(PI / 2.0), &tol), Ok(3));
        assert_eq!(consim_stabilizer_dim(&geodesic(PI / 8.0), &tol), Ok(1));
        assert_eq!(consim_stabilizer_dim(&geodesic(PI / 4.0), &tol), Ok(1));
    }

    #[test]
    fn stabilizer_profile_along_geodesic() {
        let tol = Tolerances::default();
        let dims: Vec<usize> = (0..=8)
            .map(|k| consim_stabilizer_dim(&geodesic(k as f64 * PI / 16.0), &tol).unwrap())
            .collect();
        assert_eq!(dims, vec![3, 1, 1, 1, 1, 1, 1, 1, 3]);
    }
}
