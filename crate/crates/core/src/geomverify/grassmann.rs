//! The function `f(U) = ⟨x, [y, z]⟩` on oriented 3-planes of su(3), where
//! `(x, y, z)` is any oriented orthonormal frame of `U`.

use nalgebra::{Matrix3, Rotation3, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::liealg::{real_coords, stabilizer_dim_linear, AlgebraElement, GroupMatrix, Tolerances};
use crate::scalar::Real;

/// Below this Gram determinant of the normalized spanning vectors, the
/// triple is treated as degenerate.
pub const MIN_GRAM_DET: f64 = 1e-6;

fn gram<T: Real>(v: &[AlgebraElement<T>; 3]) -> Matrix3<T> {
    Matrix3::from_fn(|r, c| v[r].inner(&v[c]))
}

fn orthonormalize<T: Real>(v: &[AlgebraElement<T>; 3]) -> [AlgebraElement<T>; 3] {
    let mut out = *v;
    for k in 0..3 {
        let mut e = v[k];
        for prev in &out[..k] {
            e = e - *prev * e.inner(prev);
        }
        out[k] = e * (T::one() / e.norm());
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrientedThreePlane<T: Real> {
    frame: [AlgebraElement<T>; 3],
}

impl<T: Real> OrientedThreePlane<T> {
    /// Accepts a frame whose Gram matrix is the identity within `tol.mat`.
    pub fn new(frame: [AlgebraElement<T>; 3], tol: &Tolerances<T>) -> Result<Self> {
        let deviation = (gram(&frame) - Matrix3::identity()).abs().max();
        if deviation > tol.mat {
            return Err(Error::FrameNotOrthonormal {
                deviation: deviation.as_f64(),
            });
        }
        Ok(Self { frame })
    }

    /// Gram–Schmidt on three spanning vectors, keeping their orientation.
    pub fn from_spanning(vectors: [AlgebraElement<T>; 3]) -> Result<Self> {
        let mut unit = vectors;
        for v in unit.iter_mut() {
            let n = v.norm();
            if n == T::zero() {
                return Err(Error::DegenerateFrame { gram_det: 0.0 });
            }
            *v = *v * (T::one() / n);
        }
        let gram_det = gram(&unit).determinant();
        if gram_det < T::lit(MIN_GRAM_DET) {
            return Err(Error::DegenerateFrame {
                gram_det: gram_det.as_f64(),
            });
        }
        Ok(Self {
            frame: orthonormalize(&vectors),
        })
    }

    /// The su(2) spanned by `v₁, v₂, v₃`, with frame `v_k/√2`.
    pub fn su2_standard() -> Self {
        let scale = T::one() / T::lit(2.0).sqrt();
        let [a, b, c] = AlgebraElement::su2_basis();
        Self {
            frame: [a * scale, b * scale, c * scale],
        }
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let v = [
                AlgebraElement::random(rng, 1.0),
                AlgebraElement::random(rng, 1.0),
                AlgebraElement::random(rng, 1.0),
            ];
            if let Ok(plane) = Self::from_spanning(v) {
                return plane;
            }
        }
    }

    pub fn frame(&self) -> &[AlgebraElement<T>; 3] {
        &self.frame
    }

    pub fn adjoint_by(&self, g: &GroupMatrix<T>) -> Self {
        Self {
            frame: self.frame.map(|x| x.adjoint_by(g)),
        }
    }

    /// New frame `x′_k = Σ_j r_{jk} x_j`; orientation is kept iff `det r = 1`.
    pub fn rotated(&self, r: &Matrix3<T>) -> Self {
        let col = |k: usize| {
            (0..3).fold(AlgebraElement::zero(), |acc, j| {
                acc + self.frame[j] * r[(j, k)]
            })
        };
        Self {
            frame: [col(0), col(1), col(2)],
        }
    }

    /// The same plane with the opposite orientation.
    pub fn reversed(&self) -> Self {
        let [x, y, z] = self.frame;
        Self { frame: [y, x, z] }
    }
}

pub fn grassmann_f<T: Real>(plane: &OrientedThreePlane<T>) -> T {
    let [x, y, z] = plane.frame;
    x.inner(&y.bracket(&z))
}

/// `|f|` on the su(2) plane, which is where `|f|` is largest.
pub fn su2_critical_value<T: Real>() -> T {
    grassmann_f(&OrientedThreePlane::<T>::su2_standard()).abs()
}

pub fn random_rotation<R: Rng + ?Sized>(rng: &mut R) -> Matrix3<f64> {
    let axis = Vector3::from_fn(|_, _| rng.sample::<f64, _>(StandardNormal));
    Rotation3::new(axis).into_inner()
}

/// Gradient ascent of `|f|` with Gram–Schmidt retraction. The gradient of
/// `f` in `x` is `[y, z]`, and cyclically in `y` and `z`.
pub fn ascend(
    plane: &OrientedThreePlane<f64>,
    steps: usize,
    step_size: f64,
) -> OrientedThreePlane<f64> {
    let mut current = *plane;
    for _ in 0..steps {
        let sign = grassmann_f(&current).signum();
        let [x, y, z] = current.frame;
        let moved = [
            x + y.bracket(&z) * (sign * step_size),
            y + z.bracket(&x) * (sign * step_size),
            z + x.bracket(&y) * (sign * step_size),
        ];
        current = OrientedThreePlane {
            frame: orthonormalize(&moved),
        };
    }
    current
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GrassmannSurvey {
    pub samples: usize,
    /// Largest `|f|` over the raw samples.
    pub max_sampled: f64,
    /// Largest `|f|` after gradient ascent from the best raw samples.
    pub max_refined: f64,
    pub critical_value: f64,
}

/// Samples `samples` random planes (sample `i` uses stream `i` of a ChaCha8
/// generator seeded with `seed`), then refines the `refine` best.
pub fn grassmann_survey(seed: u64, samples: usize, refine: usize) -> GrassmannSurvey {
    let mut scored: Vec<(f64, usize, OrientedThreePlane<f64>)> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let plane = OrientedThreePlane::<f64>::random(&mut rng);
            (grassmann_f(&plane).abs(), i, plane)
        })
        .collect();
    scored.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    let max_sampled = scored.first().map_or(0.0, |s| s.0);
    let max_refined = scored
        .iter()
        .take(refine)
        .map(|(_, _, plane)| grassmann_f(&ascend(plane, 400, 0.05)).abs())
        .fold(max_sampled, f64::max);
    GrassmannSurvey {
        samples,
        max_sampled,
        max_refined,
        critical_value: su2_critical_value(),
    }
}

/// `V(t) = span{u cos t + v sin t, v₂, v₃}`.
pub fn flow_line_plane(t: f64) -> [AlgebraElement<f64>; 3] {
    let [_, v2, v3] = AlgebraElement::su2_basis();
    let first = AlgebraElement::u() * t.cos() + AlgebraElement::v() * t.sin();
    [first, v2, v3]
}

/// Dimension of `{X ∈ su(3) : [X, V(t)] ⊆ V(t)}`.
pub fn flow_line_stabilizer(t: f64, tol: &Tolerances<f64>) -> Result<usize> {
    let span = flow_line_plane(t);
    let basis = orthonormalize(&span);
    let residual = |a: AlgebraElement<f64>| basis.iter().fold(a, |acc, e| acc - *e * acc.inner(e));
    stabilizer_dim_linear(
        |x| {
            span.iter()
                .flat_map(|e| real_coords(residual(x.bracket(e)).matrix()))
                .collect()
        },
        tol,
    )
}
