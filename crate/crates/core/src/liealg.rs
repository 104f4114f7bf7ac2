//! Complex 3×3 matrices, the Lie algebra su(3) and the group SU(3).
//!
//! The invariant inner product is normalized as `⟨X, Y⟩ = −Tr(XY)`, so the
//! Cartan generators `u = diag(i, −i, 0)` and `u′ = diag(0, i, −i)` have
//! squared norm 2 and pair to −1.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{Complex, ComplexField, DMatrix, Matrix3};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::scalar::Real;

pub type CMat3<T> = Matrix3<Complex<T>>;

/// Matrix identity and rank-decision tolerances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances<T> {
    /// Tolerance for matrix identities (unitarity, determinant, equalities).
    pub mat: T,
    /// Singular values above this threshold count towards the rank.
    pub rank: T,
}

impl<T: Real> Tolerances<T> {
    pub fn new(mat: T, rank: T) -> Result<Self> {
        for (name, value) in [("tol_mat", mat), ("tol_rank", rank)] {
            if !(value > T::zero() && value < T::one()) {
                return Err(Error::InvalidTolerance {
                    name,
                    value: value.as_f64(),
                });
            }
        }
        Ok(Self { mat, rank })
    }
}

impl<T: Real> Default for Tolerances<T> {
    fn default() -> Self {
        Self {
            mat: T::lit(1e-9),
            rank: T::lit(1e-7),
        }
    }
}

fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::lit(im))
}

fn diag_i<T: Real>(a: f64, b: f64, d: f64) -> CMat3<T> {
    let mut m = CMat3::<T>::zeros();
    m[(0, 0)] = c(0.0, a);
    m[(1, 1)] = c(0.0, b);
    m[(2, 2)] = c(0.0, d);
    m
}

/// Largest absolute entry modulus.
pub fn max_abs<T: Real>(m: &CMat3<T>) -> T {
    m.iter().fold(T::zero(), |acc, z| acc.max(z.modulus()))
}

/// Real and imaginary parts of the nine entries, row-major, as 18 reals.
pub fn real_coords<T: Real>(m: &CMat3<T>) -> Vec<T> {
    let mut out = Vec::with_capacity(18);
    for r in 0..3 {
        for col in 0..3 {
            out.push(m[(r, col)].re);
        }
    }
    for r in 0..3 {
        for col in 0..3 {
            out.push(m[(r, col)].im);
        }
    }
    out
}

/// An element of su(3): anti-Hermitian and traceless.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgebraElement<T: Real>(CMat3<T>);

impl<T: Real> AlgebraElement<T> {
    /// Wraps a matrix without checking the su(3) conditions.
    pub fn from_matrix_unchecked(m: CMat3<T>) -> Self {
        Self(m)
    }

    pub fn from_matrix(m: CMat3<T>, tol: T) -> Result<Self> {
        let x = Self(m);
        let deviation = x.algebra_deviation();
        if deviation > tol {
            return Err(Error::NotInGroup {
                group: "su(3)",
                deviation: deviation.as_f64(),
            });
        }
        Ok(x)
    }

    pub fn matrix(&self) -> &CMat3<T> {
        &self.0
    }

    pub fn zero() -> Self {
        Self(CMat3::zeros())
    }

    /// `diag(i, −i, 0)`, the root direction of `U_{1,−1}`.
    pub fn u() -> Self {
        Self(diag_i(1.0, -1.0, 0.0))
    }

    /// `diag(0, i, −i)`.
    pub fn u_prime() -> Self {
        Self(diag_i(0.0, 1.0, -1.0))
    }

    /// `diag(i, i, −2i)`, generator of `U_{1,1}`; equals `u + 2u′`.
    pub fn v() -> Self {
        Self(diag_i(1.0, 1.0, -2.0))
    }

    /// `diag(ik, il, −i(k+l))`, generator of the circle `U_{k,l}`.
    pub fn circle_generator(k: i64, l: i64) -> Self {
        Self(diag_i(k as f64, l as f64, -(k + l) as f64))
    }

    /// Real antisymmetric generator in the (1,2)-plane: `E₁₂ − E₂₁`.
    pub fn w() -> Self {
        Self::antisym(0, 1)
    }

    /// The basis `v₁, v₂, v₃` of the upper-left su(2) block:
    /// `diag(i, −i)`, `i(E₁₂ + E₂₁)`, `E₁₂ − E₂₁`.
    pub fn su2_basis() -> [Self; 3] {
        [Self::u(), Self::sym_i(0, 1), Self::antisym(0, 1)]
    }

    fn antisym(j: usize, k: usize) -> Self {
        let mut m = CMat3::<T>::zeros();
        m[(j, k)] = c(1.0, 0.0);
        m[(k, j)] = c(-1.0, 0.0);
        Self(m)
    }

    fn sym_i(j: usize, k: usize) -> Self {
        let mut m = CMat3::<T>::zeros();
        m[(j, k)] = c(0.0, 1.0);
        m[(k, j)] = c(0.0, 1.0);
        Self(m)
    }

    /// Real basis of su(3): `u`, `u′`, then `E_jk − E_kj` and `i(E_jk + E_kj)`
    /// for `j < k`. Every element has squared norm 2.
    pub fn basis() -> [Self; 8] {
        [
            Self::u(),
            Self::u_prime(),
            Self::antisym(0, 1),
            Self::sym_i(0, 1),
            Self::antisym(0, 2),
            Self::sym_i(0, 2),
            Self::antisym(1, 2),
            Self::sym_i(1, 2),
        ]
    }

    /// Linear combination of [`Self::basis`] with real coefficients.
    pub fn from_coords(coords: &[T; 8]) -> Self {
        Self::basis()
            .iter()
            .zip(coords)
            .fold(Self::zero(), |acc, (b, &x)| acc + *b * x)
    }

    pub fn bracket(&self, other: &Self) -> Self {
        Self(self.0 * other.0 - other.0 * self.0)
    }

    /// `−Tr(XY)`; real for anti-Hermitian arguments.
    pub fn inner(&self, other: &Self) -> T {
        -(self.0 * other.0).trace().re
    }

    pub fn norm(&self) -> T {
        self.inner(self).max(T::zero()).sqrt()
    }

    /// `Ad_g X = g X g⁻¹` for unitary `g`.
    pub fn adjoint_by(&self, g: &GroupMatrix<T>) -> Self {
        Self(g.0 * self.0 * g.0.adjoint())
    }

    /// Max-entry deviation from anti-Hermitian plus |trace|.
    pub fn algebra_deviation(&self) -> T {
        max_abs(&(self.0 + self.0.adjoint())).max(self.0.trace().modulus())
    }

    pub fn exp(&self) -> GroupMatrix<T> {
        expm(self)
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R, scale: f64) -> Self {
        let mut coords = [T::zero(); 8];
        for x in coords.iter_mut() {
            let z: f64 = rng.sample(StandardNormal);
            *x = T::lit(scale * z);
        }
        Self::from_coords(&coords)
    }
}

impl<T: Real> Add for AlgebraElement<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl<T: Real> Sub for AlgebraElement<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl<T: Real> Neg for AlgebraElement<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl<T: Real> Mul<T> for AlgebraElement<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        Self(self.0.map(|z| z * rhs))
    }
}

/// An element of SU(3).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupMatrix<T: Real>(CMat3<T>);

impl<T: Real> GroupMatrix<T> {
    pub fn identity() -> Self {
        Self(CMat3::identity())
    }

    pub fn from_matrix_unchecked(m: CMat3<T>) -> Self {
        Self(m)
    }

    pub fn from_matrix(m: CMat3<T>, tol: T) -> Result<Self> {
        let g = Self(m);
        let deviation = g.group_deviation();
        if deviation > tol {
            return Err(Error::NotInGroup {
                group: "SU(3)",
                deviation: deviation.as_f64(),
            });
        }
        Ok(g)
    }

    /// Real rotation matrix from real entries (row-major).
    pub fn from_real_rows(rows: [[f64; 3]; 3]) -> Self {
        Self(CMat3::from_fn(|r, col| c(rows[r][col], 0.0)))
    }

    pub fn matrix(&self) -> &CMat3<T> {
        &self.0
    }

    /// For unitary matrices the inverse is the conjugate transpose.
    pub fn inverse(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn conjugate(&self) -> Self {
        Self(self.0.map(|z| z.conj()))
    }

    pub fn trace(&self) -> Complex<T> {
        self.0.trace()
    }

    pub fn determinant(&self) -> Complex<T> {
        self.0.determinant()
    }

    /// Max of the unitarity defect `‖MᴴM − I‖_max` and `|det M − 1|`.
    pub fn group_deviation(&self) -> T {
        let unitarity = max_abs(&(self.0.adjoint() * self.0 - CMat3::identity()));
        unitarity.max((self.determinant() - Complex::new(T::one(), T::zero())).modulus())
    }

    pub fn distance(&self, other: &Self) -> T {
        max_abs(&(self.0 - other.0))
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        AlgebraElement::random(rng, 1.0).exp()
    }
}

impl<T: Real> Mul for GroupMatrix<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

/// Matrix exponential su(3) → SU(3).
pub fn expm<T: Real>(x: &AlgebraElement<T>) -> GroupMatrix<T> {
    GroupMatrix(x.0.exp())
}

/// `8 − rank` of the real-linear map `su(3) → ℝⁿ` given by `constraint`.
///
/// The map is sampled on [`AlgebraElement::basis`]; rank is the number of
/// singular values above `tol.rank`. A singular value within a factor 10 of
/// the threshold makes the decision unstable and is reported as an error.
pub fn stabilizer_dim_linear<T, F>(constraint: F, tol: &Tolerances<T>) -> Result<usize>
where
    T: Real,
    F: Fn(&AlgebraElement<T>) -> Vec<T>,
{
    let columns: Vec<Vec<T>> = AlgebraElement::basis().iter().map(&constraint).collect();
    let rows = columns.first().map_or(0, Vec::len);
    let m = DMatrix::from_fn(rows, columns.len(), |r, col| columns[col][r]);
    numeric_rank(&m, tol.rank).map(|rank| 8 - rank)
}

/// Singular-value rank with the ±factor-10 instability band around `threshold`.
pub fn numeric_rank<T: Real>(m: &DMatrix<T>, threshold: T) -> Result<usize> {
    if m.is_empty() {
        return Ok(0);
    }
    let ten = T::lit(10.0);
    let mut rank = 0;
    for sigma in m.singular_values().iter().copied() {
        if sigma > threshold / ten && sigma < threshold * ten {
            return Err(Error::RankUnstable {
                sigma: sigma.as_f64(),
                threshold: threshold.as_f64(),
            });
        }
        if sigma > threshold {
            rank += 1;
        }
    }
    Ok(rank)
}

/// Stabilizer dimension of a group element under conjugation: `X ↦ XM − MX`.
pub fn ad_stabilizer_dim<T: Real>(m: &GroupMatrix<T>, tol: &Tolerances<T>) -> Result<usize> {
    stabilizer_dim_linear(|x| real_coords(&(x.0 * m.0 - m.0 * x.0)), tol)
}
