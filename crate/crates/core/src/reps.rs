//! Slice representations of the connected singular stabilizers and the
//! principal stabilizers they produce.
//!
//! | stabilizer | dim V | V                    |
//! |------------|-------|----------------------|
//! | SU(2)      | 3     | `[Σ²]`               |
//! | U(2)       | 4     | `[Σ ⊗ (Aᵐ ⊕ A⁻ᵐ)]`, m odd |
//! | SO(3)      | 3     | `[Σ²]`               |
//! | T²         | 2     | `Aᵖ ⊗ A^q`           |

pub mod torus_oracle;

use std::fmt;

use nalgebra::{Complex, DMatrix, DVector};
use num_integer::Integer;
use num_rational::Rational64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::cartan::{CartanVector, CircleSubgroup};
use crate::error::{Error, Result};
use crate::liealg::{numeric_rank, Tolerances};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SliceRep {
    /// `ℝ³ = [Σ²]` for SU(2).
    Su2Standard,
    /// `ℝ³ = [Σ²]` for SO(3).
    So3Standard,
    /// `[Σ¹ ⊗ (Aᵐ ⊕ A⁻ᵐ)]` for U(2); `m` odd and positive.
    U2 { m: i64 },
    /// `Aᵖ ⊗ A^q` for T²; sign-normalized so the first nonzero entry is positive.
    Torus { p: i64, q: i64 },
}

impl SliceRep {
    /// `P(m) ≅ P(−m)`, so the sign of `m` is dropped.
    pub fn u2(m: i64) -> Result<Self> {
        if m.is_even() {
            return Err(Error::NotOdd(m));
        }
        Ok(SliceRep::U2 { m: m.abs() })
    }

    /// `Aᵖ ⊗ A^q ≅ A⁻ᵖ ⊗ A⁻^q`.
    pub fn torus(p: i64, q: i64) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::ZeroPair);
        }
        let flip = p < 0 || (p == 0 && q < 0);
        Ok(if flip {
            SliceRep::Torus { p: -p, q: -q }
        } else {
            SliceRep::Torus { p, q }
        })
    }

    pub fn real_dim(&self) -> usize {
        match self {
            SliceRep::Su2Standard | SliceRep::So3Standard => 3,
            SliceRep::U2 { .. } => 4,
            SliceRep::Torus { .. } => 2,
        }
    }

    pub fn stabilizer(&self) -> StabilizerTag {
        match self {
            SliceRep::Su2Standard => StabilizerTag::Su2,
            SliceRep::So3Standard => StabilizerTag::So3,
            SliceRep::U2 { .. } => StabilizerTag::U2,
            SliceRep::Torus { .. } => StabilizerTag::T2,
        }
    }

    /// Real matrices of the Lie algebra action on `V`.
    pub fn real_form<T: Real>(&self) -> RealRep<T> {
        match *self {
            SliceRep::Su2Standard | SliceRep::So3Standard => RealRep::so3_standard(),
            SliceRep::U2 { m } => RealRep::u2(m),
            SliceRep::Torus { p, q } => RealRep::torus(p, q),
        }
    }
}

impl fmt::Display for SliceRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SliceRep::Su2Standard => write!(f, "SU2"),
            SliceRep::So3Standard => write!(f, "SO3"),
            SliceRep::U2 { m } => write!(f, "U2 {m}"),
            SliceRep::Torus { p, q } => write!(f, "T2 {p} {q}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StabilizerTag {
    Su2,
    So3,
    U2,
    T2,
}

impl StabilizerTag {
    pub const ALL: [StabilizerTag; 4] = [
        StabilizerTag::Su2,
        StabilizerTag::U2,
        StabilizerTag::So3,
        StabilizerTag::T2,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            StabilizerTag::Su2 => "SU(2)",
            StabilizerTag::So3 => "SO(3)",
            StabilizerTag::U2 => "U(2)",
            StabilizerTag::T2 => "T2",
        }
    }
}

/// Slice representations of a connected singular stabilizer. `bound` caps
/// `m` for U(2) and `max(|p|, |q|)` for T².
pub fn enumerate_slice_reps(stabilizer: StabilizerTag, bound: i64) -> Vec<SliceRep> {
    match stabilizer {
        StabilizerTag::Su2 => vec![SliceRep::Su2Standard],
        StabilizerTag::So3 => vec![SliceRep::So3Standard],
        StabilizerTag::U2 => (1..=bound).step_by(2).map(|m| SliceRep::U2 { m }).collect(),
        StabilizerTag::T2 => {
            let mut reps = Vec::new();
            for p in 0..=bound {
                for q in -bound..=bound {
                    if (p == 0 && q <= 0) || (p, q) == (0, 0) {
                        continue;
                    }
                    reps.push(SliceRep::Torus { p, q });
                }
            }
            reps
        }
    }
}

/// `H = U_{k,l} × Z_h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrincipalStabilizer {
    pub circle: CircleSubgroup,
    pub finite_part: u64,
}

impl fmt::Display for PrincipalStabilizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.finite_part == 1 {
            write!(f, "{}", self.circle)
        } else {
            write!(f, "{} x Z{}", self.circle, self.finite_part)
        }
    }
}

/// Coefficients of a T² weight in the lattice basis `z₁ = v/3`,
/// `z₂ = (2u + u′)/3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct WeightVector {
    pub p: i64,
    pub q: i64,
}

impl WeightVector {
    /// `p z₁ + q z₂ = ((p + 2q)/3) u + ((2p + q)/3) u′`.
    pub fn to_cartan(&self) -> CartanVector<Rational64> {
        CartanVector::new(
            Rational64::new(self.p + 2 * self.q, 3),
            Rational64::new(2 * self.p + self.q, 3),
        )
    }
}

/// The weight `½u + (m/6)v` of the U(2) slice representation.
pub fn u2_weight(m: i64) -> CartanVector<Rational64> {
    CartanVector::u() * Rational64::new(1, 2) + CartanVector::v() * Rational64::new(m, 6)
}

/// Restriction of the U(2) weight to the maximal torus:
/// `½u + (m/6)v = ((m−1)/2) z₁ + z₂`.
pub fn restrict_u2_to_torus(m: i64) -> Result<WeightVector> {
    if m.is_even() {
        return Err(Error::NotOdd(m));
    }
    Ok(WeightVector {
        p: (m - 1) / 2,
        q: 1,
    })
}

/// Closed form of the U(2) principal circle: `((m−1)/2, −(m+1)/2)`.
pub fn u2_stabilizer_closed_form(m: i64) -> Result<CircleSubgroup> {
    if m.is_even() {
        return Err(Error::NotOdd(m));
    }
    CircleSubgroup::canonicalize((m - 1) / 2, -(m + 1) / 2)
}

pub fn principal_stabilizer(slice: &SliceRep) -> PrincipalStabilizer {
    match *slice {
        SliceRep::Su2Standard | SliceRep::So3Standard => PrincipalStabilizer {
            circle: CircleSubgroup::canonicalize(1, -1).expect("nonzero"),
            finite_part: 1,
        },
        SliceRep::U2 { m } => PrincipalStabilizer {
            circle: u2_weight(m).perp_line().expect("U(2) weight is nonzero"),
            finite_part: 1,
        },
        SliceRep::Torus { p, q } => PrincipalStabilizer {
            circle: WeightVector { p, q }
                .to_cartan()
                .perp_line()
                .expect("torus weight is nonzero"),
            finite_part: p.gcd(&q).unsigned_abs(),
        },
    }
}

/// A real representation of a Lie algebra, given by its generator matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct RealRep<T: Real> {
    pub dim: usize,
    pub generators: Vec<DMatrix<T>>,
}

impl<T: Real> RealRep<T> {
    /// so(3) on ℝ³.
    pub fn so3_standard() -> Self {
        let gen = |a: usize, b: usize| {
            let mut m = DMatrix::zeros(3, 3);
            m[(a, b)] = -T::one();
            m[(b, a)] = T::one();
            m
        };
        Self {
            dim: 3,
            generators: vec![gen(1, 2), gen(2, 0), gen(0, 1)],
        }
    }

    /// T² on ℝ² by rotation through the angle `px + qy`.
    pub fn torus(p: i64, q: i64) -> Self {
        let j = DMatrix::from_row_slice(2, 2, &[T::zero(), -T::one(), T::one(), T::zero()]);
        Self {
            dim: 2,
            generators: vec![&j * T::lit(p as f64), &j * T::lit(q as f64)],
        }
    }

    /// The trivial 2-dimensional T² representation. Not sphere-transitive.
    pub fn trivial_torus() -> Self {
        Self {
            dim: 2,
            generators: vec![DMatrix::zeros(2, 2), DMatrix::zeros(2, 2)],
        }
    }

    /// `su(2) ⊕ u(1)` on the real form of `Σ¹ ⊗ (Aᵐ ⊕ A⁻ᵐ)`.
    ///
    /// Complex basis order is `x⊗e, x⊗f, y⊗e, y⊗f`. The real subspace is
    /// spanned by `w₁ = x⊗e + y⊗f`, `w₂ = x⊗f − y⊗e`, `w₃ = i(x⊗e − y⊗f)`,
    /// `w₄ = i(x⊗f + y⊗e)`. The `su(2)` generators act on the first factor and
    /// `v` acts on the second by `diag(im, −im)`.
    pub fn u2(m: i64) -> Self {
        let generators = u2_complex_generators::<T>(m)
            .iter()
            .map(|g| project_to_real_form(g, &u2_real_basis()))
            .collect();
        Self { dim: 4, generators }
    }

    /// Rank of the orbit map `X ↦ X·x` at the point `x`.
    pub fn orbit_rank(&self, x: &DVector<T>, tol: &Tolerances<T>) -> Result<usize> {
        let cols: Vec<DVector<T>> = self.generators.iter().map(|g| g * x).collect();
        let m = DMatrix::from_columns(&cols);
        numeric_rank(&m, tol.rank)
    }
}

fn cx<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::lit(im))
}

pub(crate) fn u2_real_basis<T: Real>() -> [DVector<Complex<T>>; 4] {
    let v = |e: [(f64, f64); 4]| DVector::from_iterator(4, e.iter().map(|&(re, im)| cx(re, im)));
    let (o, z, i, mi, neg) = ((1.0, 0.0), (0.0, 0.0), (0.0, 1.0), (0.0, -1.0), (-1.0, 0.0));
    [
        v([o, z, z, o]),
        v([z, o, neg, z]),
        v([i, z, z, mi]),
        v([z, i, i, z]),
    ]
}

/// `v₁, v₂, v₃ ⊗ 1` and `1 ⊗ diag(im, −im)` on ℂ² ⊗ ℂ².
pub(crate) fn u2_complex_generators<T: Real>(m: i64) -> Vec<DMatrix<Complex<T>>> {
    let two = |e: [(f64, f64); 4]| {
        DMatrix::from_row_iterator(2, 2, e.iter().map(|&(re, im)| cx::<T>(re, im)))
    };
    let id2 = DMatrix::<Complex<T>>::identity(2, 2);
    let (z, o, i, mi, neg) = ((0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (0.0, -1.0), (-1.0, 0.0));
    let v1 = two([i, z, z, mi]);
    let v2 = two([z, i, i, z]);
    let v3 = two([z, o, neg, z]);
    let mf = m as f64;
    let center = two([(0.0, mf), z, z, (0.0, -mf)]);
    vec![
        v1.kronecker(&id2),
        v2.kronecker(&id2),
        v3.kronecker(&id2),
        id2.kronecker(&center),
    ]
}

/// Real matrix of `g` restricted to `span_ℝ{w_k}`. The `w_k` are orthogonal
/// with squared Hermitian norm 2.
pub(crate) fn project_to_real_form<T: Real>(
    g: &DMatrix<Complex<T>>,
    basis: &[DVector<Complex<T>>; 4],
) -> DMatrix<T> {
    DMatrix::from_fn(4, 4, |row, col| {
        let image = g * &basis[col];
        basis[row].dotc(&image).re / T::lit(2.0)
    })
}

fn random_unit<T: Real, R: Rng + ?Sized>(rng: &mut R, dim: usize) -> DVector<T> {
    let v = DVector::from_iterator(dim, (0..dim).map(|_| rng.sample::<f64, _>(StandardNormal)));
    let v = &v / v.norm();
    v.map(T::lit)
}

/// Whether the group acts transitively on the unit sphere of `rep`, judged by
/// the orbit map having rank `dim − 1` at `samples` random unit vectors
/// (at least 8).
pub fn sphere_transitivity_check<T: Real, R: Rng + ?Sized>(
    rep: &RealRep<T>,
    rng: &mut R,
    samples: usize,
    tol: &Tolerances<T>,
) -> Result<bool> {
    for _ in 0..samples.max(8) {
        let x = random_unit(rng, rep.dim);
        if rep.orbit_rank(&x, tol)? + 1 != rep.dim {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CircleClass;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_slice_reps(StabilizerTag::Su2, 7),
            vec![SliceRep::Su2Standard]
        );
        assert_eq!(SliceRep::Su2Standard.real_dim(), 3);
        assert_eq!(
            enumerate_slice_reps(StabilizerTag::U2, 6),
            vec![
                SliceRep::U2 { m: 1 },
                SliceRep::U2 { m: 3 },
                SliceRep::U2 { m: 5 }
            ]
        );
        let mut t = enumerate_slice_reps(StabilizerTag::T2, 1);
        t.sort();
        let mut expected = vec![
            SliceRep::Torus { p: 1, q: 0 },
            SliceRep::Torus { p: 0, q: 1 },
            SliceRep::Torus { p: 1, q: 1 },
            SliceRep::Torus { p: 1, q: -1 },
        ];
        expected.sort();
        assert_eq!(t, expected);
    }

    #[test]
    fn constructors_normalize() {
        assert_eq!(SliceRep::u2(-3), Ok(SliceRep::U2 { m: 3 }));
        assert_eq!(SliceRep::u2(4), Err(Error::NotOdd(4)));
        assert_eq!(SliceRep::torus(-2, 3), Ok(SliceRep::Torus { p: 2, q: -3 }));
        assert_eq!(SliceRep::torus(0, -1), Ok(SliceRep::Torus { p: 0, q: 1 }));
        assert_eq!(SliceRep::torus(0, 0), Err(Error::ZeroPair));
    }

    #[test]
    fn principal_stabilizer_examples() {
        let c = |k, l| CircleSubgroup::canonicalize(k, l).unwrap();
        let h = principal_stabilizer(&SliceRep::U2 { m: 1 });
        assert_eq!(
            h,
            PrincipalStabilizer {
                circle: c(0, 1),
                finite_part: 1
            }
        );

        let h = principal_stabilizer(&SliceRep::Torus { p: 2, q: 2 });
        assert_eq!(h.circle, c(1, -2));
        assert_eq!(h.circle.class(), CircleClass::SingularType);
        assert_eq!(h.finite_part, 2);

        let h = principal_stabilizer(&SliceRep::Torus { p: 0, q: 1 });
        assert_eq!(h.circle.class(), CircleClass::RootType);
        assert_eq!(h.finite_part, 1);

        assert_eq!(
            principal_stabilizer(&SliceRep::So3Standard).circle,
            c(1, -1)
        );
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(restrict_u2_to_torus(1), Ok(WeightVector { p: 0, q: 1 }));
        assert_eq!(restrict_u2_to_torus(3), Ok(WeightVector { p: 1, q: 1 }));
        assert_eq!(restrict_u2_to_torus(7), Ok(WeightVector { p: 3, q: 1 }));
        assert_eq!(restrict_u2_to_torus(2), Err(Error::NotOdd(2)));
        for m in (1..=21).step_by(2) {
            let w = restrict_u2_to_torus(m).unwrap();
            assert_eq!(w.to_cartan(), u2_weight(m));
        }
    }

    #[test]
    fn u2_real_form_matches_the_hand_computation() {
        // v₁w₁ = w₃, v₂w₁ = w₄, v₃w₁ = w₂, v w₁ = m w₃
        let m = 5;
        let rep = RealRep::<f64>::u2(m);
        let col0: Vec<Vec<f64>> = rep
            .generators
            .iter()
            .map(|g| g.column(0).iter().copied().collect())
            .collect();
        assert_eq!(col0[0], vec![0.0, 0.0, 1.0, 0.0]);
        assert_eq!(col0[1], vec![0.0, 0.0, 0.0, 1.0]);
        assert_eq!(col0[2], vec![0.0, 1.0, 0.0, 0.0]);
        assert_eq!(col0[3], vec![0.0, 0.0, m as f64, 0.0]);
    }

    #[test]
    fn u2_generators_preserve_the_real_form() {
        let basis = u2_real_basis::<f64>();
        for g in u2_complex_generators::<f64>(3) {
            let real = project_to_real_form(&g, &basis);
            for col in 0..4 {
                let image = &g * &basis[col];
                let rebuilt = (0..4).fold(DVector::zeros(4), |acc, row| {
                    acc + &basis[row] * Complex::new(real[(row, col)], 0.0)
                });
                assert!((image - rebuilt).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn sphere_transitivity_examples() {
        let tol = Tolerances::default();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let check = |rep: &RealRep<f64>, rng: &mut ChaCha8Rng| {
            sphere_transitivity_check(rep, rng, 8, &tol).unwrap()
        };
        assert!(check(&SliceRep::Su2Standard.real_form(), &mut rng));
        assert!(check(&SliceRep::Torus { p: 2, q: 3 }.real_form(), &mut rng));
        assert!(check(&SliceRep::U2 { m: 7 }.real_form(), &mut rng));
        assert!(!check(&RealRep::trivial_torus(), &mut rng));
    }

    #[test]
    fn weight_lattice_pairs_integrally() {
        for p in -6..=6 {
            for q in -6..=6 {
                let z = WeightVector { p, q }.to_cartan();
                assert_eq!(3 % *z.a.denom(), 0);
                assert_eq!(3 % *z.b.denom(), 0);
                assert!(z.inner(&CartanVector::u()).is_integer());
                assert!(z.inner(&CartanVector::u_prime()).is_integer());
            }
        }
    }
}
