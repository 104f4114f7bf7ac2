//! Cohomogeneity-one actions of SU(3) with one-dimensional principal
//! stabilizer: Cartan data and circle subgroups, slice representations,
//! the classification of tube pairs, and numerical checks on the
//! consimilarity action and the 3-form function on oriented 3-planes.
//!
//! Numeric code is generic over [`Real`] (`f32` or `f64`); lattice and
//! weight computations use exact rationals.

pub mod cartan;
pub mod classify;
pub mod error;
pub mod geomverify;
pub mod liealg;
pub mod reps;
pub mod scalar;

pub use cartan::{CartanVector, CircleClass, CircleSubgroup, IdentityComponent, NormalizerInfo};
pub use classify::{
    count_diffeo_classes, emit_tables, CircleBaseResult, Descriptor, GluingCount, GluingReason,
    TubeDescriptor,
};
pub use error::{Error, Result};
pub use geomverify::{SuiteConfig, SuiteKind, VerificationReport};
pub use liealg::{AlgebraElement, GroupMatrix, Tolerances};
pub use reps::{PrincipalStabilizer, SliceRep, StabilizerTag, WeightVector};
pub use scalar::Real;

pub type AlgebraElement64 = AlgebraElement<f64>;
pub type AlgebraElement32 = AlgebraElement<f32>;
pub type GroupMatrix64 = GroupMatrix<f64>;
pub type GroupMatrix32 = GroupMatrix<f32>;
pub type Tolerances64 = Tolerances<f64>;
pub type Tolerances32 = Tolerances<f32>;
/// Cartan vectors with exact rational coordinates.
pub type CartanVectorQ = CartanVector<num_rational::Rational64>;
