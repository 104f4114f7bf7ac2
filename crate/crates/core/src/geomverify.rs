//! Numerical checks for the consimilarity action, the map `Γ`, and the
//! 3-form function on oriented 3-planes of su(3).

pub mod consim;
pub mod grassmann;
pub mod hypersurface;
pub mod suite;

pub use consim::{consim_act, consim_stabilizer_dim, gamma, geodesic};
pub use grassmann::{flow_line_stabilizer, grassmann_f, grassmann_survey, OrientedThreePlane};
pub use hypersurface::{hypersurface_torus_solutions, HypersurfaceScan};
pub use suite::{run_suite, verify_suite, SuiteConfig, SuiteKind, VerificationReport};
