use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("rank decision unstable: singular value {sigma:e} within a factor 10 of threshold {threshold:e}")]
    RankUnstable { sigma: f64, threshold: f64 },

    #[error("(k, l) = (0, 0) does not define a circle subgroup")]
    ZeroPair,

    #[error("zero Cartan vector has no perpendicular line")]
    ZeroVector,

    #[error("U(2) slice weight must be odd, got {0}")]
    NotOdd(i64),

    #[error("principal stabilizer of {0} has a connected normalizer; no tau component to absorb")]
    NotRootType(String),

    #[error("incompatible regime: {0}")]
    IncompatibleRegime(String),

    #[error("frame is not orthonormal (Gram deviation {deviation:e})")]
    FrameNotOrthonormal { deviation: f64 },

    #[error("matrix is not in {group} (deviation {deviation:e})")]
    NotInGroup { group: &'static str, deviation: f64 },

    #[error("invalid tolerance {name} = {value:e}; expected 0 < value < 1")]
    InvalidTolerance { name: &'static str, value: f64 },

    #[error("frame vectors are nearly dependent (Gram determinant {gram_det:e})")]
    DegenerateFrame { gram_det: f64 },

    #[error("invalid {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("cannot parse {token:?}: {reason}")]
    Parse { token: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
