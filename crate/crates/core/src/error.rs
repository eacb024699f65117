//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero vector is not a valid root")]
    ZeroRoot,

    #[error("roots {first} and {second} lie on one line but are not negatives of each other")]
    ProportionalRootViolation { first: String, second: String },

    #[error("reflection of {root} in {mirror} lands outside the root set (image {image})")]
    ReflectionClosureViolation {
        root: String,
        mirror: String,
        image: String,
    },

    #[error("group generation exceeded the configured bound of {bound} elements")]
    GroupTooLarge { bound: usize },

    #[error("multiplicity function is not constant on a reflection-group orbit: {detail}")]
    OrbitConstancyViolation { detail: String },

    #[error("invalid multiplicity assignment: {detail}")]
    InvalidMultiplicity { detail: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("zero vector rejected")]
    ZeroVector,

    #[error("deformation parameter a must be nonzero")]
    ZeroDeformation,

    #[error("polynomial division left a nonzero remainder: {remainder}")]
    InexactDivision { remainder: String },

    #[error("gamma function pole at {argument}")]
    GammaPole { argument: f64 },

    #[error("spectral parameter {lambda} violates the {branch} branch hypothesis")]
    BranchHypothesisViolated { lambda: String, branch: String },

    #[error("integrand does not decay: {detail}")]
    DivergentIntegrand { detail: String },

    #[error("semigroup parameter with real part {re_z} is unbounded on the {branch} branch")]
    UnboundedRegime { re_z: f64, branch: String },

    #[error("polynomial factor is not k-harmonic: {detail}")]
    NotKHarmonic { detail: String },

    #[error("sectors carry incompatible configurations: {detail}")]
    MixedConfiguration { detail: String },

    #[error("input is not in polar-decomposed form: {detail}")]
    InputNotPolarForm { detail: String },

    #[error("product leaves the symbolic radial class: {detail}")]
    IncompatibleProduct { detail: String },

    #[error("eigenvalue iteration failed to converge: {detail}")]
    NonConvergence { detail: String },

    #[error("invalid parameter: {detail}")]
    InvalidParameter { detail: String },

    #[error("cannot parse {input:?} as a rational number")]
    ParseRational { input: String },

    #[error("document error: {0}")]
    Json(#[from] serde_json::Error),
}
