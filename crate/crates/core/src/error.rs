//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown element '{0}'")]
    UnknownElement(String),

    #[error("basis set '{basis}' has no entry for element '{element}'")]
    MissingBasisEntry { basis: String, element: String },

    #[error("failed to parse {what}: {detail}")]
    Parse { what: String, detail: String },

    #[error("invalid molecule: {0}")]
    InvalidMolecule(String),

    #[error("nuclei {0} and {1} coincide; nuclear repulsion is singular")]
    CoincidentNuclei(usize, usize),

    #[error("probe point {index} lies within {dist:.3e} bohr of nucleus {nucleus}")]
    PointOnNucleus {
        index: usize,
        nucleus: usize,
        dist: f64,
    },

    #[error("no cavity radius defined for element '{0}'")]
    MissingRadius(String),

    #[error("tessera centers {0} and {1} coincide")]
    CoincidentTesserae(usize, usize),

    #[error("IEF-PCM left-hand matrix is numerically singular (condition estimate {cond:.3e})")]
    SingularResponse { cond: f64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("SCF did not converge in {iterations} iterations (last energy {last_energy:.10} Ha)")]
    ScfNotConverged { iterations: usize, last_energy: f64 },

    #[error("requested {requested} frozen core orbitals but only {occupied} are occupied")]
    FrozenCoreTooLarge { requested: usize, occupied: usize },

    #[error("problem size exceeds supported limit: {0}")]
    SizeLimit(String),

    #[error(
        "solvated diagonalization fixed point did not settle in {iterations} iterations; \
         last free energies {trace_tail:?}"
    )]
    FixedPointNotConverged {
        iterations: usize,
        trace_tail: Vec<f64>,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("incompatible reports: {0}")]
    IncompatibleReports(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
