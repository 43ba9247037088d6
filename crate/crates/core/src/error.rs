use thiserror::Error;

/// Errors raised by layout construction, operator algebra and the physics routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("duplicate mode in mode set: {0}")]
    DuplicateMode(String),
    #[error("mode set is empty")]
    EmptyModeSet,
    #[error("invalid mode: {0}")]
    InvalidMode(String),
    #[error("Fock truncation must satisfy nmax >= 1, got {0}")]
    TruncationTooSmall(usize),
    #[error("basis index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("layout has no atom factor")]
    NoAtomFactor,
    #[error("layout mismatch: {0}")]
    LayoutMismatch(String),
    #[error("all amplitudes are zero")]
    ZeroState,
    #[error("operator acts on abstract modes without a wavevector: {0}")]
    AbstractMode(String),
    #[error("operator is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),
    #[error("invalid physical parameter: {0}")]
    InvalidParameter(String),
    #[error("coherent amplitude |alpha| = {alpha} needs nmax >= {required} (tail mass {tail:e} at nmax = {nmax})")]
    CoherentTruncation {
        alpha: f64,
        nmax: usize,
        required: usize,
        tail: f64,
    },
    #[error("matrix exponential overflow: {0}")]
    ExpOverflow(String),
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
    #[error("initial state outside the excited-atom sector: {0}")]
    NotExcited(String),
    #[error("standard layout exceeds oracle bounds: {0}")]
    OracleBounds(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
