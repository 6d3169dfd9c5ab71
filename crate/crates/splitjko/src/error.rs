use thiserror::Error;

/// Error variants shared by the solver modules.
#[derive(Debug, Error)]
pub enum Error {
    /// Two measures or fields live on different grids.
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    /// A density failed validation (negative cell, bad mass, non-finite).
    #[error("invalid density: {0}")]
    InvalidDensity(String),

    /// A quantity that must be finite came out NaN or infinite.
    #[error("non-finite value in {0}")]
    NonFinite(String),

    /// Discrete LP oracle only handles small supports.
    #[error("support too large for exact LP: {n} points (max {max})")]
    SupportTooLarge { n: usize, max: usize },

    /// A characteristic left the safety box during flow integration.
    #[error("CFL violation: characteristic from cell {cell} reached ({x:.6}, {y:.6}) outside the safety box")]
    CflViolation { cell: usize, x: f64, y: f64 },

    /// Inner solver did not reach its tolerance.
    #[error("solver diverged: {0}")]
    SolverDiverged(String),

    /// Discrete Poisson problem was incompatible beyond tolerance.
    #[error("Poisson solve failure: compatibility defect {defect:.3e} exceeds {tol:.3e}")]
    PoissonIncompatible { defect: f64, tol: f64 },

    /// A scalar argument was outside its admissible range.
    #[error("invalid argument {name}: {msg}")]
    InvalidArgument { name: &'static str, msg: String },

    /// Time step rejected by the semi-convexity guard.
    #[error("time step {h:.3e} exceeds h0 = {h0:.3e} (semi-convexity constant {c:.3e})")]
    TimeStepTooLarge { h: f64, h0: f64, c: f64 },

    /// Evaluation time outside the trajectory horizon.
    #[error("time {t} outside [0, {t_end}]")]
    TimeOutOfRange { t: f64, t_end: f64 },

    /// Scheme failure wrapped with the step index where it happened.
    #[error("step {step}: {source}")]
    AtStep {
        step: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// Snapshot or record parse failure.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn at_step(self, step: usize) -> Error {
        Error::AtStep {
            step,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
