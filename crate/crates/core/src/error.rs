use thiserror::Error;

/// Errors surfaced by parameter selection, smoothing evaluation and the
/// solvers. Image I/O has its own error type in [`crate::imaging`].
#[derive(Debug, Error)]
pub enum Error {
    #[error(
        "domain radius D_{which} is zero (singleton domain): the quadratic smoothing is \
         degenerate; declare the oracle strongly convex instead and the selection will use \
         that modulus as the smoothing parameter"
    )]
    DegenerateDomain { which: &'static str },

    #[error("epsilon must be positive, got {0}")]
    NonPositiveEpsilon(f64),

    #[error("dual norm bound R must be positive, got {0}")]
    NonPositiveRadius(f64),

    #[error("this quantity is defined only for the doubly smoothed objective (kappa > 0)")]
    KappaZero,

    #[error("max_iters must be at least 1")]
    ZeroIterations,

    #[error("{quantity} is not finite; the oracle or operator is broken")]
    NonFinite { quantity: &'static str },

    #[error("the {which} oracle does not provide conjugate evaluation")]
    UnsupportedConjugate { which: &'static str },

    #[error("dimension mismatch for {what}: expected {expected}, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("grid search supports dimension <= {max}, got {got}")]
    GridDimensionTooLarge { max: usize, got: usize },

    #[error("grid search needs a bounded box domain; probed bound {0} is too large")]
    GridUnboundedDomain(f64),

    #[error("reference run did not converge: last gradient norm {grad_norm:e}")]
    NoConvergence { grad_norm: f64 },

    #[error("epsilon sequence must be strictly decreasing and positive")]
    InvalidEpsilonSequence,

    #[error("kernel size must be odd and positive, got {0}")]
    InvalidKernelSize(usize),

    #[error("kernel sigma must be positive, got {0}")]
    InvalidSigma(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
