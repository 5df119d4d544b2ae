//! Accuracy certificate attached to a recovered primal pair.

use serde::Serialize;

/// What a solver run proves about the recovered pair `(x_rho, x_mu)`:
/// the primal objective `f(x_rho) + g(x_mu)`, the exact dual objective
/// `-theta(p)` when conjugates are available, and the feasibility gap
/// `||A x_rho - x_mu||` (recomputed from the returned pair, never cached).
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub primal_value: f64,
    pub dual_value: Option<f64>,
    pub feasibility_gap: f64,
    /// Norm of the gradient of the active smoothed objective at the final
    /// iterate (kappa-augmented for the double scheme).
    pub grad_norm_smoothed: f64,
    pub iterations: usize,
}
