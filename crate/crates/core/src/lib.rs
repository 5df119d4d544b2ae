//! Solver toolkit for convex problems of the form
//!
//! ```text
//!     minimize  f(x) + g(Ax)
//! ```
//!
//! where `f` and `g` are proper, convex, lower-semicontinuous functions with
//! bounded effective domains (exposed through proximal-point oracles) and `A`
//! is a linear operator. The Fenchel dual objective is smoothed in two steps —
//! a Moreau-type regularization of both conjugates followed by an added
//! quadratic — and the resulting strongly convex, Lipschitz-smooth function is
//! minimized with a fast gradient method. From any dual iterate an
//! approximately optimal and approximately feasible primal pair is recovered
//! together with an explicit certificate (primal value, dual value,
//! feasibility gap).
//!
//! The crate ships the closed-form oracles of an l1-regularized image
//! deblurring instance (box-constrained l1 data term, Gaussian blur operator
//! with reflective boundary) plus brute-force reference oracles used by the
//! test suite.

pub mod blur;
pub mod certificate;
pub mod error;
pub mod imaging;
pub mod l1box;
pub mod oracle;
pub mod params;
pub mod problem;
pub mod smoothing;
pub mod solvers;
pub mod vecmath;

pub use certificate::Certificate;
pub use error::{Error, Result};
pub use params::{
    dual_iteration_bound, gradient_iteration_bound, momentum_coefficient, select_params_double,
    select_params_double_for_problem, select_params_single, select_params_single_for_problem,
    SmoothingParams,
};
pub use problem::{DenseOperator, IdentityOperator, LinearOperator, ProblemSpec, ProxOracle};
pub use smoothing::{
    eval_theta_exact, eval_theta_rho_mu, eval_theta_rho_mu_kappa, lipschitz_constant, Smoothing,
    SmoothedEval,
};
pub use solvers::{
    epsilon_sequence_run, recover_primal, registry, scheme_by_name, solve_double_smoothing,
    solve_double_smoothing_observed, solve_single_smoothing, solve_single_smoothing_observed,
    stopping_rule_grad_norm, DualState, EpsilonRun, SchemeRun, SmoothingScheme, SolverTrace,
    StoppingRule, TraceRow,
};
