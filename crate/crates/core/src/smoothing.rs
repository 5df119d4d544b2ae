//! The smoothed dual objectives and their gradients.
//!
//! With `theta(p) = f*(A*p) + g*(-p)` the first smoothing subtracts
//! `rho/2 ||x||^2` resp. `mu/2 ||x||^2` inside the two suprema, which makes
//! both maximizers unique proximal points:
//!
//! ```text
//!     x_rho = prox_f(A*p / rho, 1/rho),   x_mu = prox_g(-p / mu, 1/mu),
//!     grad theta_{rho,mu}(p) = A x_rho - x_mu.
//! ```
//!
//! The second smoothing adds `kappa/2 ||p||^2` on top, shifting value and
//! gradient by `kappa/2 ||p||^2` and `kappa p`.

use crate::error::{Error, Result};
use crate::params::SmoothingParams;
use crate::problem::ProblemSpec;
use crate::vecmath::{all_finite, dot, norm_sq, scale};

/// One evaluation of a smoothed dual objective together with the proximal
/// points it was computed from.
///
/// Sign convention: the gradient of `p -> g*_mu(-p)` is `-x_mu` (the chain
/// rule through the minus sign is already folded in), so the full gradient is
/// `A x_rho - x_mu` plus `kappa p` for the doubly smoothed objective.
#[derive(Debug, Clone)]
pub struct SmoothedEval {
    pub value: f64,
    pub gradient: Vec<f64>,
    pub x_rho: Vec<f64>,
    pub x_mu: Vec<f64>,
}

/// Which smoothed objective a Lipschitz constant refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Smoothing {
    Single,
    Double,
}

/// Evaluate `theta_{rho,mu}` and its gradient at `p`.
pub fn eval_theta_rho_mu(
    problem: &ProblemSpec,
    params: &SmoothingParams,
    p: &[f64],
) -> Result<SmoothedEval> {
    let m = problem.m();
    if p.len() != m {
        return Err(Error::DimensionMismatch {
            what: "dual point",
            expected: m,
            got: p.len(),
        });
    }
    let rho = params.rho;
    let mu = params.mu;

    let aq = problem.a.adjoint(p);
    let x_rho = problem.f.prox(&scale(&aq, 1.0 / rho), 1.0 / rho);
    let x_mu = problem.g.prox(&scale(p, -1.0 / mu), 1.0 / mu);

    let ax = problem.a.apply(&x_rho);
    let f_part = dot(p, &ax) - problem.f.value(&x_rho) - rho / 2.0 * norm_sq(&x_rho);
    let g_part = -dot(p, &x_mu) - problem.g.value(&x_mu) - mu / 2.0 * norm_sq(&x_mu);
    let value = f_part + g_part;

    let gradient: Vec<f64> = ax.iter().zip(&x_mu).map(|(a, x)| a - x).collect();
    if !value.is_finite() || !all_finite(&gradient) {
        return Err(Error::NonFinite {
            quantity: "smoothed dual objective",
        });
    }
    Ok(SmoothedEval {
        value,
        gradient,
        x_rho,
        x_mu,
    })
}

/// Evaluate the doubly smoothed `theta_{rho,mu,kappa} = theta_{rho,mu} + kappa/2 ||p||^2`.
pub fn eval_theta_rho_mu_kappa(
    problem: &ProblemSpec,
    params: &SmoothingParams,
    p: &[f64],
) -> Result<SmoothedEval> {
    let mut eval = eval_theta_rho_mu(problem, params, p)?;
    let kappa = params.kappa;
    if kappa != 0.0 {
        eval.value += kappa / 2.0 * norm_sq(p);
        for (g, pi) in eval.gradient.iter_mut().zip(p) {
            *g += kappa * pi;
        }
    }
    Ok(eval)
}

/// Exact dual objective `theta(p) = f*(A*p) + g*(-p)`. Requires both oracles
/// to provide conjugate evaluation.
pub fn eval_theta_exact(problem: &ProblemSpec, p: &[f64]) -> Result<f64> {
    let aq = problem.a.adjoint(p);
    let fstar = problem
        .f
        .conjugate(&aq)
        .ok_or(Error::UnsupportedConjugate { which: "f" })?;
    let neg_p = scale(p, -1.0);
    let gstar = problem
        .g
        .conjugate(&neg_p)
        .ok_or(Error::UnsupportedConjugate { which: "g" })?;
    let value = fstar + gstar;
    if !value.is_finite() {
        return Err(Error::NonFinite {
            quantity: "exact dual objective",
        });
    }
    Ok(value)
}

/// `||A||^2/rho + 1/mu`, plus `kappa` for the doubly smoothed objective.
pub fn lipschitz_constant(params: &SmoothingParams, which: Smoothing) -> f64 {
    let base = params.norm_sq_bound / params.rho + 1.0 / params.mu;
    match which {
        Smoothing::Single => base,
        Smoothing::Double => base + params.kappa,
    }
}
