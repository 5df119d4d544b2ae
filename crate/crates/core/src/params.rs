//! Smoothing-parameter selection and the a-priori iteration bounds.
//!
//! The double selection splits the accuracy budget into four equal parts
//! (`rho*D_f = mu*D_g = kappa*R^2/2 = eps/4`, the fourth part being the
//! geometrically decaying term); the single selection splits it into three.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::problem::ProblemSpec;

/// The full regularization configuration of one solver run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SmoothingParams {
    /// Target accuracy the parameters were selected for.
    pub epsilon: f64,
    /// First-smoothing parameter on the f side.
    pub rho: f64,
    /// First-smoothing parameter on the g side.
    pub mu: f64,
    /// Second-smoothing (strong convexity) parameter; 0 for single smoothing.
    pub kappa: f64,
    /// Known bound on the norm of a dual optimal solution. `None` for the
    /// single selection, which does not involve it.
    pub radius: Option<f64>,
    /// Upper bound on `||A||^2` the Lipschitz constant was built from.
    pub norm_sq_bound: f64,
    /// Gradient Lipschitz constant of the active smoothed objective.
    pub lipschitz: f64,
}

impl SmoothingParams {
    /// Assemble parameters directly, computing `L = ||A||^2/rho + 1/mu + kappa`.
    /// Used by tests and desk-scale experiments that pick rho, mu by hand.
    pub fn manual(epsilon: f64, rho: f64, mu: f64, kappa: f64, norm_sq_bound: f64) -> Self {
        Self {
            epsilon,
            rho,
            mu,
            kappa,
            radius: None,
            norm_sq_bound,
            lipschitz: norm_sq_bound / rho + 1.0 / mu + kappa,
        }
    }

    pub fn with_radius(mut self, radius: f64) -> Self {
        self.radius = Some(radius);
        self
    }

    /// Momentum coefficient `(sqrt(L) - sqrt(kappa)) / (sqrt(L) + sqrt(kappa))`
    /// of the strongly convex fast gradient scheme.
    pub fn momentum(&self) -> f64 {
        momentum_coefficient(self.lipschitz, self.kappa)
    }
}

pub fn momentum_coefficient(lipschitz: f64, kappa: f64) -> f64 {
    let sl = lipschitz.sqrt();
    let sk = kappa.sqrt();
    (sl - sk) / (sl + sk)
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if !(epsilon > 0.0) {
        return Err(Error::NonPositiveEpsilon(epsilon));
    }
    Ok(())
}

fn check_domain_radius(d: f64, which: &'static str) -> Result<()> {
    if !(d > 0.0) {
        return Err(Error::DegenerateDomain { which });
    }
    Ok(())
}

/// Parameters for the doubly smoothed objective:
/// `rho = eps/(4 D_f)`, `mu = eps/(4 D_g)`, `kappa = eps/(2 R^2)`,
/// `L = ||A||^2/rho + 1/mu + kappa`.
pub fn select_params_double(
    epsilon: f64,
    d_f: f64,
    d_g: f64,
    radius: f64,
    norm_sq_bound: f64,
) -> Result<SmoothingParams> {
    check_epsilon(epsilon)?;
    check_domain_radius(d_f, "f")?;
    check_domain_radius(d_g, "g")?;
    if !(radius > 0.0) {
        return Err(Error::NonPositiveRadius(radius));
    }
    let rho = epsilon / (4.0 * d_f);
    let mu = epsilon / (4.0 * d_g);
    let kappa = epsilon / (2.0 * radius * radius);
    Ok(SmoothingParams {
        epsilon,
        rho,
        mu,
        kappa,
        radius: Some(radius),
        norm_sq_bound,
        lipschitz: norm_sq_bound / rho + 1.0 / mu + kappa,
    })
}

/// Parameters for the singly smoothed objective:
/// `rho = eps/(3 D_f)`, `mu = eps/(3 D_g)`, `kappa = 0`,
/// `L = ||A||^2/rho + 1/mu`.
pub fn select_params_single(
    epsilon: f64,
    d_f: f64,
    d_g: f64,
    norm_sq_bound: f64,
) -> Result<SmoothingParams> {
    check_epsilon(epsilon)?;
    check_domain_radius(d_f, "f")?;
    check_domain_radius(d_g, "g")?;
    let rho = epsilon / (3.0 * d_f);
    let mu = epsilon / (3.0 * d_g);
    Ok(SmoothingParams {
        epsilon,
        rho,
        mu,
        kappa: 0.0,
        radius: None,
        norm_sq_bound,
        lipschitz: norm_sq_bound / rho + 1.0 / mu,
    })
}

/// Problem-aware double selection. A side whose oracle declares a positive
/// strong-convexity modulus keeps that modulus as its smoothing parameter and
/// consumes none of the accuracy budget (the conjugate is already smooth, so
/// no quadratic needs to be traded for accuracy there).
pub fn select_params_double_for_problem(
    problem: &ProblemSpec,
    epsilon: f64,
    radius: f64,
) -> Result<SmoothingParams> {
    check_epsilon(epsilon)?;
    if !(radius > 0.0) {
        return Err(Error::NonPositiveRadius(radius));
    }
    let rho = side_parameter(
        problem.f.strong_convexity(),
        problem.f.domain_radius(),
        epsilon,
        4.0,
        "f",
    )?;
    let mu = side_parameter(
        problem.g.strong_convexity(),
        problem.g.domain_radius(),
        epsilon,
        4.0,
        "g",
    )?;
    let kappa = epsilon / (2.0 * radius * radius);
    let norm_sq_bound = problem.a.norm_sq_bound();
    Ok(SmoothingParams {
        epsilon,
        rho,
        mu,
        kappa,
        radius: Some(radius),
        norm_sq_bound,
        lipschitz: norm_sq_bound / rho + 1.0 / mu + kappa,
    })
}

/// Problem-aware single selection with the same strong-convexity bypass.
pub fn select_params_single_for_problem(
    problem: &ProblemSpec,
    epsilon: f64,
) -> Result<SmoothingParams> {
    check_epsilon(epsilon)?;
    let rho = side_parameter(
        problem.f.strong_convexity(),
        problem.f.domain_radius(),
        epsilon,
        3.0,
        "f",
    )?;
    let mu = side_parameter(
        problem.g.strong_convexity(),
        problem.g.domain_radius(),
        epsilon,
        3.0,
        "g",
    )?;
    let norm_sq_bound = problem.a.norm_sq_bound();
    Ok(SmoothingParams {
        epsilon,
        rho,
        mu,
        kappa: 0.0,
        radius: None,
        norm_sq_bound,
        lipschitz: norm_sq_bound / rho + 1.0 / mu,
    })
}

fn side_parameter(
    sigma: f64,
    d: f64,
    epsilon: f64,
    split: f64,
    which: &'static str,
) -> Result<f64> {
    if sigma > 0.0 {
        Ok(sigma)
    } else {
        check_domain_radius(d, which)?;
        Ok(epsilon / (split * d))
    }
}

/// Iterations sufficient for `theta(p_k) + v(D) <= eps` given an upper bound
/// `delta0` on `theta(0) - theta(p*)`:
/// `ceil(2 sqrt(L/kappa) ln(25 (delta0 + eps/2) / (2 eps)))`, clamped at 0.
pub fn dual_iteration_bound(epsilon: f64, params: &SmoothingParams, delta0: f64) -> Result<usize> {
    check_epsilon(epsilon)?;
    if !(params.kappa > 0.0) {
        return Err(Error::KappaZero);
    }
    let arg = 25.0 * (delta0 + epsilon / 2.0) / (2.0 * epsilon);
    if !(arg > 1.0) {
        return Ok(0);
    }
    let k = 2.0 * (params.lipschitz / params.kappa).sqrt() * arg.ln();
    Ok(k.ceil() as usize)
}

/// Smallest k with
/// `2 sqrt(L (delta0 + eps/2)) e^{-(k/2) sqrt(kappa/L)} <= (2 - sqrt(3)) eps / R`,
/// i.e. `ceil(2 sqrt(L/kappa) ln(2 R sqrt(L (delta0 + eps/2)) / ((2-sqrt(3)) eps)))`,
/// clamped at 0. Makes the unaugmented gradient norm reach `2 eps / R`.
pub fn gradient_iteration_bound(
    epsilon: f64,
    params: &SmoothingParams,
    delta0: f64,
    radius: f64,
) -> Result<usize> {
    check_epsilon(epsilon)?;
    if !(params.kappa > 0.0) {
        return Err(Error::KappaZero);
    }
    if !(radius > 0.0) {
        return Err(Error::NonPositiveRadius(radius));
    }
    let radicand = params.lipschitz * (delta0 + epsilon / 2.0);
    if !(radicand > 0.0) {
        return Ok(0);
    }
    let arg = 2.0 * radius * radicand.sqrt() / ((2.0 - 3.0f64.sqrt()) * epsilon);
    if !(arg > 1.0) {
        return Ok(0);
    }
    let k = 2.0 * (params.lipschitz / params.kappa).sqrt() * arg.ln();
    Ok(k.ceil() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // The section-5 deblurring configuration: n = 65536 pixels in [0, 0.1].
    fn paper_inputs() -> (f64, f64, f64, f64, f64) {
        let d = 65536.0 * 0.1 * 0.1 / 2.0;
        (0.01, d, d, 0.05, 1.0)
    }

    #[test]
    fn double_selection_reproduces_deblur_constants() {
        let (eps, d_f, d_g, r, a2) = paper_inputs();
        let p = select_params_double(eps, d_f, d_g, r, a2).unwrap();
        assert_relative_eq!(p.rho, 7.62939453125e-6, max_relative = 1e-12);
        assert_relative_eq!(p.mu, 7.62939453125e-6, max_relative = 1e-12);
        assert_relative_eq!(p.kappa, 2.0, max_relative = 1e-12);
        assert_relative_eq!(p.lipschitz, 262146.0, max_relative = 1e-12);
        assert_relative_eq!(p.lipschitz / p.kappa, 131073.0, max_relative = 1e-12);
        // L/kappa = 1 + (8 R^2 / eps^2) (||A||^2 D_f + D_g)
        let closed_form = 1.0 + 8.0 * r * r / (eps * eps) * (a2 * d_f + d_g);
        assert_relative_eq!(p.lipschitz / p.kappa, closed_form, max_relative = 1e-12);
    }

    #[test]
    fn double_selection_unit_example() {
        let p = select_params_double(1.0, 0.5, 0.5, 1.0, 1.0).unwrap();
        assert_relative_eq!(p.rho, 0.5, max_relative = 1e-15);
        assert_relative_eq!(p.mu, 0.5, max_relative = 1e-15);
        assert_relative_eq!(p.kappa, 0.5, max_relative = 1e-15);
        assert_relative_eq!(p.lipschitz, 4.5, max_relative = 1e-15);
    }

    #[test]
    fn double_selection_budget_is_four_equal_terms() {
        let (eps, d_f, d_g, r, a2) = paper_inputs();
        let p = select_params_double(eps, d_f, d_g, r, a2).unwrap();
        assert_relative_eq!(p.rho * d_f, eps / 4.0, max_relative = 1e-14);
        assert_relative_eq!(p.mu * d_g, eps / 4.0, max_relative = 1e-14);
        assert_relative_eq!(p.kappa * r * r / 2.0, eps / 4.0, max_relative = 1e-14);
    }

    #[test]
    fn single_selection_examples() {
        let p = select_params_single(0.3, 1.0, 1.0, 1.0).unwrap();
        assert_relative_eq!(p.rho, 0.1, max_relative = 1e-14);
        assert_relative_eq!(p.mu, 0.1, max_relative = 1e-14);
        assert_relative_eq!(p.lipschitz, 20.0, max_relative = 1e-14);
        assert_eq!(p.kappa, 0.0);

        let p = select_params_single(0.01, 327.68, 327.68, 1.0).unwrap();
        assert_relative_eq!(p.rho, 1.0172526e-5, max_relative = 1e-7);
        assert_eq!(p.kappa, 0.0);
        assert!(p.radius.is_none());
    }

    #[test]
    fn degenerate_domains_are_rejected() {
        assert!(matches!(
            select_params_double(0.01, 0.0, 1.0, 1.0, 1.0),
            Err(Error::DegenerateDomain { which: "f" })
        ));
        assert!(matches!(
            select_params_single(0.01, 1.0, 0.0, 1.0),
            Err(Error::DegenerateDomain { which: "g" })
        ));
        assert!(matches!(
            select_params_double(-1.0, 1.0, 1.0, 1.0, 1.0),
            Err(Error::NonPositiveEpsilon(_))
        ));
    }

    #[test]
    fn dual_bound_frozen_value() {
        // Independently evaluated with 50-digit arithmetic:
        // 2 sqrt(131073) ln(25 * 1.005 / 0.02) = 5166.9533... -> 5167.
        let (eps, d_f, d_g, r, a2) = paper_inputs();
        let p = select_params_double(eps, d_f, d_g, r, a2).unwrap();
        assert_eq!(dual_iteration_bound(eps, &p, 1.0).unwrap(), 5167);
    }

    #[test]
    fn dual_bound_clamps_and_rejects() {
        let p = SmoothingParams::manual(0.01, 0.1, 0.1, 2.0, 1.0);
        // 25 (delta0 + eps/2) <= 2 eps makes the log nonpositive.
        let delta0 = 2.0 * 0.01 / 25.0 - 0.01 / 2.0 - 1e-6;
        assert_eq!(dual_iteration_bound(0.01, &p, delta0).unwrap(), 0);

        let single = SmoothingParams::manual(0.01, 0.1, 0.1, 0.0, 1.0);
        assert!(matches!(
            dual_iteration_bound(0.01, &single, 1.0),
            Err(Error::KappaZero)
        ));
    }

    #[test]
    fn gradient_bound_frozen_value() {
        // Independently evaluated with 50-digit arithmetic:
        // 2 sqrt(131073) ln(0.1 sqrt(262146 * 1.005) / ((2 - sqrt(3)) 0.01))
        // = 7139.6942... -> 7140.
        let (eps, d_f, d_g, r, a2) = paper_inputs();
        let p = select_params_double(eps, d_f, d_g, r, a2).unwrap();
        assert_eq!(gradient_iteration_bound(eps, &p, 1.0, r).unwrap(), 7140);
    }

    #[test]
    fn gradient_bound_vanishing_radicand() {
        let (eps, d_f, d_g, r, a2) = paper_inputs();
        let p = select_params_double(eps, d_f, d_g, r, a2).unwrap();
        assert_eq!(
            gradient_iteration_bound(eps, &p, -eps / 2.0, r).unwrap(),
            0
        );
        assert!(matches!(
            gradient_iteration_bound(eps, &SmoothingParams::manual(eps, 0.1, 0.1, 0.0, 1.0), 1.0, r),
            Err(Error::KappaZero)
        ));
    }

    #[test]
    fn bounds_monotone_in_epsilon_and_delta0() {
        let mk = |eps: f64| select_params_double(eps, 10.0, 10.0, 1.0, 1.0).unwrap();
        let epsilons = [0.01, 0.02, 0.05, 0.1, 0.5];
        for pair in epsilons.windows(2) {
            let (small, large) = (pair[0], pair[1]);
            assert!(
                dual_iteration_bound(small, &mk(small), 1.0).unwrap()
                    >= dual_iteration_bound(large, &mk(large), 1.0).unwrap()
            );
            assert!(
                gradient_iteration_bound(small, &mk(small), 1.0, 1.0).unwrap()
                    >= gradient_iteration_bound(large, &mk(large), 1.0, 1.0).unwrap()
            );
        }
        let p = mk(0.01);
        for pair in [0.1, 0.5, 1.0, 5.0].windows(2) {
            assert!(
                dual_iteration_bound(0.01, &p, pair[0]).unwrap()
                    <= dual_iteration_bound(0.01, &p, pair[1]).unwrap()
            );
            assert!(
                gradient_iteration_bound(0.01, &p, pair[0], 1.0).unwrap()
                    <= gradient_iteration_bound(0.01, &p, pair[1], 1.0).unwrap()
            );
        }
    }

    #[test]
    fn momentum_coefficient_deblur_value() {
        // (sqrt(262146) - sqrt(2)) / (sqrt(262146) + sqrt(2)), 50-digit value
        // 0.994490965987658536...
        let m = momentum_coefficient(262146.0, 2.0);
        assert_relative_eq!(m, 0.9944909659876585, max_relative = 1e-12);
    }
}
