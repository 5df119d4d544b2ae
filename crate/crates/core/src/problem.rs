//! Problem abstraction: proximal oracles, linear operators and the problem
//! triple (f, g, A).

use std::sync::Arc;

use crate::error::{Error, Result};

/// A proper, convex, lower-semicontinuous function with bounded effective
/// domain, exposed through the evaluations the smoothing machinery needs.
///
/// Implementations must be exact: `prox(c, t)` is the unique minimizer of
/// `f(y) + ||c - y||^2 / (2t)`, not an approximation. Prox outputs always lie
/// in the effective domain, the prox mapping is nonexpansive, and
/// `||x||^2 / 2 <= domain_radius()` for every point of the domain.
pub trait ProxOracle: Send + Sync {
    fn dimension(&self) -> usize;

    /// Extended-real function value; `f64::INFINITY` outside the domain.
    fn value(&self, x: &[f64]) -> f64;

    /// `argmin_y f(y) + ||c - y||^2 / (2t)` for `t > 0`.
    fn prox(&self, c: &[f64], t: f64) -> Vec<f64>;

    /// Fenchel conjugate `sup_x <q,x> - f(x)`, or `None` when the oracle does
    /// not support it (θ evaluation is an optional capability).
    fn conjugate(&self, q: &[f64]) -> Option<f64>;

    /// `D = sup { ||x||^2 / 2 : x in dom f }`.
    fn domain_radius(&self) -> f64;

    /// Strong-convexity modulus; 0 means merely convex. A positive modulus
    /// lets parameter selection reuse it as the smoothing parameter for this
    /// side instead of spending accuracy budget on it.
    fn strong_convexity(&self) -> f64 {
        0.0
    }
}

/// A linear operator together with its adjoint and an upper bound on the
/// squared operator norm.
pub trait LinearOperator: Send + Sync {
    fn input_dim(&self) -> usize;
    fn output_dim(&self) -> usize;
    fn apply(&self, x: &[f64]) -> Vec<f64>;
    fn adjoint(&self, y: &[f64]) -> Vec<f64>;
    /// Upper bound on `||A||^2`. Must satisfy `||Ax||^2 <= bound * ||x||^2`.
    fn norm_sq_bound(&self) -> f64;
}

/// The problem triple for `inf_x f(x) + g(Ax)` with `f: R^n -> R`,
/// `g: R^m -> R` and `A: R^n -> R^m`.
///
/// `A(dom f) ∩ dom g != ∅` is assumed, not checked; when it fails the solvers
/// surface it as a feasibility gap that stalls away from zero.
#[derive(Clone)]
pub struct ProblemSpec {
    pub f: Arc<dyn ProxOracle>,
    pub g: Arc<dyn ProxOracle>,
    pub a: Arc<dyn LinearOperator>,
}

impl ProblemSpec {
    pub fn new(
        f: Arc<dyn ProxOracle>,
        g: Arc<dyn ProxOracle>,
        a: Arc<dyn LinearOperator>,
    ) -> Result<Self> {
        if f.dimension() != a.input_dim() {
            return Err(Error::DimensionMismatch {
                what: "f vs operator input",
                expected: a.input_dim(),
                got: f.dimension(),
            });
        }
        if g.dimension() != a.output_dim() {
            return Err(Error::DimensionMismatch {
                what: "g vs operator output",
                expected: a.output_dim(),
                got: g.dimension(),
            });
        }
        Ok(Self { f, g, a })
    }

    /// Primal dimension n.
    pub fn n(&self) -> usize {
        self.f.dimension()
    }

    /// Dual dimension m.
    pub fn m(&self) -> usize {
        self.g.dimension()
    }
}

/// Row-major dense matrix operator, mostly for tests and synthetic instances.
#[derive(Debug, Clone)]
pub struct DenseOperator {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
    norm_sq_bound: f64,
}

impl DenseOperator {
    /// The norm bound defaults to `min(||A||_F^2, ||A||_1 * ||A||_inf)`,
    /// both of which dominate `||A||_2^2`.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        let frob_sq: f64 = data.iter().map(|v| v * v).sum();
        let mut col_abs_sums = vec![0.0; cols];
        let mut row_abs_max: f64 = 0.0;
        for r in 0..rows {
            let mut row_sum = 0.0;
            for c in 0..cols {
                let v = data[r * cols + c].abs();
                row_sum += v;
                col_abs_sums[c] += v;
            }
            row_abs_max = row_abs_max.max(row_sum);
        }
        let col_abs_max = col_abs_sums.iter().cloned().fold(0.0, f64::max);
        let norm_sq_bound = frob_sq.min(col_abs_max * row_abs_max).max(f64::MIN_POSITIVE);
        Self {
            rows,
            cols,
            data,
            norm_sq_bound,
        }
    }

    pub fn with_norm_sq_bound(mut self, bound: f64) -> Self {
        self.norm_sq_bound = bound;
        self
    }

    pub fn entry(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }
}

impl LinearOperator for DenseOperator {
    fn input_dim(&self) -> usize {
        self.cols
    }

    fn output_dim(&self) -> usize {
        self.rows
    }

    fn apply(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols, "operator input length");
        (0..self.rows)
            .map(|r| {
                let row = &self.data[r * self.cols..(r + 1) * self.cols];
                row.iter().zip(x).map(|(a, b)| a * b).sum()
            })
            .collect()
    }

    fn adjoint(&self, y: &[f64]) -> Vec<f64> {
        assert_eq!(y.len(), self.rows, "operator adjoint input length");
        let mut out = vec![0.0; self.cols];
        for r in 0..self.rows {
            let yr = y[r];
            let row = &self.data[r * self.cols..(r + 1) * self.cols];
            for (o, a) in out.iter_mut().zip(row) {
                *o += a * yr;
            }
        }
        out
    }

    fn norm_sq_bound(&self) -> f64 {
        self.norm_sq_bound
    }
}

#[derive(Debug, Clone, Copy)]
pub struct IdentityOperator {
    dim: usize,
}

impl IdentityOperator {
    pub fn new(dim: usize) -> Self {
        Self { dim }
    }
}

impl LinearOperator for IdentityOperator {
    fn input_dim(&self) -> usize {
        self.dim
    }

    fn output_dim(&self) -> usize {
        self.dim
    }

    fn apply(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.dim);
        x.to_vec()
    }

    fn adjoint(&self, y: &[f64]) -> Vec<f64> {
        assert_eq!(y.len(), self.dim);
        y.to_vec()
    }

    fn norm_sq_bound(&self) -> f64 {
        1.0
    }
}
