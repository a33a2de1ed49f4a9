//! Shared numerical kernels used across the workspace.
//!
//! Everything here is generic numerical plumbing with no model knowledge:
//! Gaussian quadrature node generation (Golub–Welsch), an adaptive
//! Gauss–Kronrod integrator, composite and graded Gauss–Legendre panels,
//! a Cash–Karp Runge–Kutta integrator used as an independent cross-check
//! route by downstream tests, power-law fitting on log–log axes, the
//! trigamma function, and a deterministic indexed parallel map.

pub mod fit;
pub mod gauss;
pub mod ode;
pub mod par;
pub mod quad;
pub mod special;

/// Errors surfaced by the numerical kernels.
#[derive(Debug, thiserror::Error)]
pub enum NumericsError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("quadrature did not converge: requested abs tol {requested:.3e}, best error estimate {achieved:.3e} after {panels} panels")]
    QuadratureNotConverged {
        requested: f64,
        achieved: f64,
        panels: usize,
    },
    #[error("ODE step size underflow at t = {t}")]
    StepUnderflow { t: f64 },
}
