//! Gamma, Hurwitz and Dirichlet L-functions, Dedekind zeta functions and
//! their Laurent data.

mod contour;
mod dedekind;
mod gamma;
mod hurwitz;
mod lfun;

pub use contour::{laurent_coefficient, laurent_coefficients};
pub use dedekind::{
    check_functional_equation, completed_zeta, dedekind_zeta, dedekind_zeta_deriv,
    lambda_completed, zeta_constants, EvalOptions, ZetaConstants,
};
pub use gamma::{cos_pi_real, gamma, ln_gamma, rgamma, sin_pi, sin_pi_real, EULER_GAMMA};
pub use hurwitz::hurwitz_zeta;
pub use lfun::{dirichlet_l, riemann_zeta};
