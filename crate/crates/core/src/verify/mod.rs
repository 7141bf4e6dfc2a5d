//! Identity registry: each instance becomes a report comparing two
//! independently computed sides.

mod checks;
mod id;
mod rational;
mod suite;

use num_complex::Complex64;

use crate::error::Result;
use crate::report::CheckReport;
use crate::zetalab::EvalOptions;

pub use id::{IdentityId, DIRICHLET_TERMS, IDENTITY_NAMES};
pub use rational::rational_reconstruct;
pub use suite::{
    default_cases, lambda_symmetry_points, run_suite, run_suite_with, steen_grid, SuiteReport,
    SuiteSummary,
};

/// Checks one identity instance with default evaluation options.
pub fn verify_identity(id: &IdentityId, tol: f64) -> Result<CheckReport> {
    verify_identity_with(id, tol, &EvalOptions::default())
}

pub fn verify_identity_with(id: &IdentityId, tol: f64, opts: &EvalOptions) -> Result<CheckReport> {
    let sides = checks::evaluate(id, opts)?;
    let mut notes = sides.notes;
    if id.is_diagnostic() {
        if !notes.is_empty() {
            notes.insert_str(0, "; ");
        }
        notes.insert_str(0, "diagnostic");
    }
    let tol = tol.max(sides.tol_floor);
    Ok(CheckReport::new(
        id.name(),
        id.params(),
        sides.lhs,
        sides.rhs,
        tol,
        notes,
    ))
}

/// A report for a check whose evaluation itself failed.
pub(crate) fn error_report(id: &IdentityId, tol: f64, err: &crate::Error) -> CheckReport {
    let zero = Complex64::new(0.0, 0.0);
    let mut r = CheckReport::new(
        id.name(),
        id.params(),
        zero,
        zero,
        tol,
        format!("error: {err}"),
    );
    r.abs_err = f64::MAX;
    r.rel_err = f64::MAX;
    r.pass = false;
    r
}
