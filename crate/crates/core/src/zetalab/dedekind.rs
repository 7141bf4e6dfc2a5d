use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use super::contour::laurent_coefficients;
use super::gamma::gamma;
use super::lfun::{dirichlet_l, riemann_zeta};
use crate::error::{Error, Result};
use crate::fieldarith::Field;
use crate::report::CheckReport;

/// Quadrature settings for derivative circles and tolerance targets for series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    pub circle_radius: f64,
    pub circle_nodes: usize,
    pub target_tol: f64,
    pub max_terms: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            circle_radius: 0.5,
            circle_nodes: 64,
            target_tol: 1e-12,
            max_terms: 1_000_000,
        }
    }
}

/// Laurent data of `zeta_F` at `s = 1` and `s = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaConstants {
    /// Residue at `s = 1`.
    pub h_f: f64,
    /// Constant term at `s = 1`.
    pub gamma_f: f64,
    /// Leading coefficient at `s = 0`, of `s^r`.
    pub c_f: f64,
    /// Coefficient of `s^{r+1}` at `s = 0`.
    pub a1: f64,
    /// `sqrt(D) / (2^{r1} (2 pi)^{r2})`.
    pub a: f64,
}

pub fn dedekind_zeta(field: &Field, s: Complex64) -> Result<Complex64> {
    let mut out = riemann_zeta(s)?;
    for chi in &field.factors {
        out *= dirichlet_l(chi, s)?;
    }
    Ok(out)
}

/// `zeta_F^{(order)}(s0)` from the Taylor coefficient on a circle about `s0`.
pub fn dedekind_zeta_deriv(
    field: &Field,
    s0: Complex64,
    order: u32,
    opts: &EvalOptions,
) -> Result<Complex64> {
    if (s0 - 1.0).norm() <= opts.circle_radius {
        return Err(Error::Domain(format!(
            "derivative circle of radius {} about {s0} reaches the pole at 1",
            opts.circle_radius
        )));
    }
    let n = order as i32;
    let a = laurent_coefficients(
        |s| dedekind_zeta(field, s),
        s0,
        opts.circle_radius,
        opts.circle_nodes,
        n..=n,
    )?[0];
    let fact: f64 = (1..=order).map(f64::from).product();
    Ok(a * fact)
}

pub fn zeta_constants(field: &Field, opts: &EvalOptions) -> Result<ZetaConstants> {
    let one = Complex64::new(1.0, 0.0);
    let h_f = field
        .factors
        .iter()
        .map(|chi| dirichlet_l(chi, one))
        .product::<Result<Complex64>>()?
        .re;
    let gamma_f = laurent_coefficients(
        |s| Ok((s - 1.0) * dedekind_zeta(field, s)?),
        one,
        opts.circle_radius,
        opts.circle_nodes,
        1..=1,
    )?[0]
        .re;
    let r = field.unit_rank as i32;
    let at_zero = laurent_coefficients(
        |s| dedekind_zeta(field, s),
        Complex64::new(0.0, 0.0),
        opts.circle_radius,
        opts.circle_nodes,
        r..=r + 1,
    )?;
    let a = (field.abs_disc as f64).sqrt()
        / (2f64.powi(field.r1 as i32) * (2.0 * PI).powi(field.r2 as i32));
    Ok(ZetaConstants {
        h_f,
        gamma_f,
        c_f: at_zero[0].re,
        a1: at_zero[1].re,
        a,
    })
}

fn is_nonpositive_integer(s: Complex64) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round()
}

/// `Gamma(s)^d zeta_F(s) zeta_F(s + 2k + 1) ((2 pi)^d / D)^{-s}`.
pub fn lambda_completed(field: &Field, k: i32, s: Complex64) -> Result<Complex64> {
    let shifted = s + (2 * k + 1) as f64;
    if is_nonpositive_integer(s)
        || s == Complex64::new(1.0, 0.0)
        || shifted == Complex64::new(1.0, 0.0)
    {
        return Err(Error::Pole(format!("{s}")));
    }
    let d = field.degree as i32;
    let base = (2.0 * PI).powi(d) / field.abs_disc as f64;
    Ok(gamma(s)?.powi(d)
        * dedekind_zeta(field, s)?
        * dedekind_zeta(field, shifted)?
        * (-s * base.ln()).exp())
}

/// `(D / (pi^d 4^{r2}))^{s/2} Gamma(s/2)^{r1} Gamma(s)^{r2} zeta_F(s)`, invariant under `s -> 1 - s`.
pub fn completed_zeta(field: &Field, s: Complex64) -> Result<Complex64> {
    let base = field.abs_disc as f64 / (PI.powi(field.degree as i32) * 4f64.powi(field.r2 as i32));
    Ok((s / 2.0 * base.ln()).exp()
        * gamma(s / 2.0)?.powi(field.r1 as i32)
        * gamma(s)?.powi(field.r2 as i32)
        * dedekind_zeta(field, s)?)
}

pub fn check_functional_equation(field: &Field, s: Complex64) -> Result<CheckReport> {
    let lhs = completed_zeta(field, s)?;
    let rhs = completed_zeta(field, 1.0 - s)?;
    let params = BTreeMap::from([
        ("field".to_string(), field.label()),
        ("s".to_string(), crate::format_complex(s)),
    ]);
    Ok(CheckReport::new(
        "functional_equation",
        params,
        lhs,
        rhs,
        1e-9,
        "",
    ))
}
