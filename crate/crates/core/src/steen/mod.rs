//! The Steen function `V(z | a_1..a_n)`: closed forms for one and two
//! parameters and direct Mellin-Barnes quadrature for the rest.

mod bessel;
mod mellin;

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

pub use bessel::bessel_k0;
pub(crate) use bessel::k0_unchecked;
pub use mellin::steen_mellin_barnes;

use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::zetalab::EvalOptions;
use crate::SeriesValue;

/// Shifts `(a_1, ..., a_n)` of the Gamma factors.
#[derive(Debug, Clone, PartialEq)]
pub struct SteenParams(Vec<f64>);

impl SteenParams {
    pub fn new(params: Vec<f64>) -> Result<Self> {
        if params.is_empty() {
            return Err(Error::InvalidParameter(
                "Steen function needs at least one parameter".into(),
            ));
        }
        if params.iter().any(|a| !a.is_finite() || *a < 0.0) {
            return Err(Error::InvalidParameter(
                "Steen parameters must be finite and >= 0".into(),
            ));
        }
        Ok(SteenParams(params))
    }

    /// `0_d`, the all-zero vector of length `d`.
    pub fn zeros(d: usize) -> Result<Self> {
        SteenParams::new(vec![0.0; d])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0.0)
    }
}

fn check_margin(z: Complex64, n: usize) -> Result<()> {
    let limit = n as f64 * PI / 2.0 - 0.1;
    if z == Complex64::new(0.0, 0.0) || z.arg().abs() >= limit {
        return Err(Error::Domain(format!(
            "Steen function with {n} parameters needs |arg z| < {limit:.4}, got z = {z}"
        )));
    }
    Ok(())
}

/// `V(z | p)` by closed form where one exists, else by Mellin-Barnes quadrature.
pub fn steen_v(z: Complex64, p: &SteenParams, opts: &EvalOptions) -> Result<SeriesValue> {
    check_margin(z, p.len())?;
    match p.as_slice() {
        [a] => Ok(SeriesValue::exact(z.powf(*a) * (-z).exp())),
        [a, b] if *a == 0.0 && *b == 0.0 => {
            Ok(SeriesValue::new(2.0 * k0_unchecked(2.0 * z.sqrt()), 0.0, 0))
        }
        params => steen_mellin_barnes(z, params, opts.target_tol),
    }
}

/// `V(z | 0_d)` along the generic quadrature path, even where a closed form exists.
pub fn steen_v_quadrature(z: Complex64, d: usize, opts: &EvalOptions) -> Result<SeriesValue> {
    check_margin(z, d)?;
    steen_mellin_barnes(z, SteenParams::zeros(d)?.as_slice(), opts.target_tol)
}

/// Compares the closed form of `V(z | 0_d)` with the quadrature path, `d` in {1, 2}.
pub fn steen_v_closed_vs_quadrature(z: Complex64, d: usize) -> Result<CheckReport> {
    if !(1..=2).contains(&d) {
        return Err(Error::InvalidParameter(format!(
            "closed forms exist for d = 1, 2; got {d}"
        )));
    }
    let opts = EvalOptions::default();
    let p = SteenParams::zeros(d)?;
    debug_assert!(p.is_zero());
    let closed = steen_v(z, &p, &opts)?;
    let quad = steen_v_quadrature(z, d, &opts)?;
    let params = BTreeMap::from([
        ("d".to_string(), d.to_string()),
        ("z".to_string(), crate::format_complex(z)),
    ]);
    Ok(CheckReport::new(
        "steen_closed",
        params,
        closed.value,
        quad.value,
        1e-8,
        "",
    ))
}
