//! Divisor series over a field, the residues of the completed product
//! `Lambda_{F,k}`, and the corrected series that satisfy modular-type
//! transformation laws.

mod series;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fieldarith::Field;
use crate::zetalab::{
    dedekind_zeta, dedekind_zeta_deriv, lambda_completed, laurent_coefficient, zeta_constants,
    EvalOptions,
};
use crate::SeriesValue;

pub use series::{f_series, k0_kernel_series, lambert_f, IM_FLOOR};

const RESIDUE_RADIUS: f64 = 0.25;
const RESIDUE_NODES: usize = 128;

/// A pole of `Lambda_{F,k}(s) y^{-s}` and its order (0 when factors cancel).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pole {
    pub at: i32,
    pub order: u32,
}

/// The candidate poles of `Lambda_{F,k}` for a signature `(r1, r2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolePlan {
    pub k: i32,
    pub poles: Vec<Pole>,
}

impl PolePlan {
    pub fn new(k: i32, r1: u32, r2: u32) -> Self {
        let p = |at: i32, order: u32| Pole { at, order };
        let poles = match k.signum() {
            1 => {
                let mut v = vec![p(1, 1), p(0, r2 + 1)];
                v.extend((1..=k).map(|j| p(-(2 * j - 1), r1 + r2)));
                v.extend((1..k).map(|j| p(-2 * j, r2)));
                v.push(p(-2 * k, r2 + 1));
                v.push(p(-2 * k - 1, 1));
                v
            }
            -1 => vec![p(0, 1), p(1, 1), p(-2 * k, 1)],
            _ => vec![p(1, 1), p(0, r2 + 2), p(-1, 1)],
        };
        PolePlan { k, poles }
    }

    pub fn for_field(k: i32, field: &Field) -> Self {
        Self::new(k, field.r1, field.r2)
    }

    pub fn order_at(&self, at: i32) -> u32 {
        self.poles
            .iter()
            .find(|p| p.at == at)
            .map_or(0, |p| p.order)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResidueTerm {
    pub pole: i32,
    pub value: Complex64,
    pub order_used: u32,
}

fn residue_with_nodes(
    field: &Field,
    k: i32,
    pole: i32,
    y: Complex64,
    nodes: usize,
) -> Result<Complex64> {
    let log_y = y.ln();
    laurent_coefficient(
        |s| Ok(lambda_completed(field, k, s)? * (-s * log_y).exp()),
        Complex64::new(pole as f64, 0.0),
        RESIDUE_RADIUS,
        nodes,
        -1,
    )
}

/// `Res_{s = pole} Lambda_{F,k}(s) (-i z)^{-s}` by a contour integral,
/// confirmed against a contour with twice as many nodes.
pub fn residue_term(
    field: &Field,
    k: i32,
    pole: i32,
    z: Complex64,
    opts: &EvalOptions,
) -> Result<ResidueTerm> {
    if z.im <= 0.0 {
        return Err(Error::Domain(format!("residues need Im z > 0, got {z}")));
    }
    let order = PolePlan::for_field(k, field).order_at(pole);
    if order == 0 {
        return Ok(ResidueTerm {
            pole,
            value: Complex64::new(0.0, 0.0),
            order_used: 0,
        });
    }
    let y = Complex64::new(z.im, -z.re);
    let coarse = residue_with_nodes(field, k, pole, y, RESIDUE_NODES)?;
    let fine = residue_with_nodes(field, k, pole, y, 2 * RESIDUE_NODES)?;
    if (coarse - fine).norm() > 10.0 * opts.target_tol * fine.norm().max(1.0) {
        return Err(Error::Quadrature(format!(
            "residue at {pole} unstable: {coarse} vs {fine}"
        )));
    }
    Ok(ResidueTerm {
        pole,
        value: coarse,
        order_used: order,
    })
}

/// All residues of the plan for `Lambda_{F,k}`.
pub fn residues(
    field: &Field,
    k: i32,
    z: Complex64,
    opts: &EvalOptions,
) -> Result<Vec<ResidueTerm>> {
    PolePlan::for_field(k, field)
        .poles
        .iter()
        .map(|p| residue_term(field, k, p.at, z, opts))
        .collect()
}

/// Residue at `s = 1`, `H zeta_F(2k + 2) i D / ((2 pi)^d z)`.
pub fn residue_at_one(field: &Field, k: i32, z: Complex64) -> Result<Complex64> {
    let h = field
        .factors
        .iter()
        .map(|chi| crate::zetalab::dirichlet_l(chi, Complex64::new(1.0, 0.0)))
        .product::<Result<Complex64>>()?;
    let zeta = dedekind_zeta(field, Complex64::new((2 * k + 2) as f64, 0.0))?;
    let scale = field.abs_disc as f64 / (2.0 * PI).powi(field.degree as i32);
    Ok(h * zeta * Complex64::i() * scale / z)
}

fn with_correction(v: SeriesValue, correction: Complex64) -> SeriesValue {
    SeriesValue::new(v.value - correction, v.err_estimate, v.terms_used)
}

/// `F_{2k+1}(z) - R_0(z) - R_1(z)` for `k >= 1`.
pub fn s_function(field: &Field, k: i32, z: Complex64, opts: &EvalOptions) -> Result<SeriesValue> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!(
            "s_function needs k >= 1, got {k}"
        )));
    }
    let f = f_series(field, 2 * k + 1, z, opts)?;
    let r0 = residue_term(field, k, 0, z, opts)?.value;
    Ok(with_correction(f, r0 + residue_at_one(field, k, z)?))
}

/// `C_F zeta_F^{(r2)}(2k + 1) / r2!`, the constant removed from `F_{2k+1}` when `k < 0`.
pub fn u_constant(field: &Field, k: i32, opts: &EvalOptions) -> Result<Complex64> {
    let c = zeta_constants(field, opts)?.c_f;
    let s = Complex64::new((2 * k + 1) as f64, 0.0);
    let r2 = field.r2;
    let deriv = if r2 == 0 {
        dedekind_zeta(field, s)?
    } else {
        dedekind_zeta_deriv(field, s, r2, opts)?
    };
    let fact: f64 = (1..=r2).map(f64::from).product();
    Ok(deriv * c / fact)
}

/// `F_{2k+1}(z) - C_F zeta_F^{(r2)}(2k + 1) / r2!` for `k <= -1`.
pub fn u_function(field: &Field, k: i32, z: Complex64, opts: &EvalOptions) -> Result<SeriesValue> {
    if k > -1 {
        return Err(Error::InvalidParameter(format!(
            "u_function needs k <= -1, got {k}"
        )));
    }
    let f = f_series(field, 2 * k + 1, z, opts)?;
    Ok(with_correction(f, u_constant(field, k, opts)?))
}

/// `F_1(z) - R_1(z)`.
pub fn t_function(field: &Field, z: Complex64, opts: &EvalOptions) -> Result<SeriesValue> {
    let f = f_series(field, 1, z, opts)?;
    Ok(with_correction(f, residue_at_one(field, 0, z)?))
}

/// `1 - F_{1-2k}(z) / (C_F zeta_F(1 - 2k))` for the quadratic field `Q(sqrt m)`.
pub fn g_eisenstein_quad(m: i64, k: i32, z: Complex64, opts: &EvalOptions) -> Result<SeriesValue> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!(
            "g_eisenstein_quad needs k >= 1, got {k}"
        )));
    }
    let field = Field::quadratic(m)?;
    let c = zeta_constants(&field, opts)?.c_f;
    let norm = c * dedekind_zeta(&field, Complex64::new((1 - 2 * k) as f64, 0.0))?;
    if norm.norm() == 0.0 {
        return Err(Error::Domain(format!(
            "zeta_F(1 - 2k) vanishes for m = {m}, k = {k}"
        )));
    }
    let f = f_series(&field, 1 - 2 * k, z, opts)?;
    Ok(SeriesValue::new(
        1.0 - f.value / norm,
        f.err_estimate / norm.norm(),
        f.terms_used,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pole_plans() {
        let plan = PolePlan::new(2, 1, 0);
        let at: Vec<(i32, u32)> = plan.poles.iter().map(|p| (p.at, p.order)).collect();
        assert_eq!(
            at,
            vec![(1, 1), (0, 1), (-1, 1), (-3, 1), (-2, 0), (-4, 1), (-5, 1)]
        );
        assert_eq!(PolePlan::new(-2, 0, 1).order_at(4), 1);
        assert_eq!(PolePlan::new(0, 0, 1).order_at(0), 3);
        assert_eq!(PolePlan::new(0, 0, 1).order_at(-7), 0);
    }

    #[test]
    fn residue_at_one_matches_contour() {
        let opts = EvalOptions::default();
        for f in [
            Field::rational(),
            Field::quadratic(5).unwrap(),
            Field::quadratic(-1).unwrap(),
        ] {
            for k in [-2, 0, 1, 2] {
                let z = c(0.2, 0.9);
                let a = residue_term(&f, k, 1, z, &opts).unwrap().value;
                let b = residue_at_one(&f, k, z).unwrap();
                assert!(
                    (a - b).norm() < 1e-11 * b.norm().max(1e-5),
                    "{} k={k}",
                    f.label()
                );
            }
        }
    }

    #[test]
    fn residues_at_cancelled_points_vanish() {
        let opts = EvalOptions::default();
        let f = Field::rational();
        let z = c(0.1, 1.1);
        // Gamma pole cancelled by a trivial zero of zeta
        let v = residue_with_nodes(&f, 3, -2, Complex64::new(z.im, -z.re), 128).unwrap();
        assert!(v.norm() < 1e-12);
        assert_eq!(residue_term(&f, 3, -2, z, &opts).unwrap().order_used, 0);
    }

    #[test]
    fn rational_residue_at_zero() {
        // Gamma(s) zeta(s) zeta(s + 2k + 1) (2 pi)^{-s} y^{-s} at s = 0: zeta(0) zeta(2k + 1)
        let opts = EvalOptions::default();
        let z = c(0.3, 0.7);
        let zeta3 = 1.202_056_903_159_594_3;
        let r = residue_term(&Field::rational(), 1, 0, z, &opts)
            .unwrap()
            .value;
        assert!((r - c(-0.5 * zeta3, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn residue_at_zero_is_log_polynomial() {
        // for r2 = 1 the pole at 0 has order 2, so R_0 = a + b log(-i z)
        let opts = EvalOptions::default();
        let f = Field::quadratic(-3).unwrap();
        let zs = [c(0.0, 1.0), c(0.0, 2.0), c(0.0, 4.0)];
        let r: Vec<Complex64> = zs
            .iter()
            .map(|&z| residue_term(&f, 1, 0, z, &opts).unwrap().value)
            .collect();
        let b = (r[1] - r[0]) / 2f64.ln();
        assert!((r[2] - r[1] - b * 2f64.ln()).norm() < 1e-11 * r[1].norm());
    }

    #[test]
    fn sum_of_residues_for_negative_k() {
        // k = -2 over Q: F_{-3}(z) - z^{-4} F_{-3}(-1/z) = zeta(-3) (z^{-4} - 1) / 2
        let opts = EvalOptions::default();
        let q = Field::rational();
        let z = c(0.15, 1.05);
        let w = -z.inv();
        let lhs = f_series(&q, -3, z, &opts).unwrap().value
            - z.powi(-4) * f_series(&q, -3, w, &opts).unwrap().value;
        let zeta_m3 = 1.0 / 120.0;
        let want = 0.5 * zeta_m3 * (z.powi(-4) - 1.0);
        assert!((lhs - want).norm() < 1e-11 * want.norm());
        let u = |z| u_function(&q, -2, z, &opts).unwrap().value;
        assert!((z.powi(4) * u(z) - u(w)).norm() < 1e-11);
    }

    #[test]
    fn t_function_transforms_on_rationals() {
        // the classical eta transformation in additive form
        let opts = EvalOptions::default();
        let q = Field::rational();
        for z in [c(0.0, 1.0), c(0.4, 0.9), c(-1.1, 0.7)] {
            let w = -z.inv();
            let lhs =
                f_series(&q, 1, z, &opts).unwrap().value - f_series(&q, 1, w, &opts).unwrap().value;
            let want =
                Complex64::i() * PI * (z * z + 1.0) / (12.0 * z) + 0.5 * (-Complex64::i() * z).ln();
            // F_1 = sum sigma_{-1}(n) q^n = -log prod (1 - q^n)
            assert!((lhs - want).norm() < 1e-11, "z={z}");
        }
        let t = t_function(&q, c(0.0, 1.0), &opts).unwrap().value;
        let t_inv = t_function(&q, c(0.0, 1.0), &opts).unwrap().value;
        assert_eq!(t, t_inv);
    }

    #[test]
    fn eisenstein_g_is_odd_weight_modular_at_i() {
        let opts = EvalOptions::default();
        let g = g_eisenstein_quad(5, 2, c(0.0, 1.0), &opts).unwrap();
        assert!(g.value.norm().is_finite());
        assert!(g_eisenstein_quad(5, 0, c(0.0, 1.0), &opts).is_err());
    }
}
