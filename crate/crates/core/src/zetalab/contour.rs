use std::f64::consts::PI;
use std::ops::RangeInclusive;

use num_complex::Complex64;

use crate::error::Result;

/// Laurent coefficients `a_m` of `f` about `center`, by the trapezoid rule on
/// the circle `|s - center| = radius`:
/// `a_m = (1/N) sum_k f(center + u_k) u_k^{-m}` with `u_k = radius e^{2 pi i k / N}`.
///
/// For `f` analytic on an annulus containing the circle the error decays
/// like `(radius / R)^N`, `R` the distance to the nearest other singularity.
pub fn laurent_coefficients<F>(
    f: F,
    center: Complex64,
    radius: f64,
    nodes: usize,
    orders: RangeInclusive<i32>,
) -> Result<Vec<Complex64>>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let angle = |k: usize| 2.0 * PI * k as f64 / nodes as f64;
    let samples = (0..nodes)
        .map(|k| f(center + Complex64::from_polar(radius, angle(k))))
        .collect::<Result<Vec<_>>>()?;
    Ok(orders
        .map(|m| {
            let sum: Complex64 = samples
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    let idx = (m as i64 * k as i64).rem_euclid(nodes as i64) as usize;
                    v * Complex64::from_polar(1.0, -angle(idx))
                })
                .sum();
            sum * radius.powi(-m) / nodes as f64
        })
        .collect())
}

pub fn laurent_coefficient<F>(
    f: F,
    center: Complex64,
    radius: f64,
    nodes: usize,
    order: i32,
) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    Ok(laurent_coefficients(f, center, radius, nodes, order..=order)?[0])
}
