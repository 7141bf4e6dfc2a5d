use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fieldarith::{divisor_sigma_int, Field, FieldKind, Sieve};
use crate::steen::{k0_unchecked, steen_v, SteenParams};
use crate::zetalab::EvalOptions;
use crate::SeriesValue;

/// Smallest `Im z` the series accept.
pub const IM_FLOOR: f64 = 0.05;
const QUIET_RUN: usize = 5;
const MIN_TERMS: u64 = 10;

fn check_upper_half_plane(z: Complex64) -> Result<()> {
    if z.im < IM_FLOOR {
        return Err(Error::Domain(format!(
            "series need Im z >= {IM_FLOOR}, got z = {z}"
        )));
    }
    Ok(())
}

/// Sums `sum_n c_n kernel(n)` with `c_n = sigma_{F,-k}(n)`, skipping `c_n = 0`,
/// until five consecutive nonzero terms fall below `tol |partial sum|`.
///
/// Expensive kernels are evaluated in parallel blocks; the reduction runs in
/// index order so the result does not depend on the thread count.
fn sum_divisor_series<K>(
    field: &Field,
    k: i32,
    opts: &EvalOptions,
    block: usize,
    kernel: K,
) -> Result<SeriesValue>
where
    K: Fn(u64) -> Result<SeriesValue> + Sync,
{
    let mut sieve = Sieve::new(1024);
    let mut total = Complex64::new(0.0, 0.0);
    let mut kernel_err = 0.0;
    let mut quiet = 0;
    let mut recent_tail = 0.0;
    let mut used = 0usize;
    let mut n = 1u64;
    loop {
        let end = (n + block as u64).min(opts.max_terms as u64 + 1);
        let batch: Vec<(u64, f64)> = (n..end)
            .map(|m| (m, divisor_sigma_int(field, -k, &sieve.factor(m))))
            .filter(|(_, c)| *c != 0.0)
            .collect();
        let values = batch
            .par_iter()
            .map(|&(m, c)| kernel(m).map(|v| (m, c, v)))
            .collect::<Result<Vec<_>>>()?;
        for (m, c, v) in values {
            let term = v.value * c;
            total += term;
            kernel_err += v.err_estimate * c.abs();
            used += 1;
            if m >= MIN_TERMS && term.norm() <= opts.target_tol * total.norm() {
                quiet += 1;
                recent_tail += term.norm();
            } else {
                quiet = 0;
                recent_tail = 0.0;
            }
            if quiet >= QUIET_RUN {
                return Ok(SeriesValue::new(total, recent_tail + kernel_err, used));
            }
        }
        n = end;
        if n as usize > opts.max_terms {
            return Err(Error::SeriesCap(opts.max_terms));
        }
    }
}

/// `F_{F,k}(z) = sum_n sigma_{F,-k}(n) V(-(2 pi)^d n i z / D | 0_d)`.
pub fn f_series(field: &Field, k: i32, z: Complex64, opts: &EvalOptions) -> Result<SeriesValue> {
    check_upper_half_plane(z)?;
    let d = field.degree as usize;
    if d > 4 {
        return Err(Error::Domain(format!(
            "series supported for degree <= 4, got {d}"
        )));
    }
    let y = Complex64::new(z.im, -z.re);
    let scale = (2.0 * PI).powi(d as i32) / field.abs_disc as f64;
    if d == 1 {
        let q = Complex64::new(0.0, 2.0 * PI) * z;
        return sum_divisor_series(field, k, opts, 64, |n| {
            Ok(SeriesValue::exact((q * n as f64).exp()))
        });
    }
    let params = SteenParams::zeros(d)?;
    let block = if d <= 2 { 64 } else { 16 };
    sum_divisor_series(field, k, opts, block, |n| {
        steen_v(y * (scale * n as f64), &params, opts)
    })
}

/// `sum_n sigma_{F,-k}(n) 2 K_0(4 pi sqrt(n z / D) e^{-i pi / 4})` for a quadratic field.
///
/// This is the degree-two series written with the Bessel kernel directly;
/// when `D = 4m` the argument is `2 pi sqrt(n z / m) e^{-i pi / 4}`.
pub fn k0_kernel_series(
    field: &Field,
    k: i32,
    z: Complex64,
    opts: &EvalOptions,
) -> Result<SeriesValue> {
    check_upper_half_plane(z)?;
    if !matches!(field.kind, FieldKind::Quadratic { .. }) {
        return Err(Error::NotQuadratic);
    }
    let rot = Complex64::from_polar(1.0, -PI / 4.0);
    let d = field.abs_disc as f64;
    sum_divisor_series(field, k, opts, 64, |n| {
        let arg = 4.0 * PI * (z * (n as f64 / d)).sqrt() * rot;
        Ok(SeriesValue::exact(2.0 * k0_unchecked(arg)))
    })
}

/// Classical divisor function `sigma_{ell}(n)` by direct divisor enumeration.
fn classical_sigma(ell: i32, n: u64) -> f64 {
    let mut total = 0.0;
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += (d as f64).powi(ell);
            let e = n / d;
            if e != d {
                total += (e as f64).powi(ell);
            }
        }
        d += 1;
    }
    total
}

/// Lambert series `F_k(z) = sum_n sigma_{-k}(n) e^{2 pi i n z}`, summed with powers of `q`.
pub fn lambert_f(k: i32, z: Complex64) -> Result<SeriesValue> {
    if z.im <= 0.0 {
        return Err(Error::Domain(format!(
            "Lambert series needs Im z > 0, got {z}"
        )));
    }
    let q = (Complex64::new(0.0, 2.0 * PI) * z).exp();
    let cap = 10_000_000u64;
    let mut qn = Complex64::new(1.0, 0.0);
    let mut total = Complex64::new(0.0, 0.0);
    let mut quiet = 0;
    let mut tail = 0.0;
    for n in 1..=cap {
        qn *= q;
        let term = qn * classical_sigma(-k, n);
        total += term;
        if n >= MIN_TERMS && term.norm() <= 1e-17 * total.norm() {
            quiet += 1;
            tail += term.norm();
            if quiet >= QUIET_RUN {
                let rounding = n as f64 * f64::EPSILON * total.norm();
                return Ok(SeriesValue::new(total, tail + rounding, n as usize));
            }
        } else {
            quiet = 0;
            tail = 0.0;
        }
    }
    Err(Error::SeriesCap(cap as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn glaisher_value() {
        let v = lambert_f(-5, c(0.0, 1.0)).unwrap();
        assert!((v.value - 1.0 / 504.0).norm() < 1e-15);
        let v = f_series(&Field::rational(), -5, c(0.0, 1.0), &EvalOptions::default()).unwrap();
        assert!((v.value - 1.0 / 504.0).norm() < 1e-15);
    }

    #[test]
    fn lambert_properties() {
        for k in [-3, 1, 5] {
            let z = c(0.3, 0.8);
            let a = lambert_f(k, z).unwrap().value;
            let b = lambert_f(k, z + 1.0).unwrap().value;
            assert!((a - b).norm() < 1e-13 * a.norm());
        }
        let v = lambert_f(5, c(0.0, 10.0)).unwrap();
        assert!(v.terms_used < 20);
        // n sigma_{-1}(n) = sigma(n)
        let direct: f64 = (1..40u64)
            .map(|n| classical_sigma(1, n) / n as f64 * (-2.0 * PI * n as f64).exp())
            .sum();
        assert!((lambert_f(1, c(0.0, 1.0)).unwrap().value - direct).norm() < 1e-17);
    }

    #[test]
    fn f_series_on_rationals_matches_lambert() {
        let opts = EvalOptions::default();
        let zs = [
            c(0.0, 1.0),
            c(0.3, 1.2),
            c(-0.7, 0.9),
            c(0.1, 0.4),
            c(2.5, 0.6),
        ];
        for k in [-5, -3, 1, 3] {
            for z in zs {
                let a = f_series(&Field::rational(), k, z, &opts).unwrap().value;
                let b = lambert_f(k, z).unwrap().value;
                assert!(
                    (a - b).norm() <= 1e-12 * b.norm().max(1e-300),
                    "k={k} z={z}"
                );
            }
        }
    }

    #[test]
    fn bessel_kernel_matches_steen_kernel() {
        let opts = EvalOptions::default();
        for m in [5, -1, 2, -3] {
            let f = Field::quadratic(m).unwrap();
            for z in [c(0.0, 1.0), c(0.4, 1.3), c(-0.6, 0.5)] {
                let a = f_series(&f, 3, z, &opts).unwrap().value;
                let b = k0_kernel_series(&f, 3, z, &opts).unwrap().value;
                assert!((a - b).norm() <= 1e-12 * b.norm(), "m={m} z={z}");
            }
        }
    }

    #[test]
    fn floor_and_degree_limits() {
        let opts = EvalOptions::default();
        assert!(f_series(&Field::rational(), 1, c(0.0, 0.01), &opts).is_err());
        assert!(lambert_f(1, c(0.0, -1.0)).is_err());
        assert!(k0_kernel_series(&Field::rational(), 1, c(0.0, 1.0), &opts).is_err());
    }

    #[test]
    fn term_cap_is_exact() {
        let f = Field::quadratic(5).unwrap();
        let z = c(0.4, 1.3);
        let full = f_series(&f, 3, z, &EvalOptions::default()).unwrap();
        let at = |max_terms| {
            f_series(
                &f,
                3,
                z,
                &EvalOptions {
                    max_terms,
                    ..EvalOptions::default()
                },
            )
        };
        assert!(matches!(at(5), Err(Error::SeriesCap(5))));
        // terms_used counts nonzero coefficients only, the cap counts indices
        assert!(full.terms_used < 64);
        assert_eq!(at(64).unwrap(), full);
    }
}
