use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::zetalab::EULER_GAMMA;

const SERIES_RADIUS: f64 = 2.0;
const ASYMPTOTIC_RADIUS: f64 = 25.0;

/// Modified Bessel function `K_0(z)` for `Re z > 0`, `1e-6 <= |z| <= 700`.
///
/// Three regimes: the logarithmic power series near the origin, the
/// trapezoid rule on `int_0^inf exp(-z cosh t) dt` in between, and the
/// Hankel asymptotic expansion for large `|z|`.
pub fn bessel_k0(z: Complex64) -> Result<Complex64> {
    if z.re <= 0.0 {
        return Err(Error::Domain(format!("K0 needs Re z > 0, got {z}")));
    }
    let r = z.norm();
    if !(1e-6..=700.0).contains(&r) {
        return Err(Error::Domain(format!(
            "K0 validated for 1e-6 <= |z| <= 700, got |z| = {r}"
        )));
    }
    Ok(k0_unchecked(z))
}

/// `K_0` without the range check; callers guarantee `Re z > 0`.
pub(crate) fn k0_unchecked(z: Complex64) -> Complex64 {
    let r = z.norm();
    if r <= SERIES_RADIUS {
        k0_series(z)
    } else if r < ASYMPTOTIC_RADIUS {
        k0_integral(z)
    } else {
        k0_asymptotic(z)
    }
}

pub(crate) fn k0_series(z: Complex64) -> Complex64 {
    let q = z * z / 4.0;
    let mut term = Complex64::new(1.0, 0.0);
    let mut i0 = term;
    let mut rest = Complex64::new(0.0, 0.0);
    let mut harmonic = 0.0;
    for k in 1..60 {
        let kf = k as f64;
        term *= q / (kf * kf);
        harmonic += 1.0 / kf;
        i0 += term;
        rest += term * harmonic;
        if term.norm() * harmonic < 1e-18 * rest.norm().max(i0.norm()) {
            break;
        }
    }
    -((z / 2.0).ln() + EULER_GAMMA) * i0 + rest
}

pub(crate) fn k0_integral(z: Complex64) -> Complex64 {
    // The integrand is analytic in |Im t| < pi/2 - |arg z|; use half of that strip
    // and shrink the step so the strip error stays below 1e-17 relative to e^{-|z|}.
    let a = 0.5 * (0.5 * PI - z.arg().abs());
    let h = 2.0 * PI * a / (40.0 + z.norm());
    let mut sum = 0.5 * (-z).exp();
    let cut = (40.0 + z.re) / z.re;
    let mut t = h;
    loop {
        let c = t.cosh();
        sum += (-z * c).exp();
        if c > cut {
            break;
        }
        t += h;
    }
    sum * h
}

pub(crate) fn k0_asymptotic(z: Complex64) -> Complex64 {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        let next = term * (-odd * odd) / (8.0 * k as f64 * z);
        if next.norm() > term.norm() {
            break;
        }
        term = next;
        sum += term;
        if term.norm() < 1e-17 * sum.norm() {
            break;
        }
    }
    (PI / (2.0 * z)).sqrt() * (-z).exp() * sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn reference_value_at_two() {
        let v = bessel_k0(c(2.0, 0.0)).unwrap();
        assert!((v.re - 0.113_893_872_749_533_4).abs() < 1e-15);
        assert!(rel(k0_integral(c(2.0, 0.0)), v) < 1e-13);
    }

    #[test]
    fn branches_agree_on_overlaps() {
        for k in 0..24 {
            let th = -1.3 + 2.6 * k as f64 / 23.0;
            for r in [1.5, 2.0] {
                let z = Complex64::from_polar(r, th);
                assert!(rel(k0_integral(z), k0_series(z)) < 1e-13, "z={z}");
            }
            for r in [25.0, 40.0] {
                let z = Complex64::from_polar(r, th);
                assert!(rel(k0_integral(z), k0_asymptotic(z)) < 1e-12, "z={z}");
            }
        }
    }

    #[test]
    fn large_argument_ratio() {
        for x in [50.0, 200.0, 650.0] {
            let lead = (PI / (2.0 * x)).sqrt() * (-x).exp();
            let ratio = bessel_k0(c(x, 0.0)).unwrap().re / lead;
            assert!((ratio - 1.0).abs() < 1.0 / (8.0 * x) * 1.01);
        }
    }

    #[test]
    fn conjugate_symmetry_and_domain() {
        for z in [c(1.0, 0.0), c(3.0, 2.0), c(0.4, -0.3), c(30.0, 10.0)] {
            assert!(rel(bessel_k0(z.conj()).unwrap(), bessel_k0(z).unwrap().conj()) < 1e-15);
        }
        assert!(bessel_k0(c(-1.0, 1.0)).is_err());
        assert!(bessel_k0(c(800.0, 0.0)).is_err());
        assert!(bessel_k0(c(1e-7, 0.0)).is_err());
    }
}
