use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fieldarith::bernoulli_f64;

/// Euler's constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082;

const STIRLING_TERMS: u32 = 12;
const STIRLING_RADIUS: f64 = 15.0;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_741_780_329_736_406;

fn stirling_coeffs() -> &'static [f64] {
    static C: OnceLock<Vec<f64>> = OnceLock::new();
    C.get_or_init(|| {
        (1..=STIRLING_TERMS)
            .map(|j| {
                let b = bernoulli_f64(2 * j).expect("within cap");
                b / ((2 * j) as f64 * (2 * j - 1) as f64)
            })
            .collect()
    })
}

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// `sin(pi x)` for real `x`, exact zeros at the integers.
pub fn sin_pi_real(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    // r in [-1, 1]
    if r.abs() <= 0.5 {
        (PI * r).sin()
    } else {
        let t = r.signum() - r;
        (PI * t).sin()
    }
}

/// `cos(pi x)` for real `x`, exact zeros at the half integers.
pub fn cos_pi_real(x: f64) -> f64 {
    sin_pi_real(x + 0.5)
}

/// `sin(pi z)` with argument reduction on the real part.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let y = PI * z.im;
    Complex64::new(sin_pi_real(z.re) * y.cosh(), cos_pi_real(z.re) * y.sinh())
}

/// Stirling series for `ln Gamma(z)`, valid for `|z| >= 15` off the negative axis.
fn stirling(z: Complex64) -> Complex64 {
    let zinv = z.inv();
    let z2inv = zinv * zinv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pw = zinv;
    for c in stirling_coeffs() {
        series += pw * c;
        pw *= z2inv;
    }
    (z - 0.5) * z.ln() - z + LN_SQRT_2PI + series
}

/// Shift `z` right until `|z| >= 15`; returns the shifted point and the product of the skipped factors.
fn shift_up(z: Complex64) -> (Complex64, Complex64) {
    let mut w = z;
    let mut prod = Complex64::new(1.0, 0.0);
    while w.norm() < STIRLING_RADIUS {
        prod *= w;
        w += 1.0;
    }
    (w, prod)
}

/// `ln Gamma(z)`, equal to the principal log of `Gamma(z)` only up to a multiple of `2 pi i`.
///
/// Only `exp` of this value is meaningful; that is all the integrands below need.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("{z}")));
    }
    if z.re < 0.5 {
        let refl = Complex64::new(PI, 0.0).ln() - sin_pi(z).ln();
        return Ok(refl - ln_gamma(1.0 - z)?);
    }
    let (w, prod) = shift_up(z);
    Ok(stirling(w) - prod.ln())
}

pub fn gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("{z}")));
    }
    if z.re < 0.5 {
        return Ok(PI / (sin_pi(z) * gamma(1.0 - z)?));
    }
    let (w, prod) = shift_up(z);
    Ok(stirling(w).exp() / prod)
}

/// `1 / Gamma(z)`, entire; exactly zero at the nonpositive integers.
pub fn rgamma(z: Complex64) -> Complex64 {
    if is_nonpositive_integer(z) {
        return Complex64::new(0.0, 0.0);
    }
    if z.re < 0.5 {
        return sin_pi(z) * rgamma_right(1.0 - z) * (1.0 / PI);
    }
    rgamma_right(z).inv()
}

// Gamma(z) for Re z >= 0.5
fn rgamma_right(z: Complex64) -> Complex64 {
    let (w, prod) = shift_up(z);
    stirling(w).exp() / prod
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

    // Weierstrass product 1/Gamma(z) = z e^{gamma z} prod (1 + z/n) e^{-z/n}, with the
    // tail of the product replaced by its asymptotic correction.
    fn weierstrass_gamma(z: Complex64) -> Complex64 {
        let n_terms = 200_000;
        let mut log_prod = z.ln() + z * EULER_GAMMA;
        for n in 1..=n_terms {
            let n = n as f64;
            log_prod += (1.0 + z / n).ln() - z / n;
        }
        // sum_{n > N} [log(1 + z/n) - z/n] ~ -z^2/(2N)
        log_prod -= z * z / (2.0 * n_terms as f64);
        (-log_prod).exp()
    }

    #[test]
    fn special_values() {
        assert!(rel(gamma(c(0.5, 0.0)).unwrap(), c(PI.sqrt(), 0.0)) < 1e-14);
        assert!(rel(gamma(c(5.0, 0.0)).unwrap(), c(24.0, 0.0)) < 1e-14);
        assert!(rel(gamma(c(-0.5, 0.0)).unwrap(), c(-2.0 * PI.sqrt(), 0.0)) < 1e-14);
        assert!(gamma(c(-3.0, 0.0)).is_err());
        assert_eq!(rgamma(c(-3.0, 0.0)), c(0.0, 0.0));
    }

    #[test]
    fn matches_weierstrass_product() {
        for z in [c(1.0, 1.0), c(0.3, -2.0), c(2.5, 0.7)] {
            assert!(rel(gamma(z).unwrap(), weierstrass_gamma(z)) < 1e-9, "z={z}");
        }
    }

    #[test]
    fn sin_pi_is_exact_at_integers() {
        for n in -5..5 {
            assert_eq!(sin_pi_real(n as f64), 0.0);
            assert_eq!(cos_pi_real(n as f64 + 0.5), 0.0);
        }
    }

    #[test]
    fn ln_gamma_exponentiates_to_gamma() {
        for z in [c(0.2, 3.0), c(-2.3, 0.4), c(7.0, -20.0), c(40.0, 60.0)] {
            assert!(
                rel(ln_gamma(z).unwrap().exp(), gamma(z).unwrap()) < 1e-12,
                "z={z}"
            );
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn point() -> impl Strategy<Value = Complex64> {
            (-30.0f64..30.0, -30.0f64..30.0).prop_map(|(a, b)| c(a, b))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(100))]

            #[test]
            fn recurrence(z in point()) {
                let lhs = gamma(z + 1.0).unwrap();
                let rhs = z * gamma(z).unwrap();
                prop_assert!(rel(lhs, rhs) < 1e-11);
            }

            #[test]
            fn reflection(z in point()) {
                let lhs = gamma(z).unwrap() * gamma(1.0 - z).unwrap();
                let rhs = PI / sin_pi(z);
                prop_assert!(rel(lhs, rhs) < 1e-11);
            }

            #[test]
            fn duplication(z in point()) {
                let lhs = gamma(z).unwrap() * gamma(z + 0.5).unwrap();
                let rhs = Complex64::new(2.0, 0.0).powc(1.0 - 2.0 * z) * PI.sqrt() * gamma(2.0 * z).unwrap();
                prop_assert!(rel(lhs, rhs) < 1e-11);
            }

            #[test]
            fn rgamma_is_reciprocal(z in point()) {
                prop_assert!(rel(rgamma(z) * gamma(z).unwrap(), c(1.0, 0.0)) < 1e-12);
            }
        }
    }
}
