use num_complex::Complex64;

use super::lfun::riemann_zeta;
use crate::error::{Error, Result};
use crate::fieldarith::bernoulli_f64;
use crate::SeriesValue;

const EM_CORRECTIONS: u32 = 12;

/// `(e^u - 1) / u`, accurate near 0.
pub(crate) fn exprel(u: Complex64) -> Complex64 {
    if u.norm() < 0.5 {
        (1..=18).rev().fold(Complex64::new(1.0, 0.0), |acc, n| {
            1.0 + acc * u / (n + 1) as f64
        })
    } else {
        (u.exp() - 1.0) / u
    }
}

pub(crate) fn em_terms(s: Complex64) -> usize {
    20 + (1.3 * s.im.abs()).ceil() as usize
}

/// Euler-Maclaurin sum for `zeta(s, a)`.
///
/// With `drop_pole` the `1/(s-1)` part of the tail integral is left out,
/// which keeps combinations `sum chi(a) zeta(s, a/q)` with `sum chi(a) = 0`
/// finite at `s = 1`.
pub(crate) fn euler_maclaurin(s: Complex64, a: f64, drop_pole: bool) -> (Complex64, f64) {
    let n = em_terms(s);
    let mut head = Complex64::new(0.0, 0.0);
    let mut magnitude = 0.0;
    for j in (0..n).rev() {
        let t = (-s * (j as f64 + a).ln()).exp();
        magnitude += t.norm();
        head += t;
    }
    let x = n as f64 + a;
    let lnx = x.ln();
    let x_s = (-s * lnx).exp();
    let integral = if drop_pole {
        -lnx * exprel((1.0 - s) * lnx)
    } else {
        x * x_s / (s - 1.0)
    };
    let mut tail = integral + 0.5 * x_s;
    // B_{2j}/(2j)! * s (s+1) ... (s+2j-2) * x^{-s-2j+1}
    let mut poch = s;
    let mut pw = x_s / x;
    let mut fact = 2.0;
    let mut last = Complex64::new(0.0, 0.0);
    for j in 1..=EM_CORRECTIONS {
        let b = bernoulli_f64(2 * j).expect("within cap");
        last = poch * pw * (b / fact);
        tail += last;
        let m = 2.0 * j as f64;
        poch *= (s + m - 1.0) * (s + m);
        pw /= x * x;
        fact *= (m + 1.0) * (m + 2.0);
    }
    let value = head + tail;
    let err = last.norm() + 4.0 * f64::EPSILON * (magnitude + integral.norm());
    (value, err)
}

/// Hurwitz zeta `zeta(s, a)` for `0 < a <= 1`.
///
/// `a = 1` and `a = 1/2` reduce to the Riemann zeta function and are
/// accurate on the whole plane. Other `a` use Euler-Maclaurin directly; for
/// very negative `Re s` the cancellation in that sum is reported in
/// `err_estimate`.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<SeriesValue> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain(format!(
            "Hurwitz parameter a = {a} outside (0, 1]"
        )));
    }
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole("1".into()));
    }
    if a == 1.0 {
        let v = riemann_zeta(s)?;
        return Ok(SeriesValue::new(
            v,
            8.0 * f64::EPSILON * v.norm(),
            em_terms(s),
        ));
    }
    if a == 0.5 {
        let v = (Complex64::new(2.0, 0.0).powc(s) - 1.0) * riemann_zeta(s)?;
        return Ok(SeriesValue::new(
            v,
            8.0 * f64::EPSILON * v.norm(),
            em_terms(s),
        ));
    }
    let (v, err) = euler_maclaurin(s, a, false);
    Ok(SeriesValue::new(v, err, em_terms(s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn special_values() {
        let v = hurwitz_zeta(c(2.0, 0.0), 1.0).unwrap().value;
        assert!((v - PI * PI / 6.0).norm() < 1e-14);
        let v = hurwitz_zeta(c(-1.0, 0.0), 1.0).unwrap().value;
        assert!((v + 1.0 / 12.0).norm() < 1e-14);
        let v = hurwitz_zeta(c(2.0, 0.0), 0.5).unwrap().value;
        assert!((v - PI * PI / 2.0).norm() < 1e-13);
        assert!(hurwitz_zeta(c(1.0, 0.0), 0.3).is_err());
    }

    // zeta(s, a) - zeta(s, a + 1) = a^{-s}, with a + 1 handled by shifting the direct sum
    #[test]
    fn shift_relation_generic_a() {
        for &a in &[0.1, 0.37, 0.9] {
            for s in [c(0.5, 3.0), c(3.0, -1.0), c(0.0, 40.0), c(-0.4, 0.2)] {
                let z = hurwitz_zeta(s, a).unwrap();
                let (z1, _) = euler_maclaurin(s, a + 1.0, false);
                let want = (-s * a.ln()).exp();
                assert!((z.value - z1 - want).norm() < 1e-11 * want.norm().max(z.value.norm()));
            }
        }
    }

    #[test]
    fn multiplication_formula() {
        // sum_{a=1}^{4} zeta(s, a/4) = 4^s zeta(s)
        for s in [c(0.3, 0.0), c(2.0, 5.0), c(0.7, -30.0)] {
            let total: Complex64 = [0.25, 0.5, 0.75, 1.0]
                .iter()
                .map(|&a| hurwitz_zeta(s, a).unwrap().value)
                .sum();
            let want = Complex64::new(4.0, 0.0).powc(s) * riemann_zeta(s).unwrap();
            assert!((total - want).norm() < 1e-11 * want.norm(), "s={s}");
        }
    }

    #[test]
    fn exprel_near_zero() {
        assert!((exprel(c(1e-9, 0.0)) - (1.0 + 0.5e-9)).norm() < 1e-15);
        assert!((exprel(c(1.0, 0.0)) - (1f64.exp() - 1.0)).norm() < 1e-15);
        let u = c(0.3, 0.2);
        assert!((exprel(u) - (u.exp() - 1.0) / u).norm() < 1e-14);
    }
}
