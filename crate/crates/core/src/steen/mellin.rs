use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::zetalab::ln_gamma;
use crate::SeriesValue;

// Gauss-Kronrod 7/15 on [-1, 1]; the Gauss nodes are the odd-indexed Kronrod nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_82,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const MAX_PANELS: usize = 20_000;

struct Panel {
    kronrod: Complex64,
    gauss: Complex64,
    max_log: f64,
}

/// `V(w | a_1..a_n) = (1/2 pi i) int prod Gamma(s + a_j) w^{-s} ds` along a vertical line.
///
/// The line sits at the saddle point `s ~ w^{1/n}` (never left of `Re s = 1`)
/// so that large `|w|` does not produce cancellation, and the integrand is
/// scaled by its value at the saddle. Panels of unit width are added on both
/// sides until the integrand has fallen `ln(1/tol) + 10` below its peak.
pub fn steen_mellin_barnes(w: Complex64, params: &[f64], tol: f64) -> Result<SeriesValue> {
    let n = params.len() as f64;
    let lw = w.ln();
    let saddle = (lw / n).exp();
    let c = saddle.re.max(1.0);
    let t0 = if saddle.re >= 1.0 { saddle.im } else { 0.0 };
    let all_zero = params.iter().all(|&a| a == 0.0);
    let log_integrand = |t: f64| -> Result<Complex64> {
        let s = Complex64::new(c, t);
        let g = if all_zero {
            ln_gamma(s)? * n
        } else {
            params
                .iter()
                .map(|&a| ln_gamma(s + a))
                .sum::<Result<Complex64>>()?
        };
        Ok(g - s * lw)
    };
    let reference = log_integrand(t0)?.re;
    let panel = |lo: f64| -> Result<Panel> {
        let mid = lo + 0.5;
        let mut kronrod = Complex64::new(0.0, 0.0);
        let mut gauss = Complex64::new(0.0, 0.0);
        let mut max_log = f64::NEG_INFINITY;
        for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).enumerate() {
            let pts: &[f64] = if x == 0.0 { &[0.0] } else { &[x, -x] };
            for &u in pts {
                let l = log_integrand(mid + 0.5 * u)?;
                max_log = max_log.max(l.re);
                let v = (l - reference).exp();
                kronrod += v * wk;
                if i % 2 == 1 {
                    gauss += v * WG[i / 2];
                }
            }
        }
        Ok(Panel {
            kronrod: kronrod * 0.5,
            gauss: gauss * 0.5,
            max_log,
        })
    };

    let drop = (1.0 / tol).ln() + 10.0;
    let mut total = Complex64::new(0.0, 0.0);
    let mut quad_err = 0.0;
    let mut peak = reference;
    let mut panels = 0;
    for dir in [1.0, -1.0] {
        let mut k = 0;
        loop {
            let lo = if dir > 0.0 {
                t0 + k as f64
            } else {
                t0 - (k + 1) as f64
            };
            let p = panel(lo)?;
            total += p.kronrod;
            quad_err += (p.kronrod - p.gauss).norm();
            peak = peak.max(p.max_log);
            panels += 1;
            k += 1;
            if p.max_log < peak - drop {
                break;
            }
            if panels >= MAX_PANELS {
                return Err(Error::Domain(format!(
                    "Mellin-Barnes integral for w = {w} not converged after {MAX_PANELS} panels"
                )));
            }
        }
    }
    let scale = reference.exp() / (2.0 * PI);
    let value = total * scale;
    let cut = (peak - drop - reference).exp();
    let err = (quad_err + cut) * scale + 1e-15 * value.norm();
    Ok(SeriesValue::new(value, err, panels * 15))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn exponential_from_single_gamma() {
        for w in [c(1.0, 0.0), c(0.7, 0.3), c(40.0, -5.0), c(0.01, 0.0)] {
            let v = steen_mellin_barnes(w, &[0.0], 1e-13).unwrap();
            let want = (-w).exp();
            assert!((v.value - want).norm() < 1e-11 * want.norm(), "w={w}");
        }
    }

    #[test]
    fn shifted_parameter() {
        // V(w | a) = w^a e^{-w}
        let w = c(1.5, 0.5);
        let v = steen_mellin_barnes(w, &[1.0], 1e-13).unwrap();
        let want = w * (-w).exp();
        assert!((v.value - want).norm() < 1e-11 * want.norm());
    }
}
