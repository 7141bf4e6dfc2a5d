use num_bigint::BigInt;
use num_rational::BigRational;

/// Continued-fraction convergent `p/q` of `x` with `q <= max_den`, accepted
/// only when `|x - p/q| < 1e-9 max(1, |x|)`.
pub fn rational_reconstruct(x: f64, max_den: u64) -> Option<BigRational> {
    if !x.is_finite() || x.abs() >= 1e12 || max_den == 0 {
        return None;
    }
    let gate = 1e-9 * x.abs().max(1.0);
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut rest = x;
    for _ in 0..64 {
        let a = rest.floor();
        let (h, k) = (a as i128 * h1 + h0, a as i128 * k1 + k0);
        if k > max_den as i128 {
            return None;
        }
        if (x - h as f64 / k as f64).abs() < gate {
            return Some(BigRational::new(BigInt::from(h), BigInt::from(k)));
        }
        (h0, h1, k0, k1) = (h1, h, k1, k);
        let frac = rest - a;
        if frac == 0.0 {
            return None;
        }
        rest = frac.recip();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zetalab::EULER_GAMMA;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(d))
    }

    #[test]
    fn reconstructs_small_rationals() {
        assert_eq!(rational_reconstruct(0.6666666667, 1000), Some(q(2, 3)));
        assert_eq!(rational_reconstruct(-7.0 / 720.0, 1000), Some(q(-7, 720)));
        assert_eq!(rational_reconstruct(3.0, 10), Some(q(3, 1)));
        assert_eq!(rational_reconstruct(1.0 / 504.0, 1000), Some(q(1, 504)));
    }

    #[test]
    fn rejects_irrationals() {
        assert_eq!(rational_reconstruct(EULER_GAMMA, 1000), None);
        assert_eq!(rational_reconstruct(std::f64::consts::PI, 1000), None);
        assert_eq!(rational_reconstruct(f64::NAN, 1000), None);
        assert_eq!(rational_reconstruct(2e12, 1000), None);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn recovers_reduced_fractions(p in -5000i64..5000, d in 50i64..500) {
                let x = p as f64 / d as f64;
                prop_assert_eq!(rational_reconstruct(x, 500), Some(q(p, d)));
            }
        }
    }
}
