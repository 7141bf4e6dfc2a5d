use std::f64::consts::PI;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const BERNOULLI_CAP: u32 = 200;

fn table() -> &'static [BigRational] {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // sum_{j=0}^{n} C(n+1, j) B_j = 0
        let cap = BERNOULLI_CAP as usize;
        let mut b: Vec<BigRational> = Vec::with_capacity(cap + 1);
        b.push(BigRational::one());
        for n in 1..=cap {
            let mut binom = BigInt::one();
            let mut acc = BigRational::zero();
            for (j, bj) in b.iter().enumerate() {
                acc += BigRational::from_integer(binom.clone()) * bj;
                binom = binom * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
            }
            b.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
        }
        b
    })
}

/// Exact Bernoulli number `B_n` for even `n <= 200` (and `B_1 = -1/2`).
pub fn bernoulli(n: u32) -> Result<BigRational> {
    if n > BERNOULLI_CAP || (n % 2 == 1 && n != 1) {
        return Err(Error::BernoulliIndex(n));
    }
    Ok(table()[n as usize].clone())
}

pub fn bernoulli_f64(n: u32) -> Result<f64> {
    Ok(bernoulli(n)?.to_f64().unwrap_or(f64::NAN))
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `B_n / n!` as an exact rational.
fn scaled_bernoulli(n: u32) -> Result<BigRational> {
    Ok(bernoulli(n)? / BigRational::from_integer(factorial(n)))
}

/// Coefficients `c_j` with `R_{2k+1}(z) = sum_j c_j z^{2j}`, lowest degree first.
pub fn ramanujan_poly_coeffs(k: u32) -> Result<Vec<BigRational>> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "Ramanujan polynomial needs k >= 1".into(),
        ));
    }
    // term j of the defining sum carries z^{2k+2-2j}
    (0..=k + 1)
        .rev()
        .map(|j| Ok(scaled_bernoulli(2 * j)? * scaled_bernoulli(2 * k + 2 - 2 * j)?))
        .collect()
}

/// `R_{2k+1}` evaluated exactly at a point where `z^2 = z2` is rational.
pub fn ramanujan_poly_exact(k: u32, z2: &BigRational) -> Result<BigRational> {
    let coeffs = ramanujan_poly_coeffs(k)?;
    Ok(coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * z2 + c))
}

pub fn ramanujan_poly(k: u32, z: Complex64) -> Result<Complex64> {
    let z2 = z * z;
    let coeffs = ramanujan_poly_coeffs(k)?;
    Ok(coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, c| {
            acc * z2 + c.to_f64().unwrap_or(f64::NAN)
        }))
}

/// `zeta(2k)` from Euler's closed form.
pub fn euler_zeta_even(k: u32) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "euler_zeta_even needs k >= 1".into(),
        ));
    }
    let b = scaled_bernoulli(2 * k)?.to_f64().unwrap_or(f64::NAN);
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * (2.0 * PI).powi(2 * k as i32) * b / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_bernoulli_numbers() {
        assert_eq!(bernoulli(0).unwrap(), q(1, 1));
        assert_eq!(bernoulli(1).unwrap(), q(-1, 2));
        assert_eq!(bernoulli(2).unwrap(), q(1, 6));
        assert_eq!(bernoulli(4).unwrap(), q(-1, 30));
        assert_eq!(bernoulli(12).unwrap(), q(-691, 2730));
        assert!(bernoulli(3).is_err());
        assert!(bernoulli(202).is_err());
        assert!(bernoulli(200).is_ok());
    }

    #[test]
    fn ramanujan_poly_r3() {
        let c = ramanujan_poly_coeffs(1).unwrap();
        assert_eq!(c, vec![q(-1, 720), q(1, 144), q(-1, 720)]);
        let zero = BigRational::zero();
        assert_eq!(ramanujan_poly_exact(1, &zero).unwrap(), q(-1, 720));
    }

    #[test]
    fn ramanujan_poly_at_i() {
        let minus_one = q(-1, 1);
        assert_eq!(
            ramanujan_poly_exact(2, &minus_one).unwrap(),
            BigRational::zero()
        );
        assert_eq!(ramanujan_poly_exact(1, &minus_one).unwrap(), q(-7, 720));
        let v = ramanujan_poly(2, Complex64::new(0.0, 1.0)).unwrap();
        assert!(v.norm() < 1e-18);
    }

    #[test]
    fn euler_even_values() {
        let cases = [
            (1, PI.powi(2) / 6.0),
            (2, PI.powi(4) / 90.0),
            (3, PI.powi(6) / 945.0),
        ];
        for (k, want) in cases {
            assert!((euler_zeta_even(k).unwrap() - want).abs() < 1e-14 * want);
        }
        for k in 1..=4 {
            let direct: f64 = (1..200_000u64)
                .rev()
                .map(|n| (n as f64).powi(-2 * k as i32))
                .sum();
            let big_n = 200_000f64;
            let tail =
                big_n.powi(1 - 2 * k as i32) / (2 * k - 1) as f64 + big_n.powi(-2 * k as i32) / 2.0;
            let want = direct + tail;
            assert!(
                (euler_zeta_even(k).unwrap() - want).abs() < 1e-12 * want,
                "k={k}"
            );
        }
    }

    #[test]
    fn reciprocity_on_rationals() {
        for k in 1..6 {
            for z2 in [q(3, 7), q(-5, 2), q(11, 1)] {
                let inv = BigRational::one() / &z2;
                let lhs = num_traits::pow(z2.clone(), (k + 1) as usize)
                    * ramanujan_poly_exact(k, &inv).unwrap();
                assert_eq!(lhs, ramanujan_poly_exact(k, &z2).unwrap());
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn reciprocity_on_complex_points(k in 1u32..6, re in -2.0f64..2.0, im in -2.0f64..2.0) {
                let z = Complex64::new(re, im);
                prop_assume!(z.norm() > 0.3);
                let lhs = z.powu(2 * k + 2) * ramanujan_poly(k, z.inv()).unwrap();
                let rhs = ramanujan_poly(k, z).unwrap();
                prop_assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm().max(z.norm().powi(2 * k as i32 + 2)).max(1.0));
            }
        }
    }
}
