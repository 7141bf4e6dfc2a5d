use num_complex::Complex64;

use super::character::kronecker;
use super::field::{Field, FieldKind};
use crate::error::{Error, Result};

/// Largest integer accepted by trial-division factorization.
pub const FACTOR_CAP: u64 = 100_000_000;

/// Prime factorization `[(p, e), ...]` by trial division, `p` increasing.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::InvalidParameter("cannot factor 0".into()));
    }
    if n > FACTOR_CAP {
        return Err(Error::FactorizationCap { n, cap: FACTOR_CAP });
    }
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    Ok(out)
}

/// `(D*/n)` for a quadratic field, where `D*` is its signed discriminant.
pub fn kronecker_chi(field: &Field, n: i64) -> Result<i32> {
    match field.kind {
        FieldKind::Quadratic { m } => Ok(kronecker(super::field::signed_discriminant(m), n)),
        _ => Err(Error::NotQuadratic),
    }
}

/// `a_F(p^j)` for `j = 0..=e`.
///
/// The local factor of `zeta * prod L(s, chi_i)` at `p` is
/// `prod_x 1/(1 - x p^{-s})` over `x in {1, chi_i(p)}`, so `a_F(p^j)` is the
/// complete homogeneous symmetric polynomial of degree `j` in those values.
pub fn local_ideal_counts(field: &Field, p: u64, e: u32) -> Vec<i64> {
    let e = e as usize;
    let mut h = vec![Complex64::new(0.0, 0.0); e + 1];
    h[0] = Complex64::new(1.0, 0.0);
    let roots = std::iter::once(Complex64::new(1.0, 0.0))
        .chain(field.factors.iter().map(|chi| chi.value(p as i64)));
    for x in roots {
        for j in 1..=e {
            h[j] = h[j] + x * h[j - 1];
        }
    }
    h.iter().map(|v| v.re.round() as i64).collect()
}

/// Number of integral ideals of norm `n`.
pub fn ideal_count(field: &Field, n: u64) -> Result<u64> {
    let mut out = 1i64;
    for (p, e) in factorize(n)? {
        out *= local_ideal_counts(field, p, e)[e as usize];
    }
    Ok(out as u64)
}

/// `sigma_{F,ell}(n) = sum_{d | n} a_F(d) a_F(n/d) d^ell`.
pub fn divisor_sigma(field: &Field, ell: Complex64, n: u64) -> Result<Complex64> {
    let mut out = Complex64::new(1.0, 0.0);
    for (p, e) in factorize(n)? {
        let a = local_ideal_counts(field, p, e);
        let pl = Complex64::new(p as f64, 0.0).powc(ell);
        let mut local = Complex64::new(0.0, 0.0);
        let mut pj = Complex64::new(1.0, 0.0);
        for j in 0..=e as usize {
            local += pj * (a[j] * a[e as usize - j]) as f64;
            pj *= pl;
        }
        out *= local;
    }
    Ok(out)
}

/// `sigma_{F,ell}(n)` for integer `ell`, the only case the series need.
pub fn divisor_sigma_int(field: &Field, ell: i32, factors: &[(u64, u32)]) -> f64 {
    factors
        .iter()
        .map(|&(p, e)| {
            let a = local_ideal_counts(field, p, e);
            let pl = (p as f64).powi(ell);
            (0..=e as usize)
                .map(|j| (a[j] * a[e as usize - j]) as f64 * pl.powi(j as i32))
                .sum::<f64>()
        })
        .product()
}

/// Smallest-prime-factor sieve that grows on demand; factorizations of the
/// consecutive integers summed by the series come from here.
#[derive(Debug, Default, Clone)]
pub struct Sieve {
    spf: Vec<u32>,
}

impl Sieve {
    pub fn new(limit: usize) -> Self {
        let mut s = Sieve::default();
        s.grow(limit);
        s
    }

    fn grow(&mut self, limit: usize) {
        let limit = limit.max(16);
        let mut spf = vec![0u32; limit + 1];
        for i in 2..=limit {
            if spf[i] == 0 {
                let mut j = i;
                while j <= limit {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        self.spf = spf;
    }

    pub fn factor(&mut self, n: u64) -> Vec<(u64, u32)> {
        if n as usize >= self.spf.len() {
            self.grow((n as usize + 1).max(2 * self.spf.len()));
        }
        let mut out: Vec<(u64, u32)> = Vec::new();
        let mut m = n as usize;
        while m > 1 {
            let p = self.spf[m] as u64;
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
            m /= p as usize;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldarith::{make_field, FieldSpec};

    fn gaussian() -> Field {
        make_field(&FieldSpec::Quadratic(-1)).unwrap()
    }

    // a_F(n) as the Dirichlet convolution 1 * chi, by brute force over divisors.
    fn convolution_count(field: &Field, n: u64) -> i64 {
        (1..=n)
            .filter(|d| n.is_multiple_of(*d))
            .map(|d| {
                field
                    .factors
                    .first()
                    .map_or(1.0, |chi| chi.value(d as i64).re) as i64
            })
            .sum()
    }

    #[test]
    fn ideal_counts_small() {
        let f = gaussian();
        assert_eq!(ideal_count(&f, 5).unwrap(), 2);
        assert_eq!(ideal_count(&f, 3).unwrap(), 0);
        let counts: Vec<u64> = (1..=10).map(|n| ideal_count(&f, n).unwrap()).collect();
        assert_eq!(counts, vec![1, 1, 0, 1, 2, 0, 0, 1, 1, 2]);
        assert_eq!(ideal_count(&Field::rational(), 10).unwrap(), 1);
    }

    #[test]
    fn ideal_counts_match_convolution() {
        for m in [-1, -3, 5, 2, -7] {
            let f = Field::quadratic(m).unwrap();
            for n in 1..200 {
                assert_eq!(
                    ideal_count(&f, n).unwrap() as i64,
                    convolution_count(&f, n),
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn kronecker_chi_values() {
        assert_eq!(kronecker_chi(&gaussian(), 3).unwrap(), -1);
        assert_eq!(kronecker_chi(&gaussian(), 2).unwrap(), 0);
        assert_eq!(kronecker_chi(&Field::quadratic(5).unwrap(), 4).unwrap(), 1);
        assert_eq!(
            kronecker_chi(&Field::rational(), 4),
            Err(Error::NotQuadratic)
        );
    }

    #[test]
    fn sigma_values() {
        let one = Complex64::new(1.0, 0.0);
        assert_eq!(
            divisor_sigma(&gaussian(), one, 2).unwrap(),
            Complex64::new(3.0, 0.0)
        );
        assert_eq!(
            divisor_sigma(&Field::rational(), one, 6).unwrap(),
            Complex64::new(12.0, 0.0)
        );
        let ell = Complex64::new(0.3, -2.0);
        assert_eq!(divisor_sigma(&gaussian(), ell, 1).unwrap(), one);
    }

    #[test]
    fn factorization_cap() {
        assert!(matches!(
            factorize(FACTOR_CAP + 1),
            Err(Error::FactorizationCap { .. })
        ));
        assert_eq!(factorize(360).unwrap(), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(99_999_989).unwrap(), vec![(99_999_989, 1)]);
    }

    #[test]
    fn sieve_agrees_with_trial_division() {
        let mut s = Sieve::new(10);
        for n in 1..5000 {
            assert_eq!(s.factor(n), factorize(n).unwrap());
        }
    }

    mod props {
        use super::*;
        use num_integer::Integer;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn ideal_count_is_multiplicative(m in 1u64..=10_000, n in 1u64..=10_000, which in 0usize..4) {
                prop_assume!(m.gcd(&n) == 1);
                let f = Field::quadratic([-1, -3, 5, 2][which]).unwrap();
                prop_assert_eq!(
                    ideal_count(&f, m * n).unwrap(),
                    ideal_count(&f, m).unwrap() * ideal_count(&f, n).unwrap()
                );
            }

            #[test]
            fn sigma_matches_divisor_sum(n in 1u64..2000, ell in -3i32..4) {
                let f = Field::quadratic(-3).unwrap();
                let direct: f64 = (1..=n)
                    .filter(|d| n % d == 0)
                    .map(|d| {
                        let a = ideal_count(&f, d).unwrap() * ideal_count(&f, n / d).unwrap();
                        a as f64 * (d as f64).powi(ell)
                    })
                    .sum();
                let fast = divisor_sigma_int(&f, ell, &factorize(n).unwrap());
                prop_assert!((direct - fast).abs() <= 1e-12 * direct.abs().max(1.0));
            }
        }
    }
}
