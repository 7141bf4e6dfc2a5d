use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use super::gamma::{gamma, rgamma};
use super::hurwitz::euler_maclaurin;
use crate::error::{Error, Result};
use crate::fieldarith::CharacterTable;

/// Below this real part the functional equation is used instead of the direct sum.
const REFLECT_BELOW: f64 = -0.5;

fn trivial_character() -> &'static CharacterTable {
    static T: OnceLock<CharacterTable> = OnceLock::new();
    T.get_or_init(|| CharacterTable::new(1, vec![Complex64::new(1.0, 0.0)]).expect("valid"))
}

pub fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    dirichlet_l(trivial_character(), s)
}

/// `L(s, chi)` on the whole plane (pole at `s = 1` for principal `chi`).
pub fn dirichlet_l(chi: &CharacterTable, s: Complex64) -> Result<Complex64> {
    if chi.is_principal() && s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole("1".into()));
    }
    if s.re >= REFLECT_BELOW {
        return Ok(direct(chi, s));
    }
    let prim = chi.primitive();
    let f = prim.modulus() as f64;
    let kappa = prim.parity() as f64;
    let dual = direct(&prim.conj(), 1.0 - s);
    let factor = chi.root_number()
        * Complex64::new(f / PI, 0.0).powc(0.5 - s)
        * gamma((1.0 - s + kappa) / 2.0)?
        * rgamma((s + kappa) / 2.0);
    let euler: Complex64 = chi
        .imprimitive_primes()
        .into_iter()
        .map(|p| 1.0 - prim.value(p as i64) * Complex64::new(p as f64, 0.0).powc(-s))
        .product();
    Ok(factor * dual * euler)
}

// q^{-s} sum_a chi(a) zeta(s, a/q)
fn direct(chi: &CharacterTable, s: Complex64) -> Complex64 {
    let q = chi.modulus();
    let drop_pole = !chi.is_principal();
    let sum: Complex64 = (1..=q)
        .map(|a| (chi.value(a as i64), a))
        .filter(|(v, _)| v.norm() > 0.0)
        .map(|(v, a)| v * euler_maclaurin(s, a as f64 / q as f64, drop_pole).0)
        .sum();
    sum * Complex64::new(q as f64, 0.0).powc(-s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldarith::kronecker;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn chi_m4() -> CharacterTable {
        CharacterTable::kronecker_character(-4)
    }

    // Euler-transformed Leibniz series for L(1, chi_{-4}); independent of the engine.
    fn leibniz_accelerated() -> f64 {
        let terms: Vec<f64> = (0..60).map(|n| 1.0 / (2 * n + 1) as f64).collect();
        // Euler transform: sum (-1)^n a_n = sum_k (-1)^k Delta^k a_0 / 2^{k+1}
        let mut diffs = terms.clone();
        let mut total = 0.0;
        for k in 0..50 {
            total += diffs[0] / 2f64.powi(k + 1);
            diffs = diffs.windows(2).map(|w| w[0] - w[1]).collect();
        }
        total
    }

    #[test]
    fn chi_m4_values() {
        let l1 = dirichlet_l(&chi_m4(), c(1.0, 0.0)).unwrap();
        assert!((l1 - PI / 4.0).norm() < 1e-14);
        assert!((leibniz_accelerated() - PI / 4.0).abs() < 1e-13);
        let l0 = dirichlet_l(&chi_m4(), c(0.0, 0.0)).unwrap();
        assert!((l0 - 0.5).norm() < 1e-14);
    }

    #[test]
    fn zeta_values_and_trivial_zeros() {
        assert!((riemann_zeta(c(2.0, 0.0)).unwrap() - PI * PI / 6.0).norm() < 1e-14);
        assert!((riemann_zeta(c(0.0, 0.0)).unwrap() + 0.5).norm() < 1e-15);
        assert!((riemann_zeta(c(-3.0, 0.0)).unwrap() - 1.0 / 120.0).norm() < 1e-15);
        assert_eq!(riemann_zeta(c(-4.0, 0.0)).unwrap(), c(0.0, 0.0));
        // zeta(-25) = -B_26/26
        let want = -8553103.0 / 6.0 / 26.0;
        assert!((riemann_zeta(c(-25.0, 0.0)).unwrap() - want).norm() < 1e-13 * want.abs());
        assert!(riemann_zeta(c(1.0, 0.0)).is_err());
    }

    #[test]
    fn reflection_boundary_is_continuous() {
        for chi in [
            chi_m4(),
            CharacterTable::kronecker_character(5),
            trivial_character().clone(),
        ] {
            for t in [0.0, 3.0, 25.0] {
                let a = direct(&chi, c(-0.6, t));
                let b = dirichlet_l(&chi, c(-0.6, t)).unwrap();
                assert!((a - b).norm() < 1e-11 * b.norm().max(1.0), "t={t}");
            }
        }
    }

    #[test]
    fn imprimitive_character_continuation() {
        // chi_{-4} induced to modulus 12 carries the extra factor (1 - chi(3) 3^{-s})
        let values = (0..12)
            .map(|a: i64| {
                if a % 3 == 0 {
                    c(0.0, 0.0)
                } else {
                    c(kronecker(-4, a) as f64, 0.0)
                }
            })
            .collect();
        let chi12 = CharacterTable::new(12, values).unwrap();
        for s in [c(-2.5, 0.3), c(0.5, 1.0), c(3.0, 0.0)] {
            let want =
                dirichlet_l(&chi_m4(), s).unwrap() * (1.0 + Complex64::new(3.0, 0.0).powc(-s));
            let got = dirichlet_l(&chi12, s).unwrap();
            assert!((got - want).norm() < 1e-12 * want.norm().max(1.0), "s={s}");
        }
    }

    #[test]
    fn complex_character_mod_9() {
        // L(s, chi) for a cubic character: compare the two paths at s and 1 - s
        let w = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
        let one = c(1.0, 0.0);
        let zero = c(0.0, 0.0);
        let values = vec![zero, one, w, zero, w * w, w * w, zero, w, one];
        let chi = CharacterTable::new(9, values).unwrap();
        assert_eq!(chi.conductor(), 9);
        let s = c(-0.7, 0.4);
        let a = direct(&chi, s);
        let b = dirichlet_l(&chi, s).unwrap();
        assert!((a - b).norm() < 1e-11 * b.norm());
    }
}
