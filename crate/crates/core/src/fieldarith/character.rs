use std::f64::consts::PI;

use num_complex::Complex64;
use num_integer::Integer;

use crate::error::{Error, Result};

const UNIT_TOL: f64 = 1e-9;

/// Kronecker symbol `(a/n)`, extended to even and negative `n`.
///
/// Follows the binary algorithm: the 2-part of `n` is read off `a mod 8`,
/// the sign of `n` contributes `sign(a)`, and the odd part is reduced by
/// quadratic reciprocity.
pub fn kronecker(a: i64, n: i64) -> i32 {
    const TAB2: [i32; 8] = [0, 1, 0, -1, 0, -1, 0, 1];
    let (mut a, mut b) = (a as i128, n as i128);
    if b == 0 {
        return if a.abs() == 1 { 1 } else { 0 };
    }
    if a % 2 == 0 && b % 2 == 0 {
        return 0;
    }
    let mut v = 0;
    while b % 2 == 0 {
        v += 1;
        b /= 2;
    }
    let mut k = if v % 2 == 0 {
        1
    } else {
        TAB2[(a & 7) as usize]
    };
    if b < 0 {
        b = -b;
        if a < 0 {
            k = -k;
        }
    }
    loop {
        if a == 0 {
            return if b > 1 { 0 } else { k };
        }
        let mut v = 0;
        while a % 2 == 0 {
            v += 1;
            a /= 2;
        }
        if v % 2 == 1 {
            k *= TAB2[(b & 7) as usize];
        }
        if a & b & 2 != 0 {
            k = -k;
        }
        let r = a.abs();
        a = b.rem_euclid(r);
        b = r;
    }
}

/// A Dirichlet character given by its table of values modulo `q`.
///
/// The constructor validates the table and precomputes the data needed for
/// analytic continuation: the conductor, the induced primitive character,
/// its parity and its root number.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    modulus: u64,
    values: Vec<Complex64>,
    primitive: Option<Box<CharacterTable>>,
    conductor: u64,
    parity: u8,
    root_number: Complex64,
}

impl PartialEq for CharacterTable {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.values == other.values
    }
}

impl CharacterTable {
    pub fn new(modulus: u64, values: Vec<Complex64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::LData("character modulus must be positive".into()));
        }
        if values.len() as u64 != modulus {
            return Err(Error::LData(format!(
                "character mod {modulus} needs {modulus} values, got {}",
                values.len()
            )));
        }
        let q = modulus;
        for (a, v) in values.iter().enumerate() {
            let coprime = (a as u64).gcd(&q) == 1;
            if coprime && ((v.norm() - 1.0).abs() > UNIT_TOL) {
                return Err(Error::LData(format!(
                    "chi({a}) mod {q} must be a root of unity"
                )));
            }
            if !coprime && v.norm() > UNIT_TOL {
                return Err(Error::LData(format!(
                    "chi({a}) mod {q} must vanish since gcd({a}, {q}) > 1"
                )));
            }
        }
        for a in 1..q {
            for b in a..q {
                let lhs = values[((a * b) % q) as usize];
                let rhs = values[a as usize] * values[b as usize];
                if (lhs - rhs).norm() > 1e-8 {
                    return Err(Error::LData(format!(
                        "character mod {q} is not multiplicative at ({a}, {b})"
                    )));
                }
            }
        }
        let mut table = CharacterTable {
            modulus,
            values,
            primitive: None,
            conductor: modulus,
            parity: 0,
            root_number: Complex64::new(1.0, 0.0),
        };
        // chi(-1) decides the parity; moduli 1 and 2 only carry even characters
        table.parity = u8::from(q > 2 && table.values[(q - 1) as usize].re < 0.0);
        table.attach_primitive();
        Ok(table)
    }

    /// Real Kronecker character `n -> (disc/n)` of a fundamental discriminant.
    pub fn kronecker_character(disc: i64) -> Self {
        let q = disc.unsigned_abs();
        let values = (0..q)
            .map(|a| Complex64::new(kronecker(disc, a as i64) as f64, 0.0))
            .collect();
        CharacterTable::new(q, values).expect("Kronecker symbol of a fundamental discriminant")
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn value(&self, n: i64) -> Complex64 {
        self.values[n.rem_euclid(self.modulus as i64) as usize]
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// 0 for even characters, 1 for odd ones.
    pub fn parity(&self) -> u8 {
        self.parity
    }

    /// The primitive character inducing this one (itself when primitive).
    pub fn primitive(&self) -> &CharacterTable {
        self.primitive.as_deref().unwrap_or(self)
    }

    /// Root number of the primitive character, `tau(chi) / (i^kappa sqrt(f))`.
    pub fn root_number(&self) -> Complex64 {
        self.primitive().root_number
    }

    pub fn is_principal(&self) -> bool {
        self.conductor == 1
    }

    pub fn is_real(&self) -> bool {
        self.values.iter().all(|v| v.im.abs() < UNIT_TOL)
    }

    pub fn conj(&self) -> CharacterTable {
        let mut out = self.clone();
        out.values.iter_mut().for_each(|v| *v = v.conj());
        out.root_number = out.root_number.conj();
        if let Some(p) = out.primitive.as_mut() {
            p.values.iter_mut().for_each(|v| *v = v.conj());
            p.root_number = p.root_number.conj();
        }
        out
    }

    pub fn gauss_sum(&self) -> Complex64 {
        let q = self.modulus as f64;
        self.values
            .iter()
            .enumerate()
            .map(|(a, v)| v * Complex64::from_polar(1.0, 2.0 * PI * a as f64 / q))
            .sum()
    }

    /// Primes dividing the modulus but not the conductor; the Euler factors
    /// at these primes separate `L(s, chi)` from `L(s, chi*)`.
    pub fn imprimitive_primes(&self) -> Vec<u64> {
        prime_divisors(self.modulus)
            .into_iter()
            .filter(|p| !self.conductor.is_multiple_of(*p))
            .collect()
    }

    fn attach_primitive(&mut self) {
        let q = self.modulus;
        let f = (1..=q)
            .filter(|f| q.is_multiple_of(*f))
            .find(|&f| self.is_periodic_on_units(f))
            .unwrap_or(q);
        self.conductor = f;
        if f == q {
            let tau = self.gauss_sum();
            let i_kappa = if self.parity == 0 {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 1.0)
            };
            self.root_number = tau / (i_kappa * (q as f64).sqrt());
            return;
        }
        let mut values = vec![Complex64::new(0.0, 0.0); f as usize];
        for a in 0..f {
            if a.gcd(&f) != 1 {
                continue;
            }
            let lift = (0..q / f)
                .map(|t| a + t * f)
                .find(|b| b.gcd(&q) == 1)
                .expect("every unit mod f lifts to a unit mod q");
            values[a as usize] = self.values[lift as usize];
        }
        let prim = CharacterTable::new(f, values).expect("induced character is valid");
        self.root_number = prim.root_number;
        self.primitive = Some(Box::new(prim));
    }

    /// `chi` factors through `(Z/f)^*` iff it is trivial on units `a = 1 (mod f)`.
    fn is_periodic_on_units(&self, f: u64) -> bool {
        let q = self.modulus;
        (0..q / f)
            .map(|t| (1 + t * f) % q)
            .filter(|a| a.gcd(&q) == 1)
            .all(|a| (self.values[a as usize] - 1.0).norm() <= 1e-8)
    }
}

pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
