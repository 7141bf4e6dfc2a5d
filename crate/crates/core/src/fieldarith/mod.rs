//! Exact arithmetic: field descriptors, characters, ideal counts, divisor
//! sums and Bernoulli numbers.

mod arith;
mod bernoulli;
mod character;
mod field;

pub use arith::{
    divisor_sigma, divisor_sigma_int, factorize, ideal_count, kronecker_chi, local_ideal_counts,
    Sieve, FACTOR_CAP,
};
pub use bernoulli::{
    bernoulli, bernoulli_f64, euler_zeta_even, ramanujan_poly, ramanujan_poly_coeffs,
    ramanujan_poly_exact, BERNOULLI_CAP,
};
pub use character::{kronecker, CharacterTable};
pub use field::{
    make_field, signed_discriminant, CharacterFile, Field, FieldKind, FieldSpec, Knowns,
    LFactorization,
};
