// Kronecker characters, ideal counts and the generalized divisor function.

use drl::fieldarith::{divisor_sigma, ideal_count, kronecker, Field};
use drl::Complex64;

pub fn run_example() -> drl::Result<()> {
    let gauss = Field::quadratic(-1)?;
    let counts = (1..=20)
        .map(|n| ideal_count(&gauss, n).map(|a| a.to_string()))
        .collect::<drl::Result<Vec<_>>>()?;
    println!("ideals of norm 1..20 in Q(i): {}", counts.join(" "));

    let chi = &gauss.factors[0];
    println!(
        "chi_-4: conductor {}, parity {}",
        chi.conductor(),
        chi.parity()
    );
    println!("(5/7) = {}, (-3/2) = {}", kronecker(5, 7), kronecker(-3, 2));

    let f = Field::quadratic(5)?;
    for n in [1, 4, 5, 9, 11] {
        let s = divisor_sigma(&f, Complex64::new(1.0, 0.0), n)?;
        println!("sigma_1 over Q(sqrt 5) at {n}: {}", s.re);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> drl::Result<()> {
    run_example()
}
