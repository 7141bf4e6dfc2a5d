// Exact Bernoulli numbers and Ramanujan polynomials, plus the odd zeta
// value relation checked at a few points.

use drl::fieldarith::{bernoulli, ramanujan_poly_coeffs, ramanujan_poly_exact};
use drl::verify::{verify_identity, IdentityId};
use num_rational::BigRational;

pub fn run_example() -> drl::Result<()> {
    for n in [2, 4, 12, 30] {
        println!("B_{n} = {}", bernoulli(n)?);
    }
    let coeffs = ramanujan_poly_coeffs(1)?;
    let text: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    println!("R_3 coefficients in z^2: {}", text.join(", "));

    let minus_one = BigRational::from_integer((-1).into());
    for k in 1..=4 {
        println!(
            "R_{}(i) = {}",
            2 * k + 1,
            ramanujan_poly_exact(k, &minus_one)?
        );
    }

    for alpha in [0.5, 1.0, 2.0] {
        let id = IdentityId::Ramanujan { k: 3, alpha };
        let r = verify_identity(&id, id.default_tol())?;
        println!("{id}: rel_err {:.2e} pass {}", r.rel_err, r.pass);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> drl::Result<()> {
    run_example()
}
