// Poles of the completed product and their residues, found on small circles.

use drl::fieldarith::Field;
use drl::serieskit::{residue_at_one, residues, PolePlan};
use drl::zetalab::{laurent_coefficients, EvalOptions};
use drl::{format_complex, Complex64};

pub fn run_example() -> drl::Result<()> {
    let opts = EvalOptions::default();
    let z = Complex64::new(0.2, 1.1);

    // Laurent coefficients of 1/sin at 0: 1/s + s/6 + ...
    let c = laurent_coefficients(
        |s| Ok(Complex64::new(1.0, 0.0) / s.sin()),
        Complex64::new(0.0, 0.0),
        0.5,
        64,
        -1..=1,
    )?;
    println!("1/sin s: {:.12} {:.12} {:.12}", c[0].re, c[1].re, c[2].re);

    for (m, k) in [(5, 1), (-1, 2), (-1, -1)] {
        let field = Field::quadratic(m)?;
        let plan = PolePlan::for_field(k, &field);
        println!("Q(sqrt {m}), k = {k}");
        for r in residues(&field, k, z, &opts)? {
            println!(
                "  pole {:>3} order {} -> {}",
                r.pole,
                r.order_used,
                format_complex(r.value)
            );
        }
        println!("  order at 1 per plan: {}", plan.order_at(1));
        println!(
            "  closed residue at 1: {}",
            format_complex(residue_at_one(&field, k, z)?)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> drl::Result<()> {
    run_example()
}
