// Steen functions: closed forms, the Mellin-Barnes path and the Bessel kernel.

use drl::steen::{
    bessel_k0, steen_v, steen_v_closed_vs_quadrature, steen_v_quadrature, SteenParams,
};
use drl::zetalab::EvalOptions;
use drl::{format_complex, Complex64};

pub fn run_example() -> drl::Result<()> {
    let opts = EvalOptions::default();
    let z = Complex64::new(1.0, 0.5);
    for d in 1..=4 {
        let v = steen_v_quadrature(z, d, &opts)?;
        println!(
            "V({}|0_{d}) = {} (err ~{:.1e})",
            format_complex(z),
            format_complex(v.value),
            v.err_estimate
        );
    }
    let shifted = steen_v(z, &SteenParams::new(vec![0.5, 0.25, 0.0])?, &opts)?;
    println!("V(z|0.5,0.25,0) = {}", format_complex(shifted.value));

    for d in [1, 2] {
        let r = steen_v_closed_vs_quadrature(Complex64::new(2.0, 1.0), d)?;
        println!("closed vs quadrature, d={d}: rel_err {:.2e}", r.rel_err);
    }
    println!(
        "K0(1) = {}",
        format_complex(bessel_k0(Complex64::new(1.0, 0.0))?)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> drl::Result<()> {
    run_example()
}
