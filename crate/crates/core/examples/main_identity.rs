// The modular relation for divisor series over a field, for both signs of k.

use drl::fieldarith::{make_field, FieldSpec};
use drl::serieskit::f_series;
use drl::verify::{verify_identity, IdentityId};
use drl::zetalab::EvalOptions;
use drl::{format_complex, Complex64};

pub fn run_example() -> drl::Result<()> {
    let z = Complex64::new(0.4, 1.3);
    let field = make_field(&FieldSpec::Quadratic(5))?;
    let f = f_series(&field, 3, z, &EvalOptions::default())?;
    println!(
        "f series over Q(sqrt 5), index 3: {} ({} terms)",
        format_complex(f.value),
        f.terms_used
    );

    for (m, k) in [(5, 1), (5, 2), (-1, 1), (-1, -1), (-3, -2)] {
        let id = IdentityId::Main {
            field: FieldSpec::Quadratic(m),
            k,
            z,
        };
        let r = verify_identity(&id, id.default_tol())?;
        println!(
            "{id}: lhs {} rel_err {:.2e} pass {}",
            format_complex(r.lhs),
            r.rel_err,
            r.pass
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> drl::Result<()> {
    run_example()
}
