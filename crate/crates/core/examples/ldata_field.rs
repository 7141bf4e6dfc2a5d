// A field read from an L-data file: the cyclic cubic field of conductor 9.

use std::path::PathBuf;

use drl::fieldarith::{ideal_count, make_field, FieldSpec};
use drl::verify::{verify_identity, IdentityId};
use drl::zetalab::dedekind_zeta;
use drl::{format_complex, Complex64};

pub fn run_example() -> drl::Result<()> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/cyclic_cubic_9.json");
    let spec = FieldSpec::LData(path);
    let field = make_field(&spec)?;
    println!(
        "degree {} with {} L-factors, D = {}",
        field.degree,
        field.factors.len(),
        field.abs_disc
    );
    let counts: Vec<u64> = (1..=20)
        .map(|n| ideal_count(&field, n))
        .collect::<drl::Result<_>>()?;
    println!("ideal counts 1..20: {counts:?}");
    println!(
        "zeta_F(2) = {}",
        format_complex(dedekind_zeta(&field, Complex64::new(2.0, 0.0))?)
    );

    let id = IdentityId::ExactRealAtI { field: spec, k: 3 };
    let r = verify_identity(&id, 1e-6)?;
    println!(
        "exact_real_at_i, k = 3: rel_err {:.2e} pass {}",
        r.rel_err, r.pass
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> drl::Result<()> {
    run_example()
}
