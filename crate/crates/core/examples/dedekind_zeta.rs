// Dedekind zeta values, the functional equation, and the Laurent data at 0 and 1.

use drl::fieldarith::{make_field, FieldSpec};
use drl::zetalab::{check_functional_equation, dedekind_zeta, zeta_constants, EvalOptions};
use drl::{format_complex, Complex64};

pub fn run_example() -> drl::Result<()> {
    let opts = EvalOptions::default();
    for spec in ["Q", "quad:-1", "quad:5", "quad:-3"] {
        let field = make_field(&spec.parse::<FieldSpec>()?)?;
        println!(
            "{spec}: r1={} r2={} D={}",
            field.r1, field.r2, field.abs_disc
        );
        for s in [2.0, -1.0, 0.5] {
            let z = dedekind_zeta(&field, Complex64::new(s, 0.0))?;
            println!("  zeta_F({s}) = {}", format_complex(z));
        }
        let c = zeta_constants(&field, &opts)?;
        println!(
            "  residue at 1 = {:.15}, leading coefficient at 0 = {:.15}",
            c.h_f, c.c_f
        );
        let fe = check_functional_equation(&field, Complex64::new(0.3, 4.0))?;
        println!(
            "  functional equation at 0.3+4i: rel_err {:.2e}",
            fe.rel_err
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> drl::Result<()> {
    run_example()
}
