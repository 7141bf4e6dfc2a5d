// Special values: evaluations at z = i, the Bessel kernel series, the class
// number relation and rational values of zeta at even integers.

use drl::fieldarith::FieldSpec;
use drl::verify::{verify_identity, IdentityId};
use drl::Complex64;

pub fn run_example() -> drl::Result<()> {
    let ids = [
        IdentityId::QuadImagExactI { m: 1, k: 1 },
        IdentityId::QuadImagExactI { m: 1, k: 3 },
        IdentityId::ExactRealAtI {
            field: FieldSpec::Rational,
            k: 3,
        },
        IdentityId::K0 {
            field: FieldSpec::Quadratic(-1),
            z: Complex64::new(0.3, 1.1),
        },
        IdentityId::ClassNumberKronecker {
            field: FieldSpec::Quadratic(5),
        },
        IdentityId::KlingenSiegel {
            field: FieldSpec::Quadratic(5),
            m: 2,
        },
    ];
    for id in ids {
        let r = verify_identity(&id, id.default_tol())?;
        let note = if r.notes.is_empty() {
            String::new()
        } else {
            format!(" [{}]", r.notes)
        };
        println!("{id}: rel_err {:.2e} pass {}{note}", r.rel_err, r.pass);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> drl::Result<()> {
    run_example()
}
