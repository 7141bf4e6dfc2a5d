// Lambert series over Q, Grosswald's transformation and the eta relation.

use drl::serieskit::lambert_f;
use drl::verify::{verify_identity, IdentityId};
use drl::{format_complex, Complex64};

pub fn run_example() -> drl::Result<()> {
    let z = Complex64::new(0.1, 1.2);
    for k in [1, 3, -3] {
        let f = lambert_f(k, z)?;
        println!(
            "F_{k}({}) = {} in {} terms",
            format_complex(z),
            format_complex(f.value),
            f.terms_used
        );
    }
    let ids = [
        IdentityId::Grosswald { k: 2, z },
        IdentityId::GrosswaldNeg { k: -3, z },
        IdentityId::Eta {
            z: Complex64::new(0.25, 1.5),
        },
        IdentityId::Glaisher { k: 3 },
    ];
    for id in ids {
        let r = verify_identity(&id, id.default_tol())?;
        println!("{id}: rel_err {:.2e} pass {}", r.rel_err, r.pass);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> drl::Result<()> {
    run_example()
}
