// Runs part of the default check grid and prints the summary.

use drl::verify::run_suite;

pub fn run_example() -> drl::Result<()> {
    let filter = [
        "glaisher",
        "eta",
        "klingen_siegel",
        "main:field=quad:-1,k=1",
    ]
    .map(String::from);
    let suite = run_suite(&filter, None)?;
    for r in &suite.reports {
        println!(
            "{} {} {:?} rel_err {:.2e}",
            if r.pass { "PASS" } else { "FAIL" },
            r.id,
            r.params,
            r.rel_err
        );
    }
    let s = &suite.summary;
    println!(
        "{} checks, {} passed, {} failed, {} flagged",
        s.total, s.passed, s.failed, s.flagged
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> drl::Result<()> {
    run_example()
}
