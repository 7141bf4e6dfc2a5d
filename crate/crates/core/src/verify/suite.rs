use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::id::{IdentityId, DIRICHLET_TERMS};
use super::{error_report, verify_identity_with};
use crate::error::{Error, Result};
use crate::fieldarith::FieldSpec;
use crate::report::CheckReport;
use crate::zetalab::EvalOptions;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub total: usize,
    pub passed: usize,
    /// Failed checks that count against the suite.
    pub failed: usize,
    /// Failed diagnostic checks; reported, never fatal.
    pub flagged: usize,
    /// Largest relative error seen for each identity name.
    pub worst_rel_err: BTreeMap<String, f64>,
    pub all_passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub reports: Vec<CheckReport>,
    pub summary: SuiteSummary,
}

const LAMBDA_POINTS: usize = 8;

/// Deterministic points `s` for the symmetry sweep, spread over
/// `|Re s + k| <= 3`, `1 <= Im s <= 10` by a golden-ratio sequence.
pub fn lambda_symmetry_points(k: i32, count: usize) -> Vec<Complex64> {
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    (1..=count)
        .map(|j| {
            let u = (j as f64 * phi).fract();
            let v = (j as f64 * phi * phi).fract();
            Complex64::new(-(k as f64) + 6.0 * u - 3.0, 1.0 + 9.0 * v)
        })
        .collect()
}

fn fields() -> Vec<FieldSpec> {
    vec![
        FieldSpec::Rational,
        FieldSpec::Quadratic(5),
        FieldSpec::Quadratic(2),
        FieldSpec::Quadratic(-1),
        FieldSpec::Quadratic(-3),
    ]
}

fn real_fields() -> Vec<FieldSpec> {
    fields()
        .into_iter()
        .filter(|f| !matches!(f, FieldSpec::Quadratic(m) if *m < 0))
        .collect()
}

fn imaginary_fields() -> Vec<FieldSpec> {
    vec![FieldSpec::Quadratic(-1), FieldSpec::Quadratic(-3)]
}

const KS: [i32; 6] = [-3, -2, -1, 1, 2, 3];

fn zs() -> Vec<Complex64> {
    vec![
        Complex64::new(0.0, 1.0),
        Complex64::new(0.3, 1.2),
        Complex64::new(-0.7, 0.9),
    ]
}

/// Ten points inside the sector where the one-parameter closed form applies.
pub fn steen_grid() -> Vec<Complex64> {
    [
        (0.5, 0.0),
        (1.0, 0.0),
        (2.0, 0.0),
        (5.0, 0.0),
        (12.0, 0.0),
        (1.0, 1.0),
        (2.0, -1.0),
        (0.3, 0.2),
        (3.0, 2.0),
        (0.8, -0.5),
    ]
    .into_iter()
    .map(|(re, im)| Complex64::new(re, im))
    .collect()
}

/// The default parameter grid for every identity.
pub fn default_cases() -> Vec<IdentityId> {
    use IdentityId::*;
    let mut out = Vec::new();
    let pos = [1, 2, 3];
    for z in zs() {
        out.push(Eta { z });
        out.extend(pos.iter().map(|&k| Grosswald { k, z }));
        out.extend([-2, -3].map(|k| GrosswaldNeg { k, z }));
        out.extend(KS.map(|k| ReductionQ { k, z }));
        for field in fields() {
            out.extend(KS.map(|k| Main {
                field: field.clone(),
                k,
                z,
            }));
            out.push(K0 { field, z });
        }
        for field in real_fields() {
            out.extend(pos.map(|k| TotallyRealPos {
                field: field.clone(),
                k,
                z,
            }));
            out.extend(pos.map(|k| TotallyRealNeg {
                field: field.clone(),
                k,
                z,
            }));
            out.push(K0TotallyReal { field, z });
        }
        for m in [5, 2] {
            out.extend(pos.map(|k| QuadRealPos { m, k, z }));
            out.extend(pos.map(|k| QuadRealEisenstein { m, k, z }));
        }
        for field in imaginary_fields() {
            out.extend(pos.map(|k| ImaginaryPos {
                field: field.clone(),
                k,
                z,
            }));
            out.extend([-1, -2, -3].map(|k| ImaginaryNeg {
                field: field.clone(),
                k,
                z,
            }));
            out.extend([2, 3].map(|k| ImagNegModular {
                field: field.clone(),
                k,
                z,
            }));
        }
        for m in [1, 3] {
            out.extend(pos.map(|k| QuadImagPos { m, k, z }));
            out.push(QuadImagKminus1 { m, z });
        }
    }
    for z in steen_grid() {
        out.extend([1, 2].map(|d| SteenClosed { d, z }));
    }
    out.push(Glaisher { k: 3 });
    for k in [1, 2, 3] {
        out.extend([1.0, std::f64::consts::PI, 2.5].map(|alpha| Ramanujan { k, alpha }));
    }
    out.extend([3, 5].map(|k| ExactRealAtI {
        field: FieldSpec::Rational,
        k,
    }));
    for m in [1, 3] {
        out.extend([1, 2, 3].map(|k| QuadImagExactI { m, k }));
    }
    for field in imaginary_fields() {
        out.extend([2, 3].map(|k| ImagExactI {
            field: field.clone(),
            k,
        }));
    }
    for field in real_fields() {
        out.push(ClassNumberKronecker {
            field: field.clone(),
        });
        out.extend([1, 2].map(|m| KlingenSiegel {
            field: field.clone(),
            m,
        }));
    }
    for field in fields() {
        for k in KS {
            out.extend(
                lambda_symmetry_points(k, LAMBDA_POINTS)
                    .into_iter()
                    .map(|s| LambdaSymmetry {
                        field: field.clone(),
                        k,
                        s,
                    }),
            );
        }
        for ell in [-1, 0, 1] {
            let s = Complex64::new(4.5, 1.0);
            out.push(DirichletSeries {
                field: field.clone(),
                ell,
                s,
                n: DIRICHLET_TERMS,
            });
        }
        for s in [
            Complex64::new(0.3, 2.0),
            Complex64::new(-1.5, 0.5),
            Complex64::new(2.5, -4.0),
        ] {
            out.push(FunctionalEquation {
                field: field.clone(),
                s,
            });
        }
    }
    out
}

/// `name` or `name:key=value,...`; a bare `*` matches everything.
fn matches(pattern: &str, id: &IdentityId) -> Result<bool> {
    let (name, rest) = pattern.split_once(':').unwrap_or((pattern, ""));
    if name != "*" && name != id.name() {
        return Ok(false);
    }
    let params = id.params();
    for pair in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| Error::InvalidParameter(format!("bad filter term '{pair}'")))?;
        if params.get(k.trim()).map(String::as_str) != Some(v.trim()) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_filter(filter: &[String]) -> Result<()> {
    for pattern in filter {
        let name = pattern.split_once(':').map_or(pattern.as_str(), |(n, _)| n);
        if name != "*" && !super::IDENTITY_NAMES.contains(&name) {
            return Err(Error::InvalidParameter(format!(
                "unknown identity '{name}' in filter"
            )));
        }
    }
    Ok(())
}

/// Runs the default grid restricted to `filter` (empty means everything).
/// `tol = None` uses each identity's default tolerance.
pub fn run_suite(filter: &[String], tol: Option<f64>) -> Result<SuiteReport> {
    run_suite_with(filter, tol, &EvalOptions::default())
}

pub fn run_suite_with(
    filter: &[String],
    tol: Option<f64>,
    opts: &EvalOptions,
) -> Result<SuiteReport> {
    check_filter(filter)?;
    let mut cases = Vec::new();
    for id in default_cases() {
        let keep = filter.is_empty()
            || filter
                .iter()
                .map(|p| matches(p, &id))
                .collect::<Result<Vec<_>>>()?
                .contains(&true);
        if keep {
            cases.push(id);
        }
    }
    let mut rows: Vec<(bool, CheckReport)> = cases
        .par_iter()
        .map(|id| {
            let tol = tol.unwrap_or_else(|| id.default_tol());
            let report =
                verify_identity_with(id, tol, opts).unwrap_or_else(|e| error_report(id, tol, &e));
            (id.is_diagnostic(), report)
        })
        .collect();
    rows.sort_by(|a, b| (&a.1.id, &a.1.params).cmp(&(&b.1.id, &b.1.params)));
    let mut summary = SuiteSummary {
        total: rows.len(),
        passed: 0,
        failed: 0,
        flagged: 0,
        worst_rel_err: BTreeMap::new(),
        all_passed: true,
    };
    for (diagnostic, r) in &rows {
        match (r.pass, diagnostic) {
            (true, _) => summary.passed += 1,
            (false, true) => summary.flagged += 1,
            (false, false) => summary.failed += 1,
        }
        let worst = summary.worst_rel_err.entry(r.id.clone()).or_insert(0.0);
        *worst = worst.max(r.rel_err);
    }
    summary.all_passed = summary.failed == 0;
    Ok(SuiteReport {
        reports: rows.into_iter().map(|(_, r)| r).collect(),
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        let cases = default_cases();
        let count = |name: &str| cases.iter().filter(|c| c.name() == name).count();
        assert_eq!(count("lambda_symmetry"), 240);
        assert_eq!(count("eta") + count("glaisher"), 4);
        assert_eq!(count("main"), 90);
    }

    #[test]
    fn symmetry_points_avoid_the_real_axis() {
        for k in KS {
            for s in lambda_symmetry_points(k, 10) {
                assert!(s.im >= 1.0 && (s.re + k as f64).abs() <= 3.0);
            }
        }
    }

    #[test]
    fn filters() {
        let id = IdentityId::Glaisher { k: 3 };
        assert!(matches("glaisher", &id).unwrap());
        assert!(matches("glaisher:k=3", &id).unwrap());
        assert!(!matches("glaisher:k=5", &id).unwrap());
        assert!(matches("*", &id).unwrap());
        assert!(!matches("eta", &id).unwrap());
        assert!(run_suite(&["bogus".into()], None).is_err());
    }

    #[test]
    fn small_suite_passes() {
        let report = run_suite(&["eta".into(), "glaisher".into()], None).unwrap();
        assert_eq!(report.summary.total, 4);
        assert!(report.summary.all_passed, "{:?}", report.reports);
        let ids: Vec<&str> = report.reports.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, vec!["eta", "eta", "eta", "glaisher"]);
    }
}
