//! Command-line front end. `run` does all the work so it can be driven
//! from tests with in-memory output streams.

mod output;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fieldarith::{
    divisor_sigma, divisor_sigma_int, factorize, ideal_count, make_field, FieldSpec,
};
use crate::serieskit::{f_series, residue_term};
use crate::steen::{steen_v, SteenParams};
use crate::verify::{run_suite_with, verify_identity_with, IdentityId};
use crate::zetalab::{dedekind_zeta, dirichlet_l, riemann_zeta, EvalOptions};
use crate::{parse_complex, SeriesValue};

pub use output::OutputFormat;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;

/// Environment variable that supplies a tolerance when `--tol` is absent.
pub const TOL_ENV: &str = "DRL_DEFAULT_TOL";
const TOL_RANGE: (f64, f64) = (1e-14, 1e-2);

#[derive(Debug, Parser)]
#[command(
    name = "drl",
    version,
    about = "Dedekind zeta values, Steen series and identity checks"
)]
struct Cli {
    /// Tolerance for checks, in [1e-14, 1e-2]; defaults per identity
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Term cap for the divisor series
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_terms: usize,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Human)]
    output: OutputFormat,
    /// Worker threads for suites and series
    #[arg(long, global = true)]
    parallelism: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a primitive
    Eval {
        #[command(subcommand)]
        target: EvalTarget,
    },
    /// Check one identity, e.g. `verify main --field quad:5 --k 1 --z 0.4+1.3i`
    /// or `verify main:field=quad:5,k=1,z=0.4+1.3i`
    Verify(VerifyArgs),
    /// Run the default grid of checks
    Suite {
        /// `name` or `name:key=value,...`; repeatable
        #[arg(long)]
        filter: Vec<String>,
    },
    /// Print a table as CSV
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long, default_value = "Q")]
        field: String,
        /// Inclusive range `a..b`
        #[arg(long, allow_hyphen_values = true)]
        range: String,
        /// Exponent for `sigma`
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        ell: i32,
    },
}

#[derive(Debug, Subcommand)]
enum EvalTarget {
    /// Dedekind zeta function
    Zeta {
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Dirichlet L-function of one factor of the field (index from 0), or zeta over Q
    Lfun {
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, default_value_t = 0)]
        factor: usize,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Steen function V(z | params)
    Steen {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// Comma-separated shifts
        #[arg(long, default_value = "0")]
        params: String,
    },
    /// Generalized divisor function
    Sigma {
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        ell: String,
        #[arg(long)]
        n: u64,
    },
    /// Divisor series with the Steen kernel
    Fseries {
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i32,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Residue of the completed product at an integer pole
    Residue {
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i32,
        #[arg(long, allow_hyphen_values = true)]
        pole: i32,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Identity name, or the full `name:key=value,...` form
    id: String,
    #[arg(long)]
    field: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    ell: Option<String>,
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    d: Option<String>,
}

impl VerifyArgs {
    fn identity(&self) -> Result<IdentityId> {
        let flags = [
            ("field", &self.field),
            ("k", &self.k),
            ("z", &self.z),
            ("s", &self.s),
            ("m", &self.m),
            ("alpha", &self.alpha),
            ("ell", &self.ell),
            ("n", &self.n),
            ("d", &self.d),
        ];
        let given: BTreeMap<String, String> = flags
            .into_iter()
            .filter_map(|(k, v)| v.as_ref().map(|v| (k.to_string(), v.clone())))
            .collect();
        if self.id.contains(':') {
            if !given.is_empty() {
                return Err(Error::InvalidParameter(
                    "give parameters either inline or as flags, not both".into(),
                ));
            }
            return self.id.parse();
        }
        IdentityId::from_parts(&self.id, &given)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    #[value(name = "ideal_counts")]
    IdealCounts,
    Sigma,
    #[value(name = "zeta_values")]
    ZetaValues,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidField(_)
        | Error::LData(_)
        | Error::InvalidParameter(_)
        | Error::BernoulliIndex(_) => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

fn resolve_tol(flag: Option<f64>, env: Option<String>) -> Result<Option<f64>> {
    let tol = match (flag, env) {
        (Some(t), _) => Some(t),
        (None, Some(text)) => Some(text.trim().parse::<f64>().map_err(|_| {
            Error::InvalidParameter(format!("{TOL_ENV} must be a number, got '{text}'"))
        })?),
        (None, None) => None,
    };
    if let Some(t) = tol {
        if !(TOL_RANGE.0..=TOL_RANGE.1).contains(&t) {
            return Err(Error::InvalidParameter(format!(
                "tolerance {t:e} outside [1e-14, 1e-2]"
            )));
        }
    }
    Ok(tol)
}

fn parse_range(text: &str) -> Result<(i64, i64)> {
    let bad = || Error::InvalidParameter(format!("expected a range a..b, got '{text}'"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    // output is buffered so the worker pool never touches the caller's stream
    let mut buf = Vec::new();
    let result = match cli.parallelism {
        Some(0) => Err(Error::InvalidParameter(
            "--parallelism must be at least 1".into(),
        )),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))
            .and_then(|pool| pool.install(|| execute(&cli, &mut buf))),
        None => execute(&cli, &mut buf),
    };
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let tol = resolve_tol(cli.tol, std::env::var(TOL_ENV).ok())?;
    let opts = EvalOptions {
        max_terms: cli.max_terms,
        ..EvalOptions::default()
    };
    let fmt = cli.output;
    match &cli.command {
        Command::Eval { target } => {
            let v = eval(target, &opts)?;
            output::series_value(out, fmt, &v)?;
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            let id = args.identity()?;
            let report = verify_identity_with(&id, tol.unwrap_or_else(|| id.default_tol()), &opts)?;
            output::reports(out, fmt, std::slice::from_ref(&report))?;
            Ok(if report.pass {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::Suite { filter } => {
            let suite = run_suite_with(filter, tol, &opts)?;
            output::suite(out, fmt, &suite)?;
            Ok(if suite.summary.all_passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::Table {
            kind,
            field,
            range,
            ell,
        } => {
            table(out, fmt, *kind, field, range, *ell)?;
            Ok(EXIT_OK)
        }
    }
}

fn field_from(text: &str) -> Result<crate::fieldarith::Field> {
    make_field(&text.parse::<FieldSpec>()?)
}

fn eval(target: &EvalTarget, opts: &EvalOptions) -> Result<SeriesValue> {
    match target {
        EvalTarget::Zeta { field, s } => Ok(SeriesValue::exact(dedekind_zeta(
            &field_from(field)?,
            parse_complex(s)?,
        )?)),
        EvalTarget::Lfun { field, factor, s } => {
            let field = field_from(field)?;
            let s = parse_complex(s)?;
            if field.factors.is_empty() {
                return Ok(SeriesValue::exact(riemann_zeta(s)?));
            }
            let chi = field.factors.get(*factor).ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "field has {} L-factors, no index {factor}",
                    field.factors.len()
                ))
            })?;
            Ok(SeriesValue::exact(dirichlet_l(chi, s)?))
        }
        EvalTarget::Steen { z, params } => {
            let shifts = params
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<f64>()
                        .map_err(|_| Error::InvalidParameter(format!("bad Steen parameter '{p}'")))
                })
                .collect::<Result<Vec<_>>>()?;
            steen_v(parse_complex(z)?, &SteenParams::new(shifts)?, opts)
        }
        EvalTarget::Sigma { field, ell, n } => Ok(SeriesValue::exact(divisor_sigma(
            &field_from(field)?,
            parse_complex(ell)?,
            *n,
        )?)),
        EvalTarget::Fseries { field, k, z } => {
            f_series(&field_from(field)?, *k, parse_complex(z)?, opts)
        }
        EvalTarget::Residue { field, k, pole, z } => {
            let r = residue_term(&field_from(field)?, *k, *pole, parse_complex(z)?, opts)?;
            Ok(SeriesValue::new(r.value, 0.0, 0))
        }
    }
}

fn table(
    out: &mut dyn Write,
    fmt: OutputFormat,
    kind: TableKind,
    field: &str,
    range: &str,
    ell: i32,
) -> Result<()> {
    let field = field_from(field)?;
    let (a, b) = parse_range(range)?;
    let rows: Vec<(String, Vec<String>)> = match kind {
        TableKind::IdealCounts | TableKind::Sigma => {
            if a < 1 {
                return Err(Error::InvalidParameter(
                    "range must start at 1 or later".into(),
                ));
            }
            (a..=b)
                .map(|n| {
                    let n = n as u64;
                    let v = match kind {
                        TableKind::IdealCounts => ideal_count(&field, n)?.to_string(),
                        _ => divisor_sigma_int(&field, ell, &factorize(n)?).to_string(),
                    };
                    Ok((n.to_string(), vec![v]))
                })
                .collect::<Result<_>>()?
        }
        TableKind::ZetaValues => (a..=b)
            .filter(|&s| s != 1)
            .map(|s| {
                let v = dedekind_zeta(&field, Complex64::new(s as f64, 0.0))?;
                Ok((s.to_string(), vec![v.re.to_string(), v.im.to_string()]))
            })
            .collect::<Result<_>>()?,
    };
    let header: &[&str] = match kind {
        TableKind::IdealCounts => &["n", "a_F"],
        TableKind::Sigma => &["n", "sigma"],
        TableKind::ZetaValues => &["s", "re", "im"],
    };
    output::table(out, fmt, header, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("drl").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn tolerance_bounds() {
        assert_eq!(resolve_tol(None, None).unwrap(), None);
        assert_eq!(resolve_tol(None, Some("1e-9".into())).unwrap(), Some(1e-9));
        assert_eq!(
            resolve_tol(Some(1e-6), Some("1e-9".into())).unwrap(),
            Some(1e-6)
        );
        assert!(resolve_tol(Some(1e-15), None).is_err());
        assert!(resolve_tol(Some(0.1), None).is_err());
        assert!(resolve_tol(None, Some("x".into())).is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..20").unwrap(), (1, 20));
        assert_eq!(parse_range("-5..3").unwrap(), (-5, 3));
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("1-3").is_err());
    }

    #[test]
    fn verify_flag_and_inline_forms_agree() {
        let (a, out_a, _) = run_str(&[
            "--output", "json", "verify", "main", "--field", "quad:-1", "--k", "-1", "--z", "i",
        ]);
        let (b, out_b, _) = run_str(&["--output", "json", "verify", "main:field=quad:-1,k=-1,z=i"]);
        assert_eq!((a, b), (EXIT_OK, EXIT_OK));
        assert_eq!(out_a, out_b);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["verify", "nope"]).0, EXIT_USAGE);
        assert_eq!(
            run_str(&["eval", "zeta", "--field", "quad:4", "--s", "2"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_str(&["--tol", "1", "verify", "eta", "--z", "i"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_str(&["--parallelism", "0", "verify", "eta", "--z", "i"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn domain_errors() {
        assert_eq!(run_str(&["eval", "zeta", "--s", "1"]).0, EXIT_DOMAIN);
        assert_eq!(
            run_str(&["eval", "fseries", "--k", "1", "--z", "0.01i"]).0,
            EXIT_DOMAIN
        );
    }
}
