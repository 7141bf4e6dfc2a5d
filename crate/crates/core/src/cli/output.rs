use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::verify::SuiteReport;
use crate::{format_complex, SeriesValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Json,
    Csv,
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidParameter(format!("cannot write output: {e}"))
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string(value).map_err(|e| Error::InvalidParameter(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)
}

pub fn series_value(out: &mut dyn Write, fmt: OutputFormat, v: &SeriesValue) -> Result<()> {
    match fmt {
        OutputFormat::Human => writeln!(
            out,
            "value: {}\nerr_estimate: {:e}\nterms_used: {}",
            format_complex(v.value),
            v.err_estimate,
            v.terms_used
        )
        .map_err(io),
        OutputFormat::Json => json_line(out, v),
        OutputFormat::Csv => writeln!(
            out,
            "re,im,err_estimate,terms_used\n{},{},{:e},{}",
            v.value.re, v.value.im, v.err_estimate, v.terms_used
        )
        .map_err(io),
    }
}

fn params_text(r: &CheckReport) -> String {
    r.params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

const CSV_HEADER: &str = "id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass,tol,notes";

fn csv_row(r: &CheckReport) -> String {
    format!(
        "{},{},{},{},{},{},{:e},{:e},{},{:e},{}",
        r.id,
        csv_field(&params_text(r)),
        r.lhs.re,
        r.lhs.im,
        r.rhs.re,
        r.rhs.im,
        r.abs_err,
        r.rel_err,
        r.pass,
        r.tol,
        csv_field(&r.notes)
    )
}

fn human_row(r: &CheckReport) -> String {
    let mut line = format!(
        "{} {}:{} lhs={} rhs={} abs_err={:.3e} rel_err={:.3e} tol={:e}",
        if r.pass { "PASS" } else { "FAIL" },
        r.id,
        params_text(r),
        format_complex(r.lhs),
        format_complex(r.rhs),
        r.abs_err,
        r.rel_err,
        r.tol
    );
    if !r.notes.is_empty() {
        line.push_str(&format!(" ({})", r.notes));
    }
    line
}

pub fn reports(out: &mut dyn Write, fmt: OutputFormat, reports: &[CheckReport]) -> Result<()> {
    match fmt {
        OutputFormat::Human => reports
            .iter()
            .try_for_each(|r| writeln!(out, "{}", human_row(r)).map_err(io)),
        OutputFormat::Json => reports.iter().try_for_each(|r| json_line(out, r)),
        OutputFormat::Csv => {
            writeln!(out, "{CSV_HEADER}").map_err(io)?;
            reports
                .iter()
                .try_for_each(|r| writeln!(out, "{}", csv_row(r)).map_err(io))
        }
    }
}

pub fn suite(out: &mut dyn Write, fmt: OutputFormat, suite: &SuiteReport) -> Result<()> {
    reports(out, fmt, &suite.reports)?;
    let s = &suite.summary;
    match fmt {
        OutputFormat::Json => json_line(out, &serde_json::json!({ "summary": s })),
        OutputFormat::Human => {
            writeln!(
                out,
                "{} checks: {} passed, {} failed, {} flagged",
                s.total, s.passed, s.failed, s.flagged
            )
            .map_err(io)?;
            s.worst_rel_err
                .iter()
                .try_for_each(|(id, e)| writeln!(out, "  worst rel_err {id}: {e:.3e}").map_err(io))
        }
        OutputFormat::Csv => Ok(()),
    }
}

pub fn table(
    out: &mut dyn Write,
    fmt: OutputFormat,
    header: &[&str],
    rows: &[(String, Vec<String>)],
) -> Result<()> {
    if fmt == OutputFormat::Json {
        return rows.iter().try_for_each(|(key, vals)| {
            let obj: serde_json::Map<String, serde_json::Value> = header
                .iter()
                .zip(std::iter::once(key).chain(vals))
                .map(|(h, v)| (h.to_string(), serde_json::Value::String(v.clone())))
                .collect();
            json_line(out, &obj)
        });
    }
    writeln!(out, "{}", header.join(",")).map_err(io)?;
    rows.iter()
        .try_for_each(|(key, vals)| writeln!(out, "{key},{}", vals.join(",")).map_err(io))
}
