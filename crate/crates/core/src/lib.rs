pub mod cli;
pub mod error;
pub mod fieldarith;
pub mod report;
mod series_value;
pub mod serieskit;
pub mod steen;
pub mod verify;
pub mod zetalab;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use report::CheckReport;
pub use series_value::SeriesValue;

/// Formats `a+bi` in the notation the command line accepts.
pub fn format_complex(z: Complex64) -> String {
    if z.im < 0.0 || (z.im == 0.0 && z.im.is_sign_negative()) {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// Parses `a+bi`, `a-bi`, `a`, `bi` or `i`; spaces are ignored.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::InvalidParameter(format!("cannot parse complex number '{text}'"));
    let num = |t: &str| t.parse::<f64>().map_err(|_| bad());
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex64::new(num(&s)?, 0.0));
    };
    let coeff = |t: &str| match t {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        t => num(t),
    };
    // the sign that separates the parts is not the leading one nor an exponent sign
    let split = body
        .char_indices()
        .filter(|&(i, c)| (c == '+' || c == '-') && i > 0 && !body[..i].ends_with(['e', 'E']))
        .map(|(i, _)| i)
        .next_back();
    match split {
        Some(i) => Ok(Complex64::new(num(&body[..i])?, coeff(&body[i..])?)),
        None => Ok(Complex64::new(0.0, coeff(body)?)),
    }
}
