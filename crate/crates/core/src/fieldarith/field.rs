use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::character::CharacterTable;
use crate::error::{Error, Result};

/// How a field is specified: `Q`, a quadratic field `Q(sqrt m)`, or an
/// abelian field given by its L-function factorization in a JSON file.
#[derive(Debug, Clone, PartialEq)]
pub enum FieldSpec {
    Rational,
    Quadratic(i64),
    LData(PathBuf),
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// `Q`, `quad:<m>` or `file:<path>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::Rational);
        }
        match s.split_once(':') {
            Some(("quad", m)) => m
                .trim()
                .parse()
                .map(FieldSpec::Quadratic)
                .map_err(|_| Error::InvalidField(format!("bad quadratic parameter in '{s}'"))),
            Some(("file", path)) if !path.is_empty() => Ok(FieldSpec::LData(PathBuf::from(path))),
            _ => Err(Error::InvalidField(format!(
                "expected Q, quad:<m> or file:<path>, got '{s}'"
            ))),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Quadratic(m) => write!(f, "quad:{m}"),
            FieldSpec::LData(p) => write!(f, "file:{}", p.display()),
        }
    }
}

/// Class number, regulator and number of roots of unity, when known.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Knowns {
    pub h: u64,
    #[serde(rename = "R")]
    pub regulator: f64,
    pub w: u64,
}

impl Knowns {
    /// `-h R / w`, the leading Taylor coefficient of the Dedekind zeta function at 0.
    pub fn leading_at_zero(&self) -> f64 {
        -(self.h as f64) * self.regulator / self.w as f64
    }
}

/// On-disk L-data: `zeta_F(s) = zeta(s) * prod_i L(s, chi_i)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LFactorization {
    pub r1: u32,
    pub r2: u32,
    pub abs_disc: u64,
    pub factors: Vec<CharacterFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub knowns: Option<Knowns>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterFile {
    pub modulus: u64,
    pub values: Vec<[f64; 2]>,
}

impl LFactorization {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::LData(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::LData(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FieldKind {
    Rational,
    Quadratic { m: i64 },
    LData { source: String },
}

/// A number field described by its signature, discriminant and the
/// Dirichlet characters whose L-functions factor its Dedekind zeta function.
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    pub kind: FieldKind,
    pub r1: u32,
    pub r2: u32,
    pub degree: u32,
    pub abs_disc: u64,
    pub unit_rank: u32,
    pub factors: Vec<CharacterTable>,
    pub knowns: Option<Knowns>,
}

pub fn make_field(spec: &FieldSpec) -> Result<Field> {
    match spec {
        FieldSpec::Rational => Ok(Field::rational()),
        FieldSpec::Quadratic(m) => Field::quadratic(*m),
        FieldSpec::LData(path) => {
            let data = LFactorization::read(path)?;
            Field::from_ldata(&data, path.display().to_string())
        }
    }
}

impl Field {
    pub fn rational() -> Field {
        Field {
            kind: FieldKind::Rational,
            r1: 1,
            r2: 0,
            degree: 1,
            abs_disc: 1,
            unit_rank: 0,
            factors: Vec::new(),
            knowns: Some(Knowns {
                h: 1,
                regulator: 1.0,
                w: 2,
            }),
        }
    }

    pub fn quadratic(m: i64) -> Result<Field> {
        if m == 0 || m == 1 {
            return Err(Error::InvalidField(format!(
                "m = {m} does not define a quadratic field"
            )));
        }
        if !is_squarefree(m.unsigned_abs()) {
            return Err(Error::InvalidField(format!("m = {m} is not squarefree")));
        }
        let disc = signed_discriminant(m);
        let (r1, r2) = if m > 0 { (2, 0) } else { (0, 1) };
        Ok(Field {
            kind: FieldKind::Quadratic { m },
            r1,
            r2,
            degree: 2,
            abs_disc: disc.unsigned_abs(),
            unit_rank: r1 + r2 - 1,
            factors: vec![CharacterTable::kronecker_character(disc)],
            knowns: quadratic_knowns(m),
        })
    }

    pub fn from_ldata(data: &LFactorization, source: String) -> Result<Field> {
        let degree = data.r1 + 2 * data.r2;
        if degree == 0 {
            return Err(Error::LData("degree r1 + 2 r2 must be positive".into()));
        }
        if data.abs_disc == 0 {
            return Err(Error::LData("abs_disc must be at least 1".into()));
        }
        if data.factors.len() as u32 != degree - 1 {
            return Err(Error::LData(format!(
                "degree {degree} needs {} L-factors, file has {}",
                degree - 1,
                data.factors.len()
            )));
        }
        let factors = data
            .factors
            .iter()
            .map(|c| {
                let values = c
                    .values
                    .iter()
                    .map(|&[re, im]| Complex64::new(re, im))
                    .collect();
                let chi = CharacterTable::new(c.modulus, values)?;
                if chi.is_principal() {
                    return Err(Error::LData(format!(
                        "principal character mod {} cannot be an L-factor",
                        c.modulus
                    )));
                }
                Ok(chi)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Field {
            kind: FieldKind::LData { source },
            r1: data.r1,
            r2: data.r2,
            degree,
            abs_disc: data.abs_disc,
            unit_rank: data.r1 + data.r2 - 1,
            factors,
            knowns: data.knowns,
        })
    }

    pub fn is_totally_real(&self) -> bool {
        self.r2 == 0
    }

    pub fn is_totally_imaginary(&self) -> bool {
        self.r1 == 0
    }

    pub fn label(&self) -> String {
        match &self.kind {
            FieldKind::Rational => "Q".into(),
            FieldKind::Quadratic { m } => format!("quad:{m}"),
            FieldKind::LData { source } => format!("file:{source}"),
        }
    }
}

/// Signed discriminant of `Q(sqrt m)`: `m` when `m = 1 (mod 4)`, else `4m`.
pub fn signed_discriminant(m: i64) -> i64 {
    if m.rem_euclid(4) == 1 {
        m
    } else {
        4 * m
    }
}

pub(crate) fn is_squarefree(n: u64) -> bool {
    let mut p = 2u64;
    let mut n = n;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        if n.is_multiple_of(p) {
            n /= p;
        }
        p += 1;
    }
    true
}

fn quadratic_knowns(m: i64) -> Option<Knowns> {
    let (h, regulator, w) = match m {
        -1 => (1, 1.0, 4),
        -3 => (1, 1.0, 6),
        -2 | -7 | -11 | -19 | -43 | -67 | -163 => (1, 1.0, 2),
        -5 | -6 | -10 | -13 | -15 => (2, 1.0, 2),
        2 => (1, (1.0 + 2f64.sqrt()).ln(), 2),
        3 => (1, (2.0 + 3f64.sqrt()).ln(), 2),
        5 => (1, ((1.0 + 5f64.sqrt()) / 2.0).ln(), 2),
        6 => (1, (5.0 + 2.0 * 6f64.sqrt()).ln(), 2),
        7 => (1, (8.0 + 3.0 * 7f64.sqrt()).ln(), 2),
        13 => (1, ((3.0 + 13f64.sqrt()) / 2.0).ln(), 2),
        _ => return None,
    };
    Some(Knowns { h, regulator, w })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signatures_and_discriminants() {
        let f = make_field(&FieldSpec::Quadratic(5)).unwrap();
        assert_eq!((f.r1, f.r2, f.degree, f.abs_disc), (2, 0, 2, 5));
        let f = make_field(&FieldSpec::Quadratic(-1)).unwrap();
        assert_eq!((f.r1, f.r2, f.degree, f.abs_disc), (0, 1, 2, 4));
        let f = make_field(&FieldSpec::Rational).unwrap();
        assert_eq!(
            (f.r1, f.r2, f.degree, f.abs_disc, f.unit_rank),
            (1, 0, 1, 1, 0)
        );
        assert_eq!(Field::quadratic(-3).unwrap().abs_disc, 3);
        assert_eq!(Field::quadratic(2).unwrap().abs_disc, 8);
    }

    #[test]
    fn spec_grammar_round_trips() {
        for text in ["Q", "quad:-1", "quad:5", "file:fixtures/x.json"] {
            let spec: FieldSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        for bad in ["", "quad:", "quad:x", "R", "file:"] {
            assert!(bad.parse::<FieldSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn rejects_bad_quadratic_parameters() {
        for m in [0, 1, 4, -4, 12, 18] {
            assert!(Field::quadratic(m).is_err(), "m = {m}");
        }
    }

    #[test]
    fn ldata_factor_count_must_match_degree() {
        let text = r#"{"r1": 2, "r2": 0, "abs_disc": 5, "factors": []}"#;
        let data = LFactorization::from_json(text).unwrap();
        assert!(matches!(
            Field::from_ldata(&data, "t".into()),
            Err(Error::LData(_))
        ));
        assert!(LFactorization::from_json("{not json").is_err());
    }

    #[test]
    fn ldata_reproduces_quadratic_field() {
        let text = r#"{"r1": 2, "r2": 0, "abs_disc": 5,
            "factors": [{"modulus": 5, "values": [[0,0],[1,0],[-1,0],[-1,0],[1,0]]}]}"#;
        let data = LFactorization::from_json(text).unwrap();
        let f = Field::from_ldata(&data, "chi5".into()).unwrap();
        assert_eq!(f.factors[0], Field::quadratic(5).unwrap().factors[0]);
    }
}
