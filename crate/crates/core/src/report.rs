use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Outcome of checking one identity instance: both sides and their distance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub params: BTreeMap<String, String>,
    #[serde(with = "complex_pair")]
    pub lhs: Complex64,
    #[serde(with = "complex_pair")]
    pub rhs: Complex64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub pass: bool,
    pub tol: f64,
    pub notes: String,
}

impl CheckReport {
    /// Passes when either the absolute or the relative error is within `tol`.
    pub fn new(
        id: impl Into<String>,
        params: BTreeMap<String, String>,
        lhs: Complex64,
        rhs: Complex64,
        tol: f64,
        notes: impl Into<String>,
    ) -> Self {
        let abs_err = (lhs - rhs).norm();
        let rel_err = abs_err / lhs.norm().max(rhs.norm()).max(1e-300);
        CheckReport {
            id: id.into(),
            params,
            lhs,
            rhs,
            abs_err,
            rel_err,
            pass: abs_err <= tol || rel_err <= tol,
            tol,
            notes: notes.into(),
        }
    }
}

mod complex_pair {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut params = BTreeMap::new();
        params.insert("z".to_string(), "0.3+1.2i".to_string());
        let r = CheckReport::new(
            "eta",
            params,
            Complex64::new(0.1, -1.0 / 3.0),
            Complex64::new(0.2, -0.333_333_333_333_3),
            1e-10,
            "",
        );
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.starts_with(r#"{"id":"eta","params":{"z":"0.3+1.2i"},"lhs":[0.1,"#));
        assert_eq!(serde_json::from_str::<CheckReport>(&text).unwrap(), r);
        assert!(!r.pass);
    }
}
