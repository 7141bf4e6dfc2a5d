use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A computed value together with a heuristic bound on its error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesValue {
    pub value: Complex64,
    pub err_estimate: f64,
    pub terms_used: usize,
}

impl SeriesValue {
    pub fn new(value: Complex64, err_estimate: f64, terms_used: usize) -> Self {
        SeriesValue {
            value,
            err_estimate: err_estimate.abs(),
            terms_used,
        }
    }

    pub fn exact(value: Complex64) -> Self {
        SeriesValue::new(value, 0.0, 0)
    }
}
