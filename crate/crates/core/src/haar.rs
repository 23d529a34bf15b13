//! One-level orthonormal Haar analysis and synthesis.
//!
//! Low-pass `g = (1/√2, 1/√2)` and high-pass `h = (1/√2, -1/√2)`, each output
//! downsampled by 2. Odd-length input is extended by repeating its last sample.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct HaarDecomposition {
    pub approx: Vec<f64>,
    pub detail: Vec<f64>,
    pub original_length: usize,
    pub padded: bool,
}

impl HaarDecomposition {
    /// CSV with header `n,approx,detail`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,approx,detail\n");
        for (n, (a, d)) in self.approx.iter().zip(&self.detail).enumerate() {
            let _ = writeln!(out, "{n},{a},{d}");
        }
        out
    }
}

pub fn haar_dwt1(x: &[f64]) -> Result<HaarDecomposition> {
    if x.len() < 2 {
        return Err(Error::invalid(format!(
            "haar transform needs at least 2 samples, got {}",
            x.len()
        )));
    }
    let padded = x.len() % 2 == 1;
    let half = x.len().div_ceil(2);
    let mut approx = Vec::with_capacity(half);
    let mut detail = Vec::with_capacity(half);
    let last = x[x.len() - 1];
    for n in 0..half {
        let a = x[2 * n];
        let b = x.get(2 * n + 1).copied().unwrap_or(last);
        approx.push((a + b) * FRAC_1_SQRT_2);
        detail.push((a - b) * FRAC_1_SQRT_2);
    }
    Ok(HaarDecomposition {
        approx,
        detail,
        original_length: x.len(),
        padded,
    })
}

pub fn haar_idwt1(dec: &HaarDecomposition) -> Result<Vec<f64>> {
    if dec.approx.len() != dec.detail.len() {
        return Err(Error::invalid(format!(
            "approx ({}) and detail ({}) lengths differ",
            dec.approx.len(),
            dec.detail.len()
        )));
    }
    if dec.original_length.div_ceil(2) != dec.approx.len() || dec.original_length < 2 {
        return Err(Error::invalid(format!(
            "original length {} inconsistent with {} coefficients",
            dec.original_length,
            dec.approx.len()
        )));
    }
    let mut out = Vec::with_capacity(2 * dec.approx.len());
    for (&a, &d) in dec.approx.iter().zip(&dec.detail) {
        out.push((a + d) * FRAC_1_SQRT_2);
        out.push((a - d) * FRAC_1_SQRT_2);
    }
    out.truncate(dec.original_length);
    Ok(out)
}
