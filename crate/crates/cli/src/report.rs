//! JSON analysis report.

use serde::{Deserialize, Serialize};
use texperiod::{DirectionEstimate, Method, PeriodicityEstimate};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Valley {
    pub index: usize,
    pub value: f64,
    pub prominence: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DirectionReport {
    /// `direct` or `wavelet`.
    pub method: String,
    pub period: Option<usize>,
    /// Valleys of the analysed series: displacement indices for `direct`,
    /// approximation-coefficient indices for `wavelet`.
    pub valleys: Vec<Valley>,
    /// Indices of the valleys that sit on the period lattice.
    pub lattice: Vec<usize>,
    pub spacing_dispersion: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub tool_version: String,
    pub input: String,
    pub width: usize,
    pub height: usize,
    pub mode: String,
    pub prominence: f64,
    pub period_row: Option<usize>,
    pub period_col: Option<usize>,
    pub row: DirectionReport,
    pub col: DirectionReport,
}

impl DirectionReport {
    pub fn from_estimate(est: &DirectionEstimate) -> Self {
        DirectionReport {
            method: match est.method {
                Method::Direct => "direct",
                Method::Wavelet => "wavelet",
            }
            .to_string(),
            period: est.period,
            valleys: est
                .valleys
                .iter()
                .map(|(index, value, prominence)| Valley {
                    index,
                    value,
                    prominence,
                })
                .collect(),
            lattice: est.lattice.clone(),
            spacing_dispersion: est.spacing_dispersion,
        }
    }
}

impl AnalysisReport {
    pub fn new(
        input: &str,
        width: usize,
        height: usize,
        prominence: f64,
        est: &PeriodicityEstimate,
    ) -> Self {
        AnalysisReport {
            tool_version: TOOL_VERSION.to_string(),
            input: input.to_string(),
            width,
            height,
            mode: est.mode.to_string(),
            prominence,
            period_row: est.period_row(),
            period_col: est.period_col(),
            row: DirectionReport::from_estimate(&est.row),
            col: DirectionReport::from_estimate(&est.col),
        }
    }

    pub fn is_periodic(&self) -> bool {
        self.period_row.is_some() && self.period_col.is_some()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report fields are serializable");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}
