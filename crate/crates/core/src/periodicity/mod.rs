//! Period estimation from superposed DMF series.
//!
//! Two readings of a series are supported. The direct reading takes the
//! valleys of the DMF itself; the wavelet reading takes the valleys of its
//! one-level Haar approximation and doubles the coefficient spacing to undo
//! the downsampling. In both, only valleys on a common period lattice count
//! as deep (see [`lattice`]), and the period is the median spacing between
//! successive deep valleys.

mod lattice;
mod valleys;

pub use valleys::{find_valleys, ValleySet};

use std::fmt;

use crate::dmf::{summed_col_dmf, summed_row_dmf, Direction, DmfSeries};
use crate::error::{Error, Result};
use crate::haar::haar_dwt1;
use crate::image::GrayImage;
use lattice::{on_lattice, period_from_spacings, LatticeDomain};

/// Default prominence threshold as a fraction of the series range.
pub const DEFAULT_PROMINENCE: f64 = 0.05;

/// Auto mode falls back to the wavelet reading above this spacing dispersion.
pub const AUTO_DISPERSION_LIMIT: f64 = 0.25;

const DIRECT_TOLERANCE: f64 = 0.2;
const WAVELET_TOLERANCE: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Direct,
    Wavelet,
    Auto,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Mode::Direct),
            "wavelet" => Ok(Mode::Wavelet),
            "auto" => Ok(Mode::Auto),
            other => Err(Error::invalid(format!(
                "unknown mode '{other}', expected direct, wavelet or auto"
            ))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Direct => "direct",
            Mode::Wavelet => "wavelet",
            Mode::Auto => "auto",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    Wavelet,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Direct => "direct",
            Method::Wavelet => "wavelet",
        })
    }
}

/// Period evidence for one direction.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectionEstimate {
    pub direction: Direction,
    pub method: Method,
    /// Period in pixels, absent when the series shows no deep valley.
    pub period: Option<usize>,
    /// All valleys passing the prominence threshold. Indices are displacements
    /// for the direct method and approximation-coefficient positions for the
    /// wavelet method.
    pub valleys: ValleySet,
    /// Subset of `valleys` lying on the detected period lattice.
    pub lattice: Vec<usize>,
    /// `max |spacing − median| / median`, including the first lattice valley
    /// as a spacing from the origin.
    pub spacing_dispersion: Option<f64>,
}

impl DirectionEstimate {
    fn empty(direction: Direction, method: Method, valleys: ValleySet) -> Self {
        DirectionEstimate {
            direction,
            method,
            period: None,
            valleys,
            lattice: Vec::new(),
            spacing_dispersion: None,
        }
    }
}

/// Row and column periods of an image. The texel is `period_col x period_row`
/// (rows x columns).
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicityEstimate {
    pub mode: Mode,
    pub row: DirectionEstimate,
    pub col: DirectionEstimate,
}

impl PeriodicityEstimate {
    /// Repeat length along rows, i.e. texel width.
    pub fn period_row(&self) -> Option<usize> {
        self.row.period
    }

    /// Repeat length along columns, i.e. texel height.
    pub fn period_col(&self) -> Option<usize> {
        self.col.period
    }

    /// `(height, width)` of the texel when both periods were found.
    pub fn texel_size(&self) -> Option<(usize, usize)> {
        Some((self.period_col()?, self.period_row()?))
    }
}

fn normalized_direct(series: &[f64]) -> Vec<f64> {
    let len = series.len();
    series
        .iter()
        .enumerate()
        .map(|(d, &v)| v / (len - d) as f64)
        .collect()
}

/// Direct reading: lattice valleys of the series itself.
pub fn estimate_period_direct(
    series: &DmfSeries,
    min_prominence_fraction: f64,
) -> Result<DirectionEstimate> {
    let values = series.as_f64();
    let valleys = find_valleys(&values, min_prominence_fraction)?;
    let normalized = normalized_direct(&values);
    let domain = LatticeDomain {
        normalized: &normalized,
        skip: 1,
        stride: 1,
        tolerance: DIRECT_TOLERANCE,
        slack: 0,
        extent: values.len(),
    };
    let Some(step) = domain.fundamental(&valleys.indices) else {
        return Ok(DirectionEstimate::empty(
            series.direction,
            Method::Direct,
            valleys,
        ));
    };
    let lattice = on_lattice(&valleys.indices, &valleys.values, step, |i| (i, i));
    let (period, spacing_dispersion) = period_from_spacings(&lattice, values.len());
    Ok(DirectionEstimate {
        direction: series.direction,
        method: Method::Direct,
        period,
        valleys,
        lattice,
        spacing_dispersion,
    })
}

/// Wavelet reading: lattice valleys of the Haar approximation coefficients,
/// scaled back to pixels. Odd periods come out within one pixel.
pub fn estimate_period_wavelet(
    series: &DmfSeries,
    min_prominence_fraction: f64,
) -> Result<DirectionEstimate> {
    if series.len() < 4 {
        return Err(Error::invalid(format!(
            "wavelet reading needs a series of at least 4 samples, got {}",
            series.len()
        )));
    }
    let values = series.as_f64();
    let len = values.len();
    let approx = haar_dwt1(&values)?.approx;
    if approx.len() < 3 {
        return Ok(DirectionEstimate::empty(
            series.direction,
            Method::Wavelet,
            ValleySet::default(),
        ));
    }
    let valleys = find_valleys(&approx, min_prominence_fraction)?;

    // mean number of squared differences behind the pair (2n, 2n+1)
    let normalized: Vec<f64> = approx
        .iter()
        .enumerate()
        .map(|(n, &a)| {
            let first = (len - 2 * n) as f64;
            let second = if 2 * n + 1 < len {
                (len - 2 * n - 1) as f64
            } else {
                first
            };
            a / ((first + second) / 2.0)
        })
        .collect();
    let candidates: Vec<usize> = valleys
        .indices
        .iter()
        .flat_map(|&n| [2 * n, 2 * n + 1])
        .filter(|&q| q >= 2)
        .collect();
    let domain = LatticeDomain {
        normalized: &normalized,
        skip: 1,
        stride: 2,
        tolerance: WAVELET_TOLERANCE,
        slack: 1,
        extent: len,
    };
    let Some(step) = domain.fundamental(&candidates) else {
        return Ok(DirectionEstimate::empty(
            series.direction,
            Method::Wavelet,
            valleys,
        ));
    };
    let lattice = on_lattice(&valleys.indices, &valleys.values, step, |n| {
        (2 * n, 2 * n + 1)
    });
    let (coeff_period, spacing_dispersion) = period_from_spacings(&lattice, approx.len());
    let period = coeff_period.map(|p| 2 * p).filter(|&p| p >= 1 && p < len);
    Ok(DirectionEstimate {
        direction: series.direction,
        method: Method::Wavelet,
        period,
        valleys,
        lattice,
        spacing_dispersion,
    })
}

/// Among `p - 1`, `p`, `p + 1`, the displacement with the smallest DMF value
/// (ties to the smaller displacement).
pub fn refine_period(series: &DmfSeries, period: usize) -> usize {
    let lo = period.saturating_sub(1).max(1);
    let hi = (period + 1).min(series.len().saturating_sub(1));
    (lo..=hi)
        .min_by_key(|&d| (series.values[d], d))
        .unwrap_or(period)
}

fn estimate_direction(series: &DmfSeries, mode: Mode, frac: f64) -> Result<DirectionEstimate> {
    match mode {
        Mode::Direct => estimate_period_direct(series, frac),
        Mode::Wavelet => estimate_period_wavelet(series, frac),
        Mode::Auto => {
            let direct = estimate_period_direct(series, frac)?;
            let settled = direct.period.is_some()
                && direct
                    .spacing_dispersion
                    .is_some_and(|d| d <= AUTO_DISPERSION_LIMIT);
            if settled {
                return Ok(direct);
            }
            let mut wavelet = estimate_period_wavelet(series, frac)?;
            match wavelet.period {
                Some(p) => {
                    wavelet.period = Some(refine_period(series, p));
                    Ok(wavelet)
                }
                None => Ok(direct),
            }
        }
    }
}

/// Estimate row and column periods of `img`.
pub fn analyze_image(
    img: &GrayImage,
    mode: Mode,
    min_prominence_fraction: f64,
) -> Result<PeriodicityEstimate> {
    if img.width() < 4 || img.height() < 4 {
        return Err(Error::invalid(format!(
            "periodicity analysis needs at least 4x4 pixels, got {}x{}",
            img.width(),
            img.height()
        )));
    }
    let row_series = summed_row_dmf(img)?;
    let col_series = summed_col_dmf(img)?;
    Ok(PeriodicityEstimate {
        mode,
        row: estimate_direction(&row_series, mode, min_prominence_fraction)?,
        col: estimate_direction(&col_series, mode, min_prominence_fraction)?,
    })
}
