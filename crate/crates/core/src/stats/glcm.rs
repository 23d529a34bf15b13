use std::fmt;

use crate::error::{Error, Result};
use crate::image::GrayImage;

const NORMALIZATION_TOLERANCE: f64 = 1e-12;

/// Direction of the unit co-occurrence displacement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Angle {
    Deg0,
    Deg45,
    Deg90,
    Deg135,
}

impl Angle {
    pub const ALL: [Angle; 4] = [Angle::Deg0, Angle::Deg45, Angle::Deg90, Angle::Deg135];

    /// `(row, col)` offset of the paired pixel.
    pub fn offset(self) -> (isize, isize) {
        match self {
            Angle::Deg0 => (0, 1),
            Angle::Deg45 => (-1, 1),
            Angle::Deg90 => (-1, 0),
            Angle::Deg135 => (-1, -1),
        }
    }

    pub fn degrees(self) -> u16 {
        match self {
            Angle::Deg0 => 0,
            Angle::Deg45 => 45,
            Angle::Deg90 => 90,
            Angle::Deg135 => 135,
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}°", self.degrees())
    }
}

/// Normalized co-occurrence matrix, `levels x levels`, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Glcm {
    pub angle: Angle,
    pub levels: usize,
    pub cells: Vec<f64>,
}

impl Glcm {
    /// Wrap an externally built matrix. `cells` must hold `levels²` entries.
    pub fn from_cells(angle: Angle, levels: usize, cells: Vec<f64>) -> Result<Self> {
        if levels == 0 || cells.len() != levels * levels {
            return Err(Error::invalid(format!(
                "expected {levels}x{levels} cells, got {}",
                cells.len()
            )));
        }
        Ok(Glcm {
            angle,
            levels,
            cells,
        })
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.cells[i * self.levels + j]
    }
}

/// Scalar summaries of a co-occurrence matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GlcmFeatures {
    pub angle: Angle,
    pub energy: f64,
    pub entropy: f64,
    pub contrast: f64,
    pub homogeneity: f64,
    /// Absent when either marginal has zero variance.
    pub correlation: Option<f64>,
}

/// `min(max_value + 1, 64)`.
pub fn default_levels(img: &GrayImage) -> usize {
    (img.max_value() as usize + 1).min(64)
}

/// Symmetric, normalized co-occurrence matrix at unit displacement.
///
/// Gray values are binned as `v * levels / (max_value + 1)` when the image has
/// more than `levels` gray values, and used directly otherwise.
pub fn glcm(img: &GrayImage, angle: Angle, levels: usize) -> Result<Glcm> {
    if levels < 2 {
        return Err(Error::invalid(format!(
            "glcm needs at least 2 levels, got {levels}"
        )));
    }
    let span = img.max_value() as usize + 1;
    let quantize = |v: u16| -> usize {
        if span > levels {
            v as usize * levels / span
        } else {
            v as usize
        }
    };
    let (dr, dc) = angle.offset();
    let (h, w) = (img.height() as isize, img.width() as isize);
    let mut counts = vec![0u64; levels * levels];
    let mut pairs = 0u64;
    for r in 0..h {
        let r2 = r + dr;
        if !(0..h).contains(&r2) {
            continue;
        }
        for c in 0..w {
            let c2 = c + dc;
            if !(0..w).contains(&c2) {
                continue;
            }
            let i = quantize(img.get(r as usize, c as usize));
            let j = quantize(img.get(r2 as usize, c2 as usize));
            counts[i * levels + j] += 1;
            counts[j * levels + i] += 1;
            pairs += 2;
        }
    }
    if pairs == 0 {
        return Err(Error::invalid(format!(
            "{}x{} image has no pixel pairs at {angle}",
            img.width(),
            img.height()
        )));
    }
    let total = pairs as f64;
    Ok(Glcm {
        angle,
        levels,
        cells: counts.into_iter().map(|c| c as f64 / total).collect(),
    })
}

pub fn glcm_features(p: &Glcm) -> Result<GlcmFeatures> {
    let sum: f64 = p.cells.iter().sum();
    if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE || p.cells.iter().any(|v| v.is_nan() || *v < 0.0) {
        return Err(Error::invalid(format!(
            "co-occurrence matrix is not normalized (sum {sum})"
        )));
    }
    let n = p.levels;
    let mut energy = 0.0;
    let mut entropy = 0.0;
    let mut contrast = 0.0;
    let mut homogeneity = 0.0;
    let mut mu_i = 0.0;
    let mut mu_j = 0.0;
    for i in 0..n {
        for j in 0..n {
            let v = p.get(i, j);
            if v == 0.0 {
                continue;
            }
            let d = i as f64 - j as f64;
            energy += v * v;
            entropy -= v * v.log2();
            contrast += d * d * v;
            homogeneity += v / (1.0 + d * d);
            mu_i += i as f64 * v;
            mu_j += j as f64 * v;
        }
    }
    let mut var_i = 0.0;
    let mut var_j = 0.0;
    let mut cov = 0.0;
    for i in 0..n {
        for j in 0..n {
            let v = p.get(i, j);
            if v == 0.0 {
                continue;
            }
            let (di, dj) = (i as f64 - mu_i, j as f64 - mu_j);
            var_i += di * di * v;
            var_j += dj * dj * v;
            cov += di * dj * v;
        }
    }
    let denom = (var_i * var_j).sqrt();
    let correlation = (denom > 0.0).then(|| (cov / denom).clamp(-1.0, 1.0));
    Ok(GlcmFeatures {
        angle: p.angle,
        energy,
        entropy: entropy.max(0.0),
        contrast,
        homogeneity,
        correlation,
    })
}
