//! First-order and co-occurrence texture statistics.

mod first_order;
mod glcm;

pub use first_order::{first_order_stats, FirstOrderStats};
pub use glcm::{default_levels, glcm, glcm_features, Angle, Glcm, GlcmFeatures};

use std::fmt::Write as _;

/// Relative deviation of a candidate statistic from a reference value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Deviation {
    /// Percent deviation, or the absolute difference when `absolute_fallback`.
    pub value: f64,
    /// Set when the reference is zero and the candidate is not.
    pub absolute_fallback: bool,
}

/// `|candidate − reference| / |reference| × 100`. A zero reference yields 0
/// for a zero candidate and `|candidate|` (flagged) otherwise.
pub fn percent_deviation(candidate: f64, reference: f64) -> Deviation {
    if reference != 0.0 {
        Deviation {
            value: (candidate - reference).abs() / reference.abs() * 100.0,
            absolute_fallback: false,
        }
    } else if candidate == 0.0 {
        Deviation {
            value: 0.0,
            absolute_fallback: false,
        }
    } else {
        Deviation {
            value: candidate.abs(),
            absolute_fallback: true,
        }
    }
}

/// One subject's statistics for a CSV feature table.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureRow {
    pub subject: String,
    pub first_order: FirstOrderStats,
    pub glcm: GlcmFeatures,
}

pub const FEATURE_CSV_HEADER: &str = "subject,angle,mean,variance,skewness,kurtosis,hist_energy,hist_entropy,glcm_energy,glcm_entropy,contrast,homogeneity,correlation";

/// Feature table with one row per (subject, angle). Undefined correlation is
/// written as an empty field.
pub fn features_csv(rows: &[FeatureRow]) -> String {
    let mut out = String::from(FEATURE_CSV_HEADER);
    out.push('\n');
    for row in rows {
        let f = &row.first_order;
        let g = &row.glcm;
        let corr = g.correlation.map(|c| c.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            row.subject,
            g.angle.degrees(),
            f.mean,
            f.variance,
            f.skewness,
            f.kurtosis,
            f.energy,
            f.entropy,
            g.energy,
            g.entropy,
            g.contrast,
            g.homogeneity,
            corr
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::image::GrayImage;

    #[test]
    fn percent_deviation_cases() {
        assert_eq!(percent_deviation(3.5, 3.5).value, 0.0);
        assert!((percent_deviation(1.04, 1.0).value - 4.0).abs() < 1e-9);
        assert!((percent_deviation(-1.1, -1.0).value - 10.0).abs() < 1e-9);
        assert_eq!(
            percent_deviation(0.0, 0.0),
            Deviation {
                value: 0.0,
                absolute_fallback: false
            }
        );
        assert_eq!(
            percent_deviation(-0.3, 0.0),
            Deviation {
                value: 0.3,
                absolute_fallback: true
            }
        );
    }

    #[test]
    fn feature_csv_has_header_and_rows() {
        let img = GrayImage::from_rows(&[[0, 1], [1, 0]], 1).unwrap();
        let rows: Vec<FeatureRow> = Angle::ALL
            .iter()
            .map(|&a| FeatureRow {
                subject: "img".into(),
                first_order: first_order_stats(&img),
                glcm: glcm_features(&glcm(&img, a, 2).unwrap()).unwrap(),
            })
            .collect();
        let csv = features_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], FEATURE_CSV_HEADER);
        assert_eq!(lines.len(), 5);
        assert!(lines[1].starts_with("img,0,0.5,"));
        assert!(lines[2].starts_with("img,45,"));
        for line in &lines[1..] {
            assert_eq!(line.split(',').count(), 13);
        }
    }
}
