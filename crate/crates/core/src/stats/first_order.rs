use crate::image::GrayImage;

/// Moments and information measures of the gray-level histogram.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FirstOrderStats {
    pub mean: f64,
    pub variance: f64,
    /// `μ₃ / σ³`; 0 when `degenerate`.
    pub skewness: f64,
    /// `μ₄ / σ⁴` (not excess); 0 when `degenerate`.
    pub kurtosis: f64,
    /// `Σ h(k)²` over the normalized histogram.
    pub energy: f64,
    /// `−Σ h(k) log₂ h(k)` in bits.
    pub entropy: f64,
    /// True when the variance is zero and skewness/kurtosis are undefined.
    pub degenerate: bool,
}

pub fn first_order_stats(img: &GrayImage) -> FirstOrderStats {
    let mut hist = vec![0u64; img.max_value() as usize + 1];
    for &p in img.pixels() {
        hist[p as usize] += 1;
    }
    let total = img.pixels().len() as f64;
    let probs: Vec<(f64, f64)> = hist
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(k, &c)| (k as f64, c as f64 / total))
        .collect();

    let mean: f64 = probs.iter().map(|(k, h)| k * h).sum();
    let central =
        |order: i32| -> f64 { probs.iter().map(|(k, h)| (k - mean).powi(order) * h).sum() };
    let variance = central(2);
    let energy = probs.iter().map(|(_, h)| h * h).sum();
    let entropy = -probs.iter().map(|(_, h)| h * h.log2()).sum::<f64>();

    let degenerate = variance <= 0.0;
    let (skewness, kurtosis) = if degenerate {
        (0.0, 0.0)
    } else {
        let sd = variance.sqrt();
        (central(3) / sd.powi(3), central(4) / (variance * variance))
    };
    FirstOrderStats {
        mean,
        variance,
        skewness,
        kurtosis,
        energy,
        entropy: entropy.max(0.0),
        degenerate,
    }
}
