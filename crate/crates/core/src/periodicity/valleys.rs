use crate::error::{Error, Result};

/// Local minima of a series together with their prominence.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValleySet {
    pub indices: Vec<usize>,
    pub values: Vec<f64>,
    /// Depth below the lower of the two flanking peaks.
    pub prominences: Vec<f64>,
}

impl ValleySet {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// `(index, value, prominence)` triples in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, f64, f64)> + '_ {
        self.indices
            .iter()
            .zip(&self.values)
            .zip(&self.prominences)
            .map(|((&i, &v), &p)| (i, v, p))
    }

    pub fn value_at(&self, index: usize) -> Option<f64> {
        self.indices
            .iter()
            .position(|&i| i == index)
            .map(|k| self.values[k])
    }
}

/// Find interior local minima whose prominence is at least
/// `min_prominence_fraction` of the series range.
///
/// A run of equal values strictly lower than both of its neighbours counts as
/// one minimum at its leftmost index. Runs touching either end of the series
/// are never reported, so index 0 is always excluded.
pub fn find_valleys(series: &[f64], min_prominence_fraction: f64) -> Result<ValleySet> {
    if series.len() < 3 {
        return Err(Error::invalid(format!(
            "valley search needs at least 3 samples, got {}",
            series.len()
        )));
    }
    if !(min_prominence_fraction > 0.0 && min_prominence_fraction <= 1.0) {
        return Err(Error::invalid(format!(
            "prominence fraction must be in (0, 1], got {min_prominence_fraction}"
        )));
    }
    if series.iter().any(|v| !v.is_finite()) {
        return Err(Error::invalid("series contains non-finite values"));
    }

    let (lo, hi) = series
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    let threshold = min_prominence_fraction * (hi - lo);

    let n = series.len();
    let mut out = ValleySet::default();
    let mut start = 1;
    while start < n - 1 {
        let v = series[start];
        let mut end = start;
        while end + 1 < n && series[end + 1] == v {
            end += 1;
        }
        if end + 1 < n && series[start - 1] > v && series[end + 1] > v {
            let prominence = prominence(series, start, end);
            if prominence >= threshold && prominence > 0.0 {
                out.indices.push(start);
                out.values.push(v);
                out.prominences.push(prominence);
            }
        }
        start = end + 1;
    }
    Ok(out)
}

/// Walk outwards from the plateau `start..=end` until a strictly lower sample
/// or the series boundary, keeping the highest sample on each side.
fn prominence(series: &[f64], start: usize, end: usize) -> f64 {
    let v = series[start];
    let left_peak = series[..start]
        .iter()
        .rev()
        .take_while(|&&x| x >= v)
        .fold(v, |m, &x| m.max(x));
    let right_peak = series[end + 1..]
        .iter()
        .take_while(|&&x| x >= v)
        .fold(v, |m, &x| m.max(x));
    left_peak.min(right_peak) - v
}
