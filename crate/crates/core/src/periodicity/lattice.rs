//! Selection of the valleys that sit on a common period lattice.
//!
//! A texel period `P` leaves deep valleys at every multiple `kP`; textures also
//! produce shallower in-period minima that are not on the lattice. Each
//! candidate step is scored by the worst (largest) per-addend series value over
//! its multiples, which stays near the noise floor only for the true lattice and
//! its multiples. The fundamental is the smallest candidate dividing the best
//! scorer whose score is within `tolerance` of it.

/// Per-domain lattice parameters.
pub(crate) struct LatticeDomain<'a> {
    /// Series values divided by the number of squared differences behind them.
    pub normalized: &'a [f64],
    /// Number of leading samples excluded from the baseline median.
    pub skip: usize,
    /// Series samples per unit of the candidate step (1 direct, 2 wavelet).
    pub stride: usize,
    /// Fraction of the (baseline − best score) gap accepted for divisors.
    pub tolerance: f64,
    /// Allowed mismatch, in steps, when testing divisibility.
    pub slack: usize,
    /// Length of the original displacement axis.
    pub extent: usize,
}

impl LatticeDomain<'_> {
    /// Sample indices probed for candidate step `q` (in displacement units).
    fn multiples(&self, q: usize) -> Vec<usize> {
        (1..)
            .map(|k| k * q)
            .take_while(|&d| d < self.extent)
            .map(|d| d / self.stride)
            .filter(|&i| i < self.normalized.len())
            .collect()
    }

    fn score(&self, q: usize) -> Option<f64> {
        self.multiples(q)
            .into_iter()
            .map(|i| self.normalized[i])
            .reduce(f64::max)
    }

    fn baseline(&self) -> f64 {
        let mut tail: Vec<f64> = self.normalized.iter().skip(self.skip).copied().collect();
        if tail.is_empty() {
            return 0.0;
        }
        tail.sort_by(f64::total_cmp);
        tail[(tail.len() - 1) / 2]
    }

    /// Pick the fundamental step among `candidates` (displacement units).
    pub fn fundamental(&self, candidates: &[usize]) -> Option<usize> {
        let mut scored: Vec<(usize, f64)> = candidates
            .iter()
            .filter(|&&q| q >= 1 && q < self.extent)
            .filter_map(|&q| self.score(q).map(|s| (q, s)))
            .collect();
        scored.sort_by_key(|&(q, _)| q);
        scored.dedup_by_key(|&mut (q, _)| q);
        let &(best_q, best) = scored
            .iter()
            .min_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)))?;
        // an exactly zero lattice certifies exact repetition; divisors must match it
        let accept = if best == 0.0 {
            0.0
        } else {
            best + self.tolerance * (self.baseline() - best).max(0.0)
        };
        scored
            .iter()
            .take_while(|&&(q, _)| q <= best_q)
            .find(|&&(q, s)| {
                let k = ((best_q as f64 / q as f64).round() as usize).max(1);
                best_q.abs_diff(k * q) <= self.slack && s <= accept
            })
            .map(|&(q, _)| q)
    }
}

/// Keep the valleys lying within one displacement of a multiple of `step`,
/// at most one (the lowest) per multiple. `span` maps a valley index to the
/// displacement range it covers.
pub(crate) fn on_lattice(
    indices: &[usize],
    values: &[f64],
    step: usize,
    span: impl Fn(usize) -> (usize, usize),
) -> Vec<usize> {
    let mut best: Vec<(usize, usize, f64)> = Vec::new();
    for (&i, &v) in indices.iter().zip(values) {
        let (lo, hi) = span(i);
        let hit = (lo..=hi).find_map(|d| {
            let k = (d + step / 2) / step;
            (k >= 1 && d.abs_diff(k * step) <= 1).then_some(k)
        });
        let Some(k) = hit else { continue };
        match best.iter_mut().find(|(kk, _, _)| *kk == k) {
            Some(slot) if v < slot.2 => *slot = (k, i, v),
            Some(_) => {}
            None => best.push((k, i, v)),
        }
    }
    let mut out: Vec<usize> = best.into_iter().map(|(_, i, _)| i).collect();
    out.sort_unstable();
    out
}

/// Period (in index units) from lattice valleys: the lower median of successive
/// spacings, with late valleys dropped when enough early ones exist. Also
/// returns the dispersion `max |s − m| / m` over the spacings and the first
/// valley index.
pub(crate) fn period_from_spacings(valleys: &[usize], len: usize) -> (Option<usize>, Option<f64>) {
    match valleys {
        [] => (None, None),
        [only] => (Some(*only), Some(0.0)),
        _ => {
            let tail_start = len - len.div_ceil(10);
            let early: Vec<usize> = valleys
                .iter()
                .copied()
                .filter(|&i| i < tail_start)
                .collect();
            let used = if early.len() >= 3 {
                &early[..]
            } else {
                valleys
            };
            let mut spacings: Vec<usize> = used.windows(2).map(|w| w[1] - w[0]).collect();
            spacings.sort_unstable();
            let median = spacings[(spacings.len() - 1) / 2];
            let dispersion = spacings
                .iter()
                .chain(std::iter::once(&used[0]))
                .map(|&s| s.abs_diff(median) as f64 / median as f64)
                .fold(0.0, f64::max);
            (Some(median), Some(dispersion))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spacing_median_and_dispersion() {
        assert_eq!(period_from_spacings(&[], 20), (None, None));
        assert_eq!(period_from_spacings(&[7], 20), (Some(7), Some(0.0)));
        assert_eq!(period_from_spacings(&[5, 10, 15], 20), (Some(5), Some(0.0)));
        let (p, d) = period_from_spacings(&[4, 10, 15, 20], 40);
        assert_eq!(p, Some(5));
        assert!((d.unwrap() - 0.2).abs() < 1e-12);
    }

    #[test]
    fn tail_valleys_leave_the_median() {
        // 97 sits in the last 10% and is ignored once three earlier valleys exist
        let (p, _) = period_from_spacings(&[10, 20, 30, 97], 100);
        assert_eq!(p, Some(10));
        let (p, _) = period_from_spacings(&[10, 20, 97], 100);
        assert_eq!(p, Some(10));
    }

    #[test]
    fn lattice_keeps_lowest_per_multiple() {
        let idx = [3, 5, 6, 10, 13];
        let vals = [1.0, 0.5, 0.2, 0.0, 3.0];
        assert_eq!(on_lattice(&idx, &vals, 5, |i| (i, i)), vec![6, 10]);
    }

    #[test]
    fn fundamental_prefers_smallest_divisor() {
        // zeros at multiples of 4, a spurious shallow dip at 2
        let normalized: Vec<f64> = (0..24)
            .map(|d| {
                if d % 4 == 0 {
                    0.0
                } else if d % 4 == 2 {
                    0.6
                } else {
                    1.0
                }
            })
            .collect();
        let dom = LatticeDomain {
            normalized: &normalized,
            skip: 1,
            stride: 1,
            tolerance: 0.2,
            slack: 0,
            extent: 24,
        };
        assert_eq!(dom.fundamental(&[2, 4, 8, 12]), Some(4));
        assert_eq!(dom.fundamental(&[8, 12]), Some(8));
        assert_eq!(dom.fundamental(&[]), None);
    }
}
