//! Distance matching functions.
//!
//! For a vector `g` of length `L`, `d(Δ) = Σ_{i=0}^{L-Δ-1} (g(i) - g(i+Δ))²`.
//! The superposed form sums `d` over every row (or every column) of an image,
//! so a period shared by all rows shows up as a deep valley at its multiples.
//! All values are exact integers.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::image::GrayImage;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Shifts along each row (horizontal displacement); period = texel width.
    Row,
    /// Shifts along each column (vertical displacement); period = texel height.
    Column,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Row => "row",
            Direction::Column => "column",
        })
    }
}

/// Superposed DMF values indexed by displacement, `values[0] == 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DmfSeries {
    pub direction: Direction,
    pub values: Vec<u64>,
}

impl DmfSeries {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn as_f64(&self) -> Vec<f64> {
        self.values.iter().map(|&v| v as f64).collect()
    }

    /// CSV with header `delta,value`, one line per displacement.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("delta,value\n");
        for (delta, v) in self.values.iter().enumerate() {
            let _ = writeln!(out, "{delta},{v}");
        }
        out
    }
}

/// One-dimensional DMF of `g` for every displacement `0..g.len()`.
pub fn vector_dmf<T: Copy + Into<i64>>(g: &[T]) -> Result<Vec<u64>> {
    if g.len() < 2 {
        return Err(Error::invalid(format!(
            "distance matching needs at least 2 samples, got {}",
            g.len()
        )));
    }
    let g: Vec<i64> = g.iter().map(|&v| v.into()).collect();
    let mut out = vec![0u64; g.len()];
    accumulate_dmf(&g, &mut out);
    Ok(out)
}

fn accumulate_dmf(g: &[i64], acc: &mut [u64]) {
    let len = g.len();
    for (delta, slot) in acc.iter_mut().enumerate().skip(1) {
        let sum: u64 = g[..len - delta]
            .iter()
            .zip(&g[delta..])
            .map(|(&a, &b)| {
                let d = a.abs_diff(b);
                d * d
            })
            .sum();
        *slot += sum;
    }
}

/// Element-wise sum of the DMFs of all image rows. Length equals the width.
pub fn summed_row_dmf(img: &GrayImage) -> Result<DmfSeries> {
    if img.width() < 2 {
        return Err(Error::invalid(format!(
            "row DMF needs width >= 2, got {}",
            img.width()
        )));
    }
    let mut values = vec![0u64; img.width()];
    let mut row = vec![0i64; img.width()];
    for r in img.rows() {
        for (dst, &p) in row.iter_mut().zip(r) {
            *dst = p as i64;
        }
        accumulate_dmf(&row, &mut values);
    }
    Ok(DmfSeries {
        direction: Direction::Row,
        values,
    })
}

/// Element-wise sum of the DMFs of all image columns. Length equals the height.
pub fn summed_col_dmf(img: &GrayImage) -> Result<DmfSeries> {
    if img.height() < 2 {
        return Err(Error::invalid(format!(
            "column DMF needs height >= 2, got {}",
            img.height()
        )));
    }
    let (w, h) = (img.width(), img.height());
    let px = img.pixels();
    let mut values = vec![0u64; h];
    // row-pair sweep keeps memory access contiguous
    for (delta, slot) in values.iter_mut().enumerate().skip(1) {
        let mut sum = 0u64;
        for r in 0..h - delta {
            let upper = &px[r * w..(r + 1) * w];
            let lower = &px[(r + delta) * w..(r + delta + 1) * w];
            for (&a, &b) in upper.iter().zip(lower) {
                let d = a.abs_diff(b) as u64;
                sum += d * d;
            }
        }
        *slot = sum;
    }
    Ok(DmfSeries {
        direction: Direction::Column,
        values,
    })
}

/// Summed DMF for either direction.
pub fn summed_dmf(img: &GrayImage, direction: Direction) -> Result<DmfSeries> {
    match direction {
        Direction::Row => summed_row_dmf(img),
        Direction::Column => summed_col_dmf(img),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn noisy_first_row_matches_known_values() {
        let row = [
            6u16, 7, 0, 1, 5, 6, 7, 0, 1, 2, 6, 7, 0, 1, 2, 6, 7, 0, 1, 2,
        ];
        let expected = [
            0, 256, 454, 428, 220, 9, 173, 307, 323, 167, 9, 105, 181, 197, 99, 9, 52, 76, 50, 16,
        ];
        assert_eq!(vector_dmf(&row).unwrap(), expected);
    }

    #[test]
    fn small_vectors() {
        assert_eq!(vector_dmf(&[1i64, 2, 3]).unwrap(), vec![0, 2, 4]);
        assert_eq!(vector_dmf(&[4u8; 6]).unwrap(), vec![0; 6]);
        assert_eq!(vector_dmf(&[-3i32, 3]).unwrap(), vec![0, 36]);
        assert!(vector_dmf(&[1u16]).is_err());
        assert!(vector_dmf::<u16>(&[]).is_err());
    }

    #[test]
    fn summed_rows_of_noisy_reference() {
        let s = summed_row_dmf(&samples::reference_3bit_noisy()).unwrap();
        assert_eq!(s.direction, Direction::Row);
        assert_eq!(
            s.values,
            vec![
                0, 1494, 2358, 2238, 1315, 208, 1100, 1660, 1535, 869, 109, 723, 1099, 974, 492,
                10, 277, 396, 276, 98
            ]
        );
    }

    #[test]
    fn clean_reference_has_exact_zeros() {
        let img = samples::reference_3bit();
        let rows = summed_row_dmf(&img).unwrap();
        assert_eq!(rows.len(), 20);
        for k in [5, 10, 15] {
            assert_eq!(rows.values[k], 0);
        }
        let cols = summed_col_dmf(&img).unwrap();
        assert_eq!(cols.len(), 8);
        assert_eq!(cols.values[4], 0);
        assert!(cols.values[1..4].iter().all(|&v| v > 0));
    }

    #[test]
    fn degenerate_inputs() {
        let narrow = GrayImage::filled(1, 6, 7, 3).unwrap();
        assert!(summed_row_dmf(&narrow).is_err());
        assert_eq!(summed_col_dmf(&narrow).unwrap().values, vec![0; 6]);
        let flat = GrayImage::filled(5, 1, 7, 3).unwrap();
        assert!(summed_col_dmf(&flat).is_err());
    }

    #[test]
    fn csv_layout() {
        let s = DmfSeries {
            direction: Direction::Row,
            values: vec![0, 4, 2],
        };
        assert_eq!(s.to_csv(), "delta,value\n0,0\n1,4\n2,2\n");
    }
}
