#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use texperiod::GrayImage;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_image(
    rng: &mut ChaCha8Rng,
    width: usize,
    height: usize,
    max_value: u16,
) -> GrayImage {
    GrayImage::from_fn(width, height, max_value, |_, _| {
        rng.random_range(0..=max_value)
    })
    .unwrap()
}

/// Row-direction DMF summed over rows, straight from the definition.
pub fn naive_row_dmf(img: &GrayImage) -> Vec<u64> {
    let (w, h) = (img.width(), img.height());
    (0..w)
        .map(|delta| {
            let mut total = 0u64;
            for r in 0..h {
                for i in 0..w - delta {
                    let d = img.get(r, i) as i64 - img.get(r, i + delta) as i64;
                    total += (d * d) as u64;
                }
            }
            total
        })
        .collect()
}

pub fn naive_col_dmf(img: &GrayImage) -> Vec<u64> {
    let (w, h) = (img.width(), img.height());
    (0..h)
        .map(|delta| {
            let mut total = 0u64;
            for c in 0..w {
                for i in 0..h - delta {
                    let d = img.get(i, c) as i64 - img.get(i + delta, c) as i64;
                    total += (d * d) as u64;
                }
            }
            total
        })
        .collect()
}

/// Smallest shift p >= 1 with img(r, c) == img(r, c + p) wherever defined.
pub fn fundamental_row_period(img: &GrayImage) -> usize {
    (1..img.width())
        .find(|&p| {
            (0..img.height())
                .all(|r| (0..img.width() - p).all(|c| img.get(r, c) == img.get(r, c + p)))
        })
        .unwrap_or(img.width())
}

pub fn fundamental_col_period(img: &GrayImage) -> usize {
    fundamental_row_period(&img.transpose())
}
