//! Small built-in test patterns.
//!
//! The 8x20 3-bit pattern repeats every 5 columns and every 4 rows. The noisy
//! variant has six pixels altered and is the standard worked example for the
//! row-direction distance matching function.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::image::GrayImage;

const REFERENCE_3BIT: [[u16; 20]; 8] = [
    [6, 7, 0, 1, 2, 6, 7, 0, 1, 2, 6, 7, 0, 1, 2, 6, 7, 0, 1, 2],
    [1, 2, 4, 5, 0, 1, 2, 4, 5, 0, 1, 2, 4, 5, 0, 1, 2, 4, 5, 0],
    [5, 6, 7, 0, 1, 5, 6, 7, 0, 1, 5, 6, 7, 0, 1, 5, 6, 7, 0, 1],
    [7, 6, 5, 4, 3, 7, 6, 5, 4, 3, 7, 6, 5, 4, 3, 7, 6, 5, 4, 3],
    [6, 7, 0, 1, 2, 6, 7, 0, 1, 2, 6, 7, 0, 1, 2, 6, 7, 0, 1, 2],
    [1, 2, 4, 5, 0, 1, 2, 4, 5, 0, 1, 2, 4, 5, 0, 1, 2, 4, 5, 0],
    [5, 6, 7, 0, 1, 5, 6, 7, 0, 1, 5, 6, 7, 0, 1, 5, 6, 7, 0, 1],
    [7, 6, 5, 4, 3, 7, 6, 5, 4, 3, 7, 6, 5, 4, 3, 7, 6, 5, 4, 3],
];

const REFERENCE_3BIT_NOISY: [[u16; 20]; 8] = [
    [6, 7, 0, 1, 5, 6, 7, 0, 1, 2, 6, 7, 0, 1, 2, 6, 7, 0, 1, 2],
    [1, 2, 4, 5, 0, 1, 2, 4, 5, 0, 1, 2, 4, 5, 0, 1, 2, 4, 5, 0],
    [5, 6, 7, 0, 1, 5, 6, 7, 7, 1, 5, 6, 7, 0, 1, 5, 6, 7, 0, 1],
    [7, 6, 5, 4, 3, 7, 6, 5, 4, 3, 7, 6, 0, 4, 3, 7, 6, 5, 4, 3],
    [6, 7, 0, 1, 2, 6, 7, 0, 1, 2, 6, 7, 0, 1, 2, 6, 7, 0, 1, 2],
    [1, 2, 4, 5, 0, 1, 2, 4, 5, 0, 1, 2, 4, 5, 0, 1, 2, 4, 5, 0],
    [5, 6, 7, 0, 1, 5, 6, 7, 0, 1, 5, 1, 7, 0, 1, 5, 6, 7, 0, 1],
    [7, 6, 5, 3, 3, 7, 6, 5, 4, 3, 7, 6, 5, 4, 3, 7, 6, 5, 4, 3],
];

/// Clean 20-wide, 8-high pattern with gray values 0..=7.
pub fn reference_3bit() -> GrayImage {
    GrayImage::from_rows(&REFERENCE_3BIT, 7).expect("static pattern is valid")
}

/// [`reference_3bit`] with six corrupted pixels.
pub fn reference_3bit_noisy() -> GrayImage {
    GrayImage::from_rows(&REFERENCE_3BIT_NOISY, 7).expect("static pattern is valid")
}

/// The 4-row, 5-column fundamental block of [`reference_3bit`].
pub fn reference_3bit_texel() -> GrayImage {
    let rows: Vec<&[u16]> = REFERENCE_3BIT[..4].iter().map(|r| &r[..5]).collect();
    GrayImage::from_rows(&rows, 7).expect("static pattern is valid")
}

/// Texel of independent uniform gray values in `0..=max_value`, reproducible from `seed`.
pub fn random_texel(width: usize, height: usize, max_value: u16, seed: u64) -> Result<GrayImage> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    GrayImage::from_fn(width, height, max_value, |_, _| {
        rng.random_range(0..=max_value)
    })
}
