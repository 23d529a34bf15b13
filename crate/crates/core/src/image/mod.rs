//! Grayscale raster, file codecs, tiling and synthetic corruption.

mod noise;
mod pgm;
mod png_codec;

pub use noise::{add_noise, NoiseKind, NoiseSpec};
pub use pgm::{decode_pgm, encode_pgm, PgmEncoding};

use crate::error::{Error, Result};

/// A rectangular grid of integer gray values in `0..=max_value`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrayImage {
    width: usize,
    height: usize,
    max_value: u16,
    pixels: Vec<u16>,
}

/// Axis-aligned pixel rectangle inside an image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rect {
    pub top: usize,
    pub left: usize,
    pub height: usize,
    pub width: usize,
}

impl Rect {
    pub fn new(top: usize, left: usize, height: usize, width: usize) -> Self {
        Rect {
            top,
            left,
            height,
            width,
        }
    }

    pub fn bottom(&self) -> usize {
        self.top + self.height
    }

    pub fn right(&self) -> usize {
        self.left + self.width
    }

    pub fn fits_in(&self, img: &GrayImage) -> bool {
        self.height >= 1
            && self.width >= 1
            && self.bottom() <= img.height()
            && self.right() <= img.width()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImageFormat {
    Pgm,
    Png,
}

impl ImageFormat {
    /// Guess the format from a file extension (`.pgm`, `.pnm`, `.png`).
    pub fn from_extension(path: &std::path::Path) -> Option<Self> {
        let ext = path.extension()?.to_str()?.to_ascii_lowercase();
        match ext.as_str() {
            "pgm" | "pnm" => Some(ImageFormat::Pgm),
            "png" => Some(ImageFormat::Png),
            _ => None,
        }
    }
}

impl GrayImage {
    pub fn new(width: usize, height: usize, max_value: u16, pixels: Vec<u16>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::invalid(format!(
                "image dimensions must be positive, got {width}x{height}"
            )));
        }
        if max_value == 0 {
            return Err(Error::invalid("max_value must be at least 1"));
        }
        let expected = width
            .checked_mul(height)
            .ok_or_else(|| Error::invalid("image dimensions overflow"))?;
        if pixels.len() != expected {
            return Err(Error::PixelCountMismatch {
                expected,
                found: pixels.len(),
            });
        }
        if let Some(pos) = pixels.iter().position(|&p| p > max_value) {
            return Err(Error::Range(format!(
                "pixel {} at index {pos} exceeds max_value {max_value}",
                pixels[pos]
            )));
        }
        Ok(GrayImage {
            width,
            height,
            max_value,
            pixels,
        })
    }

    /// Build an image from nested rows. All rows must have the same length.
    pub fn from_rows<R: AsRef<[u16]>>(rows: &[R], max_value: u16) -> Result<Self> {
        let height = rows.len();
        let width = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        if rows.iter().any(|r| r.as_ref().len() != width) {
            return Err(Error::invalid("rows have differing lengths"));
        }
        let pixels = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().copied())
            .collect();
        GrayImage::new(width, height, max_value, pixels)
    }

    pub fn from_fn(
        width: usize,
        height: usize,
        max_value: u16,
        mut f: impl FnMut(usize, usize) -> u16,
    ) -> Result<Self> {
        let mut pixels = Vec::with_capacity(width * height);
        for r in 0..height {
            for c in 0..width {
                pixels.push(f(r, c));
            }
        }
        GrayImage::new(width, height, max_value, pixels)
    }

    pub fn filled(width: usize, height: usize, max_value: u16, value: u16) -> Result<Self> {
        GrayImage::new(width, height, max_value, vec![value; width * height])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn max_value(&self) -> u16 {
        self.max_value
    }

    pub fn pixels(&self) -> &[u16] {
        &self.pixels
    }

    /// Pixel at (`row`, `col`). Panics when out of bounds.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u16 {
        assert!(
            row < self.height && col < self.width,
            "pixel ({row}, {col}) out of bounds"
        );
        self.pixels[row * self.width + col]
    }

    pub fn row(&self, row: usize) -> &[u16] {
        &self.pixels[row * self.width..(row + 1) * self.width]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u16]> + '_ {
        self.pixels.chunks_exact(self.width)
    }

    pub fn column(&self, col: usize) -> Vec<u16> {
        (0..self.height).map(|r| self.get(r, col)).collect()
    }

    pub fn transpose(&self) -> GrayImage {
        let mut pixels = Vec::with_capacity(self.pixels.len());
        for c in 0..self.width {
            for r in 0..self.height {
                pixels.push(self.pixels[r * self.width + c]);
            }
        }
        GrayImage {
            width: self.height,
            height: self.width,
            max_value: self.max_value,
            pixels,
        }
    }

    pub fn crop(&self, rect: Rect) -> Result<GrayImage> {
        if !rect.fits_in(self) {
            return Err(Error::invalid(format!(
                "rect {rect:?} does not fit in {}x{} image",
                self.width, self.height
            )));
        }
        let mut pixels = Vec::with_capacity(rect.width * rect.height);
        for r in rect.top..rect.bottom() {
            pixels.extend_from_slice(&self.row(r)[rect.left..rect.right()]);
        }
        Ok(GrayImage {
            width: rect.width,
            height: rect.height,
            max_value: self.max_value,
            pixels,
        })
    }
}

/// Decode an image from bytes.
///
/// PGM input may be either P2 (ASCII) or P5 (binary); the variant is taken
/// from the magic number. PNG input must be 8-bit grayscale without alpha.
pub fn load_image(bytes: &[u8], format: ImageFormat) -> Result<GrayImage> {
    match format {
        ImageFormat::Pgm => decode_pgm(bytes),
        ImageFormat::Png => png_codec::decode_png(bytes),
    }
}

/// Encode an image. PGM output is binary (P5) when `max_value <= 255` and
/// ASCII (P2) otherwise; use [`encode_pgm`] to pick the variant explicitly.
pub fn save_image(img: &GrayImage, format: ImageFormat) -> Result<Vec<u8>> {
    match format {
        ImageFormat::Pgm => {
            let encoding = if img.max_value() <= 255 {
                PgmEncoding::Binary
            } else {
                PgmEncoding::Ascii
            };
            encode_pgm(img, encoding)
        }
        ImageFormat::Png => png_codec::encode_png(img),
    }
}

/// Repeat `texel` over an `out_width` x `out_height` canvas, cropping partial
/// texels at the right and bottom edges.
pub fn tile_texture(texel: &GrayImage, out_width: usize, out_height: usize) -> Result<GrayImage> {
    if out_width == 0 || out_height == 0 {
        return Err(Error::invalid(format!(
            "output size must be positive, got {out_width}x{out_height}"
        )));
    }
    GrayImage::from_fn(out_width, out_height, texel.max_value(), |r, c| {
        texel.get(r % texel.height(), c % texel.width())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_validates_invariants() {
        assert!(matches!(
            GrayImage::new(2, 2, 7, vec![0; 3]),
            Err(Error::PixelCountMismatch {
                expected: 4,
                found: 3
            })
        ));
        assert!(matches!(
            GrayImage::new(1, 1, 7, vec![8]),
            Err(Error::Range(_))
        ));
        assert!(GrayImage::new(0, 1, 7, vec![]).is_err());
        assert!(GrayImage::new(1, 1, 0, vec![0]).is_err());
    }

    #[test]
    fn transpose_swaps_axes() {
        let img = GrayImage::from_rows(&[[1, 2, 3], [4, 5, 6]], 9).unwrap();
        let t = img.transpose();
        assert_eq!((t.width(), t.height()), (2, 3));
        assert_eq!(t.row(0), &[1, 4]);
        assert_eq!(t.row(2), &[3, 6]);
        assert_eq!(t.transpose(), img);
    }

    #[test]
    fn crop_rejects_out_of_bounds() {
        let img = GrayImage::filled(4, 3, 1, 0).unwrap();
        assert!(img.crop(Rect::new(1, 1, 2, 3)).is_ok());
        assert!(img.crop(Rect::new(2, 0, 2, 1)).is_err());
        assert!(img.crop(Rect::new(0, 0, 0, 1)).is_err());
    }

    #[test]
    fn tile_constant_texel() {
        let texel = GrayImage::filled(1, 1, 7, 5).unwrap();
        let out = tile_texture(&texel, 4, 4).unwrap();
        assert!(out.pixels().iter().all(|&p| p == 5));
        assert_eq!((out.width(), out.height()), (4, 4));
    }

    #[test]
    fn tile_matches_modular_index_oracle() {
        let texel = GrayImage::from_rows(&[[1, 2, 3], [4, 5, 6]], 7).unwrap();
        let out = tile_texture(&texel, 7, 5).unwrap();
        let expected: [[u16; 7]; 5] = [
            [1, 2, 3, 1, 2, 3, 1],
            [4, 5, 6, 4, 5, 6, 4],
            [1, 2, 3, 1, 2, 3, 1],
            [4, 5, 6, 4, 5, 6, 4],
            [1, 2, 3, 1, 2, 3, 1],
        ];
        for (r, row) in expected.iter().enumerate() {
            assert_eq!(out.row(r), row);
        }
    }

    #[test]
    fn tile_rejects_empty_output() {
        let texel = GrayImage::filled(1, 1, 7, 5).unwrap();
        assert!(tile_texture(&texel, 0, 3).is_err());
    }

    #[test]
    fn format_from_extension() {
        use std::path::Path;
        assert_eq!(
            ImageFormat::from_extension(Path::new("a.PGM")),
            Some(ImageFormat::Pgm)
        );
        assert_eq!(
            ImageFormat::from_extension(Path::new("a.png")),
            Some(ImageFormat::Png)
        );
        assert_eq!(ImageFormat::from_extension(Path::new("a.bmp")), None);
    }
}
