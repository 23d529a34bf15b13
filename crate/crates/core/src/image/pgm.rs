use super::GrayImage;
use crate::error::{Error, Result};

/// Netpbm graymap raster encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgmEncoding {
    /// P2, whitespace-separated decimal samples.
    Ascii,
    /// P5, one byte per sample (two bytes big-endian when maxval > 255).
    Binary,
}

struct Cursor<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_whitespace_and_comments(&mut self) {
        while let Some(&b) = self.data.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.data.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn read_uint(&mut self, what: &str) -> Result<u32> {
        self.skip_whitespace_and_comments();
        let start = self.pos;
        while self.data.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::format(format!("expected {what}"), Some(start)));
        }
        std::str::from_utf8(&self.data[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::format(format!("{what} out of range"), Some(start)))
    }
}

pub fn decode_pgm(bytes: &[u8]) -> Result<GrayImage> {
    let encoding = match bytes.get(..2) {
        Some(b"P2") => PgmEncoding::Ascii,
        Some(b"P5") => PgmEncoding::Binary,
        _ => return Err(Error::format("not a P2/P5 graymap (bad magic)", Some(0))),
    };
    let mut cur = Cursor {
        data: bytes,
        pos: 2,
    };
    let width = cur.read_uint("width")? as usize;
    let height = cur.read_uint("height")? as usize;
    let maxval_offset = cur.pos;
    let maxval = cur.read_uint("maxval")?;
    if width == 0 || height == 0 {
        return Err(Error::format(
            format!("zero image dimension {width}x{height}"),
            None,
        ));
    }
    if maxval == 0 || maxval > u16::MAX as u32 {
        return Err(Error::format(
            format!("maxval {maxval} outside 1..=65535"),
            Some(maxval_offset),
        ));
    }
    let maxval = maxval as u16;
    let expected = width
        .checked_mul(height)
        .ok_or_else(|| Error::format("image dimensions overflow", None))?;

    let pixels = match encoding {
        PgmEncoding::Ascii => {
            let mut pixels = Vec::with_capacity(expected);
            for _ in 0..expected {
                cur.skip_whitespace_and_comments();
                if cur.pos >= bytes.len() {
                    return Err(Error::PixelCountMismatch {
                        expected,
                        found: pixels.len(),
                    });
                }
                let at = cur.pos;
                let v = cur.read_uint("pixel value")?;
                if v > maxval as u32 {
                    return Err(Error::format(
                        format!("pixel value {v} exceeds maxval {maxval}"),
                        Some(at),
                    ));
                }
                pixels.push(v as u16);
            }
            pixels
        }
        PgmEncoding::Binary => {
            // exactly one whitespace byte separates the header from the raster
            match bytes.get(cur.pos) {
                Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
                _ => {
                    return Err(Error::format(
                        "missing whitespace after maxval",
                        Some(cur.pos),
                    ))
                }
            }
            let raster = &bytes[cur.pos..];
            let sample_bytes = if maxval > 255 { 2 } else { 1 };
            let found = raster.len() / sample_bytes;
            if found < expected {
                return Err(Error::PixelCountMismatch { expected, found });
            }
            let mut pixels = Vec::with_capacity(expected);
            for i in 0..expected {
                let v = if sample_bytes == 2 {
                    u16::from_be_bytes([raster[2 * i], raster[2 * i + 1]])
                } else {
                    raster[i] as u16
                };
                if v > maxval {
                    return Err(Error::format(
                        format!("pixel value {v} exceeds maxval {maxval}"),
                        Some(cur.pos + i * sample_bytes),
                    ));
                }
                pixels.push(v);
            }
            pixels
        }
    };
    GrayImage::new(width, height, maxval, pixels)
}

pub fn encode_pgm(img: &GrayImage, encoding: PgmEncoding) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    let magic = match encoding {
        PgmEncoding::Ascii => "P2",
        PgmEncoding::Binary => "P5",
    };
    out.extend_from_slice(
        format!(
            "{magic}\n{} {}\n{}\n",
            img.width(),
            img.height(),
            img.max_value()
        )
        .as_bytes(),
    );
    match encoding {
        PgmEncoding::Ascii => {
            for row in img.rows() {
                let line: Vec<String> = row.iter().map(u16::to_string).collect();
                out.extend_from_slice(line.join(" ").as_bytes());
                out.push(b'\n');
            }
        }
        PgmEncoding::Binary if img.max_value() > 255 => {
            for &p in img.pixels() {
                out.extend_from_slice(&p.to_be_bytes());
            }
        }
        PgmEncoding::Binary => out.extend(img.pixels().iter().map(|&p| p as u8)),
    }
    Ok(out)
}
