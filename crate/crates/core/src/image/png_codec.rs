use std::io::Cursor;

use super::GrayImage;
use crate::error::{Error, Result};

/// tEXt keyword carrying the logical gray range when it is narrower than 8 bits.
const MAX_VALUE_KEY: &str = "MaxValue";

pub(super) fn decode_png(bytes: &[u8]) -> Result<GrayImage> {
    let decoder = png::Decoder::new(Cursor::new(bytes));
    let mut reader = decoder
        .read_info()
        .map_err(|e| Error::format(format!("png: {e}"), None))?;
    let (color, depth) = reader.output_color_type();
    if color != png::ColorType::Grayscale || depth != png::BitDepth::Eight {
        return Err(Error::Unsupported(format!(
            "png must be 8-bit grayscale without alpha, got {color:?} at {depth:?}"
        )));
    }
    let max_value = reader
        .info()
        .uncompressed_latin1_text
        .iter()
        .find(|chunk| chunk.keyword == MAX_VALUE_KEY)
        .map(|chunk| {
            chunk
                .text
                .trim()
                .parse::<u16>()
                .ok()
                .filter(|v| (1..=255).contains(v))
                .ok_or_else(|| {
                    Error::format(
                        format!("png: bad {MAX_VALUE_KEY} text '{}'", chunk.text),
                        None,
                    )
                })
        })
        .transpose()?
        .unwrap_or(255);

    let size = reader
        .output_buffer_size()
        .ok_or_else(|| Error::format("png: image too large", None))?;
    let mut buf = vec![0u8; size];
    let info = reader
        .next_frame(&mut buf)
        .map_err(|e| Error::format(format!("png: {e}"), None))?;
    let (width, height) = (info.width as usize, info.height as usize);
    let mut pixels = Vec::with_capacity(width * height);
    for row in buf.chunks_exact(info.line_size).take(height) {
        pixels.extend(row[..width].iter().map(|&b| b as u16));
    }
    GrayImage::new(width, height, max_value, pixels)
}

pub(super) fn encode_png(img: &GrayImage) -> Result<Vec<u8>> {
    if img.max_value() > 255 {
        return Err(Error::Range(format!(
            "png output supports max_value <= 255, image has {}",
            img.max_value()
        )));
    }
    let width =
        u32::try_from(img.width()).map_err(|_| Error::Range("width too large for png".into()))?;
    let height =
        u32::try_from(img.height()).map_err(|_| Error::Range("height too large for png".into()))?;
    let mut out = Vec::new();
    {
        let mut encoder = png::Encoder::new(&mut out, width, height);
        encoder.set_color(png::ColorType::Grayscale);
        encoder.set_depth(png::BitDepth::Eight);
        if img.max_value() != 255 {
            encoder
                .add_text_chunk(MAX_VALUE_KEY.to_string(), img.max_value().to_string())
                .map_err(|e| Error::format(format!("png: {e}"), None))?;
        }
        let mut writer = encoder
            .write_header()
            .map_err(|e| Error::format(format!("png: {e}"), None))?;
        let data: Vec<u8> = img.pixels().iter().map(|&p| p as u8).collect();
        writer
            .write_image_data(&data)
            .map_err(|e| Error::format(format!("png: {e}"), None))?;
        writer
            .finish()
            .map_err(|e| Error::format(format!("png: {e}"), None))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn round_trip_keeps_narrow_range() {
        let img = samples::reference_3bit();
        let bytes = encode_png(&img).unwrap();
        assert_eq!(decode_png(&bytes).unwrap(), img);
    }

    #[test]
    fn sixteen_bit_range_is_rejected() {
        let img = GrayImage::new(1, 1, 65535, vec![0]).unwrap();
        assert!(matches!(encode_png(&img), Err(Error::Range(_))));
    }

    #[test]
    fn color_png_is_unsupported() {
        let mut out = Vec::new();
        {
            let mut enc = png::Encoder::new(&mut out, 1, 1);
            enc.set_color(png::ColorType::Rgb);
            enc.set_depth(png::BitDepth::Eight);
            let mut w = enc.write_header().unwrap();
            w.write_image_data(&[1, 2, 3]).unwrap();
        }
        assert!(matches!(decode_png(&out), Err(Error::Unsupported(_))));
    }

    #[test]
    fn garbage_is_format_error() {
        assert!(matches!(
            decode_png(b"not a png"),
            Err(Error::Format { .. })
        ));
    }
}
