//! Texel grid extraction, statistical ranking and tiling synthesis.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::image::{tile_texture, GrayImage, Rect};
use crate::stats::{
    first_order_stats, glcm, glcm_features, percent_deviation, Angle, FirstOrderStats, GlcmFeatures,
};

pub const FIRST_ORDER_PROPERTIES: [&str; 6] = [
    "Mean", "Variance", "Skewness", "Kurtosis", "Energy", "Entropy",
];
pub const GLCM_PROPERTIES: [&str; 5] = [
    "Energy",
    "Entropy",
    "Contrast",
    "Homogeneity",
    "Correlation",
];

/// One whole texel of the grid anchored at the image origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridCell {
    /// Row-major position in the grid, starting at 1.
    pub index: usize,
    pub grid_row: usize,
    pub grid_col: usize,
    pub rect: Rect,
}

/// A grid cell scored against the whole texture.
#[derive(Debug, Clone, PartialEq)]
pub struct TexelCandidate {
    pub cell: GridCell,
    /// Percent deviations of mean, variance, skewness, kurtosis, energy, entropy.
    pub first_order_dev: [f64; 6],
    /// Percent deviations of GLCM energy, entropy, contrast, homogeneity, correlation at 0°.
    pub glcm_dev: [f64; 5],
    /// Which of the eleven deviations used the zero-reference absolute fallback.
    pub absolute_fallback: [bool; 11],
    /// Mean of the eleven deviations.
    pub score: f64,
}

impl TexelCandidate {
    pub fn index(&self) -> usize {
        self.cell.index
    }

    pub fn rect(&self) -> Rect {
        self.cell.rect
    }

    pub fn deviations(&self) -> impl Iterator<Item = f64> + '_ {
        self.first_order_dev.iter().chain(&self.glcm_dev).copied()
    }
}

/// Every whole `period_col x period_row` texel, numbered row-major from 1.
/// Partial texels along the right and bottom borders are dropped.
pub fn extract_texel_grid(
    img: &GrayImage,
    period_col: usize,
    period_row: usize,
) -> Result<Vec<GridCell>> {
    if period_col == 0 || period_col > img.height() || period_row == 0 || period_row > img.width() {
        return Err(Error::invalid(format!(
            "texel {period_col}x{period_row} does not fit in {}x{} image",
            img.height(),
            img.width()
        )));
    }
    let rows = img.height() / period_col;
    let cols = img.width() / period_row;
    let mut cells = Vec::with_capacity(rows * cols);
    for grid_row in 0..rows {
        for grid_col in 0..cols {
            cells.push(GridCell {
                index: cells.len() + 1,
                grid_row,
                grid_col,
                rect: Rect::new(
                    grid_row * period_col,
                    grid_col * period_row,
                    period_col,
                    period_row,
                ),
            });
        }
    }
    Ok(cells)
}

struct Profile {
    first: FirstOrderStats,
    glcm: GlcmFeatures,
}

fn profile(img: &GrayImage, levels: usize) -> Result<Profile> {
    Ok(Profile {
        first: first_order_stats(img),
        glcm: glcm_features(&glcm(img, Angle::Deg0, levels)?)?,
    })
}

fn first_order_values(s: &FirstOrderStats) -> [f64; 6] {
    [
        s.mean, s.variance, s.skewness, s.kurtosis, s.energy, s.entropy,
    ]
}

/// Undefined correlation takes part in the comparison as 0.
fn glcm_values(g: &GlcmFeatures) -> [f64; 5] {
    [
        g.energy,
        g.entropy,
        g.contrast,
        g.homogeneity,
        g.correlation.unwrap_or(0.0),
    ]
}

/// Score every cell against the whole image and sort ascending by score
/// (ties by index). Texels must be at least 2 pixels wide for the 0° GLCM.
pub fn rank_texels(
    img: &GrayImage,
    grid: &[GridCell],
    glcm_levels: usize,
) -> Result<Vec<TexelCandidate>> {
    if grid.is_empty() {
        return Err(Error::invalid("texel grid is empty"));
    }
    let reference = profile(img, glcm_levels)?;
    let ref_first = first_order_values(&reference.first);
    let ref_glcm = glcm_values(&reference.glcm);

    let mut ranked = grid
        .iter()
        .map(|cell| {
            let texel = img.crop(cell.rect)?;
            let p = profile(&texel, glcm_levels)?;
            let mut fallback = [false; 11];
            let mut first_order_dev = [0.0; 6];
            for (k, (c, r)) in first_order_values(&p.first)
                .iter()
                .zip(&ref_first)
                .enumerate()
            {
                let d = percent_deviation(*c, *r);
                first_order_dev[k] = d.value;
                fallback[k] = d.absolute_fallback;
            }
            let mut glcm_dev = [0.0; 5];
            for (k, (c, r)) in glcm_values(&p.glcm).iter().zip(&ref_glcm).enumerate() {
                let d = percent_deviation(*c, *r);
                glcm_dev[k] = d.value;
                fallback[6 + k] = d.absolute_fallback;
            }
            let score = (first_order_dev.iter().sum::<f64>() + glcm_dev.iter().sum::<f64>()) / 11.0;
            Ok(TexelCandidate {
                cell: *cell,
                first_order_dev,
                glcm_dev,
                absolute_fallback: fallback,
                score,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    ranked.sort_by(|a, b| {
        a.score
            .total_cmp(&b.score)
            .then(a.cell.index.cmp(&b.cell.index))
    });
    Ok(ranked)
}

/// GLCM feature deviations of one texel at any angle; these do not enter the
/// ranking score.
pub fn glcm_deviation_at(
    img: &GrayImage,
    rect: Rect,
    angle: Angle,
    levels: usize,
) -> Result<[f64; 5]> {
    let texel = img.crop(rect)?;
    let t = glcm_values(&glcm_features(&glcm(&texel, angle, levels)?)?);
    let r = glcm_values(&glcm_features(&glcm(img, angle, levels)?)?);
    let mut out = [0.0; 5];
    for (slot, (c, r)) in out.iter_mut().zip(t.iter().zip(&r)) {
        *slot = percent_deviation(*c, *r).value;
    }
    Ok(out)
}

/// Crop `rect` out of `img` and tile it over `out_width x out_height`.
pub fn synthesize(
    img: &GrayImage,
    rect: Rect,
    out_width: usize,
    out_height: usize,
) -> Result<GrayImage> {
    let texel = img.crop(rect)?;
    tile_texture(&texel, out_width, out_height)
}

/// Ranked-texel table: one row per property, one column per texel in rank
/// order, closed by a `summary,score` row.
pub fn ranking_csv(ranked: &[TexelCandidate]) -> String {
    let mut out = String::from("group,property");
    for c in ranked {
        let _ = write!(out, ",#{}", c.index());
    }
    out.push('\n');
    let mut emit = |group: &str, name: &str, pick: &dyn Fn(&TexelCandidate) -> f64| {
        let _ = write!(out, "{group},{name}");
        for c in ranked {
            let _ = write!(out, ",{}", pick(c));
        }
        out.push('\n');
    };
    for (k, name) in FIRST_ORDER_PROPERTIES.iter().enumerate() {
        emit("first_order", name, &|c| c.first_order_dev[k]);
    }
    for (k, name) in GLCM_PROPERTIES.iter().enumerate() {
        emit("second_order", name, &|c| c.glcm_dev[k]);
    }
    emit("summary", "score", &|c| c.score);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn grid_counts() {
        let img = GrayImage::filled(231, 231, 255, 0).unwrap();
        assert_eq!(extract_texel_grid(&img, 21, 21).unwrap().len(), 121);
        let one = extract_texel_grid(&img, 231, 231).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].rect, Rect::new(0, 0, 231, 231));
        assert!(extract_texel_grid(&img, 0, 5).is_err());
        assert!(extract_texel_grid(&img, 5, 232).is_err());
    }

    #[test]
    fn reference_grid_cells_are_identical() {
        let img = samples::reference_3bit();
        let grid = extract_texel_grid(&img, 4, 5).unwrap();
        assert_eq!(grid.len(), 8);
        assert_eq!(grid[5].index, 6);
        assert_eq!((grid[5].grid_row, grid[5].grid_col), (1, 1));
        assert_eq!(grid[5].rect, Rect::new(4, 5, 4, 5));
        let first = img.crop(grid[0].rect).unwrap();
        for cell in &grid {
            assert_eq!(img.crop(cell.rect).unwrap(), first);
        }
        let ranked = rank_texels(&img, &grid, 8).unwrap();
        let order: Vec<usize> = ranked.iter().map(|c| c.index()).collect();
        assert_eq!(order, (1..=8).collect::<Vec<_>>());
        assert!(ranked.iter().all(|c| c.score == ranked[0].score));
        assert!(ranked.iter().all(|c| c.first_order_dev == [0.0; 6]));
    }

    #[test]
    fn whole_image_texel_scores_zero() {
        let img = samples::reference_3bit_noisy();
        let grid = extract_texel_grid(&img, 8, 20).unwrap();
        let ranked = rank_texels(&img, &grid, 8).unwrap();
        assert_eq!(ranked[0].score, 0.0);
        assert!(ranked[0].deviations().all(|d| d == 0.0));
    }

    #[test]
    fn narrow_texels_cannot_be_ranked() {
        let img = samples::reference_3bit();
        let grid = extract_texel_grid(&img, 4, 1).unwrap();
        assert!(rank_texels(&img, &grid, 8).is_err());
        assert!(rank_texels(&img, &[], 8).is_err());
    }

    #[test]
    fn synthesize_reproduces_clean_tiling() {
        let img = samples::reference_3bit();
        let out = synthesize(&img, Rect::new(4, 10, 4, 5), 20, 8).unwrap();
        assert_eq!(out, img);
        let px = synthesize(&img, Rect::new(4, 10, 4, 5), 1, 1).unwrap();
        assert_eq!(px.pixels(), &[img.get(4, 10)]);
        assert!(synthesize(&img, Rect::new(6, 0, 4, 5), 4, 4).is_err());
    }

    #[test]
    fn ranking_csv_shape() {
        let img = samples::reference_3bit();
        let grid = extract_texel_grid(&img, 4, 5).unwrap();
        let csv = ranking_csv(&rank_texels(&img, &grid, 8).unwrap());
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "group,property,#1,#2,#3,#4,#5,#6,#7,#8");
        assert_eq!(lines.len(), 13);
        assert!(lines[1].starts_with("first_order,Mean,0,"));
        assert!(lines[7].starts_with("second_order,Energy,"));
        assert!(lines[12].starts_with("summary,score,"));
    }

    #[test]
    fn off_angle_deviations() {
        let img = samples::reference_3bit();
        let d = glcm_deviation_at(&img, Rect::new(0, 0, 8, 20), Angle::Deg90, 8).unwrap();
        assert_eq!(d, [0.0; 5]);
    }
}
