//! Texture periodicity estimation and texel-based synthesis.
//!
//! The pipeline sums the distance matching functions of all rows (and all
//! columns) of a grayscale image, reads the period from the deep valleys of
//! those series (directly, or after a one-level Haar decomposition for noisy
//! input), cuts the texture into whole texels, ranks them by how closely their
//! statistics match the full texture and tiles a chosen texel.
//!
//! ```
//! use texperiod::{analyze_image, samples, Mode, DEFAULT_PROMINENCE};
//!
//! let img = samples::reference_3bit();
//! let est = analyze_image(&img, Mode::Direct, DEFAULT_PROMINENCE).unwrap();
//! assert_eq!(est.texel_size(), Some((4, 5)));
//! ```

pub mod dmf;
pub mod error;
pub mod haar;
pub mod image;
pub mod periodicity;
pub mod samples;
pub mod stats;
pub mod texel;

pub use dmf::{summed_col_dmf, summed_dmf, summed_row_dmf, vector_dmf, Direction, DmfSeries};
pub use error::{Error, Result};
pub use haar::{haar_dwt1, haar_idwt1, HaarDecomposition};
pub use image::{
    add_noise, load_image, save_image, tile_texture, GrayImage, ImageFormat, NoiseKind, NoiseSpec,
    Rect,
};
pub use periodicity::{
    analyze_image, estimate_period_direct, estimate_period_wavelet, find_valleys, refine_period,
    DirectionEstimate, Method, Mode, PeriodicityEstimate, ValleySet, DEFAULT_PROMINENCE,
};
pub use texel::{
    extract_texel_grid, rank_texels, ranking_csv, synthesize, GridCell, TexelCandidate,
};
