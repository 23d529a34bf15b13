use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use super::GrayImage;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NoiseKind {
    /// Add an independent N(0, sigma²) deviate to every pixel, round half away
    /// from zero, clamp to `[0, max_value]`.
    GaussianAdditive { sigma: f64 },
    /// Replace each pixel, with the given probability, by a uniform draw from
    /// `[0, max_value]`.
    ReplaceUniform { probability: f64 },
}

/// Noise model plus seed. The generator is ChaCha8 seeded via
/// `SeedableRng::seed_from_u64`, one stream per call in row-major pixel order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseSpec {
    pub kind: NoiseKind,
    pub seed: u64,
}

impl NoiseSpec {
    pub fn gaussian(sigma: f64, seed: u64) -> Self {
        NoiseSpec {
            kind: NoiseKind::GaussianAdditive { sigma },
            seed,
        }
    }

    pub fn replace_uniform(probability: f64, seed: u64) -> Self {
        NoiseSpec {
            kind: NoiseKind::ReplaceUniform { probability },
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.kind {
            NoiseKind::GaussianAdditive { sigma } if !(sigma >= 0.0 && sigma.is_finite()) => {
                Err(Error::invalid(format!(
                    "gaussian sigma must be finite and >= 0, got {sigma}"
                )))
            }
            NoiseKind::ReplaceUniform { probability } if !(0.0..=1.0).contains(&probability) => {
                Err(Error::invalid(format!(
                    "replace probability must be in [0, 1], got {probability}"
                )))
            }
            _ => Ok(()),
        }
    }
}

pub fn add_noise(img: &GrayImage, spec: &NoiseSpec) -> Result<GrayImage> {
    spec.validate()?;
    let max = img.max_value();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let pixels: Vec<u16> = match spec.kind {
        NoiseKind::GaussianAdditive { sigma } => {
            if sigma == 0.0 {
                return Ok(img.clone());
            }
            let normal = Normal::new(0.0, sigma).map_err(|e| Error::invalid(e.to_string()))?;
            img.pixels()
                .iter()
                .map(|&p| {
                    let v = (p as f64 + normal.sample(&mut rng)).round();
                    v.clamp(0.0, max as f64) as u16
                })
                .collect()
        }
        NoiseKind::ReplaceUniform { probability } => img
            .pixels()
            .iter()
            .map(|&p| {
                if rng.random_bool(probability) {
                    rng.random_range(0..=max)
                } else {
                    p
                }
            })
            .collect(),
    };
    GrayImage::new(img.width(), img.height(), max, pixels)
}
