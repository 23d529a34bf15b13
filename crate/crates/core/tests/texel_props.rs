mod common;

use common::{random_image, rng};
use proptest::prelude::*;
use texperiod::{
    add_noise, analyze_image, extract_texel_grid, rank_texels, synthesize, tile_texture, GrayImage,
    Mode, NoiseSpec,
};

/// Corrupt the pixels of one grid cell, leaving the rest untouched.
fn corrupt_cell(img: &GrayImage, rect: texperiod::Rect, probability: f64, seed: u64) -> GrayImage {
    let noisy = add_noise(
        &img.crop(rect).unwrap(),
        &NoiseSpec::replace_uniform(probability, seed),
    )
    .unwrap();
    GrayImage::from_fn(img.width(), img.height(), img.max_value(), |r, c| {
        if r >= rect.top && r < rect.bottom() && c >= rect.left && c < rect.right() {
            noisy.get(r - rect.top, c - rect.left)
        } else {
            img.get(r, c)
        }
    })
    .unwrap()
}

/// Texel confined to the middle of the gray range, so that uniform
/// replacement noise moves its histogram away from the texture's.
fn banded_image(rng: &mut rand_chacha::ChaCha8Rng, width: usize, height: usize) -> GrayImage {
    use rand::Rng;
    GrayImage::from_fn(width, height, 255, |_, _| rng.random_range(80..=175)).unwrap()
}

proptest! {
    #[test]
    fn grid_covers_whole_texels_without_overlap(w in 1usize..40, h in 1usize..40, pc in 1usize..10, pr in 1usize..10) {
        prop_assume!(pc <= h && pr <= w);
        let img = GrayImage::filled(w, h, 7, 0).unwrap();
        let grid = extract_texel_grid(&img, pc, pr).unwrap();
        let mut hits = vec![0u8; w * h];
        for cell in &grid {
            prop_assert!(cell.rect.fits_in(&img));
            for r in cell.rect.top..cell.rect.bottom() {
                for c in cell.rect.left..cell.rect.right() {
                    hits[r * w + c] += 1;
                }
            }
        }
        let covered = hits.iter().filter(|&&n| n == 1).count();
        prop_assert!(hits.iter().all(|&n| n <= 1));
        prop_assert_eq!(covered, (h / pc) * pc * (w / pr) * pr);
        let idx: Vec<usize> = grid.iter().map(|c| c.index).collect();
        prop_assert_eq!(idx, (1..=grid.len()).collect::<Vec<_>>());
    }

    #[test]
    fn synthesis_round_trip_recovers_periods(pc in 2usize..=10, pr in 2usize..=10, k in 4usize..=6, seed in any::<u64>()) {
        let source = tile_texture(&random_image(&mut rng(seed), pr, pc, 255), pr * 5, pc * 5).unwrap();
        let grid = extract_texel_grid(&source, pc, pr).unwrap();
        let cell = grid[grid.len() / 2];
        let out = synthesize(&source, cell.rect, k * pr, k * pc).unwrap();
        let est = analyze_image(&out, Mode::Direct, 0.05).unwrap();
        prop_assert_eq!(est.texel_size(), Some((pc, pr)));
        let back = synthesize(&source, cell.rect, source.width(), source.height()).unwrap();
        prop_assert_eq!(back, source);
    }
}

#[test]
fn corrupted_texel_ranks_last() {
    for seed in 0..20u64 {
        let texel = banded_image(&mut rng(seed), 8, 6);
        let img = tile_texture(&texel, 48, 36).unwrap();
        let grid = extract_texel_grid(&img, 6, 8).unwrap();
        let victim = grid[(seed as usize * 7) % grid.len()];
        let noisy = corrupt_cell(&img, victim.rect, 0.5, seed + 100);
        let ranked = rank_texels(&noisy, &grid, 64).unwrap();
        assert_eq!(ranked.last().unwrap().index(), victim.index, "seed {seed}");
    }
}

#[test]
fn noise_never_improves_a_texel_score() {
    let texel = banded_image(&mut rng(12), 7, 5);
    let base = tile_texture(&texel, 49, 35).unwrap();
    let grid = extract_texel_grid(&base, 5, 7).unwrap();
    let ranked = rank_texels(&base, &grid, 64).unwrap();
    for cell in &grid {
        let clean = score_against(&base, &base.crop(cell.rect).unwrap());
        let library = ranked
            .iter()
            .find(|c| c.index() == cell.index)
            .unwrap()
            .score;
        assert!((clean - library).abs() < 1e-9);
        for (k, p) in [0.05, 0.2, 0.6].into_iter().enumerate() {
            let noisy = corrupt_cell(&base, cell.rect, p, cell.index as u64 * 10 + k as u64);
            let after = score_against(&base, &noisy.crop(cell.rect).unwrap());
            assert!(
                after >= clean,
                "texel {} improved: {clean} -> {after}",
                cell.index
            );
        }
    }
}

/// Mean percent deviation of `texel` statistics from a
/// fixed reference, computed independently of the ranking code.
fn score_against(reference: &GrayImage, texel: &GrayImage) -> f64 {
    use texperiod::stats::{first_order_stats, glcm, glcm_features, percent_deviation, Angle};
    let rf = first_order_stats(reference);
    let tf = first_order_stats(texel);
    let rg = glcm_features(&glcm(reference, Angle::Deg0, 64).unwrap()).unwrap();
    let tg = glcm_features(&glcm(texel, Angle::Deg0, 64).unwrap()).unwrap();
    let pairs = [
        (tf.mean, rf.mean),
        (tf.variance, rf.variance),
        (tf.skewness, rf.skewness),
        (tf.kurtosis, rf.kurtosis),
        (tf.energy, rf.energy),
        (tf.entropy, rf.entropy),
        (tg.energy, rg.energy),
        (tg.entropy, rg.entropy),
        (tg.contrast, rg.contrast),
        (tg.homogeneity, rg.homogeneity),
        (tg.correlation.unwrap_or(0.0), rg.correlation.unwrap_or(0.0)),
    ];
    pairs
        .iter()
        .map(|&(c, r)| percent_deviation(c, r).value)
        .sum::<f64>()
        / 11.0
}
