//! Command-line front end: periodicity analysis, texel ranking, synthesis and
//! test-texture generation.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use texperiod::stats::default_levels;
use texperiod::{
    add_noise, analyze_image, extract_texel_grid, haar_dwt1, load_image, rank_texels, ranking_csv,
    samples, save_image, summed_col_dmf, summed_row_dmf, synthesize, tile_texture,
    DirectionEstimate, DmfSeries, GrayImage, ImageFormat, Method, Mode, DEFAULT_PROMINENCE,
};

pub mod parse;
pub mod plot;
pub mod report;

use parse::{parse_noise, parse_pair};
use report::AnalysisReport;

#[derive(Debug, Parser)]
#[command(
    name = "texperiod",
    version,
    about = "Texture periodicity analysis and texel synthesis"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate the texel size of a texture.
    Analyze(AnalyzeArgs),
    /// Rank the texels of a texture by statistical closeness to the whole.
    Texels(TexelsArgs),
    /// Tile one texel of a texture into a new image.
    Synthesize(SynthesizeArgs),
    /// Tile a texel into a test texture, optionally adding noise.
    Generate(GenerateArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub image: PathBuf,
    /// direct, wavelet or auto.
    #[arg(long, default_value = "auto")]
    pub mode: Mode,
    /// Minimum valley prominence as a fraction of the series range.
    #[arg(long, default_value_t = DEFAULT_PROMINENCE)]
    pub prominence: f64,
    /// Write `<prefix>.row.csv`, `<prefix>.col.csv` and their Haar decompositions.
    #[arg(long, value_name = "PREFIX")]
    pub emit_dmf: Option<PathBuf>,
    /// Write `<prefix>.row.svg` and `<prefix>.col.svg`.
    #[arg(long, value_name = "PREFIX")]
    pub emit_plot: Option<PathBuf>,
    /// Report path, `-` for standard output.
    #[arg(long, default_value = "-")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct TexelsArgs {
    pub image: PathBuf,
    /// Texel height in pixels.
    #[arg(long)]
    pub period_col: usize,
    /// Texel width in pixels.
    #[arg(long)]
    pub period_row: usize,
    /// Gray levels of the co-occurrence matrix (default: min(max_value + 1, 64)).
    #[arg(long)]
    pub glcm_levels: Option<usize>,
    /// CSV path, `-` for standard output.
    #[arg(long, default_value = "-")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SynthesizeArgs {
    pub image: PathBuf,
    /// Grid index of the texel, row-major from 1.
    #[arg(long)]
    pub texel_index: usize,
    #[arg(long)]
    pub period_col: usize,
    #[arg(long)]
    pub period_row: usize,
    /// Output size WxH (default: the source size).
    #[arg(long)]
    pub size: Option<String>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// `table1`, `random` or an image path.
    #[arg(long, default_value = "random")]
    pub texel: String,
    /// Texel size P_CxP_R (rows x columns); required for `random`.
    #[arg(long)]
    pub periods: Option<String>,
    /// Output size WxH.
    #[arg(long)]
    pub size: String,
    /// `gaussian:<sigma>`, `replace:<probability>` or `none`.
    #[arg(long, default_value = "none")]
    pub noise: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

/// How a command finished when it did not fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Done,
    /// Analysis ran but at least one direction has no period.
    Aperiodic,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Done => 0,
            Outcome::Aperiodic => 2,
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Analyze(a) => cmd_analyze(&a),
        Command::Texels(a) => cmd_texels(&a).map(|_| Outcome::Done),
        Command::Synthesize(a) => cmd_synthesize(&a).map(|_| Outcome::Done),
        Command::Generate(a) => cmd_generate(&a).map(|_| Outcome::Done),
    }
}

fn format_of(path: &Path) -> Result<ImageFormat> {
    ImageFormat::from_extension(path).with_context(|| {
        format!(
            "{}: unknown image extension (expected .pgm or .png)",
            path.display()
        )
    })
}

pub fn read_image(path: &Path) -> Result<GrayImage> {
    let format = format_of(path)?;
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    load_image(&bytes, format).with_context(|| format!("cannot decode {}", path.display()))
}

pub fn write_image(path: &Path, img: &GrayImage) -> Result<()> {
    let bytes = save_image(img, format_of(path)?)?;
    fs::write(path, bytes).with_context(|| format!("cannot write {}", path.display()))
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    if path.as_os_str() == "-" {
        let mut out = std::io::stdout().lock();
        out.write_all(text.as_bytes())?;
        return Ok(out.flush()?);
    }
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

pub fn cmd_analyze(args: &AnalyzeArgs) -> Result<Outcome> {
    let img = read_image(&args.image)?;
    let est = analyze_image(&img, args.mode, args.prominence)?;
    let series = [
        ("row", summed_row_dmf(&img)?, &est.row),
        ("col", summed_col_dmf(&img)?, &est.col),
    ];

    if let Some(prefix) = &args.emit_dmf {
        for (name, s, _) in &series {
            write_text(&with_suffix(prefix, &format!(".{name}.csv")), &s.to_csv())?;
            if s.len() >= 2 {
                let haar = haar_dwt1(&s.as_f64())?;
                write_text(
                    &with_suffix(prefix, &format!(".{name}.haar.csv")),
                    &haar.to_csv(),
                )?;
            }
        }
    }
    if let Some(prefix) = &args.emit_plot {
        for (name, s, dir) in &series {
            let svg = plot_direction(name, s, dir)?;
            write_text(&with_suffix(prefix, &format!(".{name}.svg")), &svg)?;
        }
    }

    let report = AnalysisReport::new(
        &args.image.display().to_string(),
        img.width(),
        img.height(),
        args.prominence,
        &est,
    );
    write_text(&args.out, &report.to_json())?;
    Ok(if report.is_periodic() {
        Outcome::Done
    } else {
        Outcome::Aperiodic
    })
}

/// Plot the series the estimate was read from: the DMF itself, or its Haar
/// approximation for a wavelet reading.
fn plot_direction(name: &str, series: &DmfSeries, est: &DirectionEstimate) -> Result<String> {
    let values = match est.method {
        Method::Wavelet if series.len() >= 2 => haar_dwt1(&series.as_f64())?.approx,
        _ => series.as_f64(),
    };
    let title = format!(
        "{name} DMF ({})",
        match est.method {
            Method::Direct => "direct",
            Method::Wavelet => "haar approximation",
        }
    );
    Ok(plot::series_svg(
        &title,
        &values,
        &est.valleys.indices,
        &est.lattice,
    ))
}

pub fn cmd_texels(args: &TexelsArgs) -> Result<()> {
    let img = read_image(&args.image)?;
    let grid = extract_texel_grid(&img, args.period_col, args.period_row)?;
    let levels = args.glcm_levels.unwrap_or_else(|| default_levels(&img));
    let ranked = rank_texels(&img, &grid, levels)?;
    write_text(&args.out, &ranking_csv(&ranked))
}

pub fn cmd_synthesize(args: &SynthesizeArgs) -> Result<()> {
    let img = read_image(&args.image)?;
    let grid = extract_texel_grid(&img, args.period_col, args.period_row)?;
    let Some(cell) = grid.iter().find(|c| c.index == args.texel_index) else {
        bail!(
            "texel index {} is outside the grid of {} texels",
            args.texel_index,
            grid.len()
        );
    };
    let (w, h) = match &args.size {
        Some(s) => parse_pair(s)?,
        None => (img.width(), img.height()),
    };
    write_image(&args.out, &synthesize(&img, cell.rect, w, h)?)
}

pub fn cmd_generate(args: &GenerateArgs) -> Result<()> {
    let periods = args.periods.as_deref().map(parse_pair).transpose()?;
    let (w, h) = parse_pair(&args.size)?;
    let noise = parse_noise(&args.noise, noise_seed(args.seed))?;
    let texel = match args.texel.as_str() {
        "table1" => samples::reference_3bit_texel(),
        "random" => {
            let Some((pc, pr)) = periods else {
                bail!("--texel random needs --periods P_CxP_R");
            };
            samples::random_texel(pr, pc, 255, args.seed)?
        }
        path => read_image(Path::new(path))?,
    };
    if let Some((pc, pr)) = periods {
        if (pc, pr) != (texel.height(), texel.width()) {
            bail!(
                "--periods {pc}x{pr} does not match the {}x{} texel",
                texel.height(),
                texel.width()
            );
        }
    }
    let mut img = tile_texture(&texel, w, h)?;
    if let Some(spec) = noise {
        img = add_noise(&img, &spec)?;
    }
    write_image(&args.out, &img)
}

/// Noise draws use a stream separate from the random texel's.
pub fn noise_seed(seed: u64) -> u64 {
    seed ^ 0x9E37_79B9_7F4A_7C15
}
