//! Ratio/time benchmark of the two entropy coders over a ladder of image
//! sizes.
//!
//! Each (image, codec) cell gets one warmup encode and then `repetitions`
//! timed encodes on a monotonic clock. Only the entropy stage is timed:
//! counting, model or tree construction, coding and container assembly. The
//! symbol stream is prepared beforehand. Compressed size is the whole
//! container, so the serialized frequency table is charged to both coders.

use std::fmt::Write as _;
use std::hint::black_box;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codec::{compression_ratio, encode_symbols, source_symbols, Codec, SourceKind};
use crate::netpbm::parse_pgm;
use crate::pipeline::{ImagePlane, DEFAULT_QUALITY};
use crate::{Error, Result};

pub const DEFAULT_SIZES: [usize; 5] = [128, 256, 512, 1024, 2048];
pub const DEFAULT_REPETITIONS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImageKind {
    /// Horizontal ramp from 0 to 255.
    Gradient,
    /// Uniform random bytes.
    Noise,
    /// Smooth low-frequency field plus light seeded noise.
    NaturalMix,
}

impl ImageKind {
    pub fn name(self) -> &'static str {
        match self {
            ImageKind::Gradient => "gradient",
            ImageKind::Noise => "noise",
            ImageKind::NaturalMix => "natural_mix",
        }
    }
}

impl FromStr for ImageKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gradient" => Ok(ImageKind::Gradient),
            "noise" => Ok(ImageKind::Noise),
            "natural_mix" => Ok(ImageKind::NaturalMix),
            _ => Err(Error::BadConfig(format!("unknown image kind {s:?}"))),
        }
    }
}

pub fn generate_test_image(kind: ImageKind, size: usize, seed: u64) -> Result<ImagePlane> {
    if size < 8 {
        return Err(Error::BadConfig(format!("image size {size} is below 8")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match kind {
        ImageKind::Gradient => {
            ImagePlane::from_fn(size, size, |x, _| ((x * 255) as f64 / (size - 1) as f64).round() as u8)
        }
        ImageKind::Noise => {
            let mut samples = vec![0u8; size * size];
            rng.fill(&mut samples[..]);
            ImagePlane::new(size, size, samples)?
        }
        ImageKind::NaturalMix => natural_mix(&mut rng, size),
    })
}

struct Wave {
    amp: f64,
    fx: f64,
    fy: f64,
    phase: f64,
}

struct Blob {
    cx: f64,
    cy: f64,
    inv_two_sigma2: f64,
    amp: f64,
}

/// Features are placed in unit coordinates, so a larger image shows the
/// same scene with smoother blocks.
fn natural_mix(rng: &mut ChaCha8Rng, size: usize) -> ImagePlane {
    use std::f64::consts::TAU;
    let waves: Vec<Wave> = (0..4)
        .map(|_| Wave {
            amp: rng.random_range(10.0..35.0),
            fx: rng.random_range(0.5..3.0),
            fy: rng.random_range(0.5..3.0),
            phase: rng.random_range(0.0..TAU),
        })
        .collect();
    let blobs: Vec<Blob> = (0..3)
        .map(|_| {
            let sigma: f64 = rng.random_range(0.05..0.2);
            Blob {
                cx: rng.random_range(0.0..1.0),
                cy: rng.random_range(0.0..1.0),
                inv_two_sigma2: 1.0 / (2.0 * sigma * sigma),
                amp: rng.random_range(-60.0..60.0),
            }
        })
        .collect();
    let n = size as f64;
    ImagePlane::from_fn(size, size, |x, y| {
        let (u, v) = (x as f64 / n, y as f64 / n);
        let mut val = 128.0;
        for w in &waves {
            val += w.amp * (TAU * (w.fx * u + w.fy * v) + w.phase).sin();
        }
        for b in &blobs {
            let d2 = (u - b.cx).powi(2) + (v - b.cy).powi(2);
            val += b.amp * (-d2 * b.inv_two_sigma2).exp();
        }
        val += rng.random_range(-2i32..=2) as f64;
        val.round().clamp(0.0, 255.0) as u8
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum ImageSpec {
    Synthetic(ImageKind),
    File(PathBuf),
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub repetitions: usize,
    pub source: SourceKind,
    pub images: Vec<ImageSpec>,
    pub seed: u64,
    pub quality: u8,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            sizes: DEFAULT_SIZES.to_vec(),
            repetitions: DEFAULT_REPETITIONS,
            source: SourceKind::Raw,
            images: vec![ImageSpec::Synthetic(ImageKind::NaturalMix)],
            seed: 0,
            quality: DEFAULT_QUALITY,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.repetitions == 0 {
            return Err(Error::BadConfig("repetitions must be at least 1".into()));
        }
        if self.images.is_empty() {
            return Err(Error::BadConfig("no images to benchmark".into()));
        }
        let synthetic = self.images.iter().any(|i| matches!(i, ImageSpec::Synthetic(_)));
        if synthetic && self.sizes.is_empty() {
            return Err(Error::BadConfig("synthetic images need at least one size".into()));
        }
        if let Some(s) = self.sizes.iter().find(|&&s| s < 8) {
            return Err(Error::BadConfig(format!("size {s} is below 8")));
        }
        if !(1..=100).contains(&self.quality) {
            return Err(Error::BadConfig(format!("quality {} outside 1..=100", self.quality)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub image_id: String,
    pub width: usize,
    pub height: usize,
    pub codec: Codec,
    pub original_bits: u64,
    pub compressed_bits: u64,
    pub compression_ratio: f64,
    /// Wall seconds per timed repetition.
    pub times: Vec<f64>,
    pub median_s: f64,
    pub mean_s: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub image_id: String,
    pub width: usize,
    pub height: usize,
    pub huffman_ratio: f64,
    pub arithmetic_ratio: f64,
    pub huffman_time: f64,
    pub arithmetic_time: f64,
    pub compression_pct: i64,
    pub time_pct: i64,
}

impl ComparisonRow {
    pub fn size_label(&self) -> String {
        format!("{}x{}", self.width, self.height)
    }
}

/// `trunc((arith - huffman) / arith * 100)`.
pub fn relative_pct(huffman: f64, arithmetic: f64) -> Result<i64> {
    if arithmetic == 0.0 {
        return Err(Error::DivisionByZero);
    }
    Ok(((arithmetic - huffman) / arithmetic * 100.0).trunc() as i64)
}

/// Percentages use median times.
pub fn compare_records(huffman: &BenchRecord, arithmetic: &BenchRecord) -> Result<ComparisonRow> {
    if (huffman.width, huffman.height) != (arithmetic.width, arithmetic.height)
        || huffman.image_id != arithmetic.image_id
    {
        return Err(Error::ShapeError(format!(
            "cannot compare {} {}x{} with {} {}x{}",
            huffman.image_id, huffman.width, huffman.height,
            arithmetic.image_id, arithmetic.width, arithmetic.height
        )));
    }
    Ok(ComparisonRow {
        image_id: huffman.image_id.clone(),
        width: huffman.width,
        height: huffman.height,
        huffman_ratio: huffman.compression_ratio,
        arithmetic_ratio: arithmetic.compression_ratio,
        huffman_time: huffman.median_s,
        arithmetic_time: arithmetic.median_s,
        compression_pct: relative_pct(huffman.compression_ratio, arithmetic.compression_ratio)?,
        time_pct: relative_pct(huffman.median_s, arithmetic.median_s)?,
    })
}

pub fn median(values: &[f64]) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n == 0 {
        f64::NAN
    } else if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    }
}

pub fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Times `repetitions` entropy encodes of one prepared image.
pub fn measure(
    image_id: &str,
    plane: &ImagePlane,
    codec: Codec,
    source: SourceKind,
    quality: u8,
    repetitions: usize,
) -> Result<BenchRecord> {
    let symbols = source_symbols(plane, source, quality)?;
    let (w, h) = (plane.width() as u32, plane.height() as u32);
    let warm = encode_symbols(&symbols, codec, source, w, h)?;
    let compressed_bits = warm.byte_len() as u64 * 8;
    let original_bits = plane.samples().len() as u64 * 8;
    let mut times = Vec::with_capacity(repetitions);
    for _ in 0..repetitions {
        let start = Instant::now();
        let c = encode_symbols(black_box(&symbols), codec, source, w, h)?;
        black_box(&c);
        times.push(start.elapsed().as_secs_f64());
    }
    Ok(BenchRecord {
        image_id: image_id.to_string(),
        width: plane.width(),
        height: plane.height(),
        codec,
        original_bits,
        compressed_bits,
        compression_ratio: compression_ratio(original_bits, compressed_bits)?,
        median_s: median(&times),
        mean_s: mean(&times),
        times,
    })
}

#[derive(Debug, Clone, Default)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
    pub rows: Vec<ComparisonRow>,
}

fn load_pgm(path: &Path) -> Result<ImagePlane> {
    parse_pgm(&std::fs::read(path)?)
}

pub fn run_benchmark(config: &BenchConfig) -> Result<BenchReport> {
    config.validate()?;
    let mut jobs: Vec<(String, ImagePlane)> = Vec::new();
    for spec in &config.images {
        match spec {
            ImageSpec::Synthetic(kind) => {
                for &size in &config.sizes {
                    let plane = generate_test_image(*kind, size, config.seed)?;
                    jobs.push((format!("{}-s{}", kind.name(), config.seed), plane));
                }
            }
            ImageSpec::File(path) => {
                let id = path
                    .file_stem()
                    .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
                jobs.push((id, load_pgm(path)?));
            }
        }
    }
    let mut report = BenchReport::default();
    for (id, plane) in &jobs {
        let run = |codec| measure(id, plane, codec, config.source, config.quality, config.repetitions);
        let h = run(Codec::Huffman)?;
        let a = run(Codec::Arithmetic)?;
        report.rows.push(compare_records(&h, &a)?);
        report.records.push(h);
        report.records.push(a);
    }
    Ok(report)
}

pub const CSV_HEADER: [&str; 8] = [
    "size",
    "image_id",
    "codec",
    "ratio",
    "time_median_s",
    "time_mean_s",
    "compression_pct",
    "time_pct",
];

/// One line per (image, codec); the comparison percentages of the image
/// repeat on both of its lines.
pub fn write_csv<W: Write>(report: &BenchReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for rec in &report.records {
        let row = report
            .rows
            .iter()
            .find(|r| r.image_id == rec.image_id && (r.width, r.height) == (rec.width, rec.height));
        let (cp, tp) = row.map_or((String::new(), String::new()), |r| {
            (r.compression_pct.to_string(), r.time_pct.to_string())
        });
        w.write_record([
            format!("{}x{}", rec.width, rec.height),
            rec.image_id.clone(),
            rec.codec.to_string(),
            format!("{:.4}", rec.compression_ratio),
            format!("{:.9}", rec.median_s),
            format!("{:.9}", rec.mean_s),
            cp,
            tp,
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Human-readable comparison table. Ratios are original bits over
/// compressed bits (dimensionless).
pub fn format_table(report: &BenchReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<12} {:<20} {:>9} {:>9} {:>12} {:>12} {:>6} {:>6}",
        "size", "image", "H ratio", "A ratio", "H time (s)", "A time (s)", "comp%", "time%"
    );
    for r in &report.rows {
        let _ = writeln!(
            s,
            "{:<12} {:<20} {:>9.3} {:>9.3} {:>12.6} {:>12.6} {:>6} {:>6}",
            r.size_label(),
            r.image_id,
            r.huffman_ratio,
            r.arithmetic_ratio,
            r.huffman_time,
            r.arithmetic_time,
            r.compression_pct,
            r.time_pct
        );
    }
    s
}
