use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use entc::bench::{self, BenchConfig, ImageKind, ImageSpec};
use entc::codec::{self, Codec, SourceKind};
use entc::container::Container;
use entc::netpbm;
use entc::pipeline::DEFAULT_QUALITY;

#[derive(Parser)]
#[command(name = "entc", version, about = "Huffman and arithmetic image coding")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compress a PGM image into an ENTC container.
    Encode {
        #[arg(long, default_value = "huffman")]
        codec: Codec,
        #[arg(long, default_value = "raw")]
        source: SourceKind,
        /// Quantizer quality (1-100); pipeline source only.
        #[arg(long, default_value_t = DEFAULT_QUALITY, value_parser = clap::value_parser!(u8).range(1..=100))]
        quality: u8,
        input: PathBuf,
        output: PathBuf,
    },
    /// Restore a PGM image from an ENTC container.
    Decode { input: PathBuf, output: PathBuf },
    /// Compare the two coders over a ladder of sizes.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = bench::DEFAULT_SIZES)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = bench::DEFAULT_REPETITIONS)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "raw")]
        source: SourceKind,
        #[arg(long, default_value_t = DEFAULT_QUALITY, value_parser = clap::value_parser!(u8).range(1..=100))]
        quality: u8,
        /// Synthetic image kind, used when no image files are given.
        #[arg(long, default_value = "natural_mix")]
        kind: ImageKind,
        #[arg(long)]
        csv: Option<PathBuf>,
        /// PGM files to benchmark at their own size.
        images: Vec<PathBuf>,
    },
    /// Write a synthetic test image.
    Gen {
        #[arg(long, default_value = "natural_mix")]
        kind: ImageKind,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        output: PathBuf,
    },
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Encode {
            codec: c,
            source,
            quality,
            input,
            output,
        } => {
            let bytes = fs::read(&input).with_context(|| format!("reading {}", input.display()))?;
            let plane = netpbm::parse_pgm(&bytes).with_context(|| format!("parsing {}", input.display()))?;
            let container = codec::encode_plane(&plane, c, source, quality)?;
            fs::write(&output, container.to_bytes()).with_context(|| format!("writing {}", output.display()))?;
        }
        Command::Decode { input, output } => {
            let bytes = fs::read(&input).with_context(|| format!("reading {}", input.display()))?;
            let container = Container::from_bytes(&bytes).with_context(|| format!("parsing {}", input.display()))?;
            let plane = codec::decode_container(&container)?;
            fs::write(&output, netpbm::write_pgm(&plane)).with_context(|| format!("writing {}", output.display()))?;
        }
        Command::Bench {
            sizes,
            reps,
            seed,
            source,
            quality,
            kind,
            csv,
            images,
        } => {
            let images = if images.is_empty() {
                vec![ImageSpec::Synthetic(kind)]
            } else {
                images.into_iter().map(ImageSpec::File).collect()
            };
            let config = BenchConfig {
                sizes,
                repetitions: reps,
                source,
                images,
                seed,
                quality,
            };
            let report = bench::run_benchmark(&config)?;
            print!("{}", bench::format_table(&report));
            if let Some(path) = csv {
                let file = fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                bench::write_csv(&report, file)?;
            }
        }
        Command::Gen {
            kind,
            size,
            seed,
            output,
        } => {
            let plane = bench::generate_test_image(kind, size, seed)?;
            fs::write(&output, netpbm::write_pgm(&plane)).with_context(|| format!("writing {}", output.display()))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("entc: {e:#}");
            ExitCode::FAILURE
        }
    }
}
