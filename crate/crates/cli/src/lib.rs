//! Command-line driver: `holonomy analyze | suspend | classify`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use holonomy_core::classify::ClassifyOptions;
use holonomy_core::io::{
    analyze_report, classify_report, load_rep_file, suspend_report, write_rep, AnalyzeOptions, Report,
};
use holonomy_core::linalg::rational::parse_rational;
use holonomy_core::linalg::Rational;
use holonomy_core::representation::LiftSelection;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "holonomy", version, about = "Commutant analysis and classification of holonomy representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,

    /// Word length bound for the truncated derived series.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_word_length: u32,

    /// Number of derived-series levels probed.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    pub commutator_depth: u32,

    /// Central factor of the suspension, a positive rational other than 1.
    #[arg(long, global = true, default_value = "2", value_parser = parse_factor)]
    pub suspension_factor: Rational,

    /// Coefficient bound for rotational-element and radiant-shift searches.
    #[arg(long, global = true, env = "HOLONOMY_SEARCH_BOUND", default_value_t = 2,
          value_parser = clap::value_parser!(i64).range(0..=64))]
    pub search_bound: i64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Commutant, radical and derived-series probe of each input.
    Analyze {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Radiant suspension of a projective-class input.
    Suspend {
        file: PathBuf,
        /// Destination of the suspended representation; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decision procedure for projective surfaces (2) or 3-manifolds (3).
    Classify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        dim: u8,
    },
}

fn parse_factor(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

impl Cli {
    fn analyze_options(&self) -> AnalyzeOptions {
        AnalyzeOptions {
            max_word_length: self.max_word_length as usize,
            commutator_depth: self.commutator_depth as usize,
            search_bound: self.search_bound,
        }
    }

    fn classify_options(&self) -> ClassifyOptions {
        ClassifyOptions {
            search_bound: self.search_bound,
            suspension_factor: self.suspension_factor.clone(),
            lift: LiftSelection::Canonical,
        }
    }

    fn render(&self, report: &Report) -> String {
        match self.format {
            Format::Json => report.to_json(),
            Format::Text => report.to_text(),
        }
    }
}

/// Produces the rendered report for one input.
fn process(cli: &Cli, path: &Path) -> Result<String> {
    let rep = load_rep_file(path)?;
    match &cli.command {
        CommandArgs::Analyze { .. } => Ok(cli.render(&analyze_report(&rep, &cli.analyze_options())?)),
        CommandArgs::Classify { dim, .. } => {
            Ok(cli.render(&classify_report(&rep, *dim as usize, &cli.classify_options())?))
        }
        CommandArgs::Suspend { output, .. } => {
            let (suspended, report) = suspend_report(&rep, &cli.suspension_factor)?;
            match output {
                Some(out) => {
                    fs::write(out, write_rep(&suspended)).with_context(|| format!("writing {}", out.display()))?;
                    Ok(cli.render(&report))
                }
                None => Ok(write_rep(&suspended)),
            }
        }
    }
}

/// Processes every input, writing reports to `out` and errors to `err`.
/// Returns 0 iff every input was processed.
pub fn run_batch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let files: Vec<&PathBuf> = match &cli.command {
        CommandArgs::Analyze { files } | CommandArgs::Classify { files, .. } => files.iter().collect(),
        CommandArgs::Suspend { file, .. } => vec![file],
    };
    let mut status = 0;
    for path in files {
        match process(cli, path) {
            Ok(text) => {
                if out.write_all(text.as_bytes()).is_err() {
                    return 1;
                }
            }
            Err(e) => {
                let _ = writeln!(err, "{}: {:#}", path.display(), e);
                status = 1;
            }
        }
    }
    status
}

/// Parses arguments and runs; usage errors exit with 1, help and version with 0.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_batch(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            code
        }
    }
}
