//! `ptcl` — spectra, verification runs and figure data for the PT-symmetric
//! oscillator/Coulomb pair.
//!
//! Exit codes: 0 success, 1 verification tolerance breach or runtime failure,
//! 2 flag/config validation failure.

mod commands;
mod config;
mod output;

use clap::{Parser, Subcommand};
use config::Config;
use output::Format;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(
    name = "ptcl",
    about = "PT-symmetric oscillator/Coulomb pair: closed-form spectra, shooting verification, figure data",
    version
)]
struct Cli {
    /// Output format: csv or json [default: csv]
    #[arg(long, global = true)]
    format: Option<String>,

    /// Write output to this file instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Flat JSON config file; command-line flags override its values
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form spectrum table for one model
    Spectrum {
        /// Model: ho or coulomb
        model: String,
        /// Oscillator angular parameter alpha (model ho)
        #[arg(long)]
        alpha: Option<f64>,
        /// Coulomb angular parameter A (model coulomb)
        #[arg(long = "A")]
        big_a: Option<f64>,
        /// Coulomb coupling Ze^2 [default: 1]
        #[arg(long)]
        ze2: Option<f64>,
        /// Highest principal index n
        #[arg(long = "n-max")]
        n_max: Option<u32>,
        /// Quasi-parity filter: +1, -1 or both [default: both]
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
    },

    /// Run a named verification and exit 0 only if every tolerance is met
    /// (PTCL_TOL overrides the shooting residual gate, default 1e-8)
    Verify {
        /// Check to run: residual, liouville or shoot
        target: String,
        /// Model: ho or coulomb (residual and shoot)
        #[arg(long)]
        model: Option<String>,
        /// Principal index n
        #[arg(long)]
        n: Option<u32>,
        /// Quasi-parity: +1 or -1
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        /// Oscillator angular parameter alpha
        #[arg(long)]
        alpha: Option<f64>,
        /// Coulomb angular parameter A
        #[arg(long = "A")]
        big_a: Option<f64>,
        /// Coulomb coupling Ze^2 [default: 1]
        #[arg(long)]
        ze2: Option<f64>,
        /// Scan window lower edge (shoot)
        #[arg(long = "e-min")]
        e_min: Option<f64>,
        /// Scan window upper edge (shoot)
        #[arg(long = "e-max")]
        e_max: Option<f64>,
        /// Scan grid points (shoot) [default: 400]
        #[arg(long)]
        grid: Option<usize>,
        /// Contour kind: shifted_line, ks_parabola or decaying_shift_line
        #[arg(long = "contour-kind")]
        contour_kind: Option<String>,
        /// Contour downward shift c [default: 1]
        #[arg(long = "contour-c")]
        contour_c: Option<f64>,
        /// Parabola path scale kappa_c^2 [default: 1]
        #[arg(long = "kappa-c-sq")]
        kappa_c_sq: Option<f64>,
        /// Decay exponent eta (decaying_shift_line only)
        #[arg(long)]
        eta: Option<f64>,
        /// Contour truncation x_max [default: 12 for lines, 20 for parabolas]
        #[arg(long = "x-max")]
        x_max: Option<f64>,
    },

    /// Formula-generated curve data for the spectral figures
    Figure {
        /// Which figure: 1 (q=+1 levels), 2 (q=-1 levels) or 3 (one crossing)
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        /// Lower edge of the A range
        #[arg(long = "a-min")]
        a_min: Option<f64>,
        /// Upper edge of the A range
        #[arg(long = "a-max")]
        a_max: Option<f64>,
        /// Step of the A range
        #[arg(long = "a-step")]
        a_step: Option<f64>,
        /// Principal indices (figures 1-2: a list; figure 3: the first member)
        #[arg(long, num_args = 1..)]
        n: Option<Vec<u32>>,
        /// Second member n' of the crossing (figure 3)
        #[arg(long)]
        nprime: Option<u32>,
        /// Crossing kind for figure 3: opposite or same-positive
        #[arg(long)]
        crossing: Option<String>,
        /// Coulomb coupling Ze^2 [default: 1]
        #[arg(long)]
        ze2: Option<f64>,
    },

    /// Table of unavoided level crossings with n, n' up to n-max
    Crossings {
        /// Highest principal index considered
        #[arg(long = "n-max", allow_hyphen_values = true)]
        n_max: Option<i64>,
        /// Coulomb coupling Ze^2 [default: 1]
        #[arg(long)]
        ze2: Option<f64>,
    },
}

/// Usage errors exit 2 (bad flags or config); failures exit 1 (a tolerance
/// breach or a solver error).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    fn failure(msg: impl Into<String>) -> Self {
        CliError::Failure(msg.into())
    }
}

fn load_config(path: &Option<PathBuf>) -> Result<Config, CliError> {
    match path {
        Some(p) => Config::load(p).map_err(CliError::Usage),
        None => Ok(Config::default()),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = load_config(&cli.config)?;

    let format: Format = cli
        .format
        .or_else(|| cfg.string("format"))
        .unwrap_or_else(|| "csv".to_string())
        .parse()
        .map_err(|e: String| CliError::usage(format!("--format: {e}")))?;
    let output_path = cli
        .output
        .or_else(|| cfg.string("output").map(PathBuf::from));

    let mut sink: Box<dyn std::io::Write> = match &output_path {
        Some(path) => Box::new(std::fs::File::create(path).map_err(|e| {
            CliError::usage(format!("--output: cannot create {}: {e}", path.display()))
        })?),
        None => Box::new(std::io::stdout().lock()),
    };

    match cli.command {
        Command::Spectrum {
            model,
            alpha,
            big_a,
            ze2,
            n_max,
            q,
        } => {
            let table = commands::cmd_spectrum(&cfg, &model, alpha, big_a, ze2, n_max, q)?;
            table
                .write(format, &mut sink)
                .map_err(|e| CliError::failure(format!("write failed: {e}")))?;
        }
        Command::Figure {
            which,
            a_min,
            a_max,
            a_step,
            n,
            nprime,
            crossing,
            ze2,
        } => {
            let table = commands::cmd_figure(
                &cfg, which, a_min, a_max, a_step, n, nprime, crossing, ze2,
            )?;
            table
                .write(format, &mut sink)
                .map_err(|e| CliError::failure(format!("write failed: {e}")))?;
        }
        Command::Crossings { n_max, ze2 } => {
            let table = commands::cmd_crossings(&cfg, n_max, ze2)?;
            table
                .write(format, &mut sink)
                .map_err(|e| CliError::failure(format!("write failed: {e}")))?;
        }
        Command::Verify {
            target,
            model,
            n,
            q,
            alpha,
            big_a,
            ze2,
            e_min,
            e_max,
            grid,
            contour_kind,
            contour_c,
            kappa_c_sq,
            eta,
            x_max,
        } => {
            let contour_flags = commands::ContourFlags {
                kind: contour_kind,
                c: contour_c,
                kappa_c_sq,
                eta,
                x_max,
            };
            let report = commands::cmd_verify(
                &cfg,
                &target,
                model,
                n,
                q,
                alpha,
                big_a,
                ze2,
                e_min,
                e_max,
                grid,
                contour_flags,
            )?;
            for line in &report.lines {
                writeln!(sink, "{line}")
                    .map_err(|e| CliError::failure(format!("write failed: {e}")))?;
            }
            if !report.pass {
                return Err(CliError::Failure(String::new()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(1)
        }
    }
}
