//! `tsys`: exact evolution of T-fields, boundary theorems, and the
//! pentagram map, with machine-readable reports.
//!
//! Exit codes: 0 all checks passed, 1 a property failed, 2 bad input or
//! usage. Identical command lines (including `--seed`) produce identical
//! bytes; nothing in a report depends on the clock or the machine.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tsys_cli::drive;
use tsys_cli::io;

#[derive(Parser)]
#[command(name = "tsys", version, about = "Octahedron recurrences, boundary theorems, and pentagram maps in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Output format; csv is available for numeric series only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evolve an initial surface upward and print the computed values.
    Evolve {
        /// Surface file (json).
        #[arg(long)]
        input: PathBuf,
        /// Highest level to compute.
        #[arg(long, default_value_t = 4)]
        kmax: i64,
    },
    /// Check torus Y-dynamics: double periodicity and map read-off.
    Ysys {
        /// Coordinate file (json) with kappa, p, q.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        kappa: i64,
        /// Torus width; ignored when --input fixes it.
        #[arg(long, default_value_t = 5)]
        n: i64,
        /// Number of evolved levels to compare.
        #[arg(long, default_value_t = 6)]
        levels: i64,
        /// Half-width of the computed window (default n + levels).
        #[arg(long)]
        half: Option<i64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate one value as a network determinant with its path weights.
    Lgv {
        /// Surface file (json); omitted means the generic symbolic surface.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        i: i64,
        #[arg(long, default_value_t = 0)]
        j: i64,
        /// Levels above the surface.
        #[arg(long, default_value_t = 3)]
        k: i64,
    },
    /// Check the wall consequences: zero window and signed mirror.
    Wall {
        /// Strip file (json) with d and a value grid.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        d: i64,
        #[arg(long, default_value_t = 3)]
        kmax: i64,
        /// Columns of random data when no input is given.
        #[arg(long)]
        jmax: Option<i64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check two-wall periodicity and the reflection identity.
    Zamolodchikov {
        /// Tube file (json) with d, ell and a value grid.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        d: i64,
        #[arg(long, default_value_t = 1)]
        ell: i64,
        /// How many periods of levels to compare.
        #[arg(long, default_value_t = 2)]
        levels: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Condense a matrix to its determinant, printing every stage.
    Condense {
        /// Matrix file (json).
        #[arg(long)]
        input: PathBuf,
    },
    /// Compute linear recursion coefficients for a one-wall strip.
    Coeffs {
        /// Strip file (json) with d and a value grid.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        d: i64,
        /// Columns of random data when no input is given.
        #[arg(long)]
        jmax: Option<i64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Iterate the higher pentagram map and track the conserved products.
    Pentagram {
        /// Polygon or coordinate file (json).
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        kappa: i64,
        /// Number of vertices when no input is given.
        #[arg(long, default_value_t = 8)]
        n: i64,
        #[arg(long, default_value_t = 20)]
        iters: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Realize one map step by quiver mutations and compare.
    Mutations {
        /// Coordinate file (json) with kappa, p, q.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        kappa: i64,
        #[arg(long, default_value_t = 8)]
        n: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Unfold quasi-periodic data and check the scaling laws.
    Unfold {
        /// Quasi-periodic surface file (json).
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        kappa: i64,
        #[arg(long, default_value_t = 5)]
        n: i64,
        #[arg(long, default_value_t = 4)]
        kmax: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run every acceptance property and report per-check results.
    VerifyAll {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn dispatch(cli: &Cli) -> Result<drive::RunOutput, String> {
    match &cli.cmd {
        Cmd::Evolve { input, kmax } => drive::evolve(Some(input), *kmax),
        Cmd::Ysys { input, kappa, n, levels, half, seed } => {
            drive::ysys(input.as_deref(), *kappa, *n, *levels, *half, *seed)
        }
        Cmd::Lgv { input, i, j, k } => drive::lgv(input.as_deref(), *i, *j, *k),
        Cmd::Wall { input, d, kmax, jmax, seed } => {
            drive::wall(input.as_deref(), *d, *kmax, *jmax, *seed)
        }
        Cmd::Zamolodchikov { input, d, ell, levels, seed } => {
            drive::zamolodchikov(input.as_deref(), *d, *ell, *levels, *seed)
        }
        Cmd::Condense { input } => drive::condense(Some(input)),
        Cmd::Coeffs { input, d, jmax, seed } => drive::coeffs(input.as_deref(), *d, *jmax, *seed),
        Cmd::Pentagram { input, kappa, n, iters, seed } => {
            drive::pentagram(input.as_deref(), *kappa, *n, *iters, *seed)
        }
        Cmd::Mutations { input, kappa, n, seed } => {
            drive::mutations(input.as_deref(), *kappa, *n, *seed)
        }
        Cmd::Unfold { input, kappa, n, kmax, seed } => {
            drive::unfold(input.as_deref(), *kappa, *n, *kmax, *seed)
        }
        Cmd::VerifyAll { seed } => drive::verify_all(*seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => io::json_text(&out.json),
                Format::Csv => match out.csv {
                    Some(c) => c,
                    None => {
                        eprintln!("error: this subcommand has no csv series; use --format json");
                        return ExitCode::from(2);
                    }
                },
            };
            if let Err(e) = io::emit(&text, cli.output.as_deref()) {
                eprintln!("error: {}", e);
                return ExitCode::from(2);
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
