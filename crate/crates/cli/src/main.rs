use std::fs::File;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use so21::boundary::SolverConfig;

use so21_cli::commands;
use so21_cli::input::parse_element;
use so21_cli::output::{write_cut_table, write_rows, Format};
use so21_cli::CliError;

/// Geodesics, cut times and distances of the sub-Riemannian Lorentz group SO0(2,1).
#[derive(Parser)]
#[command(name = "so21", version)]
struct Cli {
    /// Tolerance of the group invariants checked on matrix input.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol_group: f64,
    /// Largest accepted endpoint error of the boundary solver.
    #[arg(long, global = true, default_value_t = SolverConfig::default().gate)]
    gate: f64,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a geodesic from the identity.
    #[command(allow_negative_numbers = true)]
    Geodesic {
        #[arg(long, default_value_t = 0.0)]
        phi0: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        t_max: f64,
        #[arg(long, default_value_t = 101)]
        samples: usize,
    },
    /// Tabulate cut times over a range of beta.
    Cuttable {
        #[arg(long)]
        beta_min: f64,
        #[arg(long)]
        beta_max: f64,
        #[arg(long, default_value_t = 101)]
        steps: usize,
    },
    /// Sub-Riemannian distance from the identity, with all minimisers found.
    Dist(MatrixArg),
    /// Shortest geodesics from the identity to a matrix.
    Log(MatrixArg),
    /// Cut point of the geodesic with the given parameters.
    #[command(allow_negative_numbers = true)]
    Cutpoint {
        #[arg(long, default_value_t = 0.0)]
        phi0: f64,
        #[arg(long)]
        beta: f64,
    },
    /// Exponential of a*A + b*B + c*C.
    #[command(allow_negative_numbers = true)]
    Expmap {
        #[arg(long, default_value_t = 0.0)]
        a: f64,
        #[arg(long, default_value_t = 0.0)]
        b: f64,
        #[arg(long, default_value_t = 0.0)]
        c: f64,
    },
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct MatrixArg {
    /// Nine entries, row-major, separated by whitespace or commas. Read from
    /// stdin when absent.
    entries: Vec<String>,
}

impl MatrixArg {
    fn text(&self) -> Result<String, CliError> {
        if !self.entries.is_empty() {
            return Ok(self.entries.join(" "));
        }
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
        Ok(s)
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let valid = cli.tol_group >= 0.0 && cli.gate > 0.0;
    if !valid {
        return Err(CliError::Input(
            "tolerances must be non-negative and the gate positive".into(),
        ));
    }
    let config = SolverConfig {
        gate: cli.gate,
        ..SolverConfig::default()
    };
    let mut buf = Vec::new();
    let w = &mut buf;
    let f = cli.format;
    match &cli.command {
        Command::Geodesic {
            phi0,
            beta,
            t_max,
            samples,
        } => write_rows(w, f, &commands::geodesic(*phi0, *beta, *t_max, *samples)?)?,
        Command::Cuttable {
            beta_min,
            beta_max,
            steps,
        } => write_cut_table(w, f, &commands::cuttable(*beta_min, *beta_max, *steps)?)?,
        Command::Dist(m) => {
            let g = parse_element(&m.text()?, cli.tol_group)?;
            write_rows(w, f, &commands::dist(&g, &config)?)?
        }
        Command::Log(m) => {
            let g = parse_element(&m.text()?, cli.tol_group)?;
            write_rows(w, f, &commands::log(&g, &config)?)?
        }
        Command::Cutpoint { phi0, beta } => write_rows(w, f, &[commands::cutpoint(*phi0, *beta)?])?,
        Command::Expmap { a, b, c } => write_rows(w, f, &[commands::expmap(*a, *b, *c)?])?,
    }
    let written = match &cli.out {
        Some(path) => File::create(path).and_then(|mut file| file.write_all(&buf)),
        None => io::stdout().lock().write_all(&buf),
    };
    written.map_err(|e| CliError::Input(format!("cannot write output: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("so21: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
