//! `hqft`: state sums, moves and cobordism words from JSON files.
//!
//! Every command prints a JSON report on stdout. Exit codes: 0 when every
//! check passes, 1 for bad input, 2 for numerical trouble, 3 when the
//! acceptance suite fails.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hqft::acceptance::{self, AcceptanceConfig, Mutation};
use hqft::commands::{self, AlgebraInputs, Failure, Input};
use hqft::io;
use hqft::report::{RunReport, EXIT_ACCEPTANCE, EXIT_INPUT, EXIT_NUMERICAL, EXIT_PASS};

#[derive(Parser)]
#[command(name = "hqft", version, about = "Homotopy state sums on triangulated surfaces")]
struct Cli {
    /// Override the numerical tolerance.
    #[arg(long, global = true, value_name = "FLOAT")]
    tol: Option<f64>,
    /// Seed for the randomized acceptance criteria.
    #[arg(long, global = true, default_value_t = acceptance::DEFAULT_SEED)]
    seed: u64,
    /// Run independent checks concurrently.
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Algebra file.
    algebra: PathBuf,
    /// Group file; without an action the group acts by the unit.
    #[arg(long)]
    group: Option<PathBuf>,
    /// Action file, one central image per generator.
    #[arg(long, requires = "group")]
    action: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra and optional action.
    CheckAlgebra(AlgebraArgs),
    /// Evaluate Z of a labeled surface.
    Statesum {
        surface: PathBuf,
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Also sum over colorings and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Compare the planned contraction with the coloring sum.
    Oracle {
        surface: PathBuf,
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Apply one move: 1-3:T, 3-1:T:C, 2-2:Q or shift:FROM:TO.
    Move {
        surface: PathBuf,
        #[arg(allow_hyphen_values = true)]
        spec: String,
        #[arg(long)]
        group: Option<PathBuf>,
        /// Where to write the new surface; without it the surface is
        /// included in the report.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a cobordism word such as "unit ; copants ; pants ; counit".
    Cobord {
        expr: String,
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Compare the closed genus-h word with the triangulated surface.
    Genus {
        h: i64,
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Residues of the total class, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        class: Vec<i64>,
    },
    /// Run the eight acceptance criteria.
    Acceptance {
        /// Negate eta before checking duality, to see the suite fail.
        #[arg(long, hide = true)]
        negate_eta: bool,
    },
}

fn read(path: &Path) -> Result<Input, Failure> {
    let name = path.display().to_string();
    match io::read_with_digest(path) {
        Ok((text, _)) => Ok(Input::new(name, text)),
        Err(e) => Err(Failure {
            command: String::new(),
            error: "Read".into(),
            message: e.to_string(),
            code: EXIT_INPUT,
        }),
    }
}

fn algebra_inputs(a: &AlgebraArgs, tol: Option<f64>) -> Result<AlgebraInputs, Failure> {
    Ok(AlgebraInputs {
        algebra: read(&a.algebra)?,
        group: a.group.as_deref().map(read).transpose()?,
        action: a.action.as_deref().map(read).transpose()?,
        tolerance: tol,
    })
}

fn run(cli: &Cli) -> Result<(RunReport, i32), Failure> {
    let tol = cli.tol;
    // failing checks in a validation command mean bad input, elsewhere they
    // mean the numbers disagree
    let (report, fail_code) = match &cli.command {
        Command::CheckAlgebra(a) => (commands::check_algebra(&algebra_inputs(a, tol)?)?, EXIT_INPUT),
        Command::Statesum { surface, algebra, oracle } => {
            (commands::statesum(&read(surface)?, &algebra_inputs(algebra, tol)?, *oracle)?, EXIT_NUMERICAL)
        }
        Command::Oracle { surface, algebra } => {
            (commands::oracle(&read(surface)?, &algebra_inputs(algebra, tol)?)?, EXIT_NUMERICAL)
        }
        Command::Move { surface, spec, group, out } => {
            let group = group.as_deref().map(read).transpose()?;
            let (mut report, json) = commands::apply_move(&read(surface)?, group.as_ref(), spec)?;
            match out {
                Some(p) => {
                    std::fs::write(p, &json).map_err(|e| Failure {
                        command: "move".into(),
                        error: "Write".into(),
                        message: format!("{}: {e}", p.display()),
                        code: EXIT_INPUT,
                    })?;
                    report.output("out", p.display().to_string());
                }
                None => report.output("surface", serde_json::from_str::<serde_json::Value>(&json).expect("writer emits JSON")),
            }
            (report, EXIT_INPUT)
        }
        Command::Cobord { expr, algebra } => (commands::cobord(expr, &algebra_inputs(algebra, tol)?)?, EXIT_NUMERICAL),
        Command::Genus { h, algebra, class } => {
            (commands::genus(*h, class, &algebra_inputs(algebra, tol)?)?, EXIT_NUMERICAL)
        }
        Command::Acceptance { negate_eta } => {
            let cfg = AcceptanceConfig {
                seed: cli.seed,
                tolerance: tol,
                parallel: cli.parallel,
                mutation: negate_eta.then_some(Mutation::NegateEta),
            };
            let report = acceptance::report(&cfg);
            if let Some(lines) = report.outputs.get("criteria").and_then(|v| v.as_array()) {
                for l in lines {
                    eprintln!("{}", l.as_str().unwrap_or_default());
                }
            }
            (report, EXIT_ACCEPTANCE)
        }
    };
    let code = if report.pass { EXIT_PASS } else { fail_code };
    Ok((report, code))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok((report, code)) => {
            println!("{}", report.to_json());
            code
        }
        Err(f) => {
            println!("{}", f.to_json());
            eprintln!("error: {}: {}", f.error, f.message);
            f.code
        }
    };
    ExitCode::from(code as u8)
}
