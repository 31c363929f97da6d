//! `plconj`: command line access to exact piecewise linear maps and the
//! conjugacy decision procedure.
//!
//! Maps are read and written as JSON map documents. Exit codes: 0 success
//! (for `decide`, conjugate), 1 not conjugate (`decide` only), 2 invalid
//! input or usage, 3 internal invariant violation.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use plconj::conjugacy::{corner_reduce, decide_conjugacy, ConjugacyOutcome};
use plconj::generate::{random_element_of_f, random_homeomorphism, GenConfig};
use plconj::interface::{
    canonical_key, describe_mismatch, invariant_report, nodes_report, parse_map, plot_samples,
    samples_csv, serialize_map,
};
use plconj::rational::parse_rational;
use plconj::PlMap;

#[derive(Parser)]
#[command(name = "plconj", version, about = "Exact piecewise linear maps of [0,1] and their conjugacy")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a map file and print its canonical form
    Validate { file: PathBuf },
    /// Evaluate a map at a rational point of [0,1]
    Eval { file: PathBuf, x: String },
    /// Print the composite F∘G (apply G first)
    Compose { f: PathBuf, g: PathBuf },
    /// Print the inverse map
    Invert { f: PathBuf },
    /// Print the N-th iterate; negative N iterates the inverse
    Pow {
        f: PathBuf,
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// List nodes with their slope ratios
    Nodes { f: PathBuf },
    /// Print the alpha/beta invariant report of a map above the diagonal
    Invariants { f: PathBuf },
    /// Conjugate to a corner function
    Corner {
        f: PathBuf,
        /// Write the conjugator here
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Decide whether F and G are conjugate
    Decide {
        f: PathBuf,
        g: PathBuf,
        /// Write the conjugator w (with G = w∘F∘w⁻¹) here instead of stdout
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Group map files into conjugacy classes
    Classify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Generate a seeded random map (above the diagonal unless --any)
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        nodes: usize,
        #[arg(long = "denom-bound")]
        denom_bound: u64,
        /// Any homeomorphism, not necessarily above the diagonal
        #[arg(long)]
        any: bool,
    },
    /// Emit exact sample points as CSV
    Plot {
        f: PathBuf,
        #[arg(long)]
        samples: u64,
    },
}

enum Failure {
    Invalid(String),
    Internal(String),
}

impl From<plconj::Error> for Failure {
    fn from(e: plconj::Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn read_map(path: &Path) -> CliResult<PlMap> {
    let bytes = fs::read(path)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    parse_map(&bytes).map_err(|e| match Failure::from(e) {
        Failure::Invalid(m) => Failure::Invalid(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn write_map(path: &Path, f: &PlMap) -> CliResult<()> {
    fs::write(path, serialize_map(f) + "\n")
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn require_f(f: &PlMap, path: &Path) -> CliResult<()> {
    if f.is_in_f() {
        Ok(())
    } else {
        Err(Failure::Invalid(format!(
            "{}: map is not strictly above the diagonal",
            path.display()
        )))
    }
}

/// Runs a command; `Ok(false)` means a negative `decide` verdict.
fn run(command: Command) -> CliResult<bool> {
    match command {
        Command::Validate { file } => println!("{}", serialize_map(&read_map(&file)?)),
        Command::Eval { file, x } => {
            let f = read_map(&file)?;
            let x = parse_rational(&x)?;
            println!("{}", f.evaluate(&x)?);
        }
        Command::Compose { f, g } => {
            let (f, g) = (read_map(&f)?, read_map(&g)?);
            println!("{}", serialize_map(&f.compose(&g)));
        }
        Command::Invert { f } => println!("{}", serialize_map(&read_map(&f)?.inverse())),
        Command::Pow { f, n } => println!("{}", serialize_map(&read_map(&f)?.pow(n))),
        Command::Nodes { f } => println!("{}", nodes_report(&read_map(&f)?)),
        Command::Invariants { f } => {
            let map = read_map(&f)?;
            require_f(&map, &f)?;
            println!("{}", invariant_report(&map)?);
        }
        Command::Corner { f, witness } => {
            let map = read_map(&f)?;
            require_f(&map, &f)?;
            let (corner, w) = corner_reduce(&map)?;
            println!("{}", serialize_map(&corner));
            if let Some(path) = witness {
                write_map(&path, &w)?;
            }
        }
        Command::Decide { f, g, witness } => {
            let (fm, gm) = (read_map(&f)?, read_map(&g)?);
            require_f(&fm, &f)?;
            require_f(&gm, &g)?;
            match decide_conjugacy(&fm, &gm)? {
                ConjugacyOutcome::Conjugate { witness: w } => {
                    println!("conjugate");
                    match witness {
                        Some(path) => write_map(&path, &w)?,
                        None => println!("{}", serialize_map(&w)),
                    }
                }
                ConjugacyOutcome::NotConjugate(m) => {
                    println!("not conjugate: {}", describe_mismatch(&m));
                    return Ok(false);
                }
            }
        }
        Command::Classify { files } => {
            let mut keys = Vec::new();
            for path in &files {
                let map = read_map(path)?;
                require_f(&map, path)?;
                keys.push(canonical_key(&map)?);
            }
            let mut classes = Vec::new();
            for (path, key) in files.iter().zip(&keys) {
                let class = match classes.iter().position(|k| k == key) {
                    Some(i) => i,
                    None => {
                        classes.push(key.clone());
                        classes.len() - 1
                    }
                };
                println!("{class}\t{}\t{key}", path.display());
            }
        }
        Command::Random {
            seed,
            nodes,
            denom_bound,
            any,
        } => {
            let cfg = GenConfig::new(seed, nodes, denom_bound);
            let map = if any {
                random_homeomorphism(&cfg)?
            } else {
                random_element_of_f(&cfg)?
            };
            println!("{}", serialize_map(&map));
        }
        Command::Plot { f, samples } => {
            let map = read_map(&f)?;
            print!("{}", samples_csv(&plot_samples(&map, samples)?));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
