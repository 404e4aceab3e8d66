use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use absorb_core::classify::{classify_all_with, minimal_classical_2_absorbing, Predicate, DEFAULT_MAX_N};
use absorb_core::export::{classification_report, classification_text, suite_line, to_dot, verify_text};
use absorb_core::harness::{search_separating, verify, InstanceFamily, SearchOutcome, SuiteId};
use absorb_core::module::Module;
use absorb_core::spec::{parse_module, parse_ring};
use absorb_core::Error;

const EXIT_ASSERTION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_EXHAUSTED: u8 = 3;

/// Classify submodules of finite modules and check absorbing-submodule theorems exhaustively.
#[derive(Parser)]
#[command(name = "absorb", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every proper submodule of a module.
    Classify {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Largest k for the n-absorbing flags.
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run theorem suites; exit 1 if a tier A assertion fails.
    Verify {
        /// Comma-separated suite ids, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find a submodule in the `left` class but not the `right` one; exit 3 if none.
    Search {
        /// prime, classical-prime, 2abs, c2a, or <k>abs.
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the submodule lattice as DOT or JSON.
    Export {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Target {
    /// Ring, e.g. `Z8` or `Z2xZ3`.
    #[arg(long)]
    ring: Option<String>,
    /// Cyclic orders on coordinate 0 (`"2,4"`) or module JSON; defaults to the ring itself.
    #[arg(long)]
    module: Option<String>,
}

#[derive(Args)]
struct Bounds {
    #[arg(long)]
    max_module: Option<usize>,
    #[arg(long)]
    max_modulus: Option<u32>,
    #[arg(long)]
    max_pair_modulus: Option<u32>,
}

impl Bounds {
    fn family(&self) -> InstanceFamily {
        let d = InstanceFamily::default();
        InstanceFamily {
            max_module: self.max_module.unwrap_or(d.max_module),
            max_modulus: self.max_modulus.unwrap_or(d.max_modulus),
            max_pair_modulus: self.max_pair_modulus.unwrap_or(d.max_pair_modulus),
            ..d
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

fn module_of(target: &Target) -> absorb_core::Result<Module> {
    let ring = target.ring.as_deref().map(parse_ring).transpose()?;
    match (&target.module, &ring) {
        (Some(spec), _) => parse_module(spec, ring.as_ref()),
        (None, Some(r)) => Ok(Module::regular(r)),
        (None, None) => Err(Error::Parse("give --ring, --module, or both".into())),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<u8, (u8, String)> {
    let usage = |e: Error| (EXIT_USAGE, e.to_string());
    let io = |e: String| (EXIT_USAGE, e);
    match cli.command {
        Command::Classify { target, format, max_n, out } => {
            let m = module_of(&target).map_err(usage)?;
            let records = classify_all_with(&m, max_n).map_err(usage)?;
            let minimal = minimal_classical_2_absorbing(&m).map_err(usage)?;
            let text = match format {
                Format::Json => json(&classification_report(&m, &records, &minimal)),
                Format::Text => classification_text(&classification_report(&m, &records, &minimal)),
                Format::Dot => to_dot(&m, &records).map_err(usage)?,
            };
            emit(&out, &text).map_err(io)?;
            Ok(0)
        }
        Command::Export { target, format, out } => {
            let m = module_of(&target).map_err(usage)?;
            let records = classify_all_with(&m, 2).map_err(usage)?;
            let text = match format {
                Format::Dot => to_dot(&m, &records).map_err(usage)?,
                Format::Json | Format::Text => {
                    let minimal = minimal_classical_2_absorbing(&m).map_err(usage)?;
                    let rep = classification_report(&m, &records, &minimal);
                    match format {
                        Format::Json => json(&rep),
                        _ => classification_text(&rep),
                    }
                }
            };
            emit(&out, &text).map_err(io)?;
            Ok(0)
        }
        Command::Verify { suite, bounds, format, out } => {
            let ids = SuiteId::parse_list(&suite).map_err(usage)?;
            let report = verify(&ids, &bounds.family());
            for s in &report.suites {
                eprintln!("{}", suite_line(s));
            }
            let text = match format {
                Format::Text => verify_text(&report),
                _ => json(&report),
            };
            emit(&out, &text).map_err(io)?;
            Ok(if report.passed { 0 } else { EXIT_ASSERTION })
        }
        Command::Search { left, right, bounds, out } => {
            let l: Predicate = left.parse().map_err(usage)?;
            let r: Predicate = right.parse().map_err(usage)?;
            let outcome = search_separating(l, r, &bounds.family()).map_err(usage)?;
            emit(&out, &json(&outcome.to_json())).map_err(io)?;
            Ok(match outcome {
                SearchOutcome::Found { .. } => 0,
                SearchOutcome::Exhausted { .. } => EXIT_EXHAUSTED,
            })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
