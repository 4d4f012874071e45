//! `lie2`: load documents, build catalog instances and run the verification
//! suites. Exit codes: 0 pass, 1 fail, 2 usage or parse error.

mod commands;
mod group;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "lie2", version, about = "Exact checks for Lie 2-algebras, representations up to homotopy and 2-groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification suites on a catalog algebra or a JSON document.
    Verify(VerifyArgs),
    /// Print a catalog instance as a JSON document.
    Construct(ConstructArgs),
    /// Decide whether ν̃ is a coboundary on g ⊕ g*, with the rank certificate.
    Nonexact(NonexactArgs),
    /// Randomized exact checks on polynomial sections of TM ⊕ T*M.
    Courant(CourantArgs),
    /// Group-level suites for nilpotent catalog algebras.
    Twogroup(TwoGroupArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Human,
    Json,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    /// Evaluate independent tuples concurrently.
    #[arg(long, global = true)]
    pub parallel: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Jacobi,
    Rep,
    Linfty,
    GroupRep,
    TwoGroup,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Catalog name, e.g. so3, abelian:3, heis3+abelian:1.
    #[arg(long, conflicts_with = "file")]
    pub alg: Option<String>,
    #[arg(long)]
    pub file: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Sampled tuples for the group suites.
    #[arg(long, default_value_t = 64)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Algebra,
    Double,
    String,
    StringDatum,
    Omni,
    Semidirect,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub name: Construction,
    #[arg(long)]
    pub alg: Option<String>,
    /// Size for `omni`.
    #[arg(long)]
    pub n: Option<usize>,
    /// For `semidirect`: a seeded random representation instead of the
    /// string datum.
    #[arg(long)]
    pub seed: Option<u64>,
    /// For `semidirect`: a representation document.
    #[arg(long)]
    pub file: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
pub struct NonexactArgs {
    #[arg(long)]
    pub alg: String,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CourantSuite {
    Rep,
    Linfty,
    Id,
    All,
}

#[derive(Args, Debug)]
pub struct CourantArgs {
    #[arg(long, default_value_t = 3)]
    pub vars: usize,
    #[arg(long, default_value_t = 3)]
    pub degree: u32,
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// none, drop-half-mu1, drop-half-bracket or zero-nu.
    #[arg(long, default_value = "none")]
    pub mutation: String,
    #[arg(long, value_enum, default_value_t = CourantSuite::All)]
    pub suite: CourantSuite,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Args, Debug)]
pub struct TwoGroupArgs {
    #[command(subcommand)]
    pub action: TwoGroupAction,
}

#[derive(Args, Debug, Clone)]
pub struct GroupCommon {
    /// Nilpotent catalog algebra; the string datum on it is integrated.
    #[arg(long = "alg", visible_alias = "model", default_value = "heis3")]
    pub alg: String,
    /// Use F₂ = 0 with ν = 0 instead of the integrated string datum.
    #[arg(long)]
    pub strict: bool,
    #[arg(long, default_value_t = 64)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Evaluate in f64 instead of exact rationals.
    #[arg(long = "float")]
    pub float: bool,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DiffKind {
    Jet,
    Fd,
}

#[derive(Subcommand, Debug)]
pub enum TwoGroupAction {
    /// Group-rep axioms and the 2-group coherence identities.
    Check(GroupCommon),
    /// Integrate the string datum and verify the result symbolically.
    Integrate(GroupCommon),
    /// Closedness and normalization of F̃₂.
    Cocycle(GroupCommon),
    /// Recover ν̃ from F̃₂ by jets or central differences.
    Differentiate {
        #[command(flatten)]
        common: GroupCommon,
        #[arg(long, value_enum, default_value_t = DiffKind::Jet)]
        mode: DiffKind,
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        /// Allowed error in fd mode.
        #[arg(long = "fd-tol", default_value_t = 1e-5)]
        fd_tol: f64,
    },
    /// F̃₂ = dβ for random polynomial α.
    Transfer {
        #[command(flatten)]
        common: GroupCommon,
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
}

/// Failure that maps to an exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Verify(a) => commands::verify(&a).map(|r| (r, a.out)),
        Command::Construct(a) => match commands::construct(&a) {
            Ok(doc) => {
                emit(&doc);
                return ExitCode::SUCCESS;
            }
            Err(f) => Err(f),
        },
        Command::Nonexact(a) => commands::nonexact(&a).map(|r| (r, a.out)),
        Command::Courant(a) => commands::courant(&a).map(|r| (r, a.out)),
        Command::Twogroup(a) => group::run(&a.action),
    };
    match outcome {
        Ok((report, out)) => {
            match out.format {
                Format::Human => emit(report.to_human().trim_end()),
                Format::Json => emit(&report.to_json()),
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}
