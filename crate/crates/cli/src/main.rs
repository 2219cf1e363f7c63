mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use antiassoc::Rational;
use clap::{Args, Parser, Subcommand};

/// Verify, build and classify antiassociative and antidendriform structures
/// given by structure constants.
///
/// Exit status: 0 when every check passed, 1 when a check failed (reports
/// are still printed), 2 on input or parse errors.
#[derive(Parser)]
#[command(name = "antiassoc", version)]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug, Default)]
pub struct Options {
    /// Print a JSON report instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Override q of every parsed algebra or dendriform structure
    #[arg(long, global = true, value_parser = parse_rational, allow_hyphen_values = true)]
    pub q: Option<Rational>,
    /// Build even when preconditions fail
    #[arg(long, global = true)]
    pub force: bool,
    /// Write the built structure (JSON) to this path
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a structure
    #[command(subcommand)]
    Verify(Verify),
    /// Construct a new structure from inputs
    #[command(subcommand)]
    Build(Build),
    /// Enumerate and classify small algebras
    #[command(subcommand)]
    Classify(Classify),
    /// Audit the bundled reference fixtures
    #[command(subcommand)]
    Paper(Paper),
}

#[derive(Subcommand)]
pub enum Verify {
    /// q-associativity of an algebra document
    Algebra { file: PathBuf },
    /// Bimodule laws
    Bimodule { file: PathBuf },
    /// The six matched-pair equations and their preconditions
    MatchedPair { file: PathBuf },
    /// q-dendriform axioms
    Dendriform { file: PathBuf },
    /// Invariance (symmetric) or the cyclic identity (antisymmetric)
    Form { algebra: PathBuf, form: PathBuf },
    /// O-operator identity for an {algebra, bimodule, T} bundle
    OOperator { file: PathBuf },
    /// Weight-zero Rota–Baxter identity for an {algebra, tau} bundle
    RotaBaxter { file: PathBuf },
}

#[derive(Subcommand)]
pub enum Build {
    /// A ⋉ V from a bimodule document
    Semidirect { file: PathBuf },
    /// A ⋈ B from a matched-pair document
    Bowtie { file: PathBuf },
    /// (q⁻² r*, q² l*) on the dual space
    DualBimodule { file: PathBuf },
    /// x∘y = xy + yx
    Anticommutator { file: PathBuf },
    /// x∗y = x≺y + x≻y
    Associated { file: PathBuf },
    /// Quadratic double on A ⊕ A*
    DoubleQuadratic { a: PathBuf, astar: PathBuf },
    /// Symplectic double on A ⊕ A* from two antidendriform structures
    DoubleSymplectic { a: PathBuf, astar: PathBuf },
    /// Antidendriform structure from a symplectic form
    DendriformFromOmega { algebra: PathBuf, form: PathBuf },
    /// Antidendriform structure from an O-operator bundle
    DendriformFromOOperator {
        file: PathBuf,
        /// Build on the algebra itself through T⁻¹ instead of on the module
        #[arg(long)]
        compatible: bool,
    },
}

#[derive(Subcommand)]
pub enum Classify {
    /// All 2-dimensional antiassociative algebras with constants in a grid
    Dim2 {
        /// Comma-separated rationals
        #[arg(long, value_parser = parse_grid, allow_hyphen_values = true)]
        grid: Option<Grid>,
    },
}

#[derive(Subcommand)]
pub enum Paper {
    /// Run every reference fixture through its double construction
    Fixtures,
}

#[derive(Clone, Debug)]
pub struct Grid(pub Vec<Rational>);

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

fn parse_grid(s: &str) -> Result<Grid, String> {
    s.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>().map(Grid)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify(v) => commands::verify(v, &cli.opts),
        Command::Build(b) => commands::build(b, &cli.opts),
        Command::Classify(Classify::Dim2 { grid }) => commands::classify_dim2(grid.as_ref()),
        Command::Paper(Paper::Fixtures) => commands::paper_fixtures(),
    };
    match result.and_then(|outcome| outcome.emit(&cli.opts)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
