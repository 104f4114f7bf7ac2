use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "su3coh",
    version,
    about = "Cohomogeneity-one SU(3) manifolds: tables, gluing counts and numerical checks"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: CliConfig,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct CliConfig {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Markdown)]
    pub output_format: OutputFormat,

    #[arg(long, global = true, env = "SU3COH_SEED", default_value_t = 42)]
    pub seed: u64,

    #[arg(long, global = true, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,

    #[arg(long, global = true, default_value_t = 5, value_parser = clap::value_parser!(i64).range(1..))]
    pub bound: i64,

    /// Tolerance for matrix identities.
    #[arg(long, global = true, env = "SU3COH_TOL_MAT", default_value_t = 1e-9)]
    pub tol_mat: f64,

    /// Singular-value threshold for numeric rank.
    #[arg(long, global = true, env = "SU3COH_TOL_RANK", default_value_t = 1e-7)]
    pub tol_rank: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Markdown,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the slice table and the three classification tables.
    Tables,
    /// Count diffeomorphism classes for a pair of tubes, e.g. `classify "P(1)" S`.
    Classify { first: String, second: String },
    /// Run numerical verification checks.
    Verify {
        #[arg(value_enum)]
        which: VerifyTarget,
    },
    /// Principal stabilizer of a slice or tube, e.g. `stabilizer U2 3` or `stabilizer "F(0,2)"`.
    Stabilizer {
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        descriptor: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    Consim,
    Grassmann,
    TorusLemma,
    All,
}
