use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "psi",
    version,
    about = "Exact Psi(a,b,n) sequences, Mersenne tests and identity suites",
    propagate_version = true
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format for every record.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,

    /// Worker threads (default: all cores).
    #[arg(long, env = "PSI_THREADS", global = true)]
    pub threads: Option<usize>,

    /// Report elapsed_ms as 0 so output is byte-reproducible.
    #[arg(long, global = true)]
    pub no_timing: bool,

    /// Largest n evaluated symbolically.
    #[arg(long, default_value_t = 256, global = true)]
    pub symbolic_cap: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate Psi(a,b,n).
    Psi {
        #[command(subcommand)]
        cmd: PsiCmd,
    },
    /// Generalized expansion coefficients.
    Coeff {
        #[command(subcommand)]
        cmd: CoeffCmd,
    },
    /// Run an identity suite.
    Verify {
        #[command(subcommand)]
        suite: VerifyCmd,
    },
    /// Mersenne primality and compositeness tests.
    Mersenne {
        #[command(subcommand)]
        cmd: MersenneCmd,
    },
    /// Classical-sequence bridges and periods.
    Bridges {
        #[command(subcommand)]
        cmd: BridgesCmd,
    },
    /// Combinatorial identities.
    Identities {
        #[command(subcommand)]
        cmd: IdentitiesCmd,
    },
    /// Regenerate the desk-scale result tables.
    Repro {
        #[command(subcommand)]
        cmd: ReproCmd,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalMethod {
    Ladder,
    Recurrence,
    Explicit,
}

#[derive(Args, Debug, Clone)]
pub struct Params {
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
    /// Ring: int, rat, quad:D or mod:M.
    #[arg(long, default_value = "int")]
    pub ring: String,
    /// Reduce modulo M (integer a, b only).
    #[arg(long = "mod")]
    pub modulus: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum PsiCmd {
    /// One value.
    Eval {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        n: String,
        #[arg(long, value_enum, default_value_t = EvalMethod::Ladder)]
        method: EvalMethod,
    },
    /// Psi(a,b,n) as a polynomial in a, b.
    Poly {
        #[arg(long)]
        n: u64,
    },
    /// The doubling-ladder states for one n.
    Ladder {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        n: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum CoeffCmd {
    /// Psi(a,b,n | alpha,beta,r) for r = 0..=floor(n/2).
    Table {
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true, requires = "beta")]
        alpha: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires = "alpha")]
        beta: Option<i64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Expansion identity, closed forms and explicit formulas.
    Eightlevels {
        #[arg(long, default_value_t = 16)]
        nmax: u64,
    },
    /// Bracket properties and the special power-sum case.
    Powersums {
        #[arg(long, default_value_t = 10)]
        nmax: u64,
    },
    /// Theta-sum representations and scaling relations.
    Theta {
        #[arg(long, default_value_t = 12)]
        nmax: u64,
    },
    /// First and second fundamental theorems and the operator catalogue.
    Fundamental {
        #[arg(long, default_value_t = 12)]
        nmax: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TestMethod {
    Ll,
    Psi,
    Mu,
    Sum,
    Necessary,
    Composite,
    Ab,
}

impl TestMethod {
    pub fn min_p(self) -> u64 {
        match self {
            TestMethod::Ll => 3,
            TestMethod::Composite => 2,
            _ => 5,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct MethodOpts {
    #[arg(long, value_enum, default_value_t = TestMethod::Ll)]
    pub method: TestMethod,
    /// mu range for the mu and sum methods (default 12 and 4).
    #[arg(long)]
    pub mu: Option<u64>,
    /// Raise the capacity limit of the sum, necessary and ab methods.
    #[arg(long)]
    pub limit: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum MersenneCmd {
    /// Test one exponent.
    Test {
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        opts: MethodOpts,
    },
    /// Test every prime exponent in pmin..=pmax.
    Scan {
        #[arg(long)]
        pmax: u64,
        #[arg(long, default_value_t = 5)]
        pmin: u64,
        #[command(flatten)]
        opts: MethodOpts,
    },
}

#[derive(Subcommand, Debug)]
pub enum BridgesCmd {
    /// The bridge registry.
    List,
    /// Check registered bridges on their index sets.
    Check {
        /// Only this bridge.
        #[arg(long)]
        name: Option<String>,
        /// Override each bridge's default largest index.
        #[arg(long)]
        nmax: Option<u64>,
    },
    /// Detect the period of Psi(a,b,n); without a, b runs the catalogue.
    Period {
        #[arg(long, allow_hyphen_values = true, requires = "b")]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "a")]
        b: Option<String>,
        #[arg(long, default_value = "int")]
        ring: String,
        #[arg(long, default_value_t = psi_core::bridges::DEFAULT_PERIOD_CAP)]
        cap: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TauArg {
    Quarter,
    Half,
    Sqrt2,
}

#[derive(Subcommand, Debug)]
pub enum IdentitiesCmd {
    /// The tau = 2^l identities.
    Tau {
        /// Single l; default 3..=7.
        #[arg(long)]
        l: Option<u32>,
        #[arg(long, value_enum)]
        variant: Option<TauArg>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ReproCmd {
    /// Write every result table under the output directory.
    All {
        #[arg(long, default_value = "docs/results")]
        out: PathBuf,
    },
}
