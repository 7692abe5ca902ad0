use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vacuum_core::criterion::Level;
use vacuum_core::{Family, Rational, Superalgebra};

mod commands;

/// Simplicity of vacuum modules over affine Lie superalgebras, with exact arithmetic.
#[derive(Debug, Parser)]
#[command(name = "vacuum", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Reserved. Nothing here is random, so this flag is rejected.
    #[arg(long, global = true, hide = true)]
    seed_free: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the vacuum module at level k is simple.
    Check {
        #[command(flatten)]
        query: Query,
    },
    /// Search for (m, ξ) ∈ C(kΛ₀) with a nonzero Jantzen coefficient.
    Witness {
        #[command(flatten)]
        query: Query,
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long, default_value_t = 6)]
        lmax: u64,
        #[arg(long, default_value_t = 12)]
        mmax: u64,
    },
    /// Evaluate one coefficient k_Π(η) of the Weyl denominator.
    Kpi {
        #[arg(long)]
        algebra: Superalgebra,
        /// Weight in ε/δ coordinates, e.g. "e1+e2-d1".
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[command(flatten)]
        base: BaseArgs,
    },
    /// Run the verification sweep over the tabulated bases.
    Verify {
        #[command(flatten)]
        grid: GridArgs,
        /// Height bound for the denominator checks.
        #[arg(long, default_value_t = 8)]
        height: u64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Print the tabulated bases and their invariants.
    Tables {
        #[command(flatten)]
        grid: GridArgs,
    },
}

#[derive(Debug, Args)]
struct Query {
    /// "A(m-1|n-1)", "B(m|n)" or "D(m|n)".
    #[arg(long)]
    algebra: Superalgebra,
    /// "p/q", an integer, or "irrational".
    #[arg(long, allow_hyphen_values = true)]
    level: Level<Rational>,
}

#[derive(Debug, Args)]
struct BaseArgs {
    /// Which base to use; chosen from the level when omitted.
    #[arg(long, value_enum)]
    base: Option<BaseChoice>,
    /// Comma-separated simple roots, overriding --base.
    #[arg(long, allow_hyphen_values = true)]
    simple_roots: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BaseChoice {
    Plus,
    Minus,
    Special,
    Distinguished,
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(long, value_enum, ignore_case = true)]
    family: Option<FamilyArg>,
    #[arg(long, default_value_t = 3)]
    max_n: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    A,
    B,
    D,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::B => Family::B,
            FamilyArg::D => Family::D,
        }
    }
}

/// Exit statuses; every command maps its report to exactly one of these.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Ok = 0,
    VerifyFailed = 1,
    InputError = 2,
    NotSimple = 3,
    Inconclusive = 4,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.seed_free {
        eprintln!("error: --seed-free is reserved; no computation here uses randomness");
        return ExitCode::from(Status::InputError as u8);
    }
    let result = match cli.command {
        Command::Check { query } => commands::check(&query, cli.json),
        Command::Witness {
            query,
            base,
            lmax,
            mmax,
        } => commands::witness(&query, &base, lmax, mmax, cli.json),
        Command::Kpi { algebra, eta, base } => commands::kpi(algebra, &eta, &base, cli.json),
        Command::Verify {
            grid,
            height,
            inject_fault,
        } => commands::verify(&grid, height, inject_fault, cli.json),
        Command::Tables { grid } => commands::tables(&grid, cli.json),
    };
    let status = match result {
        Ok((text, status)) => {
            print!("{text}");
            status
        }
        Err(e) => {
            eprintln!("error: {e}");
            Status::InputError
        }
    };
    ExitCode::from(status as u8)
}
