//! `bernkit`: compute the convolution sums and their relatives, regenerate
//! the published tables, and run verification sweeps.

pub mod commands;
pub mod document;
pub mod factor;
pub mod latex;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::{execute, CliError, Rendered};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Latex,
}

#[derive(Debug, Parser)]
#[command(name = "bernkit", version, about = "Exact Bernoulli-polynomial convolution sums")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    pub format: OutputFormat,

    /// Spread verification over threads.
    #[arg(long, global = true)]
    pub parallel: bool,

    /// Sort verification reports canonically.
    #[arg(long, global = true)]
    pub sorted: bool,

    /// Add 1 to coefficient J of the cached B_K(z) before running.
    #[arg(long, global = true, hide = true, value_name = "K:J", value_parser = parse_fault)]
    pub inject_fault: Option<(usize, usize)>,
}

fn parse_fault(s: &str) -> Result<(usize, usize), String> {
    let (k, j) = s.split_once(':').ok_or("expected K:J")?;
    let k = k.trim().parse::<usize>().map_err(|e| e.to_string())?;
    let j = j.trim().parse::<usize>().map_err(|e| e.to_string())?;
    if j > k {
        return Err(format!("B_{k} has no coefficient {j}"));
    }
    Ok((k, j))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a single object.
    Compute {
        #[command(subcommand)]
        target: Target,
    },
    /// Regenerate one of the three tables.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
    },
    /// Leading terms of a sequence with consistency flags.
    Seq {
        #[arg(value_enum)]
        name: SeqArg,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Run a verification suite. Exit code 1 if any check fails.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        k_max: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqArg {
    C,
    A,
    C3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteArg {
    All,
    One(bernkit_core::Suite),
}

fn parse_suite(s: &str) -> Result<SuiteArg, String> {
    if s == "all" {
        return Ok(SuiteArg::All);
    }
    bernkit_core::Suite::from_name(s).map(SuiteArg::One).ok_or_else(|| {
        let names: Vec<_> = bernkit_core::Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite; expected all or one of {}", names.join(", "))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SRoute {
    Direct,
    Series,
    Eulerian,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FRoute {
    Direct,
    Eulerian,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MultisumArg {
    Enumeration,
    Multinomial,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AjArg {
    PolyPower,
    Multinomial,
    Inversion,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UArg {
    Enumeration,
    Series,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Target {
    /// S_{n,k}(z).
    S {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = SRoute::Series)]
        route: SRoute,
    },
    /// Coefficient of x^m in F_k(x, z).
    #[command(name = "F-coeff")]
    FCoeff {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = FRoute::Direct)]
        route: FRoute,
    },
    /// S^{(n)}_{k,nu}(y).
    Multisum {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MultisumArg::Enumeration)]
        route: MultisumArg,
    },
    /// d_j for (1-y)^{nk-nu} S^{(n)}_{k,nu}(y), as a polynomial in y.
    #[command(name = "d-coeffs")]
    DCoeffs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        nu: usize,
    },
    /// The normalized quotient p_n(z).
    P {
        #[arg(long)]
        n: usize,
    },
    /// (A_k(y)/y)^n, whose coefficients are a_j^{(k,n)}.
    #[command(name = "a_jkn")]
    Ajkn {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = AjArg::PolyPower)]
        route: AjArg,
    },
    /// u_0 .. u_nu as coefficients of a polynomial in y.
    #[command(name = "u_nu")]
    Unu {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        nu: usize,
        #[arg(long, value_enum, default_value_t = UArg::Enumeration)]
        route: UArg,
    },
}
