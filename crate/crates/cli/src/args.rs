use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "qpart", version, about = "Exact q-series, colored partition statistics and congruence checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a named series.
    Expand(ExpandArgs),
    /// List or run single suite items.
    Verify(VerifyArgs),
    /// Run the whole theorem suite.
    Suite(SuiteArgs),
    /// One row per vector partition of size n, with weight and statistic.
    Ranktable(RankArgs),
    /// Weighted statistic counts N(m, n) for every n up to --n-max.
    Cranktable(CrankArgs),
    /// Check a custom congruence on a named series. Makes no claims.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "V", alias = "v")]
    V,
    #[value(name = "W2", alias = "w2")]
    W2,
}

#[derive(Debug, Args)]
pub struct Precision {
    /// Number of coefficients to compute.
    #[arg(long, env = "QPART_PRECISION", default_value_t = 2000)]
    pub precision: usize,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Write here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// One of: phi, phi_neg, psi, x, f, jacobi, w_t, a, a1, a2, c_t, d, p, cphi2.
    #[arg(long)]
    pub series: String,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Print only sum c(m*n + r) q^n, given as m,r.
    #[arg(long, value_parser = parse_pair)]
    pub dissect: Option<(usize, usize)>,
    #[command(flatten)]
    pub precision: Precision,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// List item ids and tags instead of running.
    #[arg(long, conflicts_with = "id")]
    pub list: bool,
    /// Item id to run (repeatable).
    #[arg(long, required_unless_present = "list")]
    pub id: Vec<String>,
    /// Run the deliberately false control items as well.
    #[arg(long)]
    pub controls: bool,
    #[command(flatten)]
    pub precision: Precision,
    #[arg(long)]
    pub no_timings: bool,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    /// Keep items with this tag or with ids containing it.
    #[arg(long)]
    pub filter: Option<String>,
    #[command(flatten)]
    pub precision: Precision,
    /// Zero all timings so output is byte-stable.
    #[arg(long)]
    pub no_timings: bool,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FamilySelect {
    #[arg(long, value_enum, default_value_t = FamilyArg::V)]
    pub family: FamilyArg,
    /// Scale of components 6 and 7 (V only).
    #[arg(long, default_value_t = 4)]
    pub t: usize,
    /// Multirank coefficient on l(6) - l(7) (V only).
    #[arg(long, default_value_t = 2)]
    pub h: i64,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[command(flatten)]
    pub family: FamilySelect,
    #[arg(long)]
    pub n: usize,
    /// Residue summary modulus; 5 for V and 7 for W2 by default.
    #[arg(long)]
    pub modulus: Option<usize>,
    /// Allow sizes above the enumeration limit.
    #[arg(long)]
    pub force: bool,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct CrankArgs {
    #[command(flatten)]
    pub family: FamilySelect,
    #[arg(long)]
    pub n_max: usize,
    /// Count by enumeration instead of the generating function.
    #[arg(long)]
    pub enumerate: bool,
    #[arg(long)]
    pub force: bool,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub series: String,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Progression a,b meaning indices a*n + b.
    #[arg(long, value_parser = parse_pair)]
    pub progression: (usize, usize),
    #[arg(long, required_unless_present = "zero", conflicts_with = "zero")]
    pub modulus: Option<u64>,
    /// Require the coefficients to vanish.
    #[arg(long)]
    pub zero: bool,
    #[arg(long)]
    pub n_max: usize,
    #[command(flatten)]
    pub precision: Precision,
    #[arg(long)]
    pub no_timings: bool,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected two integers `a,b`, got `{s}`"))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|e| format!("`{x}`: {e}"))
    };
    Ok((parse(a)?, parse(b)?))
}
