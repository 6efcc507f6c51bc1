use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "systole",
    version,
    about = "Maximal systoles of Γ(2,n) hyperbolic surfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Candidate lengths and systole at one point (n, c, t).
    Eval(EvalArgs),
    /// Maximal-systole surface for one symmetry order.
    Maximize(MaximizeArgs),
    /// Maximal systole per genus.
    Table(TableArgs),
    /// Sweep a (c, t) grid and write one CSV row per point.
    Scan(ScanArgs),
    /// Run the self-check battery.
    Verify(VerifyArgs),
}

/// Either the symmetry order or the genus (`genus = n − 1`), not both.
#[derive(Debug, Clone, Copy, Args)]
#[group(required = true, multiple = false)]
pub struct Order {
    /// Symmetry order n ≥ 3.
    #[arg(long)]
    pub n: Option<u32>,
    /// Genus g ≥ 2 (n = g + 1).
    #[arg(long)]
    pub genus: Option<u32>,
}

impl Order {
    pub fn n(self) -> u32 {
        match (self.n, self.genus) {
            (Some(n), _) => n,
            (None, Some(g)) => g.saturating_add(1),
            (None, None) => unreachable!("clap enforces one of --n/--genus"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closed,
    Numeric,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TMode {
    /// `t` values are lengths; points with `t > c` are skipped.
    Absolute,
    /// `t` values are fractions of `c` in `[0, 1]`.
    Fraction,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub order: Order,
    /// Half the cuff length.
    #[arg(long, allow_negative_numbers = true)]
    pub c: f64,
    /// Twist, `0 ≤ t ≤ c`.
    #[arg(long, allow_negative_numbers = true)]
    pub t: f64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct MaximizeArgs {
    #[command(flatten)]
    pub order: Order,
    #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub g_min: u32,
    pub g_max: u32,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, allow_negative_numbers = true)]
    pub c_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub c_max: f64,
    #[arg(long)]
    pub c_steps: usize,
    #[arg(long, value_enum, default_value_t = TMode::Fraction)]
    pub t_mode: TMode,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub t_min: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub t_max: f64,
    #[arg(long)]
    pub t_steps: usize,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 20)]
    pub n_max: u32,
}
