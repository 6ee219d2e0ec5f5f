use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "wgrade", version, about = "Weighted degrees, initial forms and degree inequalities over the rationals")]
pub struct Cli {
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, Args, Serialize)]
pub struct WeightArgs {
    /// Integer weights, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<String>,
    /// Lexicographic weights in Z^k: one comma-separated tuple per variable,
    /// tuples separated by `;`.
    #[arg(long = "w-lex", allow_hyphen_values = true)]
    pub w_lex: Option<String>,
    /// Number of variables; defaults to the length of the weight vector.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "snake_case", tag = "name")]
pub enum Command {
    /// The w-degree of a polynomial.
    Degree {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[command(flatten)]
        #[serde(flatten)]
        weights: WeightArgs,
    },
    /// The initial form of a polynomial.
    Initial {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[command(flatten)]
        #[serde(flatten)]
        weights: WeightArgs,
    },
    /// The cancellation order m of Φ at g, by both methods.
    Minv {
        /// Φ over x1..xn and y.
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[command(flatten)]
        #[serde(flatten)]
        weights: WeightArgs,
    },
    /// Check one of the degree inequalities.
    Check {
        #[arg(value_enum)]
        which: CheckKind,
        /// Generators f_i (repeat the flag); for t43 and cor44 the map.
        #[arg(long, allow_hyphen_values = true)]
        f: Vec<String>,
        /// Φ over z1..zr (standing for f_1..f_r) and y.
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        g: Option<String>,
        /// Inverse images for t43, so that x_i = inverse_i(f).
        #[arg(long, allow_hyphen_values = true)]
        inverse: Vec<String>,
        #[command(flatten)]
        #[serde(flatten)]
        weights: WeightArgs,
    },
    /// Generators of the kernel of y_i -> image_i and its principal generator.
    Kernel {
        #[arg(long, allow_hyphen_values = true, required = true)]
        image: Vec<String>,
        /// Number of source variables; defaults to the largest x index used.
        #[arg(long)]
        n: Option<usize>,
    },
    /// The degree Δ of a map whose initial forms have transcendence degree n-1.
    Delta {
        #[arg(long, allow_hyphen_values = true, required = true)]
        f: Vec<String>,
        #[command(flatten)]
        #[serde(flatten)]
        weights: WeightArgs,
    },
    /// The Nagata map and its analysis.
    Nagata,
    /// A seeded randomized verification campaign.
    Campaign {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of variables; the suite picks from its own range if absent.
        #[arg(long)]
        n: Option<usize>,
        /// Degree bound for generated polynomials.
        #[arg(long = "deg-bound")]
        deg_bound: Option<u32>,
    },
    /// Randomized checks of the structural invariants.
    Invariants {
        #[arg(long, default_value_t = 200)]
        instances: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Main,
    T34a,
    T34b,
    Su,
    T43,
    Cor44,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Main,
    T34,
    Su,
    Jung,
    T43,
    Twomax,
}
