use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "dompoly",
    version,
    about = "Exact domination polynomials of graphs and graph products"
)]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text, env = "DOMPOLY_FORMAT")]
    pub format: Format,

    /// Largest vertex count for subset enumeration
    #[arg(long, global = true, env = "DOMPOLY_CAP_BRUTE", value_parser = clap::value_parser!(u64).range(1..))]
    pub cap_brute: Option<u64>,

    /// Largest vertex count for materialized products
    #[arg(long, global = true, env = "DOMPOLY_CAP_PRODUCT", value_parser = clap::value_parser!(u64).range(1..))]
    pub cap_product: Option<u64>,

    /// Largest |V(G)| for the G □ K_2 subset decomposition
    #[arg(long, global = true, env = "DOMPOLY_CAP_GK2", value_parser = clap::value_parser!(u64).range(1..))]
    pub cap_gk2: Option<u64>,

    /// Seed for randomized verification suites
    #[arg(long, global = true, env = "DOMPOLY_SEED")]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute D(G, x) for a graph expression
    Compute(ComputeArgs),
    /// Run a named cross-validation suite
    Verify(VerifyArgs),
    /// Extract sequences from a graph family and mine recurrences
    Sequence(SequenceArgs),
    /// Recover D(G, x) from point evaluations of strong products
    Interpolate(InterpolateArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Graph expression, e.g. "cart(P:6,K:2)" or "file(g.txt)"
    #[arg(long, short)]
    pub graph: String,

    /// auto, brute, recurrence, formula, gk2, pnkr or strong-compose
    #[arg(long, short, default_value = "auto")]
    pub method: String,

    /// Run every applicable method and require them to agree
    #[arg(long, conflicts_with = "method")]
    pub all_methods: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name, or "all"
    pub suite: String,

    /// Size bound overriding the suite default
    #[arg(long)]
    pub max_n: Option<usize>,

    /// Number of random graphs overriding the suite default
    #[arg(long)]
    pub trials: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GuessKind {
    Cfinite,
    Holonomic,
    Polyx,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Reference {
    /// ⌈(n+1)/2⌉
    Ladder,
    /// ⌊(6n+8)/5⌋, stated for large n only
    Grid5,
}

#[derive(Debug, Args)]
#[command(group(
    clap::ArgGroup::new("output")
        .args(["coeff", "partial", "polys", "gamma_number"])
        .required(true)
))]
pub struct SequenceArgs {
    /// Family expression in the parameter n, e.g. "cart(P:n,K:2)"
    #[arg(long, short)]
    pub family: String,

    /// First value of n
    #[arg(long, default_value_t = 1)]
    pub from: usize,

    /// Last value of n (overrides --terms)
    #[arg(long)]
    pub to: Option<usize>,

    /// Number of family members
    #[arg(long, default_value_t = 12)]
    pub terms: usize,

    #[arg(long, short, default_value = "auto")]
    pub method: String,

    /// Coefficient index as an affine expression in n, e.g. "n" or "n/2+1/2"
    #[arg(long)]
    pub coeff: Option<String>,

    /// Round the coefficient index up instead of down
    #[arg(long, requires = "coeff")]
    pub ceil: bool,

    /// Partial sums up to ⌊q·|V|+p⌋, given as "q,p" with rationals a/b
    #[arg(long)]
    pub partial: Option<String>,

    /// Emit the polynomials themselves
    #[arg(long)]
    pub polys: bool,

    /// Emit domination numbers
    #[arg(long)]
    pub gamma_number: bool,

    /// Show a reference column next to domination numbers
    #[arg(long, value_enum, requires = "gamma_number")]
    pub reference: Option<Reference>,

    /// Guess a recurrence for the emitted data
    #[arg(long, value_enum)]
    pub guess: Option<GuessKind>,

    #[arg(long)]
    pub max_order: Option<usize>,

    #[arg(long)]
    pub max_degree: Option<usize>,

    /// Surplus equations required beyond the unknowns
    #[arg(long)]
    pub margin: Option<usize>,
}

#[derive(Debug, Args)]
pub struct InterpolateArgs {
    #[arg(long, short)]
    pub graph: String,

    /// Evaluation point, an integer or a/b
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: String,
}
