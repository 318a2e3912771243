use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "realrad",
    version,
    about = "Decide whether real roots of polynomials lie in real repeated radical extensions"
)]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    /// Polynomial in x, e.g. "x^3 - 6x + 2" or "x^3 - 3x + 3 + sqrt(3)".
    pub polynomial: String,

    /// Work over Q(sqrt(d)) for a squarefree d >= 2 instead of Q.
    #[arg(long, value_name = "d")]
    pub ground: Option<u64>,

    /// Isolating intervals are refined to width at most 2^-WIDTH.
    #[arg(long, default_value_t = realrad::roots::DEFAULT_WIDTH_EXP)]
    pub width: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify every real root of an irreducible polynomial.
    Analyze(PolyArgs),

    /// Count and isolate real roots with a Sturm sequence.
    Roots(PolyArgs),

    /// Galois group of a polynomial over Q of degree at most 4, or a family
    /// datum.
    Galois(GaloisArgs),

    /// Build and verify real radical towers for the real roots.
    Tower(PolyArgs),

    /// The field fixed by H2 inside Q(zeta_n), over the field fixed by H1.
    ///
    /// H1 and H2 are subgroups of (Z/n)^x given either by their order
    /// (when unique) or as "g:" followed by a comma-separated generator
    /// list, e.g. "g:7,11".
    Cyclotomic {
        /// The n of Q(zeta_n).
        n: u64,
        /// Subgroup fixing the ground field.
        #[arg(value_name = "H1")]
        ground: String,
        /// Subgroup fixing the field, inside H1.
        #[arg(value_name = "H2")]
        field: String,
    },

    /// The splitting field of X^p - a with p an odd prime: datum and
    /// prime-degree radical check.
    Binomial {
        /// An odd prime.
        p: u64,
        /// A nonzero rational such as 2 or -3/5.
        #[arg(allow_hyphen_values = true)]
        a: String,
    },

    /// Run the brute-force group-theory oracle sweeps.
    VerifyLemmas(SweepArgs),

    /// Worked examples.
    CaseStudy {
        #[arg(value_enum)]
        which: CaseStudy,
    },
}

#[derive(Debug, Args)]
pub struct GaloisArgs {
    /// Polynomial over Q of degree at most 4.
    #[arg(conflicts_with_all = ["binomial", "cyclotomic", "datum"], required_unless_present_any = ["binomial", "cyclotomic", "datum"])]
    pub polynomial: Option<String>,

    /// Datum for the splitting field of X^p - a.
    #[arg(long, num_args = 2, value_names = ["P", "A"], allow_hyphen_values = true)]
    pub binomial: Option<Vec<String>>,

    /// Datum for a subfield of Q(zeta_n), as in the cyclotomic command.
    #[arg(long, num_args = 3, value_names = ["N", "H1", "H2"])]
    pub cyclotomic: Option<Vec<String>>,

    /// Read a datum from a JSON file, validate it and run the chain search.
    #[arg(long, value_name = "FILE")]
    pub datum: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Largest group order for the subnormal-preservation and section
    /// sweeps (at most 24).
    #[arg(long, default_value_t = 24)]
    pub max_order: usize,

    /// Largest group order for the normal-closure sweep.
    #[arg(long, default_value_t = 48)]
    pub closure_max_order: usize,

    /// Random groups tried by the normal-closure sweep.
    #[arg(long, default_value_t = 60)]
    pub closure_trials: usize,

    /// Random matrix groups tried by the module sweep.
    #[arg(long, default_value_t = 300)]
    pub module_trials: usize,

    /// Seed for the randomized sweeps.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,

    /// Worker threads; the report order does not depend on it.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CaseStudy {
    /// (x^3 - 3x + 3)^2 - 3 over Q.
    Sextic,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Analyze(_) => "analyze",
            Command::Roots(_) => "roots",
            Command::Galois(_) => "galois",
            Command::Tower(_) => "tower",
            Command::Cyclotomic { .. } => "cyclotomic",
            Command::Binomial { .. } => "binomial",
            Command::VerifyLemmas(_) => "verify-lemmas",
            Command::CaseStudy { .. } => "case-study",
        }
    }
}
