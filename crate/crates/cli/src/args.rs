use clap::{Args, Parser, Subcommand, ValueEnum};

use horn_core::field::{is_prime, DEFAULT_PRIME};
use horn_core::FieldSpec;

use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "horn", version, about = "Horn inequalities, Schubert positions and Kirwan cones")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Master seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Modulus of the prime field (implies --field prime).
    #[arg(long, global = true, value_parser = parse_prime)]
    pub prime: Option<u64>,
    #[arg(long, global = true, value_enum)]
    pub field: Option<FieldArg>,
    /// Random flag tuples drawn per certification.
    #[arg(long, global = true, default_value_t = 3)]
    pub samples: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads for batch commands (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Largest number of subspaces a search may visit.
    #[arg(long, global = true, default_value_t = horn_core::hn::DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    Rational,
    Prime,
    Sqrt5,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Tex,
    Text,
}

fn parse_prime(s: &str) -> Result<u64, String> {
    let p: u64 = s.parse().map_err(|e| format!("{e}"))?;
    if is_prime(p) {
        Ok(p)
    } else {
        Err(format!("{p} is not prime"))
    }
}

impl Global {
    pub fn field_spec(&self) -> Result<FieldSpec, CliError> {
        match (self.field, self.prime) {
            (None | Some(FieldArg::Prime), p) => Ok(FieldSpec::Prime(p.unwrap_or(DEFAULT_PRIME))),
            (Some(FieldArg::Rational), None) => Ok(FieldSpec::Rational),
            (Some(FieldArg::Sqrt5), None) => Ok(FieldSpec::Sqrt5),
            (Some(other), Some(_)) => Err(CliError::Usage(format!("--prime conflicts with --field {other:?}").to_lowercase())),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Horn sets and membership.
    #[command(subcommand)]
    Horn(HornCmd),
    /// Tuples of Horn(d, r, s) with expected dimension zero.
    Horn0 {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 3)]
        s: usize,
    },
    /// Randomized certification through tangent spaces.
    #[command(subcommand)]
    Intersect(IntersectCmd),
    /// Inequalities of the Kirwan cone.
    #[command(subcommand)]
    Kirwan(KirwanCmd),
    /// Nonvanishing of Littlewood-Richardson coefficients.
    #[command(subcommand)]
    Lr(LrCmd),
    /// Schubert positions of subspaces.
    #[command(subcommand)]
    Pos(PosCmd),
    /// Points of Schubert cells.
    #[command(subcommand)]
    Cell(CellCmd),
    /// Minimal-slope subspaces over a small prime field.
    #[command(subcommand)]
    Hn(HnCmd),
    /// The determinant function of an edim-zero tuple.
    #[command(subcommand)]
    Delta(DeltaCmd),
    /// Numerical check of the variational principle.
    #[command(subcommand)]
    Variational(VariationalCmd),
    /// Recompute the low-dimensional tables.
    #[command(subcommand)]
    Tables(TablesCmd),
    /// Worked examples.
    #[command(subcommand)]
    Fixtures(FixturesCmd),
}

#[derive(Args, Debug, Clone)]
pub struct TupleArg {
    /// Ground set size; optional when the tuple is given as {"n", "parts"}.
    #[arg(long)]
    pub n: Option<usize>,
    /// JSON list of subsets, e.g. '[[1,4],[2,3]]'.
    #[arg(long)]
    pub tuple: String,
}

#[derive(Subcommand, Debug)]
pub enum HornCmd {
    /// All of Horn(r, n, s), grouped by permutation class.
    Enumerate {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        s: usize,
        /// Only the canonical representative of each class.
        #[arg(long)]
        classes: bool,
    },
    /// Membership with a violation certificate.
    Check(TupleArg),
}

#[derive(Subcommand, Debug)]
pub enum IntersectCmd {
    /// Certify one tuple.
    Certify(TupleArg),
    /// Certify every tuple of shape (r, n, s) and compare with the Horn recursion.
    Sweep {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        s: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum KirwanCmd {
    /// The inequalities indexed by Horn_0(d, r, s), 0 < d < r.
    Ineqs {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 3)]
        s: usize,
    },
    /// Membership of a tuple of nonincreasing rational vectors.
    Check {
        /// JSON list of parts; entries are integers, "a/b" or [a, b].
        #[arg(long)]
        xi: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum LrCmd {
    /// Whether the invariant space of a tensor product of irreducibles is nonzero.
    Nonzero {
        /// JSON list of dominant integer weights.
        #[arg(long)]
        lambda: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum PosCmd {
    /// Position of a subspace relative to a flag.
    Compute {
        /// Matrix file (inline JSON or path) whose columns span the subspace.
        #[arg(long)]
        subspace: String,
        /// Matrix file with the adapted basis of the flag (default: standard).
        #[arg(long)]
        flag: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CellCmd {
    /// A random point of the cell of a subset.
    Sample {
        #[arg(long)]
        n: usize,
        /// JSON list of 1-based elements.
        #[arg(long)]
        subset: String,
        #[arg(long)]
        flag: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum HnCmd {
    /// Exhaustive search for the minimal-slope subspace of largest dimension.
    Search {
        /// JSON list of antidominant weights, one per flag.
        #[arg(long)]
        theta: String,
        /// JSON list of matrix files (default: random flags).
        #[arg(long)]
        flags: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum DeltaCmd {
    /// Evaluate at given or random group elements.
    Eval {
        #[command(flatten)]
        tuple: TupleArg,
        /// JSON list of r x r matrix files (default: random).
        #[arg(long)]
        g: Option<String>,
        /// JSON list of (n-r) x (n-r) matrix files (default: random).
        #[arg(long)]
        h: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum VariationalCmd {
    /// Compare tr(P_S X) with the eigenvalue bound over random subspaces.
    Demo {
        /// Nonincreasing spectrum as a JSON list.
        #[arg(long)]
        xi: String,
        /// Subset as a JSON list.
        #[arg(long)]
        j: String,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = horn_core::variational::DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
}

#[derive(Subcommand, Debug)]
pub enum TablesCmd {
    /// Horn triples for d < r <= 4.
    AppendixA,
    /// Kirwan cone inequalities for r = 2, 3, 4.
    AppendixB,
}

#[derive(Subcommand, Debug)]
pub enum FixturesCmd {
    /// The two subspaces of Q(sqrt5)^6 in position {2,4,6} for three flags.
    TwoPoint,
}
