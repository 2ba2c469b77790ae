use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "glinv",
    version,
    about = "GL-invariant ideals in the coordinate ring of m x n matrices",
    long_about = "GL-invariant ideals in the coordinate ring of m x n matrices: \
                  classification, Ext modules, regularity, local cohomology and \
                  Betti tables.\n\nIf m < n the transpose is used (with a notice on stderr). \
                  INVARIANTS_THREADS caps the worker pool."
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Pretty)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Ideal verbs, also available at the top level.
    #[command(subcommand)]
    Ideal(IdealCommand),

    #[command(flatten)]
    Direct(IdealCommand),

    /// Multiplicities of D_s in the local cohomology of S with support in I_p.
    Lc(LcArgs),

    /// Character of the simple module D_s in a degree window.
    Ds(DsArgs),

    /// Equivariant Betti numbers of the rectangle ideal I_{a x b}.
    Betti(BettiArgs),

    /// Dimension of the irreducible GL_N representation S_λ C^N.
    Schurdim(SchurArgs),

    /// Gaussian binomial coefficient [a choose b]_q.
    Qbinom(QbinomArgs),

    /// Run the embedded golden corpus.
    Selftest,
}

#[derive(Subcommand, Debug)]
pub enum IdealCommand {
    /// Minimal generators of an ideal.
    Normalize(IdealSource),

    /// Containment between two ideals.
    Compare(CompareArgs),

    /// I_p^d.
    Power(PowerArgs),

    /// I_p^(d).
    Symbolic(PowerArgs),

    /// Saturation of I_p^d by I_{p-1}.
    Saturated(PowerArgs),

    /// Saturation I : I_p^∞ of a given ideal.
    Saturate(SaturateArgs),

    /// The index set Z of an ideal.
    Zset(ZsetArgs),

    /// Ext^•(S/I, S) in a degree window.
    Ext(ExtArgs),

    /// Castelnuovo-Mumford regularity of I.
    Reg(IdealSource),
}

#[derive(Args, Debug, Clone)]
pub struct Dims {
    /// Number of rows.
    #[arg(short = 'm')]
    pub m: Option<usize>,

    /// Number of columns.
    #[arg(short = 'n')]
    pub n: Option<usize>,
}

/// Exactly one source is required.
#[derive(Args, Debug, Clone)]
pub struct IdealSource {
    #[command(flatten)]
    pub dims: Dims,

    /// Generators as a JSON array of partitions, e.g. [[2,2],[1,1,1]].
    #[arg(long)]
    pub gens: Option<String>,

    /// JSON ideal document ({"m","n","gens"} or a bare array); "-" reads stdin.
    #[arg(long, value_name = "FILE")]
    pub input: Option<String>,

    /// I_p^d.
    #[arg(long, value_name = "P,D")]
    pub power: Option<String>,

    /// I_p^(d).
    #[arg(long, value_name = "P,D")]
    pub symbolic: Option<String>,

    /// Saturation of I_p^d.
    #[arg(long, value_name = "P,D")]
    pub saturated: Option<String>,
}

#[derive(Args, Debug)]
pub struct PowerArgs {
    #[command(flatten)]
    pub dims: Dims,

    /// Minor size.
    #[arg(short = 'p')]
    pub p: usize,

    /// Exponent.
    #[arg(short = 'd')]
    pub d: u32,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    #[command(flatten)]
    pub dims: Dims,

    /// Ideal spec: JSON generators, power:P,D, symbolic:P,D, saturated:P,D or @FILE.
    pub left: String,

    /// Second ideal spec, same syntax.
    pub right: String,
}

#[derive(Args, Debug)]
pub struct SaturateArgs {
    #[command(flatten)]
    pub source: IdealSource,

    /// Saturate by I_p.
    #[arg(short = 'p')]
    pub p: usize,
}

#[derive(Args, Debug)]
pub struct ZsetArgs {
    #[command(flatten)]
    pub source: IdealSource,

    /// Keep only pairs with l >= this value.
    #[arg(long)]
    pub min_l: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ExtArgs {
    #[command(flatten)]
    pub source: IdealSource,

    /// Degree window lo..hi (inclusive).
    #[arg(long, allow_hyphen_values = true)]
    pub window: String,

    /// A smaller ideal B ⊆ I; report kernel, image and cokernel of Ext(S/I) -> Ext(S/B).
    #[arg(long, value_name = "SPEC")]
    pub sub: Option<String>,
}

#[derive(Args, Debug)]
pub struct LcArgs {
    #[command(flatten)]
    pub dims: Dims,

    /// Minor size.
    #[arg(short = 'p')]
    pub p: usize,
}

#[derive(Args, Debug)]
pub struct DsArgs {
    #[command(flatten)]
    pub dims: Dims,

    #[arg(short = 's')]
    pub s: usize,

    /// Degree window lo..hi (inclusive).
    #[arg(long, allow_hyphen_values = true)]
    pub window: String,

    /// Upper bound on the first entry of λ; required for s >= 1.
    #[arg(long, allow_hyphen_values = true)]
    pub top: Option<i64>,
}

#[derive(Args, Debug)]
pub struct BettiArgs {
    #[command(flatten)]
    pub dims: Dims,

    /// Rectangle rows.
    #[arg(short = 'a')]
    pub a: usize,

    /// Rectangle columns.
    #[arg(short = 'b')]
    pub b: u32,
}

#[derive(Args, Debug)]
pub struct SchurArgs {
    /// Dominant weight, comma separated, e.g. 2,1,0 or -1,-1.
    #[arg(allow_hyphen_values = true)]
    pub weight: String,

    /// Rank N; the weight is padded with zeros to this length.
    #[arg(short = 'N')]
    pub rank: Option<usize>,
}

#[derive(Args, Debug)]
pub struct QbinomArgs {
    pub a: u32,
    pub b: u32,
}
