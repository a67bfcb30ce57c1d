//! Argument parsing and validation.

use std::fmt;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use qgc_core::center::{KernelMode, Method};
use qgc_core::qgroup::Side;
use qgc_core::rootdata::{RootSystemB, RootVec, Weight};

#[derive(Parser, Debug)]
#[command(name = "qgc", version, about = "Exact computations in the two-parameter quantum group U_{r,s}(so_{2n+1})")]
struct Cli {
    /// Output format of the report on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress progress messages on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Simple roots, fundamental weights, rho and positive roots.
    RootData(Rank),
    /// Dimension of a graded piece of U^+ or U^-.
    GradedDim(GradedDim),
    /// Gram matrix of the skew pairing in one degree.
    PairingGram(Gram),
    /// Randomised ad-invariance and orthogonality checks of the invariant form.
    RossoCheck(Rosso),
    /// Truncated Verma module, optionally checking the straightening identity.
    Verma(Verma),
    /// Finite-dimensional irreducible module and its weight multiplicities.
    Irrep(Irrep),
    /// Central element attached to a dominant root-lattice weight.
    Central(Central),
    /// Harish-Chandra image of the central element.
    HcImage(HcImage),
    /// Toral monomials on which every character is trivial.
    ParityKernel(Parity),
    /// Quick consistency checks across all modules.
    Selftest(Selftest),
}

#[derive(Args, Debug)]
struct Rank {
    /// Rank of so_{2n+1}.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
}

#[derive(Args, Debug)]
struct GradedDim {
    #[command(flatten)]
    rank: Rank,
    /// `+` for U^+ (E side), `-` for U^- (F side).
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    sign: String,
    /// Degree over the simple roots, e.g. `2,1`.
    #[arg(long, allow_hyphen_values = true)]
    nu: String,
}

#[derive(Args, Debug)]
struct Gram {
    #[command(flatten)]
    rank: Rank,
    #[arg(long, allow_hyphen_values = true)]
    nu: String,
}

#[derive(Args, Debug)]
struct Rosso {
    #[command(flatten)]
    rank: Rank,
    /// Maximal height of the random elements.
    #[arg(long, default_value_t = 2)]
    height: usize,
    #[arg(long, default_value_t = 10)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("lambda").required(true).args(["lambda_fund", "lambda_alpha"])))]
struct LambdaArg {
    /// Weight in fundamental-weight coordinates.
    #[arg(long, allow_hyphen_values = true)]
    lambda_fund: Option<String>,
    /// Weight in simple-root coordinates (rationals such as `1/2` allowed).
    #[arg(long, allow_hyphen_values = true)]
    lambda_alpha: Option<String>,
}

#[derive(Args, Debug)]
struct Verma {
    #[command(flatten)]
    rank: Rank,
    #[command(flatten)]
    lambda: LambdaArg,
    /// Twist weight in fundamental-weight coordinates (default 0).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "mu_alpha")]
    mu_fund: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    mu_alpha: Option<String>,
    /// Keep contents up to this height.
    #[arg(long, default_value_t = 2)]
    depth: u32,
    /// Check the straightening identity for every i and every k < depth.
    #[arg(long)]
    check_eq46: bool,
}

#[derive(Args, Debug)]
struct Irrep {
    #[command(flatten)]
    rank: Rank,
    #[command(flatten)]
    lambda: LambdaArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Trace,
    Solve,
}

#[derive(Args, Debug)]
struct Central {
    #[command(flatten)]
    rank: Rank,
    #[command(flatten)]
    lambda: LambdaArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Trace)]
    method: MethodArg,
    /// Recheck centrality and the Harish-Chandra image before reporting.
    #[arg(long)]
    verify: bool,
}

#[derive(Args, Debug)]
struct HcImage {
    #[command(flatten)]
    rank: Rank,
    #[command(flatten)]
    lambda: LambdaArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Trace)]
    method: MethodArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Lambda,
    Full,
}

#[derive(Args, Debug)]
struct Parity {
    #[command(flatten)]
    rank: Rank,
    #[arg(long, default_value_t = 3)]
    bound: i64,
    #[arg(long, value_enum, default_value_t = ModeArg::Lambda)]
    mode: ModeArg,
}

#[derive(Args, Debug)]
struct Selftest {
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// A validated invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct Request {
    pub format: Format,
    pub quiet: bool,
    pub n: usize,
    pub task: Task,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Task {
    RootData,
    GradedDim { side: Side, nu: RootVec },
    PairingGram { nu: RootVec },
    RossoCheck { height: usize, trials: usize, seed: u64 },
    Verma { lambda: Weight, mu: Weight, depth: u32, check_eq46: bool },
    Irrep { lambda: Weight },
    Central { lambda: Weight, method: Method, verify: bool },
    HcImage { lambda: Weight, method: Method },
    ParityKernel { bound: i64, mode: KernelMode },
    Selftest { seed: u64 },
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::RootData => "root-data",
            Task::GradedDim { .. } => "graded-dim",
            Task::PairingGram { .. } => "pairing-gram",
            Task::RossoCheck { .. } => "rosso-check",
            Task::Verma { .. } => "verma",
            Task::Irrep { .. } => "irrep",
            Task::Central { .. } => "central",
            Task::HcImage { .. } => "hc-image",
            Task::ParityKernel { .. } => "parity-kernel",
            Task::Selftest { .. } => "selftest",
        }
    }
}

/// Bad command line. `Display` requests (help, version) are not errors but
/// are routed through here so the caller can print them with exit code 0.
#[derive(Debug)]
pub enum UsageError {
    Clap(clap::Error),
    Invalid(String),
}

impl UsageError {
    pub fn exit_code(&self) -> i32 {
        match self {
            UsageError::Clap(e) if !e.use_stderr() => 0,
            _ => 2,
        }
    }
}

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UsageError::Clap(e) => write!(f, "{e}"),
            UsageError::Invalid(m) => write!(f, "error: {m}"),
        }
    }
}

fn invalid<T>(m: impl Into<String>) -> Result<T, UsageError> {
    Err(UsageError::Invalid(m.into()))
}

fn parse_list<T: std::str::FromStr>(flag: &str, s: &str, n: usize) -> Result<Vec<T>, UsageError> {
    let items: Vec<&str> = s.split(',').map(str::trim).collect();
    if items.len() != n {
        return invalid(format!("--{flag} has {} entries, expected {n}", items.len()));
    }
    items
        .iter()
        .map(|x| {
            x.parse::<T>()
                .map_err(|_| UsageError::Invalid(format!("--{flag}: cannot parse `{x}`")))
        })
        .collect()
}

/// Doubles a rational coordinate such as `3/2`; only halves are weights.
fn doubled(flag: &str, s: &str) -> Result<i32, UsageError> {
    let bad = || UsageError::Invalid(format!("--{flag}: `{s}` is not an integer or half-integer"));
    match s.split_once('/') {
        None => s.parse::<i32>().map(|x| 2 * x).map_err(|_| bad()),
        Some((a, b)) => {
            let a: i32 = a.trim().parse().map_err(|_| bad())?;
            let b: i32 = b.trim().parse().map_err(|_| bad())?;
            if b == 0 || (2 * a) % b != 0 {
                return Err(bad());
            }
            Ok(2 * a / b)
        }
    }
}

fn weight_from(
    roots: &RootSystemB,
    prefix: &str,
    fund: Option<&str>,
    alpha: Option<&str>,
) -> Result<Option<Weight>, UsageError> {
    let n = roots.rank();
    if let Some(s) = fund {
        let c: Vec<i32> = parse_list(&format!("{prefix}-fund"), s, n)?;
        return roots
            .from_fundamental(&c)
            .map(Some)
            .map_err(|e| UsageError::Invalid(e.to_string()));
    }
    if let Some(s) = alpha {
        let flag = format!("{prefix}-alpha");
        let items: Vec<String> = parse_list(&flag, s, n)?;
        let c = items
            .iter()
            .map(|x| doubled(&flag, x))
            .collect::<Result<Vec<_>, _>>()?;
        let w = Weight::from_alpha_doubled(&c);
        if !w.in_weight_lattice() {
            return invalid(format!("--{flag}: not in the weight lattice"));
        }
        return Ok(Some(w));
    }
    Ok(None)
}

fn lambda(roots: &RootSystemB, a: &LambdaArg) -> Result<Weight, UsageError> {
    weight_from(roots, "lambda", a.lambda_fund.as_deref(), a.lambda_alpha.as_deref())
        .map(|w| w.expect("clap enforces the group"))
}

fn method(m: MethodArg) -> Method {
    match m {
        MethodArg::Trace => Method::Trace,
        MethodArg::Solve => Method::Solve,
    }
}

/// Parses and validates `argv` (including the program name).
pub fn parse<I, T>(argv: I) -> Result<Request, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(UsageError::Clap)?;
    let n = match &cli.command {
        Sub::RootData(r) => r.n,
        Sub::GradedDim(a) => a.rank.n,
        Sub::PairingGram(a) => a.rank.n,
        Sub::RossoCheck(a) => a.rank.n,
        Sub::Verma(a) => a.rank.n,
        Sub::Irrep(a) => a.rank.n,
        Sub::Central(a) => a.rank.n,
        Sub::HcImage(a) => a.rank.n,
        Sub::ParityKernel(a) => a.rank.n,
        Sub::Selftest(a) => a.n,
    } as usize;
    let roots = RootSystemB::new(n).map_err(|e| UsageError::Invalid(e.to_string()))?;
    let task = match &cli.command {
        Sub::RootData(_) => Task::RootData,
        Sub::GradedDim(a) => {
            let side = match a.sign.as_str() {
                "+" => Side::E,
                "-" => Side::F,
                s => return invalid(format!("--sign must be + or -, got `{s}`")),
            };
            Task::GradedDim { side, nu: parse_list("nu", &a.nu, n)? }
        }
        Sub::PairingGram(a) => Task::PairingGram { nu: parse_list("nu", &a.nu, n)? },
        Sub::RossoCheck(a) => Task::RossoCheck {
            height: a.height,
            trials: a.trials,
            seed: a.seed,
        },
        Sub::Verma(a) => {
            let mu = weight_from(&roots, "mu", a.mu_fund.as_deref(), a.mu_alpha.as_deref())?
                .unwrap_or_else(|| Weight::zero(n));
            Task::Verma {
                lambda: lambda(&roots, &a.lambda)?,
                mu,
                depth: a.depth,
                check_eq46: a.check_eq46,
            }
        }
        Sub::Irrep(a) => Task::Irrep { lambda: lambda(&roots, &a.lambda)? },
        Sub::Central(a) => Task::Central {
            lambda: lambda(&roots, &a.lambda)?,
            method: method(a.method),
            verify: a.verify,
        },
        Sub::HcImage(a) => Task::HcImage {
            lambda: lambda(&roots, &a.lambda)?,
            method: method(a.method),
        },
        Sub::ParityKernel(a) => {
            if a.bound < 0 {
                return invalid("--bound must be nonnegative");
            }
            Task::ParityKernel {
                bound: a.bound,
                mode: match a.mode {
                    ModeArg::Lambda => KernelMode::LambdaOnly,
                    ModeArg::Full => KernelMode::Full,
                },
            }
        }
        Sub::Selftest(a) => Task::Selftest { seed: a.seed },
    };
    let format = if cli.json { Format::Json } else { cli.format };
    Ok(Request {
        format,
        quiet: cli.quiet,
        n,
        task,
    })
}
