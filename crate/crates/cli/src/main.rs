mod commands;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Format;

#[derive(Debug, Parser)]
#[command(name = "neutro", version, about = "Validate, combine and transform fuzzy / neutrosophic set components")]
pub struct Cli {
    /// Tolerance for comparisons against two-decimal golden values and for
    /// divergence verdicts.
    #[arg(long, global = true, default_value_t = 0.01)]
    pub tolerance: f64,

    /// Round printed numbers to this many decimals.
    #[arg(long, global = true)]
    pub round: Option<u32>,

    /// Seed for Monte-Carlo sampling.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate every element of a document against a family.
    Validate(ValidateArgs),
    /// Apply an operator elementwise to one or two documents.
    Op(OpArgs),
    /// Sup-transform or normalize a document.
    Transform(TransformArgs),
    /// Recompute worked examples and compare with golden values.
    Demo(DemoArgs),
    /// Monte-Carlo volume of a family's admissible region.
    Volume(VolumeArgs),
    /// Refined families: validation, hesitancy, refusal.
    Refined(RefinedArgs),
    /// Matrices over a + bI and neutrosophic adjacency.
    Matrix(MatrixArgs),
    /// Decision partitions and offset degrees.
    Decide(DecideArgs),
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Family name (NS, IFS, IIFS, PyFS, QROFS, SFS, NHSFS, SNS, NHSNS, FS).
    #[arg(long)]
    pub family: Option<String>,
    /// q for QROFS, n for NHSFS / NHSNS.
    #[arg(long)]
    pub exponent: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    pub file: String,
    #[command(flatten)]
    pub family: FamilyArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OpName {
    And,
    Or,
    Implies,
    Not,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SystemName {
    Ns,
    Ifs,
    IifsMaxI,
    IifsMinI,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum NormsName {
    MinMax,
    Product,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OverflowName {
    OperatorOutput,
    PrintedNumerator,
}

#[derive(Debug, Args)]
pub struct OpArgs {
    pub a: String,
    /// Second operand; omitted for `not`.
    pub b: Option<String>,
    #[arg(long, value_enum)]
    pub op: OpName,
    #[arg(long, value_enum, default_value_t = SystemName::Ns)]
    pub system: SystemName,
    #[arg(long, value_enum, default_value_t = NormsName::MinMax)]
    pub norms: NormsName,
    /// How the max-I IIFS conjunction rescales an output summing above 1.
    #[arg(long, value_enum, default_value_t = OverflowName::OperatorOutput)]
    pub overflow: OverflowName,
    /// Write the result document here.
    #[arg(long)]
    pub output: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TransformKind {
    /// Divide by sup T + sup I + sup F over the universe.
    Sup,
    /// Divide each element by its own T + I + F.
    Normalize,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    pub file: String,
    #[arg(long, value_enum)]
    pub kind: TransformKind,
    #[arg(long)]
    pub output: Option<String>,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    /// Exhibit name; see --list.
    pub name: Option<String>,
    #[arg(long, conflicts_with = "name")]
    pub all: bool,
    #[arg(long, conflicts_with_all = ["name", "all"])]
    pub list: bool,
}

#[derive(Debug, Args)]
pub struct VolumeArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub exponent: Option<f64>,
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum RefinedAction {
    Validate,
    Hesitancy,
    Refusal,
}

#[derive(Debug, Args)]
pub struct RefinedArgs {
    /// RFS, RIFS, RIIFS, RNS, RPyFS, RSFS, RQROFS or RNHSNS.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub exponent: Option<f64>,
    /// Comma-separated T sub-degrees.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub t: Vec<f64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub i: Vec<f64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub f: Vec<f64>,
    #[arg(long, value_enum, default_value_t = RefinedAction::Validate)]
    pub action: RefinedAction,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    #[command(subcommand)]
    pub command: MatrixCommand,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum AdjacencyName {
    Graph,
    CognitiveMap,
}

#[derive(Debug, Subcommand)]
pub enum MatrixCommand {
    /// Sum of two grid files.
    Add { a: String, b: String },
    /// Product of two grid files.
    Mul { a: String, b: String },
    /// Check an adjacency grid's alphabet.
    Adjacency {
        file: String,
        #[arg(long, value_enum, default_value_t = AdjacencyName::Graph)]
        kind: AdjacencyName,
    },
    /// Compose edge values `t,i,f` along a path.
    Path {
        #[arg(long = "edge", required = true)]
        edges: Vec<String>,
    },
}

#[derive(Debug, Args)]
pub struct DecideArgs {
    #[command(subcommand)]
    pub command: DecideCommand,
}

#[derive(Debug, Subcommand)]
pub enum DecideCommand {
    /// Accept / noncommit / reject by two thresholds.
    ThreeWays {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        scores: Vec<f64>,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
    },
    /// Graded bands: s reject, r noncommit, p accept, low to high.
    NWays {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        scores: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        cuts: Vec<f64>,
        /// `p,r,s`.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        arities: Vec<usize>,
    },
    /// Area fractions for A / neutA / antiA.
    Neutrosophify {
        /// `label=size`, repeatable.
        #[arg(long = "area", required = true)]
        areas: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        a: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        neut: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        anti: Vec<String>,
    },
    /// amount / norm, classified against [under, over].
    Offset {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        amounts: Vec<f64>,
        #[arg(long)]
        norm: f64,
        #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
        under: f64,
        #[arg(long, default_value_t = 2.0)]
        over: f64,
    },
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    match commands::run(&cli, argv) {
        Ok(report) => {
            print!("{}", report::render(&report, cli.format));
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
