use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "x5", version, about = "Equilibrium logic with explicit negation")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args)]
pub struct Global {
    /// Extra atoms added to the signature of the input, comma separated
    #[arg(long, global = true, value_delimiter = ',')]
    pub signature: Vec<String>,

    /// Refuse to enumerate signatures larger than this
    #[arg(long, global = true, default_value_t = x5_core::solver::DEFAULT_MAX_ATOMS)]
    pub max_atoms: usize,

    /// Print a JSON object instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Number of worker threads for enumeration
    #[arg(long, global = true, value_name = "N")]
    pub parallel: Option<usize>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Answer sets of a program, or equilibrium models of a theory
    Solve {
        /// Input file (`-` for standard input)
        file: PathBuf,

        /// Run a single engine instead of cross-checking all of them
        #[arg(long)]
        via: Option<Via>,
    },

    /// Five-valued value of a formula at an interpretation
    Eval {
        expr: String,

        /// There-world, e.g. "{p, ~q}"
        #[arg(long)]
        model: String,

        /// Here-world; defaults to the there-world
        #[arg(long)]
        here: Option<String>,

        #[arg(long, value_enum, default_value_t = Mode::X5)]
        mode: Mode,
    },

    /// Reduct of a program or theory with respect to an interpretation
    Reduct {
        file: PathBuf,

        #[arg(long)]
        wrt: String,

        /// Print the dual plus/minus reducts of every formula
        #[arg(long)]
        ferraris: bool,

        /// Skip constant simplification
        #[arg(long)]
        raw: bool,
    },

    /// Validity check with a counter-model
    Valid {
        expr: String,

        #[arg(long, value_enum, default_value_t = Mode::X5)]
        mode: Mode,
    },

    /// Weak or substitution equivalence of two formulas
    Equiv {
        #[arg(value_enum)]
        kind: Equivalence,

        alpha: String,

        beta: String,

        #[arg(long, value_enum, default_value_t = Mode::X5)]
        mode: Mode,
    },

    /// A theory in which the two formulas have different equilibrium models
    Context { alpha: String, beta: String },

    /// Explicit-negation normal form
    Nnf {
        expr: String,

        #[arg(long, value_enum, default_value_t = Mode::X5)]
        mode: Mode,

        /// Print every rule application to standard error
        #[arg(long)]
        rule_trace: bool,
    },

    /// Rewrite a program into regular rules
    Regular {
        file: PathBuf,

        /// Leave `not` literals in rule heads
        #[arg(long)]
        keep_negated_heads: bool,
    },

    /// Print a program in the usual solver syntax
    Export { file: PathBuf },

    /// Truth tables of the connectives
    Tables {
        #[arg(long, value_enum, default_value_t = Mode::X5)]
        mode: Mode,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Via {
    Reduct,
    X5,
    Ferraris,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    X5,
    N5,
    Classical,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Equivalence {
    Weak,
    Subst,
}
