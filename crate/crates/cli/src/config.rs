use std::fmt;

use clap::{Parser, ValueEnum};
use verma_core::rootdata::ParabolicCharacter;
use verma_core::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Dimensions of M_l
    Basis,
    /// Weight multiplicities of M_l
    Weights,
    /// char_l against ann_l
    Annihilator,
    /// dim K_l and dim L_l
    Simple,
    /// Jet-fiber table
    Jets,
    /// Finite or infinite simple quotient
    Classify,
    /// Invariant suite
    Verify,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.to_possible_value().expect("no skipped variants");
        f.write_str(name.get_name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "verma", version, about = "Exact computations with scalar generalized Verma modules of sl_n")]
pub struct Args {
    pub command: Command,
    /// Rank parameter: the Lie algebra is sl_n
    #[arg(long)]
    pub n: usize,
    /// Flag entries, comma separated, strictly increasing in [1, n-1]
    #[arg(long)]
    pub flag: String,
    /// One weight l_i per flag entry; integers or fractions p/q
    #[arg(long, allow_hyphen_values = true)]
    pub weights: String,
    /// Truncation level (maximal level for tables, probe level for classify)
    #[arg(long, visible_alias = "max-level")]
    pub level: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub n: usize,
    pub flag: Vec<usize>,
    pub weights: Vec<Rational>,
    pub level: u32,
    pub format: Format,
}

impl RunConfig {
    pub fn from_args(args: Args) -> Result<Self, String> {
        let flag = parse_list(&args.flag, "flag", |s| s.parse::<usize>().ok())?;
        let weights = parse_list(&args.weights, "weights", |s| s.parse::<Rational>().ok())?;
        Ok(RunConfig {
            command: args.command,
            n: args.n,
            flag,
            weights,
            level: args.level,
            format: args.format,
        })
    }

    pub fn character(&self) -> Result<ParabolicCharacter, String> {
        ParabolicCharacter::new(self.n, self.flag.clone(), self.weights.clone()).map_err(|e| e.to_string())
    }
}

fn parse_list<T>(raw: &str, what: &str, parse: impl Fn(&str) -> Option<T>) -> Result<Vec<T>, String> {
    raw.split(',')
        .map(|s| parse(s.trim()).ok_or_else(|| format!("malformed --{what} entry {:?}", s.trim())))
        .collect()
}
