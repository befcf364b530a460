//! Command-line arguments and their translation into a [`ParamSpec`].
//!
//! Roots of unity are given by orders: `--e` is the order of `q²` and `--f`
//! the order of `q`. Without `--f`, `f = e`, or `f = 2e` when `--qe-sign -1`
//! says `q^e = −1`. The parameter `r` is `ε q^N` for q-Brauer algebras and
//! `ε q^(N−1)` for BMW algebras.

use clap::{Args, Parser, Subcommand, ValueEnum};

use semisimplicity::exactalg::{QParam, RootSpec};
use semisimplicity::params::{DeltaSpec, Family, ParamSpec, RParam};

use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "semisimplicity", version, about = "Semisimplicity of Brauer, BMW and q-Brauer algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Largest n for which the algebra on n strands is semisimple.
    Decide {
        family: FamilyArg,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Trace weights of the cell modules at levels n, n−2, ….
    Weights {
        family: FamilyArg,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: usize,
        /// Also print each weight as an expanded rational function.
        #[arg(long)]
        symbolic: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Rank of the trace form on the Brauer algebra, or its first degenerate level.
    Gram {
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long, allow_hyphen_values = true)]
        delta: i64,
        #[arg(long, required_unless_present = "n_max", conflicts_with = "n_max")]
        n: Option<usize>,
        #[arg(long = "n-max")]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run verification suites against independent oracles.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long = "max-n", default_value_t = 4)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Brauer,
    Qbrauer,
    Bmw,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Brauer => Family::Brauer,
            FamilyArg::Qbrauer => Family::QBrauer,
            FamilyArg::Bmw => Family::Bmw,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Counting,
    Trace,
    Cellular,
    OracleEquivalence,
    Specialization,
    All,
}

#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    /// Characteristic of the ground field: 0 or a prime.
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u64,
    /// Loop parameter: an integer, `generic`, or `non-integer`.
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<String>,
    /// Order of q².
    #[arg(long)]
    pub e: Option<u64>,
    /// Order of q.
    #[arg(long)]
    pub f: Option<u64>,
    /// Sign of q^e; -1 sets f = 2e.
    #[arg(long = "qe-sign", allow_hyphen_values = true)]
    pub qe_sign: Option<i8>,
    /// q² is not a root of unity.
    #[arg(long = "not-root")]
    pub not_root: bool,
    /// q = ±1; the algebra is a Brauer algebra with loop parameter --delta.
    #[arg(long = "q-one")]
    pub q_one: bool,
    /// The sign ε in r.
    #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
    pub eps: i8,
    /// The exponent N in r.
    #[arg(long = "N", allow_hyphen_values = true)]
    pub big_n: Option<i64>,
    /// r is not a signed power of q.
    #[arg(long = "r-generic")]
    pub r_generic: bool,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_delta(s: &str) -> Result<DeltaSpec, CliError> {
    match s {
        "generic" => Ok(DeltaSpec::Generic),
        "non-integer" | "noninteger" => Ok(DeltaSpec::NonInteger),
        _ => s
            .parse::<i64>()
            .map(DeltaSpec::Integer)
            .map_err(|_| usage(format!("--delta expects an integer, `generic` or `non-integer` (got `{s}`)"))),
    }
}

impl ParamArgs {
    fn q(&self) -> Result<QParam, CliError> {
        let chosen = usize::from(self.e.is_some()) + usize::from(self.not_root) + usize::from(self.q_one);
        if chosen > 1 {
            return Err(usage("choose at most one of --e, --not-root and --q-one"));
        }
        if self.e.is_none() && (self.f.is_some() || self.qe_sign.is_some()) {
            return Err(usage("--f and --qe-sign need --e"));
        }
        if self.q_one {
            return Ok(QParam::PlusMinusOne);
        }
        let Some(e) = self.e else { return Ok(QParam::NotRootOfUnity) };
        let root = match (self.f, self.qe_sign) {
            (Some(f), None) => RootSpec::new(e, f)?,
            (None, Some(sign)) => RootSpec::from_qe_sign(e, sign)?,
            (None, None) => RootSpec::new(e, e)?,
            (Some(f), Some(sign)) => {
                let root = RootSpec::from_qe_sign(e, sign)?;
                if root.f() != f {
                    return Err(usage(format!("--f {f} contradicts --qe-sign {sign}")));
                }
                root
            }
        };
        Ok(QParam::Root(root))
    }

    fn r(&self) -> Result<RParam, CliError> {
        match (self.big_n, self.r_generic) {
            (Some(_), true) => Err(usage("--N and --r-generic are exclusive")),
            (Some(n), false) => Ok(RParam::SignedPower { eps: self.eps, n }),
            (None, _) => Ok(RParam::Generic),
        }
    }

    /// Validates the flags for `family` and builds the parameter set.
    pub fn to_spec(&self, family: Family) -> Result<ParamSpec, CliError> {
        let delta = self.delta.as_deref().map(parse_delta).transpose()?;
        if family == Family::Brauer {
            let q_flags = self.e.is_some()
                || self.f.is_some()
                || self.qe_sign.is_some()
                || self.not_root
                || self.q_one
                || self.big_n.is_some()
                || self.r_generic;
            if q_flags {
                return Err(usage("q and r flags do not apply to the Brauer algebra"));
            }
            return Ok(ParamSpec::brauer(self.characteristic, delta.unwrap_or(DeltaSpec::Generic))?);
        }
        let q = self.q()?;
        let r = self.r()?;
        Ok(match family {
            Family::QBrauer => ParamSpec::qbrauer(self.characteristic, q, r, delta)?,
            _ => ParamSpec::bmw(self.characteristic, q, r, delta)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("semisimplicity").chain(args.iter().copied())).unwrap()
    }

    fn spec_of(args: &[&str]) -> Result<ParamSpec, CliError> {
        match parse(args).command {
            Command::Decide { family, params, .. } => params.to_spec(family.into()),
            other => panic!("not a decide command: {other:?}"),
        }
    }

    #[test]
    fn roots_from_orders() {
        let s = spec_of(&["decide", "bmw", "--e", "5", "--f", "10", "--eps", "-1", "--N", "-2"]).unwrap();
        assert_eq!(s.q, QParam::Root(RootSpec::new(5, 10).unwrap()));
        assert_eq!(s.r, RParam::SignedPower { eps: -1, n: -2 });
        let s = spec_of(&["decide", "qbrauer", "--e", "4", "--qe-sign", "-1", "--N", "1"]).unwrap();
        assert_eq!(s.q, QParam::Root(RootSpec::new(4, 8).unwrap()));
        let s = spec_of(&["decide", "qbrauer", "--e", "5", "--N", "1"]).unwrap();
        assert_eq!(s.q, QParam::Root(RootSpec::new(5, 5).unwrap()));
    }

    #[test]
    fn rejected_combinations() {
        assert!(spec_of(&["decide", "brauer", "--e", "3"]).is_err());
        assert!(spec_of(&["decide", "qbrauer", "--e", "3", "--not-root"]).is_err());
        assert!(spec_of(&["decide", "qbrauer", "--N", "2", "--r-generic"]).is_err());
        assert!(spec_of(&["decide", "qbrauer", "--e", "4", "--f", "4", "--N", "1"]).is_err());
        assert!(spec_of(&["decide", "brauer", "--delta", "x"]).is_err());
        assert!(spec_of(&["decide", "brauer", "--delta", "0"]).is_err());
        assert!(Cli::try_parse_from(["semisimplicity", "gram", "--delta", "1"]).is_err());
    }

    #[test]
    fn delta_words() {
        let s = spec_of(&["decide", "brauer", "--delta", "non-integer"]).unwrap();
        assert_eq!(s.delta, Some(DeltaSpec::NonInteger));
        let s = spec_of(&["decide", "brauer"]).unwrap();
        assert_eq!(s.delta, Some(DeltaSpec::Generic));
        let s = spec_of(&["decide", "brauer", "--delta", "-4", "--char", "5"]).unwrap();
        assert_eq!(s.delta, Some(DeltaSpec::Integer(1)));
    }
}
