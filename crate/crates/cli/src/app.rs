//! Argument parsing and command dispatch.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use superfrob::characters::{hecke_character_table, specialize_table};
use superfrob::combinatorics::{basis_size, HookProfile};
use superfrob::exact::Poly;
use superfrob::symfun::{
    colored_power_sum_product, q_bmu, q_tilde, super_hall_littlewood_q, super_schur, BlockVariables,
    SuperSchurAlgorithm,
};
use superfrob::verify::{run_suite, Suite, VerifyConfig};
use superfrob::{Error, Execution};

use crate::serialize::{
    multipartition_from_str, poly_to_csv, poly_to_json, profile_to_json, report_to_csv, report_to_json, table_to_csv,
    table_to_json,
};

const MAX_MN: usize = 10;
const MAX_BASIS: usize = 200_000;

#[derive(Debug, Parser)]
#[command(name = "superfrob", version, about = "Exact characters of cyclotomic Hecke algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Character table of H_{m,n}(q, Q), or of W_{m,n} with --specialize.
    Chartable(ChartableArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Expand one function over a hook profile.
    Expand(ExpandArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Skip the desk-scale size guard.
    #[arg(long, global = true)]
    pub force: bool,
    /// Progress notes on stderr.
    #[arg(long, global = true)]
    pub verbose: bool,
}

#[derive(Debug, Args)]
pub struct ChartableArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    /// Substitute q = 1, Q_i = ς^i.
    #[arg(long)]
    pub specialize: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    /// Even dimensions per color, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub k: Option<Vec<usize>>,
    /// Odd dimensions per color, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub l: Option<Vec<usize>>,
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[command(subcommand)]
    pub target: Target,
    /// Even dimensions per color, comma separated; fixes m.
    #[arg(long, value_delimiter = ',', global = true)]
    pub k: Option<Vec<usize>>,
    /// Odd dimensions per color; zeros when omitted.
    #[arg(long, value_delimiter = ',', global = true)]
    pub l: Option<Vec<usize>>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Subcommand)]
pub enum Target {
    /// S_bλ(x/y), zero for non-hook shapes.
    Superschur {
        /// Multipartition as a JSON nested array, e.g. [[2],[1]].
        #[arg(long)]
        shape: String,
    },
    /// q_a(x/y; t) over all block variables, t symbolic.
    Hl {
        #[arg(long)]
        a: usize,
    },
    /// q_bμ(x/y; q, Q).
    Qbmu {
        /// Multipartition as a JSON nested array, e.g. [[2],[1]].
        #[arg(long)]
        shape: String,
    },
    /// P_bμ(x/y) with ς written as z.
    Ptilde {
        /// Multipartition as a JSON nested array, e.g. [[2],[1]].
        #[arg(long)]
        shape: String,
    },
    /// q̃_(α;β)(x/y; q) with α over the even and β over the odd variables.
    Qtilde {
        /// Composition over the even variables, comma separated.
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<usize>,
        /// Composition over the odd variables, comma separated.
        #[arg(long, value_delimiter = ',')]
        beta: Vec<usize>,
    },
}

/// How a command ended.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags or values: exit 2.
    Usage(String),
    /// Mathematical or internal failure: exit 1.
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Internal(_) => 1,
        }
    }
}

/// Payload text, destination and exit code of a completed command.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub out: Option<PathBuf>,
    pub code: i32,
}

fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn internal(e: Error) -> Failure {
    Failure::Internal(e.to_string())
}

fn guard(m: usize, n: usize, dim: Option<usize>, force: bool) -> Result<(), Failure> {
    if m == 0 || n == 0 {
        return Err(Failure::Usage(format!("--m and --n must be positive (got m = {m}, n = {n})")));
    }
    if force {
        return Ok(());
    }
    if m * n > MAX_MN {
        return Err(Failure::Usage(format!("m·n = {} exceeds {MAX_MN}; pass --force to run anyway", m * n)));
    }
    if let Some(d) = dim {
        if basis_size(n, d).is_none_or(|s| s > MAX_BASIS) {
            return Err(Failure::Usage(format!("(k+ℓ)^n = {d}^{n} exceeds {MAX_BASIS}; pass --force to run anyway")));
        }
    }
    Ok(())
}

fn profile(m: Option<usize>, k: Option<Vec<usize>>, l: Option<Vec<usize>>) -> Result<Option<HookProfile>, Failure> {
    match (k, l) {
        (None, None) => Ok(None),
        (k, l) => {
            let len = m.or(k.as_ref().map(Vec::len)).or(l.as_ref().map(Vec::len)).unwrap_or(1);
            let k = k.unwrap_or_else(|| vec![0; len]);
            let l = l.unwrap_or_else(|| vec![0; len]);
            if k.len() != len || l.len() != len {
                return Err(Failure::Usage(format!("--k and --l need {len} entries")));
            }
            HookProfile::new(k, l).map(Some).map_err(usage)
        }
    }
}

fn log(verbose: bool, msg: impl AsRef<str>) {
    if verbose {
        eprintln!("superfrob: {}", msg.as_ref());
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Chartable(a) => chartable(a),
        Command::Verify(a) => verify(a),
        Command::Expand(a) => expand(a),
    }
}

fn chartable(a: ChartableArgs) -> Result<Outcome, Failure> {
    guard(a.m, a.n, None, a.common.force)?;
    log(a.common.verbose, format!("solving the table for m = {}, n = {}", a.m, a.n));
    let mut table = hecke_character_table(a.m, a.n, Execution::Parallel).map_err(internal)?;
    if a.specialize {
        table = specialize_table(&table).map_err(internal)?;
    }
    let text = match a.common.format {
        Format::Json => render(&table_to_json(&table).map_err(internal)?),
        Format::Csv => table_to_csv(&table).map_err(internal)?,
    };
    Ok(Outcome { text, out: a.common.out, code: 0 })
}

fn verify(a: VerifyArgs) -> Result<Outcome, Failure> {
    let suite: Suite = a.suite.parse().map_err(usage)?;
    let p = profile(Some(a.m), a.k, a.l)?;
    let cfg = VerifyConfig::new(a.m, a.n, p, Execution::Parallel).map_err(usage)?;
    guard(a.m, a.n, Some(cfg.profile.dim()), a.common.force)?;
    log(a.common.verbose, format!("suite {suite} at m = {}, n = {}, profile {}", a.m, a.n, cfg.profile));
    let report = run_suite(suite, &cfg).map_err(internal)?;
    for c in &report.checks {
        log(a.common.verbose, format!("{} {} ({:.3}s)", if c.passed() { "pass" } else { "FAIL" }, c.name, c.seconds));
    }
    let header = json!({ "suite": suite.name(), "m": a.m, "n": a.n, "profile": profile_to_json(&cfg.profile) });
    let text = match a.common.format {
        Format::Json => render(&report_to_json(&report, header)),
        Format::Csv => report_to_csv(&report).map_err(internal)?,
    };
    Ok(Outcome { text, out: a.common.out, code: if report.passed() { 0 } else { 1 } })
}

fn expand(a: ExpandArgs) -> Result<Outcome, Failure> {
    let p = profile(None, a.k, a.l)?
        .ok_or_else(|| Failure::Usage("expand needs a profile: --k and/or --l".into()))?;
    let block = BlockVariables::new(&p).map_err(usage)?;
    let shape = |s: &str| {
        let mu = multipartition_from_str(s).map_err(usage)?;
        if mu.colors() != p.m() {
            return Err(Failure::Usage(format!("shape {mu} has {} components, profile has {}", mu.colors(), p.m())));
        }
        Ok(mu)
    };
    let poly: Poly = match &a.target {
        Target::Superschur { shape: s } => {
            super_schur(&shape(s)?, &block, SuperSchurAlgorithm::Tableaux).map_err(internal)?
        }
        Target::Hl { a } => super_hall_littlewood_q(*a, &block.all_x(), &block.all_y(), &block.t_poly()),
        Target::Qbmu { shape: s } => {
            let mu = shape(s)?;
            guard(p.m(), mu.size(), None, a.common.force)?;
            q_bmu(&mu, &block).map_err(internal)?
        }
        Target::Ptilde { shape: s } => colored_power_sum_product(&shape(s)?, &block).map_err(internal)?,
        Target::Qtilde { alpha, beta } => q_tilde(alpha, beta, &block).map_err(usage)?,
    };
    let text = match a.common.format {
        Format::Json => render(&json!({ "profile": profile_to_json(&p), "text": poly.to_string(), "terms": poly_to_json(&poly) })),
        Format::Csv => poly_to_csv(&poly).map_err(internal)?,
    };
    Ok(Outcome { text, out: a.common.out, code: 0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("superfrob").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn guard_limits() {
        assert!(guard(2, 5, None, false).is_ok());
        assert!(matches!(guard(2, 6, None, false), Err(Failure::Usage(_))));
        assert!(guard(2, 6, None, true).is_ok());
        assert!(matches!(guard(1, 10, Some(4), false), Err(Failure::Usage(_))));
        assert!(matches!(guard(0, 1, None, true), Err(Failure::Usage(_))));
    }

    #[test]
    fn expand_examples() {
        let out = run(parse(&["expand", "superschur", "--shape", "[[1]]", "--k", "1", "--l", "1"])).unwrap();
        assert!(out.text.contains("\"text\": \"x1_1 - y1_1\""));
        let out = run(parse(&["expand", "hl", "--a", "0", "--k", "2"])).unwrap();
        assert!(out.text.contains("\"text\": \"1\""));
        let out = run(parse(&["expand", "superschur", "--shape", "[[2,2]]", "--k", "1", "--l", "1"])).unwrap();
        assert!(out.text.contains("\"text\": \"0\""));
        assert_eq!(out.code, 0);
    }

    #[test]
    fn usage_errors() {
        let e = run(parse(&["expand", "superschur", "--shape", "[[1],[]]", "--k", "1"])).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = run(parse(&["verify", "--m", "1", "--n", "2", "--suite", "bogus"])).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = run(parse(&["verify", "--m", "2", "--n", "2", "--k", "1"])).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(Cli::try_parse_from(["superfrob", "chartable", "--m", "x", "--n", "1"]).is_err());
    }
}
