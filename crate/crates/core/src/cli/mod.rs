//! The `lusztig-fock` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
//! bound exceeded. Results go to standard output, diagnostics to standard error.

pub mod config;
pub mod verify;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::canonical::CanonicalEngine;
use crate::convention::Convention;
use crate::error::Error;
use crate::fock::{FockSpace, FockVector};
use crate::lusztig::{block_partition, levi_spec, CharacterVector, Flavor, Lusztig};
use crate::matrix::TransitionMatrix;
use crate::partition::{core_and_quotient, core_to_charge, Partition, QuotientTuple};
use crate::render::{self, label_tex, Format};

pub use config::{Bounds, ConfigFile, Overrides, QuotientOrder, RunConfig, SpinPower};
pub use verify::Report;

#[derive(Debug, Parser)]
#[command(name = "lusztig-fock", version, about = "Fock-space ribbon operators, Lusztig induction and decomposition matrices")]
pub struct Cli {
    /// TOML file with `e`, `d`, `format`, `[bounds]` and `[convention]` settings.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_parser = parse_format)]
    pub format: Option<Format>,
    /// The modulus e >= 2.
    #[arg(long, global = true)]
    pub e: Option<u32>,
    /// Charge `d` of the Fock space.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub d: Option<i64>,
    /// Label convention: `transposed` (default) or `classical`.
    #[arg(long, global = true, value_parser = parse_convention)]
    pub convention: Option<Convention>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// e-core, e-quotient and charge vector of a partition.
    Core {
        /// Partition literal such as `3,1`; the empty string is the empty partition.
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Decomposition matrix `D_n` (rows `G⁺` at `v = 1`) or its inverse `E_n`.
    Decomp {
        #[arg(long)]
        n: u32,
        /// Print `E_n` (rows `G⁻` at `v = 1`) instead.
        #[arg(long)]
        inverse: bool,
        /// Keep the coefficients as Laurent polynomials in `v`.
        #[arg(long)]
        generic: bool,
        /// Select the block with this e-core (default: the block of `(n)`).
        #[arg(long, value_parser = parse_partition, conflicts_with = "all")]
        core: Option<Partition>,
        /// Print the full matrix on all partitions of `n`.
        #[arg(long)]
        all: bool,
    },
    /// Apply an operator to a basis vector or to a vector read from standard input.
    Apply {
        #[arg(value_enum)]
        op: Operator,
        /// Index `k` of `V_k`.
        #[arg(long)]
        k: Option<u32>,
        /// Partition index of `S_μ` or `L_μ`.
        #[arg(long, value_parser = parse_partition)]
        mu: Option<Partition>,
        /// Index of `b_r` or residue of `f_r`.
        #[arg(long)]
        r: Option<u32>,
        /// Divided power of `f_r`.
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// Apply the adjoint `b'_r` instead of `b_r`.
        #[arg(long)]
        adjoint: bool,
        /// Basis vector `|λ>` (or `χ_λ` for `L`).
        #[arg(long, value_parser = parse_partition, conflicts_with = "stdin")]
        to: Option<Partition>,
        /// Read the input vector as JSON from standard input.
        #[arg(long)]
        stdin: bool,
        /// Specialise the result at `v = 1`.
        #[arg(long, value_parser = ["1"])]
        at_v: Option<String>,
    },
    /// Canonical basis vector `G⁺(λ)` or `G⁻(λ)`.
    Canonical {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        minus: bool,
        #[arg(long, value_parser = ["1"])]
        at_v: Option<String>,
    },
    /// Blocks of the partitions of `n` with their cores, weights and charges.
    Blocks {
        #[arg(long)]
        n: u32,
    },
    /// e-split Levi subgroup and cuspidal data attached to a label.
    Levi {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_enum, default_value = "gl")]
        flavor: FlavorArg,
    },
    /// Run a property suite and report per-case results.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest degree tested (default: the configured bound of the suite).
        #[arg(long)]
        nmax: Option<u32>,
        /// Largest `|μ|` in the `lusztig-s` suite.
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Operator {
    #[value(name = "V")]
    V,
    #[value(name = "S")]
    S,
    #[value(name = "L")]
    L,
    #[value(name = "b")]
    B,
    #[value(name = "f")]
    F,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    Gl,
    U,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    LusztigS,
    Steinberg,
    Blocks,
    Roundtrips,
    All,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_convention(s: &str) -> Result<Convention, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Bound(String),
    Verification(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Bound(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExceeded { .. } => Failure::Bound(e.to_string()),
            Error::MissingPivot(_) | Error::InexactDivision(_) | Error::Overflow | Error::AmbiguousTiling { .. } => {
                Failure::Verification(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<String, Failure>;

/// Entry point for the binary: real standard streams.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = std::io::stdin();
    run(args, &mut stdin.lock(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

/// Parses `args`, runs the command and returns the exit code.
pub fn run<I, T>(args: I, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = config(&cli).and_then(|cfg| execute(&cli.command, &cfg, input));
    match result {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(Failure::Verification(report)) => {
            let _ = out.write_all(report.as_bytes());
            let _ = writeln!(err, "error: verification failed");
            1
        }
        Err(f) => {
            let (Failure::Usage(m) | Failure::Bound(m) | Failure::Verification(m)) = &f;
            let _ = writeln!(err, "error: {m}");
            f.exit_code()
        }
    }
}

fn config(cli: &Cli) -> Result<RunConfig, Failure> {
    let file = cli.config.as_deref().map(ConfigFile::load).transpose()?;
    let flags = Overrides { e: cli.e, d: cli.d, format: cli.format, convention: cli.convention };
    Ok(RunConfig::resolve(file, &flags)?)
}

/// Runs a parsed command and returns its standard output.
pub fn execute(command: &Command, cfg: &RunConfig, input: &mut dyn Read) -> CmdResult {
    match command {
        Command::Core { lambda } => cmd_core(cfg, lambda),
        Command::Decomp { n, inverse, generic, core, all } => cmd_decomp(cfg, *n, *inverse, *generic, core.as_ref(), *all),
        Command::Apply { op, k, mu, r, power, adjoint, to, stdin, at_v } => {
            let source = match (to, stdin) {
                (Some(l), _) => Source::Basis(l.clone()),
                (None, true) => {
                    let mut text = String::new();
                    input.read_to_string(&mut text).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
                    Source::Json(text)
                }
                (None, false) => return Err(Failure::Usage("apply needs --to <partition> or --stdin".into())),
            };
            let args = ApplyArgs { op: *op, k: *k, mu: mu.clone(), r: *r, power: *power, adjoint: *adjoint };
            cmd_apply(cfg, &args, source, at_v.is_some())
        }
        Command::Canonical { lambda, minus, at_v } => cmd_canonical(cfg, lambda, *minus, at_v.is_some()),
        Command::Blocks { n } => cmd_blocks(cfg, *n),
        Command::Levi { lambda, flavor } => cmd_levi(cfg, lambda, *flavor),
        Command::Verify { suite, nmax, kmax } => cmd_verify(cfg, *suite, *nmax, *kmax),
    }
}

fn ordered_quotient(cfg: &RunConfig, q: QuotientTuple) -> QuotientTuple {
    match cfg.quotient_order {
        QuotientOrder::Runner => q,
        QuotientOrder::Reversed => QuotientTuple(q.0.into_iter().rev().collect()),
    }
}

/// `core`: e-core, e-quotient and charge vector of `λ`.
pub fn cmd_core(cfg: &RunConfig, lambda: &Partition) -> CmdResult {
    let (core, quotient) = core_and_quotient(lambda, cfg.e)?;
    let quotient = ordered_quotient(cfg, quotient);
    let charge = core_to_charge(&core, cfg.e, cfg.d)?;
    let weight = quotient.size();
    let charges: Vec<String> = charge.charges.iter().map(i64::to_string).collect();
    Ok(match cfg.format {
        Format::Json => {
            let v = serde_json::json!({
                "partition": lambda,
                "e": cfg.e,
                "d": cfg.d,
                "core": core,
                "quotient": quotient,
                "weight": weight,
                "charge": charge.charges,
            });
            format!("{v}\n")
        }
        Format::Plain => format!(
            "core [{core}]\nquotient {quotient}\nweight {weight}\ncharge ({})\n",
            charges.join(",")
        ),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["partition", "core", "quotient", "weight", "charge"]).expect("in-memory write");
            w.write_record([lambda.to_string(), core.to_string(), quotient.to_string(), weight.to_string(), charges.join(" ")])
                .expect("in-memory write");
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Latex => {
            let q: Vec<String> = quotient.0.iter().map(label_tex).collect();
            format!(
                "\\lambda = {},\\quad \\kappa = {},\\quad ({}),\\quad s = ({})\n",
                label_tex(lambda),
                label_tex(&core),
                q.join(", "),
                charges.join(", ")
            )
        }
    })
}

/// `decomp`: `D_n` or `E_n` restricted to one block, or on all of `n`.
pub fn cmd_decomp(cfg: &RunConfig, n: u32, inverse: bool, generic: bool, core: Option<&Partition>, all: bool) -> CmdResult {
    cfg.bounds.check_canonical("n", n)?;
    let mut engine = CanonicalEngine::with_convention(cfg.e, cfg.convention)?;
    let labels = if all {
        None
    } else {
        let blocks = block_partition(n, cfg.e)?;
        let block = match core {
            None => blocks.into_iter().next().expect("every n has a block"),
            Some(c) => blocks
                .into_iter()
                .find(|b| &b.core == c)
                .ok_or_else(|| Failure::Usage(format!("no block of {n} has {}-core ({c})", cfg.e)))?,
        };
        Some(block.members)
    };
    fn restrict<T: Clone>(m: TransitionMatrix<T>, labels: &Option<Vec<Partition>>) -> TransitionMatrix<T> {
        match labels {
            Some(l) => m.submatrix(l).expect("block labels are partitions of n"),
            None => m,
        }
    }
    Ok(match (inverse, generic) {
        (false, false) => render::matrix(&restrict(engine.decomposition_matrix(n)?, &labels), cfg.format),
        (true, false) => render::matrix(&restrict(engine.inverse_decomposition_matrix(n)?, &labels), cfg.format),
        (false, true) => render::matrix(&restrict(engine.plus_matrix(n)?, &labels), cfg.format),
        (true, true) => render::matrix(&restrict(engine.minus_matrix(n)?, &labels), cfg.format),
    })
}

enum Source {
    Basis(Partition),
    Json(String),
}

struct ApplyArgs {
    op: Operator,
    k: Option<u32>,
    mu: Option<Partition>,
    r: Option<u32>,
    power: u32,
    adjoint: bool,
}

fn require<T: Clone>(x: &Option<T>, flag: &str, op: &str) -> Result<T, Failure> {
    x.clone().ok_or_else(|| Failure::Usage(format!("operator {op} needs {flag}")))
}

fn parse_json(text: &str) -> Result<serde_json::Value, Failure> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
    // a bare map of coefficients is accepted as the `entries` object
    Ok(match v.get("entries") {
        Some(_) => v,
        None => serde_json::json!({ "entries": v }),
    })
}

fn cmd_apply(cfg: &RunConfig, args: &ApplyArgs, source: Source, at_one: bool) -> CmdResult {
    if args.op == Operator::L {
        let mu = require(&args.mu, "--mu", "L")?;
        let x = match source {
            Source::Basis(l) => CharacterVector::chi(l),
            Source::Json(text) => CharacterVector::from_json(&parse_json(&text)?)?,
        };
        let top = x.iter().map(|(l, _)| l.size()).max().unwrap_or(0);
        cfg.bounds.check_partitions("result degree", top + cfg.e * mu.size())?;
        let y = Lusztig::with_convention(cfg.e, cfg.convention)?.induce(&x, &mu)?;
        return Ok(render::character_vector(&y, cfg.format));
    }
    let x = match source {
        Source::Basis(l) => FockVector::basis(l),
        Source::Json(text) => {
            let (x, e, _) = FockVector::from_json(&parse_json(&text)?)?;
            if e.is_some_and(|e| e != cfg.e) {
                return Err(Failure::Usage(format!("input vector has e = {} but e = {}", e.unwrap_or(0), cfg.e)));
            }
            x
        }
    };
    let space = FockSpace::with_convention(cfg.e, cfg.convention)?;
    let top = x.support().map(Partition::size).max().unwrap_or(0);
    let y = match args.op {
        Operator::V => {
            let k = require(&args.k, "--k", "V")?;
            cfg.bounds.check_partitions("result degree", top + cfg.e * k)?;
            space.apply_v(&x, k)?
        }
        Operator::S => {
            let mu = require(&args.mu, "--mu", "S")?;
            cfg.bounds.check_partitions("result degree", top + cfg.e * mu.size())?;
            space.apply_s(&x, &mu)?
        }
        Operator::B => {
            let r = require(&args.r, "--r", "b")?;
            if r == 0 {
                return Err(Failure::Usage("b_r needs r >= 1".into()));
            }
            if args.adjoint {
                space.apply_b_adjoint(&x, r)?
            } else {
                cfg.bounds.check_partitions("result degree", top + cfg.e * r)?;
                space.apply_b(&x, r)?
            }
        }
        Operator::F => {
            let r = require(&args.r, "--r", "f")?;
            cfg.bounds.check_partitions("result degree", top + args.power)?;
            space.apply_f_divided(&x, r, args.power)?
        }
        Operator::L => unreachable!("handled above"),
    };
    Ok(if at_one { render::fock_vector_at_one(&y, cfg.format) } else { render::fock_vector(&y, cfg.format) })
}

fn cmd_canonical(cfg: &RunConfig, lambda: &Partition, minus: bool, at_one: bool) -> CmdResult {
    cfg.bounds.check_canonical("n", lambda.size())?;
    let mut engine = CanonicalEngine::with_convention(cfg.e, cfg.convention)?;
    let g = if minus { engine.canonical_minus(lambda)? } else { engine.canonical_plus(lambda)? };
    Ok(if at_one { render::fock_vector_at_one(&g.vector, cfg.format) } else { render::fock_vector(&g.vector, cfg.format) })
}

fn cmd_blocks(cfg: &RunConfig, n: u32) -> CmdResult {
    cfg.bounds.check_partitions("n", n)?;
    let blocks = block_partition(n, cfg.e)?;
    let mut rows = Vec::new();
    for b in &blocks {
        let charge = core_to_charge(&b.core, cfg.e, cfg.d)?;
        rows.push((b, charge.charges));
    }
    Ok(match cfg.format {
        Format::Json => {
            let v: Vec<serde_json::Value> = rows
                .iter()
                .map(|(b, c)| {
                    let members: Vec<String> = b.members.iter().map(Partition::to_string).collect();
                    serde_json::json!({ "core": b.core, "weight": b.weight, "charge": c, "members": members })
                })
                .collect();
            format!("{}\n", serde_json::Value::Array(v))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["core", "weight", "charge", "members"]).expect("in-memory write");
            for (b, c) in &rows {
                let c: Vec<String> = c.iter().map(i64::to_string).collect();
                let m: Vec<String> = b.members.iter().map(|l| format!("({l})")).collect();
                w.write_record([b.core.to_string(), b.weight.to_string(), c.join(" "), m.join(" ")])
                    .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Plain | Format::Latex => {
            let latex = cfg.format == Format::Latex;
            let mut s = String::new();
            for (b, c) in &rows {
                let c: Vec<String> = c.iter().map(i64::to_string).collect();
                let m: Vec<String> =
                    b.members.iter().map(|l| if latex { label_tex(l) } else { format!("({l})") }).collect();
                let core = if latex { label_tex(&b.core) } else { format!("({})", b.core) };
                s.push_str(&format!("core {core} weight {} charge ({}): {}\n", b.weight, c.join(","), m.join(" ")));
            }
            s
        }
    })
}

fn cmd_levi(cfg: &RunConfig, lambda: &Partition, flavor: FlavorArg) -> CmdResult {
    let flavor = match flavor {
        FlavorArg::Gl => Flavor::GL,
        FlavorArg::U => Flavor::U,
    };
    let label = match cfg.convention {
        Convention::Transposed => lambda.clone(),
        Convention::Classical => lambda.conjugate(),
    };
    let mut spec = levi_spec(&label, cfg.e, flavor)?;
    if cfg.convention == Convention::Classical {
        spec.mu = spec.mu.conjugate();
        spec.alpha = spec.alpha.conjugate();
    }
    Ok(match cfg.format {
        Format::Json => {
            let v = serde_json::json!({ "levi": spec.to_string(), "mu": spec.mu, "alpha": spec.alpha, "e": cfg.e });
            format!("{v}\n")
        }
        Format::Csv => format!("levi,mu,alpha\n{},\"{}\",\"{}\"\n", spec, spec.mu, spec.alpha),
        Format::Plain => format!("{spec}  mu=({}) alpha=({})\n", spec.mu, spec.alpha),
        Format::Latex => format!("{}\\quad ({}, {})\n", spec, label_tex(&spec.mu), label_tex(&spec.alpha)),
    })
}

fn cmd_verify(cfg: &RunConfig, suite: Suite, nmax: Option<u32>, kmax: u32) -> CmdResult {
    let suites = match suite {
        Suite::All => vec![Suite::LusztigS, Suite::Steinberg, Suite::Blocks, Suite::Roundtrips],
        s => vec![s],
    };
    let mut text = String::new();
    let mut failed = 0;
    let mut total = 0;
    for s in suites {
        let report = match s {
            Suite::LusztigS => {
                let n = nmax.unwrap_or(6);
                cfg.bounds.check_partitions("nmax", n)?;
                verify::lusztig_s(cfg, n, kmax)?
            }
            Suite::Steinberg => {
                let n = nmax.unwrap_or(cfg.bounds.canonical);
                cfg.bounds.check_canonical("nmax", n)?;
                verify::steinberg(cfg, n)?
            }
            Suite::Blocks => {
                let n = nmax.unwrap_or(cfg.bounds.partitions);
                cfg.bounds.check_partitions("nmax", n)?;
                verify::blocks(cfg, n)?
            }
            Suite::Roundtrips => {
                let n = nmax.unwrap_or(cfg.bounds.partitions);
                cfg.bounds.check_partitions("nmax", n)?;
                verify::roundtrips(cfg, n)?
            }
            Suite::All => unreachable!("expanded above"),
        };
        text.push_str(&report.render());
        failed += report.failures();
        total += report.cases.len();
    }
    if suite == Suite::All {
        text.push_str(&match failed {
            0 => format!("PASS ({total} cases)\n"),
            f => format!("FAIL ({f} of {total} cases)\n"),
        });
    }
    if failed > 0 {
        Err(Failure::Verification(text))
    } else {
        Ok(text)
    }
}
