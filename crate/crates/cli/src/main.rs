use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use uce_core::chain::{hl, DEFAULT_GUARD};
use uce_core::leibniz::sl;
use uce_core::superdialg::{builtin, default_catalog, load_file, SuperDialgebra};
use uce_core::tensorsq;
use uce_core::theorems::{liu_contradiction_check, standard_cases, verify_case, VerifyOptions};
use uce_core::{hochschild, Error};

const EXIT_INVALID: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_GUARD: u8 = 3;
const EXIT_UNCLASSIFIED: u8 = 4;
const EXIT_FAILED: u8 = 5;

/// Universal central extensions and second Leibniz homology of matrix
/// Leibniz superalgebras over superdialgebras.
#[derive(Parser, Debug)]
#[command(name = "uce-lab", version)]
#[command(after_help = "Exit codes: 0 ok, 1 invalid dialgebra, 2 parse or usage error, \
3 size guard exceeded, 4 unclassified case, 5 verification failed")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Maximum number of basis tensors in any tensor power.
    #[arg(long, default_value_t = DEFAULT_GUARD, global = true, value_parser = positive)]
    guard: u128,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
#[group(required = false, multiple = false)]
struct Source {
    /// Dialgebra file in JSON format.
    #[arg(long, value_name = "FILE")]
    dialgebra: Option<PathBuf>,
    /// Name of a builtin dialgebra (see `catalog`).
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct Shape {
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate the dialgebra axioms of a file or builtin.
    Check {
        file: Option<PathBuf>,
        #[arg(long, value_name = "NAME", conflicts_with = "file")]
        builtin: Option<String>,
    },
    /// HL2(sl(m,n,D)).
    Hl2 {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        source: Source,
        /// Compute through the chain complex, the tensor square, or both.
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// HHS1(D).
    Hhs1 {
        #[command(flatten)]
        source: Source,
    },
    /// Compare HL2(sl(m,n,D)) with HHS1(D) + W(m,n,D).
    Verify {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        source: Source,
        /// Run the standard table of cases and the char-0 W(2,2) witness.
        #[arg(long)]
        all: bool,
        /// Record elapsed times in reports.
        #[arg(long)]
        timings: bool,
    },
    /// List builtin dialgebras.
    Catalog,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Chain,
    Tensor,
    Both,
}

fn positive(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("guard must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) | Error::InvalidInput(_) => EXIT_PARSE,
            Error::SizeGuardExceeded { .. } => EXIT_GUARD,
            Error::UnclassifiedCase { .. } | Error::UnsupportedCase { .. } => EXIT_UNCLASSIFIED,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

type CmdResult = Result<u8, Failure>;

fn load(source: &Source) -> Result<SuperDialgebra, Failure> {
    match (&source.dialgebra, &source.builtin) {
        (Some(path), _) => Ok(load_file(path)?),
        (None, Some(name)) => Ok(builtin(name)?),
        (None, None) => Err(fail(EXIT_PARSE, "one of --dialgebra or --builtin is required")),
    }
}

/// Loads and validates a dialgebra for homology commands.
fn load_valid(source: &Source) -> Result<SuperDialgebra, Failure> {
    let d = load(source)?;
    let violations = d.validate();
    if let Some(v) = violations.first() {
        return Err(fail(EXIT_INVALID, format!("{} is not a superdialgebra: {v}", d.name())));
    }
    Ok(d)
}

fn shape(s: &Shape) -> Result<(usize, usize), Failure> {
    match (s.m, s.n) {
        (Some(m), Some(n)) => Ok((m, n)),
        _ => Err(fail(EXIT_PARSE, "--m and --n are required")),
    }
}

fn emit(format: Format, text: String, value: serde_json::Value) {
    match format {
        Format::Text => print!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("serializable")),
    }
}

fn cmd_check(cli: &Cli, file: &Option<PathBuf>, name: &Option<String>) -> CmdResult {
    let d = match (file, name) {
        (Some(path), _) => load_file(path)?,
        (None, Some(name)) => builtin(name)?,
        (None, None) => return Err(fail(EXIT_PARSE, "a file or --builtin is required")),
    };
    let violations = d.validate();
    let mut text = format!(
        "{}: dimension {} over {}, {}\n",
        d.name(),
        d.dim(),
        d.ring(),
        if d.is_unital() { "unital" } else { "no bar-unit" }
    );
    if violations.is_empty() {
        text.push_str("valid\n");
    }
    for v in &violations {
        text.push_str(&format!("violation: {v}\n"));
    }
    emit(
        cli.format,
        text,
        json!({
            "name": d.name(),
            "ring": d.ring().to_string(),
            "dim": d.dim(),
            "unital": d.is_unital(),
            "valid": violations.is_empty(),
            "violations": violations.iter().map(|v| json!({
                "axiom": v.axiom.to_string(),
                "indices": v.indices,
            })).collect::<Vec<_>>(),
        }),
    );
    Ok(if violations.is_empty() { 0 } else { EXIT_INVALID })
}

fn cmd_hl2(cli: &Cli, sh: &Shape, source: &Source, method: Method) -> CmdResult {
    let (m, n) = shape(sh)?;
    let d = load_valid(source)?;
    let s = sl(m, n, &d)?;
    let chain = match method {
        Method::Tensor => None,
        _ => Some(hl(&s.algebra, 2, cli.guard)?),
    };
    let tensor = match method {
        Method::Chain => None,
        _ => Some(tensorsq::hl2(&s.algebra, cli.guard)?),
    };
    if let (Some(a), Some(b)) = (&chain, &tensor) {
        if a != b {
            return Err(fail(EXIT_FAILED, format!("paths disagree: chain {a}, tensor {b}")));
        }
    }
    let value = chain.clone().or(tensor.clone()).expect("some path ran");
    let label = format!("HL2(sl({m},{n},{}))", d.name());
    emit(
        cli.format,
        format!("{label} = {value}\n"),
        json!({
            "case": {"m": m, "n": n, "dialgebra": d.name(), "ring": d.ring().to_string()},
            "sl_dim": s.dim(),
            "computed": value,
            "chain_path": chain,
            "tensor_path": tensor,
        }),
    );
    Ok(0)
}

fn cmd_hhs1(cli: &Cli, source: &Source) -> CmdResult {
    let d = load_valid(source)?.with_bar_unit_basis()?;
    let h = hochschild::hhs1(&d, cli.guard)?;
    emit(
        cli.format,
        format!("HHS1({}) = {h}\n", d.name()),
        json!({"dialgebra": d.name(), "ring": d.ring().to_string(), "computed": h}),
    );
    Ok(0)
}

fn cmd_verify(cli: &Cli, sh: &Shape, source: &Source, all: bool, timings: bool) -> CmdResult {
    let opts = VerifyOptions {
        guard: cli.guard,
        seed: cli.seed,
        timings,
    };
    if !all {
        let (m, n) = shape(sh)?;
        let d = load_valid(source)?;
        let rep = verify_case(m, n, &d, &opts)?;
        emit(cli.format, rep.to_text(), serde_json::to_value(&rep).expect("serializable"));
        return Ok(if rep.pass { 0 } else { EXIT_FAILED });
    }
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut ok = true;
    for (m, n, name) in standard_cases() {
        let rep = verify_case(m, n, &builtin(name)?, &opts)?;
        ok &= rep.pass;
        text.push_str(&rep.to_text());
        reports.push(serde_json::to_value(&rep).expect("serializable"));
    }
    let liu = liu_contradiction_check(&builtin("rationals")?, cli.guard)?;
    ok &= liu.pass;
    text.push_str(&format!(
        "W(2,2,{}) = {} with 2 invertible: {}\n",
        liu.dialgebra,
        liu.w,
        if liu.pass { "PASS" } else { "FAIL" }
    ));
    emit(cli.format, text, json!({"cases": reports, "liu_contradiction": liu, "pass": ok}));
    Ok(if ok { 0 } else { EXIT_FAILED })
}

fn cmd_catalog(cli: &Cli) -> CmdResult {
    let entries = default_catalog();
    let mut text = String::new();
    for e in &entries {
        text.push_str(&format!(
            "{:<16} dim {:<2} {:<4} {:<8} {}\n",
            e.name,
            e.dialgebra.dim(),
            e.dialgebra.ring().to_string(),
            if e.unital { "unital" } else { "-" },
            e.description
        ));
    }
    emit(
        cli.format,
        text,
        json!(entries
            .iter()
            .map(|e| json!({
                "name": e.name,
                "description": e.description,
                "dim": e.dialgebra.dim(),
                "ring": e.dialgebra.ring().to_string(),
                "unital": e.unital,
            }))
            .collect::<Vec<_>>()),
    );
    Ok(0)
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Check { file, builtin } => cmd_check(cli, file, builtin),
        Command::Hl2 { shape, source, method } => cmd_hl2(cli, shape, source, *method),
        Command::Hhs1 { source } => cmd_hhs1(cli, source),
        Command::Verify {
            shape,
            source,
            all,
            timings,
        } => cmd_verify(cli, shape, source, *all, *timings),
        Command::Catalog => cmd_catalog(cli),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
