//! Command implementations for the `leibniz` binary.
//!
//! [`run_command`] takes the argument vector (without the program name)
//! and returns the exit code plus captured output, so the whole surface is
//! testable in-process. Exit codes: `0` success or a true answer, `1` a
//! false answer or a failed criterion, `2` usage, parse, or input errors.

pub mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use leibniz_core::json::{
    element_to_json, symmetric_data_from_json, symmetric_data_to_json, ElementJson,
    SymmetricDataJson,
};
use leibniz_core::parse::parse_element;
use leibniz_core::render::element_text;
use leibniz_core::{
    decompose_preserving, decompose_symmetric, is_in_annihilator, is_symmetric, oracle,
    preserves_symmetric, symmetrize, synthesize, Error, InnerAuto, Rat, RatElement,
};
use serde::Serialize;
use std::io::Read;

#[derive(Serialize)]
struct BasisJson {
    n: usize,
    d: u32,
    dim: usize,
    basis: Vec<ElementJson>,
}

#[derive(Serialize)]
struct SplitJson {
    ann: ElementJson,
    sym: ElementJson,
}

#[derive(Parser, Debug)]
#[command(
    name = "leibniz",
    version,
    about = "Exact computations in the free metabelian Leibniz algebra",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normalize a bracket expression to the canonical basis
    Normalize(ExprArgs),
    /// Symmetric-element queries
    #[command(subcommand)]
    Sym(SymCommand),
    /// Annihilator queries
    #[command(subcommand)]
    Ann(AnnCommand),
    /// Inner-automorphism queries
    #[command(subcommand)]
    Inner(InnerCommand),
    /// Run the randomized verification suites
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct ExprArgs {
    /// Rank of the algebra
    #[arg(short = 'n', long = "rank", value_name = "N")]
    n: usize,
    /// Expression, e.g. "[x1,x2].r3 - 1/2*[x1,x1]"
    expr: String,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum SymCommand {
    /// Test whether an expression denotes a symmetric element
    Check(ExprArgs),
    /// Extract the (alpha, f, g) data of a symmetric element
    Decompose(ExprArgs),
    /// Build the symmetric element from (alpha, f, g) JSON data
    Synth(SynthArgs),
    /// Project onto the symmetric subalgebra by orbit averaging
    Symmetrize(ExprArgs),
    /// Basis of the symmetric elements of one homogeneous degree
    Basis(BasisArgs),
}

#[derive(Args, Debug)]
struct SynthArgs {
    /// Rank of the algebra
    #[arg(short = 'n', long = "rank", value_name = "N")]
    n: usize,
    /// Path to the JSON data; "-" or omitted reads standard input
    #[arg(long, value_name = "FILE")]
    data: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct BasisArgs {
    /// Rank of the algebra
    #[arg(short = 'n', long = "rank", value_name = "N")]
    n: usize,
    /// Homogeneous degree
    #[arg(short = 'd', long = "degree", value_name = "D")]
    d: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum AnnCommand {
    /// Test annihilator membership
    Check(ExprArgs),
}

#[derive(Subcommand, Debug)]
enum InnerCommand {
    /// Apply the inner automorphism of -u to the element -v
    Apply(InnerApplyArgs),
    /// Test whether the inner automorphism of -u preserves symmetric
    /// elements
    Preserves(InnerBaseArgs),
    /// Split -u into an annihilator part plus a symmetric part
    Decompose(InnerBaseArgs),
}

#[derive(Args, Debug)]
struct InnerApplyArgs {
    #[arg(short = 'n', long = "rank", value_name = "N")]
    n: usize,
    /// Commutator-ideal element defining the automorphism
    #[arg(short = 'u', value_name = "EXPR")]
    u: String,
    /// Element to map
    #[arg(short = 'v', value_name = "EXPR")]
    v: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct InnerBaseArgs {
    #[arg(short = 'n', long = "rank", value_name = "N")]
    n: usize,
    /// Commutator-ideal element defining the automorphism
    #[arg(short = 'u', value_name = "EXPR")]
    u: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Which suite to run
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Cases per check
    #[arg(long, default_value_t = 100)]
    cases: usize,
    /// RNG seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest rank to sample
    #[arg(long = "max-n", default_value_t = 4)]
    max_n: usize,
    /// Largest element degree to sample
    #[arg(long = "max-deg", default_value_t = 4)]
    max_deg: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum SuiteArg {
    Identities,
    Theorems,
    Inner,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Result of one invocation.
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        CommandOutput {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: String) -> Self {
        CommandOutput {
            code,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Runs one command line (without the program name).
pub fn run_command<I, S>(args: I) -> CommandOutput
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut argv: Vec<String> = vec!["leibniz".to_string()];
    argv.extend(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders help/version on stdout with exit code 0
            return if e.exit_code() == 0 {
                CommandOutput::ok(e.to_string())
            } else {
                CommandOutput::fail(2, e.to_string())
            };
        }
    };
    dispatch(cli.command)
}

fn dispatch(command: Command) -> CommandOutput {
    match command {
        Command::Normalize(args) => with_element(&args, element_output),
        Command::Sym(SymCommand::Check(args)) => {
            with_element(&args, |u, format| bool_output(is_symmetric(&u), format))
        }
        Command::Sym(SymCommand::Decompose(args)) => with_element(&args, |u, format| {
            match decompose_symmetric(&u) {
                Ok(d) => CommandOutput::ok(symmetric_data_output(&d, format)),
                Err(e) => CommandOutput::fail(1, format!("{e}\n")),
            }
        }),
        Command::Sym(SymCommand::Synth(args)) => run_synth(&args),
        Command::Sym(SymCommand::Symmetrize(args)) => with_element(&args, |u, format| {
            match symmetrize(&u) {
                Ok(s) => element_output(s, format),
                Err(e) => CommandOutput::fail(2, format!("{e}\n")),
            }
        }),
        Command::Sym(SymCommand::Basis(args)) => run_basis(&args),
        Command::Ann(AnnCommand::Check(args)) => {
            with_element(&args, |u, format| bool_output(is_in_annihilator(&u), format))
        }
        Command::Inner(InnerCommand::Apply(args)) => run_inner_apply(&args),
        Command::Inner(InnerCommand::Preserves(args)) => {
            run_inner_base(&args, |u, format| match preserves_symmetric(&u) {
                Ok(answer) => bool_output(answer, format),
                Err(e) => CommandOutput::fail(2, format!("{e}\n")),
            })
        }
        Command::Inner(InnerCommand::Decompose(args)) => {
            run_inner_base(&args, |u, format| match decompose_preserving(&u) {
                Ok((ann, sym)) => CommandOutput::ok(split_output(&ann, &sym, format)),
                Err(Error::NotPreserving) => {
                    CommandOutput::fail(1, format!("{}\n", Error::NotPreserving))
                }
                Err(e) => CommandOutput::fail(2, format!("{e}\n")),
            })
        }
        Command::Verify(args) => run_verify(&args),
    }
}

fn parse_checked(expr: &str, n: usize) -> Result<RatElement, CommandOutput> {
    if n == 0 {
        return Err(CommandOutput::fail(2, "rank must be at least 1\n".into()));
    }
    match parse_element::<Rat>(expr, n) {
        Ok(ast) => match ast.normalize(n) {
            Ok(u) => Ok(u),
            Err(e) => Err(CommandOutput::fail(2, format!("{e}\n"))),
        },
        Err(e) => Err(CommandOutput::fail(2, format!("{e}\n"))),
    }
}

fn with_element<F>(args: &ExprArgs, body: F) -> CommandOutput
where
    F: FnOnce(RatElement, Format) -> CommandOutput,
{
    match parse_checked(&args.expr, args.n) {
        Ok(u) => body(u, args.format),
        Err(out) => out,
    }
}

fn element_output(u: RatElement, format: Format) -> CommandOutput {
    CommandOutput::ok(render_element(&u, format))
}

fn render_element(u: &RatElement, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", element_text(u)),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(&element_to_json(u)).expect("serialization is infallible")
        ),
    }
}

fn bool_output(answer: bool, format: Format) -> CommandOutput {
    let stdout = match format {
        Format::Text => format!("{answer}\n"),
        Format::Json => format!("{{\"result\":{answer}}}\n"),
    };
    CommandOutput {
        code: if answer { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}

fn symmetric_data_output(d: &leibniz_core::RatSymmetricData, format: Format) -> String {
    match format {
        Format::Text => format!("alpha = {}\nf = {}\ng = {}\n", d.alpha, d.f, d.g),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(&symmetric_data_to_json(d))
                .expect("serialization is infallible")
        ),
    }
}

fn split_output(ann: &RatElement, sym: &RatElement, format: Format) -> String {
    match format {
        Format::Text => format!("ann = {}\nsym = {}\n", element_text(ann), element_text(sym)),
        Format::Json => {
            let value = SplitJson {
                ann: element_to_json(ann),
                sym: element_to_json(sym),
            };
            format!(
                "{}\n",
                serde_json::to_string(&value).expect("serialization is infallible")
            )
        }
    }
}

fn run_synth(args: &SynthArgs) -> CommandOutput {
    let raw = match &args.data {
        Some(path) if path != "-" => match std::fs::read_to_string(path) {
            Ok(s) => s,
            Err(e) => return CommandOutput::fail(2, format!("cannot read {path}: {e}\n")),
        },
        _ => {
            let mut buf = String::new();
            if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
                return CommandOutput::fail(2, format!("cannot read standard input: {e}\n"));
            }
            buf
        }
    };
    let json: SymmetricDataJson = match serde_json::from_str(&raw) {
        Ok(j) => j,
        Err(e) => return CommandOutput::fail(2, format!("invalid JSON: {e}\n")),
    };
    if json.n != args.n {
        return CommandOutput::fail(
            2,
            format!("rank mismatch: -n {} but data has n = {}\n", args.n, json.n),
        );
    }
    let data = match symmetric_data_from_json::<Rat>(&json) {
        Ok(d) => d,
        Err(e @ (Error::FNotInvariant | Error::GNotInvariant | Error::GNotZeroAtRankOne)) => {
            return CommandOutput::fail(1, format!("{e}\n"))
        }
        Err(e) => return CommandOutput::fail(2, format!("{e}\n")),
    };
    match synthesize(&data) {
        Ok(u) => element_output(u, args.format),
        Err(e) => CommandOutput::fail(1, format!("{e}\n")),
    }
}

fn run_basis(args: &BasisArgs) -> CommandOutput {
    if args.n == 0 || args.d == 0 {
        return CommandOutput::fail(2, "rank and degree must be at least 1\n".into());
    }
    match oracle::invariant_basis::<Rat>(args.n, args.d) {
        Ok(basis) => {
            let stdout = match args.format {
                Format::Text => {
                    let mut s = format!("dim {}\n", basis.len());
                    for u in &basis {
                        s.push_str(&element_text(u));
                        s.push('\n');
                    }
                    s
                }
                Format::Json => {
                    let value = BasisJson {
                        n: args.n,
                        d: args.d,
                        dim: basis.len(),
                        basis: basis.iter().map(element_to_json).collect(),
                    };
                    format!(
                        "{}\n",
                        serde_json::to_string(&value).expect("serialization is infallible")
                    )
                }
            };
            CommandOutput::ok(stdout)
        }
        Err(e) => CommandOutput::fail(2, format!("{e}\n")),
    }
}

fn run_inner_apply(args: &InnerApplyArgs) -> CommandOutput {
    let u = match parse_checked(&args.u, args.n) {
        Ok(u) => u,
        Err(out) => return out,
    };
    let v = match parse_checked(&args.v, args.n) {
        Ok(v) => v,
        Err(out) => return out,
    };
    match InnerAuto::new(u) {
        Ok(psi) => element_output(psi.apply(&v), args.format),
        Err(e) => CommandOutput::fail(2, format!("{e}\n")),
    }
}

fn run_inner_base<F>(args: &InnerBaseArgs, body: F) -> CommandOutput
where
    F: FnOnce(RatElement, Format) -> CommandOutput,
{
    match parse_checked(&args.u, args.n) {
        Ok(u) => body(u, args.format),
        Err(out) => out,
    }
}

fn run_verify(args: &VerifyArgs) -> CommandOutput {
    if args.max_n < 2 || args.max_n > 6 {
        return CommandOutput::fail(2, "--max-n must be between 2 and 6\n".into());
    }
    if args.cases == 0 {
        return CommandOutput::fail(2, "--cases must be at least 1\n".into());
    }
    let config = verify::VerifyConfig {
        suite: match args.suite {
            SuiteArg::Identities => verify::Suite::Identities,
            SuiteArg::Theorems => verify::Suite::Theorems,
            SuiteArg::Inner => verify::Suite::Inner,
            SuiteArg::All => verify::Suite::All,
        },
        cases: args.cases,
        seed: args.seed,
        max_n: args.max_n,
        max_deg: args.max_deg.clamp(1, 6),
    };
    let results = verify::run(&config);
    let report = verify::render_report(&results);
    if verify::all_passed(&results) {
        CommandOutput::ok(report)
    } else {
        CommandOutput {
            code: 1,
            stdout: report,
            stderr: String::new(),
        }
    }
}
