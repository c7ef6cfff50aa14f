//! Command-line front end.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use tdc_core::codegen::DEFAULT_DISTANCE_CAP;
use tdc_core::oracle::{verify_generator_set, verify_matrix};
use tdc_core::{code_params, extract_generators, generator_matrix, Error, GeneratorSet, RingElem};

use crate::enumerate::{self, Mode};
use crate::error::CliError;
use crate::format::{self, FieldDescriptor, MatrixFormat, Problem, ProblemSpec};

#[derive(Debug, Parser)]
#[command(
    name = "tdc",
    version,
    about = "Construct and inspect two-dimensional cyclic codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Problem file; `-` or absent reads standard input.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Matrix output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<MatrixFormat>,
    /// Compute the minimum distance (params).
    #[arg(long, global = true)]
    pub with_distance: bool,
    /// Cap on q^k for the minimum-distance search.
    #[arg(long, global = true)]
    pub cap: Option<u128>,
    /// Include the intermediate remainders (member).
    #[arg(long, global = true)]
    pub trace: bool,
    /// Seed for random enumeration.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical generating set.
    Construct,
    /// Print the generator matrix.
    Matrix,
    /// Print n, k, q and optionally d.
    Params,
    /// Decide membership and print the quotients.
    Member {
        /// Element as a JSON s×ell array; defaults to the problem's `element`.
        #[arg(long)]
        element: Option<String>,
    },
    /// Check the construction against a brute-force ideal closure.
    Verify {
        /// Zero the generator of this layer before checking (test hook).
        #[arg(long, hide = true)]
        corrupt_layer: Option<usize>,
    },
    /// Tabulate distinct codes as CSV `n,k,d,hash`.
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Comma-separated modulus coefficients, constant term first.
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub ell: usize,
    #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
    pub mode: Mode,
    /// Number of random ideals to draw.
    #[arg(long, default_value_t = 100)]
    pub count: usize,
}

/// Parses `args` (including the program name) and runs the command. Returns
/// the process exit code; diagnostics go to `stderr`.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(stdout, "{}", e.render())
            } else {
                write!(stderr, "{}", e.render())
            };
            return code;
        }
    };
    let result = execute(&cli, stdin).and_then(|out| write_output(&cli.common, &out, stdout));
    match result {
        Ok(()) => 0,
        Err((e, out)) => {
            if let Some(out) = out {
                if let Err((io, _)) = write_output(&cli.common, &out, stdout) {
                    let _ = writeln!(stderr, "tdc: {io}");
                }
            }
            let _ = writeln!(stderr, "tdc: {e}");
            e.exit_code()
        }
    }
}

/// An error, plus output that should still be written (a failed report).
type Failure = (CliError, Option<String>);

fn fail(e: CliError) -> Failure {
    (e, None)
}

fn write_output(common: &Common, out: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    let res = match &common.output {
        Some(path) => std::fs::write(path, out),
        None => stdout
            .write_all(out.as_bytes())
            .and_then(|_| stdout.flush()),
    };
    res.map_err(|e| fail(CliError::Io(e.to_string())))
}

fn read_problem(common: &Common, stdin: &mut dyn Read) -> Result<Problem, CliError> {
    let text = match common.input.as_deref() {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?
        }
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| CliError::Io(e.to_string()))?;
            s
        }
    };
    ProblemSpec::parse(&text)?.validate()
}

fn construct(pb: &Problem) -> Result<GeneratorSet, CliError> {
    extract_generators(&pb.shape, &pb.generators).map_err(|e| CliError::from_core("construct", e))
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<String, Failure> {
    let common = &cli.common;
    if let Command::Enumerate(args) = &cli.command {
        return run_enumerate(args, common).map_err(fail);
    }
    let pb = read_problem(common, stdin).map_err(fail)?;
    let gs = construct(&pb).map_err(fail)?;
    let opts = &pb.options;
    match &cli.command {
        Command::Construct => Ok(format::generator_set_json(&gs) + "\n"),
        Command::Matrix => {
            let fmt = match (common.format, &opts.format) {
                (Some(f), _) => f,
                (None, Some(f)) => MatrixFormat::parse(f).map_err(fail)?,
                (None, None) => MatrixFormat::Json,
            };
            Ok(format::matrix_output(&generator_matrix(&gs), fmt))
        }
        Command::Params => {
            let with_distance = common.with_distance || opts.with_distance.unwrap_or(false);
            let cap = common.cap.or(opts.cap).unwrap_or(DEFAULT_DISTANCE_CAP);
            let p = code_params(&gs, with_distance, cap)
                .map_err(|e| fail(CliError::from_core("params", e)))?;
            Ok(format::params_json(&p) + "\n")
        }
        Command::Member { element } => {
            let f = match element {
                Some(text) => {
                    let array: format::Array = serde_json::from_str(text)
                        .map_err(|e| fail(CliError::Parse(format!("--element: {e}"))))?;
                    format::parse_array(&pb.shape, &array, "--element").map_err(fail)?
                }
                None => pb.element.clone().ok_or_else(|| {
                    fail(CliError::Parse(
                        "no element given (use --element or \"element\")".into(),
                    ))
                })?,
            };
            let trace = common.trace || opts.trace.unwrap_or(false);
            match gs.decompose(&f, trace) {
                Ok(d) => Ok(format::member_json(&d) + "\n"),
                Err(Error::NotMember { layer }) => Ok(format::nonmember_json(layer) + "\n"),
                Err(e) => Err(fail(CliError::from_core("member", e))),
            }
        }
        Command::Verify { corrupt_layer } => {
            let gs = match corrupt_layer {
                Some(j) => corrupt(&gs, *j).map_err(fail)?,
                None => gs,
            };
            let mut report = verify_generator_set(&gs, &pb.generators)
                .map_err(|e| fail(CliError::from_core("verify", e)))?;
            let mr = verify_matrix(&generator_matrix(&gs), &pb.generators)
                .map_err(|e| fail(CliError::from_core("verify", e)))?;
            report.extend(mr);
            let out = format::report_json(&report) + "\n";
            if report.passed() {
                Ok(out)
            } else {
                Err((CliError::VerificationFailed, Some(out)))
            }
        }
        Command::Enumerate(_) => unreachable!("handled above"),
    }
}

fn corrupt(gs: &GeneratorSet, j: usize) -> Result<GeneratorSet, CliError> {
    let shape = gs.shape().clone();
    if j >= shape.ell() {
        return Err(CliError::Parse(format!(
            "--corrupt-layer: {j} is not below ell = {}",
            shape.ell()
        )));
    }
    let mut gens = gs.gens().to_vec();
    gens[j] = RingElem::zero(&shape);
    Ok(GeneratorSet::from_parts_unchecked(
        shape,
        gs.layers().to_vec(),
        gens,
        gs.t_table().to_vec(),
    ))
}

fn run_enumerate(args: &EnumerateArgs, common: &Common) -> Result<String, CliError> {
    let field = FieldDescriptor {
        p: args.p,
        m: args.m,
        modulus: args.modulus.clone(),
    }
    .build()?;
    let shape = tdc_core::RingShape::new(&field, args.s, args.ell)
        .map_err(|e| CliError::from_core("s/ell", e))?;
    let rows = enumerate::enumerate(&shape, args.mode, args.count, common.seed.unwrap_or(0))?;
    Ok(enumerate::csv(&rows))
}
