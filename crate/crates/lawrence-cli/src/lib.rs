//! Command-line front end: input parsing, subcommand dispatch, reports.

pub mod doc;
pub mod input;
pub mod render;

use clap::{Parser, Subcommand, ValueEnum};
use lawrence_core::ehrhart;
use lawrence_core::report::{CheckEntry, CheckReport};
use lawrence_core::verify::{run_suite, sweep_configs, SuiteOptions, SweepParams};
use lawrence_core::{Error, Guards};
use num::BigInt;
use std::fmt;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

/// Exit codes: 0 success, 1 failed check, 2 invalid input or guard.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    /// Invalid input, schema violation, or guard exceeded (exit 2).
    Input(String),
    /// A mathematical cross-check failed (exit 1).
    Check(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "error: {msg}"),
            CliError::Check(msg) => write!(f, "check failed: {msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::NegativeDelta { .. } | Error::PolynomialityViolation => {
                CliError::Check(e.to_string())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_BAD_INPUT,
            CliError::Check(_) => EXIT_CHECK_FAILED,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Formula,
    Bounded,
    Bruteforce,
    All,
}

#[derive(Parser, Debug)]
#[command(
    name = "lawrence",
    version,
    about = "Exact Ehrhart delta-polynomials of Lawrence polytopes"
)]
pub struct Cli {
    /// Input JSON file ('-' for standard input). Subcommands other than
    /// `verify` read standard input when the flag is omitted.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    /// Override the seed from the input document.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Subset-enumeration guard (maximum n for the 2^n matroid scan).
    #[arg(long, global = true)]
    pub max_subsets: Option<usize>,

    /// Sign-vector guard (maximum n for the 3^n cell scan).
    #[arg(long, global = true)]
    pub max_signvectors: Option<usize>,

    /// Fiber-enumeration guard (maximum (m+1)^n for dilate counting).
    #[arg(long, global = true)]
    pub max_dilate_fibers: Option<u64>,

    /// Attach wall-clock timings to checks. Timed output is not
    /// byte-reproducible across runs.
    #[arg(long, global = true)]
    pub timings: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse and validate the input configuration.
    Validate,
    /// List the matroid elements with dimension, f-vector, and h-vector.
    Matroid {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Box points and counts per independent set.
    Boxes {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Cell census of the arrangement; `--flat` restricts to a flat.
    Arrangement {
        /// Comma-separated 1-based indices of an independent set.
        #[arg(long)]
        flat: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute the delta-polynomial.
    Delta {
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count lattice points of a dilate (optionally interior points).
    Points {
        #[arg(long)]
        dilate: u64,
        #[arg(long)]
        interior: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Normalized volume delta(1) and its cross-check sum.
    Volume {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the invariant suite on the input, or on random configurations
    /// when no input is supplied.
    Verify {
        /// Number of random configurations for the sweep.
        #[arg(long)]
        cases: Option<usize>,
        #[arg(long)]
        dmax: Option<usize>,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        entry_bound: Option<i64>,
        /// Deliberately corrupt one check (exit-code testing hook).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Everything in one document.
    Report {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

fn read_input_text(path: &Option<PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Input(format!("cannot read standard input: {e}")))?;
            Ok(buf)
        }
    }
}

fn load_input(cli: &Cli) -> Result<input::ValidatedInput, CliError> {
    let text = read_input_text(&cli.input)?;
    let mut parsed = input::parse_input(&text)?;
    if let Some(seed) = cli.seed {
        parsed.seed = seed;
    }
    if let Some(v) = cli.max_subsets {
        parsed.guards.max_subsets = v;
    }
    if let Some(v) = cli.max_signvectors {
        parsed.guards.max_signvectors = v;
    }
    if let Some(v) = cli.max_dilate_fibers {
        parsed.guards.max_dilate_fibers = v;
    }
    Ok(parsed)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization cannot fail")
}

/// Run the CLI; returns (exit code, output for stdout, output for stderr).
pub fn execute(cli: &Cli) -> (i32, String, String) {
    match dispatch(cli) {
        Ok(Outcome { stdout, failed }) => {
            let code = if failed { EXIT_CHECK_FAILED } else { EXIT_OK };
            (code, stdout, String::new())
        }
        Err(e) => (e.exit_code(), String::new(), format!("{e}\n")),
    }
}

struct Outcome {
    stdout: String,
    failed: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            stdout,
            failed: false,
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Validate => {
            let parsed = load_input(cli)?;
            let c = &parsed.config;
            let mults: Vec<String> = (0..c.len()).map(|i| c.mult(i).to_string()).collect();
            Ok(Outcome::ok(format!(
                "ok: rank {}, {} vectors, multipliers [{}]\n",
                c.rank(),
                c.len(),
                mults.join(", ")
            )))
        }
        Command::Matroid { format } => {
            let parsed = load_input(cli)?;
            let elements = doc::matroid_doc(&parsed.config, &parsed.guards)?;
            Ok(Outcome::ok(match format {
                Format::Json => to_json(&elements) + "\n",
                Format::Text => render::render_matroid(&elements),
            }))
        }
        Command::Boxes { format } => {
            let parsed = load_input(cli)?;
            let boxes = doc::boxes_doc(&parsed.config, &parsed.guards)?;
            Ok(Outcome::ok(match format {
                Format::Json => to_json(&boxes) + "\n",
                Format::Text => render::render_boxes(&boxes),
            }))
        }
        Command::Arrangement { flat, format } => {
            let parsed = load_input(cli)?;
            let (arr, _) = doc::resolve_arrangement(&parsed)?;
            let doc = match flat {
                None => doc::arrangement_doc(&arr, &parsed.guards)?,
                Some(spec) => {
                    let indices: Result<Vec<usize>, _> =
                        spec.split(',').map(|s| s.trim().parse::<usize>()).collect();
                    let indices = indices
                        .map_err(|e| CliError::Input(format!("bad --flat list: {e}")))?;
                    doc::flat_doc(&arr, &indices, &parsed.guards)?
                }
            };
            Ok(Outcome::ok(match format {
                Format::Json => to_json(&doc) + "\n",
                Format::Text => render::render_arrangement(&doc),
            }))
        }
        Command::Delta { method, format } => {
            let parsed = load_input(cli)?;
            let c = &parsed.config;
            let guards = &parsed.guards;
            let all = matches!(method, MethodArg::All);
            let doc = if all {
                let (arr, _) = doc::resolve_arrangement(&parsed)?;
                doc::delta_all_doc(c, &arr, guards)?
            } else {
                let (tag, delta) = match method {
                    MethodArg::Formula => (
                        ehrhart::DeltaMethod::FormulaH.tag(),
                        ehrhart::delta_from_formula(c, guards)?,
                    ),
                    MethodArg::Bruteforce => (
                        ehrhart::DeltaMethod::BruteForce.tag(),
                        ehrhart::delta_bruteforce(c, guards)?,
                    ),
                    MethodArg::Bounded => {
                        let (arr, _) = doc::resolve_arrangement(&parsed)?;
                        (
                            ehrhart::DeltaMethod::FormulaHbd.tag(),
                            ehrhart::delta_from_formula_bd(c, &arr, guards)?,
                        )
                    }
                    MethodArg::All => unreachable!(),
                };
                doc::DeltaAllDoc {
                    results: vec![doc::DeltaDoc {
                        method: tag.to_string(),
                        delta: doc::PolyDoc::new(&delta),
                    }],
                    agree: true,
                }
            };
            let failed = !doc.agree;
            Ok(Outcome {
                stdout: match format {
                    Format::Json => to_json(&doc) + "\n",
                    Format::Text => render::render_delta(&doc),
                },
                failed,
            })
        }
        Command::Points {
            dilate,
            interior,
            format,
        } => {
            let parsed = load_input(cli)?;
            let c = &parsed.config;
            let (count, points) = if *interior {
                if *dilate == 0 {
                    return Err(CliError::Input(
                        "interior counting needs --dilate >= 1".to_string(),
                    ));
                }
                let (arr, _) = doc::resolve_arrangement(&parsed)?;
                let census = ehrhart::interior_points(c, &arr, *dilate, &parsed.guards)?;
                (BigInt::from(census.points.len()), census.points)
            } else {
                let pts = ehrhart::dilate_points(c, *dilate, &parsed.guards)?;
                (BigInt::from(pts.len()), pts)
            };
            let point_strings: Vec<Vec<String>> = points
                .iter()
                .map(|p| p.iter().map(|e| e.to_string()).collect())
                .collect();
            #[derive(serde::Serialize)]
            struct PointsOut {
                dilate: u64,
                interior: bool,
                count: String,
                points: Vec<Vec<String>>,
            }
            let out = PointsOut {
                dilate: *dilate,
                interior: *interior,
                count: count.to_string(),
                points: point_strings,
            };
            Ok(Outcome::ok(match format {
                Format::Json => to_json(&out) + "\n",
                Format::Text => {
                    render::render_points(&out.count, Some(&out.points), *interior)
                }
            }))
        }
        Command::Volume { format } => {
            let parsed = load_input(cli)?;
            let doc = doc::volume_doc(&parsed.config, &parsed.guards)?;
            Ok(Outcome {
                failed: !doc.agree,
                stdout: match format {
                    Format::Json => to_json(&doc) + "\n",
                    Format::Text => render::render_volume(&doc),
                },
            })
        }
        Command::Verify {
            cases,
            dmax,
            nmax,
            entry_bound,
            inject_fault,
        } => {
            if cli.input.is_some() {
                let parsed = load_input(cli)?;
                let opts = SuiteOptions {
                    seed: parsed.seed,
                    guards: parsed.guards.clone(),
                    offsets: parsed.offsets.clone(),
                    ..SuiteOptions::default()
                };
                let started = Instant::now();
                let mut report = run_suite(&parsed.config, &opts)?;
                apply_fault(&mut report, *inject_fault);
                attach_timing(&mut report, cli.timings, started);
                let failed = !report.all_passed();
                Ok(Outcome {
                    stdout: render::render_checks(&report.checks),
                    failed,
                })
            } else {
                let params = SweepParams {
                    cases: cases.unwrap_or(50),
                    seed: cli.seed.unwrap_or(0),
                    dmax: dmax.unwrap_or(3),
                    nmax: nmax.unwrap_or(5),
                    entry_bound: entry_bound.unwrap_or(3),
                };
                let guards = {
                    let mut g = Guards::default();
                    if let Some(v) = cli.max_subsets {
                        g.max_subsets = v;
                    }
                    if let Some(v) = cli.max_signvectors {
                        g.max_signvectors = v;
                    }
                    if let Some(v) = cli.max_dilate_fibers {
                        g.max_dilate_fibers = v;
                    }
                    g
                };
                let mut out = String::new();
                let mut any_failed = false;
                for (idx, config) in sweep_configs(&params).iter().enumerate() {
                    let opts = SuiteOptions {
                        seed: params.seed.wrapping_add(idx as u64),
                        guards: guards.clone(),
                        ..SuiteOptions::default()
                    };
                    let started = Instant::now();
                    let mut report = run_suite(config, &opts)?;
                    apply_fault(&mut report, *inject_fault && idx == 0);
                    attach_timing(&mut report, cli.timings, started);
                    let ok = report.all_passed();
                    any_failed |= !ok;
                    let vectors: Vec<String> = config
                        .vectors()
                        .iter()
                        .map(|v| {
                            let parts: Vec<String> =
                                v.iter().map(|e| e.to_string()).collect();
                            format!("({})", parts.join(","))
                        })
                        .collect();
                    out.push_str(&format!(
                        "case {:>3}: d={} n={} {} -> {}\n",
                        idx + 1,
                        config.rank(),
                        config.len(),
                        vectors.join(" "),
                        if ok { "PASS" } else { "FAIL" }
                    ));
                    if !ok {
                        for failure in report.failures() {
                            out.push_str(&format!("    {}\n", render::render_check(failure)));
                        }
                    }
                    if cli.timings {
                        if let Some(entry) = report.checks.last() {
                            if let Some(ms) = entry.timing_ms {
                                out.push_str(&format!("    elapsed: {ms} ms\n"));
                            }
                        }
                    }
                }
                out.push_str(&format!(
                    "sweep: {} cases, {}\n",
                    params.cases,
                    if any_failed { "FAIL" } else { "all PASS" }
                ));
                Ok(Outcome {
                    stdout: out,
                    failed: any_failed,
                })
            }
        }
        Command::Report { format } => {
            let parsed = load_input(cli)?;
            let report = doc::build_report(&parsed)?;
            let failed = report.overall != "pass";
            Ok(Outcome {
                stdout: match format {
                    Format::Json => to_json(&report) + "\n",
                    Format::Text => render::render_report(&report),
                },
                failed,
            })
        }
    }
}

fn apply_fault(report: &mut CheckReport, inject: bool) {
    if inject {
        report.push(CheckEntry::fail(
            "injected fault",
            "this check always fails under --inject-fault",
            "fault injected",
        ));
    }
}

fn attach_timing(report: &mut CheckReport, timings: bool, started: Instant) {
    if timings {
        if let Some(last) = report.checks.last_mut() {
            last.timing_ms = Some(started.elapsed().as_millis() as u64);
        }
    }
}

/// Entry point used by the binary.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let (code, stdout, stderr) = execute(&cli);
    print!("{stdout}");
    eprint!("{stderr}");
    code
}
