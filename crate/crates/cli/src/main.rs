mod report;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use braidc_core::braid::{distance_unchecked, sigma};
use braidc_core::model::{verify_hexagon, verify_pentagon, Charge, FSymbolTable, RSymbolTable};
use braidc_core::render::{diagram, Format};
use braidc_core::search::{search, target, Method, TARGET_NAMES};
use braidc_core::{BraidWord, SearchBudget, SearchError, TargetGate, Unitary2, WordOrder};
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::report::{CompileReport, EvaluateReport, ModelCheckReport};

/// Residual above which `model-check` reports a violation.
const MODEL_THRESHOLD: f64 = 1e-10;

#[derive(Parser)]
#[command(name = "braidc", version, about = "Compile single-qubit gates into Fibonacci anyon weaves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search for the weave closest to a target gate.
    Compile {
        /// Gate name or path to a JSON 2x2 matrix of [re, im] pairs.
        #[arg(long)]
        target: String,
        /// Maximum number of elementary crossings.
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(2..))]
        max_len: u32,
        /// Maximum number of power slots (default: max-len / 2).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_slots: Option<u32>,
        #[arg(long, value_enum, default_value_t = MethodArg::Brute)]
        method: MethodArg,
        #[arg(long, env = "BRAIDC_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
        threads: Option<u32>,
        #[arg(long, value_enum, default_value_t = OutputArg::Text)]
        output: OutputArg,
        /// Accepted for compatibility; every search is deterministic.
        #[arg(long)]
        seedless: bool,
    },
    /// Evaluate a braid word and optionally its distance to a target.
    Evaluate {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        target: Option<String>,
        #[arg(long, value_enum, default_value_t = OrderArg::Temporal)]
        order: OrderArg,
        #[arg(long, value_enum, default_value_t = OutputArg::Text)]
        output: OutputArg,
    },
    /// Check the pentagon and hexagon identities and the braid relations.
    ModelCheck {
        #[arg(long, value_enum, default_value_t = OutputArg::Text)]
        output: OutputArg,
        /// Add this amount to (F^1_111)^0_0 before checking.
        #[arg(long, hide = true, allow_hyphen_values = true)]
        perturb_f: Option<f64>,
    },
    /// Draw the world lines of a braid word.
    Diagram {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Ascii)]
        format: FormatArg,
        #[arg(long, value_enum, default_value_t = OrderArg::Temporal)]
        order: OrderArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Bidir,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Temporal,
    Operator,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Svg,
}

/// A failed command and its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl fmt::Display) -> Self {
        Self { code: 2, message: message.to_string() }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        let code = match e {
            SearchError::NonUnitaryTarget { .. } => 3,
            SearchError::Io(_) => 4,
            SearchError::IndexTooLarge { .. } | SearchError::ThreadPool(_) => 1,
            _ => 2,
        };
        Self { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compile { target, max_len, max_slots, method, threads, output, seedless: _ } => {
            compile(&target, max_len, max_slots, method, threads, output)
        }
        Command::Evaluate { word, target, order, output } => evaluate(&word, target.as_deref(), order, output),
        Command::ModelCheck { output, perturb_f } => model_check(output, perturb_f),
        Command::Diagram { word, format, order, out } => draw(&word, format, order, out.as_deref()),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("braidc: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn resolve_target(spec: &str) -> Result<TargetGate, Failure> {
    if TARGET_NAMES.contains(&spec.to_ascii_lowercase().as_str()) {
        return Ok(target(spec)?);
    }
    let path = Path::new(spec);
    if path.exists() {
        return Ok(TargetGate::from_file(path)?);
    }
    Err(Failure::usage(format!(
        "unknown target {spec:?}: not one of {} and no such file",
        TARGET_NAMES.join(", ")
    )))
}

fn parse_word(text: &str, order: OrderArg) -> Result<BraidWord, Failure> {
    let order = match order {
        OrderArg::Temporal => WordOrder::Temporal,
        OrderArg::Operator => WordOrder::Operator,
    };
    BraidWord::parse_with_order(text, order).map_err(Failure::usage)
}

fn to_json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn compile(
    target_spec: &str,
    max_len: u32,
    max_slots: Option<u32>,
    method: MethodArg,
    threads: Option<u32>,
    output: OutputArg,
) -> Result<String, Failure> {
    let target = resolve_target(target_spec)?;
    let mut budget = SearchBudget::new(max_len).with_method(match method {
        MethodArg::Brute => Method::Brute,
        MethodArg::Bidir => Method::Bidirectional,
    });
    if let Some(slots) = max_slots {
        budget = budget.with_max_slots(slots);
    }
    if let Some(n) = threads {
        budget = budget.with_threads(n as usize);
    }
    let result = search(&target, &budget)?;
    let report = CompileReport::new(&target, &budget, &result);
    Ok(match output {
        OutputArg::Json => to_json(&report),
        OutputArg::Text => report.to_text(),
    })
}

fn evaluate(word: &str, target: Option<&str>, order: OrderArg, output: OutputArg) -> Result<String, Failure> {
    let word = parse_word(word, order)?;
    let target = target.map(resolve_target).transpose()?;
    let matrix = word.evaluate();
    let scored = target.as_ref().map(|t| (t, distance_unchecked(&matrix, &t.matrix)));
    let report = EvaluateReport::new(&word, &matrix, scored);
    Ok(match output {
        OutputArg::Json => to_json(&report),
        OutputArg::Text => report.to_text(&matrix),
    })
}

fn model_check(output: OutputArg, perturb_f: Option<f64>) -> Result<String, Failure> {
    let mut f = FSymbolTable::fibonacci();
    if let Some(delta) = perturb_f {
        let t = Charge::Tau;
        let v = Charge::Vacuum;
        let old = f.get(t, t, t, t, v, v);
        f.set([t, t, t, t, v, v], old + Complex64::new(delta, 0.0));
    }
    let r = RSymbolTable::fibonacci();
    let (s1, s2) = (sigma(1).expect("generator 1"), sigma(2).expect("generator 2"));
    let period = s1
        .pow(10)
        .max_abs_diff(&Unitary2::IDENTITY)
        .max(s2.pow(10).max_abs_diff(&Unitary2::IDENTITY));
    let fm = f.matrix(Charge::Tau, Charge::Tau, Charge::Tau, Charge::Tau);
    let fu = Unitary2::from_entries_unchecked(fm);
    let involution = (fu * fu).max_abs_diff(&Unitary2::IDENTITY);

    let mut report = ModelCheckReport {
        schema_version: report::SCHEMA_VERSION,
        tool: report::TOOL,
        version: report::VERSION,
        pentagon_residual: verify_pentagon(&f),
        hexagon_residual: verify_hexagon(&f, &r),
        sigma_period_residual: period,
        braid_relation_residual: (s1 * s2 * s1).max_abs_diff(&(s2 * s1 * s2)),
        f_involution_residual: involution,
        threshold: MODEL_THRESHOLD,
        ok: false,
    };
    report.ok = [
        report.pentagon_residual,
        report.hexagon_residual,
        report.sigma_period_residual,
        report.braid_relation_residual,
        report.f_involution_residual,
    ]
    .iter()
    .all(|&r| r < MODEL_THRESHOLD);

    let text = match output {
        OutputArg::Json => to_json(&report),
        OutputArg::Text => report.to_text(),
    };
    if report.ok {
        Ok(text)
    } else {
        print!("{text}");
        Err(Failure { code: 1, message: "consistency identities violated".into() })
    }
}

fn draw(word: &str, format: FormatArg, order: OrderArg, out: Option<&Path>) -> Result<String, Failure> {
    let word = parse_word(word, order)?;
    let doc = diagram(
        &word,
        match format {
            FormatArg::Ascii => Format::Ascii,
            FormatArg::Svg => Format::Svg,
        },
    );
    match out {
        None => Ok(doc),
        Some(path) => {
            std::fs::write(path, doc).map_err(|e| Failure {
                code: 4,
                message: format!("cannot write {}: {e}", path.display()),
            })?;
            Ok(String::new())
        }
    }
}
