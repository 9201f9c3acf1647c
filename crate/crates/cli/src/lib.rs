//! Command-line front end for the `cpath` library.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cpath::groups::{self, normalize_path, parse_word, Surface};
use cpath::lambda::{self, parse_lambda, DEFAULT_FUEL};
use cpath::path::{format_path, parse_path, PathTerm};
use cpath::trs::{default_step_limit, rule_table, rules_doc, RewriteTrace, Rewriter, RuleId, Strategy, TraceDocument};
use cpath::Error;

#[derive(Parser, Debug)]
#[command(name = "cpath", version, about = "Normalize computational paths and compute surface fundamental groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rewrite a path term to normal form.
    Normalize {
        /// Path term, e.g. "sigma(sigma(t[x,y]))".
        term: String,
        #[command(flatten)]
        trace: TraceFlags,
        #[arg(long, value_enum, default_value_t = StrategyArg::Innermost)]
        strategy: StrategyArg,
        /// Seed for `--strategy random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum number of steps (default 10 x size^2).
        #[arg(long)]
        step_limit: Option<usize>,
    },
    /// Decide rw-equality of two paths with the same endpoints.
    Equal { term1: String, term2: String },
    /// Compute the fundamental-group element of a loop word.
    Pi1 {
        #[arg(long, value_enum)]
        surface: SurfaceArg,
        /// Letters `g`, `g^-1` or `g^k`, separated by spaces.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[command(flatten)]
        trace: TraceFlags,
    },
    /// Reduce a lambda term and print the path of the reduction.
    LambdaPath {
        #[arg(long)]
        term: String,
        #[arg(long, value_enum, default_value_t = LambdaStrategyArg::EtaFirst)]
        strategy: LambdaStrategyArg,
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: usize,
    },
    /// Print the rewrite rules.
    Rules {
        #[arg(long, conflicts_with = "show")]
        list: bool,
        /// Rule label such as `tt` or `co`.
        #[arg(long)]
        show: Option<String>,
    },
}

#[derive(Args, Debug)]
struct TraceFlags {
    /// One line per rewrite step before the result.
    #[arg(long)]
    trace: bool,
    /// The whole run as one JSON document.
    #[arg(long, conflicts_with_all = ["json_lines", "trace"])]
    json: bool,
    /// One JSON record per rewrite step.
    #[arg(long, conflicts_with = "trace")]
    json_lines: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Innermost,
    Outermost,
    Random,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SurfaceArg {
    Circle,
    Cylinder,
    Moebius,
    Torus,
    #[value(name = "proj_plane", alias = "proj-plane")]
    ProjPlane,
}

impl SurfaceArg {
    fn surface(self) -> Surface {
        match self {
            SurfaceArg::Circle => Surface::Circle,
            SurfaceArg::Cylinder => Surface::Cylinder,
            SurfaceArg::Moebius => Surface::Moebius,
            SurfaceArg::Torus => Surface::Torus,
            SurfaceArg::ProjPlane => Surface::ProjPlane,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LambdaStrategyArg {
    #[value(alias = "leftmost_outermost")]
    LeftmostOutermost,
    #[value(alias = "leftmost_innermost")]
    LeftmostInnermost,
    #[value(alias = "eta_first")]
    EtaFirst,
}

/// Exit status of one invocation.
pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. } | Error::UnknownRule(_) | Error::UnknownSurface(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit status. Output goes to `out` only when the command succeeds.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let msg = e.to_string();
                    let first = msg.lines().next().unwrap_or("usage error");
                    let _ = writeln!(err, "{first}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}

fn execute(command: Command) -> Result<String, Failure> {
    match command {
        Command::Normalize { term, trace, strategy, seed, step_limit } => {
            let p = parse_path(&term)?;
            let strategy = match strategy {
                StrategyArg::Innermost => Strategy::LeftmostInnermost,
                StrategyArg::Outermost => Strategy::LeftmostOutermost,
                StrategyArg::Random => Strategy::SeededRandom(seed),
            };
            let limit = step_limit.unwrap_or_else(|| default_step_limit(&p));
            let (nf, steps) = Rewriter::core().normalize_with(&p, strategy, limit)?;
            Ok(render_run(&trace, &p, &nf, &steps, format_path(&nf), None))
        }
        Command::Equal { term1, term2 } => {
            let (p, q) = (parse_path(&term1)?, parse_path(&term2)?);
            let same = Rewriter::core().rw_equal(&p, &q)?;
            Ok(if same { "equal\n" } else { "not-equal\n" }.to_string())
        }
        Command::Pi1 { surface, word, trace } => {
            let s = surface.surface().presentation();
            let w = parse_word(&word)?;
            let p = s.word_to_path(&w)?;
            let (element, nf, steps) = normalize_path(&s, &p)?;
            Ok(render_run(&trace, &p, &nf, &steps, element.to_string(), Some(element)))
        }
        Command::LambdaPath { term, strategy, fuel } => {
            let t = parse_lambda(&term)?;
            let strategy = match strategy {
                LambdaStrategyArg::LeftmostOutermost => lambda::Strategy::LeftmostOutermost,
                LambdaStrategyArg::LeftmostInnermost => lambda::Strategy::LeftmostInnermost,
                LambdaStrategyArg::EtaFirst => lambda::Strategy::EtaFirst,
            };
            let (nf, path) = lambda::path_to_normal_form(&t, strategy, fuel)?;
            Ok(format!("{nf}\n{}\n", format_path(&path)))
        }
        Command::Rules { list, show } => match show {
            Some(label) => show_rule(&label),
            None if list => Ok(list_rules()),
            None => Err(Failure::Usage("rules needs --list or --show LABEL".into())),
        },
    }
}

fn render_run(
    flags: &TraceFlags,
    start: &PathTerm,
    nf: &PathTerm,
    trace: &RewriteTrace,
    result: String,
    element: Option<groups::CanonicalElement>,
) -> String {
    let doc = TraceDocument::new(start, nf, trace);
    if flags.json {
        let mut v = serde_json::to_value(&doc).expect("trace documents serialize");
        if let Some(e) = element {
            v["element"] = json!(e.to_string());
        }
        return serde_json::to_string_pretty(&v).expect("json values serialize") + "\n";
    }
    let mut s = String::new();
    if flags.json_lines {
        for r in &doc.steps {
            s += &serde_json::to_string(r).expect("records serialize");
            s.push('\n');
        }
        return s;
    }
    if flags.trace {
        for r in &doc.steps {
            s += &format!(
                "step {}: {} at {}: {} → {}\n",
                r.index,
                r.rule,
                cpath::Position(r.position.clone()),
                r.before,
                r.after
            );
        }
    }
    s + &result + "\n"
}

fn list_rules() -> String {
    let mut s = String::new();
    for r in rule_table() {
        s += &format!("{r}\n");
    }
    for r in groups::extension_rules() {
        s += &format!("{r}\n");
    }
    s
}

fn show_rule(label: &str) -> Result<String, Failure> {
    let id = RuleId::from_label(label)?;
    if id.index().is_some() {
        return Ok(rules_doc(label)? + "\n");
    }
    let mut s = String::new();
    for r in groups::extension_rules().into_iter().filter(|r| r.id == id) {
        s += &format!("{r}\n");
    }
    Ok(s)
}
