//! Command-line front end for `olympiad-core`.
//!
//! Every command reads at most one JSON document and writes exactly one.
//! Exit codes: 0 when the checked claim holds, 1 when it fails, 2 for bad
//! input or usage.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use olympiad_core::{
    angle_concurrency as geo, cablecar, deck_checker as deck, inequality as ineq,
    pebble_partition as pebbles, seeded_rng, separating_line as sep, suites, Error,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

mod schema;

pub use schema::{schema, SCHEMA_NAMES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "olympiad",
    version,
    about = "Solvers and checkers for six olympiad problems"
)]
struct Cli {
    #[command(flatten)]
    io: IoArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct IoArgs {
    /// JSON input given directly on the command line.
    #[arg(long, global = true, conflicts_with = "input")]
    inline: Option<String>,
    /// Read the JSON input from a file. Without --inline or --input, stdin is read.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Balanced pebble partitions.
    #[command(subcommand)]
    Pebbles(PebblesCmd),
    /// Cable-car linked stations.
    #[command(subcommand)]
    Cablecar(CablecarCmd),
    /// Separating lines for point sets with minimum distance 1.
    #[command(subcommand)]
    Sepline(SeplineCmd),
    /// Decks whose pairwise means have geometric-mean witnesses.
    #[command(subcommand)]
    Deck(DeckCmd),
    /// Concurrency of two bisectors and a perpendicular bisector.
    #[command(subcommand)]
    Geometry(GeometryCmd),
    /// Exact expansions and sampling for the four-variable inequality.
    #[command(subcommand)]
    Ineq(IneqCmd),
    /// Print the input and output schema of a command, e.g. `pebbles.solve`.
    Schema { name: String },
    /// Run every property suite with a fixed seed.
    Selftest {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Use the small smoke-test budget.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Subcommand, Debug)]
enum PebblesCmd {
    Solve,
    Verify,
    Oracle,
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum CablecarCmd {
    Validate,
    Construct {
        #[arg(long)]
        n: usize,
    },
    Linked,
    Common,
    Oracle {
        #[arg(long)]
        n: usize,
    },
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum SeplineCmd {
    Solve,
    Verify,
    /// Packing bound for the points inside a rectangle.
    Lemma,
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Mode::Grid)]
        mode: Mode,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Mode {
    Grid,
    Rejection,
}

#[derive(Subcommand, Debug)]
enum DeckCmd {
    Check,
    Witness {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max: u64,
    },
}

#[derive(Subcommand, Debug)]
enum GeometryCmd {
    Verify {
        /// Degrees.
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        /// Degrees.
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    Sweep {
        #[arg(long, visible_alias = "count", default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

#[derive(Subcommand, Debug)]
enum IneqCmd {
    Expand {
        #[arg(long, value_enum)]
        side: Side,
    },
    Dominate,
    Sample {
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Side {
    Lhs,
    Rhs,
}

/// Exit code and the text destined for stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

enum Failure {
    Usage(String),
    Input(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Input(_) => EXIT_USAGE,
            Failure::Core(e) if e.is_input_error() => EXIT_USAGE,
            Failure::Core(_) => EXIT_VIOLATED,
        }
    }

    fn to_json(&self) -> Value {
        let (kind, message) = match self {
            Failure::Usage(m) => ("usage", m.clone()),
            Failure::Input(m) => ("input", m.clone()),
            Failure::Core(e) => (error_kind(e), e.to_string()),
        };
        json!({ "error": { "kind": kind, "message": message } })
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Validation(_) => "validation",
        Error::Contract(_) => "contract",
        Error::Domain(_) => "domain",
        Error::Infeasible(_) => "infeasible",
        Error::Degenerate(_) => "degenerate",
        Error::Refused { .. } => "refused",
        Error::TheoremViolation(_) => "theorem_violation",
        Error::Generation(_) => "generation",
    }
}

type Reply = Result<(i32, Value), Failure>;

fn verdict(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_VIOLATED
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("result types serialize")
}

fn render(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("values serialize");
    text.push('\n');
    text
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit code with the JSON text. Progress lines, such as search candidates,
/// go to `diag` as they are found.
pub fn run<I, T>(argv: I, diag: &mut dyn Write) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let matches = match Cli::command().try_get_matches_from(argv) {
        Ok(m) => m,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: EXIT_OK,
                    output: e.to_string(),
                };
            }
            let failure = Failure::Usage(e.render().to_string().trim_end().to_string());
            return Outcome {
                code: failure.code(),
                output: render(&failure.to_json()),
            };
        }
    };
    let cli = Cli::from_arg_matches(&matches).expect("matches come from the same command");
    let (code, value) = match dispatch(&cli, diag) {
        Ok(reply) => reply,
        Err(f) => (f.code(), f.to_json()),
    };
    let text = render(&value);
    match &cli.io.output {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome {
                code,
                output: String::new(),
            },
            Err(e) => {
                let failure = Failure::Usage(format!("cannot write {}: {e}", path.display()));
                Outcome {
                    code: failure.code(),
                    output: render(&failure.to_json()),
                }
            }
        },
        None => Outcome { code, output: text },
    }
}

fn read_input<T: DeserializeOwned>(io: &IoArgs) -> Result<T, Failure> {
    let text = match (&io.inline, &io.input) {
        (Some(s), _) => s.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if path == "." {
            Failure::Input(format!("malformed input: {inner}"))
        } else {
            Failure::Input(format!("malformed input at `{path}`: {inner}"))
        }
    })
}

fn dispatch(cli: &Cli, diag: &mut dyn Write) -> Reply {
    let io = &cli.io;
    match &cli.command {
        Command::Pebbles(cmd) => run_pebbles(cmd, io),
        Command::Cablecar(cmd) => run_cablecar(cmd, io),
        Command::Sepline(cmd) => run_sepline(cmd, io),
        Command::Deck(cmd) => run_deck(cmd, io, diag),
        Command::Geometry(cmd) => run_geometry(cmd),
        Command::Ineq(cmd) => run_ineq(cmd),
        Command::Schema { name } => schema(name).map(|s| (EXIT_OK, s)).ok_or_else(|| {
            Failure::Usage(format!(
                "unknown schema `{name}`; known: {}",
                SCHEMA_NAMES.join(", ")
            ))
        }),
        Command::Selftest { seed, quick } => {
            let budget = if *quick {
                suites::Budget::QUICK
            } else {
                suites::Budget::FULL
            };
            let reports = suites::run_all(*seed, &budget);
            let passed = reports.iter().all(|r| r.passed);
            for r in &reports {
                let _ = writeln!(
                    diag,
                    "{:<16} {}",
                    r.suite,
                    if r.passed { "pass" } else { "FAIL" }
                );
            }
            Ok((
                verdict(passed),
                json!({ "seed": seed, "budget": budget, "passed": passed, "suites": reports }),
            ))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PebbleSolution {
    #[serde(flatten)]
    coloring: pebbles::PebbleColoring,
    #[serde(flatten)]
    partition: pebbles::Partition,
}

fn run_pebbles(cmd: &PebblesCmd, io: &IoArgs) -> Reply {
    match cmd {
        PebblesCmd::Solve => {
            let coloring: pebbles::PebbleColoring = read_input(io)?;
            let partition = pebbles::partition_pebbles(&coloring)?;
            Ok((
                EXIT_OK,
                to_value(&PebbleSolution {
                    coloring,
                    partition,
                }),
            ))
        }
        PebblesCmd::Verify => {
            let s: PebbleSolution = read_input(io)?;
            let violations = pebbles::verify_partition(&s.coloring, &s.partition);
            let messages: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
            Ok((
                verdict(violations.is_empty()),
                json!({ "ok": violations.is_empty(), "violations": violations, "messages": messages }),
            ))
        }
        PebblesCmd::Oracle => {
            let coloring: pebbles::PebbleColoring = read_input(io)?;
            let partition = pebbles::brute_force_partition(&coloring)?;
            Ok((
                EXIT_OK,
                to_value(&PebbleSolution {
                    coloring,
                    partition,
                }),
            ))
        }
        PebblesCmd::Gen { n, seed } => {
            if *n == 0 {
                return Err(Failure::Usage("--n must be at least 1".into()));
            }
            let c = pebbles::random_coloring(*n, &mut seeded_rng(*seed));
            Ok((EXIT_OK, to_value(&c)))
        }
    }
}

#[derive(Deserialize)]
struct ConfigPair {
    a: cablecar::CableCarConfig,
    b: cablecar::CableCarConfig,
}

fn run_cablecar(cmd: &CablecarCmd, io: &IoArgs) -> Reply {
    match cmd {
        CablecarCmd::Validate => {
            let config: cablecar::CableCarConfig = read_input(io)?;
            let violations = cablecar::validate_config(&config);
            let messages: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
            Ok((
                verdict(violations.is_empty()),
                json!({ "valid": violations.is_empty(), "violations": violations, "messages": messages }),
            ))
        }
        CablecarCmd::Construct { n } => {
            let (a, b) = cablecar::extremal_construction(*n)?;
            Ok((EXIT_OK, json!({ "a": a, "b": b })))
        }
        CablecarCmd::Linked => {
            let config: cablecar::CableCarConfig = read_input(io)?;
            let pairs = cablecar::linked_pairs(&config)?;
            let graph = cablecar::station_graph(&config)?;
            Ok((
                EXIT_OK,
                json!({
                    "n": config.n,
                    "pairs": pairs,
                    "component_count": graph.component_count(),
                    "components": graph.components(),
                }),
            ))
        }
        CablecarCmd::Common => {
            let ConfigPair { a, b } = read_input(io)?;
            let common = cablecar::find_common_linked(&a, &b)?;
            // A miss is only a violation once both companies run enough cars.
            let threshold = a.n * a.n - a.n + 1;
            let guaranteed = a.car_count().min(b.car_count()) >= threshold;
            Ok((
                verdict(common.is_some() || !guaranteed),
                json!({ "common": common, "guaranteed": guaranteed }),
            ))
        }
        CablecarCmd::Oracle { n } => {
            let k = cablecar::brute_force_min_k(*n)?;
            Ok((verdict(k == n * n - n + 1), json!({ "n": n, "min_k": k })))
        }
        CablecarCmd::Gen { n, k, seed } => {
            let config = cablecar::random_config(*n, *k, &mut seeded_rng(*seed))?;
            Ok((EXIT_OK, to_value(&config)))
        }
    }
}

#[derive(Serialize)]
struct SeplineSolution<'a> {
    points: &'a [sep::Point],
    anchor: sep::Point,
    normal: sep::Point,
    margin: f64,
    branch: sep::Branch,
    diameter: (usize, usize, f64),
    near_count: Option<usize>,
    bound: f64,
}

#[derive(Deserialize)]
struct SeplineClaim {
    #[serde(flatten)]
    points: sep::PointSet,
    anchor: sep::Point,
    normal: sep::Point,
    #[serde(default)]
    margin: f64,
}

#[derive(Deserialize)]
struct LemmaInput {
    points: Vec<sep::Point>,
    rect: sep::Rect,
}

fn run_sepline(cmd: &SeplineCmd, io: &IoArgs) -> Reply {
    match cmd {
        SeplineCmd::Solve => {
            let ps: sep::PointSet = read_input(io)?;
            let s = sep::solve(&ps)?;
            let out = SeplineSolution {
                points: ps.points(),
                anchor: s.line.anchor,
                normal: s.line.normal,
                margin: s.line.margin,
                branch: s.branch,
                diameter: s.diameter,
                near_count: s.near_count,
                bound: sep::margin_bound(ps.len()),
            };
            Ok((EXIT_OK, to_value(&out)))
        }
        SeplineCmd::Verify => {
            let claim: SeplineClaim = read_input(io)?;
            let line = sep::SeparatingLine {
                anchor: claim.anchor,
                normal: claim.normal,
                margin: claim.margin,
            };
            let report = sep::verify_separation(claim.points.points(), &line);
            Ok((verdict(report.valid), to_value(&report)))
        }
        SeplineCmd::Lemma => {
            let input: LemmaInput = read_input(io)?;
            let report = sep::packing_count_check(&input.points, &input.rect)?;
            Ok((verdict(report.holds), to_value(&report)))
        }
        SeplineCmd::Gen { n, seed, mode } => {
            let mode = match mode {
                Mode::Grid => sep::GeneratorMode::JitteredGrid,
                Mode::Rejection => sep::GeneratorMode::Rejection,
            };
            let ps = sep::generate_min_dist_points(*n, *seed, mode)?;
            Ok((EXIT_OK, to_value(&ps)))
        }
    }
}

fn run_deck(cmd: &DeckCmd, io: &IoArgs, diag: &mut dyn Write) -> Reply {
    match cmd {
        DeckCmd::Check => {
            let d: deck::Deck = read_input(io)?;
            let report = deck::deck_satisfies_property(&d);
            let mut value = to_value(&report);
            value["values"] = to_value(&d)["values"].take();
            Ok((verdict(report.satisfies), value))
        }
        DeckCmd::Witness { i, j } => {
            let d: deck::Deck = read_input(io)?;
            let witness = deck::gm_witness(&d, *i, *j)?;
            Ok((
                verdict(witness.is_some()),
                json!({ "pair": [i, j], "witness": witness }),
            ))
        }
        DeckCmd::Search { n, max } => {
            let candidates = deck::search_nonconstant_with(*n, *max, |found: &deck::Deck| {
                let line = serde_json::to_string(found).expect("decks serialize");
                let _ = writeln!(diag, "{line}");
            })?;
            Ok((
                verdict(candidates.is_empty()),
                json!({ "n": n, "max_value": max, "candidates": candidates }),
            ))
        }
    }
}

fn run_geometry(cmd: &GeometryCmd) -> Reply {
    match cmd {
        GeometryCmd::Verify { alpha, beta, tol } => {
            let config = geo::construct_configuration(alpha.to_radians(), beta.to_radians())?;
            let check = geo::check_theorem(&config, *tol)?;
            Ok((
                verdict(check.holds),
                json!({ "check": check, "configuration": config }),
            ))
        }
        GeometryCmd::Sweep { samples, seed, tol } => {
            let mut rng = seeded_rng(*seed);
            let mut rows = Vec::with_capacity(*samples);
            let mut all = true;
            for _ in 0..*samples {
                let config = geo::sample_feasible(&mut rng);
                let check = geo::check_theorem(&config, *tol)?;
                all &= check.holds;
                rows.push(json!({
                    "alpha": config.alpha.to_degrees(),
                    "beta": config.beta.to_degrees(),
                    "residual": check.residual,
                }));
            }
            Ok((verdict(all), Value::Array(rows)))
        }
    }
}

fn run_ineq(cmd: &IneqCmd) -> Reply {
    match cmd {
        IneqCmd::Expand { side } => {
            let poly = match side {
                Side::Lhs => ineq::expand_lhs(),
                Side::Rhs => ineq::expand_rhs(),
            };
            Ok((EXIT_OK, to_value(&poly.table())))
        }
        IneqCmd::Dominate => {
            let report = ineq::termwise_dominates(&ineq::expand_lhs(), &ineq::expand_rhs());
            Ok((verdict(report.dominated), to_value(&report)))
        }
        IneqCmd::Sample { count, seed } => {
            let mut rng = seeded_rng(*seed);
            let (mut max_lhs, mut min_gap) = (0.0f64, f64::INFINITY);
            let mut below_one = 0usize;
            for _ in 0..*count {
                let p = ineq::sample_point(&mut rng);
                let v = ineq::lhs_value(&p);
                max_lhs = max_lhs.max(v);
                min_gap = min_gap.min(ineq::amgm_gap(&p));
                below_one += usize::from(v < 1.0);
            }
            let ok = below_one == *count && (*count == 0 || min_gap >= -1e-14);
            Ok((
                verdict(ok),
                json!({
                    "count": count,
                    "below_one": below_one,
                    "max_lhs": if *count == 0 { Value::Null } else { json!(max_lhs) },
                    "min_amgm_gap": if *count == 0 { Value::Null } else { json!(min_gap) },
                }),
            ))
        }
    }
}
