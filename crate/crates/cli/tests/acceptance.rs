//! Acceptance criteria 1 through 8. Prints one line per criterion and exits
//! non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use olympiad_core::suites::{self, Budget, SuiteReport};

const SEED: u64 = 42;

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> Result<String, String>,
}

fn suite_result(report: SuiteReport, required: &[&str]) -> Result<String, String> {
    for name in required {
        if !report.checks.iter().any(|c| c.name.starts_with(name)) {
            return Err(format!("check `{name}` missing from {}", report.suite));
        }
    }
    match report.failures().next() {
        Some(c) => Err(format!("{}: {}", c.name, c.detail)),
        None => Ok(format!("{} checks", report.checks.len())),
    }
}

fn pebbles() -> Result<String, String> {
    let b = Budget::FULL;
    if b.pebble_colorings < 10_000 {
        return Err("budget below 10,000 colorings".into());
    }
    suite_result(
        suites::pebble_suite(SEED, &b),
        &["exhaustive n <= 2", "random n = 3", "random n = 4"],
    )
}

fn cablecar() -> Result<String, String> {
    let b = Budget::FULL;
    if b.extremal_max_n < 30 || b.cablecar_pairs < 1_000 {
        return Err("budget below the required sizes".into());
    }
    suite_result(
        suites::cablecar_suite(SEED, &b),
        &[
            "brute-force min k for n = 2",
            "extremal construction n = 2..=30",
            "common link at k = 3, n = 2",
            "common link at k = 7, n = 3",
        ],
    )
}

fn lemma() -> Result<String, String> {
    suite_result(
        suites::lemma_suite(SEED, &Budget::FULL),
        &["linked == same component", "component count == n^2 - k"],
    )
}

fn sepline() -> Result<String, String> {
    let b = Budget::FULL;
    if b.point_sets < 1_000 || b.max_points < 500 {
        return Err("budget below the required sizes".into());
    }
    suite_result(
        suites::separating_line_suite(SEED, &b),
        &[
            "margin >= 0.01 n^(-1/3)",
            "wide-gap margin >= n^(-1/3)/2",
            "packing count <= 20ab",
        ],
    )
}

fn deck() -> Result<String, String> {
    suite_result(
        suites::deck_suite(SEED, &Budget::FULL),
        &[
            "no non-constant deck, n = 2, max = 12",
            "no non-constant deck, n = 3, max = 12",
            "no non-constant deck, n = 4, max = 8",
            "constant decks n = 2..=6",
            "scale invariance",
        ],
    )
}

fn geometry() -> Result<String, String> {
    suite_result(
        suites::geometry_suite(SEED, &Budget::FULL),
        &[
            "concurrency, cyclic BOPC, BOP = 2 BAP within 1e-9",
            "perturbing D by 1e-3 gives residual > 1e-5",
        ],
    )
}

fn inequality() -> Result<String, String> {
    let b = Budget::FULL;
    if b.simplex_samples < 1_000_000 {
        return Err("budget below 10^6 samples".into());
    }
    suite_result(
        suites::inequality_suite(SEED, &b),
        &[
            "product expansion matches",
            "cube expansion matches",
            "term-wise domination, strict at u^3",
            "lhs < 1",
            "AM-GM gap >= -1e-14",
        ],
    )
}

fn selftest() -> Result<String, String> {
    let argv = ["olympiad", "selftest", "--seed", "42"];
    let first = olympiad_cli::run(argv, &mut std::io::sink());
    let second = olympiad_cli::run(argv, &mut std::io::sink());
    if first.code != 0 {
        return Err(format!("exit {}", first.code));
    }
    if first != second {
        return Err("runs differ".into());
    }
    let doc: serde_json::Value = serde_json::from_str(&first.output).map_err(|e| e.to_string())?;
    let suites = doc["suites"].as_array().map_or(0, Vec::len);
    if suites != 7 || doc["passed"] != true {
        return Err(format!("{suites} suites, passed = {}", doc["passed"]));
    }
    Ok(format!("{} bytes, identical twice", first.output.len()))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            title: "pebble partitions",
            limit: Duration::from_secs(60),
            run: pebbles,
        },
        Criterion {
            id: 2,
            title: "cable-car answer",
            limit: Duration::from_secs(120),
            run: cablecar,
        },
        Criterion {
            id: 3,
            title: "linked pairs = components",
            limit: Duration::from_secs(120),
            run: lemma,
        },
        Criterion {
            id: 4,
            title: "separating line",
            limit: Duration::from_secs(120),
            run: sepline,
        },
        Criterion {
            id: 5,
            title: "deck property",
            limit: Duration::from_secs(300),
            run: deck,
        },
        Criterion {
            id: 6,
            title: "concurrency",
            limit: Duration::from_secs(30),
            run: geometry,
        },
        Criterion {
            id: 7,
            title: "inequality exactness",
            limit: Duration::from_secs(60),
            run: inequality,
        },
        Criterion {
            id: 8,
            title: "selftest determinism",
            limit: Duration::from_secs(600),
            run: selftest,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > c.limit => {
                Err(format!("{detail}; took {elapsed:.1?}, limit {:?}", c.limit))
            }
            other => other,
        };
        match result {
            Ok(detail) => println!(
                "criterion {} PASS  {:<26} {detail} ({elapsed:.2?})",
                c.id, c.title
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL  {:<26} {why}", c.id, c.title);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
