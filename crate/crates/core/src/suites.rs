//! Seeded property suites, one per problem, producing deterministic reports.
//!
//! Reports contain no timing data, so equal seeds and budgets give equal
//! reports.

use std::collections::BTreeSet;
use std::f64::consts::FRAC_PI_4;

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{
    angle_concurrency as geo, cablecar, deck_checker as deck, inequality as ineq,
    pebble_partition as pebbles, seeded_rng, separating_line as sep,
};

/// Sample counts for every suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Random colorings per `n ∈ {3, 4}`.
    pub pebble_colorings: usize,
    /// Random config pairs per `n ∈ {2, 3}`.
    pub cablecar_pairs: usize,
    pub extremal_max_n: usize,
    pub lemma_configs: usize,
    pub point_sets: usize,
    pub max_points: usize,
    pub deck_pairs: usize,
    pub geometry_samples: usize,
    pub simplex_samples: usize,
}

impl Budget {
    /// The counts required for acceptance.
    pub const FULL: Budget = Budget {
        pebble_colorings: 10_000,
        cablecar_pairs: 1_000,
        extremal_max_n: 30,
        lemma_configs: 1_000,
        point_sets: 1_000,
        max_points: 500,
        deck_pairs: 1_000,
        geometry_samples: 1_000,
        simplex_samples: 1_000_000,
    };

    /// A fast smoke-test budget.
    pub const QUICK: Budget = Budget {
        pebble_colorings: 200,
        cablecar_pairs: 50,
        extremal_max_n: 8,
        lemma_configs: 50,
        point_sets: 30,
        max_points: 120,
        deck_pairs: 50,
        geometry_samples: 50,
        simplex_samples: 10_000,
    };
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.into(),
            passed: true,
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.passed &= passed;
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Counts failures, keeping the first message.
#[derive(Default)]
struct Tally {
    total: usize,
    failed: usize,
    first: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if !ok {
            self.failed += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    fn ok(&self) -> bool {
        self.failed == 0
    }

    fn detail(&self) -> String {
        match &self.first {
            None => format!("{} cases passed", self.total),
            Some(msg) => format!(
                "{} of {} cases failed; first: {msg}",
                self.failed, self.total
            ),
        }
    }
}

fn sub_seed(seed: u64, stream: u64) -> u64 {
    seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn check_coloring(c: &pebbles::PebbleColoring, with_oracle: bool) -> Result<(), String> {
    let graph = pebbles::build_pair_multigraph(c);
    if let Some(v) = (0..c.n()).find(|&v| graph.degree(v) != 4) {
        return Err(format!("color {v} has degree {}", graph.degree(v)));
    }
    for component in graph.components() {
        let circuit = pebbles::eulerian_circuit(&graph, &component).map_err(|e| e.to_string())?;
        let ids: Vec<usize> = (0..graph.edges.len())
            .filter(|&id| component.contains(&graph.edges[id].u))
            .collect();
        if circuit.len() % 2 != 0 || !pebbles::is_eulerian_circuit(&graph, &ids, &circuit) {
            return Err(format!(
                "bad circuit {circuit:?} on component {component:?}"
            ));
        }
    }
    let partition = pebbles::partition_pebbles(c).map_err(|e| e.to_string())?;
    let violations = pebbles::verify_partition(c, &partition);
    if !violations.is_empty() {
        return Err(format!("{:?}: {}", c.color_of(), violations[0]));
    }
    // Every pair (w, 4n+1−w) stays in one pile.
    let total = 4 * c.n() + 1;
    if partition
        .pile_a
        .iter()
        .any(|&w| !partition.pile_a.contains(&(total - w)))
    {
        return Err(format!("{:?}: a weight pair was split", c.color_of()));
    }
    if with_oracle {
        let oracle = pebbles::brute_force_partition(c).map_err(|e| e.to_string())?;
        if !pebbles::verify_partition(c, &oracle).is_empty() {
            return Err(format!(
                "{:?}: oracle returned an invalid partition",
                c.color_of()
            ));
        }
    }
    Ok(())
}

/// Pebble partitions: exhaustive for `n ≤ 2`, seeded for `n ∈ {3, 4}`,
/// cross-checked against the brute-force oracle.
pub fn pebble_suite(seed: u64, budget: &Budget) -> SuiteReport {
    let mut report = SuiteReport::new("pebbles");
    let mut exhaustive = Tally::default();
    for n in 1..=2 {
        for c in pebbles::enumerate_colorings(n) {
            let outcome = check_coloring(&c, true);
            exhaustive.record(outcome.is_ok(), || outcome.unwrap_err());
        }
    }
    report.check("exhaustive n <= 2", exhaustive.ok(), exhaustive.detail());

    let mut rng = seeded_rng(sub_seed(seed, 1));
    for n in [3, 4] {
        let mut tally = Tally::default();
        for _ in 0..budget.pebble_colorings {
            let c = pebbles::random_coloring(n, &mut rng);
            let outcome = check_coloring(&c, true);
            tally.record(outcome.is_ok(), || outcome.unwrap_err());
        }
        report.check(
            &format!("random n = {n} with oracle"),
            tally.ok(),
            tally.detail(),
        );
    }
    report
}

/// Minimum `k` by brute force, extremal disjointness and the guarantee at
/// `k = n² − n + 1`.
pub fn cablecar_suite(seed: u64, budget: &Budget) -> SuiteReport {
    let mut report = SuiteReport::new("cablecar");
    match cablecar::brute_force_min_k(2) {
        Ok(k) => report.check(
            "brute-force min k for n = 2",
            k == 3,
            format!("min k = {k}"),
        ),
        Err(e) => report.check("brute-force min k for n = 2", false, e.to_string()),
    }

    let mut extremal = Tally::default();
    for n in 2..=budget.extremal_max_n {
        let outcome = (|| -> crate::Result<bool> {
            let (a, b) = cablecar::extremal_construction(n)?;
            let disjoint = cablecar::linked_pairs(&a)?.is_disjoint(&cablecar::linked_pairs(&b)?);
            let none = cablecar::find_common_linked(&a, &b)?.is_none();
            Ok(disjoint && none && a.car_count() == n * n - n && b.car_count() == n * n - n)
        })();
        extremal.record(matches!(outcome, Ok(true)), || {
            format!("n = {n}: {outcome:?}")
        });
    }
    report.check(
        &format!("extremal construction n = 2..={}", budget.extremal_max_n),
        extremal.ok(),
        extremal.detail(),
    );

    let mut rng = seeded_rng(sub_seed(seed, 2));
    for n in [2, 3] {
        let k = n * n - n + 1;
        let mut tally = Tally::default();
        for _ in 0..budget.cablecar_pairs {
            let outcome = (|| -> crate::Result<Option<String>> {
                let a = cablecar::random_config(n, k, &mut rng)?;
                let b = cablecar::random_config(n, k, &mut rng)?;
                let Some(pair) = cablecar::find_common_linked(&a, &b)? else {
                    return Ok(Some(format!("no common pair for {a:?} / {b:?}")));
                };
                let both = cablecar::linked_pairs(&a)?.contains(&pair)
                    && cablecar::linked_pairs(&b)?.contains(&pair);
                Ok((!both).then(|| format!("{pair:?} is not linked by both companies")))
            })();
            let ok = matches!(outcome, Ok(None));
            tally.record(ok, || format!("{outcome:?}"));
        }
        report.check(
            &format!("common link at k = {k}, n = {n}"),
            tally.ok(),
            tally.detail(),
        );
    }
    report
}

/// Linked pairs versus same-component pairs, component counts and monotone paths.
pub fn lemma_suite(seed: u64, budget: &Budget) -> SuiteReport {
    let mut report = SuiteReport::new("cablecar-lemma");
    let mut rng = seeded_rng(sub_seed(seed, 3));
    let (mut equal, mut count, mut monotone) =
        (Tally::default(), Tally::default(), Tally::default());
    for _ in 0..budget.lemma_configs {
        let n = rng.random_range(2..=5usize);
        let k = rng.random_range(1..n * n);
        let config = match cablecar::random_config(n, k, &mut rng) {
            Ok(c) => c,
            Err(e) => {
                equal.record(false, || e.to_string());
                continue;
            }
        };
        let (linked, graph) = match (
            cablecar::linked_pairs(&config),
            cablecar::station_graph(&config),
        ) {
            (Ok(l), Ok(g)) => (l, g),
            (l, g) => {
                equal.record(false, || format!("{config:?}: {l:?} {g:?}"));
                continue;
            }
        };
        let same = graph.same_component_pairs();
        equal.record(linked == same, || format!("{config:?}"));
        let components = graph.component_count();
        count.record(components == n * n - k, || {
            format!(
                "{config:?}: {components} components, expected {}",
                n * n - k
            )
        });
        let pair: BTreeSet<_> = linked.iter().take(8).copied().collect();
        for (lo, hi) in pair {
            let path = graph.path(lo, hi);
            let ok = path
                .as_ref()
                .is_some_and(|p| p.windows(2).all(|w| w[0] < w[1]));
            monotone.record(ok, || format!("{config:?}: path {lo}->{hi} = {path:?}"));
        }
    }
    report.check("linked == same component", equal.ok(), equal.detail());
    report.check("component count == n^2 - k", count.ok(), count.detail());
    report.check(
        "paths increase monotonically",
        monotone.ok(),
        monotone.detail(),
    );
    report
}

/// Separating-line margins on generated point sets, plus the packing bound.
pub fn separating_line_suite(seed: u64, budget: &Budget) -> SuiteReport {
    let mut report = SuiteReport::new("sepline");
    let mut rng = seeded_rng(sub_seed(seed, 4));
    let (mut margin, mut wide, mut near, mut coords, mut chord, mut packing) = (
        Tally::default(),
        Tally::default(),
        Tally::default(),
        Tally::default(),
        Tally::default(),
        Tally::default(),
    );
    let mut branches = [0usize; 3];
    let mut worst_ratio = f64::INFINITY;
    for i in 0..budget.point_sets {
        let n = rng.random_range(2..=budget.max_points);
        let mode = if i % 2 == 0 {
            sep::GeneratorMode::JitteredGrid
        } else {
            sep::GeneratorMode::Rejection
        };
        let set_seed = rng.random::<u64>();
        let ps = match sep::generate_min_dist_points(n, set_seed, mode) {
            Ok(ps) => ps,
            Err(e) => {
                margin.record(false, || format!("generation n = {n} {mode:?}: {e}"));
                continue;
            }
        };
        let solution = match sep::solve(&ps) {
            Ok(s) => s,
            Err(e) => {
                margin.record(false, || format!("solve n = {n} seed {set_seed}: {e}"));
                continue;
            }
        };
        let verdict = sep::verify_separation(ps.points(), &solution.line);
        margin.record(verdict.valid, || {
            format!("n = {n} seed {set_seed} {mode:?}: {verdict:?}")
        });
        worst_ratio = worst_ratio.min(verdict.margin / verdict.bound);

        let cube_root = (n as f64).cbrt();
        match solution.branch {
            sep::Branch::WideGap { .. } => {
                branches[0] += 1;
                wide.record(verdict.margin >= 0.5 / cube_root, || {
                    format!("n = {n} seed {set_seed}: margin {}", verdict.margin)
                });
            }
            sep::Branch::NearEndAlone | sep::Branch::NearEndGap { .. } => {
                branches[if solution.branch == sep::Branch::NearEndAlone {
                    1
                } else {
                    2
                }] += 1;
                let count = solution.near_count.unwrap_or(usize::MAX);
                near.record((count as f64) < 20.0 * cube_root, || {
                    format!("n = {n} seed {set_seed}: {count} near points")
                });
            }
        }

        let (ia, ib, r) = solution.diameter;
        let (a, b) = (ps.points()[ia], ps.points()[ib]);
        let axis = [(b[0] - a[0]) / r, (b[1] - a[1]) / r];
        let tol = 1e-9 * r.max(1.0);
        let in_range = ps.points().iter().all(|p| {
            let c = (p[0] - a[0]) * axis[0] + (p[1] - a[1]) * axis[1];
            c >= -tol && c <= r + tol
        });
        coords.record(in_range, || format!("n = {n} seed {set_seed}"));
        if r >= 1.0 {
            let xy = sep::chord_length(r);
            let ok = (xy - 2.0 * (r - 0.25).sqrt()).abs() <= 1e-9 * xy && xy < 2.0 * r.sqrt();
            chord.record(ok, || format!("r = {r}: |XY| = {xy}"));
        }

        let pts = ps.points();
        let (min_x, max_x) = pts
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
                (lo.min(p[0]), hi.max(p[0]))
            });
        let (min_y, max_y) = pts
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
                (lo.min(p[1]), hi.max(p[1]))
            });
        let rect = sep::Rect {
            x: rng.random_range(min_x - 1.0..=max_x),
            y: rng.random_range(min_y - 1.0..=max_y),
            width: rng.random_range(0.5..=(max_x - min_x + 1.0).max(0.5)),
            height: rng.random_range(0.5..=(max_y - min_y + 1.0).max(0.5)),
        };
        match sep::packing_count_check(pts, &rect) {
            Ok(p) => packing.record(p.holds && (p.count as f64) <= p.bound, || {
                format!("{rect:?}: {p:?}")
            }),
            Err(e) => packing.record(false, || e.to_string()),
        }
    }
    report.check(
        "margin >= 0.01 n^(-1/3), both sides occupied",
        margin.ok(),
        format!("{}; worst margin/bound = {worst_ratio:.4}", margin.detail()),
    );
    report.check(
        "wide-gap margin >= n^(-1/3)/2",
        wide.ok(),
        format!(
            "{}; branches wide/alone/gap = {}/{}/{}",
            wide.detail(),
            branches[0],
            branches[1],
            branches[2]
        ),
    );
    report.check("near points < 20 n^(1/3)", near.ok(), near.detail());
    report.check("coordinates within [0, r]", coords.ok(), coords.detail());
    report.check("chord length identity", chord.ok(), chord.detail());
    report.check("packing count <= 20ab", packing.ok(), packing.detail());
    report
}

/// Exhaustive deck searches, constant decks, scale invariance and the
/// prime barrier.
pub fn deck_suite(seed: u64, budget: &Budget) -> SuiteReport {
    let mut report = SuiteReport::new("deck");
    for (n, max) in [(2, 12), (3, 12), (4, 8)] {
        match deck::search_nonconstant(n, max) {
            Ok(found) => report.check(
                &format!("no non-constant deck, n = {n}, max = {max}"),
                found.is_empty(),
                format!("{} decks found", found.len()),
            ),
            Err(e) => report.check(
                &format!("search n = {n}, max = {max}"),
                false,
                e.to_string(),
            ),
        }
    }

    let mut constant = Tally::default();
    let big: BigUint = "123456789012345678901234567890".parse().expect("literal");
    for n in 2..=6 {
        for c in (1..=12u64).map(BigUint::from).chain([big.clone()]) {
            let d = deck::Deck::new(vec![c.clone(); n]).expect("positive values");
            let r = deck::deck_satisfies_property(&d);
            let ok = r.satisfies && r.witnesses.iter().all(|w| w.witness.len() == 1);
            constant.record(ok, || format!("n = {n}, c = {c}"));
        }
    }
    report.check("constant decks n = 2..=6", constant.ok(), constant.detail());

    let mut rng = seeded_rng(sub_seed(seed, 5));
    let (mut scale, mut barrier, mut witnesses) =
        (Tally::default(), Tally::default(), Tally::default());
    for _ in 0..budget.deck_pairs {
        let n = rng.random_range(2..=5usize);
        let d = deck::random_deck(n, 12, &mut rng);
        let c = BigUint::from(rng.random_range(1..=1000u64));
        let scaled = d.scaled(&c).expect("positive");
        let (r1, r2) = (
            deck::deck_satisfies_property(&d),
            deck::deck_satisfies_property(&scaled),
        );
        scale.record(r1 == r2, || format!("{:?} x {c}", d.values()));
        for w in &r1.witnesses {
            let sum = &d.values()[w.pair.0] + &d.values()[w.pair.1];
            witnesses.record(deck::is_witness(&d, &sum, &w.witness), || format!("{w:?}"));
        }

        let normalized = deck::normalize_deck(&d);
        if !normalized.is_constant() {
            let ok = match deck::prime_barrier_pair(&normalized) {
                Some((k, _)) => deck::gm_witness(&normalized, 0, k).ok() == Some(None),
                None => false,
            };
            barrier.record(
                ok && !deck::deck_satisfies_property(&normalized).satisfies,
                || format!("{:?}", normalized.values()),
            );
        } else {
            barrier.record(normalized.values()[0].is_one(), || {
                "normalized constant deck is not all ones".into()
            });
        }
    }
    report.check("scale invariance", scale.ok(), scale.detail());
    report.check("witness identity holds", witnesses.ok(), witnesses.detail());
    report.check(
        "prime barrier blocks pair (0, k)",
        barrier.ok(),
        barrier.detail(),
    );
    report
}

/// Concurrency, concyclicity and inscribed-angle checks on seeded angles,
/// with a perturbation control.
pub fn geometry_suite(seed: u64, budget: &Budget) -> SuiteReport {
    let mut report = SuiteReport::new("geometry");
    let mut rng = seeded_rng(sub_seed(seed, 6));
    let (mut theorem, mut angles, mut perturbed, mut scaling) = (
        Tally::default(),
        Tally::default(),
        Tally::default(),
        Tally::default(),
    );
    let mut worst = 0.0f64;
    let mut weakest_perturbation = f64::INFINITY;
    for _ in 0..budget.geometry_samples {
        let config = geo::sample_feasible(&mut rng);
        match geo::check_theorem(&config, 1e-9) {
            Ok(check) => {
                worst = worst
                    .max(check.residual)
                    .max(check.cyclic_residual)
                    .max(check.inscribed_residual);
                theorem.record(check.holds, || format!("{check:?}"));
            }
            Err(e) => theorem.record(false, || e.to_string()),
        }
        let (m, t) = (config.measured_angles(), config.target_angles());
        angles.record((0..6).all(|i| (m[i] - t[i]).abs() < 1e-10), || {
            format!("α = {}, β = {}: {m:?} vs {t:?}", config.alpha, config.beta)
        });
        let control = geo::sample_feasible_below(&mut rng, FRAC_PI_4 - geo::SENSITIVITY_EDGE);
        let moved = geo::perturb_d(&control, 1e-3)
            .and_then(|c| geo::concurrency_residual(&c).map(|r| (c, r.1)));
        match moved {
            Ok((moved, residual)) => {
                weakest_perturbation = weakest_perturbation.min(residual);
                perturbed.record(residual > 1e-5, || {
                    format!(
                        "α = {}, β = {}: residual {residual}",
                        control.alpha, control.beta
                    )
                });
                for s in [0.1, 10.0] {
                    let scaled = geo::concurrency_residual(&moved.scaled(s)).map(|r| r.1);
                    let ok = scaled
                        .as_ref()
                        .is_ok_and(|&x| (x - s * residual).abs() <= 1e-6 * s * residual);
                    scaling.record(ok, || format!("s = {s}: {scaled:?} vs {}", s * residual));
                }
            }
            Err(e) => perturbed.record(false, || e.to_string()),
        }
    }
    report.check(
        "concurrency, cyclic BOPC, BOP = 2 BAP within 1e-9",
        theorem.ok(),
        format!("{}; worst residual {worst:.3e}", theorem.detail()),
    );
    report.check(
        "angles reproduce 1:2:3 within 1e-10",
        angles.ok(),
        angles.detail(),
    );
    report.check(
        "perturbing D by 1e-3 gives residual > 1e-5 (angles <= pi/4 - 0.1)",
        perturbed.ok(),
        format!(
            "{}; smallest perturbed residual {weakest_perturbation:.3e}",
            perturbed.detail()
        ),
    );
    report.check("residual scales linearly", scaling.ok(), scaling.detail());
    report
}

/// Exact expansions and domination, then the numeric chain on sampled points.
pub fn inequality_suite(seed: u64, budget: &Budget) -> SuiteReport {
    let mut report = SuiteReport::new("ineq");
    let lhs = ineq::expand_lhs();
    let rhs = ineq::expand_rhs();
    for (name, poly, table) in [
        (
            "product expansion matches the 20-term reference table",
            &lhs,
            &ineq::REFERENCE_PRODUCT[..],
        ),
        (
            "cube expansion matches the 20-term reference table",
            &rhs,
            &ineq::REFERENCE_CUBE[..],
        ),
        (
            "sum of squares matches the reference table",
            &ineq::sum_of_squares(),
            &ineq::REFERENCE_SQUARES[..],
        ),
    ] {
        let off = ineq::table_mismatches(poly, table);
        report.check(
            name,
            off.is_empty(),
            format!("{} mismatches {off:?}", off.len()),
        );
    }
    report.check(
        "substitution a+2b+3c+4d = r+3s+6t+10u",
        ineq::weighted_sum() == ineq::Poly4::linear([1, 3, 6, 10]),
        ineq::weighted_sum().to_string(),
    );
    let dom = ineq::termwise_dominates(&lhs, &rhs);
    let u3 = dom.strict_terms.iter().any(|t| t.exponents == [0, 0, 0, 3]);
    report.check(
        "term-wise domination, strict at u^3",
        dom.dominated && u3,
        format!(
            "{} strict, {} equal, {} violating",
            dom.strict_terms.len(),
            dom.equal_terms.len(),
            dom.violating_terms.len()
        ),
    );

    let mut rng = seeded_rng(sub_seed(seed, 7));
    let (mut below_one, mut gap, mut chain) =
        (Tally::default(), Tally::default(), Tally::default());
    let mut max_value = 0.0f64;
    let mut min_gap = f64::INFINITY;
    for _ in 0..budget.simplex_samples {
        let p = ineq::sample_point(&mut rng);
        let value = ineq::lhs_value(&p);
        let g = ineq::amgm_gap(&p);
        let bound = ineq::quadratic_bound(&p);
        max_value = max_value.max(value);
        min_gap = min_gap.min(g);
        below_one.record(value < 1.0, || format!("{p:?}: {value}"));
        gap.record(g >= -1e-14, || format!("{p:?}: gap {g}"));
        chain.record(value <= bound * (1.0 + 1e-12) && bound < 1.0, || {
            format!("{p:?}: {value} / {bound}")
        });
    }
    report.check(
        "lhs < 1",
        below_one.ok(),
        format!("{}; max {max_value:.6}", below_one.detail()),
    );
    report.check(
        "AM-GM gap >= -1e-14",
        gap.ok(),
        format!("{}; min {min_gap:.3e}", gap.detail()),
    );
    report.check("lhs <= quadratic bound < 1", chain.ok(), chain.detail());
    report
}

/// Every suite in order.
pub fn run_all(seed: u64, budget: &Budget) -> Vec<SuiteReport> {
    vec![
        pebble_suite(seed, budget),
        cablecar_suite(seed, budget),
        lemma_suite(seed, budget),
        separating_line_suite(seed, budget),
        deck_suite(seed, budget),
        geometry_suite(seed, budget),
        inequality_suite(seed, budget),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass_and_repeat() {
        let first = run_all(9, &Budget::QUICK);
        for r in &first {
            assert!(
                r.passed,
                "{}: {:?}",
                r.suite,
                r.failures().collect::<Vec<_>>()
            );
        }
        assert_eq!(first, run_all(9, &Budget::QUICK));
    }
}
