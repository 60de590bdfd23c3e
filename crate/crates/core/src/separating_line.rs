//! Separating lines with a guaranteed margin for unit-spaced point sets.
//!
//! Let `A`, `B` be a diameter pair at distance `r` and measure every point by
//! its coordinate along `AB` from `A`; all coordinates lie in `[0, r]`. If
//! `r ≥ n^(2/3)` the largest gap between consecutive coordinates is at least
//! `r/(n−1) > n^(−1/3)` and its perpendicular bisector has margin above
//! `n^(−1/3)/2`. Otherwise only fewer than `20·n^(1/3)` points have coordinate
//! at most `1/2` (they fit in a `1/2 × |XY|` rectangle, see
//! [`packing_count_check`]), so some gap in `[0, 1/2]` is longer than
//! `1/(40·n^(1/3))`.
//!
//! All arithmetic is `f64`.

use std::f64::consts::PI;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{seeded_rng, Error, Result};

pub type Point = [f64; 2];

/// Slack accepted on the unit minimum distance.
pub const MIN_DIST_TOLERANCE: f64 = 1e-9;
/// Slack accepted by [`verify_separation`] on the margin bound.
pub const MARGIN_TOLERANCE: f64 = 1e-12;
/// Guaranteed margin constant: every point is at least `0.01·n^(−1/3)` away.
pub const MARGIN_CONSTANT: f64 = 0.01;

fn sub(a: Point, b: Point) -> Point {
    [a[0] - b[0], a[1] - b[1]]
}

fn dot(a: Point, b: Point) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

fn dist2(a: Point, b: Point) -> f64 {
    let d = sub(a, b);
    dot(d, d)
}

/// The margin every separating line must reach for `n` points.
pub fn margin_bound(n: usize) -> f64 {
    MARGIN_CONSTANT * (n as f64).powf(-1.0 / 3.0)
}

/// At least two points, pairwise at distance `≥ 1 − 1e−9`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPointSet", into = "RawPointSet")]
pub struct PointSet {
    points: Vec<Point>,
}

#[derive(Serialize, Deserialize)]
struct RawPointSet {
    points: Vec<Point>,
}

impl TryFrom<RawPointSet> for PointSet {
    type Error = Error;

    fn try_from(raw: RawPointSet) -> Result<Self> {
        PointSet::new(raw.points)
    }
}

impl From<PointSet> for RawPointSet {
    fn from(ps: PointSet) -> Self {
        RawPointSet { points: ps.points }
    }
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::Validation(format!(
                "a point set needs at least 2 points, got {}",
                points.len()
            )));
        }
        if let Some(i) = points
            .iter()
            .position(|p| !p[0].is_finite() || !p[1].is_finite())
        {
            return Err(Error::Validation(format!(
                "point {i} has a non-finite coordinate"
            )));
        }
        let limit = (1.0 - MIN_DIST_TOLERANCE) * (1.0 - MIN_DIST_TOLERANCE);
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                let d2 = dist2(points[i], points[j]);
                if d2 < limit {
                    return Err(Error::Validation(format!(
                        "points {i} and {j} are {} apart, below 1",
                        d2.sqrt()
                    )));
                }
            }
        }
        Ok(PointSet { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The same points scaled about the origin. Fails if the result is no
    /// longer unit-spaced.
    pub fn scaled(&self, factor: f64) -> Result<PointSet> {
        PointSet::new(
            self.points
                .iter()
                .map(|p| [p[0] * factor, p[1] * factor])
                .collect(),
        )
    }
}

/// A line `{x : (x − anchor)·normal = 0}` with its margin over a point set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeparatingLine {
    pub anchor: Point,
    pub normal: Point,
    pub margin: f64,
}

impl SeparatingLine {
    pub fn signed_distance(&self, p: Point) -> f64 {
        dot(sub(p, self.anchor), self.normal)
    }
}

/// Indices of a farthest pair and its distance. Ties keep the first pair in
/// `(i, j)` order.
pub fn diameter_pair(points: &[Point]) -> Result<(usize, usize, f64)> {
    if points.len() < 2 {
        return Err(Error::Domain(format!(
            "diameter needs at least 2 points, got {}",
            points.len()
        )));
    }
    let mut best = (0, 1, dist2(points[0], points[1]));
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d2 = dist2(points[i], points[j]);
            if d2 > best.2 {
                best = (i, j, d2);
            }
        }
    }
    Ok((best.0, best.1, best.2.sqrt()))
}

/// Length of the chord of the radius-`r` circle about `B` lying at distance
/// `1/2` from `A` and perpendicular to `AB`.
pub fn chord_length(r: f64) -> f64 {
    2.0 * (r * r - (r - 0.5) * (r - 0.5)).sqrt()
}

/// Which construction produced the line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum Branch {
    /// `r ≥ n^(2/3)`: bisector of the largest gap among all projections.
    WideGap { gap: f64 },
    /// `r < n^(2/3)` and `A` is the only point with coordinate `≤ 1/2`:
    /// bisector of `A` and the chord midpoint `M`.
    NearEndAlone,
    /// `r < n^(2/3)`: bisector of the largest gap among the coordinates
    /// `≤ 1/2`, the chord midpoint closing the last gap.
    NearEndGap { gap: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Separation {
    pub line: SeparatingLine,
    pub branch: Branch,
    pub diameter: (usize, usize, f64),
    /// Number of points with coordinate `≤ 1/2`, in the near-end branches.
    pub near_count: Option<usize>,
    pub chord_length: Option<f64>,
}

/// Largest gap between consecutive sorted values; the first one wins ties.
fn largest_gap(sorted: &[f64]) -> Option<(f64, f64)> {
    let mut best: Option<(f64, f64)> = None;
    for w in sorted.windows(2) {
        if best.is_none_or(|(lo, hi)| w[1] - w[0] > hi - lo) {
            best = Some((w[0], w[1]));
        }
    }
    best
}

/// Runs the two-case construction and reports which branch fired.
pub fn solve(ps: &PointSet) -> Result<Separation> {
    let points = ps.points();
    let n = points.len();
    let (ia, ib, r) = diameter_pair(points)?;
    let a = points[ia];
    let ab = sub(points[ib], a);
    let axis = [ab[0] / r, ab[1] / r];
    let mut coords: Vec<f64> = points.iter().map(|&p| dot(sub(p, a), axis)).collect();
    coords.sort_by(f64::total_cmp);

    let (cut, branch, near_count, chord) = if r >= (n as f64).powf(2.0 / 3.0) {
        let (lo, hi) = largest_gap(&coords).expect("at least two points");
        (
            (lo + hi) / 2.0,
            Branch::WideGap { gap: hi - lo },
            None,
            None,
        )
    } else {
        let mut near: Vec<f64> = coords.iter().copied().filter(|&c| c <= 0.5).collect();
        let count = near.len();
        let chord = Some(chord_length(r));
        if count == 1 {
            (0.25, Branch::NearEndAlone, Some(count), chord)
        } else {
            near.push(0.5);
            let (lo, hi) = largest_gap(&near).expect("at least two near points");
            (
                (lo + hi) / 2.0,
                Branch::NearEndGap { gap: hi - lo },
                Some(count),
                chord,
            )
        }
    };

    let anchor = [a[0] + axis[0] * cut, a[1] + axis[1] * cut];
    let mut line = SeparatingLine {
        anchor,
        normal: axis,
        margin: 0.0,
    };
    line.margin = points
        .iter()
        .map(|&p| line.signed_distance(p).abs())
        .fold(f64::INFINITY, f64::min);
    if line.margin <= 0.0 {
        return Err(Error::Contract(format!(
            "constructed line touches a point (branch {branch:?})"
        )));
    }
    Ok(Separation {
        line,
        branch,
        diameter: (ia, ib, r),
        near_count,
        chord_length: chord,
    })
}

/// A line separating `ps` whose margin is at least `0.01·n^(−1/3)`.
pub fn separating_line(ps: &PointSet) -> Result<SeparatingLine> {
    solve(ps).map(|s| s.line)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeparationReport {
    pub margin: f64,
    pub count_left: usize,
    pub count_right: usize,
    pub bound: f64,
    pub valid: bool,
}

/// Recomputes the margin and the side counts of `line` over `points`.
///
/// The normal is renormalized first, so a non-unit normal still yields
/// Euclidean distances.
pub fn verify_separation(points: &[Point], line: &SeparatingLine) -> SeparationReport {
    let norm = dot(line.normal, line.normal).sqrt();
    let bound = margin_bound(points.len().max(1));
    if !(norm.is_finite() && norm > 0.0) {
        return SeparationReport {
            margin: 0.0,
            count_left: 0,
            count_right: 0,
            bound,
            valid: false,
        };
    }
    let unit = SeparatingLine {
        normal: [line.normal[0] / norm, line.normal[1] / norm],
        ..*line
    };
    let mut margin = f64::INFINITY;
    let (mut count_left, mut count_right) = (0, 0);
    for &p in points {
        let d = unit.signed_distance(p);
        margin = margin.min(d.abs());
        if d < 0.0 {
            count_left += 1;
        } else if d > 0.0 {
            count_right += 1;
        }
    }
    let valid = count_left >= 1 && count_right >= 1 && margin >= bound - MARGIN_TOLERANCE;
    SeparationReport {
        margin,
        count_left,
        count_right,
        bound,
        valid,
    }
}

/// Closed axis-aligned rectangle `[x, x + width] × [y, y + height]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub x: f64,
    pub y: f64,
    pub width: f64,
    pub height: f64,
}

impl Rect {
    pub fn contains(&self, p: Point) -> bool {
        p[0] >= self.x
            && p[0] <= self.x + self.width
            && p[1] >= self.y
            && p[1] <= self.y + self.height
    }

    pub fn area(&self) -> f64 {
        self.width * self.height
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PackingReport {
    pub count: usize,
    /// `20·ab`.
    pub bound: f64,
    /// `(4/π)(a+1)(b+1)`: disjoint radius-1/2 disks inside the grown rectangle.
    pub disk_bound: f64,
    pub holds: bool,
}

/// Counts points in `rect` and checks the packing bound `count ≤ 20·ab`.
pub fn packing_count_check(points: &[Point], rect: &Rect) -> Result<PackingReport> {
    if !(rect.width >= 0.5 && rect.height >= 0.5) {
        return Err(Error::Domain(format!(
            "rectangle {} × {} has a side below 1/2",
            rect.width, rect.height
        )));
    }
    let count = points.iter().filter(|&&p| rect.contains(p)).count();
    let bound = 20.0 * rect.area();
    let disk_bound = 4.0 / PI * (rect.width + 1.0) * (rect.height + 1.0);
    let holds = (count as f64) <= disk_bound && disk_bound < bound;
    Ok(PackingReport {
        count,
        bound,
        disk_bound,
        holds,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorMode {
    /// Spacing-2 grid, each point moved by less than 1/2.
    JitteredGrid,
    /// Uniform samples in a square box, rejecting any closer than 1.
    Rejection,
}

/// Side of the square box used by [`GeneratorMode::Rejection`].
pub fn rejection_box_side(n: usize) -> f64 {
    1.6 * (n as f64).sqrt() + 1.0
}

/// Deterministic unit-spaced point set.
pub fn generate_min_dist_points(n: usize, seed: u64, mode: GeneratorMode) -> Result<PointSet> {
    if n < 2 {
        return Err(Error::Domain(format!("need n ≥ 2 points, got {n}")));
    }
    let mut rng = seeded_rng(seed);
    let points = match mode {
        GeneratorMode::JitteredGrid => {
            let cols = (n as f64).sqrt().ceil() as usize;
            (0..n)
                .map(|i| {
                    let angle = rng.random_range(0.0..2.0 * PI);
                    let radius = rng.random_range(0.0..0.49);
                    [
                        2.0 * (i % cols) as f64 + radius * angle.cos(),
                        2.0 * (i / cols) as f64 + radius * angle.sin(),
                    ]
                })
                .collect()
        }
        GeneratorMode::Rejection => {
            let side = rejection_box_side(n);
            let budget = 1000 * n;
            let mut points: Vec<Point> = Vec::with_capacity(n);
            let mut attempts = 0;
            while points.len() < n {
                if attempts == budget {
                    return Err(Error::Generation(format!(
                        "placed {} of {n} points in a {side:.2} box after {budget} attempts; use a larger box",
                        points.len()
                    )));
                }
                attempts += 1;
                let p = [rng.random_range(0.0..side), rng.random_range(0.0..side)];
                if points.iter().all(|&q| dist2(p, q) >= 1.0) {
                    points.push(p);
                }
            }
            points
        }
    };
    PointSet::new(points)
}
