//! Numeric instances of the 1:2:3 quadrilateral and the concurrency of the
//! two angle bisectors with the perpendicular bisector of `AB`.
//!
//! With `∠PAD : ∠PBA : ∠DPA = 1 : 2 : 3 = ∠CBP : ∠BAP : ∠BPC`, the internal
//! bisectors of `∠ADP` and `∠PCB` and the perpendicular bisector of `AB` all
//! pass through the circumcenter `O` of triangle `PAB`. Configurations are
//! built directly from `(α, β)` with `A = (0, 0)`, `B = (1, 0)` and `P` in the
//! upper half-plane, so the theorem becomes a residual check.

use std::f64::consts::{FRAC_PI_4, PI};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub type Point = [f64; 2];

/// Tolerance on the reconstructed 1:2:3 angle ratios.
pub const ANGLE_TOLERANCE: f64 = 1e-9;

fn sub(a: Point, b: Point) -> Point {
    [a[0] - b[0], a[1] - b[1]]
}

fn add(a: Point, b: Point) -> Point {
    [a[0] + b[0], a[1] + b[1]]
}

fn scale(a: Point, s: f64) -> Point {
    [a[0] * s, a[1] * s]
}

fn dot(a: Point, b: Point) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

fn cross(a: Point, b: Point) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

fn norm(a: Point) -> f64 {
    dot(a, a).sqrt()
}

fn unit(a: Point) -> Point {
    scale(a, 1.0 / norm(a))
}

fn dist(a: Point, b: Point) -> f64 {
    norm(sub(a, b))
}

fn rotate(a: Point, theta: f64) -> Point {
    let (s, c) = theta.sin_cos();
    [c * a[0] - s * a[1], s * a[0] + c * a[1]]
}

fn polar(theta: f64) -> Point {
    [theta.cos(), theta.sin()]
}

/// Unsigned angle `∠p vertex q` in `[0, π]`.
pub fn angle_at(vertex: Point, p: Point, q: Point) -> f64 {
    let (u, v) = (sub(p, vertex), sub(q, vertex));
    cross(u, v).abs().atan2(dot(u, v))
}

/// Line through `anchor` with unit `direction`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Line {
    pub anchor: Point,
    pub direction: Point,
}

impl Line {
    pub fn new(anchor: Point, direction: Point) -> Result<Self> {
        let len = norm(direction);
        if !(len.is_finite() && len > 0.0) {
            return Err(Error::Degenerate(format!(
                "line direction {direction:?} has no length"
            )));
        }
        Ok(Line {
            anchor,
            direction: scale(direction, 1.0 / len),
        })
    }

    pub fn distance_to(&self, p: Point) -> f64 {
        cross(sub(p, self.anchor), self.direction).abs()
    }

    /// Parameters `(s, t)` with `self.anchor + s·self.direction =
    /// other.anchor + t·other.direction`.
    fn intersect(&self, other: &Line) -> Option<(f64, f64)> {
        let denom = cross(self.direction, other.direction);
        if denom.abs() < 1e-15 {
            return None;
        }
        let w = sub(other.anchor, self.anchor);
        Some((
            cross(w, other.direction) / denom,
            cross(w, self.direction) / denom,
        ))
    }

    fn at(&self, s: f64) -> Point {
        add(self.anchor, scale(self.direction, s))
    }
}

/// Internal bisector of the angle at `vertex` between rays to `p` and `q`.
pub fn internal_bisector(vertex: Point, p: Point, q: Point) -> Result<Line> {
    Line::new(vertex, add(unit(sub(p, vertex)), unit(sub(q, vertex))))
}

pub fn perpendicular_bisector(p: Point, q: Point) -> Result<Line> {
    let d = sub(q, p);
    Line::new(scale(add(p, q), 0.5), [-d[1], d[0]])
}

/// Meeting point of the rays `from_a` and `from_b`; both parameters must be positive.
fn ray_meet(from_a: &Line, from_b: &Line, what: &str) -> Result<Point> {
    match from_a.intersect(from_b) {
        Some((s, t)) if s > 0.0 && t > 0.0 => Ok(from_a.at(s)),
        _ => Err(Error::Infeasible(format!(
            "the rays defining {what} do not meet"
        ))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Configuration {
    pub a: Point,
    pub b: Point,
    pub c: Point,
    pub d: Point,
    pub p: Point,
    /// `∠PAD`, radians.
    pub alpha: f64,
    /// `∠CBP`, radians.
    pub beta: f64,
}

impl Configuration {
    /// All points scaled about the origin.
    pub fn scaled(&self, s: f64) -> Self {
        Configuration {
            a: scale(self.a, s),
            b: scale(self.b, s),
            c: scale(self.c, s),
            d: scale(self.d, s),
            p: scale(self.p, s),
            ..*self
        }
    }

    /// Measured `[∠PAD, ∠PBA, ∠DPA, ∠CBP, ∠BAP, ∠BPC]`.
    pub fn measured_angles(&self) -> [f64; 6] {
        [
            angle_at(self.a, self.p, self.d),
            angle_at(self.b, self.p, self.a),
            angle_at(self.p, self.d, self.a),
            angle_at(self.b, self.c, self.p),
            angle_at(self.a, self.b, self.p),
            angle_at(self.p, self.b, self.c),
        ]
    }

    /// `[α, 2α, 3α, β, 2β, 3β]`.
    pub fn target_angles(&self) -> [f64; 6] {
        let (a, b) = (self.alpha, self.beta);
        [a, 2.0 * a, 3.0 * a, b, 2.0 * b, 3.0 * b]
    }

    /// Whether `ABCD` is strictly convex (counterclockwise) with `P` strictly inside.
    pub fn is_convex_with_interior_p(&self) -> bool {
        let quad = [self.a, self.b, self.c, self.d];
        (0..4).all(|i| {
            let (u, v, w) = (quad[i], quad[(i + 1) % 4], quad[(i + 2) % 4]);
            cross(sub(v, u), sub(w, v)) > 0.0 && cross(sub(v, u), sub(self.p, u)) > 0.0
        })
    }
}

/// Builds the configuration with `∠PAD = α` and `∠CBP = β`.
pub fn construct_configuration(alpha: f64, beta: f64) -> Result<Configuration> {
    let conditions = [
        (alpha > 0.0, "α > 0"),
        (beta > 0.0, "β > 0"),
        (2.0 * alpha + 2.0 * beta < PI, "2α + 2β < π (triangle APB)"),
        (4.0 * alpha < PI, "4α < π (∠ADP > 0)"),
        (4.0 * beta < PI, "4β < π (∠PCB > 0)"),
    ];
    if let Some((_, name)) = conditions.iter().find(|(ok, _)| !ok) {
        return Err(Error::Infeasible(format!(
            "α = {alpha}, β = {beta} violates {name}"
        )));
    }

    let a = [0.0, 0.0];
    let b = [1.0, 0.0];
    // ∠BAP = 2β at A, ∠PBA = 2α at B.
    let from_a = Line::new(a, polar(2.0 * beta))?;
    let from_b = Line::new(b, polar(PI - 2.0 * alpha))?;
    let p = ray_meet(&from_a, &from_b, "P")?;
    // D beyond AP from B: rotate AP counterclockwise by α at A, PA clockwise by 3α at P.
    let d = ray_meet(
        &Line::new(a, polar(2.0 * beta + alpha))?,
        &Line::new(p, rotate(sub(a, p), -3.0 * alpha))?,
        "D",
    )?;
    // C beyond BP from A: the mirror image.
    let c = ray_meet(
        &Line::new(b, polar(PI - 2.0 * alpha - beta))?,
        &Line::new(p, rotate(sub(b, p), 3.0 * beta))?,
        "C",
    )?;

    let config = Configuration {
        a,
        b,
        c,
        d,
        p,
        alpha,
        beta,
    };
    if !config.is_convex_with_interior_p() {
        return Err(Error::Infeasible(format!(
            "α = {alpha}, β = {beta}: ABCD is not strictly convex with P inside \
             (A = {a:?}, B = {b:?}, C = {c:?}, D = {d:?}, P = {p:?})"
        )));
    }
    let measured = config.measured_angles();
    let target = config.target_angles();
    if let Some(i) = (0..6).find(|&i| (measured[i] - target[i]).abs() > ANGLE_TOLERANCE) {
        return Err(Error::Contract(format!(
            "angle {i} measures {} instead of {}",
            measured[i], target[i]
        )));
    }
    Ok(config)
}

/// Center of the circle through three points.
pub fn circumcenter(p1: Point, p2: Point, p3: Point) -> Result<Point> {
    let (u, v) = (sub(p2, p1), sub(p3, p1));
    let det = 2.0 * cross(u, v);
    let scale2 = dot(u, u).max(dot(v, v)).max(dot(sub(p3, p2), sub(p3, p2)));
    if det.abs() <= 1e-12 * scale2 || scale2 == 0.0 {
        return Err(Error::Degenerate(format!(
            "points {p1:?}, {p2:?}, {p3:?} are collinear"
        )));
    }
    let (uu, vv) = (dot(u, u), dot(v, v));
    let offset = [(v[1] * uu - u[1] * vv) / det, (u[0] * vv - v[0] * uu) / det];
    Ok(add(p1, offset))
}

/// `O` = circumcenter of `PAB` and the largest distance from `O` to the
/// bisector of `∠ADP`, the bisector of `∠PCB` and the perpendicular bisector
/// of `AB`.
pub fn concurrency_residual(config: &Configuration) -> Result<(Point, f64)> {
    let o = circumcenter(config.p, config.a, config.b)?;
    let lines = [
        internal_bisector(config.d, config.a, config.p)?,
        internal_bisector(config.c, config.p, config.b)?,
        perpendicular_bisector(config.a, config.b)?,
    ];
    let residual = lines.iter().map(|l| l.distance_to(o)).fold(0.0, f64::max);
    Ok((o, residual))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub alpha: f64,
    pub beta: f64,
    pub circumcenter: Point,
    /// Distance from `O` to the farthest of the three lines.
    pub residual: f64,
    /// `| |QC| − |QB| |` for `Q` the circumcenter of `B, O, P`.
    pub cyclic_residual: f64,
    /// `|∠BOP − 2∠BAP|`.
    pub inscribed_residual: f64,
    pub holds: bool,
}

/// Checks the concurrency, the concyclicity of `B, O, P, C` and the
/// inscribed-angle step `∠BOP = 2∠BAP`, each within `tol`.
pub fn check_theorem(config: &Configuration, tol: f64) -> Result<TheoremCheck> {
    let (o, residual) = concurrency_residual(config)?;
    let q = circumcenter(config.b, o, config.p)?;
    let cyclic_residual = (dist(q, config.c) - dist(q, config.b)).abs();
    let inscribed_residual =
        (angle_at(o, config.b, config.p) - 2.0 * angle_at(config.a, config.b, config.p)).abs();
    Ok(TheoremCheck {
        alpha: config.alpha,
        beta: config.beta,
        circumcenter: o,
        residual,
        cyclic_residual,
        inscribed_residual,
        holds: residual < tol && cyclic_residual < tol && inscribed_residual < tol,
    })
}

pub fn verify_theorem(alpha: f64, beta: f64, tol: f64) -> Result<TheoremCheck> {
    check_theorem(&construct_configuration(alpha, beta)?, tol)
}

/// Sampling keeps both angles at least this far (radians) from 0 and π/4.
pub const SAMPLE_EDGE: f64 = 0.01;

/// Upper margin for perturbation checks. As `α → π/4` the angle at `D`
/// collapses and moving `D` barely moves its bisector.
pub const SENSITIVITY_EDGE: f64 = 0.1;

/// Uniform `(α, β)` in `[SAMPLE_EDGE, π/4 − SAMPLE_EDGE]²`, resampled until the
/// construction succeeds.
pub fn sample_feasible<R: Rng + ?Sized>(rng: &mut R) -> Configuration {
    sample_feasible_below(rng, FRAC_PI_4 - SAMPLE_EDGE)
}

/// Like [`sample_feasible`] with both angles below `upper`.
pub fn sample_feasible_below<R: Rng + ?Sized>(rng: &mut R, upper: f64) -> Configuration {
    assert!(upper > SAMPLE_EDGE && upper <= FRAC_PI_4 - SAMPLE_EDGE);
    loop {
        let alpha = rng.random_range(SAMPLE_EDGE..upper);
        let beta = rng.random_range(SAMPLE_EDGE..upper);
        if let Ok(config) = construct_configuration(alpha, beta) {
            return config;
        }
    }
}

/// The configuration with `D` moved by `delta` perpendicular to the bisector
/// of `∠ADP`.
pub fn perturb_d(config: &Configuration, delta: f64) -> Result<Configuration> {
    let bisector = internal_bisector(config.d, config.a, config.p)?;
    let normal = [-bisector.direction[1], bisector.direction[0]];
    Ok(Configuration {
        d: add(config.d, scale(normal, delta)),
        ..*config
    })
}
