//! `(a+2b+3c+4d)·a^a·b^b·c^c·d^d < 1` on the ordered simplex.
//!
//! The bound splits into `a^a b^b c^c d^d ≤ a²+b²+c²+d²` (weighted AM-GM,
//! checked numerically here) and `(a+2b+3c+4d)(a²+b²+c²+d²) < (a+b+c+d)³`.
//! The second is exact: with `r = a−b`, `s = b−c`, `t = c−d`, `u = d` both
//! sides become polynomials with non-negative coefficients and the left one
//! is dominated term by term, strictly at `u³`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_distr::Exp1;
use serde::{Deserialize, Serialize};

use crate::{seeded_rng, Error, Result};

/// Exponents of `(r, s, t, u)`.
pub type Exponents = [u32; 4];

pub const VARIABLES: [char; 4] = ['r', 's', 't', 'u'];

/// Sparse polynomial in `r, s, t, u` with exact integer coefficients.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Poly4 {
    terms: BTreeMap<Exponents, BigInt>,
}

impl Poly4 {
    pub fn zero() -> Self {
        Poly4::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly4::monomial([0; 4], c)
    }

    pub fn monomial(exponents: Exponents, c: impl Into<BigInt>) -> Self {
        let mut p = Poly4::zero();
        p.add_term(exponents, c.into());
        p
    }

    /// The variable with index `i` (`0 = r`, …, `3 = u`).
    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        Poly4::monomial(e, 1)
    }

    /// `Σ coefficients[i] · var(i)`.
    pub fn linear(coefficients: [i64; 4]) -> Self {
        let mut p = Poly4::zero();
        for (i, &c) in coefficients.iter().enumerate() {
            let mut e = [0; 4];
            e[i] = 1;
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exponents: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn coefficient(&self, exponents: Exponents) -> BigInt {
        self.terms.get(&exponents).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scalar_mul(&self, c: &BigInt) -> Self {
        let mut out = Poly4::zero();
        for (e, k) in &self.terms {
            out.add_term(*e, k * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Poly4::constant(1), |acc, _| &acc * self)
    }

    /// Exact value at integer arguments.
    pub fn eval(&self, at: [i64; 4]) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| (0..4).fold(c.clone(), |acc, i| acc * BigInt::from(at[i]).pow(e[i])))
            .sum()
    }
}

impl Add for &Poly4 {
    type Output = Poly4;

    fn add(self, rhs: &Poly4) -> Poly4 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Mul for &Poly4 {
    type Output = Poly4;

    fn mul(self, rhs: &Poly4) -> Poly4 {
        let mut out = Poly4::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

/// Monomial name such as `r^2 s` (`1` for the constant term).
pub fn monomial_name(e: &Exponents) -> String {
    let parts: Vec<String> = (0..4)
        .filter(|&i| e[i] > 0)
        .map(|i| match e[i] {
            1 => VARIABLES[i].to_string(),
            k => format!("{}^{k}", VARIABLES[i]),
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

impl fmt::Display for Poly4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let constant = *e == [0; 4];
            if constant || !c.abs().is_one() {
                write!(f, "{}", c.abs())?;
                if !constant {
                    write!(f, " ")?;
                }
            }
            if !constant {
                write!(f, "{}", monomial_name(e))?;
            }
        }
        Ok(())
    }
}

/// One row of a monomial/coefficient table; coefficients as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub monomial: String,
    pub exponents: Exponents,
    pub coefficient: String,
}

impl Term {
    fn new(e: &Exponents, c: &BigInt) -> Self {
        Term {
            monomial: monomial_name(e),
            exponents: *e,
            coefficient: c.to_string(),
        }
    }
}

impl Poly4 {
    /// Terms sorted by exponent tuple.
    pub fn table(&self) -> Vec<Term> {
        self.terms.iter().map(|(e, c)| Term::new(e, c)).collect()
    }
}

/// Reference expansion of `(a+2b+3c+4d)(a²+b²+c²+d²)` in `r, s, t, u`.
pub const REFERENCE_PRODUCT: [(Exponents, i64); 20] = [
    ([3, 0, 0, 0], 1),
    ([0, 3, 0, 0], 6),
    ([0, 0, 3, 0], 18),
    ([0, 0, 0, 3], 40),
    ([2, 1, 0, 0], 5),
    ([2, 0, 1, 0], 8),
    ([2, 0, 0, 1], 12),
    ([1, 2, 0, 0], 8),
    ([0, 2, 1, 0], 24),
    ([0, 2, 0, 1], 32),
    ([1, 0, 2, 0], 15),
    ([0, 1, 2, 0], 33),
    ([0, 0, 2, 1], 66),
    ([1, 0, 0, 2], 24),
    ([0, 1, 0, 2], 52),
    ([0, 0, 1, 2], 84),
    ([1, 1, 1, 0], 22),
    ([1, 1, 0, 1], 30),
    ([1, 0, 1, 1], 38),
    ([0, 1, 1, 1], 82),
];

/// Reference expansion of `(r+2s+3t+4u)³`.
pub const REFERENCE_CUBE: [(Exponents, i64); 20] = [
    ([3, 0, 0, 0], 1),
    ([0, 3, 0, 0], 8),
    ([0, 0, 3, 0], 27),
    ([0, 0, 0, 3], 64),
    ([2, 1, 0, 0], 6),
    ([2, 0, 1, 0], 9),
    ([2, 0, 0, 1], 12),
    ([1, 2, 0, 0], 12),
    ([0, 2, 1, 0], 36),
    ([0, 2, 0, 1], 48),
    ([1, 0, 2, 0], 27),
    ([0, 1, 2, 0], 54),
    ([0, 0, 2, 1], 108),
    ([1, 0, 0, 2], 48),
    ([0, 1, 0, 2], 96),
    ([0, 0, 1, 2], 144),
    ([1, 1, 1, 0], 36),
    ([1, 1, 0, 1], 48),
    ([1, 0, 1, 1], 72),
    ([0, 1, 1, 1], 144),
];

/// Reference expansion of `a² + b² + c² + d²`.
pub const REFERENCE_SQUARES: [(Exponents, i64); 10] = [
    ([2, 0, 0, 0], 1),
    ([0, 2, 0, 0], 2),
    ([0, 0, 2, 0], 3),
    ([0, 0, 0, 2], 4),
    ([1, 1, 0, 0], 2),
    ([1, 0, 1, 0], 2),
    ([1, 0, 0, 1], 2),
    ([0, 1, 1, 0], 4),
    ([0, 1, 0, 1], 4),
    ([0, 0, 1, 1], 6),
];

/// Builds a polynomial from a term table.
pub fn from_table(table: &[(Exponents, i64)]) -> Poly4 {
    let mut p = Poly4::zero();
    for &(e, c) in table {
        p.add_term(e, c.into());
    }
    p
}

/// Terms on which `poly` disagrees with `table`, as `(exponents, table, poly)`.
pub fn table_mismatches(
    poly: &Poly4,
    table: &[(Exponents, i64)],
) -> Vec<(Exponents, BigInt, BigInt)> {
    let listed = from_table(table);
    let mut keys: Vec<Exponents> = poly
        .terms
        .keys()
        .chain(listed.terms.keys())
        .copied()
        .collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .filter_map(|e| {
            let (want, got) = (listed.coefficient(e), poly.coefficient(e));
            (want != got).then_some((e, want, got))
        })
        .collect()
}

/// `a, b, c, d` written in `r, s, t, u`.
pub fn substituted_variables() -> [Poly4; 4] {
    [
        Poly4::linear([1, 1, 1, 1]),
        Poly4::linear([0, 1, 1, 1]),
        Poly4::linear([0, 0, 1, 1]),
        Poly4::linear([0, 0, 0, 1]),
    ]
}

/// `a + 2b + 3c + 4d` after substitution.
pub fn weighted_sum() -> Poly4 {
    substituted_variables()
        .iter()
        .zip(1..)
        .fold(Poly4::zero(), |acc, (v, w)| {
            &acc + &v.scalar_mul(&BigInt::from(w))
        })
}

/// `a² + b² + c² + d²` after substitution.
pub fn sum_of_squares() -> Poly4 {
    substituted_variables()
        .iter()
        .fold(Poly4::zero(), |acc, v| &acc + &v.pow(2))
}

/// `a + b + c + d` after substitution.
pub fn plain_sum() -> Poly4 {
    substituted_variables()
        .iter()
        .fold(Poly4::zero(), |acc, v| &acc + v)
}

/// `(a+2b+3c+4d)(a²+b²+c²+d²)` in `r, s, t, u`.
pub fn expand_lhs() -> Poly4 {
    &weighted_sum() * &sum_of_squares()
}

/// `(a+b+c+d)³` in `r, s, t, u`.
pub fn expand_rhs() -> Poly4 {
    plain_sum().pow(3)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationReport {
    pub dominated: bool,
    pub strict_terms: Vec<Term>,
    pub equal_terms: Vec<Term>,
    /// Monomials where the left coefficient exceeds the right one.
    pub violating_terms: Vec<Term>,
}

/// Compares `p` and `q` coefficient by coefficient (missing terms are 0).
pub fn termwise_dominates(p: &Poly4, q: &Poly4) -> DominationReport {
    let mut keys: Vec<Exponents> = p.terms.keys().chain(q.terms.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    let mut report = DominationReport {
        dominated: true,
        strict_terms: Vec::new(),
        equal_terms: Vec::new(),
        violating_terms: Vec::new(),
    };
    for e in keys {
        let (cp, cq) = (p.coefficient(e), q.coefficient(e));
        let term = Term::new(&e, &cp);
        match cp.cmp(&cq) {
            std::cmp::Ordering::Less => report.strict_terms.push(term),
            std::cmp::Ordering::Equal => report.equal_terms.push(term),
            std::cmp::Ordering::Greater => {
                report.dominated = false;
                report.violating_terms.push(term);
            }
        }
    }
    report
}

/// `a ≥ b ≥ c ≥ d > 0` with `a + b + c + d = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimplexPoint {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

pub const SIMPLEX_SUM_TOLERANCE: f64 = 1e-12;
/// Sampled points with `d` below this are redrawn.
pub const MIN_SAMPLED_COORDINATE: f64 = 1e-12;

impl SimplexPoint {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if d.is_nan() || d <= 0.0 {
            return Err(Error::Domain(format!(
                "coordinates must be positive, got d = {d}"
            )));
        }
        if !(a >= b && b >= c && c >= d) {
            return Err(Error::Domain(format!(
                "coordinates must be non-increasing, got ({a}, {b}, {c}, {d})"
            )));
        }
        let sum = a + b + c + d;
        if (sum - 1.0).abs() > SIMPLEX_SUM_TOLERANCE {
            return Err(Error::Domain(format!("coordinates sum to {sum}, not 1")));
        }
        Ok(SimplexPoint { a, b, c, d })
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn weighted_sum(&self) -> f64 {
        self.a + 2.0 * self.b + 3.0 * self.c + 4.0 * self.d
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.coords().iter().map(|x| x * x).sum()
    }

    /// `a^a b^b c^c d^d`, through logarithms.
    pub fn self_power_product(&self) -> f64 {
        self.coords().iter().map(|&x| x * x.ln()).sum::<f64>().exp()
    }
}

/// `(a+2b+3c+4d) · a^a b^b c^c d^d`.
pub fn lhs_value(p: &SimplexPoint) -> f64 {
    let log = p.weighted_sum().ln() + p.coords().iter().map(|&x| x * x.ln()).sum::<f64>();
    log.exp()
}

/// `(a² + b² + c² + d²) − a^a b^b c^c d^d`.
pub fn amgm_gap(p: &SimplexPoint) -> f64 {
    p.sum_of_squares() - p.self_power_product()
}

/// `(a+2b+3c+4d)(a²+b²+c²+d²)`, the intermediate bound.
pub fn quadratic_bound(p: &SimplexPoint) -> f64 {
    p.weighted_sum() * p.sum_of_squares()
}

/// Normalized exponential draws sorted descending.
pub fn sample_point<R: Rng + ?Sized>(rng: &mut R) -> SimplexPoint {
    loop {
        let mut x: [f64; 4] = std::array::from_fn(|_| rng.sample::<f64, _>(Exp1));
        let total: f64 = x.iter().sum();
        for v in &mut x {
            *v /= total;
        }
        x.sort_by(|p, q| q.total_cmp(p));
        if x[3] >= MIN_SAMPLED_COORDINATE {
            return SimplexPoint {
                a: x[0],
                b: x[1],
                c: x[2],
                d: x[3],
            };
        }
    }
}

pub fn sample_simplex(count: usize, seed: u64) -> Vec<SimplexPoint> {
    let mut rng = seeded_rng(seed);
    (0..count).map(|_| sample_point(&mut rng)).collect()
}
