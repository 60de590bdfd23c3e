//! Exact check of the deck property: the arithmetic mean of every pair of
//! cards equals the geometric mean of some collection of distinct cards.
//!
//! `AM = GM` is tested in fraction-free form, `(a_i + a_j)^m = 2^m · ∏ a_k`,
//! so no roots or rationals are needed.

use std::cmp::Reverse;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub const SEARCH_MAX_N: usize = 6;
pub const SEARCH_MAX_VALUE: u64 = 64;
/// Largest number of decks [`search_nonconstant`] will enumerate.
pub const SEARCH_MAX_DECKS: u128 = 2_000_000;

/// Positive integers sorted in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDeck", into = "RawDeck")]
pub struct Deck {
    values: Vec<BigUint>,
}

/// Card values as JSON numbers or decimal strings.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Card {
    Number(u64),
    Text(String),
}

#[derive(Serialize, Deserialize)]
struct RawDeck {
    values: Vec<Card>,
}

impl TryFrom<RawDeck> for Deck {
    type Error = Error;

    fn try_from(raw: RawDeck) -> Result<Self> {
        let values = raw
            .values
            .into_iter()
            .enumerate()
            .map(|(i, card)| match card {
                Card::Number(v) => Ok(BigUint::from(v)),
                Card::Text(s) => s.parse::<BigUint>().map_err(|_| {
                    Error::Validation(format!("values[{i}] = {s:?} is not a non-negative integer"))
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Deck::new(values)
    }
}

impl From<Deck> for RawDeck {
    fn from(deck: Deck) -> Self {
        RawDeck {
            values: deck
                .values
                .iter()
                .map(|v| Card::Text(v.to_string()))
                .collect(),
        }
    }
}

impl Deck {
    pub fn new(mut values: Vec<BigUint>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::Validation(format!(
                "a deck needs more than one card, got {}",
                values.len()
            )));
        }
        if values.iter().any(Zero::is_zero) {
            return Err(Error::Validation("card values must be positive".into()));
        }
        values.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Deck { values })
    }

    pub fn from_u64s(values: &[u64]) -> Result<Self> {
        Deck::new(values.iter().map(|&v| BigUint::from(v)).collect())
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }

    pub fn gcd(&self) -> BigUint {
        self.values.iter().fold(BigUint::zero(), |g, v| g.gcd(v))
    }

    pub fn scaled(&self, factor: &BigUint) -> Result<Deck> {
        Deck::new(self.values.iter().map(|v| v * factor).collect())
    }
}

/// Divides every card by the gcd of the deck.
pub fn normalize_deck(deck: &Deck) -> Deck {
    let g = deck.gcd();
    Deck {
        values: deck.values.iter().map(|v| v / &g).collect(),
    }
}

/// Whether the cards at `subset` have geometric mean `sum / 2`.
pub fn is_witness(deck: &Deck, sum: &BigUint, subset: &[usize]) -> bool {
    if subset.is_empty() {
        return false;
    }
    let m = subset.len() as u32;
    let product: BigUint = subset.iter().map(|&k| &deck.values[k]).product();
    sum.pow(m) == (product << m)
}

/// Smallest, then lexicographically first, set of distinct cards whose
/// geometric mean equals the arithmetic mean of cards `i` and `j`.
///
/// Subsets whose largest card is below the mean, or whose smallest card is
/// above it, are skipped: their geometric mean cannot reach it.
pub fn gm_witness(deck: &Deck, i: usize, j: usize) -> Result<Option<Vec<usize>>> {
    let n = deck.len();
    if i >= n || j >= n {
        return Err(Error::Domain(format!(
            "card index out of range 0..{n}: ({i}, {j})"
        )));
    }
    if i == j {
        return Err(Error::Domain(format!(
            "pair needs two different cards, got ({i}, {i})"
        )));
    }
    let sum = &deck.values[i] + &deck.values[j];
    // Values are non-increasing, so the first index in a subset holds its
    // maximum and the last its minimum.
    let doubled: Vec<BigUint> = deck.values.iter().map(|v| v << 1u32).collect();
    for m in 1..=n {
        let mut combo: Vec<usize> = (0..m).collect();
        loop {
            let max_ok = doubled[combo[0]] >= sum;
            if !max_ok {
                // Every later combination starts at a smaller card.
                break;
            }
            let min_ok = doubled[combo[m - 1]] <= sum;
            if min_ok && is_witness(deck, &sum, &combo) {
                return Ok(Some(combo));
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances to the next `k`-combination of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let Some(pos) = (0..k).rev().find(|&p| combo[p] < n - k + p) else {
        return false;
    };
    combo[pos] += 1;
    for p in pos + 1..k {
        combo[p] = combo[p - 1] + 1;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairWitness {
    pub pair: (usize, usize),
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub satisfies: bool,
    /// Witnesses found, in pair order, up to the first failing pair.
    pub witnesses: Vec<PairWitness>,
    pub failing_pair: Option<(usize, usize)>,
}

pub fn deck_satisfies_property(deck: &Deck) -> PropertyReport {
    let n = deck.len();
    let mut witnesses = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match gm_witness(deck, i, j).expect("indices are in range") {
                Some(witness) => witnesses.push(PairWitness {
                    pair: (i, j),
                    witness,
                }),
                None => {
                    return PropertyReport {
                        satisfies: false,
                        witnesses,
                        failing_pair: Some((i, j)),
                    }
                }
            }
        }
    }
    PropertyReport {
        satisfies: true,
        witnesses,
        failing_pair: None,
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Non-constant decks of `n` cards with values in `1..=max_value` that have
/// the property, each passed to `on_found` as it is discovered.
pub fn search_nonconstant_with(
    n: usize,
    max_value: u64,
    mut on_found: impl FnMut(&Deck),
) -> Result<Vec<Deck>> {
    if !(2..=SEARCH_MAX_N).contains(&n) {
        return Err(Error::Refused {
            param: "n",
            reason: format!("= {n} is outside the searchable range 2..={SEARCH_MAX_N}"),
        });
    }
    if !(1..=SEARCH_MAX_VALUE).contains(&max_value) {
        return Err(Error::Refused {
            param: "max_value",
            reason: format!("= {max_value} is outside the searchable range 1..={SEARCH_MAX_VALUE}"),
        });
    }
    let decks = binomial(max_value as u128 + n as u128 - 1, n as u128);
    if decks > SEARCH_MAX_DECKS {
        return Err(Error::Refused {
            param: "max_value",
            reason: format!(
                "= {max_value} with n = {n} gives {decks} decks, above the budget {SEARCH_MAX_DECKS}"
            ),
        });
    }

    let mut found = Vec::new();
    for_each_sorted_values(n, max_value, |values| {
        if values.iter().any(|&v| v != values[0]) {
            let deck = Deck::from_u64s(values).expect("values are positive");
            if deck_satisfies_property(&deck).satisfies {
                on_found(&deck);
                found.push(deck);
            }
        }
    });
    Ok(found)
}

/// Calls `f` on every non-increasing sequence of `n` values in
/// `1..=max_value`, in lexicographic order.
fn for_each_sorted_values(n: usize, max_value: u64, mut f: impl FnMut(&[u64])) {
    let mut values = vec![1u64; n];
    loop {
        f(&values);
        // Bump the last position that can grow, then reset the tail to 1.
        let Some(pos) = (0..n)
            .rev()
            .find(|&p| values[p] < max_value && (p == 0 || values[p] < values[p - 1]))
        else {
            break;
        };
        values[pos] += 1;
        for v in &mut values[pos + 1..] {
            *v = 1;
        }
    }
}

pub fn search_nonconstant(n: usize, max_value: u64) -> Result<Vec<Deck>> {
    search_nonconstant_with(n, max_value, |_| {})
}

fn smallest_prime_factor(v: &BigUint) -> Option<BigUint> {
    let two = BigUint::from(2u32);
    if *v < two {
        return None;
    }
    let mut d = two;
    while &d * &d <= *v {
        if (v % &d).is_zero() {
            return Some(d);
        }
        d += BigUint::one();
    }
    Some(v.clone())
}

/// For a deck with gcd 1 and top card at least 2: the smallest prime `p`
/// dividing the top card and the first index `k` whose card `p` does not
/// divide. The pair `(0, k)` cannot have a witness.
pub fn prime_barrier_pair(deck: &Deck) -> Option<(usize, BigUint)> {
    if !deck.gcd().is_one() {
        return None;
    }
    let p = smallest_prime_factor(&deck.values[0])?;
    let k = deck.values.iter().position(|v| !(v % &p).is_zero())?;
    Some((k, p))
}

/// Random deck of `n` cards with values in `1..=max_value`.
pub fn random_deck<R: Rng + ?Sized>(n: usize, max_value: u64, rng: &mut R) -> Deck {
    let mut values: Vec<u64> = (0..n).map(|_| rng.random_range(1..=max_value)).collect();
    values.sort_unstable_by_key(|&v| Reverse(v));
    Deck::from_u64s(&values).expect("values are positive and n > 1")
}
