//! Cable-car configurations on `n²` stations.
//!
//! Stations are labeled `0..n²` by increasing altitude. A company's cars have
//! distinct starts, distinct finishes, and preserve order (a car that starts
//! higher also finishes higher). Two stations are linked when the higher one
//! is reachable from the lower one by a chain of cars.
//!
//! Linked pairs are computed by forward reachability along the start→finish
//! successor map. The station graph (one undirected edge per car) is a forest
//! whose components coincide with the linked classes; that equivalence is
//! checked by the tests rather than used by [`linked_pairs`].

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use rand::seq::index;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::union_find::UnionFind;
use crate::{Error, Result};

pub type Station = usize;

/// Attempts made by [`random_config`] before giving up.
const RANDOM_CONFIG_ATTEMPTS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CableCarConfig {
    pub n: usize,
    /// `(start, finish)` per car.
    pub cars: Vec<(Station, Station)>,
}

impl CableCarConfig {
    pub fn station_count(&self) -> usize {
        self.n * self.n
    }

    pub fn car_count(&self) -> usize {
        self.cars.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConfigViolation {
    NTooSmall {
        n: usize,
    },
    StationOutOfRange {
        car: usize,
        station: Station,
    },
    NotAscending {
        car: usize,
        start: Station,
        finish: Station,
    },
    DuplicateStart {
        station: Station,
    },
    DuplicateFinish {
        station: Station,
    },
    /// Car `lower` starts below car `higher` but does not finish below it.
    OrderReversed {
        lower: (Station, Station),
        higher: (Station, Station),
    },
}

impl fmt::Display for ConfigViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NTooSmall { n } => write!(f, "n = {n} must exceed 1"),
            Self::StationOutOfRange { car, station } => {
                write!(f, "car {car} uses station {station}, outside 0..n²")
            }
            Self::NotAscending { car, start, finish } => {
                write!(f, "car {car} goes from {start} to {finish}, not upward")
            }
            Self::DuplicateStart { station } => write!(f, "two cars start at station {station}"),
            Self::DuplicateFinish { station } => write!(f, "two cars finish at station {station}"),
            Self::OrderReversed { lower, higher } => write!(
                f,
                "car {lower:?} starts below car {higher:?} but finishes above it"
            ),
        }
    }
}

/// Every violated configuration invariant; empty means valid.
pub fn validate_config(config: &CableCarConfig) -> Vec<ConfigViolation> {
    let mut violations = Vec::new();
    if config.n <= 1 {
        violations.push(ConfigViolation::NTooSmall { n: config.n });
    }
    let stations = config.station_count();
    for (car, &(start, finish)) in config.cars.iter().enumerate() {
        for station in [start, finish] {
            if station >= stations {
                violations.push(ConfigViolation::StationOutOfRange { car, station });
            }
        }
        if start >= finish {
            violations.push(ConfigViolation::NotAscending { car, start, finish });
        }
    }

    let mut starts = BTreeSet::new();
    let mut finishes = BTreeSet::new();
    for &(start, finish) in &config.cars {
        if !starts.insert(start) {
            violations.push(ConfigViolation::DuplicateStart { station: start });
        }
        if !finishes.insert(finish) {
            violations.push(ConfigViolation::DuplicateFinish { station: finish });
        }
    }

    let mut sorted = config.cars.clone();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0].0 < w[1].0 && w[0].1 > w[1].1 {
            violations.push(ConfigViolation::OrderReversed {
                lower: w[0],
                higher: w[1],
            });
        }
    }
    violations
}

fn ensure_valid(config: &CableCarConfig) -> Result<()> {
    let violations = validate_config(config);
    if violations.is_empty() {
        Ok(())
    } else {
        let msgs: Vec<String> = violations.iter().map(ToString::to_string).collect();
        Err(Error::Validation(msgs.join("; ")))
    }
}

/// All `(lo, hi)` with `hi` reachable from `lo` by one or more cars.
pub fn linked_pairs(config: &CableCarConfig) -> Result<BTreeSet<(Station, Station)>> {
    ensure_valid(config)?;
    let mut successor = vec![None; config.station_count()];
    for &(start, finish) in &config.cars {
        successor[start] = Some(finish);
    }
    let mut linked = BTreeSet::new();
    for from in 0..config.station_count() {
        let mut at = from;
        while let Some(next) = successor[at] {
            linked.insert((from, next));
            at = next;
        }
    }
    Ok(linked)
}

/// Undirected simple graph on the stations with one edge per car.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StationGraph {
    pub vertex_count: usize,
    /// `(lo, hi)` edges, sorted.
    pub edges: Vec<(Station, Station)>,
}

impl StationGraph {
    fn union_find(&self) -> UnionFind {
        let mut uf = UnionFind::new(self.vertex_count);
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        uf
    }

    /// Component label of every station, numbered by smallest member.
    pub fn component_labels(&self) -> Vec<usize> {
        self.union_find().labels()
    }

    pub fn components(&self) -> Vec<Vec<Station>> {
        self.union_find().groups()
    }

    pub fn component_count(&self) -> usize {
        self.union_find().set_count()
    }

    /// All `(lo, hi)` station pairs sharing a component.
    pub fn same_component_pairs(&self) -> BTreeSet<(Station, Station)> {
        let mut pairs = BTreeSet::new();
        for group in self.components() {
            for (i, &lo) in group.iter().enumerate() {
                for &hi in &group[i + 1..] {
                    pairs.insert((lo, hi));
                }
            }
        }
        pairs
    }

    /// The unique path from `from` to `to`, endpoints included.
    pub fn path(&self, from: Station, to: Station) -> Option<Vec<Station>> {
        let mut adjacency = vec![Vec::new(); self.vertex_count];
        for &(a, b) in &self.edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let mut parent = vec![usize::MAX; self.vertex_count];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for &w in &adjacency[v] {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if parent[to] == usize::MAX {
            return None;
        }
        let mut path = vec![to];
        let mut at = to;
        while at != from {
            at = parent[at];
            path.push(at);
        }
        path.reverse();
        Some(path)
    }
}

/// Builds the station graph, asserting that it is a forest.
pub fn station_graph(config: &CableCarConfig) -> Result<StationGraph> {
    ensure_valid(config)?;
    let mut uf = UnionFind::new(config.station_count());
    let mut edges = Vec::with_capacity(config.cars.len());
    for &(start, finish) in &config.cars {
        if !uf.union(start, finish) {
            return Err(Error::Contract(format!(
                "car ({start}, {finish}) closes a cycle in the station graph"
            )));
        }
        edges.push((start.min(finish), start.max(finish)));
    }
    edges.sort_unstable();
    Ok(StationGraph {
        vertex_count: config.station_count(),
        edges,
    })
}

/// The two `n² − n`-car configurations with no commonly linked pair:
/// company A chains each residue class mod `n`, company B chains each block
/// of `n` consecutive stations.
pub fn extremal_construction(n: usize) -> Result<(CableCarConfig, CableCarConfig)> {
    if n <= 1 {
        return Err(Error::Domain(format!("n = {n} must exceed 1")));
    }
    let mut a: Vec<(Station, Station)> = (0..n)
        .flat_map(|i| (0..n - 1).map(move |j| (i + j * n, i + (j + 1) * n)))
        .collect();
    let mut b: Vec<(Station, Station)> = (0..n)
        .flat_map(|i| (0..n - 1).map(move |j| (n * i + j, n * i + j + 1)))
        .collect();
    a.sort_unstable();
    b.sort_unstable();
    Ok((CableCarConfig { n, cars: a }, CableCarConfig { n, cars: b }))
}

/// A pair of stations linked by both companies, if any.
///
/// Each station is keyed by its (A-component, B-component) pair; two stations
/// with equal keys are linked by both. Returns the lexicographically smallest
/// such pair.
pub fn find_common_linked(
    a: &CableCarConfig,
    b: &CableCarConfig,
) -> Result<Option<(Station, Station)>> {
    if a.n != b.n {
        return Err(Error::Validation(format!(
            "configurations disagree on n: {} vs {}",
            a.n, b.n
        )));
    }
    let labels_a = station_graph(a)?.component_labels();
    let labels_b = station_graph(b)?.component_labels();
    let mut groups: HashMap<(usize, usize), (Station, Option<Station>)> = HashMap::new();
    for station in 0..a.station_count() {
        groups
            .entry((labels_a[station], labels_b[station]))
            .and_modify(|(_, second)| {
                second.get_or_insert(station);
            })
            .or_insert((station, None));
    }
    Ok(groups
        .into_values()
        .filter_map(|(first, second)| second.map(|s| (first, s)))
        .min())
}

/// Uniformly chooses `k` starts and `k` finishes, pairs them in sorted order
/// and rejects draws where some start is not below its finish.
pub fn random_config<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<CableCarConfig> {
    if n <= 1 {
        return Err(Error::Domain(format!("n = {n} must exceed 1")));
    }
    let stations = n * n;
    if k >= stations {
        return Err(Error::Domain(format!(
            "k = {k} cars cannot have distinct starts below the top of {stations} stations"
        )));
    }
    for _ in 0..RANDOM_CONFIG_ATTEMPTS {
        let mut starts = index::sample(rng, stations - 1, k).into_vec();
        let mut finishes: Vec<Station> = index::sample(rng, stations - 1, k)
            .into_iter()
            .map(|f| f + 1)
            .collect();
        starts.sort_unstable();
        finishes.sort_unstable();
        if starts.iter().zip(&finishes).all(|(s, f)| s < f) {
            return Ok(CableCarConfig {
                n,
                cars: starts.into_iter().zip(finishes).collect(),
            });
        }
    }
    Err(Error::Generation(format!(
        "no valid {k}-car configuration found for n = {n} after {RANDOM_CONFIG_ATTEMPTS} draws"
    )))
}

/// Every valid `k`-car configuration on `n²` stations. An order-preserving
/// configuration is determined by its start set and finish set.
pub fn all_configs(n: usize, k: usize) -> Vec<CableCarConfig> {
    let stations = n * n;
    let subsets = k_subsets(stations, k);
    let mut out = Vec::new();
    for starts in &subsets {
        for finishes in &subsets {
            if starts.iter().zip(finishes).all(|(s, f)| s < f) {
                out.push(CableCarConfig {
                    n,
                    cars: starts
                        .iter()
                        .copied()
                        .zip(finishes.iter().copied())
                        .collect(),
                });
            }
        }
    }
    out
}

fn k_subsets(size: usize, k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << size)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..size).filter(|&i| (m >> i) & 1 == 1).collect())
        .collect()
}

/// For `n = 2`, a pair of valid `k`-car configurations with no common linked
/// pair, or `None` if every pair shares one. Uses [`linked_pairs`] directly.
pub fn counterexample_at(n: usize, k: usize) -> Result<Option<(CableCarConfig, CableCarConfig)>> {
    if n != 2 {
        return Err(Error::Refused {
            param: "n",
            reason: format!("= {n}: exhaustive search is limited to n = 2"),
        });
    }
    let configs = all_configs(n, k);
    let linked: Vec<BTreeSet<(Station, Station)>> =
        configs.iter().map(linked_pairs).collect::<Result<_>>()?;
    for (i, la) in linked.iter().enumerate() {
        for (j, lb) in linked.iter().enumerate() {
            if la.is_disjoint(lb) {
                return Ok(Some((configs[i].clone(), configs[j].clone())));
            }
        }
    }
    Ok(None)
}

/// Smallest `k` for which every pair of valid `k`-car configurations has a
/// commonly linked pair, by exhaustive enumeration.
pub fn brute_force_min_k(n: usize) -> Result<usize> {
    if n != 2 {
        return Err(Error::Refused {
            param: "n",
            reason: format!("= {n}: exhaustive search is limited to n = 2"),
        });
    }
    for k in 1..n * n {
        if counterexample_at(n, k)?.is_none() {
            return Ok(k);
        }
    }
    Err(Error::TheoremViolation(format!(
        "no car count below {} guarantees a common linked pair",
        n * n
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeded_rng;

    fn cfg(n: usize, cars: &[(usize, usize)]) -> CableCarConfig {
        CableCarConfig {
            n,
            cars: cars.to_vec(),
        }
    }

    #[test]
    fn validation() {
        assert!(validate_config(&cfg(2, &[(0, 2), (1, 3)])).is_empty());
        assert!(validate_config(&cfg(2, &[(0, 2), (1, 1)])).contains(
            &ConfigViolation::NotAscending {
                car: 1,
                start: 1,
                finish: 1
            }
        ));
        assert_eq!(
            validate_config(&cfg(2, &[(0, 3), (1, 2)])),
            vec![ConfigViolation::OrderReversed {
                lower: (0, 3),
                higher: (1, 2)
            }]
        );
        let v = validate_config(&cfg(1, &[(0, 1), (0, 4)]));
        assert!(v.contains(&ConfigViolation::NTooSmall { n: 1 }));
        assert!(v.contains(&ConfigViolation::DuplicateStart { station: 0 }));
        assert!(v.contains(&ConfigViolation::StationOutOfRange { car: 1, station: 4 }));
    }

    #[test]
    fn linked_examples() {
        assert_eq!(
            linked_pairs(&cfg(2, &[(0, 1)])).unwrap(),
            BTreeSet::from([(0, 1)])
        );
        assert_eq!(
            linked_pairs(&cfg(2, &[(0, 1), (1, 2)])).unwrap(),
            BTreeSet::from([(0, 1), (1, 2), (0, 2)])
        );
        let (a, _) = extremal_construction(4).unwrap();
        let linked = linked_pairs(&a).unwrap();
        assert_eq!(linked.len(), 24);
        assert!(linked.iter().all(|&(lo, hi)| (hi - lo) % 4 == 0));
        assert!(linked_pairs(&cfg(2, &[(1, 0)])).is_err());
    }

    #[test]
    fn station_graph_examples() {
        let g = station_graph(&cfg(2, &[(0, 2), (1, 3)])).unwrap();
        assert_eq!(g.edges, vec![(0, 2), (1, 3)]);
        assert_eq!(g.components(), vec![vec![0, 2], vec![1, 3]]);

        let g = station_graph(&cfg(2, &[(0, 1), (1, 2), (2, 3)])).unwrap();
        assert_eq!(g.component_count(), 1);
        assert_eq!(g.path(0, 3), Some(vec![0, 1, 2, 3]));

        let (a, _) = extremal_construction(3).unwrap();
        let g = station_graph(&a).unwrap();
        assert_eq!(
            g.components(),
            vec![vec![0, 3, 6], vec![1, 4, 7], vec![2, 5, 8]]
        );
        assert_eq!(g.edges.len(), 6);
    }

    #[test]
    fn extremal_small_cases() {
        let (a, b) = extremal_construction(2).unwrap();
        assert_eq!(a.cars, vec![(0, 2), (1, 3)]);
        assert_eq!(b.cars, vec![(0, 1), (2, 3)]);
        assert_eq!(find_common_linked(&a, &b).unwrap(), None);
        for n in [4, 10] {
            let (a, b) = extremal_construction(n).unwrap();
            assert_eq!(a.car_count(), n * n - n);
            assert_eq!(b.car_count(), n * n - n);
            assert!(linked_pairs(&a)
                .unwrap()
                .is_disjoint(&linked_pairs(&b).unwrap()));
        }
        assert!(matches!(extremal_construction(1), Err(Error::Domain(_))));
    }

    #[test]
    fn common_link_on_full_chain() {
        let chain = cfg(2, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(all_configs(2, 3), vec![chain.clone()]);
        assert_eq!(find_common_linked(&chain, &chain).unwrap(), Some((0, 1)));
        let other = cfg(3, &[(0, 1)]);
        assert!(find_common_linked(&chain, &other).is_err());
    }

    #[test]
    fn common_link_is_lexicographically_smallest() {
        // Shared classes are {0, 8} and {2, 6}; a scan by ascending station
        // meets (2, 6) first.
        let a = cfg(3, &[(0, 4), (2, 6), (4, 8)]);
        let b = cfg(3, &[(0, 3), (2, 6), (3, 8)]);
        assert_eq!(find_common_linked(&a, &b).unwrap(), Some((0, 8)));
    }

    #[test]
    fn brute_force_answer_for_two() {
        assert_eq!(brute_force_min_k(2).unwrap(), 3);
        let (a, b) = counterexample_at(2, 2).unwrap().unwrap();
        assert!(linked_pairs(&a)
            .unwrap()
            .is_disjoint(&linked_pairs(&b).unwrap()));
        assert!(counterexample_at(2, 3).unwrap().is_none());
        assert!(matches!(
            brute_force_min_k(3),
            Err(Error::Refused { param: "n", .. })
        ));
    }

    #[test]
    fn random_configs_are_valid() {
        let mut rng = seeded_rng(3);
        for n in 2..=5 {
            for k in 1..n * n {
                let c = random_config(n, k, &mut rng).unwrap();
                assert_eq!(c.car_count(), k);
                assert!(validate_config(&c).is_empty(), "{c:?}");
            }
        }
        assert!(random_config(2, 4, &mut rng).is_err());
    }
}
