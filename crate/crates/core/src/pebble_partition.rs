//! Equal-weight, color-balanced split of `4n` pebbles.
//!
//! Pebble `w` (weights `1..=4n`) is paired with `4n + 1 − w`, so every pair
//! weighs `4n + 1` and any split of whole pairs into two groups of `n` has
//! equal sums. Each pair becomes an edge between the colors of its two
//! pebbles; the resulting multigraph is 4-regular, so every component has an
//! Eulerian circuit of even length. Alternately assigning circuit edges to the
//! two piles puts exactly two pebbles of every color in each pile.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::union_find::UnionFind;
use crate::{Error, Result};

/// Largest `n` accepted by [`brute_force_partition`].
pub const BRUTE_FORCE_MAX_N: usize = 4;

/// Color of every pebble, indexed by `weight − 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawColoring", into = "RawColoring")]
pub struct PebbleColoring {
    n: usize,
    color_of: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawColoring {
    n: usize,
    color_of: Vec<usize>,
}

impl TryFrom<RawColoring> for PebbleColoring {
    type Error = Error;

    fn try_from(raw: RawColoring) -> Result<Self> {
        PebbleColoring::new(raw.n, raw.color_of)
    }
}

impl From<PebbleColoring> for RawColoring {
    fn from(c: PebbleColoring) -> Self {
        RawColoring {
            n: c.n,
            color_of: c.color_of,
        }
    }
}

impl PebbleColoring {
    pub fn new(n: usize, color_of: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Validation("n must be at least 1".into()));
        }
        if color_of.len() != 4 * n {
            return Err(Error::Validation(format!(
                "color_of has {} entries, expected 4n = {}",
                color_of.len(),
                4 * n
            )));
        }
        let mut counts = vec![0usize; n];
        for (i, &c) in color_of.iter().enumerate() {
            if c >= n {
                return Err(Error::Validation(format!(
                    "color_of[{i}] = {c} is not a color in 0..{n}"
                )));
            }
            counts[c] += 1;
        }
        if let Some((c, &k)) = counts.iter().enumerate().find(|(_, &k)| k != 4) {
            return Err(Error::Validation(format!(
                "color {c} is used by {k} pebbles, expected 4"
            )));
        }
        Ok(PebbleColoring { n, color_of })
    }

    /// Builds a coloring from the weights of each color class.
    pub fn from_classes(classes: &[Vec<usize>]) -> Result<Self> {
        let n = classes.len();
        let mut color_of = vec![usize::MAX; 4 * n];
        for (c, class) in classes.iter().enumerate() {
            for &w in class {
                if w == 0 || w > 4 * n || color_of[w - 1] != usize::MAX {
                    return Err(Error::Validation(format!(
                        "weight {w} is out of range or listed twice"
                    )));
                }
                color_of[w - 1] = c;
            }
        }
        PebbleColoring::new(n, color_of)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn color_of(&self) -> &[usize] {
        &self.color_of
    }

    /// Color of the pebble with the given weight (`1..=4n`).
    pub fn color(&self, weight: usize) -> usize {
        self.color_of[weight - 1]
    }

    pub fn pebble_count(&self) -> usize {
        4 * self.n
    }

    /// The two weights of pair `pair` (`0..2n`): `(pair + 1, 4n − pair)`.
    pub fn pair_weights(&self, pair: usize) -> (usize, usize) {
        (pair + 1, 4 * self.n - pair)
    }
}

/// Uniformly random coloring with four pebbles per color.
pub fn random_coloring<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PebbleColoring {
    let mut color_of: Vec<usize> = (0..4 * n).map(|i| i / 4).collect();
    color_of.shuffle(rng);
    PebbleColoring { n, color_of }
}

/// Every coloring for `n` up to relabeling of the colors: color labels appear
/// in order of first use along the weights.
pub fn enumerate_colorings(n: usize) -> Vec<PebbleColoring> {
    fn extend(
        n: usize,
        color_of: &mut Vec<usize>,
        counts: &mut Vec<usize>,
        used: usize,
        out: &mut Vec<PebbleColoring>,
    ) {
        if color_of.len() == 4 * n {
            out.push(PebbleColoring {
                n,
                color_of: color_of.clone(),
            });
            return;
        }
        let limit = (used + 1).min(n);
        for c in 0..limit {
            if counts[c] == 4 {
                continue;
            }
            counts[c] += 1;
            color_of.push(c);
            extend(n, color_of, counts, used.max(c + 1), out);
            color_of.pop();
            counts[c] -= 1;
        }
    }

    let mut out = Vec::new();
    if n > 0 {
        extend(n, &mut Vec::new(), &mut vec![0; n], 0, &mut out);
    }
    out
}

/// One weight pair as an edge between the colors of its pebbles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEdge {
    pub u: usize,
    pub v: usize,
    /// Pair `p` holds weights `p + 1` and `4n − p`.
    pub pair: usize,
}

impl PairEdge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint opposite `x`.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// Multigraph on colors with one edge per weight pair. Edge id equals pair id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairMultigraph {
    pub vertex_count: usize,
    pub edges: Vec<PairEdge>,
}

impl PairMultigraph {
    /// Degree of `v`, a loop counting twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.u == v) + usize::from(e.v == v))
            .sum()
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.vertex_count);
        for e in &self.edges {
            uf.union(e.u, e.v);
        }
        uf.groups()
    }

    /// Ids of edges with both endpoints in `vertices`.
    fn edges_within(&self, vertices: &BTreeSet<usize>) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&id| {
                vertices.contains(&self.edges[id].u) && vertices.contains(&self.edges[id].v)
            })
            .collect()
    }
}

pub fn build_pair_multigraph(coloring: &PebbleColoring) -> PairMultigraph {
    let n = coloring.n();
    let edges = (0..2 * n)
        .map(|pair| {
            let (lo, hi) = coloring.pair_weights(pair);
            PairEdge {
                u: coloring.color(lo),
                v: coloring.color(hi),
                pair,
            }
        })
        .collect();
    PairMultigraph {
        vertex_count: n,
        edges,
    }
}

/// Eulerian circuit of the component spanned by `component`, as edge ids in
/// traversal order.
///
/// Starts at the lowest vertex and always leaves along the lowest unused
/// edge id. A loop is a single step. Fails with [`Error::Contract`] if the
/// vertex set is not one connected component or has a vertex of odd degree.
pub fn eulerian_circuit(graph: &PairMultigraph, component: &[usize]) -> Result<Vec<usize>> {
    let vertices: BTreeSet<usize> = component.iter().copied().collect();
    if let Some(&v) = vertices.iter().find(|&&v| v >= graph.vertex_count) {
        return Err(Error::Contract(format!("vertex {v} is not in the graph")));
    }
    if graph
        .edges
        .iter()
        .any(|e| vertices.contains(&e.u) != vertices.contains(&e.v))
    {
        return Err(Error::Contract(
            "vertex set has edges leaving it; it is not a connected component".into(),
        ));
    }
    let edge_ids = graph.edges_within(&vertices);
    let Some(&start) = vertices.iter().next() else {
        return Ok(Vec::new());
    };

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); graph.vertex_count];
    let mut uf = UnionFind::new(graph.vertex_count);
    for &id in &edge_ids {
        let e = graph.edges[id];
        incident[e.u].push(id);
        if !e.is_loop() {
            incident[e.v].push(id);
        }
        uf.union(e.u, e.v);
    }
    for &v in &vertices {
        let degree = graph.degree(v);
        if !degree.is_multiple_of(2) {
            return Err(Error::Contract(format!(
                "vertex {v} has odd degree {degree}"
            )));
        }
        if !uf.same(start, v) {
            return Err(Error::Contract(format!(
                "vertices {start} and {v} are not connected"
            )));
        }
    }

    let mut used = vec![false; graph.edges.len()];
    let mut cursor = vec![0usize; graph.vertex_count];
    let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
    let mut circuit = Vec::with_capacity(edge_ids.len());
    while let Some(&(v, _)) = stack.last() {
        while cursor[v] < incident[v].len() && used[incident[v][cursor[v]]] {
            cursor[v] += 1;
        }
        if let Some(&id) = incident[v].get(cursor[v]) {
            used[id] = true;
            stack.push((graph.edges[id].other(v), Some(id)));
        } else {
            let (_, via) = stack.pop().expect("stack is non-empty");
            if let Some(id) = via {
                circuit.push(id);
            }
        }
    }
    circuit.reverse();

    if circuit.len() != edge_ids.len() {
        return Err(Error::Contract(format!(
            "circuit covers {} of {} edges",
            circuit.len(),
            edge_ids.len()
        )));
    }
    Ok(circuit)
}

/// Checks that `circuit` is a closed walk using each edge of `edge_ids` once.
pub fn is_eulerian_circuit(graph: &PairMultigraph, edge_ids: &[usize], circuit: &[usize]) -> bool {
    let mut expected: Vec<usize> = edge_ids.to_vec();
    let mut got: Vec<usize> = circuit.to_vec();
    expected.sort_unstable();
    got.sort_unstable();
    if expected != got {
        return false;
    }
    let Some(&first) = circuit.first() else {
        return true;
    };
    // Try both orientations of the first edge as the starting vertex.
    [graph.edges[first].u, graph.edges[first].v]
        .into_iter()
        .any(|start| {
            let mut at = start;
            for &id in circuit {
                let e = graph.edges[id];
                if e.u == at {
                    at = e.v;
                } else if e.v == at {
                    at = e.u;
                } else {
                    return false;
                }
            }
            at == start
        })
}

/// Which pile each pair goes to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pile {
    A,
    B,
}

/// Two piles of pebble weights, each sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub pile_a: Vec<usize>,
    pub pile_b: Vec<usize>,
}

impl Partition {
    /// Builds the partition from a pile assignment of every pair, flipping
    /// it if needed so the pair holding weight 1 lands in pile A.
    pub fn from_pair_piles(coloring: &PebbleColoring, piles: &[Pile]) -> Self {
        let flip = piles.first() == Some(&Pile::B);
        let mut pile_a = Vec::new();
        let mut pile_b = Vec::new();
        for (pair, &pile) in piles.iter().enumerate() {
            let (lo, hi) = coloring.pair_weights(pair);
            let target = if (pile == Pile::A) != flip {
                &mut pile_a
            } else {
                &mut pile_b
            };
            target.extend([lo, hi]);
        }
        pile_a.sort_unstable();
        pile_b.sort_unstable();
        Partition { pile_a, pile_b }
    }
}

/// Per-color count of edge endpoints placed in each pile.
pub fn endpoint_balance(graph: &PairMultigraph, piles: &[Pile]) -> Vec<(usize, usize)> {
    let mut balance = vec![(0, 0); graph.vertex_count];
    for (e, &pile) in graph.edges.iter().zip(piles) {
        for x in [e.u, e.v] {
            match pile {
                Pile::A => balance[x].0 += 1,
                Pile::B => balance[x].1 += 1,
            }
        }
    }
    balance
}

/// Splits the pebbles by alternately coloring Eulerian circuits of the pair
/// multigraph.
pub fn partition_pebbles(coloring: &PebbleColoring) -> Result<Partition> {
    let graph = build_pair_multigraph(coloring);
    let mut piles: Vec<Option<Pile>> = vec![None; graph.edges.len()];
    for component in graph.components() {
        let circuit = eulerian_circuit(&graph, &component)?;
        if circuit.len() % 2 != 0 {
            return Err(Error::Contract(format!(
                "component {component:?} has an odd number of edges ({})",
                circuit.len()
            )));
        }
        for (step, &id) in circuit.iter().enumerate() {
            piles[id] = Some(if step % 2 == 0 { Pile::A } else { Pile::B });
        }
    }
    let piles: Vec<Pile> = piles
        .into_iter()
        .enumerate()
        .map(|(id, p)| p.ok_or_else(|| Error::Contract(format!("edge {id} was never colored"))))
        .collect::<Result<_>>()?;
    if let Some((color, counts)) = endpoint_balance(&graph, &piles)
        .into_iter()
        .enumerate()
        .find(|(_, counts)| *counts != (2, 2))
    {
        return Err(Error::Contract(format!(
            "alternation left color {color} with endpoint split {counts:?}"
        )));
    }
    Ok(Partition::from_pair_piles(coloring, &piles))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PartitionViolation {
    PileSize {
        pile: char,
        len: usize,
        expected: usize,
    },
    OutOfRange {
        weight: usize,
    },
    Duplicate {
        weight: usize,
    },
    Missing {
        weight: usize,
    },
    UnequalSums {
        sum_a: usize,
        sum_b: usize,
    },
    ColorImbalance {
        pile: char,
        color: usize,
        count: usize,
    },
}

impl fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::PileSize {
                pile,
                len,
                expected,
            } => {
                write!(f, "pile {pile} has {len} pebbles, expected {expected}")
            }
            Self::OutOfRange { weight } => write!(f, "weight {weight} is out of range"),
            Self::Duplicate { weight } => write!(f, "weight {weight} appears more than once"),
            Self::Missing { weight } => write!(f, "weight {weight} is in neither pile"),
            Self::UnequalSums { sum_a, sum_b } => write!(f, "pile sums differ: {sum_a} != {sum_b}"),
            Self::ColorImbalance { pile, color, count } => {
                write!(
                    f,
                    "pile {pile} has {count} pebbles of color {color}, expected 2"
                )
            }
        }
    }
}

/// Every failed partition invariant; empty means the partition is valid.
pub fn verify_partition(
    coloring: &PebbleColoring,
    partition: &Partition,
) -> Vec<PartitionViolation> {
    let n = coloring.n();
    let total = 4 * n;
    let mut violations = Vec::new();
    let mut seen = vec![false; total + 1];
    let piles = [('A', &partition.pile_a), ('B', &partition.pile_b)];

    for (name, pile) in piles {
        if pile.len() != 2 * n {
            violations.push(PartitionViolation::PileSize {
                pile: name,
                len: pile.len(),
                expected: 2 * n,
            });
        }
    }
    for (_, pile) in piles {
        for &w in pile.iter() {
            if w == 0 || w > total {
                violations.push(PartitionViolation::OutOfRange { weight: w });
            } else if seen[w] {
                violations.push(PartitionViolation::Duplicate { weight: w });
            } else {
                seen[w] = true;
            }
        }
    }
    violations.extend(
        (1..=total)
            .filter(|&w| !seen[w])
            .map(|weight| PartitionViolation::Missing { weight }),
    );

    let sum_a: usize = partition.pile_a.iter().sum();
    let sum_b: usize = partition.pile_b.iter().sum();
    if sum_a != sum_b {
        violations.push(PartitionViolation::UnequalSums { sum_a, sum_b });
    }

    for (name, pile) in piles {
        let mut counts = vec![0usize; n];
        for &w in pile.iter().filter(|&&w| w >= 1 && w <= total) {
            counts[coloring.color(w)] += 1;
        }
        violations.extend(
            counts
                .into_iter()
                .enumerate()
                .filter(|&(_, count)| count != 2)
                .map(|(color, count)| PartitionViolation::ColorImbalance {
                    pile: name,
                    color,
                    count,
                }),
        );
    }
    violations
}

/// Exhaustive search over pair-to-pile assignments (`2^(2n)` states).
///
/// Returns the assignment with the smallest bitmask (bit `p` set means pair
/// `p` goes to pile B) among those keeping pair 0 in pile A.
pub fn brute_force_partition(coloring: &PebbleColoring) -> Result<Partition> {
    let n = coloring.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::Refused {
            param: "n",
            reason: format!("= {n} exceeds the brute-force limit {BRUTE_FORCE_MAX_N}"),
        });
    }
    let pairs = 2 * n;
    for mask in 0u32..(1 << pairs) {
        if mask & 1 != 0 || mask.count_ones() as usize != n {
            continue;
        }
        let mut counts = vec![[0u8; 2]; n];
        for pair in 0..pairs {
            let side = ((mask >> pair) & 1) as usize;
            let (lo, hi) = coloring.pair_weights(pair);
            counts[coloring.color(lo)][side] += 1;
            counts[coloring.color(hi)][side] += 1;
        }
        if counts.iter().all(|c| *c == [2, 2]) {
            let piles: Vec<Pile> = (0..pairs)
                .map(|p| {
                    if (mask >> p) & 1 == 0 {
                        Pile::A
                    } else {
                        Pile::B
                    }
                })
                .collect();
            return Ok(Partition::from_pair_piles(coloring, &piles));
        }
    }
    Err(Error::TheoremViolation(format!(
        "no pair-respecting balanced partition exists for coloring {:?}",
        coloring.color_of()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeded_rng;

    fn two_color(first: &[usize]) -> PebbleColoring {
        let second: Vec<usize> = (1..=8).filter(|w| !first.contains(w)).collect();
        PebbleColoring::from_classes(&[first.to_vec(), second]).unwrap()
    }

    #[test]
    fn rejects_bad_colorings() {
        assert!(PebbleColoring::new(0, vec![]).is_err());
        assert!(PebbleColoring::new(1, vec![0, 0, 0]).is_err());
        assert!(PebbleColoring::new(2, vec![0, 0, 0, 1, 1, 1, 1, 1]).is_err());
        assert!(PebbleColoring::new(2, vec![0, 0, 0, 0, 1, 1, 1, 2]).is_err());
    }

    #[test]
    fn single_color_gives_two_loops() {
        let c = PebbleColoring::new(1, vec![0; 4]).unwrap();
        let g = build_pair_multigraph(&c);
        assert_eq!(
            g.edges,
            vec![
                PairEdge {
                    u: 0,
                    v: 0,
                    pair: 0
                },
                PairEdge {
                    u: 0,
                    v: 0,
                    pair: 1
                }
            ]
        );
        assert_eq!(g.degree(0), 4);
        assert_eq!(eulerian_circuit(&g, &[0]).unwrap(), vec![0, 1]);
    }

    #[test]
    fn blocks_of_four_give_parallel_edges() {
        let g = build_pair_multigraph(&two_color(&[1, 2, 3, 4]));
        assert_eq!(g.edges.len(), 4);
        assert!(g.edges.iter().all(|e| (e.u, e.v) == (0, 1)));
        let circuit = eulerian_circuit(&g, &[0, 1]).unwrap();
        assert_eq!(circuit, vec![0, 1, 2, 3]);
        assert!(is_eulerian_circuit(&g, &[0, 1, 2, 3], &circuit));
    }

    #[test]
    fn pair_classes_give_loops() {
        let g = build_pair_multigraph(&two_color(&[1, 8, 2, 7]));
        let loops: Vec<(usize, usize)> = g.edges.iter().map(|e| (e.u, e.v)).collect();
        assert_eq!(loops, vec![(0, 0), (0, 0), (1, 1), (1, 1)]);
        assert_eq!(g.components(), vec![vec![0], vec![1]]);
    }

    /// Pebble classes realizing the five-vertex multigraph whose circuit
    /// spells AABCDEBECDA: edge `p` joins the colors of pair `p`.
    fn five_vertex_coloring() -> PebbleColoring {
        let edges = [
            (0, 0),
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (1, 4),
            (4, 2),
            (2, 3),
            (3, 0),
        ];
        let mut color_of = vec![0; 20];
        for (p, &(u, v)) in edges.iter().enumerate() {
            color_of[p] = u;
            color_of[19 - p] = v;
        }
        PebbleColoring::new(5, color_of).unwrap()
    }

    #[test]
    fn five_vertex_circuit() {
        let c = five_vertex_coloring();
        let g = build_pair_multigraph(&c);
        assert!((0..5).all(|v| g.degree(v) == 4));
        let circuit = eulerian_circuit(&g, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(circuit.len(), 10);
        assert!(is_eulerian_circuit(
            &g,
            &(0..10).collect::<Vec<_>>(),
            &circuit
        ));
        // The walk written in the solution is itself a valid circuit.
        assert!(is_eulerian_circuit(
            &g,
            &(0..10).collect::<Vec<_>>(),
            &(0..10).collect::<Vec<_>>()
        ));
        let p = partition_pebbles(&c).unwrap();
        assert!(verify_partition(&c, &p).is_empty());
    }

    #[test]
    fn circuit_rejects_bad_vertex_sets() {
        let g = build_pair_multigraph(&two_color(&[1, 8, 2, 7]));
        assert!(matches!(
            eulerian_circuit(&g, &[0, 1]),
            Err(Error::Contract(_))
        ));
        let g = build_pair_multigraph(&two_color(&[1, 2, 3, 4]));
        assert!(matches!(
            eulerian_circuit(&g, &[0]),
            Err(Error::Contract(_))
        ));
        let odd = PairMultigraph {
            vertex_count: 2,
            edges: vec![PairEdge {
                u: 0,
                v: 1,
                pair: 0,
            }],
        };
        assert!(matches!(
            eulerian_circuit(&odd, &[0, 1]),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn small_partitions() {
        let c = PebbleColoring::new(1, vec![0; 4]).unwrap();
        let p = partition_pebbles(&c).unwrap();
        assert_eq!(
            p,
            Partition {
                pile_a: vec![1, 4],
                pile_b: vec![2, 3]
            }
        );
        assert_eq!(brute_force_partition(&c).unwrap(), p);

        let expected = Partition {
            pile_a: vec![1, 3, 6, 8],
            pile_b: vec![2, 4, 5, 7],
        };
        for first in [[1, 2, 3, 4], [1, 8, 2, 7]] {
            let c = two_color(&first);
            let p = partition_pebbles(&c).unwrap();
            assert_eq!(p, expected);
            assert!(verify_partition(&c, &p).is_empty());
            assert!(verify_partition(&c, &brute_force_partition(&c).unwrap()).is_empty());
        }
    }

    #[test]
    fn verify_reports_violations() {
        let c = two_color(&[1, 2, 3, 4]);
        let v = verify_partition(
            &c,
            &Partition {
                pile_a: vec![1, 2, 3, 4],
                pile_b: vec![5, 6, 7, 8],
            },
        );
        assert!(v.contains(&PartitionViolation::UnequalSums {
            sum_a: 10,
            sum_b: 26
        }));
        assert!(v.contains(&PartitionViolation::ColorImbalance {
            pile: 'A',
            color: 0,
            count: 4
        }));

        let v = verify_partition(
            &c,
            &Partition {
                pile_a: vec![1, 8, 2, 7],
                pile_b: vec![3, 6, 4, 5],
            },
        );
        assert!(v.is_empty(), "{v:?}");

        let v = verify_partition(
            &c,
            &Partition {
                pile_a: vec![1, 1, 9],
                pile_b: vec![2],
            },
        );
        assert!(v.contains(&PartitionViolation::Duplicate { weight: 1 }));
        assert!(v.contains(&PartitionViolation::OutOfRange { weight: 9 }));
        assert!(v.contains(&PartitionViolation::Missing { weight: 8 }));
    }

    #[test]
    fn enumeration_counts() {
        // 8!/(4!·4!)/2 and 12!/(4!³·3!)
        assert_eq!(enumerate_colorings(2).len(), 35);
        assert_eq!(enumerate_colorings(3).len(), 5775);
    }

    #[test]
    fn brute_force_refuses_large_n() {
        let mut rng = seeded_rng(1);
        let c = random_coloring(5, &mut rng);
        assert!(matches!(
            brute_force_partition(&c),
            Err(Error::Refused { param: "n", .. })
        ));
    }

    #[test]
    fn random_colorings_split_cleanly() {
        let mut rng = seeded_rng(7);
        for n in 1..=12 {
            for _ in 0..50 {
                let c = random_coloring(n, &mut rng);
                let p = partition_pebbles(&c).unwrap();
                assert!(verify_partition(&c, &p).is_empty(), "{c:?}");
                assert!(p.pile_a.contains(&1));
            }
        }
    }
}
