//! Directed communication topologies.
//!
//! A [`Digraph`] stores, for each node, its set of in-neighbors (senders).
//! Self-loops are always present: every node hears its own state. Nodes are
//! dense `0..n` indices; the index doubles as the unique agent identifier
//! that FROZEN's canonical-basis initialization requires.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rng::{component_rng, pair_seed, split_mix64, Component};
use crate::Result;

/// Directed graph given by in-neighbor adjacency.
///
/// Invariants maintained by all constructors: every neighbor list is sorted,
/// deduplicated, in range, and contains the node itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digraph {
    n: usize,
    in_neighbors: Vec<Vec<usize>>,
}

impl Digraph {
    /// Build a digraph from in-neighbor lists, normalizing and validating
    /// them. Self-loops are added if missing.
    pub fn from_in_neighbors(n: usize, in_neighbors: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Structure("node count must be at least 1".into()));
        }
        if in_neighbors.len() != n {
            return Err(Error::Structure(format!(
                "expected {n} in-neighbor lists, got {}",
                in_neighbors.len()
            )));
        }
        let mut lists = in_neighbors;
        for (i, list) in lists.iter_mut().enumerate() {
            if let Some(&bad) = list.iter().find(|&&j| j >= n) {
                return Err(Error::Structure(format!(
                    "in-neighbor {bad} of node {i} is out of range for n={n}"
                )));
            }
            list.push(i);
            list.sort_unstable();
            list.dedup();
        }
        Ok(Digraph {
            n,
            in_neighbors: lists,
        })
    }

    /// Number of nodes.
    pub fn n(&self) -> usize {
        self.n
    }

    /// In-neighbors of node `i`, self-loop included.
    pub fn in_neighbors(&self, i: usize) -> &[usize] {
        &self.in_neighbors[i]
    }

    /// In-degree of node `i`, self-loop included.
    pub fn in_degree(&self, i: usize) -> usize {
        self.in_neighbors[i].len()
    }

    /// Out-degree of node `i`, self-loop included. Computed by transposing
    /// the stored in-adjacency.
    pub fn out_degree(&self, i: usize) -> Result<usize> {
        if i >= self.n {
            return Err(Error::Structure(format!(
                "node {i} out of range for n={}",
                self.n
            )));
        }
        Ok(self.out_degrees()[i])
    }

    /// Out-degrees of all nodes in one transposition pass.
    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for list in &self.in_neighbors {
            for &j in list {
                deg[j] += 1;
            }
        }
        deg
    }

    /// Out-neighbor lists (transpose of the in-adjacency), sorted.
    pub fn out_neighbors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n];
        for (i, list) in self.in_neighbors.iter().enumerate() {
            for &j in list {
                out[j].push(i);
            }
        }
        out
    }

    /// Total number of directed edges, self-loops included.
    pub fn edge_count(&self) -> usize {
        self.in_neighbors.iter().map(Vec::len).sum()
    }

    /// True iff `j -> i` is an edge.
    pub fn has_edge(&self, j: usize, i: usize) -> bool {
        self.in_neighbors[i].binary_search(&j).is_ok()
    }

    /// Serialize as the `{"n": .., "in_neighbors": [[..], ..]}` JSON object
    /// used in run configs.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("digraph serialization cannot fail")
    }

    /// Parse the JSON form produced by [`Digraph::to_json`], re-validating.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Digraph = serde_json::from_str(text)?;
        Digraph::from_in_neighbors(raw.n, raw.in_neighbors)
    }
}

/// True iff every node reaches every other node along directed paths.
///
/// Forward BFS over out-edges plus backward BFS over in-edges from node 0;
/// both must cover the graph. O(n + |E|).
pub fn is_strongly_connected(g: &Digraph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let out = g.out_neighbors();
    reaches_all(&out, n) && reaches_all(&g.in_neighbors, n)
}

fn reaches_all(adj: &[Vec<usize>], n: usize) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == n
}

/// Generate a strongly-connected geometric digraph on `n` nodes.
///
/// Nodes are placed uniformly at random in the unit square and every pair
/// closer than `radius` is linked. Each linked pair is then independently
/// pruned to a single (random) direction with probability 1/2, which makes
/// the graph genuinely directed and unbalanced. Self-loops are always added.
/// If the result is not strongly connected, the edges of a random
/// Hamiltonian cycle are inserted, which guarantees strong connectivity
/// without rejection sampling.
///
/// Deterministic for a fixed `(n, radius, seed)`. For a fixed seed the edge
/// set grows monotonically with `radius` because pruning decisions are keyed
/// per pair (see [`crate::rng::pair_seed`]).
pub fn generate_nearest_neighbor_digraph(n: usize, radius: f64, seed: u64) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::Parameter("node count must be at least 1".into()));
    }
    if !(radius > 0.0 && radius <= f64::sqrt(2.0)) {
        return Err(Error::Parameter(format!(
            "radius must lie in (0, sqrt(2)], got {radius}"
        )));
    }

    let mut layout_rng = component_rng(seed, Component::GraphLayout);
    let positions: Vec<(f64, f64)> = (0..n)
        .map(|_| (layout_rng.gen::<f64>(), layout_rng.gen::<f64>()))
        .collect();

    let mut in_neighbors: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            let (xi, yi) = positions[i];
            let (xj, yj) = positions[j];
            let dist = ((xi - xj).powi(2) + (yi - yj).powi(2)).sqrt();
            if dist >= radius {
                continue;
            }
            let mut pair_rng = ChaCha8Rng::seed_from_u64(pair_seed(seed, i, j));
            let prune = pair_rng.gen_bool(0.5);
            if prune {
                if pair_rng.gen_bool(0.5) {
                    in_neighbors[j].push(i); // keep i -> j
                } else {
                    in_neighbors[i].push(j); // keep j -> i
                }
            } else {
                in_neighbors[j].push(i);
                in_neighbors[i].push(j);
            }
        }
    }

    let mut g = Digraph::from_in_neighbors(n, in_neighbors)?;
    if !is_strongly_connected(&g) {
        let mut repair_rng = component_rng(seed, Component::GraphRepair);
        let cycle = random_permutation(n, &mut repair_rng);
        let mut lists = g.in_neighbors;
        for w in 0..n {
            let from = cycle[w];
            let to = cycle[(w + 1) % n];
            lists[to].push(from);
        }
        g = Digraph::from_in_neighbors(n, lists)?;
        debug_assert!(is_strongly_connected(&g));
    }
    Ok(g)
}

fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    // Fisher-Yates, seeded.
    for k in (1..n).rev() {
        let idx = (rng.gen::<u64>() % (k as u64 + 1)) as usize;
        perm.swap(k, idx);
    }
    perm
}

/// Directed cycle `0 -> 1 -> ... -> n-1 -> 0` with self-loops. Handy test
/// topology: strongly connected but slow-mixing.
pub fn directed_cycle(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::Parameter("node count must be at least 1".into()));
    }
    let in_neighbors = (0..n).map(|i| vec![(i + n - 1) % n]).collect();
    Digraph::from_in_neighbors(n, in_neighbors)
}

/// Bidirectional ring with self-loops: every node hears both neighbors.
/// Symmetric and degree-regular, so uniform weights are doubly stochastic.
pub fn bidirectional_ring(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::Parameter("node count must be at least 1".into()));
    }
    let in_neighbors = (0..n)
        .map(|i| vec![(i + n - 1) % n, (i + 1) % n])
        .collect();
    Digraph::from_in_neighbors(n, in_neighbors)
}

/// Complete digraph with self-loops.
pub fn complete(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::Parameter("node count must be at least 1".into()));
    }
    let all: Vec<usize> = (0..n).collect();
    Digraph::from_in_neighbors(n, vec![all; n])
}

/// Seeded random strongly-connected digraph used by the invariant suites:
/// geometric generation at a density appropriate for the size, so the suite
/// exercises organically connected graphs rather than repair cycles.
pub fn suite_digraph(n: usize, seed: u64) -> Result<Digraph> {
    let radius = match n {
        0..=6 => 0.95,
        7..=15 => 0.75,
        _ => 0.55,
    };
    generate_nearest_neighbor_digraph(n, radius, seed)
}

/// Deterministic scramble of a suite seed so different suites do not share
/// graphs.
pub fn suite_seed(base: u64, index: u64) -> u64 {
    let mut state = base ^ index.wrapping_mul(0x2545_F491_4F6C_DD1D);
    split_mix64(&mut state)
}
