//! Lazily revealed stub pairing for degree sequences whose stub total is far
//! beyond anything that can be materialized (the heavy-tail regime can put a
//! constant fraction of ~n^2 stubs on a single node). Pairings are revealed
//! on demand: pairing any chosen free stub with a uniformly random other
//! free stub leaves the unrevealed remainder exchangeable, so every answer
//! is distributed exactly as on a fully built graph.
//!
//! The only supported distance query is the capped one, d(u, v) classified
//! into {0, 1, 2, 3} or "more than 3": enough to resolve ultra-short
//! typical distances, and answerable by revealing only the stubs of a few
//! neighborhoods with early exit as soon as the sides touch.

use crate::error::{Error, Result};
use crate::graph::DegreeSequence;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use std::collections::{BTreeSet, HashMap};

/// Hard cap on reveals per distance query. A query that legitimately needs
/// this many reveals without resolving has probability indistinguishable
/// from zero; hitting the cap therefore signals a bug, loudly.
const REVEAL_BUDGET: u64 = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CappedDistance {
    Exact(u32),
    MoreThanThree,
}

pub struct LazyPairing {
    /// offsets[v]..offsets[v+1] are node v's stubs (odd-sum fix applied).
    offsets: Vec<u64>,
    total: u64,
    paired: HashMap<u64, u64>,
    rng: ChaCha12Rng,
    reveals_this_query: u64,
}

enum EdgeQuery {
    Connected,
    /// No edge; carries the full neighbor set of whichever side was
    /// enumerated (0 = first argument, 1 = second).
    Separate { side: u8, neighbors: BTreeSet<u32> },
}

impl LazyPairing {
    pub fn new(seq: &DegreeSequence, seed: u64) -> Self {
        let mut degrees = seq.degrees().to_vec();
        let total: u64 = degrees.iter().sum();
        if total % 2 == 1 {
            *degrees.last_mut().unwrap() += 1;
        }
        let mut offsets = Vec::with_capacity(degrees.len() + 1);
        let mut acc = 0u64;
        offsets.push(0);
        for &d in &degrees {
            acc += d;
            offsets.push(acc);
        }
        LazyPairing {
            offsets,
            total: acc,
            paired: HashMap::new(),
            rng: ChaCha12Rng::seed_from_u64(seed),
            reveals_this_query: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn stub_count(&self) -> u64 {
        self.total
    }

    pub fn degree(&self, v: u32) -> u64 {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    pub fn node_of_stub(&self, stub: u64) -> u32 {
        debug_assert!(stub < self.total);
        (self.offsets.partition_point(|&o| o <= stub) - 1) as u32
    }

    fn stubs_of(&self, v: u32) -> std::ops::Range<u64> {
        self.offsets[v as usize]..self.offsets[v as usize + 1]
    }

    /// Partner of `stub`, revealing it if necessary.
    fn reveal(&mut self, stub: u64) -> Result<u64> {
        if let Some(&t) = self.paired.get(&stub) {
            return Ok(t);
        }
        self.reveals_this_query += 1;
        if self.reveals_this_query > REVEAL_BUDGET {
            return Err(Error::NonConvergence(
                "reveal budget exhausted in lazy pairing query".into(),
            ));
        }
        // uniform over free stubs other than `stub`; the paired map stays
        // sparse relative to the stub total, so rejection ends quickly
        loop {
            let t = self.rng.gen_range(0..self.total);
            if t != stub && !self.paired.contains_key(&t) {
                self.paired.insert(stub, t);
                self.paired.insert(t, stub);
                return Ok(t);
            }
        }
    }

    fn total_stubs_of(&self, nodes: &BTreeSet<u32>) -> u64 {
        nodes.iter().map(|&v| self.degree(v)).sum()
    }

    /// Is any stub of a `p` node paired with a stub of a `q` node? Sides
    /// must be disjoint. Enumerates the side owning fewer stubs, exiting as
    /// soon as a cross pairing shows up.
    fn edge_query(&mut self, p: &BTreeSet<u32>, q: &BTreeSet<u32>) -> Result<EdgeQuery> {
        debug_assert!(p.iter().all(|v| !q.contains(v)));
        let (nodes, other, side) = if self.total_stubs_of(p) <= self.total_stubs_of(q) {
            (p.clone(), q, 0u8)
        } else {
            (q.clone(), p, 1u8)
        };
        let mut neighbors = BTreeSet::new();
        for &v in &nodes {
            for s in self.stubs_of(v) {
                let t = self.reveal(s)?;
                let w = self.node_of_stub(t);
                if other.contains(&w) {
                    return Ok(EdgeQuery::Connected);
                }
                neighbors.insert(w);
            }
        }
        Ok(EdgeQuery::Separate { side, neighbors })
    }

    /// d(u, v) classified into 0..=3 or "more than three" (which includes
    /// disconnected pairs). Revealed pairings persist across queries, so a
    /// sequence of queries against one LazyPairing explores one graph.
    pub fn distance_capped(&mut self, u: u32, v: u32) -> Result<CappedDistance> {
        for w in [u, v] {
            if w as usize >= self.n() {
                return Err(Error::NodeOutOfRange {
                    node: w as u64,
                    n: self.n(),
                });
            }
        }
        self.reveals_this_query = 0;
        if u == v {
            return Ok(CappedDistance::Exact(0));
        }
        // enumerate the smaller-degree endpoint completely
        let (x, y) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        let mut a_nodes = BTreeSet::new();
        for s in self.stubs_of(x) {
            let t = self.reveal(s)?;
            let w = self.node_of_stub(t);
            if w == y {
                return Ok(CappedDistance::Exact(1));
            }
            a_nodes.insert(w);
        }
        a_nodes.remove(&x); // self-loops lead nowhere new
        if a_nodes.is_empty() {
            return Ok(CappedDistance::MoreThanThree);
        }

        let y_side = BTreeSet::from([y]);
        match self.edge_query(&a_nodes, &y_side)? {
            EdgeQuery::Connected => Ok(CappedDistance::Exact(2)),
            EdgeQuery::Separate { side, neighbors } => {
                // whichever side was enumerated, its neighbor set defines
                // the remaining candidates for a length-3 path
                let mut mid = neighbors;
                mid.remove(&x);
                mid.remove(&y);
                if side == 0 {
                    // enumerated the A side: mid holds nodes at distance 2
                    // from x; nodes already adjacent to x add nothing
                    for a in &a_nodes {
                        mid.remove(a);
                    }
                    if mid.is_empty() {
                        return Ok(CappedDistance::MoreThanThree);
                    }
                    match self.edge_query(&mid, &y_side)? {
                        EdgeQuery::Connected => Ok(CappedDistance::Exact(3)),
                        EdgeQuery::Separate { .. } => Ok(CappedDistance::MoreThanThree),
                    }
                } else {
                    // enumerated y: mid holds y's neighbors; a cross edge
                    // to A closes a length-3 path
                    if mid.is_empty() {
                        return Ok(CappedDistance::MoreThanThree);
                    }
                    match self.edge_query(&a_nodes, &mid)? {
                        EdgeQuery::Connected => Ok(CappedDistance::Exact(3)),
                        EdgeQuery::Separate { .. } => Ok(CappedDistance::MoreThanThree),
                    }
                }
            }
        }
    }

    /// Test hook: wrap an already fully-revealed pairing.
    #[cfg(test)]
    pub(crate) fn from_materialized(g: &crate::graph::Multigraph, seed: u64) -> Self {
        let mut offsets = Vec::with_capacity(g.n() + 1);
        offsets.push(0u64);
        for v in 0..g.n() as u32 {
            offsets.push(offsets.last().unwrap() + g.degree(v) as u64);
        }
        let mut paired = HashMap::new();
        for s in 0..g.stub_count() {
            paired.insert(s, g.partner(s));
        }
        LazyPairing {
            offsets,
            total: g.stub_count(),
            paired,
            rng: ChaCha12Rng::seed_from_u64(seed),
            reveals_this_query: 0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::DegreeLaw;
    use crate::distances::{bfs_distances, UNREACHABLE};
    use crate::graph::build;

    #[test]
    fn capped_distance_matches_bfs_on_materialized_graphs() {
        let laws = [
            DegreeLaw::explicit([(1, 0.4), (2, 0.4), (4, 0.2)]).unwrap(),
            DegreeLaw::pareto(2.5, 1).unwrap(),
            DegreeLaw::degenerate(2).unwrap(),
        ];
        for (li, law) in laws.iter().enumerate() {
            for seed in 0..8u64 {
                let seq = DegreeSequence::sample(law, 40, seed * 31 + li as u64).unwrap();
                let g = build(&seq, seed).unwrap();
                let mut lazy = LazyPairing::from_materialized(&g, 0);
                for u in 0..g.n() as u32 {
                    let dist = bfs_distances(&g, u).unwrap();
                    for v in 0..g.n() as u32 {
                        let expect = match dist[v as usize] {
                            d if d <= 3 => CappedDistance::Exact(d),
                            UNREACHABLE => CappedDistance::MoreThanThree,
                            _ => CappedDistance::MoreThanThree,
                        };
                        assert_eq!(
                            lazy.distance_capped(u, v).unwrap(),
                            expect,
                            "law {li} seed {seed} pair ({u},{v})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn two_degree_two_nodes_split_correctly() {
        // degrees [2,2]: double edge (prob 2/3) gives distance 1, two
        // self-loops (prob 1/3) give disconnection
        let seq = DegreeSequence::new(vec![2, 2]).unwrap();
        let runs = 9000;
        let mut adjacent = 0;
        for seed in 0..runs {
            let mut lazy = LazyPairing::new(&seq, seed);
            match lazy.distance_capped(0, 1).unwrap() {
                CappedDistance::Exact(1) => adjacent += 1,
                CappedDistance::MoreThanThree => {}
                other => panic!("impossible outcome {other:?}"),
            }
        }
        let phat = adjacent as f64 / runs as f64;
        let se = (2.0 / 9.0 / runs as f64).sqrt();
        assert!((phat - 2.0 / 3.0).abs() < 4.0 * se, "phat = {phat}");
    }

    #[test]
    fn odd_total_grows_last_degree() {
        let seq = DegreeSequence::new(vec![2, 1]).unwrap();
        let lazy = LazyPairing::new(&seq, 0);
        assert_eq!(lazy.stub_count(), 4);
        assert_eq!(lazy.degree(1), 2);
    }

    #[test]
    fn queries_are_consistent_within_one_pairing() {
        let seq = DegreeSequence::sample(&DegreeLaw::pareto(1.5, 1).unwrap(), 200, 7).unwrap();
        let mut lazy = LazyPairing::new(&seq, 42);
        let first = lazy.distance_capped(3, 77).unwrap();
        for _ in 0..5 {
            assert_eq!(lazy.distance_capped(3, 77).unwrap(), first);
            assert_eq!(lazy.distance_capped(77, 3).unwrap(), first);
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let seq = DegreeSequence::sample(&DegreeLaw::pareto(1.5, 1).unwrap(), 500, 9).unwrap();
        let run = |seed: u64| -> Vec<CappedDistance> {
            let mut lazy = LazyPairing::new(&seq, seed);
            (0..50)
                .map(|i| lazy.distance_capped(i, 499 - i).unwrap())
                .collect()
        };
        assert_eq!(run(5), run(5));
        assert_ne!(run(5), run(6)); // overwhelmingly likely to differ
    }

    #[test]
    fn handles_huge_stub_totals() {
        // a million-node-scale degree won't fit in memory as a graph, but
        // the lazy pairing only touches what it reveals
        let seq = DegreeSequence::new(vec![1_000_000_000, 3, 2, 5, 1]).unwrap();
        let mut lazy = LazyPairing::new(&seq, 1);
        // node 1 is adjacent to node 0 with overwhelming probability
        let d = lazy.distance_capped(1, 0).unwrap();
        assert_eq!(d, CappedDistance::Exact(1));
    }
}
