//! Connected components via union-find, plus the giant-component statistics
//! and the star census used by the sparse regime.

use crate::graph::Multigraph;
use serde::Serialize;

/// Component decomposition. Component ids are assigned by decreasing size
/// (ties by smallest contained node), so id 0 is always a largest component.
#[derive(Debug, Clone)]
pub struct ComponentSummary {
    /// node -> component id
    pub assignment: Vec<u32>,
    /// sizes[id], non-increasing
    pub sizes: Vec<usize>,
    pub n: usize,
}

/// Union-find with union by size and path halving.
struct Dsu {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let gp = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = gp;
            x = gp;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
    }
}

pub fn component_summary(g: &Multigraph) -> ComponentSummary {
    let n = g.n();
    let mut dsu = Dsu::new(n);
    for &(u, v) in g.edges() {
        dsu.union(u, v);
    }
    // order roots by (size desc, smallest member asc) for stable ids
    let mut roots: Vec<(u32, u32)> = Vec::new(); // (root, first member)
    let mut seen = vec![false; n];
    for v in 0..n as u32 {
        let r = dsu.find(v);
        if !seen[r as usize] {
            seen[r as usize] = true;
            roots.push((r, v));
        }
    }
    roots.sort_by_key(|&(r, first)| (std::cmp::Reverse(dsu.size[r as usize]), first));
    let mut id_of_root = vec![u32::MAX; n];
    let mut sizes = Vec::with_capacity(roots.len());
    for (id, &(r, _)) in roots.iter().enumerate() {
        id_of_root[r as usize] = id as u32;
        sizes.push(dsu.size[r as usize] as usize);
    }
    let assignment = (0..n as u32).map(|v| id_of_root[dsu.find(v) as usize]).collect();
    ComponentSummary {
        assignment,
        sizes,
        n,
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct GiantStats {
    pub largest: usize,
    pub second: usize,
    /// Nodes outside the largest component.
    pub complement: usize,
    /// Fraction of nodes in components of size >= gamma.
    pub q_hat: f64,
    pub gamma: usize,
}

pub fn giant_stats(summary: &ComponentSummary, gamma: usize) -> GiantStats {
    assert!(gamma >= 1, "gamma must be at least 1");
    let largest = summary.sizes.first().copied().unwrap_or(0);
    let second = summary.sizes.get(1).copied().unwrap_or(0);
    let in_big: usize = summary.sizes.iter().take_while(|&&s| s >= gamma).sum();
    GiantStats {
        largest,
        second,
        complement: summary.n - largest,
        q_hat: in_big as f64 / summary.n as f64,
        gamma,
    }
}

pub fn is_connected(summary: &ComponentSummary) -> bool {
    summary.sizes.len() == 1
}

/// Sizes k of all star components: k+1 nodes, one center of degree k joined
/// by single edges to k leaves of degree 1, no self-loops or parallel edges.
/// A lone edge counts as the k = 1 star. Returned ascending.
pub fn find_star_components(g: &Multigraph) -> Vec<usize> {
    let summary = component_summary(g);
    let k = summary.sizes.len();
    let mut members: Vec<Vec<u32>> = vec![Vec::new(); k];
    for (v, &c) in summary.assignment.iter().enumerate() {
        members[c as usize].push(v as u32);
    }
    let mut edge_count = vec![0u64; k];
    let mut clean = vec![true; k]; // no self-loops, no parallel edges
    let mut seen_pairs = std::collections::HashSet::new();
    for &(u, v) in g.edges() {
        let c = summary.assignment[u as usize] as usize;
        edge_count[c] += 1;
        if u == v || !seen_pairs.insert((u, v)) {
            clean[c] = false;
        }
    }
    let mut stars = Vec::new();
    for (c, nodes) in members.iter().enumerate() {
        let size = nodes.len();
        if size < 2 || !clean[c] || edge_count[c] != (size - 1) as u64 {
            continue;
        }
        let star_k = size - 1;
        let mut centers = 0;
        let mut leaves = 0;
        for &v in nodes {
            match g.degree(v) as usize {
                1 => leaves += 1,
                d if d == star_k => centers += 1,
                _ => {}
            }
        }
        // for k = 1 both nodes have degree 1 and either can serve as center
        let ok = if star_k == 1 {
            leaves == 2
        } else {
            centers == 1 && leaves == star_k
        };
        if ok {
            stars.push(star_k);
        }
    }
    stars.sort_unstable();
    stars
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build, DegreeSequence, Multigraph};

    #[test]
    fn two_leaf_pairs_make_two_components() {
        // degrees [1,1,1,1]: every matching is two disjoint edges or one
        // perfect pairing; all three matchings give sizes [2,2]
        for seed in 0..10 {
            let g = build(&DegreeSequence::new(vec![1, 1, 1, 1]).unwrap(), seed).unwrap();
            let s = component_summary(&g);
            assert_eq!(s.sizes, vec![2, 2]);
            assert_eq!(s.assignment.len(), 4);
            for &(u, v) in g.edges() {
                assert_eq!(s.assignment[u as usize], s.assignment[v as usize]);
            }
        }
    }

    #[test]
    fn sizes_sum_to_n_and_ids_match_sizes() {
        let g = Multigraph::from_edges(7, &[(0, 1), (1, 2), (3, 4), (5, 5), (6, 6)], 0).unwrap();
        let s = component_summary(&g);
        assert_eq!(s.sizes.iter().sum::<usize>(), 7);
        assert_eq!(s.sizes, vec![3, 2, 1, 1]);
        // assignment ids index into sizes
        for (v, &c) in s.assignment.iter().enumerate() {
            let same: usize = s
                .assignment
                .iter()
                .filter(|&&c2| c2 == c)
                .count();
            assert_eq!(same, s.sizes[c as usize], "node {v}");
        }
    }

    #[test]
    fn giant_stats_thresholding() {
        let g = Multigraph::from_edges(
            9,
            &[(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (7, 8)],
            0,
        )
        .unwrap();
        let s = component_summary(&g);
        assert_eq!(s.sizes, vec![4, 3, 2]);
        let gs = giant_stats(&s, 3);
        assert_eq!(gs.largest, 4);
        assert_eq!(gs.second, 3);
        assert_eq!(gs.complement, 5);
        assert_eq!(gs.q_hat, 7.0 / 9.0);
        // identity: n * q_hat counts nodes in components of size >= gamma
        for gamma in 1..=5 {
            let gs = giant_stats(&s, gamma);
            let direct: usize = s.sizes.iter().filter(|&&x| x >= gamma).sum();
            assert_eq!((gs.q_hat * s.n as f64).round() as usize, direct);
        }
        // q_hat non-increasing in gamma
        let mut last = f64::INFINITY;
        for gamma in 1..=6 {
            let q = giant_stats(&s, gamma).q_hat;
            assert!(q <= last);
            last = q;
        }
    }

    #[test]
    fn connectivity_flag() {
        let path = Multigraph::from_edges(3, &[(0, 1), (1, 2)], 0).unwrap();
        assert!(is_connected(&component_summary(&path)));
        let split = Multigraph::from_edges(4, &[(0, 1), (2, 3)], 0).unwrap();
        assert!(!is_connected(&component_summary(&split)));
    }

    #[test]
    fn star_census_finds_stars() {
        // a 3-star, a lone edge, and a triangle: stars are [1, 3]
        let g = Multigraph::from_edges(
            9,
            &[(0, 1), (0, 2), (0, 3), (4, 5), (6, 7), (7, 8), (6, 8)],
            0,
        )
        .unwrap();
        assert_eq!(find_star_components(&g), vec![1, 3]);
    }

    #[test]
    fn star_census_rejects_decorated_components() {
        // double edge is not a star; path of 3 is not a star (two deg-1
        // leaves but center degree 2 equals k, so it IS a 2-star)
        let g = Multigraph::from_edges(2, &[(0, 1), (0, 1)], 0).unwrap();
        assert_eq!(find_star_components(&g), Vec::<usize>::new());
        let path3 = Multigraph::from_edges(3, &[(0, 1), (1, 2)], 0).unwrap();
        assert_eq!(find_star_components(&path3), vec![2]);
        // 4-cycle: not a star
        let cyc = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], 0).unwrap();
        assert_eq!(find_star_components(&cyc), Vec::<usize>::new());
        // triangle with a pendant: 4 nodes, 4 edges, not a tree
        let tri = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (0, 3)], 0).unwrap();
        assert_eq!(find_star_components(&tri), Vec::<usize>::new());
    }
}
