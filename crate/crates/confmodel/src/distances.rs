//! Graph distances: single-source BFS, exact diameter (iFUB with a
//! brute-force fallback in tests), double-sweep lower bounds, degree-2 chain
//! runs, the high-degree core, and the stub-level exploration tree.

use crate::components::component_summary;
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Multigraph};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::Serialize;
use std::collections::VecDeque;
use std::io::Write;

/// Marker for nodes outside the source's component.
pub const UNREACHABLE: u32 = u32::MAX;

fn check_node(g: &Multigraph, v: u32) -> Result<()> {
    if (v as usize) < g.n() {
        Ok(())
    } else {
        Err(Error::NodeOutOfRange {
            node: v as u64,
            n: g.n(),
        })
    }
}

fn bfs_into(adj: &Adjacency, source: u32, dist: &mut [u32]) -> u32 {
    // caller guarantees dist is all UNREACHABLE; restores nothing
    let mut queue = VecDeque::new();
    dist[source as usize] = 0;
    queue.push_back(source);
    let mut ecc = 0;
    while let Some(v) = queue.pop_front() {
        let d = dist[v as usize];
        ecc = ecc.max(d);
        for &w in adj.neighbors(v) {
            if dist[w as usize] == UNREACHABLE {
                dist[w as usize] = d + 1;
                queue.push_back(w);
            }
        }
    }
    ecc
}

/// Distances from `source` to every node; UNREACHABLE outside its component.
pub fn bfs_distances(g: &Multigraph, source: u32) -> Result<Vec<u32>> {
    check_node(g, source)?;
    let adj = g.adjacency();
    let mut dist = vec![UNREACHABLE; g.n()];
    bfs_into(&adj, source, &mut dist);
    Ok(dist)
}

/// d(u, v); None when the nodes sit in different components.
pub fn typical_distance(g: &Multigraph, u: u32, v: u32) -> Result<Option<u32>> {
    check_node(g, u)?;
    check_node(g, v)?;
    if u == v {
        return Ok(Some(0));
    }
    let adj = g.adjacency();
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = VecDeque::new();
    dist[u as usize] = 0;
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        let d = dist[x as usize];
        for &w in adj.neighbors(x) {
            if dist[w as usize] == UNREACHABLE {
                if w == v {
                    return Ok(Some(d + 1));
                }
                dist[w as usize] = d + 1;
                queue.push_back(w);
            }
        }
    }
    Ok(None)
}

/// Reusable BFS scratch space: the dist array is repaired after each run by
/// rewalking only the visited nodes, so repeated eccentricity computations
/// stay linear in component size.
struct EccScratch {
    dist: Vec<u32>,
    queue: VecDeque<u32>,
    touched: Vec<u32>,
}

impl EccScratch {
    fn new(n: usize) -> Self {
        EccScratch {
            dist: vec![UNREACHABLE; n],
            queue: VecDeque::new(),
            touched: Vec::new(),
        }
    }

    fn ecc(&mut self, adj: &Adjacency, source: u32) -> u32 {
        self.touched.clear();
        self.queue.clear();
        self.dist[source as usize] = 0;
        self.queue.push_back(source);
        self.touched.push(source);
        let mut ecc = 0;
        while let Some(v) = self.queue.pop_front() {
            let d = self.dist[v as usize];
            ecc = ecc.max(d);
            for &w in adj.neighbors(v) {
                if self.dist[w as usize] == UNREACHABLE {
                    self.dist[w as usize] = d + 1;
                    self.queue.push_back(w);
                    self.touched.push(w);
                }
            }
        }
        for &v in &self.touched {
            self.dist[v as usize] = UNREACHABLE;
        }
        ecc
    }

    /// Like ecc but also hands back the levels of the visited nodes before
    /// repairing, through a callback.
    fn ecc_with_levels(&mut self, adj: &Adjacency, source: u32, levels: &mut Vec<Vec<u32>>) -> u32 {
        self.touched.clear();
        self.queue.clear();
        self.dist[source as usize] = 0;
        self.queue.push_back(source);
        self.touched.push(source);
        let mut ecc = 0;
        while let Some(v) = self.queue.pop_front() {
            let d = self.dist[v as usize];
            ecc = ecc.max(d);
            for &w in adj.neighbors(v) {
                if self.dist[w as usize] == UNREACHABLE {
                    self.dist[w as usize] = d + 1;
                    self.queue.push_back(w);
                    self.touched.push(w);
                }
            }
        }
        levels.clear();
        levels.resize(ecc as usize + 1, Vec::new());
        for &v in &self.touched {
            levels[self.dist[v as usize] as usize].push(v);
        }
        for lvl in levels.iter_mut() {
            lvl.sort_unstable();
        }
        for &v in &self.touched {
            self.dist[v as usize] = UNREACHABLE;
        }
        ecc
    }
}

/// Exact diameter: the maximum of d(u, v) over connected pairs, 0 for a
/// graph with no such pair. Runs iFUB per component: eccentricities are
/// evaluated level by level from the top of a BFS tree rooted at a
/// max-degree node, and the level bound 2(i-1) certifies termination long
/// before all nodes are swept on most instances.
pub fn exact_diameter(g: &Multigraph) -> u32 {
    let adj = g.adjacency();
    let summary = component_summary(g);
    let mut scratch = EccScratch::new(g.n());
    let mut levels: Vec<Vec<u32>> = Vec::new();
    let mut best = 0u32;
    // representative of each component: highest degree, then smallest id
    let comp_count = summary.sizes.len();
    let mut rep: Vec<u32> = vec![u32::MAX; comp_count];
    for v in 0..g.n() as u32 {
        let c = summary.assignment[v as usize] as usize;
        if rep[c] == u32::MAX || g.degree(v) > g.degree(rep[c]) {
            rep[c] = v;
        }
    }
    for (c, &root) in rep.iter().enumerate() {
        if summary.sizes[c] < 2 {
            continue; // single node: eccentricity 0
        }
        if (summary.sizes[c] as u32 - 1) <= best {
            continue; // cannot beat the current diameter
        }
        let ecc_root = scratch.ecc_with_levels(&adj, root, &mut levels);
        let mut lb = ecc_root;
        let mut i = ecc_root;
        while i >= 1 {
            for &v in &levels[i as usize] {
                lb = lb.max(scratch.ecc(&adj, v));
            }
            // nodes at levels <= i-1 have ecc <= 2(i-1) via the root
            if lb >= 2 * (i - 1) {
                break;
            }
            i -= 1;
        }
        best = best.max(lb);
    }
    best
}

/// All-pairs check used to validate the diameter routine in tests.
pub fn diameter_by_all_sources(g: &Multigraph) -> u32 {
    let adj = g.adjacency();
    let mut scratch = EccScratch::new(g.n());
    (0..g.n() as u32)
        .map(|v| scratch.ecc(&adj, v))
        .max()
        .unwrap_or(0)
}

/// Double-sweep lower bound: BFS from a random node, then BFS from the
/// farthest node found; repeated `sweeps` times. Always <= the diameter,
/// and exact on trees and cycles.
pub fn double_sweep_lower_bound(g: &Multigraph, sweeps: u32, seed: u64) -> u32 {
    let adj = g.adjacency();
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut scratch = EccScratch::new(g.n());
    let mut levels: Vec<Vec<u32>> = Vec::new();
    let mut lb = 0u32;
    for _ in 0..sweeps.max(1) {
        let start = rng.gen_range(0..g.n()) as u32;
        let ecc_start = scratch.ecc_with_levels(&adj, start, &mut levels);
        // smallest-id node at the deepest level, then sweep back from it
        let far = levels[ecc_start as usize][0];
        lb = lb.max(scratch.ecc(&adj, far));
    }
    lb
}

/// Length of the longest chain of degree-2 nodes: maximal connected set of
/// degree-2 nodes (such a set is always a path or a cycle). A cycle made
/// entirely of degree-2 nodes counts with its full length; a double edge
/// between two degree-2 nodes counts 2; a self-loop on a degree-2 node
/// counts 1.
pub fn longest_degree2_run(g: &Multigraph) -> usize {
    let mut index = vec![u32::MAX; g.n()];
    let mut count = 0u32;
    for v in 0..g.n() as u32 {
        if g.degree(v) == 2 {
            index[v as usize] = count;
            count += 1;
        }
    }
    if count == 0 {
        return 0;
    }
    let mut parent: Vec<u32> = (0..count).collect();
    let mut size = vec![1u32; count as usize];
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            let gp = parent[parent[x as usize] as usize];
            parent[x as usize] = gp;
            x = gp;
        }
        x
    }
    for &(u, v) in g.edges() {
        let (iu, iv) = (index[u as usize], index[v as usize]);
        if iu != u32::MAX && iv != u32::MAX {
            let (ru, rv) = (find(&mut parent, iu), find(&mut parent, iv));
            if ru != rv {
                let (big, small) = if size[ru as usize] >= size[rv as usize] {
                    (ru, rv)
                } else {
                    (rv, ru)
                };
                parent[small as usize] = big;
                size[big as usize] += size[small as usize];
            }
        }
    }
    (0..count)
        .map(|i| size[find(&mut parent, i) as usize])
        .max()
        .unwrap_or(0) as usize
}

/// Nodes with degree >= (log n)^sigma, ascending.
pub fn core_nodes(g: &Multigraph, sigma: f64) -> Vec<u32> {
    assert!(sigma > 0.0, "core exponent must be positive");
    let threshold = (g.n() as f64).ln().powf(sigma);
    (0..g.n() as u32)
        .filter(|&v| g.degree(v) as f64 >= threshold)
        .collect()
}

/// Multi-source BFS distance from every node to the nearest core node.
pub fn distance_to_core(g: &Multigraph, core: &[u32]) -> Result<Vec<u32>> {
    if core.is_empty() {
        return Err(Error::EmptyCore);
    }
    for &v in core {
        check_node(g, v)?;
    }
    let adj = g.adjacency();
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = VecDeque::new();
    for &v in core {
        if dist[v as usize] == UNREACHABLE {
            dist[v as usize] = 0;
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        let d = dist[v as usize];
        for &w in adj.neighbors(v) {
            if dist[w as usize] == UNREACHABLE {
                dist[w as usize] = d + 1;
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

#[derive(Debug, Clone, Serialize)]
pub struct ExplorationReport {
    pub root: u32,
    pub m: u32,
    pub requested_depth: u32,
    pub depth_explored: u32,
    pub collisions: u64,
    pub core_hit_depth: Option<u32>,
    /// Stub attachments at the final depth: one per frontier node, so a
    /// collision-free, core-free exploration gives (m+1) m^(k-1).
    pub frontier_stubs: u64,
    pub nodes_per_depth: Vec<u64>,
}

/// Breadth-first stub exploration on the realized pairing: the root connects
/// its first m+1 stubs, every later node its first m not-yet-connected stubs
/// in stub-numbering order. Pairings that land back on the tree count as
/// collisions; reaching a core node stops the exploration.
pub fn exploration_tree(
    g: &Multigraph,
    root: u32,
    m: u32,
    depth: u32,
    core: &[u32],
) -> Result<ExplorationReport> {
    check_node(g, root)?;
    if m < 1 {
        return Err(Error::InvalidInput("exploration needs m >= 1".into()));
    }
    let in_core = |v: u32| core.binary_search(&v).is_ok();
    debug_assert!(core.windows(2).all(|w| w[0] < w[1]), "core must be sorted");

    let mut nodes_per_depth = vec![0u64; depth as usize + 1];
    nodes_per_depth[0] = 1;
    if in_core(root) {
        return Ok(ExplorationReport {
            root,
            m,
            requested_depth: depth,
            depth_explored: 0,
            collisions: 0,
            core_hit_depth: Some(0),
            frontier_stubs: 0,
            nodes_per_depth: vec![1],
        });
    }
    let mut revealed = vec![false; g.stub_count() as usize];
    let mut in_tree = vec![false; g.n()];
    in_tree[root as usize] = true;
    let mut queue: VecDeque<(u32, u32)> = VecDeque::new();
    queue.push_back((root, 0));
    let mut collisions = 0u64;
    let mut core_hit: Option<u32> = None;
    let mut max_depth = 0u32;

    'explore: while let Some((v, d)) = queue.pop_front() {
        if d == depth {
            break; // FIFO order: everything behind is at least this deep
        }
        let budget = if v == root { m + 1 } else { m };
        let mut used = 0;
        for s in g.stubs_of(v) {
            if used == budget {
                break;
            }
            if revealed[s as usize] {
                continue; // incoming stub, or consumed from the other side
            }
            revealed[s as usize] = true;
            let p = g.partner(s);
            revealed[p as usize] = true;
            used += 1;
            let w = g.node_of_stub(p);
            if in_tree[w as usize] {
                collisions += 1;
                continue;
            }
            in_tree[w as usize] = true;
            nodes_per_depth[(d + 1) as usize] += 1;
            max_depth = max_depth.max(d + 1);
            if in_core(w) {
                core_hit = Some(d + 1);
                break 'explore;
            }
            queue.push_back((w, d + 1));
        }
    }

    let depth_explored = core_hit.unwrap_or(max_depth);
    nodes_per_depth.truncate(depth_explored as usize + 1);
    let frontier_stubs = if core_hit.is_some() {
        0
    } else {
        nodes_per_depth.last().copied().unwrap_or(0)
    };
    Ok(ExplorationReport {
        root,
        m,
        requested_depth: depth,
        depth_explored,
        collisions,
        core_hit_depth: core_hit,
        frontier_stubs,
        nodes_per_depth,
    })
}

/// Histogram of finite BFS distances from `source`.
pub fn distance_histogram(g: &Multigraph, source: u32) -> Result<std::collections::BTreeMap<u32, u64>> {
    let dist = bfs_distances(g, source)?;
    let mut hist = std::collections::BTreeMap::new();
    for d in dist {
        if d != UNREACHABLE {
            *hist.entry(d).or_insert(0u64) += 1;
        }
    }
    Ok(hist)
}

/// "distance,count" CSV, ascending by distance.
pub fn write_distance_histogram<W: Write>(
    hist: &std::collections::BTreeMap<u32, u64>,
    w: &mut W,
) -> Result<()> {
    writeln!(w, "distance,count")?;
    for (d, c) in hist {
        writeln!(w, "{d},{c}")?;
    }
    Ok(())
}
