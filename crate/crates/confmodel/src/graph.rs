//! Configuration-model multigraphs. Stubs are numbered globally (node i owns
//! the contiguous block given by its offset), and pairing proceeds by
//! repeatedly matching the lowest-numbered free stub with a uniformly random
//! other free stub. Fixing that order keeps runs reproducible and loggable;
//! the distribution over perfect matchings is uniform either way.
//! Self-loops and parallel edges are kept.

use crate::error::{Error, Result};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use std::collections::HashMap;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

/// Materialization guard: beyond this many stubs, callers should switch to
/// the lazily revealed pairing instead of building the whole graph.
pub const MAX_STUBS: u64 = 1 << 25;

#[derive(Debug, Clone)]
pub struct DegreeSequence {
    degrees: Vec<u64>,
}

impl DegreeSequence {
    pub fn new(degrees: Vec<u64>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptyDegreeSequence);
        }
        if let Some(index) = degrees.iter().position(|&d| d == 0) {
            return Err(Error::ZeroDegree { index });
        }
        Ok(DegreeSequence { degrees })
    }

    /// i.i.d. draws from a degree law.
    pub fn sample(law: &crate::degree::DegreeLaw, n: usize, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDegreeSequence);
        }
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        Ok(DegreeSequence {
            degrees: law.sample_degrees(n, &mut rng),
        })
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn total_stubs(&self) -> u64 {
        self.degrees.iter().sum()
    }
}

#[derive(Debug, Clone)]
pub struct Multigraph {
    n: usize,
    /// Degrees after the odd-sum fix, i.e. actual stub counts.
    degrees: Vec<u32>,
    /// stub_offsets[i]..stub_offsets[i+1] are node i's stubs.
    stub_offsets: Vec<u64>,
    /// pairing[s] is the stub matched with s.
    pairing: Vec<u32>,
    /// One entry per stub pair, endpoints normalized (small, large),
    /// in pairing order.
    edges: Vec<(u32, u32)>,
    seed: u64,
}

/// Pool of free stubs supporting "lowest free" and "uniform free by rank"
/// via a Fenwick tree of presence counts.
struct StubPool {
    tree: Vec<u32>,
    free: Vec<bool>,
    len: usize,
    remaining: usize,
    cursor: usize,
    top_bit: usize,
}

impl StubPool {
    fn new(len: usize) -> Self {
        // all slots free: tree[i] covers (i - lowbit(i), i], fully free
        let mut tree = vec![0u32; len + 1];
        for (i, t) in tree.iter_mut().enumerate().skip(1) {
            *t = (i & i.wrapping_neg()) as u32;
        }
        let mut top_bit = 1;
        while top_bit * 2 <= len {
            top_bit *= 2;
        }
        StubPool {
            tree,
            free: vec![true; len],
            len,
            remaining: len,
            cursor: 0,
            top_bit,
        }
    }

    fn remove(&mut self, idx: usize) {
        debug_assert!(self.free[idx]);
        self.free[idx] = false;
        self.remaining -= 1;
        let mut i = idx + 1;
        while i <= self.len {
            self.tree[i] -= 1;
            i += i & i.wrapping_neg();
        }
    }

    /// Lowest-numbered free stub. Amortized O(1): consumed stubs are never
    /// revived, so the cursor only moves right.
    fn lowest(&mut self) -> usize {
        while !self.free[self.cursor] {
            self.cursor += 1;
        }
        self.cursor
    }

    /// The (r+1)-th smallest free stub, r zero-based.
    fn select(&self, r: usize) -> usize {
        let mut pos = 0usize;
        let mut rem = r as u32 + 1;
        let mut bit = self.top_bit;
        while bit > 0 {
            let next = pos + bit;
            if next <= self.len && self.tree[next] < rem {
                pos = next;
                rem -= self.tree[pos];
            }
            bit >>= 1;
        }
        pos // count of slots strictly before the answer == its 0-based index
    }
}

/// Pair up all stubs of the (odd-fixed) degree sequence. Deterministic in
/// `seed`; uniform over perfect matchings of the stubs.
pub fn build(seq: &DegreeSequence, seed: u64) -> Result<Multigraph> {
    let mut degrees = seq.degrees().to_vec();
    let mut total: u64 = degrees.iter().sum();
    if total % 2 == 1 {
        // make the sum even by giving the last node one extra stub
        *degrees.last_mut().unwrap() += 1;
        total += 1;
    }
    if total > MAX_STUBS {
        return Err(Error::TooLarge(format!(
            "{total} stubs exceeds the {MAX_STUBS}-stub materialization limit; \
             use the lazy pairing for short-distance queries on such instances"
        )));
    }
    let n = degrees.len();
    let l = total as usize;
    let mut stub_offsets = Vec::with_capacity(n + 1);
    let mut acc = 0u64;
    stub_offsets.push(0);
    for &d in &degrees {
        acc += d;
        stub_offsets.push(acc);
    }
    // transient stub -> node map to keep the pairing loop O(1) per stub
    let mut stub_node = Vec::with_capacity(l);
    for (v, &d) in degrees.iter().enumerate() {
        stub_node.extend(std::iter::repeat(v as u32).take(d as usize));
    }

    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut pool = StubPool::new(l);
    let mut pairing = vec![0u32; l];
    let mut edges = Vec::with_capacity(l / 2);
    while pool.remaining > 0 {
        let a = pool.lowest();
        pool.remove(a);
        let r = rng.gen_range(0..pool.remaining);
        let b = pool.select(r);
        pool.remove(b);
        pairing[a] = b as u32;
        pairing[b] = a as u32;
        let (u, v) = (stub_node[a], stub_node[b]);
        edges.push((u.min(v), u.max(v)));
    }

    Ok(Multigraph {
        n,
        degrees: degrees.iter().map(|&d| d as u32).collect(),
        stub_offsets,
        pairing,
        edges,
        seed,
    })
}

impl Multigraph {
    /// Assemble a multigraph from an explicit edge list (self-loops allowed,
    /// written as (v, v)). Degrees come from incidence counts, a self-loop
    /// contributing two. Stubs are assigned in edge order.
    pub fn from_edges(n: usize, edges: &[(u32, u32)], seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDegreeSequence);
        }
        let mut degrees = vec![0u32; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w as usize >= n {
                    return Err(Error::NodeOutOfRange { node: w as u64, n });
                }
                degrees[w as usize] += 1;
            }
        }
        if let Some(index) = degrees.iter().position(|&d| d == 0) {
            return Err(Error::ZeroDegree { index });
        }
        let mut stub_offsets = Vec::with_capacity(n + 1);
        let mut acc = 0u64;
        stub_offsets.push(0);
        for &d in &degrees {
            acc += d as u64;
            stub_offsets.push(acc);
        }
        let mut cursor: Vec<u64> = stub_offsets[..n].to_vec();
        let mut pairing = vec![0u32; acc as usize];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            let a = cursor[u as usize];
            cursor[u as usize] += 1;
            let b = cursor[v as usize];
            cursor[v as usize] += 1;
            pairing[a as usize] = b as u32;
            pairing[b as usize] = a as u32;
            normalized.push((u.min(v), u.max(v)));
        }
        Ok(Multigraph {
            n,
            degrees,
            stub_offsets,
            pairing,
            edges: normalized,
            seed,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn degree(&self, v: u32) -> u32 {
        self.degrees[v as usize]
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn stub_count(&self) -> u64 {
        self.stub_offsets[self.n]
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Global stub ids owned by node v.
    pub fn stubs_of(&self, v: u32) -> std::ops::Range<u64> {
        self.stub_offsets[v as usize]..self.stub_offsets[v as usize + 1]
    }

    pub fn partner(&self, stub: u64) -> u64 {
        self.pairing[stub as usize] as u64
    }

    pub fn node_of_stub(&self, stub: u64) -> u32 {
        debug_assert!(stub < self.stub_count());
        (self.stub_offsets.partition_point(|&o| o <= stub) - 1) as u32
    }

    pub fn count_self_loops(&self) -> u64 {
        self.edges.iter().filter(|&&(u, v)| u == v).count() as u64
    }

    /// Isolated 2-cycles: unordered pairs of distinct degree-2 nodes joined
    /// by exactly two parallel edges.
    pub fn count_two_cycles(&self) -> u64 {
        let mut mult: HashMap<(u32, u32), u32> = HashMap::new();
        for &(u, v) in &self.edges {
            if u != v && self.degrees[u as usize] == 2 && self.degrees[v as usize] == 2 {
                *mult.entry((u, v)).or_insert(0) += 1;
            }
        }
        mult.values().filter(|&&c| c == 2).count() as u64
    }

    /// Adjacency in CSR form; a self-loop contributes its node twice, so
    /// every adjacency list has exactly degree(v) entries.
    pub fn adjacency(&self) -> Adjacency {
        let mut offsets = Vec::with_capacity(self.n + 1);
        offsets.push(0u64);
        for &d in &self.degrees {
            offsets.push(offsets.last().unwrap() + d as u64);
        }
        let mut targets = vec![0u32; self.stub_count() as usize];
        let mut cursor: Vec<u64> = offsets[..self.n].to_vec();
        for &(u, v) in &self.edges {
            targets[cursor[u as usize] as usize] = v;
            cursor[u as usize] += 1;
            targets[cursor[v as usize] as usize] = u;
            cursor[v as usize] += 1;
        }
        Adjacency { offsets, targets }
    }

    pub fn write_edge_list<W: Write>(&self, w: &mut W) -> Result<()> {
        writeln!(
            w,
            "# nodes={} stubs={} seed={}",
            self.n,
            self.stub_count(),
            self.seed
        )?;
        for &(u, v) in &self.edges {
            writeln!(w, "{u} {v}")?;
        }
        Ok(())
    }

    pub fn write_edge_list_path<P: AsRef<Path>>(&self, path: P) -> Result<()> {
        let mut w = BufWriter::new(std::fs::File::create(path)?);
        self.write_edge_list(&mut w)
    }

    pub fn read_edge_list<R: BufRead>(r: R) -> Result<Self> {
        let mut lines = r.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge-list file".into()))??;
        let (n, stubs, seed) = parse_header(&header)?;
        let mut edges = Vec::new();
        for line in lines {
            let line = line?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let u: u32 = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line '{line}'")))?;
            let v: u32 = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line '{line}'")))?;
            if it.next().is_some() {
                return Err(Error::Parse(format!("trailing tokens on edge line '{line}'")));
            }
            edges.push((u, v));
        }
        if edges.len() as u64 * 2 != stubs {
            return Err(Error::Parse(format!(
                "header lists {stubs} stubs but file has {} edges",
                edges.len()
            )));
        }
        let g = Multigraph::from_edges(n, &edges, seed)?;
        Ok(g)
    }

    pub fn read_edge_list_path<P: AsRef<Path>>(path: P) -> Result<Self> {
        Self::read_edge_list(BufReader::new(std::fs::File::open(path)?))
    }
}

fn parse_header(line: &str) -> Result<(usize, u64, u64)> {
    let rest = line
        .strip_prefix('#')
        .ok_or_else(|| Error::Parse(format!("missing '#' header, got '{line}'")))?;
    let mut n = None;
    let mut stubs = None;
    let mut seed = None;
    for tok in rest.split_whitespace() {
        let (key, val) = tok
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad header token '{tok}'")))?;
        match key {
            "nodes" => n = val.parse::<usize>().ok(),
            "stubs" => stubs = val.parse::<u64>().ok(),
            "seed" => seed = val.parse::<u64>().ok(),
            _ => return Err(Error::Parse(format!("unknown header key '{key}'"))),
        }
        if n.is_none() && key == "nodes" || stubs.is_none() && key == "stubs" || seed.is_none() && key == "seed" {
            return Err(Error::Parse(format!("bad header value in '{tok}'")));
        }
    }
    match (n, stubs, seed) {
        (Some(n), Some(s), Some(seed)) => Ok((n, s, seed)),
        _ => Err(Error::Parse(format!(
            "header must carry nodes=, stubs=, seed=; got '{line}'"
        ))),
    }
}

/// CSR adjacency view used by the distance routines.
pub struct Adjacency {
    offsets: Vec<u64>,
    targets: Vec<u32>,
}

impl Adjacency {
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.targets[self.offsets[v as usize] as usize..self.offsets[v as usize + 1] as usize]
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }
}
