//! Seeded Monte Carlo experiment runner: sample a degree sequence, build
//! the graph, take the requested measurements, repeat over n values and
//! replicates, and emit a deterministic CSV table.
//!
//! Reproducibility contract: the (config, master_seed) pair determines
//! every output byte. Replicates run concurrently but each owns a
//! generator derived from derive_seed, and rows are collected in task
//! order, so the table never depends on scheduling.

use crate::components::{component_summary, find_star_components, giant_stats, is_connected};
use crate::degree::{parse_pmf_spec, DegreeLaw};
use crate::distances::{
    core_nodes, distance_to_core, exact_diameter, longest_degree2_run, typical_distance,
    UNREACHABLE,
};
use crate::error::{Error, Result};
use crate::graph::{build, DegreeSequence, Multigraph, MAX_STUBS};
use crate::lazy_pairing::{CappedDistance, LazyPairing};
use crate::numeric::splitmix64;
use crate::oracle;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measurement {
    Components,
    Giant,
    Diameter,
    TypicalDistance,
    TwoCycles,
    Stars,
    Degree2Run,
    Core,
    Connectivity,
}

pub const ALL_MEASUREMENTS: [Measurement; 9] = [
    Measurement::Components,
    Measurement::Giant,
    Measurement::Diameter,
    Measurement::TypicalDistance,
    Measurement::TwoCycles,
    Measurement::Stars,
    Measurement::Degree2Run,
    Measurement::Core,
    Measurement::Connectivity,
];

impl Measurement {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "components" => Measurement::Components,
            "giant" => Measurement::Giant,
            "diameter" => Measurement::Diameter,
            "typical_distance" => Measurement::TypicalDistance,
            "two_cycles" => Measurement::TwoCycles,
            "stars" => Measurement::Stars,
            "degree2_run" => Measurement::Degree2Run,
            "core" => Measurement::Core,
            "connectivity" => Measurement::Connectivity,
            other => return Err(Error::Parse(format!("unknown measurement {other:?}"))),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Measurement::Components => "components",
            Measurement::Giant => "giant",
            Measurement::Diameter => "diameter",
            Measurement::TypicalDistance => "typical_distance",
            Measurement::TwoCycles => "two_cycles",
            Measurement::Stars => "stars",
            Measurement::Degree2Run => "degree2_run",
            Measurement::Core => "core",
            Measurement::Connectivity => "connectivity",
        }
    }

    fn columns(self) -> &'static [&'static str] {
        match self {
            Measurement::Components => &["n_components", "largest", "second"],
            Measurement::Giant => {
                &["gamma_used", "giant_largest", "giant_second", "complement", "q_hat"]
            }
            Measurement::Diameter => &["diameter"],
            Measurement::TypicalDistance => &["pairs_sampled", "h1", "h2", "h3", "h_le3_frac"],
            Measurement::TwoCycles => &["two_cycles"],
            Measurement::Stars => &["stars"],
            Measurement::Degree2Run => &["degree2_run"],
            Measurement::Core => &["core_size", "core_dist_max"],
            Measurement::Connectivity => &["connected"],
        }
    }
}

/// How the giant-component size threshold is chosen: a fixed value, or
/// derived from the realized graph (clipped to [20, n/10], falling back to
/// n/10 when the realized mean degree makes the formula degenerate).
#[derive(Debug, Clone, Copy)]
pub enum GammaRule {
    Explicit(f64),
    Oracle { delta: f64, eps: f64 },
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub law: DegreeLaw,
    pub n_values: Vec<usize>,
    pub replicates: u32,
    pub master_seed: u64,
    pub measurements: Vec<Measurement>,
    pub gamma_rule: GammaRule,
    /// Node pairs sampled per replicate for typical_distance.
    pub pairs: u64,
    /// Degree threshold exponent for the core measurement.
    pub core_sigma: f64,
    pub output_path: Option<PathBuf>,
}

/// Build a degree law from its config parts, rejecting parts that do not
/// belong to the named family.
pub fn law_from_parts(
    law: &str,
    tau: Option<f64>,
    kmin: Option<u64>,
    pmf: Option<&str>,
    m: Option<u64>,
) -> Result<DegreeLaw> {
    let reject = |key: &str, ok: bool| -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidLaw(format!("key {key:?} does not apply to law {law:?}")))
        }
    };
    match law {
        "pareto" => {
            reject("pmf", pmf.is_none())?;
            reject("m", m.is_none())?;
            let tau = tau.ok_or_else(|| Error::InvalidLaw("law pareto needs tau".into()))?;
            let kmin = kmin.ok_or_else(|| Error::InvalidLaw("law pareto needs kmin".into()))?;
            DegreeLaw::pareto(tau, kmin)
        }
        "explicit" => {
            reject("tau", tau.is_none())?;
            reject("kmin", kmin.is_none())?;
            reject("m", m.is_none())?;
            let pmf = pmf.ok_or_else(|| Error::InvalidLaw("law explicit needs pmf".into()))?;
            DegreeLaw::explicit(parse_pmf_spec(pmf)?)
        }
        "degenerate" => {
            reject("tau", tau.is_none())?;
            reject("kmin", kmin.is_none())?;
            reject("pmf", pmf.is_none())?;
            let m = m.ok_or_else(|| Error::InvalidLaw("law degenerate needs m".into()))?;
            DegreeLaw::degenerate(m)
        }
        other => Err(Error::InvalidLaw(format!(
            "unknown law {other:?} (expected pareto, explicit, or degenerate)"
        ))),
    }
}

/// Parse a flat key=value experiment config. Blank lines and lines
/// starting with # are skipped; values may be double-quoted; unknown and
/// duplicate keys are rejected.
pub fn parse_config(text: &str) -> Result<ExperimentConfig> {
    let mut seen: BTreeMap<&str, String> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, val) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {}: expected key = value", idx + 1)))?;
        let key = key.trim();
        let mut val = val.trim();
        if val.len() >= 2 && val.starts_with('"') && val.ends_with('"') {
            val = &val[1..val.len() - 1];
        }
        const KEYS: [&str; 15] = [
            "law", "tau", "kmin", "pmf", "m", "n", "replicates", "seed", "measurements", "gamma",
            "gamma_delta", "gamma_eps", "pairs", "core_sigma", "out",
        ];
        let key = KEYS
            .iter()
            .find(|&&k| k == key)
            .ok_or_else(|| Error::Parse(format!("unknown config key {key:?}")))?;
        if seen.insert(key, val.to_string()).is_some() {
            return Err(Error::Parse(format!("duplicate config key {key:?}")));
        }
    }
    let get = |k: &str| seen.get(k).map(|s| s.as_str());
    let parse_f64 = |k: &str| -> Result<Option<f64>> {
        get(k)
            .map(|v| v.parse::<f64>().map_err(|_| Error::Parse(format!("{k}: bad number {v:?}"))))
            .transpose()
    };
    let parse_u64 = |k: &str| -> Result<Option<u64>> {
        get(k)
            .map(|v| v.parse::<u64>().map_err(|_| Error::Parse(format!("{k}: bad integer {v:?}"))))
            .transpose()
    };

    let law_name = get("law").ok_or_else(|| Error::Parse("config needs law=...".into()))?;
    let law = law_from_parts(
        law_name,
        parse_f64("tau")?,
        parse_u64("kmin")?,
        get("pmf"),
        parse_u64("m")?,
    )?;

    let n_raw = get("n").ok_or_else(|| Error::Parse("config needs n=...".into()))?;
    let mut n_values = Vec::new();
    for part in n_raw.split(',') {
        let n: usize = part
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("n: bad value {part:?}")))?;
        if n == 0 {
            return Err(Error::Parse("n values must be >= 1".into()));
        }
        n_values.push(n);
    }

    let replicates = parse_u64("replicates")?
        .ok_or_else(|| Error::Parse("config needs replicates=...".into()))?;
    if replicates == 0 {
        return Err(Error::Parse("replicates must be >= 1".into()));
    }

    let meas_raw = get("measurements")
        .ok_or_else(|| Error::Parse("config needs measurements=...".into()))?;
    let mut measurements = Vec::new();
    for part in meas_raw.split(',') {
        let m = Measurement::parse(part.trim())?;
        if measurements.contains(&m) {
            return Err(Error::Parse(format!("duplicate measurement {:?}", m.name())));
        }
        measurements.push(m);
    }

    let gamma_rule = match (parse_f64("gamma")?, parse_f64("gamma_delta")?, parse_f64("gamma_eps")?) {
        (Some(_), Some(_), _) | (Some(_), _, Some(_)) => {
            return Err(Error::Parse(
                "gamma conflicts with gamma_delta/gamma_eps: choose explicit or oracle".into(),
            ))
        }
        (Some(g), None, None) => {
            if !(g >= 1.0) {
                return Err(Error::Parse(format!("gamma must be >= 1, got {g}")));
            }
            GammaRule::Explicit(g)
        }
        (None, delta, eps) => GammaRule::Oracle {
            delta: delta.unwrap_or(0.1),
            eps: eps.unwrap_or(0.1),
        },
    };

    let pairs = parse_u64("pairs")?.unwrap_or(500);
    if pairs == 0 {
        return Err(Error::Parse("pairs must be >= 1".into()));
    }
    let core_sigma = parse_f64("core_sigma")?.unwrap_or(2.1);
    if !(core_sigma > 0.0) {
        return Err(Error::Parse(format!("core_sigma must be > 0, got {core_sigma}")));
    }

    Ok(ExperimentConfig {
        law,
        n_values,
        replicates: replicates as u32,
        master_seed: parse_u64("seed")?.unwrap_or(0),
        measurements,
        gamma_rule,
        pairs,
        core_sigma,
        output_path: get("out").map(PathBuf::from),
    })
}

/// Collision-resistant seed for one (n, replicate) trial.
pub fn derive_seed(master_seed: u64, n: u64, replicate: u64) -> u64 {
    let h = splitmix64(master_seed);
    let h = splitmix64(h ^ n.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    splitmix64(h ^ replicate)
}

/// Independent stream for one purpose (degree sampling, pairing, pair
/// selection) within a trial.
pub fn sub_seed(trial_seed: u64, purpose: u64) -> u64 {
    splitmix64(trial_seed ^ purpose.wrapping_mul(0xD1B5_4A32_D192_ED03))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl ResultTable {
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn write_csv_path<P: AsRef<Path>>(&self, path: P) -> Result<()> {
        let mut f = std::fs::File::create(path)?;
        f.write_all(self.to_csv().as_bytes())?;
        Ok(())
    }

    /// Numeric view of one column ("inf" parses to f64::INFINITY).
    pub fn column_values(&self, name: &str) -> Result<Vec<f64>> {
        let idx = self
            .columns
            .iter()
            .position(|c| c == name)
            .ok_or_else(|| Error::InvalidInput(format!("no column named {name:?}")))?;
        self.rows
            .iter()
            .map(|row| {
                row[idx]
                    .parse::<f64>()
                    .map_err(|_| Error::Parse(format!("column {name:?}: non-numeric cell {:?}", row[idx])))
            })
            .collect()
    }
}

fn fmt_f64(v: f64) -> String {
    if v.is_infinite() {
        if v > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{v}")
    }
}

/// Component-size threshold for a realized graph, from its node and stub
/// counts: the oracle value when the realized mean degree admits one,
/// otherwise n/10; always clipped to [20, n/10].
pub fn gamma_for_graph(n: usize, l_n: u64, delta: f64, eps: f64) -> usize {
    let lo = (n as f64 / 10.0).min(20.0).max(1.0);
    let hi = (n as f64 / 10.0).max(lo);
    let v = oracle::gamma_n(n as u64, l_n, delta, eps).unwrap_or(hi);
    (v.clamp(lo, hi).ceil() as usize).max(1)
}

/// The gamma threshold actually applied for one realized graph.
fn resolve_gamma(rule: GammaRule, law: &DegreeLaw, n: usize, l_n: u64) -> usize {
    match rule {
        GammaRule::Explicit(g) => (g.ceil() as usize).max(1),
        GammaRule::Oracle { delta, eps } => match law {
            // infinite-mean tails keep every non-giant component tiny, so
            // the coefficient itself (clipped) is the threshold
            DegreeLaw::ParetoTail { tau, .. } if *tau < 2.0 => {
                let lo = (n as f64 / 10.0).min(20.0).max(1.0);
                let hi = (n as f64 / 10.0).max(lo);
                let v = oracle::gamma_star(*tau, delta, f64::NAN).unwrap_or(hi);
                (v.clamp(lo, hi).ceil() as usize).max(1)
            }
            _ => gamma_for_graph(n, l_n, delta, eps),
        },
    }
}

fn sample_distinct_pair<R: Rng>(rng: &mut R, n: usize) -> (u32, u32) {
    loop {
        let u = rng.gen_range(0..n as u32);
        let v = rng.gen_range(0..n as u32);
        if u != v {
            return (u, v);
        }
    }
}

fn push_typical_distance_cells(
    cells: &mut Vec<String>,
    pairs: u64,
    counts: [u64; 3],
) {
    let le3 = counts.iter().sum::<u64>();
    cells.push(pairs.to_string());
    cells.push(counts[0].to_string());
    cells.push(counts[1].to_string());
    cells.push(counts[2].to_string());
    cells.push(fmt_f64(le3 as f64 / pairs as f64));
}

fn run_one_trial(cfg: &ExperimentConfig, n: usize, replicate: u32) -> Result<Vec<String>> {
    let seed = derive_seed(cfg.master_seed, n as u64, replicate as u64);
    let seq = DegreeSequence::sample(&cfg.law, n, sub_seed(seed, 1))?;
    let mut cells = vec![n.to_string(), replicate.to_string(), seed.to_string()];

    if seq.total_stubs() + 1 > MAX_STUBS {
        // too many stubs to materialize: only the capped-distance
        // measurement is possible, through the lazy pairing
        for &m in &cfg.measurements {
            if m != Measurement::TypicalDistance {
                return Err(Error::TooLarge(format!(
                    "measurement {} needs a materialized graph, but the sampled degree \
                     sequence has {} stubs (limit {})",
                    m.name(),
                    seq.total_stubs(),
                    MAX_STUBS
                )));
            }
        }
        let mut lazy = LazyPairing::new(&seq, sub_seed(seed, 2));
        let mut rng = ChaCha12Rng::seed_from_u64(sub_seed(seed, 3));
        let mut counts = [0u64; 3];
        for _ in 0..cfg.pairs {
            let (u, v) = sample_distinct_pair(&mut rng, n);
            if let CappedDistance::Exact(d) = lazy.distance_capped(u, v)? {
                debug_assert!((1..=3).contains(&d));
                counts[d as usize - 1] += 1;
            }
        }
        push_typical_distance_cells(&mut cells, cfg.pairs, counts);
        return Ok(cells);
    }

    let g = build(&seq, sub_seed(seed, 2))?;
    let summary = component_summary(&g);
    for &m in &cfg.measurements {
        match m {
            Measurement::Components => {
                cells.push(summary.sizes.len().to_string());
                cells.push(summary.sizes.first().copied().unwrap_or(0).to_string());
                cells.push(summary.sizes.get(1).copied().unwrap_or(0).to_string());
            }
            Measurement::Giant => {
                let gamma = resolve_gamma(cfg.gamma_rule, &cfg.law, n, g.stub_count());
                let gs = giant_stats(&summary, gamma);
                cells.push(gamma.to_string());
                cells.push(gs.largest.to_string());
                cells.push(gs.second.to_string());
                cells.push(gs.complement.to_string());
                cells.push(fmt_f64(gs.q_hat));
            }
            Measurement::Diameter => cells.push(exact_diameter(&g).to_string()),
            Measurement::TypicalDistance => {
                let mut rng = ChaCha12Rng::seed_from_u64(sub_seed(seed, 3));
                let mut counts = [0u64; 3];
                for _ in 0..cfg.pairs {
                    let (u, v) = sample_distinct_pair(&mut rng, n);
                    if let Some(d @ 1..=3) = typical_distance(&g, u, v)? {
                        counts[d as usize - 1] += 1;
                    }
                }
                push_typical_distance_cells(&mut cells, cfg.pairs, counts);
            }
            Measurement::TwoCycles => cells.push(g.count_two_cycles().to_string()),
            Measurement::Stars => {
                let mut by_k: BTreeMap<usize, usize> = BTreeMap::new();
                for k in find_star_components(&g) {
                    *by_k.entry(k).or_insert(0) += 1;
                }
                let text: Vec<String> =
                    by_k.iter().map(|(k, c)| format!("{k}:{c}")).collect();
                cells.push(text.join(";"));
            }
            Measurement::Degree2Run => cells.push(longest_degree2_run(&g).to_string()),
            Measurement::Core => {
                let core = core_nodes(&g, cfg.core_sigma);
                cells.push(core.len().to_string());
                if core.is_empty() {
                    cells.push("inf".into());
                } else {
                    let dist = distance_to_core(&g, &core)?;
                    let max = dist.iter().copied().max().unwrap_or(0);
                    if max == UNREACHABLE {
                        cells.push("inf".into());
                    } else {
                        cells.push(max.to_string());
                    }
                }
            }
            Measurement::Connectivity => {
                cells.push(u8::from(is_connected(&summary)).to_string())
            }
        }
    }
    Ok(cells)
}

/// Run every (n, replicate) trial of the config. Rows appear in config
/// order (n values, then replicate index) regardless of scheduling.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ResultTable> {
    let mut columns = vec!["n".to_string(), "replicate".to_string(), "seed".to_string()];
    for m in &cfg.measurements {
        columns.extend(m.columns().iter().map(|s| s.to_string()));
    }
    let tasks: Vec<(usize, u32)> = cfg
        .n_values
        .iter()
        .flat_map(|&n| (0..cfg.replicates).map(move |r| (n, r)))
        .collect();
    let results: Vec<Result<Vec<String>>> = tasks
        .par_iter()
        .map(|&(n, r)| run_one_trial(cfg, n, r))
        .collect();
    let mut rows = Vec::with_capacity(results.len());
    for r in results {
        rows.push(r?);
    }
    Ok(ResultTable { columns, rows })
}

/// Fraction of `pairs` uniformly sampled distinct node pairs that lie in a
/// common component.
pub fn pairwise_connected_fraction(g: &Multigraph, pairs: u64, seed: u64) -> f64 {
    assert!(pairs >= 1, "pairs must be >= 1");
    if g.n() < 2 {
        return 1.0;
    }
    let summary = component_summary(g);
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    for _ in 0..pairs {
        let (u, v) = sample_distinct_pair(&mut rng, g.n());
        if summary.assignment[u as usize] == summary.assignment[v as usize] {
            hits += 1;
        }
    }
    hits as f64 / pairs as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;
    use std::collections::HashSet;

    const BASE_CONFIG: &str = "\
# comment line
law = explicit
pmf = \"1:0.5,3:0.5\"
n = 500,1000
replicates = 3
seed = 11
measurements = components,connectivity
";

    #[test]
    fn parses_full_config() {
        let cfg = parse_config(BASE_CONFIG).unwrap();
        assert_eq!(cfg.n_values, vec![500, 1000]);
        assert_eq!(cfg.replicates, 3);
        assert_eq!(cfg.master_seed, 11);
        assert_eq!(
            cfg.measurements,
            vec![Measurement::Components, Measurement::Connectivity]
        );
        assert!(matches!(cfg.gamma_rule, GammaRule::Oracle { .. }));
        assert_eq!(cfg.pairs, 500);
        assert!(cfg.output_path.is_none());
    }

    #[test]
    fn config_rejections() {
        assert!(parse_config("law = pareto\ntau = 2.5\nkmin = 1\nn = 10\nreplicates = 1\nmeasurements = giant\nbogus = 3").is_err());
        assert!(parse_config("law = pareto\ntau = 2.5\nkmin = 1\nn = 10\nn = 20\nreplicates = 1\nmeasurements = giant").is_err());
        assert!(parse_config("law = pareto\ntau = 2.5\nkmin = 1\nn = 10\nreplicates = 0\nmeasurements = giant").is_err());
        assert!(parse_config("law = pareto\ntau = 2.5\nkmin = 1\nn = 10\nreplicates = 1\nmeasurements = giant,giant").is_err());
        assert!(parse_config("law = pareto\ntau = 2.5\nkmin = 1\nn = 10\nreplicates = 1\nmeasurements = giant\ngamma = 50\ngamma_delta = 0.1").is_err());
        assert!(parse_config("law = pareto\ntau = 2.5\nkmin = 1\nm = 3\nn = 10\nreplicates = 1\nmeasurements = giant").is_err());
        assert!(parse_config("law = nope\nn = 10\nreplicates = 1\nmeasurements = giant").is_err());
        assert!(parse_config("n = 10\nreplicates = 1\nmeasurements = giant").is_err());
    }

    #[test]
    fn all_measurement_names_round_trip() {
        for m in ALL_MEASUREMENTS {
            assert_eq!(Measurement::parse(m.name()).unwrap(), m);
        }
        assert!(Measurement::parse("nope").is_err());
    }

    #[test]
    fn derive_seed_is_deterministic_and_collision_free() {
        assert_eq!(derive_seed(1, 100, 5), derive_seed(1, 100, 5));
        assert_ne!(derive_seed(1, 100, 5), derive_seed(2, 100, 5));
        assert_ne!(derive_seed(1, 100, 5), derive_seed(1, 200, 5));
        let mut seen = HashSet::new();
        for rep in 0..1_000_000u64 {
            assert!(seen.insert(derive_seed(42, 1000, rep)), "collision at {rep}");
        }
    }

    #[test]
    fn degenerate_connectivity_rows() {
        let cfg = parse_config(
            "law = degenerate\nm = 3\nn = 100\nreplicates = 3\nmeasurements = connectivity\nseed = 4",
        )
        .unwrap();
        let t = run_experiment(&cfg).unwrap();
        assert_eq!(t.rows.len(), 3);
        assert_eq!(t.columns, vec!["n", "replicate", "seed", "connected"]);
        for row in &t.rows {
            assert!(row[3] == "0" || row[3] == "1");
        }
        let again = run_experiment(&cfg).unwrap();
        assert_eq!(t.to_csv(), again.to_csv());
    }

    #[test]
    fn csv_is_byte_identical_across_runs() {
        let cfg = parse_config(
            "law = explicit\npmf = 1:0.5,3:0.5\nn = 300\nreplicates = 4\nseed = 9\n\
             measurements = components,giant,diameter,two_cycles,stars,degree2_run,core,connectivity",
        )
        .unwrap();
        let a = run_experiment(&cfg).unwrap().to_csv();
        let b = run_experiment(&cfg).unwrap().to_csv();
        assert_eq!(a, b);
        assert_eq!(a.lines().count(), 5);
    }

    #[test]
    fn giant_fraction_near_branching_prediction() {
        // survival probability for {1:1/2, 3:1/2} is 22/27
        let cfg = parse_config(
            "law = explicit\npmf = 1:0.5,3:0.5\nn = 20000\nreplicates = 8\nseed = 3\n\
             measurements = giant\ngamma = 50",
        )
        .unwrap();
        let t = run_experiment(&cfg).unwrap();
        let largest = t.column_values("giant_largest").unwrap();
        let mean = largest.iter().sum::<f64>() / largest.len() as f64 / 20000.0;
        assert!((mean - 22.0 / 27.0).abs() < 0.02, "mean fraction {mean}");
        // oracle gamma rule on the same law: mean degree 2 forces the
        // degenerate fallback n/10 and the run still succeeds
        let cfg2 = parse_config(
            "law = explicit\npmf = 1:0.5,3:0.5\nn = 2000\nreplicates = 2\nseed = 3\nmeasurements = giant",
        )
        .unwrap();
        let t2 = run_experiment(&cfg2).unwrap();
        assert_eq!(t2.column_values("gamma_used").unwrap(), vec![200.0, 200.0]);
    }

    #[test]
    fn oracle_gamma_uses_realized_graph_for_supercritical_law() {
        let cfg = parse_config(
            "law = degenerate\nm = 3\nn = 1000\nreplicates = 1\nmeasurements = giant\ngamma_delta = 0.1\ngamma_eps = 0.1",
        )
        .unwrap();
        let t = run_experiment(&cfg).unwrap();
        let g = t.column_values("gamma_used").unwrap()[0];
        let expect = oracle::gamma_n(1000, 3000, 0.1, 0.1).unwrap();
        assert_eq!(g, expect.ceil());
    }

    #[test]
    fn typical_distance_uses_lazy_pairing_when_too_big() {
        // 100k stubs per node * 1000 nodes = 1e8 stubs: over the limit
        let cfg = parse_config(
            "law = degenerate\nm = 100000\nn = 1000\nreplicates = 1\nseed = 1\n\
             measurements = typical_distance\npairs = 30",
        )
        .unwrap();
        let t = run_experiment(&cfg).unwrap();
        let frac = t.column_values("h_le3_frac").unwrap()[0];
        assert_eq!(frac, 1.0, "a dense pairing has everything within distance 3");

        let bad = parse_config(
            "law = degenerate\nm = 100000\nn = 1000\nreplicates = 1\nmeasurements = diameter",
        )
        .unwrap();
        match run_experiment(&bad) {
            Err(Error::TooLarge(msg)) => assert!(msg.contains("diameter")),
            other => panic!("expected TooLarge, got {other:?}"),
        }
    }

    #[test]
    fn typical_distance_materialized_counts() {
        // path 0-1-2-3-4: distances from sampled pairs all in 1..=4
        let g = Multigraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)], 0).unwrap();
        drop(g);
        let cfg = parse_config(
            "law = degenerate\nm = 2\nn = 60\nreplicates = 2\nseed = 5\n\
             measurements = typical_distance\npairs = 100",
        )
        .unwrap();
        let t = run_experiment(&cfg).unwrap();
        for row in &t.rows {
            let h1: u64 = row[4].parse().unwrap();
            let h2: u64 = row[5].parse().unwrap();
            let h3: u64 = row[6].parse().unwrap();
            assert!(h1 + h2 + h3 <= 100);
        }
    }

    #[test]
    fn pairwise_connected_fraction_examples() {
        // path on 5 nodes: connected, fraction 1
        let path = Multigraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)], 0).unwrap();
        assert_eq!(pairwise_connected_fraction(&path, 500, 7), 1.0);
        // two disjoint triangles: same-component probability for distinct
        // uniform nodes is (3*2)/(6*5) * 2 = 0.4
        let halves = Multigraph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
            0,
        )
        .unwrap();
        let f = pairwise_connected_fraction(&halves, 20_000, 13);
        assert!((f - 0.4).abs() < 0.02, "fraction {f}");
    }

    #[test]
    fn stars_cell_format() {
        let cfg = parse_config(
            "law = explicit\npmf = 1:0.7,4:0.3\nn = 400\nreplicates = 1\nseed = 2\nmeasurements = stars",
        )
        .unwrap();
        let t = run_experiment(&cfg).unwrap();
        let cell = &t.rows[0][3];
        if !cell.is_empty() {
            for part in cell.split(';') {
                let (k, c) = part.split_once(':').expect("k:count");
                let _: usize = k.parse().unwrap();
                let c: usize = c.parse().unwrap();
                assert!(c >= 1);
            }
        }
    }
}
