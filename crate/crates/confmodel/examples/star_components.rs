//! Small structures outside the giant: star components (one center, k
//! leaves) and 2-cycles (a pair of parallel edges between two degree-2
//! nodes), with the limiting 2-cycle mean (f2/mu)^2 as a reference.
//!
//!     cargo run --release --example star_components

use confmodel::components::find_star_components;
use confmodel::degree::DegreeLaw;
use confmodel::graph::{build, DegreeSequence};
use confmodel::oracle::two_cycle_mean;
use std::collections::BTreeMap;

fn main() {
    // heavy leaf mass makes isolated stars common
    let law = DegreeLaw::explicit([(1, 0.7), (2, 0.15), (4, 0.1), (6, 0.05)]).unwrap();
    let mut census: BTreeMap<usize, usize> = BTreeMap::new();
    let replicates = 20;
    for seed in 0..replicates {
        let seq = DegreeSequence::sample(&law, 30_000, seed).unwrap();
        let g = build(&seq, 1000 + seed).unwrap();
        for k in find_star_components(&g) {
            *census.entry(k).or_insert(0) += 1;
        }
    }
    println!("star components over {replicates} graphs of n = 30000:");
    for (k, count) in &census {
        println!(
            "  {k}-star ({} nodes): {count} total, {:.2} per graph",
            k + 1,
            *count as f64 / replicates as f64
        );
    }

    // 2-cycles: their count converges to a Poisson with mean (f2/mu)^2
    let law = DegreeLaw::explicit([(1, 1.0 / 3.0), (2, 1.0 / 3.0), (3, 1.0 / 3.0)]).unwrap();
    let m = law.moments();
    let predicted = two_cycle_mean(m.f2, m.mu.finite().unwrap()).unwrap();
    let mut total = 0u64;
    let replicates = 3000;
    for seed in 0..replicates {
        let seq = DegreeSequence::sample(&law, 2000, 777 + seed).unwrap();
        let g = build(&seq, 99_000 + seed).unwrap();
        total += g.count_two_cycles();
    }
    println!(
        "\ntwo-cycles: mean {:.4} over {replicates} graphs, limit prediction {:.4}",
        total as f64 / replicates as f64,
        predicted
    );
}
