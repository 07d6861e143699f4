//! When the degree law has an infinite mean (tau between 1 and 2), a few
//! nodes own a constant fraction of all stubs and typical distances
//! collapse to 2 or 3. The stub total is ~n^2, far beyond building, so the
//! pairing is revealed lazily, just enough to classify each queried pair.
//!
//!     cargo run --release --example ultra_short_distances

use confmodel::degree::DegreeLaw;
use confmodel::graph::DegreeSequence;
use confmodel::lazy_pairing::{CappedDistance, LazyPairing};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

fn main() {
    let n = 100_000;
    let law = DegreeLaw::pareto(1.5, 1).unwrap();
    let seq = DegreeSequence::sample(&law, n, 3).unwrap();
    println!(
        "n = {n}, stub total = {} (about n^2; a built graph would need ~80 GB)",
        seq.total_stubs()
    );
    let max_deg = seq.degrees().iter().max().unwrap();
    println!(
        "largest degree: {max_deg} ({:.1}% of all stubs on one node)",
        100.0 * *max_deg as f64 / seq.total_stubs() as f64
    );

    let mut lazy = LazyPairing::new(&seq, 4);
    let mut rng = ChaCha12Rng::seed_from_u64(5);
    let mut hist = [0u64; 4]; // distances 1, 2, 3, and >3
    let pairs = 500;
    for _ in 0..pairs {
        let u = rng.gen_range(0..n as u32);
        let v = loop {
            let v = rng.gen_range(0..n as u32);
            if v != u {
                break v;
            }
        };
        match lazy.distance_capped(u, v).unwrap() {
            CappedDistance::Exact(d) => hist[(d - 1) as usize] += 1,
            CappedDistance::MoreThanThree => hist[3] += 1,
        }
    }
    println!("distance histogram over {pairs} random pairs:");
    for (i, label) in ["1", "2", "3", ">3"].iter().enumerate() {
        println!("  d = {label:>2}: {:>4} ({:.3})", hist[i], hist[i] as f64 / pairs as f64);
    }
    println!(
        "mass on {{1,2,3}}: {:.3} (the limit law concentrates on 2 and 3)",
        (hist[0] + hist[1] + hist[2]) as f64 / pairs as f64
    );
}
