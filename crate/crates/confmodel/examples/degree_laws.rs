//! The three degree-law families: what they look like, their moments, and
//! the size-biased offspring law each one induces.
//!
//!     cargo run --release --example degree_laws

use confmodel::degree::{size_biased_law, DegreeLaw};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

fn describe(name: &str, law: &DegreeLaw) {
    let m = law.moments();
    println!("{name}");
    println!("  mu = {}   nu = {}   f1 = {}   f2 = {}", m.mu, m.nu, m.f1, m.f2);
    print!("  pmf at 1..=6:");
    for k in 1..=6 {
        print!(" {:.4}", law.pmf(k));
    }
    println!();
    print!("  P(D > x) at x = 1, 3, 10, 100:");
    for x in [1.0, 3.0, 10.0, 100.0] {
        print!(" {:.5}", law.tail(x));
    }
    println!();

    let mut rng = ChaCha12Rng::seed_from_u64(7);
    let draws: Vec<u64> = (0..12).map(|_| law.sample(&mut rng)).collect();
    println!("  12 draws: {draws:?}");

    match size_biased_law(law) {
        Ok(g) => println!("  size-biased offspring mean: {}", g.mean()),
        Err(e) => println!("  size-biased offspring law: {e}"),
    }
    println!();
}

fn main() {
    describe(
        "explicit {1: 1/2, 3: 1/2}",
        &DegreeLaw::explicit([(1, 0.5), (3, 0.5)]).unwrap(),
    );
    describe("pareto tail tau = 2.5, k_min = 3", &DegreeLaw::pareto(2.5, 3).unwrap());
    describe(
        "pareto tail tau = 1.5, k_min = 1 (infinite mean)",
        &DegreeLaw::pareto(1.5, 1).unwrap(),
    );
    describe("degenerate, every degree 3", &DegreeLaw::degenerate(3).unwrap());
}
