//! Exact diameters against fast lower bounds, and why degree-2 nodes
//! stretch graphs: long induced paths of degree-2 nodes force the diameter
//! to grow like log n even when a giant component exists.
//!
//!     cargo run --release --example diameter_bounds

use confmodel::degree::DegreeLaw;
use confmodel::distances::{double_sweep_lower_bound, exact_diameter, longest_degree2_run};
use confmodel::graph::{build, DegreeSequence};

fn main() {
    // every node has degree 2 or 3: long chains of degree-2 nodes appear
    let law = DegreeLaw::explicit([(2, 0.5), (3, 0.5)]).unwrap();

    println!("{:>8} {:>9} {:>12} {:>13}", "n", "diameter", "double-sweep", "deg-2 run");
    for (i, n) in [1000usize, 4000, 16000].into_iter().enumerate() {
        let seq = DegreeSequence::sample(&law, n, 100 + i as u64).unwrap();
        let g = build(&seq, 200 + i as u64).unwrap();
        let exact = exact_diameter(&g);
        let lb = double_sweep_lower_bound(&g, 8, 11);
        let run = longest_degree2_run(&g);
        assert!(lb <= exact);
        println!("{n:>8} {exact:>9} {lb:>12} {run:>13}");
    }
    println!("(the lower bound never exceeds the exact value; both grow with n)");

    // contrast: a heavy-tailed law with minimum degree 3 stays tiny
    let law = DegreeLaw::pareto(2.5, 3).unwrap();
    let seq = DegreeSequence::sample(&law, 16_000, 5).unwrap();
    let g = build(&seq, 6).unwrap();
    println!(
        "pareto tau=2.5 k_min=3 at n=16000: diameter {} (doubly logarithmic regime)",
        exact_diameter(&g)
    );
}
