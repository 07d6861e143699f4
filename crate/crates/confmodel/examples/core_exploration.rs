//! The high-degree core of a heavy-tailed graph: which nodes are in it,
//! how far everything else is from it, and what a bounded exploration tree
//! rooted at a typical node looks like on its way in.
//!
//!     cargo run --release --example core_exploration

use confmodel::degree::DegreeLaw;
use confmodel::distances::{core_nodes, distance_to_core, exploration_tree, UNREACHABLE};
use confmodel::graph::{build, DegreeSequence};
use confmodel::oracle::{c_f, c_m_eps, u_sequence};

fn main() {
    let (tau, n, sigma) = (2.5f64, 20_000usize, 2.1f64);
    let law = DegreeLaw::pareto(tau, 3).unwrap();
    let seq = DegreeSequence::sample(&law, n, 17).unwrap();
    let g = build(&seq, 18).unwrap();

    let threshold = (n as f64).ln().powf(sigma);
    let core = core_nodes(&g, sigma);
    println!(
        "core = nodes with degree > (ln n)^{sigma} = {threshold:.1}: {} of {} nodes",
        core.len(),
        n
    );

    let dist = distance_to_core(&g, &core).unwrap();
    let mut max_d = 0;
    let mut unreachable = 0usize;
    for &d in &dist {
        if d == UNREACHABLE {
            unreachable += 1;
        } else {
            max_d = max_d.max(d);
        }
    }
    println!("largest finite distance to the core: {max_d} ({unreachable} nodes cannot reach it)");
    let bound = c_m_eps(2, 0.1, tau).unwrap() * (n as f64).ln().ln();
    println!("predicted ceiling C(m,eps) ln ln n = {bound:.2}");
    println!(
        "full diameter coefficient C_F = {:.4}, giving C_F ln ln n = {:.2}",
        c_f(tau, 2, 0.1).unwrap(),
        c_f(tau, 2, 0.1).unwrap() * (n as f64).ln().ln()
    );

    // a bounded exploration from node 0: reveal at most m+1 stubs at the
    // root and m per node after it, stopping at the core
    let report = exploration_tree(&g, 0, 2, 10, &core).unwrap();
    println!(
        "exploration from node 0 (m = 2): nodes per depth {:?}, collisions {}, core hit at {:?}",
        report.nodes_per_depth, report.collisions, report.core_hit_depth
    );

    // the u_k growth sequence that calibrates core-bound proofs
    let u = u_sequence(n as f64, tau, 10.0, 5).unwrap();
    let rounded: Vec<f64> = u.iter().map(|x| (x * 10.0).round() / 10.0).collect();
    println!("degree growth ladder u_1..u_5 (C = 10): {rounded:?}");
}
