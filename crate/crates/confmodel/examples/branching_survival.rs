//! Delayed branching processes: root offspring from the degree law f,
//! later generations from the size-biased law g. Extinction fixed points,
//! survival probabilities, conditioning on extinction, and a Monte Carlo
//! cross-check.
//!
//!     cargo run --release --example branching_survival

use confmodel::branching::{
    conditioned_on_extinction_law, delayed_survival, simulate_total_progeny, Progeny,
};
use confmodel::degree::DegreeLaw;

fn main() {
    let laws = [
        ("{1: 1/2, 3: 1/2}", DegreeLaw::explicit([(1, 0.5), (3, 0.5)]).unwrap()),
        ("{1: 3/4, 3: 1/4} (subcritical)", DegreeLaw::explicit([(1, 0.75), (3, 0.25)]).unwrap()),
        ("degenerate 3", DegreeLaw::degenerate(3).unwrap()),
        ("pareto tau = 2.5, k_min = 1", DegreeLaw::pareto(2.5, 1).unwrap()),
        ("pareto tau = 1.5, k_min = 1", DegreeLaw::pareto(1.5, 1).unwrap()),
    ];

    for (name, law) in &laws {
        let bp = delayed_survival(law).unwrap();
        match bp.eta_g {
            Some(eta) => println!("{name}: eta_g = {eta:.6}, survival q = {:.6}", bp.q),
            None => println!("{name}: infinite-mean offspring, survival q = {} by convention", bp.q),
        }

        // Monte Carlo: fraction of runs whose total progeny exceeds the cap
        if let (Some(_), true) = (bp.eta_g, bp.q > 0.0 && bp.q < 1.0) {
            let runs = 4000;
            let cap = 3000;
            let mut survived = 0;
            for seed in 0..runs {
                if let Progeny::ExceededCap = simulate_total_progeny(&bp, cap, seed).unwrap() {
                    survived += 1;
                }
            }
            println!(
                "  simulated survival past {cap} total progeny: {:.4} over {runs} runs",
                survived as f64 / runs as f64
            );
        }
    }

    // conditioning a supercritical offspring law on extinction
    let law = DegreeLaw::explicit([(1, 0.5), (3, 0.5)]).unwrap();
    let bp = delayed_survival(&law).unwrap();
    let g = confmodel::degree::size_biased_law(&law).unwrap();
    let g_star = conditioned_on_extinction_law(&g, bp.eta_g.unwrap()).unwrap();
    println!(
        "conditioned-on-extinction offspring: mean {} (always < 1), pmf at 0..=2: {:.4} {:.4} {:.4}",
        g_star.mean(),
        g_star.pmf(0),
        g_star.pmf(1),
        g_star.pmf(2)
    );
}
