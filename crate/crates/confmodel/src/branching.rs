//! Delayed branching process: the root reproduces by the degree law f, every
//! later individual by the size-biased offspring law g. Survival of this
//! process is the n -> inf limit of a node landing in the giant component.

use crate::degree::{size_biased_law, DegreeLaw, Moment, OffspringLaw};
use crate::error::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

const FIXED_POINT_TOL: f64 = 1e-13;
const FIXED_POINT_MAX_ITER: u64 = 1_000_000;

/// Smallest fixed point of the offspring pgf on [0, 1], i.e. the extinction
/// probability of the single-type process started from one individual.
///
/// A point mass at one child is the classical exception (the line is
/// immortal, extinction probability 0); any other law with mean <= 1 goes
/// extinct surely and returns 1 without iterating, which also covers the
/// critical boundary where the iteration itself would crawl.
pub fn extinction_probability(g: &OffspringLaw) -> Result<f64> {
    if let OffspringLaw::Finite { pmf } = g {
        if pmf.len() == 2 && (pmf[1] - 1.0).abs() < 1e-15 {
            return Ok(0.0);
        }
    }
    if let Moment::Finite(mean) = g.mean() {
        if mean <= 1.0 {
            return Ok(1.0);
        }
    }
    let mut s = 0.0;
    for _ in 0..FIXED_POINT_MAX_ITER {
        let next = g.pgf(s);
        if (next - s).abs() < FIXED_POINT_TOL {
            debug_assert!((next - g.pgf(next)).abs() < 1e-12);
            return Ok(next);
        }
        s = next;
    }
    Err(Error::NonConvergence(format!(
        "pgf fixed-point iteration stalled at s = {s}"
    )))
}

#[derive(Debug, Clone)]
pub struct DelayedBranching {
    pub first_gen: DegreeLaw,
    /// None in the infinite-mean regime, where no size-biased law exists.
    pub later_gen: Option<OffspringLaw>,
    /// Extinction probability of the g-process; None alongside later_gen.
    pub eta_g: Option<f64>,
    /// Survival probability of the delayed process.
    pub q: f64,
}

impl DelayedBranching {
    /// Canonical construction from a degree law: g is the size-biased law of
    /// f. When E[D] = inf the process survives with probability one (every
    /// neighborhood explodes immediately), so q = 1 by convention and the
    /// later-generation law is left unset.
    pub fn from_degree_law(f: &DegreeLaw) -> Result<Self> {
        if f.moments().mu.is_infinite() {
            return Ok(DelayedBranching {
                first_gen: f.clone(),
                later_gen: None,
                eta_g: None,
                q: 1.0,
            });
        }
        let g = size_biased_law(f)?;
        let eta = extinction_probability(&g)?;
        let q = 1.0 - pgf_of_degree_law(f, eta);
        Ok(DelayedBranching {
            first_gen: f.clone(),
            later_gen: Some(g),
            eta_g: Some(eta),
            q,
        })
    }

    /// Assemble from explicit first- and later-generation laws. Useful for
    /// driving the simulator with hand-picked offspring behavior.
    pub fn with_laws(f: DegreeLaw, g: OffspringLaw) -> Result<Self> {
        let eta = extinction_probability(&g)?;
        let q = 1.0 - pgf_of_degree_law(&f, eta);
        Ok(DelayedBranching {
            first_gen: f,
            later_gen: Some(g),
            eta_g: Some(eta),
            q,
        })
    }
}

/// Survival probability of the delayed process for degree law f.
pub fn delayed_survival(f: &DegreeLaw) -> Result<DelayedBranching> {
    DelayedBranching::from_degree_law(f)
}

/// E[s^D] for the degree law, s in [0, 1].
fn pgf_of_degree_law(f: &DegreeLaw, s: f64) -> f64 {
    match f {
        DegreeLaw::Explicit { support } => {
            support.iter().map(|&(k, p)| p * s.powi(k as i32)).sum()
        }
        DegreeLaw::Degenerate { m } => s.powi(*m as i32),
        DegreeLaw::ParetoTail { tau, k_min } => {
            if s == 1.0 {
                return 1.0;
            }
            if s == 0.0 {
                return 0.0; // degrees are >= 1
            }
            // remainder past K is at most P(D > K) scaled by s^(K+1)/(1-s);
            // cruder still, s^(K+1)/(1-s).
            let law = DegreeLaw::ParetoTail { tau: *tau, k_min: *k_min };
            let mut acc = 0.0;
            let mut spow = s;
            let mut k = 1u64;
            loop {
                acc += law.pmf(k) * spow;
                spow *= s;
                k += 1;
                if spow / (1.0 - s) < 1e-14 {
                    break;
                }
            }
            acc
        }
    }
}

/// The later-generation law conditioned on the process dying out:
/// g*_n = eta^(n-1) g_n for n >= 1 and g*_0 taking the complementary mass.
/// The result is always subcritical. Errors when eta = 0 (conditioning on a
/// null event) and returns g unchanged when eta = 1.
pub fn conditioned_on_extinction_law(g: &OffspringLaw, eta_g: f64) -> Result<OffspringLaw> {
    if !(0.0..=1.0).contains(&eta_g) {
        return Err(Error::InvalidInput(format!(
            "extinction probability {eta_g} outside [0,1]"
        )));
    }
    if eta_g == 0.0 {
        return Err(Error::NullConditioning);
    }
    if eta_g == 1.0 {
        return Ok(g.clone());
    }
    let damped: Vec<f64> = match g {
        OffspringLaw::Finite { pmf } => pmf
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, &p)| eta_g.powi(n as i32 - 1) * p)
            .collect(),
        OffspringLaw::ParetoSizeBiased { .. } => {
            // geometric damping, so the materialized support is short
            let mut out = Vec::new();
            let mut n = 1u64;
            loop {
                out.push(eta_g.powi(n as i32 - 1) * g.pmf(n));
                n += 1;
                if eta_g.powi(n as i32 - 1) < 1e-15 {
                    break;
                }
                if n > 10_000_000 {
                    return Err(Error::NonConvergence(
                        "conditioned law will not truncate; eta too close to 1".into(),
                    ));
                }
            }
            out
        }
    };
    let tail_mass: f64 = damped.iter().sum();
    let mut pmf = Vec::with_capacity(damped.len() + 1);
    pmf.push(1.0 - tail_mass);
    pmf.extend(damped);
    let out = OffspringLaw::Finite { pmf };
    if let Moment::Finite(mean) = out.mean() {
        debug_assert!(mean < 1.0 + 1e-12, "conditioned law must be subcritical, mean = {mean}");
    }
    Ok(out)
}

/// Outcome of a finite-cap progeny simulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Progeny {
    /// Total individuals ever born, root included.
    Total(u64),
    /// Population passed the cap while still alive.
    ExceededCap,
}

/// Simulate total progeny of the delayed process: the root has f-distributed
/// children, everyone after that reproduces by g. Aborts once the number of
/// individuals created exceeds `cap`.
pub fn simulate_total_progeny(bp: &DelayedBranching, cap: u64, seed: u64) -> Result<Progeny> {
    let g = bp.later_gen.as_ref().ok_or_else(|| {
        Error::InfiniteMoment("progeny simulation needs a later-generation law".into())
    })?;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut created: u64 = 1; // the root
    let mut pending = bp.first_gen.sample(&mut rng); // generation-1 individuals
    created += pending;
    if created > cap {
        return Ok(Progeny::ExceededCap);
    }
    while pending > 0 {
        pending -= 1;
        let kids = g.sample(&mut rng);
        created += kids;
        pending += kids;
        if created > cap {
            return Ok(Progeny::ExceededCap);
        }
    }
    Ok(Progeny::Total(created))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn half_one_half_three() -> DegreeLaw {
        DegreeLaw::explicit([(1, 0.5), (3, 0.5)]).unwrap()
    }

    #[test]
    fn extinction_solves_quadratic() {
        // g = {0: 1/4, 2: 3/4}: smallest root of (3/4)s^2 - s + 1/4 is 1/3
        let g = OffspringLaw::finite(vec![0.25, 0.0, 0.75]).unwrap();
        let eta = extinction_probability(&g).unwrap();
        assert_relative_eq!(eta, 1.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn extinction_subcritical_is_one() {
        let g = OffspringLaw::finite(vec![0.6, 0.2, 0.2]).unwrap(); // mean 0.6
        assert_eq!(extinction_probability(&g).unwrap(), 1.0);
        // critical boundary: mean exactly 1, non-degenerate
        let g = OffspringLaw::finite(vec![0.25, 0.5, 0.25]).unwrap();
        assert_eq!(extinction_probability(&g).unwrap(), 1.0);
    }

    #[test]
    fn extinction_immortal_point_mass() {
        // exactly one child forever: the line never dies
        let g = OffspringLaw::finite(vec![0.0, 1.0]).unwrap();
        assert_eq!(extinction_probability(&g).unwrap(), 0.0);
    }

    #[test]
    fn extinction_zero_when_no_childless_outcome() {
        let g = OffspringLaw::finite(vec![0.0, 0.0, 1.0]).unwrap(); // always 2 kids
        assert_eq!(extinction_probability(&g).unwrap(), 0.0);
    }

    #[test]
    fn delayed_survival_half_half() {
        // f = {1: 1/2, 3: 1/2}: g = {0: 1/4, 2: 3/4}, eta = 1/3,
        // q = 1 - (1/2 * 1/3 + 1/2 * (1/3)^3) = 22/27
        let bp = delayed_survival(&half_one_half_three()).unwrap();
        assert_relative_eq!(bp.eta_g.unwrap(), 1.0 / 3.0, epsilon = 1e-12);
        assert_relative_eq!(bp.q, 22.0 / 27.0, epsilon = 1e-12);
    }

    #[test]
    fn delayed_survival_degenerate_three() {
        // every node degree 3: g = {2: 1}, eta = 0, q = 1
        let bp = delayed_survival(&DegreeLaw::degenerate(3).unwrap()).unwrap();
        assert_eq!(bp.eta_g.unwrap(), 0.0);
        assert_eq!(bp.q, 1.0);
    }

    #[test]
    fn delayed_survival_infinite_mean_convention() {
        let bp = delayed_survival(&DegreeLaw::pareto(1.5, 1).unwrap()).unwrap();
        assert_eq!(bp.q, 1.0);
        assert!(bp.later_gen.is_none());
        assert!(bp.eta_g.is_none());
    }

    #[test]
    fn delayed_survival_consistency_identity() {
        // q = 1 - sum_k f_k eta^k across a few laws
        let laws = [
            half_one_half_three(),
            DegreeLaw::explicit([(1, 0.2), (2, 0.3), (4, 0.5)]).unwrap(),
            DegreeLaw::pareto(2.5, 1).unwrap(),
        ];
        for f in &laws {
            let bp = delayed_survival(f).unwrap();
            let eta = bp.eta_g.unwrap();
            let direct = 1.0 - pgf_of_degree_law(f, eta);
            assert_relative_eq!(bp.q, direct, epsilon = 1e-12);
            // eta is a fixed point of the g pgf
            let g = bp.later_gen.as_ref().unwrap();
            assert!((g.pgf(eta) - eta).abs() < 1e-12);
        }
    }

    #[test]
    fn pareto_min_degree_3_survives_surely() {
        // min degree 3 leaves no way to die: eta = 0, q = 1
        let bp = delayed_survival(&DegreeLaw::pareto(2.5, 3).unwrap()).unwrap();
        assert_eq!(bp.eta_g.unwrap(), 0.0);
        assert_eq!(bp.q, 1.0);
    }

    #[test]
    fn conditioned_law_small_case() {
        // g = {0: 1/4, 2: 3/4}, eta = 1/3 -> g* = {0: 3/4, 2: 1/4}, mean 1/2
        let g = OffspringLaw::finite(vec![0.25, 0.0, 0.75]).unwrap();
        let gs = conditioned_on_extinction_law(&g, 1.0 / 3.0).unwrap();
        match &gs {
            OffspringLaw::Finite { pmf } => {
                assert_relative_eq!(pmf[0], 0.75, epsilon = 1e-12);
                assert_relative_eq!(pmf[1], 0.0, epsilon = 1e-12);
                assert_relative_eq!(pmf[2], 0.25, epsilon = 1e-12);
            }
            _ => panic!(),
        }
        assert_relative_eq!(gs.mean().finite().unwrap(), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn conditioned_law_rejects_null_event() {
        let g = OffspringLaw::finite(vec![0.0, 0.0, 1.0]).unwrap();
        assert!(matches!(
            conditioned_on_extinction_law(&g, 0.0),
            Err(Error::NullConditioning)
        ));
    }

    #[test]
    fn conditioned_law_identity_at_eta_one() {
        let g = OffspringLaw::finite(vec![0.6, 0.2, 0.2]).unwrap();
        let gs = conditioned_on_extinction_law(&g, 1.0).unwrap();
        assert_eq!(&gs, &g);
    }

    #[test]
    fn conditioned_law_pareto_is_subcritical() {
        let f = DegreeLaw::pareto(2.5, 1).unwrap();
        let bp = delayed_survival(&f).unwrap();
        let g = bp.later_gen.as_ref().unwrap();
        let gs = conditioned_on_extinction_law(g, bp.eta_g.unwrap()).unwrap();
        let mean = gs.mean().finite().unwrap();
        assert!(mean < 1.0, "conditioned mean {mean}");
        assert_relative_eq!(gs.pgf(1.0), 1.0, epsilon = 1e-9);
    }

    #[test]
    fn progeny_all_die_immediately() {
        // f puts 3 children down, g = {0: 1}: total = 1 + 3
        let bp = DelayedBranching::with_laws(
            DegreeLaw::degenerate(3).unwrap(),
            OffspringLaw::finite(vec![1.0]).unwrap(),
        )
        .unwrap();
        assert_eq!(simulate_total_progeny(&bp, 1000, 5).unwrap(), Progeny::Total(4));
    }

    #[test]
    fn progeny_immortal_line_hits_cap() {
        let bp = DelayedBranching::with_laws(
            DegreeLaw::degenerate(1).unwrap(),
            OffspringLaw::finite(vec![0.0, 1.0]).unwrap(),
        )
        .unwrap();
        assert_eq!(
            simulate_total_progeny(&bp, 10_000, 5).unwrap(),
            Progeny::ExceededCap
        );
    }

    #[test]
    fn progeny_deterministic_per_seed() {
        let bp = delayed_survival(&half_one_half_three()).unwrap();
        let a = simulate_total_progeny(&bp, 100_000, 42).unwrap();
        let b = simulate_total_progeny(&bp, 100_000, 42).unwrap();
        assert_eq!(a, b);
        assert!(matches!(simulate_total_progeny(&bp, 100_000, 43), Ok(_)));
    }

    #[test]
    fn progeny_rejects_infinite_mean() {
        let bp = delayed_survival(&DegreeLaw::pareto(1.5, 1).unwrap()).unwrap();
        assert!(matches!(
            simulate_total_progeny(&bp, 100, 1),
            Err(Error::InfiniteMoment(_))
        ));
    }

    #[test]
    fn simulated_survival_matches_q() {
        // large-cap survival frequency vs analytic q, 3 standard errors
        let bp = delayed_survival(&half_one_half_three()).unwrap();
        let runs = 20_000u64;
        let survived = (0..runs)
            .filter(|&i| {
                matches!(
                    simulate_total_progeny(&bp, 5_000, 1000 + i).unwrap(),
                    Progeny::ExceededCap
                )
            })
            .count() as f64;
        let phat = survived / runs as f64;
        let se = (bp.q * (1.0 - bp.q) / runs as f64).sqrt();
        assert!(
            (phat - bp.q).abs() < 3.0 * se + 1e-3,
            "phat = {phat}, q = {}",
            bp.q
        );
    }
}
