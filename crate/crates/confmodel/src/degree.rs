//! Degree laws on {1, 2, ...}: explicit finite pmfs, Pareto-type power tails,
//! and point masses. Also the size-biased offspring law g_k = (k+1) f_{k+1} / mu
//! that drives the branching approximation.

use crate::error::{Error, Result};
use crate::numeric::hurwitz_zeta;
use rand::Rng;
use serde::Serialize;

/// A possibly-infinite moment. Infinite first/second moments are meaningful
/// regimes here, not numeric overflow, so they get their own representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Moment {
    Finite(f64),
    Infinite,
}

impl Moment {
    pub fn finite(self) -> Option<f64> {
        match self {
            Moment::Finite(x) => Some(x),
            Moment::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Moment::Infinite)
    }
}

impl std::fmt::Display for Moment {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Moment::Finite(x) => write!(f, "{x}"),
            Moment::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Moment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Moment::Finite(x) => s.serialize_f64(*x),
            Moment::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct LawMoments {
    pub mu: Moment,
    pub nu: Moment,
    pub f1: f64,
    pub f2: f64,
    pub min_degree: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum DegreeLaw {
    /// Finite pmf on degrees >= 1, entries sorted by degree.
    Explicit { support: Vec<(u64, f64)> },
    /// P(D >= k) = (k_min/k)^(tau-1) for k >= k_min, and 1 below k_min.
    ParetoTail { tau: f64, k_min: u64 },
    /// Every node gets degree m.
    Degenerate { m: u64 },
}

impl DegreeLaw {
    pub fn explicit(entries: impl IntoIterator<Item = (u64, f64)>) -> Result<Self> {
        let mut support: Vec<(u64, f64)> = entries.into_iter().collect();
        support.sort_by_key(|&(k, _)| k);
        if support.is_empty() {
            return Err(Error::InvalidLaw("explicit pmf has no entries".into()));
        }
        for w in support.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidLaw(format!("duplicate degree {}", w[0].0)));
            }
        }
        let mut total = 0.0;
        for &(k, p) in &support {
            if k < 1 {
                return Err(Error::InvalidLaw("explicit pmf has mass on degree 0".into()));
            }
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidLaw(format!("pmf({k}) = {p} out of [0,1]")));
            }
            total += p;
        }
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidLaw(format!("pmf sums to {total}, not 1")));
        }
        Ok(DegreeLaw::Explicit { support })
    }

    pub fn pareto(tau: f64, k_min: u64) -> Result<Self> {
        if !(tau > 1.0) || !tau.is_finite() {
            return Err(Error::InvalidLaw(format!("pareto tail needs tau > 1, got {tau}")));
        }
        if k_min < 1 {
            return Err(Error::InvalidLaw("pareto tail needs k_min >= 1".into()));
        }
        Ok(DegreeLaw::ParetoTail { tau, k_min })
    }

    pub fn degenerate(m: u64) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidLaw("degenerate law needs m >= 1".into()));
        }
        Ok(DegreeLaw::Degenerate { m })
    }

    /// P(D = k).
    pub fn pmf(&self, k: u64) -> f64 {
        match self {
            DegreeLaw::Explicit { support } => support
                .binary_search_by_key(&k, |&(d, _)| d)
                .map(|i| support[i].1)
                .unwrap_or(0.0),
            DegreeLaw::ParetoTail { k_min, .. } => {
                if k < *k_min {
                    0.0
                } else {
                    self.tail_ge(k) - self.tail_ge(k + 1)
                }
            }
            DegreeLaw::Degenerate { m } => {
                if k == *m {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }

    /// P(D > x). Defined for any real x.
    pub fn tail(&self, x: f64) -> f64 {
        if x < 1.0 {
            return 1.0; // degrees are >= 1
        }
        let k = x.floor() as u64 + 1; // P(D > x) = P(D >= floor(x)+1)
        self.tail_ge(k)
    }

    /// P(D >= k) for integer k >= 1.
    fn tail_ge(&self, k: u64) -> f64 {
        match self {
            DegreeLaw::Explicit { support } => support
                .iter()
                .filter(|&&(d, _)| d >= k)
                .fold(0.0, |acc, &(_, p)| acc + p),
            DegreeLaw::ParetoTail { tau, k_min } => {
                if k <= *k_min {
                    1.0
                } else {
                    (*k_min as f64 / k as f64).powf(tau - 1.0)
                }
            }
            DegreeLaw::Degenerate { m } => {
                if k <= *m {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }

    /// First moment mu = E[D], second-moment ratio nu = E[D(D-1)]/E[D],
    /// plus the atoms f_1, f_2 and the minimal degree in the support.
    ///
    /// Power-tail sums are evaluated through the Hurwitz zeta function
    /// (mu = k_min + k_min^(tau-1) zeta(tau-1, k_min+1), and similarly for
    /// the factorial moment), which carries the full series to f64 accuracy.
    pub fn moments(&self) -> LawMoments {
        match self {
            DegreeLaw::Explicit { support } => {
                let mu: f64 = support.iter().map(|&(k, p)| k as f64 * p).sum();
                let fac: f64 = support
                    .iter()
                    .map(|&(k, p)| k as f64 * (k as f64 - 1.0) * p)
                    .sum();
                LawMoments {
                    mu: Moment::Finite(mu),
                    nu: Moment::Finite(fac / mu),
                    f1: self.pmf(1),
                    f2: self.pmf(2),
                    min_degree: support
                        .iter()
                        .find(|&&(_, p)| p > 0.0)
                        .map(|&(k, _)| k)
                        .unwrap_or(1),
                }
            }
            DegreeLaw::ParetoTail { tau, k_min } => {
                let km = *k_min as f64;
                let mu = if *tau > 2.0 {
                    Moment::Finite(km + km.powf(tau - 1.0) * hurwitz_zeta(tau - 1.0, km + 1.0))
                } else {
                    Moment::Infinite
                };
                let nu = if *tau > 3.0 {
                    // E[D(D-1)] = 2 sum_{k>=1} (k-1) P(D >= k)
                    let head = km * (km - 1.0) / 2.0;
                    let tail = km.powf(tau - 1.0)
                        * (hurwitz_zeta(tau - 2.0, km + 1.0) - hurwitz_zeta(tau - 1.0, km + 1.0));
                    let fac = 2.0 * (head + tail);
                    Moment::Finite(fac / mu.finite().unwrap())
                } else {
                    Moment::Infinite
                };
                LawMoments {
                    mu,
                    nu,
                    f1: self.pmf(1),
                    f2: self.pmf(2),
                    min_degree: *k_min,
                }
            }
            DegreeLaw::Degenerate { m } => LawMoments {
                mu: Moment::Finite(*m as f64),
                nu: Moment::Finite(*m as f64 - 1.0),
                f1: self.pmf(1),
                f2: self.pmf(2),
                min_degree: *m,
            },
        }
    }

    /// Draw one degree.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        match self {
            DegreeLaw::Explicit { support } => {
                let u: f64 = rng.gen();
                let mut acc = 0.0;
                for &(k, p) in support {
                    acc += p;
                    if u < acc {
                        return k;
                    }
                }
                support.last().unwrap().0 // u landed in rounding slack at the top
            }
            DegreeLaw::ParetoTail { tau, k_min } => {
                let u: f64 = 1.0 - rng.gen::<f64>(); // (0, 1]
                pareto_inverse(*tau, *k_min as f64, u)
            }
            DegreeLaw::Degenerate { m } => *m,
        }
    }

    /// Draw an i.i.d. degree sequence of length n.
    pub fn sample_degrees<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Vec<u64> {
        (0..n).map(|_| self.sample(rng)).collect()
    }
}

/// Inverse transform for the integer power tail: smallest-k representation of
/// floor(k_min * u^(-1/(tau-1))), which realizes P(D >= k) = (k_min/k)^(tau-1).
fn pareto_inverse(tau: f64, k_min: f64, u: f64) -> u64 {
    let x = k_min * u.powf(-1.0 / (tau - 1.0));
    if x >= u64::MAX as f64 {
        u64::MAX
    } else {
        x as u64
    }
}

/// Offspring law of the exploration process: g_k = (k+1) f_{k+1} / mu.
/// Finite-support laws are stored densely; Pareto-derived laws keep the
/// analytic form because their tail is far too slow to tabulate.
#[derive(Debug, Clone, PartialEq)]
pub enum OffspringLaw {
    Finite { pmf: Vec<f64> },
    ParetoSizeBiased { tau: f64, k_min: u64, mu: f64 },
}

impl OffspringLaw {
    pub fn finite(pmf: Vec<f64>) -> Result<Self> {
        if pmf.is_empty() {
            return Err(Error::InvalidLaw("offspring pmf has no entries".into()));
        }
        let total: f64 = pmf.iter().sum();
        if pmf.iter().any(|&p| !(0.0..=1.0 + 1e-12).contains(&p)) || (total - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidLaw(format!(
                "offspring pmf sums to {total}, entries must be probabilities"
            )));
        }
        Ok(OffspringLaw::Finite { pmf })
    }

    pub fn pmf(&self, k: u64) -> f64 {
        match self {
            OffspringLaw::Finite { pmf } => pmf.get(k as usize).copied().unwrap_or(0.0),
            OffspringLaw::ParetoSizeBiased { tau, k_min, mu } => {
                let law = DegreeLaw::ParetoTail { tau: *tau, k_min: *k_min };
                (k + 1) as f64 * law.pmf(k + 1) / mu
            }
        }
    }

    pub fn mean(&self) -> Moment {
        match self {
            OffspringLaw::Finite { pmf } => Moment::Finite(
                pmf.iter().enumerate().map(|(k, p)| k as f64 * p).sum(),
            ),
            OffspringLaw::ParetoSizeBiased { tau, k_min, .. } => {
                DegreeLaw::ParetoTail { tau: *tau, k_min: *k_min }.moments().nu
            }
        }
    }

    /// Probability generating function G(s) = E[s^Z] for s in [0, 1].
    ///
    /// For the analytic Pareto form the series is cut once the geometric
    /// remainder bound drops below 1e-13; at s = 1 it returns exactly 1.
    pub fn pgf(&self, s: f64) -> f64 {
        assert!((0.0..=1.0).contains(&s), "pgf defined on [0,1], got {s}");
        match self {
            OffspringLaw::Finite { pmf } => {
                // Horner from the top
                pmf.iter().rev().fold(0.0, |acc, &p| acc * s + p)
            }
            OffspringLaw::ParetoSizeBiased { tau, k_min, mu } => {
                if s == 1.0 {
                    return 1.0;
                }
                let law = DegreeLaw::ParetoTail { tau: *tau, k_min: *k_min };
                let km = *k_min as f64;
                // g_k <= k_min^(tau-1)/mu for all k, so the remainder past K
                // is at most that constant times s^(K+1)/(1-s).
                let cap = km.powf(tau - 1.0) / mu;
                let mut acc = 0.0;
                let mut spow = 1.0;
                let mut k = 0u64;
                loop {
                    acc += (k + 1) as f64 * law.pmf(k + 1) / mu * spow;
                    spow *= s;
                    k += 1;
                    if cap * spow / (1.0 - s) < 1e-13 {
                        break;
                    }
                }
                acc
            }
        }
    }

    /// Draw one offspring count.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        match self {
            OffspringLaw::Finite { pmf } => {
                if pmf.len() == 1 {
                    return 0;
                }
                let u: f64 = rng.gen();
                let mut acc = 0.0;
                for (k, &p) in pmf.iter().enumerate() {
                    acc += p;
                    if u < acc {
                        return k as u64;
                    }
                }
                pmf.len() as u64 - 1
            }
            OffspringLaw::ParetoSizeBiased { tau, k_min, mu } => {
                // Size-biased degree via the two-stage identity
                // k f_k / mu = sum_t [P(D>=t)/mu] * P(D=k | D>=t):
                // draw a level T with P(T=t) = P(D>=t)/mu, then D conditioned
                // on D >= T, which is again a pure power tail. Offspring = D - 1.
                let km = *k_min as f64;
                let target = rng.gen::<f64>() * mu; // in (0, mu)
                let scale = km.powf(tau - 1.0);
                let past_km = scale * hurwitz_zeta(tau - 1.0, km + 1.0);
                let tail_from = |t: f64| -> f64 {
                    // R(t) = sum_{j>=t} P(D >= j), smoothly interpolated
                    if t <= km {
                        (km - t + 1.0) + past_km
                    } else {
                        scale * hurwitz_zeta(tau - 1.0, t)
                    }
                };
                // R is strictly decreasing with R(1) = mu > target; bracket
                // the crossing point x*, bisect to width < 0.25, then pick
                // the largest integer level T with R(T) > target. The
                // bracket pins T to floor(hi) or floor(hi) - 1; one check
                // decides.
                let mut lo = 1.0f64;
                let mut hi = 2.0f64;
                while tail_from(hi) > target {
                    lo = hi;
                    hi *= 2.0;
                    if hi > 1e100 {
                        break;
                    }
                }
                while hi - lo > 0.25 && hi - lo > hi * 1e-13 {
                    let mid = 0.5 * (lo + hi);
                    if tail_from(mid) > target {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                let mut t = hi.floor().max(1.0);
                if t > 1.0 && tail_from(t) <= target {
                    t -= 1.0;
                }
                let v: f64 = 1.0 - rng.gen::<f64>();
                let d = if t <= km {
                    pareto_inverse(*tau, km, v) // conditioning on D >= t is vacuous
                } else {
                    pareto_inverse(*tau, t, v) // tail above t is again Pareto
                };
                d.saturating_sub(1)
            }
        }
    }
}

/// g_k = (k+1) f_{k+1} / mu. Errors when mu is infinite (tau <= 2), where no
/// size-biased law exists.
pub fn size_biased_law(law: &DegreeLaw) -> Result<OffspringLaw> {
    let moments = law.moments();
    let mu = moments
        .mu
        .finite()
        .ok_or_else(|| Error::InfiniteMoment("size-biased law needs E[D] < inf".into()))?;
    match law {
        DegreeLaw::Explicit { support } => {
            let max_k = support.last().map(|&(k, _)| k).unwrap_or(1);
            let mut pmf = vec![0.0; max_k as usize]; // offspring range 0..max_k-1
            for &(k, p) in support {
                pmf[(k - 1) as usize] = k as f64 * p / mu;
            }
            Ok(OffspringLaw::Finite { pmf })
        }
        DegreeLaw::Degenerate { m } => {
            let mut pmf = vec![0.0; *m as usize];
            pmf[(*m - 1) as usize] = 1.0;
            Ok(OffspringLaw::Finite { pmf })
        }
        DegreeLaw::ParetoTail { tau, k_min } => Ok(OffspringLaw::ParetoSizeBiased {
            tau: *tau,
            k_min: *k_min,
            mu,
        }),
    }
}

/// Parse "1:0.5,3:0.5" into explicit pmf entries.
pub fn parse_pmf_spec(s: &str) -> Result<Vec<(u64, f64)>> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (k, p) = part
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("pmf entry '{part}' is not k:p")))?;
        let k: u64 = k
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree '{k}' in pmf")))?;
        let p: f64 = p
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad probability '{p}' in pmf")))?;
        out.push((k, p));
    }
    if out.is_empty() {
        return Err(Error::Parse("pmf spec has no entries".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    #[test]
    fn pareto_pmf_and_tail() {
        let law = DegreeLaw::pareto(3.0, 1).unwrap();
        // P(D=1) = 1 - (1/2)^2 = 3/4
        assert_relative_eq!(law.pmf(1), 0.75, max_relative = 1e-15);
        // P(D>2) = (1/3)^2
        assert_relative_eq!(law.tail(2.0), 1.0 / 9.0, max_relative = 1e-15);
        assert_relative_eq!(law.tail(2.5), 1.0 / 9.0, max_relative = 1e-15);
        assert_eq!(law.tail(0.0), 1.0);
    }

    #[test]
    fn degenerate_tail_and_moments() {
        let law = DegreeLaw::degenerate(3).unwrap();
        assert_eq!(law.tail(3.0), 0.0);
        assert_eq!(law.tail(2.9), 1.0);
        let m = law.moments();
        assert_eq!(m.mu, Moment::Finite(3.0));
        assert_eq!(m.nu, Moment::Finite(2.0));
        assert_eq!(m.min_degree, 3);
    }

    #[test]
    fn pareto_mu_is_basel_sum_at_tau_3() {
        let law = DegreeLaw::pareto(3.0, 1).unwrap();
        let m = law.moments();
        let pi = std::f64::consts::PI;
        assert_relative_eq!(m.mu.finite().unwrap(), pi * pi / 6.0, max_relative = 1e-13);
        assert!(m.nu.is_infinite()); // tau = 3 sits on the boundary
    }

    #[test]
    fn pareto_moment_markers() {
        assert!(DegreeLaw::pareto(1.5, 1).unwrap().moments().mu.is_infinite());
        assert!(DegreeLaw::pareto(2.0, 1).unwrap().moments().mu.is_infinite());
        let m = DegreeLaw::pareto(2.5, 3).unwrap().moments();
        assert!(!m.mu.is_infinite());
        assert!(m.nu.is_infinite());
        let m = DegreeLaw::pareto(3.5, 2).unwrap().moments();
        assert!(!m.nu.is_infinite());
    }

    #[test]
    fn pareto_moments_match_direct_summation() {
        // brute-force check of the zeta-based closed forms
        let law = DegreeLaw::pareto(4.0, 2).unwrap();
        let m = law.moments();
        let mut mu = 0.0;
        let mut fac = 0.0;
        // the factorial-moment tail decays like 24/k^2, so 2e7 terms leave
        // a truncation error near 1.2e-6 absolute, well under the tolerance
        for k in 1..20_000_000u64 {
            let p = law.pmf(k);
            mu += k as f64 * p;
            fac += k as f64 * (k as f64 - 1.0) * p;
        }
        assert_relative_eq!(m.mu.finite().unwrap(), mu, max_relative = 1e-9);
        assert_relative_eq!(m.nu.finite().unwrap(), fac / mu, max_relative = 1e-6);
    }

    #[test]
    fn explicit_moments() {
        let law = DegreeLaw::explicit([(1, 0.5), (3, 0.5)]).unwrap();
        let m = law.moments();
        assert_eq!(m.mu, Moment::Finite(2.0));
        // E[D(D-1)] = 0.5*0 + 0.5*6 = 3, nu = 1.5
        assert_eq!(m.nu, Moment::Finite(1.5));
        assert_eq!(m.f1, 0.5);
        assert_eq!(m.f2, 0.0);
        assert_eq!(m.min_degree, 1);
    }

    #[test]
    fn explicit_rejects_bad_input() {
        assert!(DegreeLaw::explicit([(1, 0.5), (3, 0.6)]).is_err());
        assert!(DegreeLaw::explicit([(0, 1.0)]).is_err());
        assert!(DegreeLaw::explicit([(1, -0.1), (2, 1.1)]).is_err());
        assert!(DegreeLaw::explicit([(2, 0.5), (2, 0.5)]).is_err());
        assert!(DegreeLaw::pareto(1.0, 1).is_err());
        assert!(DegreeLaw::pareto(2.5, 0).is_err());
        assert!(DegreeLaw::degenerate(0).is_err());
    }

    #[test]
    fn size_biased_small_law() {
        let law = DegreeLaw::explicit([(1, 1.0 / 3.0), (2, 1.0 / 3.0), (3, 1.0 / 3.0)]).unwrap();
        let g = size_biased_law(&law).unwrap();
        match &g {
            OffspringLaw::Finite { pmf } => {
                assert_relative_eq!(pmf[0], 1.0 / 6.0, max_relative = 1e-14);
                assert_relative_eq!(pmf[1], 1.0 / 3.0, max_relative = 1e-14);
                assert_relative_eq!(pmf[2], 1.0 / 2.0, max_relative = 1e-14);
            }
            _ => panic!("expected finite offspring law"),
        }
        // mean of g equals nu of f
        let nu = law.moments().nu.finite().unwrap();
        assert_relative_eq!(g.mean().finite().unwrap(), nu, max_relative = 1e-14);
    }

    #[test]
    fn size_biased_rejects_infinite_mean() {
        let law = DegreeLaw::pareto(1.5, 1).unwrap();
        assert!(matches!(size_biased_law(&law), Err(Error::InfiniteMoment(_))));
    }

    #[test]
    fn size_biased_pareto_sums_to_one() {
        let law = DegreeLaw::pareto(2.5, 3).unwrap();
        let g = size_biased_law(&law).unwrap();
        assert_eq!(g.pmf(0), 0.0); // min degree 3 means at least 2 offspring
        assert_eq!(g.pmf(1), 0.0);
        assert!(g.pmf(2) > 0.0);
        assert_eq!(g.pgf(1.0), 1.0);
        // partial mass plus analytic tail bound brackets 1
        let mut acc = 0.0;
        for k in 0..200_000u64 {
            acc += g.pmf(k);
        }
        assert!(acc < 1.0 && acc > 0.95, "acc = {acc}");
    }

    #[test]
    fn pgf_agrees_between_forms() {
        // compare analytic Pareto pgf against heavy manual truncation
        let g = OffspringLaw::ParetoSizeBiased {
            tau: 2.5,
            k_min: 1,
            mu: DegreeLaw::pareto(2.5, 1).unwrap().moments().mu.finite().unwrap(),
        };
        for &s in &[0.0f64, 0.2, 0.5, 0.8, 0.95] {
            let direct: f64 = (0..2_000_000u64).map(|k| g.pmf(k) * s.powi(k as i32)).sum();
            assert_relative_eq!(g.pgf(s), direct, max_relative = 1e-9, epsilon = 1e-12);
        }
    }

    #[test]
    fn sampling_matches_cdf_ks() {
        let n = 100_000;
        let laws = [
            DegreeLaw::explicit([(1, 0.5), (3, 0.5)]).unwrap(),
            DegreeLaw::pareto(2.5, 2).unwrap(),
            DegreeLaw::pareto(1.5, 1).unwrap(),
            DegreeLaw::degenerate(4).unwrap(),
        ];
        for (i, law) in laws.iter().enumerate() {
            let mut rng = ChaCha12Rng::seed_from_u64(7 + i as u64);
            let mut xs = law.sample_degrees(n, &mut rng);
            xs.sort_unstable();
            // KS distance between empirical and true CDF
            let mut ks: f64 = 0.0;
            let mut lo = 0usize;
            while lo < n {
                let mut hi = lo;
                while hi < n && xs[hi] == xs[lo] {
                    hi += 1;
                }
                let x = xs[lo];
                let emp_before = lo as f64 / n as f64;
                let emp_at = hi as f64 / n as f64;
                // Both CDFs jump at the support points, so the sup distance
                // is attained at a jump, comparing like limits on each side.
                let cdf_at = 1.0 - law.tail(x as f64); // P(D <= x)
                let cdf_left = 1.0 - law.tail(x as f64 - 0.5); // P(D < x)
                ks = ks
                    .max((emp_at - cdf_at).abs())
                    .max((emp_before - cdf_left).abs());
                lo = hi;
            }
            assert!(ks < 0.01, "law {i}: KS distance {ks}");
        }
    }

    #[test]
    fn pareto_sampler_hits_min_degree() {
        let law = DegreeLaw::pareto(2.5, 3).unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(1);
        for _ in 0..10_000 {
            assert!(law.sample(&mut rng) >= 3);
        }
    }

    #[test]
    fn size_biased_pareto_sampler_matches_pmf() {
        let law = DegreeLaw::pareto(2.5, 1).unwrap();
        let g = size_biased_law(&law).unwrap();
        let n = 200_000usize;
        let mut rng = ChaCha12Rng::seed_from_u64(99);
        let mut counts = vec![0u64; 41];
        let mut tail_count = 0u64;
        for _ in 0..n {
            let k = g.sample(&mut rng);
            if (k as usize) < 40 {
                counts[k as usize] += 1;
            } else {
                tail_count += 1;
            }
        }
        // chi-square against the analytic pmf, tail lumped
        let mut stat = 0.0;
        let mut tail_p = 1.0;
        for k in 0..40u64 {
            let p = g.pmf(k);
            tail_p -= p;
            if p * n as f64 > 8.0 {
                let e = p * n as f64;
                let o = counts[k as usize] as f64;
                stat += (o - e) * (o - e) / e;
            }
        }
        let e = tail_p * n as f64;
        stat += (tail_count as f64 - e) * (tail_count as f64 - e) / e;
        // generous df bound; the point is catching a broken sampler
        let p = crate::numeric::chi_square_sf(stat, 40);
        assert!(p > 1e-4, "chi-square stat {stat}, p = {p}");
    }

    #[test]
    fn offspring_mean_finite_for_tau_above_3() {
        let law = DegreeLaw::pareto(3.5, 1).unwrap();
        let g = size_biased_law(&law).unwrap();
        let nu = law.moments().nu.finite().unwrap();
        assert_relative_eq!(g.mean().finite().unwrap(), nu, max_relative = 1e-12);
        // The raw sample mean is a poor statistic here (the offspring law
        // keeps infinite variance until tau > 4), so compare the capped mean
        // E[min(Z, 100)], which the pmf gives in closed sum form.
        let cap = 100u64;
        let mut expected = 0.0;
        let mut cum = 0.0;
        for j in 0..cap {
            cum += g.pmf(j);
            expected += 1.0 - cum; // P(Z > j)
        }
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        let draws = 400_000u64;
        let mut sum = 0.0f64;
        let mut over = 0u64;
        for _ in 0..draws {
            let z = g.sample(&mut rng);
            sum += z.min(cap) as f64;
            if z > cap {
                over += 1;
            }
        }
        let capped_mean = sum / draws as f64;
        assert!(
            (capped_mean - expected).abs() < 0.05,
            "capped mean {capped_mean} vs {expected}"
        );
        // the cap only bites on a thin sliver of draws
        assert!((over as f64) < 0.01 * draws as f64, "{over} draws above cap");
    }

    #[test]
    fn pmf_spec_parsing() {
        let entries = parse_pmf_spec("1:0.5, 3:0.5").unwrap();
        assert_eq!(entries, vec![(1, 0.5), (3, 0.5)]);
        assert!(parse_pmf_spec("1=0.5").is_err());
        assert!(parse_pmf_spec("").is_err());
        assert!(parse_pmf_spec("x:0.5").is_err());
    }
}
