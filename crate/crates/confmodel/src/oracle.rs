//! Closed-form constants and bounds used by tests and experiment
//! post-processing. Everything here is a pure function of its arguments;
//! out-of-domain inputs produce typed errors, never NaN.

use crate::error::{Error, Result};
use serde_json::{json, Value};

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

/// Component-size threshold coefficient. For tau > 2 this is
/// (1+delta)/(ln mu - ln 2) and requires mu > 2; for tau in (1,2) it is
/// ((tau-1)/(2-tau))(1+delta) and mu is ignored.
pub fn gamma_star(tau: f64, delta: f64, mu: f64) -> Result<f64> {
    if !(tau > 1.0) || tau == 2.0 || !tau.is_finite() {
        return Err(bad(format!(
            "gamma_star needs tau in (1,2) or tau > 2, got {tau}"
        )));
    }
    if tau < 2.0 {
        return Ok((tau - 1.0) / (2.0 - tau) * (1.0 + delta));
    }
    if !(mu > 2.0) {
        return Err(bad(format!("gamma_star with tau > 2 needs mu > 2, got {mu}")));
    }
    Ok((1.0 + delta) / (mu.ln() - 2f64.ln()))
}

/// Star-component threshold coefficient. For tau > 2 this is
/// (1-delta)/(ln mu - ln f1) and requires mu > f1 > 0; for tau in (1,2) it
/// is ((tau-1)/(2-tau))(1-delta).
pub fn gamma_double_star(tau: f64, delta: f64, mu: f64, f1: f64) -> Result<f64> {
    if !(f1 > 0.0) {
        return Err(bad(format!("gamma_double_star needs f1 > 0, got {f1}")));
    }
    if !(tau > 1.0) || tau == 2.0 || !tau.is_finite() {
        return Err(bad(format!(
            "gamma_double_star needs tau in (1,2) or tau > 2, got {tau}"
        )));
    }
    if tau < 2.0 {
        return Ok((tau - 1.0) / (2.0 - tau) * (1.0 - delta));
    }
    if !(mu > f1) {
        return Err(bad(format!(
            "gamma_double_star with tau > 2 needs mu > f1, got mu={mu}, f1={f1}"
        )));
    }
    Ok((1.0 - delta) / (mu.ln() - f1.ln()))
}

/// Realized-graph component threshold: (1+delta) ln n divided by
/// (ln(L_N/n) - ln 2 - eps/(1-2 eps)). Errors when the denominator is not
/// positive, which happens whenever the realized mean degree is too close
/// to 2 for the threshold to make sense.
pub fn gamma_n(n: u64, l_n: u64, delta: f64, eps: f64) -> Result<f64> {
    if n == 0 {
        return Err(bad("gamma_n needs n >= 1"));
    }
    if !(0.0..0.5).contains(&eps) {
        return Err(bad(format!("gamma_n needs eps in [0, 0.5), got {eps}")));
    }
    let mu_n = l_n as f64 / n as f64;
    let denom = mu_n.ln() - 2f64.ln() - eps / (1.0 - 2.0 * eps);
    if !(denom > 0.0) {
        return Err(bad(format!(
            "gamma_n denominator not positive (realized mean degree {mu_n:.4})"
        )));
    }
    Ok((1.0 + delta) * (n as f64).ln() / denom)
}

/// Upper bound on the probability of any component of size between s and
/// n-s: 2 sum_{j=s}^{n-s} (2 n^(2/r) / L_N)^ceil(j r / 2), r in {1, 2}. The
/// formula is returned even when the base exceeds 1 and the bound is vacuous.
pub fn prop21_bound(n: u64, s: u64, r: u64, l_n: f64) -> Result<f64> {
    if r != 1 && r != 2 {
        return Err(bad(format!("prop21_bound needs r in {{1,2}}, got {r}")));
    }
    if s < 1 || 3 * s > n {
        return Err(bad(format!("prop21_bound needs 1 <= s <= n/3, got s={s}, n={n}")));
    }
    if !(l_n > 0.0) {
        return Err(bad(format!("prop21_bound needs L_N > 0, got {l_n}")));
    }
    let base = 2.0 * (n as f64).powf(2.0 / r as f64) / l_n;
    let mut sum = 0.0f64;
    for j in s..=(n - s) {
        let e = (j * r).div_ceil(2);
        sum += base.powf(e as f64);
    }
    Ok(2.0 * sum)
}

/// Probability that a fixed set of `a` stubs pairs entirely within itself
/// under a uniform matching of `l_n` stubs:
/// prod_{m=0}^{a/2-1} (2m+1)/(l_n-2m-1).
pub fn disconnect_product(a: u64, l_n: u64) -> Result<f64> {
    if a % 2 != 0 {
        return Err(bad(format!("disconnect_product needs an even stub count, got {a}")));
    }
    if l_n % 2 != 0 || l_n == 0 {
        return Err(bad(format!(
            "disconnect_product needs a positive even stub total, got {l_n}"
        )));
    }
    if a > l_n {
        return Err(bad(format!(
            "disconnect_product needs a <= l_n, got a={a}, l_n={l_n}"
        )));
    }
    let mut p = 1.0f64;
    for m in 0..a / 2 {
        p *= (2 * m + 1) as f64 / (l_n - 2 * m - 1) as f64;
    }
    Ok(p)
}

/// Value of prod_{m=0}^{k-1} (n-m)(2m+1) / ((m+1)(2n-2m-1)) together with
/// whether it is <= 1 (it always should be).
pub fn h_product_check(n: u64, k: u64) -> Result<(f64, bool)> {
    if n < 2 || k < 1 || k > n - 1 {
        return Err(bad(format!(
            "h_product_check needs 1 <= k <= n-1 with n >= 2, got n={n}, k={k}"
        )));
    }
    let mut p = 1.0f64;
    for m in 0..k {
        p *= ((n - m) * (2 * m + 1)) as f64 / (((m + 1) * (2 * n - 2 * m - 1)) as f64);
    }
    Ok((p, p <= 1.0))
}

fn check_tau23(tau: f64, who: &str) -> Result<()> {
    if !(tau > 2.0 && tau < 3.0) {
        return Err(bad(format!("{who} needs tau in (2,3), got {tau}")));
    }
    Ok(())
}

/// Core growth sequence: u_1 = n^(1/(tau-1)) / ln n, then
/// u_k = C ln n * u_{k-1}^(tau-2). Returns u_1..=u_{k_max}.
pub fn u_sequence(n: f64, tau: f64, c: f64, k_max: usize) -> Result<Vec<f64>> {
    check_tau23(tau, "u_sequence")?;
    if !(n >= 3.0) || !(c > 0.0) || k_max == 0 {
        return Err(bad(format!(
            "u_sequence needs n >= 3, C > 0, k_max >= 1; got n={n}, C={c}, k_max={k_max}"
        )));
    }
    let mut out = Vec::with_capacity(k_max);
    let mut u = n.powf(1.0 / (tau - 1.0)) / n.ln();
    out.push(u);
    for _ in 1..k_max {
        u = c * n.ln() * u.powf(tau - 2.0);
        out.push(u);
    }
    Ok(out)
}

/// Closed form for the k-th core growth value:
/// C^(a_k) (ln n)^(b_k) n^(c_k) with
/// a_k = (1-(tau-2)^(k-1))/(3-tau),
/// b_k = 1/(3-tau) - ((4-tau)/(3-tau))(tau-2)^(k-1),
/// c_k = (tau-2)^(k-1)/(tau-1).
pub fn u_closed_form(n: f64, tau: f64, c: f64, k: u64) -> Result<f64> {
    check_tau23(tau, "u_closed_form")?;
    if !(n >= 3.0) || !(c > 0.0) || k == 0 {
        return Err(bad(format!(
            "u_closed_form needs n >= 3, C > 0, k >= 1; got n={n}, C={c}, k={k}"
        )));
    }
    let w = (tau - 2.0).powi(k as i32 - 1);
    let a_k = (1.0 - w) / (3.0 - tau);
    let b_k = 1.0 / (3.0 - tau) - (4.0 - tau) / (3.0 - tau) * w;
    let c_k = w / (tau - 1.0);
    Ok(c.powf(a_k) * n.ln().powf(b_k) * n.powf(c_k))
}

/// Core exploration constant ((tau-2)/(3-tau) + 1 + eps) / ln m.
pub fn c_m_eps(m: u64, eps: f64, tau: f64) -> Result<f64> {
    check_tau23(tau, "c_m_eps")?;
    if m < 2 || !(eps > 0.0) {
        return Err(bad(format!("c_m_eps needs m >= 2 and eps > 0, got m={m}, eps={eps}")));
    }
    Ok(((tau - 2.0) / (3.0 - tau) + 1.0 + eps) / (m as f64).ln())
}

/// Diameter coefficient 2/|ln(tau-2)| + 2 C(m, eps).
pub fn c_f(tau: f64, m: u64, eps: f64) -> Result<f64> {
    check_tau23(tau, "c_f")?;
    Ok(2.0 / (tau - 2.0).ln().abs() + 2.0 * c_m_eps(m, eps, tau)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CenteringRegime {
    /// tau in (2,3): 2 ln ln n / |ln(tau-2)|
    Tau23,
    /// finite variance: ln n / ln nu, nu > 1
    Tau3Plus,
}

/// Leading term of the typical-distance growth.
pub fn centering_term(regime: CenteringRegime, n: f64, tau: f64, nu: f64) -> Result<f64> {
    if !(n > 1.0) || n.ln() <= 1.0 {
        return Err(bad(format!("centering_term needs ln ln n defined, got n={n}")));
    }
    match regime {
        CenteringRegime::Tau23 => {
            check_tau23(tau, "centering_term")?;
            Ok(2.0 * n.ln().ln() / (tau - 2.0).ln().abs())
        }
        CenteringRegime::Tau3Plus => {
            if !(nu > 1.0) {
                return Err(bad(format!("centering_term needs nu > 1, got {nu}")));
            }
            Ok(n.ln() / nu.ln())
        }
    }
}

/// exp(-d_a d_b / l_n): upper bound on the probability that two stub
/// groups of sizes d_a and d_b share no pairing.
pub fn no_connect_bound(d_a: f64, d_b: f64, l_n: f64) -> Result<f64> {
    if d_a < 0.0 || d_b < 0.0 || !(l_n > 0.0) {
        return Err(bad(format!(
            "no_connect_bound needs d_a, d_b >= 0 and l_n > 0; got {d_a}, {d_b}, {l_n}"
        )));
    }
    Ok((-d_a * d_b / l_n).exp())
}

/// Limiting mean number of 2-cycles (pairs of parallel edges between two
/// degree-2 nodes): (f2/mu)^2.
pub fn two_cycle_mean(f2: f64, mu: f64) -> Result<f64> {
    if !(mu > 0.0) {
        return Err(bad(format!("two_cycle_mean needs mu > 0, got {mu}")));
    }
    if f2 < 0.0 {
        return Err(bad(format!("two_cycle_mean needs f2 >= 0, got {f2}")));
    }
    Ok((f2 / mu) * (f2 / mu))
}

/// Bernstein-type tail bound 2 exp(-t^2 / (2(mean + t/3))) for a binomial
/// deviating from its mean by at least t.
pub fn binomial_deviation_bound(mean: f64, t: f64) -> Result<f64> {
    if mean < 0.0 || t < 0.0 {
        return Err(bad(format!(
            "binomial_deviation_bound needs mean >= 0 and t >= 0, got {mean}, {t}"
        )));
    }
    if t == 0.0 {
        return Ok(2.0);
    }
    Ok(2.0 * (-t * t / (2.0 * (mean + t / 3.0))).exp())
}

/// Geometric bound b a^k on P(complement of the giant >= k) when every
/// degree is >= 2 and mu > 2: a = 4/(2+mu), b = 1 + 2(2+mu)/(mu-2).
pub fn complement_tail_bound(mu: f64, k: u64) -> Result<f64> {
    if !(mu > 2.0) {
        return Err(bad(format!("complement_tail_bound needs mu > 2, got {mu}")));
    }
    let a = 4.0 / (2.0 + mu);
    let b = 1.0 + 2.0 * (2.0 + mu) / (mu - 2.0);
    Ok(b * a.powf(k as f64))
}

/// Parameter bag for the CLI's `oracle <name> key=value...` dispatch. Only
/// the fields an operation reads need to be present.
#[derive(Debug, Default, Clone)]
pub struct OracleParams {
    pub tau: Option<f64>,
    pub delta: Option<f64>,
    pub eps: Option<f64>,
    pub mu: Option<f64>,
    pub f1: Option<f64>,
    pub f2: Option<f64>,
    pub nu: Option<f64>,
    pub m: Option<u64>,
    pub n: Option<u64>,
    pub l_n: Option<f64>,
    pub c: Option<f64>,
    pub sigma: Option<f64>,
    pub s: Option<u64>,
    pub r: Option<u64>,
    pub a: Option<u64>,
    pub k: Option<u64>,
    pub k_max: Option<u64>,
    pub d_a: Option<f64>,
    pub d_b: Option<f64>,
    pub mean: Option<f64>,
    pub t: Option<f64>,
    pub regime: Option<String>,
}

impl OracleParams {
    pub fn parse(pairs: &[String]) -> Result<Self> {
        let mut p = OracleParams::default();
        for raw in pairs {
            let (key, val) = raw
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {raw:?}")))?;
            let fval = || -> Result<f64> {
                val.parse::<f64>()
                    .map_err(|_| Error::Parse(format!("{key}: not a number: {val:?}")))
            };
            let ival = || -> Result<u64> {
                val.parse::<u64>()
                    .map_err(|_| Error::Parse(format!("{key}: not a nonnegative integer: {val:?}")))
            };
            match key {
                "tau" => p.tau = Some(fval()?),
                "delta" => p.delta = Some(fval()?),
                "eps" => p.eps = Some(fval()?),
                "mu" => p.mu = Some(fval()?),
                "f1" => p.f1 = Some(fval()?),
                "f2" => p.f2 = Some(fval()?),
                "nu" => p.nu = Some(fval()?),
                "m" => p.m = Some(ival()?),
                "n" => p.n = Some(ival()?),
                "L_N" | "l_n" => p.l_n = Some(fval()?),
                "C" | "c" => p.c = Some(fval()?),
                "sigma" => p.sigma = Some(fval()?),
                "s" => p.s = Some(ival()?),
                "r" => p.r = Some(ival()?),
                "A" | "a" => p.a = Some(ival()?),
                "k" => p.k = Some(ival()?),
                "k_max" => p.k_max = Some(ival()?),
                "D_A" | "d_a" => p.d_a = Some(fval()?),
                "D_B" | "d_b" => p.d_b = Some(fval()?),
                "mean" => p.mean = Some(fval()?),
                "t" => p.t = Some(fval()?),
                "regime" => p.regime = Some(val.to_string()),
                _ => return Err(Error::Parse(format!("unknown oracle parameter {key:?}"))),
            }
        }
        Ok(p)
    }
}

fn need<T: Copy>(v: Option<T>, key: &str, op: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidInput(format!("{op} needs {key}=...")))
}

/// Evaluate an oracle operation by name; returns the value as JSON.
pub fn evaluate(name: &str, p: &OracleParams) -> Result<Value> {
    let delta = p.delta.unwrap_or(0.0);
    let eps = p.eps.unwrap_or(0.1);
    match name {
        "gamma_star" => Ok(json!(gamma_star(
            need(p.tau, "tau", name)?,
            delta,
            p.mu.unwrap_or(f64::NAN),
        )?)),
        "gamma_double_star" => Ok(json!(gamma_double_star(
            need(p.tau, "tau", name)?,
            delta,
            p.mu.unwrap_or(f64::NAN),
            need(p.f1, "f1", name)?,
        )?)),
        "gamma_n" => Ok(json!(gamma_n(
            need(p.n, "n", name)?,
            need(p.l_n, "L_N", name)? as u64,
            delta,
            eps,
        )?)),
        "prop21_bound" => Ok(json!(prop21_bound(
            need(p.n, "n", name)?,
            need(p.s, "s", name)?,
            need(p.r, "r", name)?,
            need(p.l_n, "L_N", name)?,
        )?)),
        "disconnect_product" => Ok(json!(disconnect_product(
            need(p.a, "A", name)?,
            need(p.l_n, "L_N", name)? as u64,
        )?)),
        "h_product_check" => {
            let (value, holds) = h_product_check(need(p.n, "n", name)?, need(p.k, "k", name)?)?;
            Ok(json!({ "value": value, "holds": holds }))
        }
        "u_sequence" => Ok(json!(u_sequence(
            need(p.n, "n", name)? as f64,
            need(p.tau, "tau", name)?,
            need(p.c, "C", name)?,
            need(p.k_max, "k_max", name)? as usize,
        )?)),
        "u_closed_form" => Ok(json!(u_closed_form(
            need(p.n, "n", name)? as f64,
            need(p.tau, "tau", name)?,
            need(p.c, "C", name)?,
            need(p.k, "k", name)?,
        )?)),
        "c_m_eps" => Ok(json!(c_m_eps(
            need(p.m, "m", name)?,
            eps,
            need(p.tau, "tau", name)?,
        )?)),
        "c_f" => Ok(json!(c_f(
            need(p.tau, "tau", name)?,
            need(p.m, "m", name)?,
            eps,
        )?)),
        "centering_term" => {
            let regime = match p.regime.as_deref() {
                Some("tau23") => CenteringRegime::Tau23,
                Some("tau3plus") => CenteringRegime::Tau3Plus,
                other => {
                    return Err(Error::InvalidInput(format!(
                        "centering_term needs regime=tau23 or regime=tau3plus, got {other:?}"
                    )))
                }
            };
            Ok(json!(centering_term(
                regime,
                need(p.n, "n", name)? as f64,
                p.tau.unwrap_or(f64::NAN),
                p.nu.unwrap_or(f64::NAN),
            )?))
        }
        "no_connect_bound" => Ok(json!(no_connect_bound(
            need(p.d_a, "D_A", name)?,
            need(p.d_b, "D_B", name)?,
            need(p.l_n, "L_N", name)?,
        )?)),
        "two_cycle_mean" => Ok(json!(two_cycle_mean(
            need(p.f2, "f2", name)?,
            need(p.mu, "mu", name)?,
        )?)),
        "binomial_deviation_bound" => Ok(json!(binomial_deviation_bound(
            need(p.mean, "mean", name)?,
            need(p.t, "t", name)?,
        )?)),
        "complement_tail_bound" => Ok(json!(complement_tail_bound(
            need(p.mu, "mu", name)?,
            need(p.k, "k", name)?,
        )?)),
        other => Err(Error::InvalidInput(format!("unknown oracle operation {other:?}"))),
    }
}
