//! Summary statistics for experiment result tables.

use crate::error::{Error, Result};
use crate::experiment::ResultTable;
use serde::Serialize;

/// Mean, standard error, and (for 0/1 columns) a Wilson score interval.
#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub n: usize,
    pub mean: f64,
    pub stderr: f64,
    /// Present when every value in the column is 0 or 1.
    pub wilson_ci: Option<(f64, f64)>,
}

/// Sample mean and standard error of the mean (ddof = 1; a single value
/// has standard error 0).
pub fn mean_stderr(xs: &[f64]) -> Result<(f64, f64)> {
    if xs.is_empty() {
        return Err(Error::InvalidInput("mean of an empty sample".into()));
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() == 1 {
        return Ok((mean, 0.0));
    }
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    Ok((mean, (var / n).sqrt()))
}

/// Wilson score interval for a binomial proportion.
pub fn wilson(successes: u64, trials: u64, z: f64) -> Result<(f64, f64)> {
    if trials == 0 {
        return Err(Error::InvalidInput("wilson interval needs trials >= 1".into()));
    }
    if successes > trials {
        return Err(Error::InvalidInput(format!(
            "wilson interval: {successes} successes out of {trials} trials"
        )));
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    Ok(((center - half).max(0.0), (center + half).min(1.0)))
}

/// Summarize one column of a result table. The Wilson interval (z = 1.96)
/// is attached when the column holds only zeros and ones.
pub fn summarize(table: &ResultTable, column: &str) -> Result<Summary> {
    let xs = table.column_values(column)?;
    if xs.is_empty() {
        return Err(Error::InvalidInput(format!("column {column:?} is empty")));
    }
    let (mean, stderr) = mean_stderr(&xs)?;
    let binary = xs.iter().all(|&x| x == 0.0 || x == 1.0);
    let wilson_ci = if binary {
        let successes = xs.iter().filter(|&&x| x == 1.0).count() as u64;
        Some(wilson(successes, xs.len() as u64, 1.96)?)
    } else {
        None
    };
    Ok(Summary {
        n: xs.len(),
        mean,
        stderr,
        wilson_ci,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiment::ResultTable;
    use approx::assert_relative_eq;

    fn table(cols: &[&str], rows: &[&[&str]]) -> ResultTable {
        ResultTable {
            columns: cols.iter().map(|s| s.to_string()).collect(),
            rows: rows
                .iter()
                .map(|r| r.iter().map(|s| s.to_string()).collect())
                .collect(),
        }
    }

    #[test]
    fn mean_of_small_sample() {
        let (m, se) = mean_stderr(&[1.0, 2.0, 3.0]).unwrap();
        assert_relative_eq!(m, 2.0);
        assert_relative_eq!(se, (1.0f64 / 3.0).sqrt());
        assert!(mean_stderr(&[]).is_err());
    }

    #[test]
    fn constant_column_has_zero_stderr() {
        let t = table(&["x"], &[&["5"], &["5"], &["5"]]);
        let s = summarize(&t, "x").unwrap();
        assert_relative_eq!(s.mean, 5.0);
        assert_relative_eq!(s.stderr, 0.0);
        assert!(s.wilson_ci.is_none());
    }

    #[test]
    fn wilson_at_zero_successes() {
        // 0 of n: the upper limit is near z^2/n
        let n = 50u64;
        let (lo, hi) = wilson(0, n, 1.96).unwrap();
        assert_eq!(lo, 0.0);
        assert!(hi < 3.9 / n as f64 * 1.05, "hi = {hi}");
        assert!(hi > 0.0);
        assert!(wilson(1, 0, 1.96).is_err());
        assert!(wilson(5, 3, 1.96).is_err());
    }

    #[test]
    fn wilson_brackets_true_proportion() {
        let (lo, hi) = wilson(40, 100, 1.96).unwrap();
        assert!(lo < 0.4 && 0.4 < hi);
        assert!(lo > 0.3 && hi < 0.51);
    }

    #[test]
    fn summarize_binary_column_gets_wilson() {
        let t = table(&["ok"], &[&["1"], &["1"], &["0"], &["1"]]);
        let s = summarize(&t, "ok").unwrap();
        assert_relative_eq!(s.mean, 0.75);
        let (lo, hi) = s.wilson_ci.unwrap();
        assert!(lo < 0.75 && 0.75 < hi);
    }

    #[test]
    fn summarize_missing_or_empty() {
        let t = table(&["x"], &[&["1"]]);
        assert!(summarize(&t, "y").is_err());
        let empty = table(&["x"], &[]);
        assert!(summarize(&empty, "x").is_err());
    }

    #[test]
    fn summarize_parses_inf_cells() {
        let t = table(&["d"], &[&["3"], &["inf"]]);
        let s = summarize(&t, "d").unwrap();
        assert!(s.mean.is_infinite());
    }
}
