//! Paired t-test.

use statrs::function::beta::beta_reg;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TTestResult {
    pub t: f64,
    pub df: usize,
    pub p_two_sided: f64,
    pub mean_diff: f64,
    /// Sample (n - 1) standard deviation of the differences.
    pub sd_diff: f64,
}

impl TTestResult {
    pub fn is_significant(&self, alpha: f64) -> bool {
        self.p_two_sided < alpha
    }
}

/// Paired t-test of `x` against `y` on the differences `x - y`.
///
/// All-zero differences give `t = 0, p = 1`; constant nonzero differences
/// have no finite statistic and yield [`Error::InfiniteT`].
pub fn paired_t(x: &[f64], y: &[f64]) -> Result<TTestResult> {
    if x.len() != y.len() {
        return Err(Error::InvalidArgument(format!(
            "paired series differ in length ({} vs {})",
            x.len(),
            y.len()
        )));
    }
    let n = x.len();
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "paired t-test needs n >= 2, got {n}"
        )));
    }
    let d: Vec<f64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
    let nf = n as f64;
    let mean = d.iter().sum::<f64>() / nf;
    let df = n - 1;

    if d.iter().all(|&v| v == d[0]) {
        if d[0] == 0.0 {
            return Ok(TTestResult {
                t: 0.0,
                df,
                p_two_sided: 1.0,
                mean_diff: 0.0,
                sd_diff: 0.0,
            });
        }
        return Err(Error::InfiniteT);
    }

    let var = d.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (nf - 1.0);
    let sd = var.sqrt();
    let t = mean / (sd / nf.sqrt());
    Ok(TTestResult {
        t,
        df,
        p_two_sided: t_two_sided_p(t, df as f64),
        mean_diff: mean,
        sd_diff: sd,
    })
}

/// Two-sided tail probability `P(|T| >= |t|)` of Student's t with `df`
/// degrees of freedom, via the regularized incomplete beta function:
/// `I_{df/(df+t^2)}(df/2, 1/2)`.
pub fn t_two_sided_p(t: f64, df: f64) -> f64 {
    assert!(df > 0.0, "degrees of freedom must be positive");
    if !t.is_finite() {
        return if t.is_nan() { f64::NAN } else { 0.0 };
    }
    let x = df / (df + t * t);
    beta_reg(df / 2.0, 0.5, x).clamp(0.0, 1.0)
}

/// Critical value `t*` with `t_two_sided_p(t*, df) = alpha`, by bisection.
pub fn critical_t(alpha: f64, df: f64) -> f64 {
    assert!(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
    let mut lo = 0.0;
    let mut hi = 1.0;
    while t_two_sided_p(hi, df) > alpha {
        lo = hi;
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if t_two_sided_p(mid, df) > alpha {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-12 * hi.max(1.0) {
            break;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn identical_series() {
        let r = paired_t(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(r.t, 0.0);
        assert_eq!(r.p_two_sided, 1.0);
        assert_eq!(r.df, 2);
    }

    #[test]
    fn constant_nonzero_difference_is_infinite() {
        let r = paired_t(&[2.0, 3.0, 4.0, 5.0], &[1.0, 2.0, 3.0, 4.0]);
        assert!(matches!(r, Err(Error::InfiniteT)));
    }

    #[test]
    fn closed_form_one_two_three() {
        let r = paired_t(&[1.0, 2.0, 3.0], &[0.0, 0.0, 0.0]).unwrap();
        assert_abs_diff_eq!(r.mean_diff, 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.sd_diff, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.t, 2.0 * 3f64.sqrt(), epsilon = 1e-9);
        assert_eq!(r.df, 2);
    }

    #[test]
    fn bad_inputs() {
        assert!(paired_t(&[1.0, 2.0], &[1.0]).is_err());
        assert!(paired_t(&[1.0], &[2.0]).is_err());
        assert!(paired_t(&[], &[]).is_err());
    }

    #[test]
    fn tail_matches_t_table() {
        // two-sided critical values from standard t tables
        for &(df, alpha, t) in &[
            (1.0, 0.05, 12.706),
            (2.0, 0.05, 4.303),
            (9.0, 0.05, 2.262),
            (9.0, 0.01, 3.250),
            (9.0, 0.001, 4.781),
            (30.0, 0.05, 2.042),
            (120.0, 0.05, 1.980),
            (1000.0, 0.05, 1.962),
        ] {
            assert_abs_diff_eq!(critical_t(alpha, df), t, epsilon = 1e-3);
        }
    }

    #[test]
    fn tail_closed_forms() {
        // df = 1 is Cauchy: P(|T| >= t) = 1 - 2 atan(t) / pi
        for &t in &[0.1f64, 1.0, 3.0, 25.0] {
            let exact = 1.0 - 2.0 * f64::atan(t) / std::f64::consts::PI;
            assert_abs_diff_eq!(t_two_sided_p(t, 1.0), exact, epsilon = 1e-10);
        }
        // df = 2: P(|T| >= t) = 1 - t / sqrt(2 + t^2)
        for &t in &[0.1f64, 1.0, 3.0, 25.0] {
            let exact = 1.0 - t / (2.0 + t * t).sqrt();
            assert_abs_diff_eq!(t_two_sided_p(t, 2.0), exact, epsilon = 1e-10);
        }
        assert_eq!(t_two_sided_p(0.0, 9.0), 1.0);
    }
}
