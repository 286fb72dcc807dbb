//! Recompute the estimates, expected counts and paired t-tests of three
//! published 10-run cross-validation tables from their raw count rows, and
//! compare with the values reported alongside them.

use lexprior::fixtures::ALL;
use lexprior::{ratio_ttests, FunctionId, RatioOrientation};

fn main() -> lexprior::Result<()> {
    for fx in ALL {
        let folds = fx.folds()?;
        let mut max_est = 0f64;
        let mut max_e = 0i64;
        for (i, r) in folds.iter().enumerate() {
            max_est = max_est
                .max((r.omle.probabilities[0] - fx.omle[i]).abs())
                .max((r.hmle.probabilities[0] - fx.hmle[i]).abs());
            for f in 0..2 {
                max_e = max_e
                    .max((r.expected_o.rounded[f] as i64 - fx.expected_o[f][i] as i64).abs())
                    .max((r.expected_h.rounded[f] as i64 - fx.expected_h[f][i] as i64).abs());
            }
        }
        let (to, th) = ratio_ttests(&folds, RatioOrientation::new(FunctionId(0), FunctionId(1)))?;
        println!("{} ({}/{})", fx.name, fx.labels[0], fx.labels[1]);
        println!("  max |estimate diff| {max_est:.5}, max |E diff| {max_e}");
        println!(
            "  overall: t = {:>8.3} (reported {:>6.2}), p = {:.2e}",
            to.t, fx.reported_t_overall, to.p_two_sided
        );
        println!(
            "  hapax:   t = {:>8.3} (reported {:>6.2}), p = {:.3}",
            th.t, fx.reported_t_hapax, th.p_two_sided
        );
    }
    Ok(())
}
