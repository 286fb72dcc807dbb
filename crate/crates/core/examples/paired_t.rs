//! The paired t-test and Student-t tail probabilities used to compare
//! observed and expected ratios across cross-validation runs.

use lexprior::paired_t;
use lexprior::stats::{critical_t, t_two_sided_p};

fn main() -> lexprior::Result<()> {
    let observed = [0.52, 0.61, 0.47, 0.58, 0.55, 0.49, 0.63, 0.51, 0.56, 0.60];
    let expected = [0.50, 0.55, 0.49, 0.52, 0.50, 0.50, 0.57, 0.50, 0.51, 0.54];
    let r = paired_t(&observed, &expected)?;
    println!(
        "t = {:.4}, df = {}, two-sided p = {:.4} (mean diff {:.4}, sd {:.4})",
        r.t, r.df, r.p_two_sided, r.mean_diff, r.sd_diff
    );
    println!("significant at 0.05: {}", r.is_significant(0.05));

    println!("\n{:>4} {:>10} {:>12}", "df", "t(0.05)", "p(|t|>2)");
    for df in [1, 2, 5, 9, 30, 100] {
        println!(
            "{df:>4} {:>10.4} {:>12.6}",
            critical_t(0.05, df as f64),
            t_two_sided_p(2.0, df as f64)
        );
    }
    Ok(())
}
