//! k-fold cross-validation on a synthetic corpus: how well do the overall
//! and hapax-based estimates predict the function mix of held-out tokens
//! whose form never occurred in training?

use lexprior::{generate, run_crossval, RatioOrientation, SynthSpec};

fn main() -> lexprior::Result<()> {
    let (corpus, _) = generate(&SynthSpec {
        seed: 5,
        ..SynthSpec::default()
    })?;
    let orientation = RatioOrientation::parse(&corpus.spec, "other/ref")?;
    let report = run_crossval(&corpus, 10, 5, orientation)?;
    print!("{}", report.to_table());

    let mean = |f: &dyn Fn(&lexprior::FoldResult) -> f64| {
        report.folds.iter().map(f).sum::<f64>() / report.folds.len() as f64
    };
    println!("\nmean N0 per run: {:.1}", mean(&|r| r.n_unseen() as f64));
    println!(
        "mean HMLE(ref) - OMLE(ref): {:.3}",
        mean(&|r| r.hmle.probabilities[0] - r.omle.probabilities[0])
    );
    Ok(())
}
