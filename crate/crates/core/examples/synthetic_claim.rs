//! On synthetic corpora where the reference-function probability falls with
//! type frequency, the hapax-based estimate should track the true prior of
//! unseen types much more closely than the overall estimate.

use lexprior::{build_spectrum, generate, hapax_mle, make_folds, overall_mle, run_fold, SynthSpec};

fn main() -> lexprior::Result<()> {
    let replications = 20;
    let mut wins = 0;
    println!(
        "{:>4} {:>6} {:>8} {:>8} {:>8}",
        "seed", "N0", "true", "OMLE", "HMLE"
    );
    for seed in 0..replications {
        let spec = SynthSpec {
            seed,
            ..SynthSpec::default()
        };
        let (corpus, truth) = generate(&spec)?;
        let plan = make_folds(&corpus, 10, seed)?;
        let fold = run_fold(&corpus, &plan, 1)?;
        let Some(p_true) = truth.unseen_prior(&corpus, &plan, 1) else {
            println!("{seed:>4} no unseen types");
            continue;
        };
        let (o, h) = (fold.omle.probabilities[0], fold.hmle.probabilities[0]);
        if (h - p_true).abs() < (o - p_true).abs() {
            wins += 1;
        }
        println!(
            "{seed:>4} {:>6} {p_true:>8.3} {o:>8.3} {h:>8.3}",
            fold.n_unseen()
        );
    }
    println!("\nhapax estimate closer in {wins}/{replications} replications");

    // the full-corpus view: every type has at least two tokens, so only the
    // overall estimate exists there
    let (corpus, _) = generate(&SynthSpec::default())?;
    let table = build_spectrum(&corpus);
    println!(
        "full corpus: OMLE(ref) = {:.3}, hapax estimate: {}",
        overall_mle(&table)?.probabilities[0],
        hapax_mle(&table)
            .map(|h| format!("{:.3}", h.probabilities[0]))
            .unwrap_or_else(|e| e.to_string())
    );
    Ok(())
}
