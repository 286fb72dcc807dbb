//! Frequency spectrum of a class: per-type counts, hapaxes and the
//! reference-function proportion per frequency class, smoothed with a
//! running median.

use lexprior::{build_spectrum, class_proportions, generate, hapaxes, running_median, SynthSpec};

fn main() -> lexprior::Result<()> {
    let spec = SynthSpec {
        n_types: 300,
        target_tokens: 6_000,
        seed: 11,
        ..SynthSpec::default()
    };
    let (corpus, _) = generate(&spec)?;
    // take a 70% sample so that some types occur exactly once
    let sample = lexprior::TaggedCorpus::from_tokens(
        corpus.spec.clone(),
        lexprior::shuffle_tokens(&corpus, 1).tokens[..4_200].to_vec(),
    )?;
    let table = build_spectrum(&sample);
    println!(
        "{} tokens, {} types, {} hapaxes (by function: {:?})",
        table.n_tokens(),
        table.n_types(),
        hapaxes(&table).len(),
        table.hapax_totals
    );

    let reference = sample.spec.function_id("ref")?;
    let points = class_proportions(&table, reference)?;
    let smoothed = running_median(&points.iter().map(|p| p.proportion).collect::<Vec<_>>(), 5)?;
    println!(
        "\n{:>6} {:>8} {:>6} {:>10} {:>10}",
        "freq", "ln(f)", "types", "prop(ref)", "smoothed"
    );
    for (p, s) in points.iter().zip(&smoothed).take(25) {
        println!(
            "{:>6} {:>8.3} {:>6} {:>10.4} {:>10.4}",
            p.frequency, p.log_frequency, p.n_types, p.proportion, s
        );
    }
    if points.len() > 25 {
        println!("   ... {} more frequency classes", points.len() - 25);
    }
    Ok(())
}
