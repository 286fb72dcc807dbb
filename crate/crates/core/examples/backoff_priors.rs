//! Lexical priors for individual forms: the per-form estimate for frequent
//! forms, the hapax-based estimate for rare and unseen ones.

use lexprior::{
    backoff_prior, build_spectrum, hapax_mle, overall_mle, ClassSpec, LoadOptions, TaggedCorpus,
};

fn corpus_text() -> String {
    let mut s = String::new();
    let mut add = |form: &str, tag: &str, n: usize| {
        for _ in 0..n {
            s.push_str(&format!("{form}\t{tag}\n"));
        }
    };
    add("lopen", "INF", 92);
    add("lopen", "PL", 43);
    add("hebben", "INF", 30);
    add("hebben", "PL", 170);
    add("bedraden", "INF", 1);
    for rare in ["aanlokken", "bijzetten", "omkleden", "uitpluizen"] {
        add(rare, "INF", 1);
    }
    add("beloven", "PL", 1);
    s
}

fn main() -> lexprior::Result<()> {
    let spec =
        ClassSpec::parse("name=dutch-en\nsuffix=en\nfunctions=inf,pl\nmap INF inf\nmap PL pl\n")?;
    let corpus = TaggedCorpus::parse(&corpus_text(), spec.into(), LoadOptions::default())?;
    let table = build_spectrum(&corpus);

    let o = overall_mle(&table)?;
    let h = hapax_mle(&table)?;
    println!(
        "overall MLE  P(inf) = {:.3}  over {} tokens",
        o.probabilities[0], o.support
    );
    println!(
        "hapax MLE    P(inf) = {:.3}  over {} hapaxes",
        h.probabilities[0], h.support
    );

    let threshold = 5;
    println!("\nbackoff threshold {threshold}:");
    for form in ["lopen", "hebben", "bedraden", "verzinnen"] {
        let p = backoff_prior(&table, form, threshold)?;
        println!(
            "  {:<10} {:<14} support {:>3}  P(inf) = {:.3}",
            form,
            p.source.as_str(),
            p.support,
            p.probabilities[0]
        );
    }
    Ok(())
}
