//! Brute-force recounts used as independent oracles.
#![allow(dead_code)]

use std::sync::Arc;

use lexprior::{ClassSpec, FunctionId, TaggedCorpus, TokenRecord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn three_way_spec() -> Arc<ClassSpec> {
    Arc::new(
        ClassSpec::new(
            "toy",
            vec!["a".into(), "b".into(), "c".into()],
            "",
            [("A", "a"), ("B", "b"), ("C", "c")],
        )
        .unwrap(),
    )
}

/// Random corpus of at most `max_len` tokens over a small vocabulary.
pub fn random_corpus(seed: u64, max_len: usize) -> TaggedCorpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(0..=max_len);
    let vocab = rng.random_range(1..=12);
    let tokens = (0..n)
        .map(|_| {
            let form = format!("w{}", rng.random_range(0..vocab));
            TokenRecord::new(form, FunctionId(rng.random_range(0..3)))
        })
        .collect();
    TaggedCorpus::from_tokens(three_way_spec(), tokens).unwrap()
}

/// (form, per-function counts) for every distinct form, first-seen order.
pub fn naive_types(tokens: &[&TokenRecord], n_functions: usize) -> Vec<(String, Vec<u64>)> {
    let mut out: Vec<(String, Vec<u64>)> = Vec::new();
    for (i, t) in tokens.iter().enumerate() {
        let mut seen_before = false;
        for u in &tokens[..i] {
            if u.form == t.form {
                seen_before = true;
            }
        }
        if seen_before {
            continue;
        }
        let mut counts = vec![0; n_functions];
        for u in tokens {
            if u.form == t.form {
                counts[u.function.0] += 1;
            }
        }
        out.push((t.form.clone(), counts));
    }
    out
}

pub fn naive_totals(tokens: &[&TokenRecord], n_functions: usize) -> Vec<u64> {
    let mut totals = vec![0; n_functions];
    for t in tokens {
        totals[t.function.0] += 1;
    }
    totals
}

pub fn naive_hapax_totals(tokens: &[&TokenRecord], n_functions: usize) -> Vec<u64> {
    let mut totals = vec![0; n_functions];
    for t in tokens {
        let mut occurrences = 0;
        for u in tokens {
            if u.form == t.form {
                occurrences += 1;
            }
        }
        if occurrences == 1 {
            totals[t.function.0] += 1;
        }
    }
    totals
}

/// (frequency, n_types, proportion) per distinct frequency, ascending.
pub fn naive_proportions(
    tokens: &[&TokenRecord],
    n_functions: usize,
    reference: usize,
) -> Vec<(u64, u64, f64)> {
    let types = naive_types(tokens, n_functions);
    let mut max_f = 0;
    for (_, c) in &types {
        max_f = max_f.max(c.iter().sum::<u64>());
    }
    let mut out = Vec::new();
    for f in 1..=max_f {
        let mut n_types = 0;
        let mut reference_tokens = 0;
        for (_, c) in &types {
            if c.iter().sum::<u64>() == f {
                n_types += 1;
                reference_tokens += c[reference];
            }
        }
        if n_types > 0 {
            out.push((f, n_types, reference_tokens as f64 / (f * n_types) as f64));
        }
    }
    out
}

/// (train totals, train hapax totals, unseen held-out counts) for `fold`.
pub fn naive_fold(
    corpus: &TaggedCorpus,
    assignments: &[usize],
    fold: usize,
) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let n_functions = corpus.spec.n_functions();
    let mut training = Vec::new();
    let mut held_out = Vec::new();
    for (t, &f) in corpus.tokens.iter().zip(assignments) {
        if f == fold {
            held_out.push(t);
        } else {
            training.push(t);
        }
    }
    let mut unseen = vec![0; n_functions];
    for t in &held_out {
        let mut in_training = false;
        for u in &training {
            if u.form == t.form {
                in_training = true;
            }
        }
        if !in_training {
            unseen[t.function.0] += 1;
        }
    }
    (
        naive_totals(&training, n_functions),
        naive_hapax_totals(&training, n_functions),
        unseen,
    )
}

pub fn refs(corpus: &TaggedCorpus) -> Vec<&TokenRecord> {
    corpus.tokens.iter().collect()
}
