//! Synthetic two-function corpora with frequency-dependent mixing.
//!
//! Type `r` (rank 1 = most frequent) gets a token count proportional to
//! `r^-s`, apportioned to an exact total by largest remainder. Its
//! probability of the reference function moves linearly in `ln r` from
//! `p_high` at rank 1 to `p_low` at the last rank, so frequent and rare
//! types can be made to disagree about the function split.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::corpus::{ClassSpec, FunctionId, TaggedCorpus, TokenRecord};
use crate::crossval::FoldPlan;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SynthSpec {
    pub n_types: usize,
    pub zipf_exponent: f64,
    pub target_tokens: u64,
    /// Reference-function probability of the most frequent type.
    pub p_high: f64,
    /// Reference-function probability of the least frequent type.
    pub p_low: f64,
    pub seed: u64,
    /// Reference label first.
    pub functions: [String; 2],
}

impl Default for SynthSpec {
    fn default() -> Self {
        Self {
            n_types: 2000,
            zipf_exponent: 1.1,
            target_tokens: 50_000,
            p_high: 0.3,
            p_low: 0.9,
            seed: 0,
            functions: ["ref".to_string(), "other".to_string()],
        }
    }
}

impl SynthSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidArgument(m));
        if self.n_types < 2 {
            return bad(format!("n_types must be >= 2, got {}", self.n_types));
        }
        if !(self.zipf_exponent > 0.0 && self.zipf_exponent.is_finite()) {
            return bad(format!(
                "zipf exponent must be > 0, got {}",
                self.zipf_exponent
            ));
        }
        if self.target_tokens < self.n_types as u64 {
            return bad(format!(
                "target_tokens {} < n_types {}: every type needs a token",
                self.target_tokens, self.n_types
            ));
        }
        for (name, p) in [("p_high", self.p_high), ("p_low", self.p_low)] {
            if !(0.0..=1.0).contains(&p) {
                return bad(format!("{name} must lie in [0, 1], got {p}"));
            }
        }
        Ok(())
    }

    pub fn class_spec(&self) -> Result<ClassSpec> {
        let [a, b] = &self.functions;
        ClassSpec::new(
            "synth",
            vec![a.clone(), b.clone()],
            "",
            [
                (a.to_uppercase(), a.as_str()),
                (b.to_uppercase(), b.as_str()),
            ],
        )
    }

    /// Reference probability at 1-based `rank`.
    pub fn reference_probability(&self, rank: usize) -> f64 {
        let span = (self.n_types as f64).ln();
        let pos = (rank as f64).ln() / span;
        self.p_high + (self.p_low - self.p_high) * pos
    }

    /// Token count per rank: Zipf profile, exact total, every type >= 1.
    pub fn allocate(&self) -> Result<Vec<u64>> {
        self.validate()?;
        let weights: Vec<f64> = (1..=self.n_types)
            .map(|r| (r as f64).powf(-self.zipf_exponent))
            .collect();
        let sum: f64 = weights.iter().sum();
        let quotas: Vec<f64> = weights
            .iter()
            .map(|w| w / sum * self.target_tokens as f64)
            .collect();
        let mut counts: Vec<u64> = quotas.iter().map(|q| q.floor() as u64).collect();

        let assigned: u64 = counts.iter().sum();
        let mut order: Vec<usize> = (0..counts.len()).collect();
        // stable: ties go to the lower rank
        order.sort_by(|&i, &j| {
            let ri = quotas[i] - quotas[i].floor();
            let rj = quotas[j] - quotas[j].floor();
            rj.total_cmp(&ri)
        });
        for &i in order.iter().take((self.target_tokens - assigned) as usize) {
            counts[i] += 1;
        }

        for i in 0..counts.len() {
            if counts[i] == 0 {
                let donor = (0..counts.len())
                    .max_by_key(|&j| (counts[j], std::cmp::Reverse(j)))
                    .expect("non-empty");
                counts[donor] -= 1;
                counts[i] = 1;
            }
        }
        Ok(counts)
    }
}

/// Ground truth behind a generated corpus.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthTruth {
    pub forms: Vec<String>,
    pub frequencies: Vec<u64>,
    /// True reference-function probability per type, by rank.
    pub probabilities: Vec<f64>,
    index: HashMap<String, usize>,
}

impl SynthTruth {
    pub fn probability(&self, form: &str) -> Option<f64> {
        self.index.get(form).map(|&i| self.probabilities[i])
    }

    pub fn frequency(&self, form: &str) -> Option<u64> {
        self.index.get(form).map(|&i| self.frequencies[i])
    }

    /// Token-weighted true reference probability over `forms`; `None` when
    /// the set is empty or contains no known form.
    pub fn weighted_prior<'a, I>(&self, forms: I) -> Option<f64>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let (mut num, mut den) = (0.0, 0.0);
        for form in forms {
            if let Some(&i) = self.index.get(form) {
                let w = self.frequencies[i] as f64;
                num += w * self.probabilities[i];
                den += w;
            }
        }
        (den > 0.0).then(|| num / den)
    }

    /// True prior over the types that have no token outside `fold`.
    pub fn unseen_prior(&self, corpus: &TaggedCorpus, plan: &FoldPlan, fold: usize) -> Option<f64> {
        let training: HashSet<&str> = corpus
            .tokens
            .iter()
            .zip(&plan.assignments)
            .filter(|(_, &f)| f != fold)
            .map(|(t, _)| t.form.as_str())
            .collect();
        let unseen: HashSet<&str> = plan
            .held_out(fold)
            .map(|i| corpus.tokens[i].form.as_str())
            .filter(|f| !training.contains(f))
            .collect();
        self.weighted_prior(unseen)
    }

    /// `form,true_p_reference` sidecar, one row per type in rank order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("form,true_p_reference\n");
        for (f, p) in self.forms.iter().zip(&self.probabilities) {
            writeln!(out, "{f},{p:.6}").unwrap();
        }
        out
    }
}

pub fn generate(spec: &SynthSpec) -> Result<(TaggedCorpus, SynthTruth)> {
    let counts = spec.allocate()?;
    let class = Arc::new(spec.class_spec()?);
    let width = spec.n_types.to_string().len();
    let forms: Vec<String> = (1..=spec.n_types)
        .map(|r| format!("t{r:0width$}"))
        .collect();
    let probabilities: Vec<f64> = (1..=spec.n_types)
        .map(|r| spec.reference_probability(r))
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut tokens = Vec::with_capacity(spec.target_tokens as usize);
    for ((form, &count), &p) in forms.iter().zip(&counts).zip(&probabilities) {
        for _ in 0..count {
            let function = if rng.random::<f64>() < p { 0 } else { 1 };
            tokens.push(TokenRecord::new(form.clone(), FunctionId(function)));
        }
    }
    tokens.shuffle(&mut rng);

    let index = forms
        .iter()
        .enumerate()
        .map(|(i, f)| (f.clone(), i))
        .collect();
    let corpus = TaggedCorpus::from_tokens(class, tokens)?;
    Ok((
        corpus,
        SynthTruth {
            forms,
            frequencies: counts,
            probabilities,
            index,
        },
    ))
}
