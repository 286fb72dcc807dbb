//! Maximum-likelihood priors over the functions of an ambiguity class.
//!
//! * [`overall_mle`] pools every token of the class.
//! * [`hapax_mle`] pools only the tokens of types seen once.
//! * [`form_mle`] uses a single form's own counts.
//! * [`backoff_prior`] picks [`form_mle`] for forms seen at least
//!   `threshold` times and [`hapax_mle`] otherwise.
//!
//! None of them smooth: the estimates are raw relative frequencies.

use std::fmt;

use crate::error::{Error, Result};
use crate::spectrum::SpectrumTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EstimateSource {
    Overall,
    Hapax,
    Form,
    BackoffForm,
    BackoffHapax,
}

impl EstimateSource {
    pub fn as_str(self) -> &'static str {
        match self {
            EstimateSource::Overall => "overall",
            EstimateSource::Hapax => "hapax",
            EstimateSource::Form => "form",
            EstimateSource::BackoffForm => "backoff-form",
            EstimateSource::BackoffHapax => "backoff-hapax",
        }
    }
}

impl fmt::Display for EstimateSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A probability vector over the functions of a class.
#[derive(Debug, Clone, PartialEq)]
pub struct PriorEstimate {
    pub probabilities: Vec<f64>,
    pub source: EstimateSource,
    /// Number of tokens the estimate was computed from.
    pub support: u64,
}

impl PriorEstimate {
    /// Relative frequencies of `counts`. Fails with [`Error::EmptyTable`]
    /// when all counts are zero.
    pub fn from_counts(counts: &[u64], source: EstimateSource) -> Result<Self> {
        let support: u64 = counts.iter().sum();
        if support == 0 {
            return Err(Error::EmptyTable);
        }
        let probabilities = counts.iter().map(|&c| c as f64 / support as f64).collect();
        Ok(Self {
            probabilities,
            source,
            support,
        })
    }

    pub fn probability(&self, function: crate::FunctionId) -> f64 {
        self.probabilities[function.0]
    }

    fn with_source(mut self, source: EstimateSource) -> Self {
        self.source = source;
        self
    }
}

pub fn overall_mle(table: &SpectrumTable) -> Result<PriorEstimate> {
    PriorEstimate::from_counts(&table.token_totals, EstimateSource::Overall)
}

pub fn hapax_mle(table: &SpectrumTable) -> Result<PriorEstimate> {
    PriorEstimate::from_counts(&table.hapax_totals, EstimateSource::Hapax)
        .map_err(|_| Error::NoHapaxes)
}

pub fn form_mle(table: &SpectrumTable, form: &str) -> Result<PriorEstimate> {
    let t = table
        .get(form)
        .ok_or_else(|| Error::UnseenForm(form.to_string()))?;
    PriorEstimate::from_counts(&t.per_function, EstimateSource::Form)
}

pub fn backoff_prior(table: &SpectrumTable, form: &str, threshold: u64) -> Result<PriorEstimate> {
    if threshold < 1 {
        return Err(Error::InvalidArgument(
            "backoff threshold must be >= 1".into(),
        ));
    }
    match table.get(form) {
        Some(t) if t.total >= threshold => {
            Ok(form_mle(table, form)?.with_source(EstimateSource::BackoffForm))
        }
        _ => Ok(hapax_mle(table)?.with_source(EstimateSource::BackoffHapax)),
    }
}

/// Expected per-function token counts, real-valued and rounded half-up.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpectedCounts {
    pub real: Vec<f64>,
    pub rounded: Vec<u64>,
}

impl ExpectedCounts {
    pub fn total(&self) -> f64 {
        self.real.iter().sum()
    }
}

pub fn expected_unseen_counts(estimate: &PriorEstimate, n_unseen_tokens: u64) -> ExpectedCounts {
    let n = n_unseen_tokens as f64;
    let real: Vec<f64> = estimate.probabilities.iter().map(|p| p * n).collect();
    let rounded = real.iter().map(|&x| round_half_up(x)).collect();
    ExpectedCounts { real, rounded }
}

fn round_half_up(x: f64) -> u64 {
    (x + 0.5).floor() as u64
}
