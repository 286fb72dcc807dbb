//! Per-type counts, hapax legomena and frequency-class proportion curves.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::corpus::{ClassSpec, FunctionId, TaggedCorpus, TokenRecord};
use crate::error::{Error, Result};

/// Token counts of one surface form, split by function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeCount {
    pub form: String,
    pub per_function: Vec<u64>,
    pub total: u64,
}

impl TypeCount {
    pub fn is_hapax(&self) -> bool {
        self.total == 1
    }

    /// The function of a hapax's single token.
    pub fn hapax_function(&self) -> Option<FunctionId> {
        if !self.is_hapax() {
            return None;
        }
        self.per_function
            .iter()
            .position(|&c| c == 1)
            .map(FunctionId)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumTable {
    pub spec: Arc<ClassSpec>,
    pub types: BTreeMap<String, TypeCount>,
    /// Tokens per function over all types.
    pub token_totals: Vec<u64>,
    /// Tokens per function over hapax types only.
    pub hapax_totals: Vec<u64>,
}

impl SpectrumTable {
    /// Aggregates an arbitrary token stream of the class `spec`.
    pub fn from_tokens<'a, I>(spec: Arc<ClassSpec>, tokens: I) -> Self
    where
        I: IntoIterator<Item = &'a TokenRecord>,
    {
        let n = spec.n_functions();
        let mut counts: HashMap<&'a str, Vec<u64>> = HashMap::new();
        let mut token_totals = vec![0; n];
        for t in tokens {
            counts.entry(t.form.as_str()).or_insert_with(|| vec![0; n])[t.function.0] += 1;
            token_totals[t.function.0] += 1;
        }
        let types: BTreeMap<String, TypeCount> = counts
            .into_iter()
            .map(|(form, per_function)| {
                let tc = TypeCount {
                    form: form.to_string(),
                    total: per_function.iter().sum(),
                    per_function,
                };
                (form.to_string(), tc)
            })
            .collect();
        let mut hapax_totals = vec![0; n];
        for f in types.values().filter_map(TypeCount::hapax_function) {
            hapax_totals[f.0] += 1;
        }
        Self {
            spec,
            types,
            token_totals,
            hapax_totals,
        }
    }

    pub fn n_tokens(&self) -> u64 {
        self.token_totals.iter().sum()
    }

    pub fn n_types(&self) -> usize {
        self.types.len()
    }

    pub fn n_hapaxes(&self) -> u64 {
        self.hapax_totals.iter().sum()
    }

    pub fn get(&self, form: &str) -> Option<&TypeCount> {
        self.types.get(form)
    }

    pub fn contains(&self, form: &str) -> bool {
        self.types.contains_key(form)
    }
}

pub fn build_spectrum(corpus: &TaggedCorpus) -> SpectrumTable {
    SpectrumTable::from_tokens(Arc::clone(&corpus.spec), &corpus.tokens)
}

/// Types occurring exactly once, in form order.
pub fn hapaxes(table: &SpectrumTable) -> Vec<&TypeCount> {
    table.types.values().filter(|t| t.is_hapax()).collect()
}

/// Reference-function share of the tokens in one frequency class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassProportionPoint {
    pub frequency: u64,
    pub n_types: u64,
    pub proportion: f64,
    pub log_frequency: f64,
}

/// One point per distinct type frequency `f`, ascending. The proportion is
/// token-weighted: reference tokens over `f * n_types`, so the `f = 1`
/// point equals the hapax-based estimate for `reference`.
pub fn class_proportions(
    table: &SpectrumTable,
    reference: FunctionId,
) -> Result<Vec<ClassProportionPoint>> {
    if reference.0 >= table.spec.n_functions() {
        return Err(Error::UnknownFunction(reference.to_string()));
    }
    // frequency -> (types, reference tokens)
    let mut classes: BTreeMap<u64, (u64, u64)> = BTreeMap::new();
    for t in table.types.values() {
        let c = classes.entry(t.total).or_default();
        c.0 += 1;
        c.1 += t.per_function[reference.0];
    }
    Ok(classes
        .into_iter()
        .map(
            |(frequency, (n_types, reference_tokens))| ClassProportionPoint {
                frequency,
                n_types,
                proportion: reference_tokens as f64 / (frequency * n_types) as f64,
                log_frequency: (frequency as f64).ln(),
            },
        )
        .collect())
}

/// Running median over a centered window of odd width `window >= 3`.
///
/// The first and last `(window - 1) / 2` values are copied through
/// unchanged; series shorter than the window come back as-is.
pub fn running_median(values: &[f64], window: usize) -> Result<Vec<f64>> {
    if window < 3 || window.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "running median window must be odd and >= 3, got {window}"
        )));
    }
    let half = window / 2;
    let mut out = values.to_vec();
    if values.len() < window {
        return Ok(out);
    }
    let mut buf = vec![0.0; window];
    for i in half..values.len() - half {
        buf.copy_from_slice(&values[i - half..=i + half]);
        buf.sort_unstable_by(f64::total_cmp);
        out[i] = buf[half];
    }
    Ok(out)
}
