//! Lexical prior estimation for morphologically ambiguous word forms.
//!
//! A form such as Dutch *lopen* can be an infinitive or a finite plural.
//! For frequent forms the per-form relative frequency is a fine prior, but
//! for rare and unseen forms one needs an estimate pooled over other types.
//! This crate computes two such pooled estimates, the overall MLE (relative
//! function frequencies over every token) and the hapax-based MLE (relative
//! function frequencies over the types seen exactly once), and provides the
//! k-fold cross-validation machinery to compare how well each predicts the
//! function distribution of held-out unseen types.
//!
//! The pipeline:
//!
//! 1. [`corpus`]: load a `form<TAB>tag` corpus and project it onto a
//!    [`ClassSpec`] (suffix filter plus tag-to-function map).
//! 2. [`spectrum`]: aggregate tokens into per-type counts, hapax totals and
//!    frequency-class proportion curves with running-median smoothing.
//! 3. [`estimators`]: overall, hapax and per-form MLEs, and a threshold
//!    backoff between the per-form and hapax estimates.
//! 4. [`crossval`]: token-level k-fold cross-validation with paired t-tests
//!    ([`stats`]) on observed vs. expected function ratios.
//! 5. [`synth`]: seeded synthetic corpora with frequency-dependent function
//!    mixing, for testing the estimators against known ground truth.
//!
//! ```
//! use lexprior::{ClassSpec, TaggedCorpus, build_spectrum, overall_mle, hapax_mle};
//!
//! let spec = ClassSpec::parse("name=en\nsuffix=en\nfunctions=inf,pl\nmap INF inf\nmap PL pl\n")?;
//! let corpus = TaggedCorpus::parse(
//!     "lopen\tINF\nlopen\tPL\nlopen\tINF\naanlokken\tINF\nhuis\tN\n",
//!     spec.into(),
//!     Default::default(),
//! )?;
//! let table = build_spectrum(&corpus);
//! assert_eq!(overall_mle(&table)?.probabilities, vec![0.75, 0.25]);
//! assert_eq!(hapax_mle(&table)?.probabilities, vec![1.0, 0.0]);
//! # Ok::<(), lexprior::Error>(())
//! ```

pub mod cli;
pub mod corpus;
pub mod crossval;
mod error;
pub mod estimators;
pub mod fixtures;
pub mod spectrum;
pub mod stats;
pub mod synth;

pub use corpus::{
    load_corpus, shuffle_tokens, ClassSpec, FunctionId, LoadOptions, TaggedCorpus, TokenRecord,
};
pub use crossval::{
    make_folds, ratio_ttests, run_crossval, run_fold, CrossValReport, FoldPlan, FoldResult,
    RatioOrientation,
};
pub use error::{Error, Result};
pub use estimators::{
    backoff_prior, expected_unseen_counts, form_mle, hapax_mle, overall_mle, EstimateSource,
    ExpectedCounts, PriorEstimate,
};
pub use spectrum::{
    build_spectrum, class_proportions, hapaxes, running_median, ClassProportionPoint,
    SpectrumTable, TypeCount,
};
pub use stats::{paired_t, TTestResult};
pub use synth::{generate, SynthSpec, SynthTruth};
