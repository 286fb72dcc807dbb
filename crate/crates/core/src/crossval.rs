//! Token-level k-fold cross-validation of the overall and hapax-based MLEs.
//!
//! The token list is shuffled with a seed and cut into `k` contiguous parts
//! whose sizes differ by at most one (the first `n mod k` folds get the
//! extra token). Each part in turn is held out; the remaining tokens form
//! the training set from which both MLEs are computed. Held-out tokens whose
//! form never occurs in training are the "unseen" tokens, and each MLE
//! predicts how they split over the functions. A paired t-test over the
//! folds compares observed and predicted function ratios.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::corpus::{permutation, ClassSpec, FunctionId, TaggedCorpus};
use crate::error::{Error, Result};
use crate::estimators::{expected_unseen_counts, EstimateSource, ExpectedCounts, PriorEstimate};
use crate::spectrum::SpectrumTable;
use crate::stats::{paired_t, TTestResult};

/// Fold assignment for every token position of a corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldPlan {
    pub k: usize,
    pub seed: u64,
    /// Fold number (1-based) of each token, indexed by corpus position.
    pub assignments: Vec<usize>,
}

impl FoldPlan {
    pub fn fold_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &f in &self.assignments {
            sizes[f - 1] += 1;
        }
        sizes
    }

    pub fn held_out(&self, fold: usize) -> impl Iterator<Item = usize> + '_ {
        self.assignments
            .iter()
            .enumerate()
            .filter(move |(_, &f)| f == fold)
            .map(|(i, _)| i)
    }
}

pub fn make_folds(corpus: &TaggedCorpus, k: usize, seed: u64) -> Result<FoldPlan> {
    let n = corpus.len();
    if k < 2 {
        return Err(Error::InvalidArgument(format!("k must be >= 2, got {k}")));
    }
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "k = {k} exceeds token count {n}"
        )));
    }
    let order = permutation(n, seed);
    let (base, extra) = (n / k, n % k);
    let mut assignments = vec![0; n];
    let mut pos = 0;
    for fold in 1..=k {
        let size = base + usize::from(fold <= extra);
        for &token in &order[pos..pos + size] {
            assignments[token] = fold;
        }
        pos += size;
    }
    Ok(FoldPlan {
        k,
        seed,
        assignments,
    })
}

/// Bookkeeping of one held-out run.
#[derive(Debug, Clone, PartialEq)]
pub struct FoldResult {
    pub run: usize,
    /// Training tokens per function.
    pub train_totals: Vec<u64>,
    /// Training hapax tokens per function.
    pub hapax_totals: Vec<u64>,
    pub omle: PriorEstimate,
    pub hmle: PriorEstimate,
    /// Held-out tokens of forms absent from training, per function.
    pub unseen_observed: Vec<u64>,
    pub expected_o: ExpectedCounts,
    pub expected_h: ExpectedCounts,
}

impl FoldResult {
    /// Derives estimates and expectations from the three count rows.
    pub fn from_counts(
        run: usize,
        train_totals: Vec<u64>,
        hapax_totals: Vec<u64>,
        unseen_observed: Vec<u64>,
    ) -> Result<Self> {
        let omle = PriorEstimate::from_counts(&train_totals, EstimateSource::Overall)?;
        let hmle = PriorEstimate::from_counts(&hapax_totals, EstimateSource::Hapax)
            .map_err(|_| Error::NoHapaxes)?;
        let n0: u64 = unseen_observed.iter().sum();
        Ok(Self {
            run,
            expected_o: expected_unseen_counts(&omle, n0),
            expected_h: expected_unseen_counts(&hmle, n0),
            train_totals,
            hapax_totals,
            omle,
            hmle,
            unseen_observed,
        })
    }

    pub fn n_unseen(&self) -> u64 {
        self.unseen_observed.iter().sum()
    }

    /// False when no held-out token was unseen; expectations are then zero.
    pub fn has_unseen(&self) -> bool {
        self.n_unseen() > 0
    }
}

pub fn run_fold(corpus: &TaggedCorpus, plan: &FoldPlan, fold: usize) -> Result<FoldResult> {
    if plan.assignments.len() != corpus.len() {
        return Err(Error::InvalidArgument(format!(
            "fold plan covers {} tokens, corpus has {}",
            plan.assignments.len(),
            corpus.len()
        )));
    }
    if fold < 1 || fold > plan.k {
        return Err(Error::InvalidArgument(format!(
            "fold {fold} outside 1..={}",
            plan.k
        )));
    }

    let training = corpus
        .tokens
        .iter()
        .zip(&plan.assignments)
        .filter(|(_, &f)| f != fold)
        .map(|(t, _)| t);
    let table = SpectrumTable::from_tokens(Arc::clone(&corpus.spec), training);

    let mut unseen = vec![0; corpus.spec.n_functions()];
    for i in plan.held_out(fold) {
        let t = &corpus.tokens[i];
        if !table.contains(&t.form) {
            unseen[t.function.0] += 1;
        }
    }

    FoldResult::from_counts(fold, table.token_totals, table.hapax_totals, unseen)
        .map_err(|e| e.in_fold(fold))
}

/// Which function ratio the t-tests compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatioOrientation {
    pub numerator: FunctionId,
    pub denominator: FunctionId,
}

impl RatioOrientation {
    pub fn new(numerator: FunctionId, denominator: FunctionId) -> Self {
        Self {
            numerator,
            denominator,
        }
    }

    /// First function over second function.
    pub fn default_for(_spec: &ClassSpec) -> Self {
        Self::new(FunctionId(0), FunctionId(1))
    }

    /// Parses `A/B` with labels from `spec`.
    pub fn parse(spec: &ClassSpec, text: &str) -> Result<Self> {
        let (a, b) = text.split_once('/').ok_or_else(|| {
            Error::InvalidArgument(format!("ratio `{text}` is not of the form A/B"))
        })?;
        let o = Self::new(spec.function_id(a.trim())?, spec.function_id(b.trim())?);
        if o.numerator == o.denominator {
            return Err(Error::InvalidArgument(
                "ratio numerator equals denominator".into(),
            ));
        }
        Ok(o)
    }

    fn ratio(&self, counts: &[f64], which: &'static str) -> Result<f64> {
        let den = counts[self.denominator.0];
        if den == 0.0 {
            return Err(Error::ZeroDenominator { which });
        }
        Ok(counts[self.numerator.0] / den)
    }
}

/// Paired t-tests of observed unseen-token ratios against the ratios
/// predicted by the overall and hapax-based MLEs (unrounded expectations).
pub fn ratio_ttests(
    folds: &[FoldResult],
    orientation: RatioOrientation,
) -> Result<(TTestResult, TTestResult)> {
    let mut observed = Vec::with_capacity(folds.len());
    let mut expected_o = Vec::with_capacity(folds.len());
    let mut expected_h = Vec::with_capacity(folds.len());
    for f in folds {
        let obs: Vec<f64> = f.unseen_observed.iter().map(|&c| c as f64).collect();
        let wrap = |e: Error| e.in_fold(f.run);
        observed.push(orientation.ratio(&obs, "observed").map_err(wrap)?);
        expected_o.push(
            orientation
                .ratio(&f.expected_o.real, "overall-expected")
                .map_err(wrap)?,
        );
        expected_h.push(
            orientation
                .ratio(&f.expected_h.real, "hapax-expected")
                .map_err(wrap)?,
        );
    }
    Ok((
        paired_t(&observed, &expected_o)?,
        paired_t(&observed, &expected_h)?,
    ))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossValReport {
    pub class_name: String,
    pub labels: Vec<String>,
    pub k: usize,
    pub seed: u64,
    pub orientation: RatioOrientation,
    pub folds: Vec<FoldResult>,
    pub ttest_o: TTestResult,
    pub ttest_h: TTestResult,
}

pub fn run_crossval(
    corpus: &TaggedCorpus,
    k: usize,
    seed: u64,
    orientation: RatioOrientation,
) -> Result<CrossValReport> {
    let n_functions = corpus.spec.n_functions();
    for id in [orientation.numerator, orientation.denominator] {
        if id.0 >= n_functions {
            return Err(Error::UnknownFunction(id.to_string()));
        }
    }
    let plan = make_folds(corpus, k, seed)?;
    let folds = (1..=k)
        .map(|fold| run_fold(corpus, &plan, fold))
        .collect::<Result<Vec<_>>>()?;
    let (ttest_o, ttest_h) = ratio_ttests(&folds, orientation)?;
    Ok(CrossValReport {
        class_name: corpus.spec.name().to_string(),
        labels: corpus.spec.functions().to_vec(),
        k,
        seed,
        orientation,
        folds,
        ttest_o,
        ttest_h,
    })
}

fn fmt_prob(p: f64) -> String {
    format!("{p:.6}")
}

fn fmt_t(t: f64) -> String {
    format!("{t:.6}")
}

fn fmt_p(p: f64) -> String {
    format!("{p:.6e}")
}

impl CrossValReport {
    fn header_line(&self) -> String {
        format!(
            "class={} k={} seed={} ratio={}/{}",
            self.class_name,
            self.k,
            self.seed,
            self.labels[self.orientation.numerator.0],
            self.labels[self.orientation.denominator.0]
        )
    }

    /// Rows of the table: (row label, one cell per fold).
    fn rows(&self) -> Vec<(String, Vec<String>)> {
        let reference = &self.labels[self.orientation.numerator.0];
        let per_function = |prefix: &str, get: &dyn Fn(&FoldResult) -> &[u64]| {
            self.labels
                .iter()
                .enumerate()
                .map(|(i, l)| {
                    (
                        format!("{prefix}({l})"),
                        self.folds.iter().map(|f| get(f)[i].to_string()).collect(),
                    )
                })
                .collect::<Vec<_>>()
        };
        let estimate = |name: &str, get: &dyn Fn(&FoldResult) -> &PriorEstimate| {
            (
                format!("{name}({reference})"),
                self.folds
                    .iter()
                    .map(|f| fmt_prob(get(f).probabilities[self.orientation.numerator.0]))
                    .collect(),
            )
        };

        let mut rows = per_function("N", &|f| &f.train_totals);
        rows.push(estimate("OMLE", &|f| &f.omle));
        rows.extend(per_function("N1", &|f| &f.hapax_totals));
        rows.push(estimate("HMLE", &|f| &f.hmle));
        rows.extend(per_function("N0", &|f| &f.unseen_observed));
        rows.extend(per_function("Eo", &|f| &f.expected_o.rounded));
        rows.extend(per_function("Eh", &|f| &f.expected_h.rounded));
        rows
    }

    fn ttest_lines(&self) -> [(&'static str, &TTestResult); 2] {
        [("overall", &self.ttest_o), ("hapax", &self.ttest_h)]
    }

    /// One CSV row per fold followed by one `ttest` row per estimator.
    pub fn to_csv(&self) -> String {
        let rows = self.rows();
        let mut out = String::new();
        writeln!(out, "# {}", self.header_line()).unwrap();
        let header: Vec<&str> = std::iter::once("run")
            .chain(rows.iter().map(|(l, _)| l.as_str()))
            .collect();
        writeln!(out, "{}", header.join(",")).unwrap();
        for (j, fold) in self.folds.iter().enumerate() {
            let cells: Vec<&str> = rows.iter().map(|(_, c)| c[j].as_str()).collect();
            writeln!(out, "{},{}", fold.run, cells.join(",")).unwrap();
        }
        for (name, t) in self.ttest_lines() {
            writeln!(
                out,
                "ttest,{name},{},{},{}",
                fmt_t(t.t),
                t.df,
                fmt_p(t.p_two_sided)
            )
            .unwrap();
        }
        out
    }

    /// The same numbers as [`CrossValReport::to_csv`], laid out with one
    /// column per run.
    pub fn to_table(&self) -> String {
        let rows = self.rows();
        let runs: Vec<String> = self.folds.iter().map(|f| f.run.to_string()).collect();
        let label_w = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(3).max(3);
        let cell_w = rows
            .iter()
            .flat_map(|(_, c)| c.iter().map(String::len))
            .max()
            .unwrap_or(1);

        let mut out = String::new();
        writeln!(out, "Cross-validation: {}", self.header_line()).unwrap();
        let mut line = format!("{:<label_w$}", "Run");
        for r in &runs {
            write!(line, "  {r:>cell_w$}").unwrap();
        }
        writeln!(out, "{line}").unwrap();
        for (label, cells) in &rows {
            let mut line = format!("{label:<label_w$}");
            for c in cells {
                write!(line, "  {c:>cell_w$}").unwrap();
            }
            writeln!(out, "{line}").unwrap();
        }
        for (name, t) in self.ttest_lines() {
            writeln!(
                out,
                "paired t-test ({name}): t = {}, df = {}, p = {}",
                fmt_t(t.t),
                t.df,
                fmt_p(t.p_two_sided)
            )
            .unwrap();
        }
        out
    }
}
