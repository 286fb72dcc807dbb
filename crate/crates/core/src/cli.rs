//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error. Data goes to `--out`
//! or standard output, diagnostics to standard error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use crate::corpus::{load_corpus, ClassSpec, LoadOptions, TaggedCorpus};
use crate::crossval::{run_crossval, RatioOrientation};
use crate::error::Error;
use crate::estimators::{backoff_prior, hapax_mle, overall_mle};
use crate::spectrum::{build_spectrum, class_proportions, running_median};
use crate::synth::{generate, SynthSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "lexprior",
    version,
    about = "Lexical priors for ambiguous word forms from hapax legomena"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Type, token and hapax totals per function
    Spectrum(Input),
    /// Backoff priors for individual forms
    Priors(PriorsArgs),
    /// k-fold cross-validation as CSV
    Crossval(CrossvalArgs),
    /// Frequency-class proportions with running-median smoothing
    Figure(FigureArgs),
    /// Generate a synthetic corpus with known priors
    Synth(SynthArgs),
    /// k-fold cross-validation as a text table
    Report(CrossvalArgs),
}

#[derive(Debug, Args)]
pub struct Input {
    #[arg(long, value_name = "PATH")]
    pub corpus: PathBuf,
    #[arg(long = "class-spec", value_name = "PATH")]
    pub class_spec: PathBuf,
    /// Lowercase forms before matching
    #[arg(long)]
    pub fold_case: bool,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PriorsArgs {
    #[command(flatten)]
    pub input: Input,
    /// Form to estimate (repeatable)
    #[arg(long = "form", value_name = "FORM")]
    pub forms: Vec<String>,
    /// File with one form per line
    #[arg(long, value_name = "PATH")]
    pub forms_file: Option<PathBuf>,
    /// Minimum form frequency for using the form's own counts
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    pub threshold: u64,
}

#[derive(Debug, Args)]
pub struct CrossvalArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long, default_value_t = 10, value_parser = parse_k)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Ratio orientation NUMERATOR/DENOMINATOR (default: first/second function)
    #[arg(long, value_name = "A/B", value_parser = parse_ratio)]
    pub ratio: Option<(String, String)>,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long = "smooth-window", default_value_t = 5, value_parser = parse_window)]
    pub smooth_window: usize,
    /// Function whose share is plotted (default: first function)
    #[arg(long, value_name = "LABEL")]
    pub reference: Option<String>,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    /// Corpus output; the truth sidecar and class spec are written next to it
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 2000)]
    pub types: usize,
    #[arg(long, default_value_t = 50_000)]
    pub tokens: u64,
    #[arg(long, default_value_t = 1.1)]
    pub exponent: f64,
    #[arg(long = "p-high", default_value_t = 0.3)]
    pub p_high: f64,
    #[arg(long = "p-low", default_value_t = 0.9)]
    pub p_low: f64,
}

fn parse_k(s: &str) -> Result<usize, String> {
    let k: usize = s.parse().map_err(|e| format!("{e}"))?;
    if k < 2 {
        return Err(format!("k must be >= 2, got {k}"));
    }
    Ok(k)
}

fn parse_window(s: &str) -> Result<usize, String> {
    let w: usize = s.parse().map_err(|e| format!("{e}"))?;
    if w < 3 || w.is_multiple_of(2) {
        return Err(format!("window must be odd and >= 3, got {w}"));
    }
    Ok(w)
}

fn parse_ratio(s: &str) -> Result<(String, String), String> {
    match s.split_once('/') {
        Some((a, b)) if !a.is_empty() && !b.is_empty() => Ok((a.to_string(), b.to_string())),
        _ => Err(format!("expected A/B, got `{s}`")),
    }
}

enum Failure {
    Usage(String),
    Data(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Data(e)
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(&config.command, stdout) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Data(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DATA
        }
    }
}

fn execute(command: &Command, stdout: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Spectrum(input) => {
            let corpus = load(input)?;
            emit(input.out.as_deref(), stdout, &spectrum_csv(&corpus))
        }
        Command::Priors(args) => {
            let mut forms = args.forms.clone();
            if let Some(path) = &args.forms_file {
                let text = read(path)?;
                forms.extend(
                    text.lines()
                        .map(str::trim)
                        .filter(|l| !l.is_empty())
                        .map(String::from),
                );
            }
            if forms.is_empty() {
                return Err(Failure::Usage("priors needs --form or --forms-file".into()));
            }
            let corpus = load(&args.input)?;
            let text = priors_csv(&corpus, &forms, args.threshold)?;
            emit(args.input.out.as_deref(), stdout, &text)
        }
        Command::Crossval(args) | Command::Report(args) => {
            let corpus = load(&args.input)?;
            let orientation = match &args.ratio {
                Some((a, b)) => RatioOrientation::parse(&corpus.spec, &format!("{a}/{b}"))
                    .map_err(|e| Failure::Usage(e.to_string()))?,
                None => RatioOrientation::default_for(&corpus.spec),
            };
            let report = run_crossval(&corpus, args.k, args.seed, orientation)?;
            let text = if matches!(command, Command::Report(_)) {
                report.to_table()
            } else {
                report.to_csv()
            };
            emit(args.input.out.as_deref(), stdout, &text)
        }
        Command::Figure(args) => {
            let corpus = load(&args.input)?;
            let reference = match &args.reference {
                Some(label) => corpus
                    .spec
                    .function_id(label)
                    .map_err(|e| Failure::Usage(e.to_string()))?,
                None => crate::FunctionId(0),
            };
            let text = figure_csv(&corpus, reference, args.smooth_window)?;
            emit(args.input.out.as_deref(), stdout, &text)
        }
        Command::Synth(args) => {
            let spec = SynthSpec {
                n_types: args.types,
                zipf_exponent: args.exponent,
                target_tokens: args.tokens,
                p_high: args.p_high,
                p_low: args.p_low,
                seed: args.seed,
                ..SynthSpec::default()
            };
            spec.validate().map_err(|e| Failure::Usage(e.to_string()))?;
            let (corpus, truth) = generate(&spec)?;
            let header = format!(
                "# synth seed={} types={} tokens={} exponent={} p_high={} p_low={}\n",
                spec.seed,
                spec.n_types,
                spec.target_tokens,
                spec.zipf_exponent,
                spec.p_high,
                spec.p_low
            );
            write_file(&args.out, &(header + &corpus.to_text()))?;
            write_file(&sidecar(&args.out, ".truth.csv"), &truth.to_csv())?;
            write_file(&sidecar(&args.out, ".class"), &corpus.spec.to_text())?;
            Ok(())
        }
    }
}

fn sidecar(path: &Path, ext: &str) -> PathBuf {
    let mut s = path.as_os_str().to_os_string();
    s.push(ext);
    PathBuf::from(s)
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|source| {
        Failure::Data(Error::Io {
            path: path.to_path_buf(),
            source,
        })
    })
}

fn emit(out: Option<&Path>, stdout: &mut dyn Write, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => write_file(path, text),
        None => stdout.write_all(text.as_bytes()).map_err(|source| {
            Failure::Data(Error::Io {
                path: PathBuf::from("<stdout>"),
                source,
            })
        }),
    }
}

fn load(input: &Input) -> Result<TaggedCorpus, Error> {
    let spec = Arc::new(ClassSpec::from_file(&input.class_spec)?);
    load_corpus(
        &input.corpus,
        spec,
        LoadOptions {
            fold_case: input.fold_case,
        },
    )
}

/// Totals per function, with both pooled estimates where defined.
pub fn spectrum_csv(corpus: &TaggedCorpus) -> String {
    let table = build_spectrum(corpus);
    let omle = overall_mle(&table).ok();
    let hmle = hapax_mle(&table).ok();
    let mut out = format!(
        "# class={} types={} tokens={} hapaxes={} dropped={}\n",
        corpus.spec.name(),
        table.n_types(),
        table.n_tokens(),
        table.n_hapaxes(),
        corpus.dropped
    );
    out.push_str("function,tokens,hapax_tokens,overall_mle,hapax_mle\n");
    let prob = |e: &Option<crate::PriorEstimate>, i: usize| {
        e.as_ref()
            .map(|e| format!("{:.6}", e.probabilities[i]))
            .unwrap_or_default()
    };
    for (i, label) in corpus.spec.functions().iter().enumerate() {
        writeln!(
            out,
            "{label},{},{},{},{}",
            table.token_totals[i],
            table.hapax_totals[i],
            prob(&omle, i),
            prob(&hmle, i)
        )
        .unwrap();
    }
    out
}

/// `form,source,support,<label>...` rows for each requested form.
pub fn priors_csv(
    corpus: &TaggedCorpus,
    forms: &[String],
    threshold: u64,
) -> Result<String, Error> {
    let table = build_spectrum(corpus);
    let mut out = format!(
        "form,source,support,{}\n",
        corpus.spec.functions().join(",")
    );
    for form in forms {
        let e = backoff_prior(&table, form, threshold)?;
        let probs: Vec<String> = e.probabilities.iter().map(|p| format!("{p:.6}")).collect();
        writeln!(out, "{form},{},{},{}", e.source, e.support, probs.join(",")).unwrap();
    }
    Ok(out)
}

/// Frequency-class proportions of `reference` plus their running median.
pub fn figure_csv(
    corpus: &TaggedCorpus,
    reference: crate::FunctionId,
    window: usize,
) -> Result<String, Error> {
    let table = build_spectrum(corpus);
    let points = class_proportions(&table, reference)?;
    let props: Vec<f64> = points.iter().map(|p| p.proportion).collect();
    let smoothed = running_median(&props, window)?;
    let mut out = String::from("frequency,log_frequency,n_types,proportion,smoothed\n");
    for (p, s) in points.iter().zip(smoothed) {
        writeln!(
            out,
            "{},{:.6},{},{:.6},{:.6}",
            p.frequency, p.log_frequency, p.n_types, p.proportion, s
        )
        .unwrap();
    }
    Ok(out)
}
