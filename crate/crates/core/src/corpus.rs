//! Tagged token streams projected onto an ambiguity class.
//!
//! Corpus files carry one token per line as `form<TAB>tag`; lines starting
//! with `#` and blank lines are ignored. A [`ClassSpec`] selects the tokens
//! that belong to one ambiguity class: the form must end with the class
//! suffix and the tag must be mapped to one of the class functions. Every
//! other line is counted in [`TaggedCorpus::dropped`].

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Index of a function label within a [`ClassSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FunctionId(pub usize);

impl FunctionId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Definition of an ambiguity class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSpec {
    name: String,
    functions: Vec<String>,
    suffix: String,
    tag_map: BTreeMap<String, FunctionId>,
}

impl ClassSpec {
    /// Builds a class from `(tag, function label)` pairs.
    pub fn new<I, T, L>(
        name: impl Into<String>,
        functions: Vec<String>,
        suffix: impl Into<String>,
        mappings: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (T, L)>,
        T: Into<String>,
        L: AsRef<str>,
    {
        let name = name.into();
        if name.trim().is_empty() {
            return Err(Error::ClassSpec("empty class name".into()));
        }
        if functions.len() < 2 {
            return Err(Error::ClassSpec(format!(
                "need at least 2 functions, got {}",
                functions.len()
            )));
        }
        for (i, f) in functions.iter().enumerate() {
            if f.is_empty() {
                return Err(Error::ClassSpec("empty function label".into()));
            }
            if functions[..i].contains(f) {
                return Err(Error::ClassSpec(format!("duplicate function `{f}`")));
            }
        }

        let mut tag_map = BTreeMap::new();
        for (tag, label) in mappings {
            let tag = tag.into();
            let label = label.as_ref();
            let id = functions
                .iter()
                .position(|f| f == label)
                .map(FunctionId)
                .ok_or_else(|| {
                    Error::ClassSpec(format!("tag `{tag}` maps to unknown function `{label}`"))
                })?;
            if tag_map.insert(tag.clone(), id).is_some() {
                return Err(Error::ClassSpec(format!("tag `{tag}` mapped twice")));
            }
        }
        for (i, f) in functions.iter().enumerate() {
            if !tag_map.values().any(|id| id.0 == i) {
                return Err(Error::ClassSpec(format!("no tag maps to function `{f}`")));
            }
        }

        Ok(Self {
            name,
            functions,
            suffix: suffix.into(),
            tag_map,
        })
    }

    /// Parses the plain-text class spec format:
    ///
    /// ```text
    /// name=dutch-en
    /// suffix=en
    /// functions=inf,pl
    /// map VINF inf
    /// map VPL pl
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
            .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));

        let mut header = |key: &str| -> Result<String> {
            let (no, line) = lines
                .next()
                .ok_or_else(|| Error::ClassSpec(format!("missing `{key}=` line")))?;
            line.strip_prefix(key)
                .and_then(|rest| rest.strip_prefix('='))
                .map(|v| v.trim().to_string())
                .ok_or_else(|| Error::ClassSpec(format!("line {no}: expected `{key}=...`")))
        };
        let name = header("name")?;
        let suffix = header("suffix")?;
        let functions: Vec<String> = header("functions")?
            .split(',')
            .map(|f| f.trim().to_string())
            .collect();

        let mut mappings = Vec::new();
        for (no, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts.as_slice() {
                ["map", tag, label] => mappings.push((tag.to_string(), label.to_string())),
                _ => {
                    return Err(Error::ClassSpec(format!(
                        "line {no}: expected `map <TAG> <label>`"
                    )))
                }
            }
        }
        Self::new(name, functions, suffix, mappings)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Renders the spec in the format accepted by [`ClassSpec::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "name={}\nsuffix={}\nfunctions={}\n",
            self.name,
            self.suffix,
            self.functions.join(",")
        );
        for (tag, id) in &self.tag_map {
            out.push_str(&format!("map {} {}\n", tag, self.functions[id.0]));
        }
        out
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn functions(&self) -> &[String] {
        &self.functions
    }

    pub fn n_functions(&self) -> usize {
        self.functions.len()
    }

    pub fn suffix(&self) -> &str {
        &self.suffix
    }

    pub fn tag_map(&self) -> &BTreeMap<String, FunctionId> {
        &self.tag_map
    }

    pub fn function_id(&self, label: &str) -> Result<FunctionId> {
        self.functions
            .iter()
            .position(|f| f == label)
            .map(FunctionId)
            .ok_or_else(|| Error::UnknownFunction(label.to_string()))
    }

    pub fn label(&self, id: FunctionId) -> &str {
        &self.functions[id.0]
    }

    pub fn function_for_tag(&self, tag: &str) -> Option<FunctionId> {
        self.tag_map.get(tag).copied()
    }
}

/// One corpus token of the ambiguity class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TokenRecord {
    pub form: String,
    pub function: FunctionId,
}

impl TokenRecord {
    pub fn new(form: impl Into<String>, function: FunctionId) -> Self {
        Self {
            form: form.into(),
            function,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadOptions {
    /// Lowercase forms (and the suffix) before matching.
    pub fold_case: bool,
}

/// The tokens of one ambiguity class, in corpus order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedCorpus {
    pub spec: Arc<ClassSpec>,
    pub tokens: Vec<TokenRecord>,
    /// Non-comment input lines excluded by the suffix or tag filter.
    pub dropped: usize,
}

impl TaggedCorpus {
    /// Wraps already-projected tokens, checking them against `spec`.
    pub fn from_tokens(spec: Arc<ClassSpec>, tokens: Vec<TokenRecord>) -> Result<Self> {
        for t in &tokens {
            if t.form.trim().is_empty() {
                return Err(Error::InvalidArgument("empty form".into()));
            }
            if !t.form.ends_with(spec.suffix()) {
                return Err(Error::InvalidArgument(format!(
                    "form `{}` lacks suffix `{}`",
                    t.form,
                    spec.suffix()
                )));
            }
            if t.function.0 >= spec.n_functions() {
                return Err(Error::InvalidArgument(format!(
                    "function {} out of range for class `{}`",
                    t.function,
                    spec.name()
                )));
            }
        }
        Ok(Self {
            spec,
            tokens,
            dropped: 0,
        })
    }

    pub fn parse(text: &str, spec: Arc<ClassSpec>, options: LoadOptions) -> Result<Self> {
        let suffix = if options.fold_case {
            spec.suffix().to_lowercase()
        } else {
            spec.suffix().to_string()
        };
        let mut tokens = Vec::new();
        let mut dropped = 0;

        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 2 {
                return Err(Error::MalformedLine {
                    line: i + 1,
                    reason: format!("expected `form<TAB>tag`, found {} field(s)", fields.len()),
                });
            }
            let form = fields[0].trim();
            let tag = fields[1].trim();
            if form.is_empty() {
                return Err(Error::MalformedLine {
                    line: i + 1,
                    reason: "empty form".into(),
                });
            }
            let form = if options.fold_case {
                form.to_lowercase()
            } else {
                form.to_string()
            };
            match spec.function_for_tag(tag) {
                Some(function) if form.ends_with(&suffix) => {
                    tokens.push(TokenRecord { form, function })
                }
                _ => dropped += 1,
            }
        }

        Ok(Self {
            spec,
            tokens,
            dropped,
        })
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Serializes the tokens in corpus-file format, using the first tag
    /// mapped to each function.
    pub fn to_text(&self) -> String {
        let tags: Vec<&str> = (0..self.spec.n_functions())
            .map(|i| {
                self.spec
                    .tag_map()
                    .iter()
                    .find(|(_, id)| id.0 == i)
                    .map(|(tag, _)| tag.as_str())
                    .expect("every function has a tag")
            })
            .collect();
        let mut out = String::with_capacity(self.tokens.len() * 12);
        for t in &self.tokens {
            out.push_str(&t.form);
            out.push('\t');
            out.push_str(tags[t.function.0]);
            out.push('\n');
        }
        out
    }
}

pub fn load_corpus(
    path: impl AsRef<Path>,
    spec: Arc<ClassSpec>,
    options: LoadOptions,
) -> Result<TaggedCorpus> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    TaggedCorpus::parse(&text, spec, options)
}

/// Seeded permutation of `0..n`.
pub(crate) fn permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    idx.shuffle(&mut rng);
    idx
}

/// Returns a copy of `corpus` with its tokens permuted; the permutation is a
/// pure function of the token count and `seed`.
pub fn shuffle_tokens(corpus: &TaggedCorpus, seed: u64) -> TaggedCorpus {
    let tokens = permutation(corpus.tokens.len(), seed)
        .into_iter()
        .map(|i| corpus.tokens[i].clone())
        .collect();
    TaggedCorpus {
        spec: Arc::clone(&corpus.spec),
        tokens,
        dropped: corpus.dropped,
    }
}
