use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const CLASS: &str = "name=dutch-en\nsuffix=en\nfunctions=inf,pl\nmap INF inf\nmap PL pl\n";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lexprior"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn lexprior")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

struct Fixture {
    _dir: TempDir,
    corpus: PathBuf,
    class: PathBuf,
}

impl Fixture {
    fn new(corpus_text: &str) -> Self {
        let dir = tempfile::tempdir().unwrap();
        let corpus = dir.path().join("corpus.tsv");
        let class = dir.path().join("en.class");
        fs::write(&corpus, corpus_text).unwrap();
        fs::write(&class, CLASS).unwrap();
        Self {
            _dir: dir,
            corpus,
            class,
        }
    }

    fn args<'a>(&'a self, sub: &[&'a str]) -> Vec<&'a str> {
        let mut v = sub.to_vec();
        v.extend(["--corpus", p(&self.corpus), "--class-spec", p(&self.class)]);
        v
    }
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn lopen_corpus() -> String {
    let mut s = String::from("# lopen counts\n");
    for _ in 0..92 {
        s.push_str("lopen\tINF\n");
    }
    for _ in 0..43 {
        s.push_str("lopen\tPL\n");
    }
    s.push_str("aanlokken\tINF\nzeggen\tPL\nhuis\tN\n");
    s
}

/// A corpus on which every fold of a 4-fold split has unseen tokens of both
/// functions: 40 hapaxes alternating inf/pl plus a few frequent forms.
fn crossval_corpus() -> String {
    let mut s = String::new();
    for i in 0..40 {
        let tag = if i % 2 == 0 { "INF" } else { "PL" };
        s.push_str(&format!("vorm{i}en\t{tag}\n"));
    }
    for _ in 0..10 {
        s.push_str("lopen\tINF\nlopen\tPL\nhebben\tPL\n");
    }
    s
}

#[test]
fn priors_for_frequent_and_unseen_forms() {
    let fx = Fixture::new(&lopen_corpus());
    let o = run(&fx.args(&[
        "priors",
        "--form",
        "lopen",
        "--form",
        "bedraden",
        "--threshold",
        "10",
    ]));
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "form,source,support,inf,pl");
    assert!(
        lines[1].starts_with("lopen,backoff-form,135,0.681481,"),
        "{}",
        lines[1]
    );
    assert_eq!(lines[2], "bedraden,backoff-hapax,2,0.500000,0.500000");
}

#[test]
fn priors_from_forms_file() {
    let fx = Fixture::new(&lopen_corpus());
    let forms = fx.corpus.with_file_name("forms.txt");
    fs::write(&forms, "lopen\n\naanlokken\n").unwrap();
    let o = run(&fx.args(&["priors", "--forms-file", p(&forms)]));
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    // default threshold 2: a hapax backs off to the hapax estimate
    assert!(out.contains("aanlokken,backoff-hapax,2,0.500000,0.500000"));
}

#[test]
fn figure_on_three_token_corpus() {
    let fx = Fixture::new("lopen\tINF\nlopen\tPL\nlachen\tINF\n");
    let o = run(&fx.args(&["figure"]));
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "frequency,log_frequency,n_types,proportion,smoothed\n\
         1,0.000000,1,1.000000,1.000000\n\
         2,0.693147,1,0.500000,0.500000\n"
    );
    let o = run(&fx.args(&["figure", "--reference", "pl", "--smooth-window", "3"]));
    assert!(stdout(&o).contains("\n2,0.693147,1,0.500000,0.500000\n"));
    assert!(stdout(&o).contains("\n1,0.000000,1,0.000000,0.000000\n"));
}

#[test]
fn spectrum_summary() {
    let fx = Fixture::new(&lopen_corpus());
    let o = run(&fx.args(&["spectrum"]));
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "# class=dutch-en types=3 tokens=137 hapaxes=2 dropped=1\n\
         function,tokens,hapax_tokens,overall_mle,hapax_mle\n\
         inf,93,1,0.678832,0.500000\n\
         pl,44,1,0.321168,0.500000\n"
    );
}

#[test]
fn crossval_and_report_agree() {
    let fx = Fixture::new(&crossval_corpus());
    let csv = run(&fx.args(&["crossval", "--k", "4", "--seed", "9"]));
    assert!(
        csv.status.success(),
        "{}",
        String::from_utf8_lossy(&csv.stderr)
    );
    let table = run(&fx.args(&["report", "--k", "4", "--seed", "9"]));
    assert!(table.status.success());
    let csv = stdout(&csv);
    let table = stdout(&table);

    assert!(csv.starts_with("# class=dutch-en k=4 seed=9 ratio=inf/pl\n"));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines[1],
        "run,N(inf),N(pl),OMLE(inf),N1(inf),N1(pl),HMLE(inf),N0(inf),N0(pl),Eo(inf),Eo(pl),Eh(inf),Eh(pl)"
    );
    assert_eq!(lines.len(), 2 + 4 + 2);
    assert!(lines[6].starts_with("ttest,overall,"));
    assert!(lines[7].starts_with("ttest,hapax,"));

    // every CSV cell appears in the same row of the text table
    let rows: Vec<Vec<&str>> = lines[2..6].iter().map(|l| l.split(',').collect()).collect();
    let header: Vec<&str> = lines[1].split(',').collect();
    for (c, name) in header.iter().enumerate().skip(1) {
        let row = table
            .lines()
            .find(|l| l.split_whitespace().next() == Some(name))
            .unwrap_or_else(|| panic!("row {name} missing"));
        let cells: Vec<&str> = row.split_whitespace().skip(1).collect();
        let column: Vec<&str> = rows.iter().map(|r| r[c]).collect();
        assert_eq!(cells, column, "row {name}");
    }
    for l in &lines[6..] {
        let f: Vec<&str> = l.split(',').collect();
        assert!(table.contains(&format!("t = {}, df = {}, p = {}", f[2], f[3], f[4])));
    }
}

#[test]
fn crossval_is_byte_identical_and_writes_out() {
    let fx = Fixture::new(&crossval_corpus());
    let a = run(&fx.args(&["crossval", "--k", "4", "--seed", "1"]));
    let b = run(&fx.args(&["crossval", "--k", "4", "--seed", "1"]));
    assert_eq!(a.stdout, b.stdout);
    let out = fx.corpus.with_file_name("cv.csv");
    let c = run(&fx.args(&["crossval", "--k", "4", "--seed", "1", "--out", p(&out)]));
    assert!(c.status.success());
    assert!(c.stdout.is_empty());
    assert_eq!(fs::read(&out).unwrap(), a.stdout);
}

#[test]
fn inputs_are_not_modified() {
    let fx = Fixture::new(&crossval_corpus());
    let before = (fs::read(&fx.corpus).unwrap(), fs::read(&fx.class).unwrap());
    for sub in [
        &["spectrum"][..],
        &["figure"],
        &["crossval", "--k", "4"],
        &["report", "--k", "4"],
        &["priors", "--form", "lopen"],
    ] {
        assert!(run(&fx.args(sub)).status.success(), "{sub:?}");
    }
    assert_eq!(
        (fs::read(&fx.corpus).unwrap(), fs::read(&fx.class).unwrap()),
        before
    );
}

#[test]
fn synth_writes_corpus_truth_and_class() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.tsv");
    let o = run(&[
        "synth",
        "--out",
        p(&out),
        "--seed",
        "4",
        "--types",
        "30",
        "--tokens",
        "500",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let corpus = fs::read_to_string(&out).unwrap();
    assert!(corpus.starts_with("# synth seed=4 types=30 tokens=500"));
    assert_eq!(corpus.lines().filter(|l| !l.starts_with('#')).count(), 500);
    let truth = fs::read_to_string(dir.path().join("s.tsv.truth.csv")).unwrap();
    assert!(truth.starts_with("form,true_p_reference\n"));
    assert_eq!(truth.lines().count(), 31);

    let spectrum = run(&[
        "spectrum",
        "--corpus",
        p(&out),
        "--class-spec",
        p(&dir.path().join("s.tsv.class")),
    ]);
    assert!(stdout(&spectrum).contains("types=30 tokens=500"));
}

#[test]
fn usage_errors_exit_one() {
    let fx = Fixture::new(&lopen_corpus());
    for args in [
        vec!["frobnicate"],
        vec![],
        fx.args(&["figure", "--smooth-window", "4"]),
        fx.args(&["figure", "--smooth-window", "1"]),
        fx.args(&["crossval", "--k", "1"]),
        fx.args(&["priors", "--form", "lopen", "--threshold", "0"]),
        fx.args(&["priors"]),
        fx.args(&["crossval", "--ratio", "inf"]),
        fx.args(&["crossval", "--ratio", "inf/xx"]),
        fx.args(&["spectrum", "--bogus"]),
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn data_errors_exit_two() {
    let fx = Fixture::new("lopen\tINF\nbroken line\n");
    let o = run(&fx.args(&["spectrum"]));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let o = run(&[
        "spectrum",
        "--corpus",
        "/no/such/file",
        "--class-spec",
        p(&fx.class),
    ]);
    assert_eq!(o.status.code(), Some(2));

    // no hapaxes anywhere: backoff to the hapax estimate is undefined
    let fx = Fixture::new("lopen\tINF\nlopen\tPL\n");
    let o = run(&fx.args(&["priors", "--form", "bedraden"]));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("crossval"));
}
