use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quotekit"))
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures")
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn enrich_into(dir: &Path) -> PathBuf {
    let corpus = dir.join("corpus.jsonl");
    let out = run(bin()
        .arg("enrich")
        .arg("--input")
        .arg(fixtures().join("paper_examples.tsv"))
        .arg("--config")
        .arg(fixtures().join("pipeline.toml"))
        .arg("--output")
        .arg(&corpus)
        .arg("--stats")
        .arg(dir.join("stats.tsv")));
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    corpus
}

#[test]
fn enrich_writes_corpus_and_stats() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = enrich_into(dir.path());
    let text = std::fs::read_to_string(corpus).unwrap();
    assert_eq!(text.lines().count(), 18);
    assert!(text.starts_with("{\"ID\":\"P01\",\"SpeakerName\":\"Barack Obama\""));
    let stats = std::fs::read_to_string(dir.path().join("stats.tsv")).unwrap();
    assert!(stats.contains("dedupe\tremoved\t1\n"));
    assert!(stats.lines().all(|l| l.split('\t').count() == 3));
}

#[test]
fn query_prints_matches_and_draws_cloud() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = enrich_into(dir.path());
    let svg = dir.path().join("out.svg");
    let out = run(bin()
        .args(["query", "--key", "Simile", "--terms", "dollar,euro", "--corpus"])
        .arg(&corpus)
        .arg("--cloud")
        .arg(&svg));
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout, "P09\tAnn Lee\tcurrency like the dollar\n");
    let drawing = std::fs::read_to_string(svg).unwrap();
    assert!(drawing.contains(">dollar</text>"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&run(&mut bin())), 1);
    assert_eq!(code(&run(bin().args(["enrich", "--input", "x.tsv"]))), 1);
    assert_eq!(code(&run(bin().args(["frobnicate"]))), 1);
    let dir = tempfile::tempdir().unwrap();
    let corpus = enrich_into(dir.path());
    let out = run(bin().args(["query", "--key", "Bogus", "--terms", "x", "--corpus"]).arg(&corpus));
    assert_eq!(code(&out), 1);
    let out = run(bin().args(["query", "--key", "Simile", "--terms", ",", "--corpus"]).arg(&corpus));
    assert_eq!(code(&out), 1);
}

#[test]
fn help_exits_zero() {
    assert_eq!(code(&run(bin().arg("--help"))), 0);
}

#[test]
fn data_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(bin()
        .args(["enrich", "--input", "/nonexistent/raw.tsv", "--output"])
        .arg(dir.path().join("c.jsonl")));
    assert_eq!(code(&out), 2);

    let cfg = dir.path().join("bad.toml");
    std::fs::write(&cfg, "[resources]\ntaxonomy = \"missing.tsv\"\n").unwrap();
    let out = run(bin()
        .arg("enrich")
        .arg("--input")
        .arg(fixtures().join("paper_examples.tsv"))
        .arg("--config")
        .arg(&cfg)
        .arg("--output")
        .arg(dir.path().join("c.jsonl")));
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.tsv"));

    let out = run(bin().args(["query", "--key", "Simile", "--terms", "zzz", "--cloud"])
        .arg(dir.path().join("x.svg"))
        .arg("--corpus")
        .arg(enrich_into(dir.path())));
    assert_eq!(code(&out), 2, "empty frequency table");
}

#[test]
fn profile_matches_bundled_format() {
    let dir = tempfile::tempdir().unwrap();
    let sample = dir.path().join("en.txt");
    std::fs::write(&sample, "the quick brown fox jumps over the lazy dog").unwrap();
    let out_path = dir.path().join("en.profile");
    let out = run(bin().args(["profile", "--code", "en", "--input"]).arg(&sample).arg("--output").arg(&out_path));
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(out_path).unwrap();
    assert!(text.lines().count() > 10);
    assert!(text.lines().all(|l| (1..=3).contains(&l.chars().count())));
}
