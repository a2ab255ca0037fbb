use std::fs;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use nodevec::coder::init_params;
use nodevec::embeddings::read_embeddings;
use nodevec::trainer::load_checkpoint;
use nodevec::{Hyperparams, VOCAB_SIZE};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn data(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

fn nodevec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nodevec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// A small, fast checkpoint trained on the bundled corpus.
fn quick_checkpoint(dir: &Path, seed: u64) -> PathBuf {
    let out = dir.join(format!("quick{seed}.json"));
    let seed = seed.to_string();
    let run = nodevec(&[
        "train", "--corpus", s(&data("corpus.jsonl")), "--out", s(&out),
        "--dim", "4", "--epochs", "1", "--seed", &seed,
    ]);
    assert!(run.status.success(), "{}", stderr(&run));
    out
}

#[test]
fn parse_doubles_snippet() {
    let out = nodevec(&["parse", s(&data("golden/doubles.c"))]);
    assert_eq!(out.status.code(), Some(0));
    let expected = fs::read_to_string(data("golden/doubles.json")).unwrap();
    assert_eq!(stdout(&out).trim_end(), expected.trim_end());
}

#[test]
fn parse_writes_documents_to_a_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = nodevec(&["parse", "--out-dir", s(dir.path()), s(&data("golden/doubles.c")), s(&data("golden/loops.c"))]);
    assert!(out.status.success());
    for stem in ["doubles", "loops"] {
        assert_eq!(
            fs::read_to_string(dir.path().join(format!("{stem}.json"))).unwrap().trim_end(),
            fs::read_to_string(data(&format!("golden/{stem}.json"))).unwrap().trim_end()
        );
    }
}

#[test]
fn parse_reports_position_of_invalid_input() {
    let path = data("invalid/missing_semicolon.c");
    let out = nodevec(&["parse", s(&path)]);
    assert_eq!(out.status.code(), Some(2));
    let msg = stderr(&out);
    assert!(msg.contains(&format!("{}:5:5:", path.display())), "{msg}");
}

#[test]
fn parse_without_files_is_a_usage_error() {
    let out = nodevec(&["parse"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("Usage"), "{}", stderr(&out));
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    assert_eq!(nodevec(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(nodevec(&[]).status.code(), Some(1));
}

#[test]
fn corpus_build_reproduces_bundled_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("corpus.jsonl");
    let out = nodevec(&["corpus-build", s(&data("corpus")), "--out", s(&out_path)]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(fs::read(&out_path).unwrap(), fs::read(data("corpus.jsonl")).unwrap());
}

#[test]
fn corpus_build_skips_unparsable_files() {
    let dir = tempfile::tempdir().unwrap();
    let root = dir.path().join("src");
    fs::create_dir_all(root.join("a")).unwrap();
    fs::create_dir_all(root.join("b")).unwrap();
    fs::write(root.join("a/ok.c"), "int main(void) { return 0; }\n").unwrap();
    fs::write(root.join("a/bad.c"), "int main(void) { return 0 }\n").unwrap();
    fs::write(root.join("b/ok.c"), "int x;\n").unwrap();
    fs::write(root.join("b/notes.txt"), "ignored").unwrap();
    let out_path = dir.path().join("c.jsonl");
    let out = nodevec(&["corpus-build", s(&root), "--out", s(&out_path)]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("bad.c:1:27"), "{}", stderr(&out));
    let text = fs::read_to_string(&out_path).unwrap();
    let ids: Vec<&str> = text.lines().map(|l| l.split("\"source_id\":\"").nth(1).unwrap().split('"').next().unwrap()).collect();
    assert_eq!(ids, ["a/ok.c", "b/ok.c"]);
}

#[test]
fn zero_epochs_write_the_initialization() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = dir.path().join("init.json");
    let out = nodevec(&["train", "--corpus", s(&data("corpus.jsonl")), "--out", s(&ckpt), "--epochs", "0", "--dim", "5", "--seed", "9"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let params = load_checkpoint(&ckpt).unwrap().params().unwrap();
    let hyper = Hyperparams {
        dim: 5,
        seed: 9,
        ..Hyperparams::default()
    };
    assert_eq!(params, init_params(&hyper, &mut ChaCha8Rng::seed_from_u64(9)));
}

#[test]
fn same_seed_gives_identical_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let run = |tag: &str| {
        let ckpt = dir.path().join(format!("{tag}.json"));
        let log = dir.path().join(format!("{tag}.csv"));
        let out = nodevec(&[
            "train", "--corpus", s(&data("corpus.jsonl")), "--out", s(&ckpt), "--loss-log", s(&log),
            "--dim", "4", "--epochs", "2", "--seed", "13",
        ]);
        assert!(out.status.success());
        (fs::read(ckpt).unwrap(), fs::read_to_string(log).unwrap())
    };
    let (a, log_a) = run("a");
    let (b, log_b) = run("b");
    assert_eq!(a, b);
    assert_eq!(log_a, log_b);
    assert!(log_a.starts_with("# seed=13\nepoch,mean_hinge,objective\n"));
}

#[test]
fn resume_continues_to_the_epoch_cap() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = data("corpus.jsonl");
    let common = ["--corpus", s(&corpus), "--dim", "3", "--seed", "4", "--no-early-stop"];
    let straight = dir.path().join("straight.json");
    let half = dir.path().join("half.json");
    let resumed = dir.path().join("resumed.json");
    let train = |extra: &[&str]| {
        let mut args = vec!["train"];
        args.extend(common);
        args.extend(extra);
        assert!(nodevec(&args).status.success());
    };
    train(&["--epochs", "2", "--out", s(&straight)]);
    train(&["--epochs", "1", "--out", s(&half)]);
    train(&["--epochs", "2", "--resume", s(&half), "--out", s(&resumed)]);
    assert_eq!(fs::read(straight).unwrap(), fs::read(resumed).unwrap());
}

#[test]
fn invalid_hyperparameters_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = dir.path().join("x.json");
    for bad in [["--momentum", "1.5"], ["--dim", "0"], ["--margin", "-1"]] {
        let mut args = vec!["train", "--corpus", "/nonexistent.jsonl", "--out", s(&ckpt)];
        args.extend(bad);
        let out = nodevec(&args);
        assert_eq!(out.status.code(), Some(1), "{bad:?}: {}", stderr(&out));
    }
}

#[test]
fn divergence_is_a_numerical_failure() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = dir.path().join("x.json");
    let out = nodevec(&["train", "--corpus", s(&data("corpus.jsonl")), "--out", s(&ckpt), "--dim", "3", "--lr", "1e300", "--epochs", "1"]);
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
    assert!(!ckpt.exists());
}

#[test]
fn missing_inputs_are_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = dir.path().join("x.json");
    assert_eq!(nodevec(&["train", "--corpus", "/nonexistent.jsonl", "--out", s(&ckpt)]).status.code(), Some(2));
    assert_eq!(nodevec(&["nn", "--checkpoint", "/nonexistent.json", "--symbol", "ID"]).status.code(), Some(2));
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{}").unwrap();
    assert_eq!(nodevec(&["export", "--checkpoint", s(&bad), "--out", s(&dir.path().join("e.txt"))]).status.code(), Some(2));
}

#[test]
fn nn_lists_top_neighbors_without_the_query() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = quick_checkpoint(dir.path(), 2);
    let out = nodevec(&["nn", "--checkpoint", s(&ckpt), "--symbol", "ID", "--top", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# seed=2"));
    assert_eq!(lines.next(), Some("rank,neighbor,distance"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.split(',').nth(1) != Some("ID")));
    let unknown = nodevec(&["nn", "--checkpoint", s(&ckpt), "--symbol", "Lambda"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn cluster_assigns_every_symbol() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = quick_checkpoint(dir.path(), 3);
    let report = dir.path().join("report");
    let out = nodevec(&["cluster", "--checkpoint", s(&ckpt), "--k", "3", "--report-dir", s(&report)]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows.len(), VOCAB_SIZE);
    let clusters: std::collections::BTreeSet<&str> = rows.iter().map(|r| r.split(',').nth(1).unwrap()).collect();
    assert!(clusters.len() <= 3);
    assert_eq!(fs::read_to_string(report.join("clusters.csv")).unwrap(), text);
    let neighbors = fs::read_to_string(report.join("neighbors.csv")).unwrap();
    assert_eq!(neighbors.lines().count(), 2 + VOCAB_SIZE * (VOCAB_SIZE - 1));
}

#[test]
fn export_round_trips_checkpoint_values() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = quick_checkpoint(dir.path(), 5);
    let exported = dir.path().join("vectors.txt");
    let out = nodevec(&["export", "--checkpoint", s(&ckpt), "--out", s(&exported)]);
    assert!(out.status.success());
    let table = read_embeddings(BufReader::new(fs::File::open(&exported).unwrap())).unwrap();
    let params = load_checkpoint(&ckpt).unwrap().params().unwrap();
    assert_eq!(table.vectors, params.embeddings);
    assert!(fs::read_to_string(&exported).unwrap().starts_with(&format!("{VOCAB_SIZE} 4\nID ")));
}

#[test]
fn classify_writes_deterministic_reports() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = quick_checkpoint(dir.path(), 6);
    let run = |tag: &str| {
        let out_dir = dir.path().join(tag);
        let out = nodevec(&[
            "classify", "--corpus", s(&data("corpus.jsonl")), "--checkpoint", s(&ckpt), "--out-dir", s(&out_dir),
            "--epochs", "3", "--hidden", "8,8", "--seed", "6",
        ]);
        assert!(out.status.success(), "{}", stderr(&out));
        ["summary.txt", "logistic.csv", "pretrained.csv", "random_init.csv"]
            .map(|f| fs::read_to_string(out_dir.join(f)).unwrap())
    };
    let a = run("a");
    assert_eq!(a, run("b"));
    assert!(a[0].starts_with("# seed=6\n"));
    assert!(a[0].contains("Random guess"));
    assert_eq!(a[1].lines().count(), 2 + 3);
}
