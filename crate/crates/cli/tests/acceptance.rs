//! End-to-end acceptance checks. Each test prints one `criterion N: PASS|FAIL`
//! line (written straight to stderr so it shows without `--nocapture`) and
//! then asserts the same verdict.
//!
//! Criteria 3 to 7 share one set of embedding runs: seeds 1 to 5, default
//! hyperparameters, 40 epochs without early stopping.

use std::collections::HashMap;
use std::fs;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use ndarray::{Array1, Array2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cparse::{parse_file, parse_source, CParseError};
use nodevec::analysis::{kmeans, kmeans_points, nearest_neighbors};
use nodevec::ast::{dump_ast, AstNode, Corpus, NodeKind, VOCAB_SIZE};
use nodevec::classify::{
    cross_entropy, histogram, run_protocol, Architecture, ClassifierModel, EmbeddingInit, ProtocolConfig,
};
use nodevec::coder::{
    child_weight, code_children, distance, hinge_loss, init_params, loss_and_gradient, objective, pair_loss,
    Gradient, Hyperparams, ModelParams,
};
use nodevec::sampling::{build_training_set, corrupt, extract_samples, NegativeSample, Slot, TrainingSample};
use nodevec::trainer::{train_with, TrainOptions};

const SEEDS: [u64; 5] = [1, 2, 3, 4, 5];
const PROTOCOL_EPOCHS: usize = 40;
const CONTROL_FLOW: [NodeKind; 7] = [
    NodeKind::If,
    NodeKind::For,
    NodeKind::While,
    NodeKind::Break,
    NodeKind::Continue,
    NodeKind::Switch,
    NodeKind::Case,
];
const DECLARATIONS: [NodeKind; 5] = [
    NodeKind::FuncDecl,
    NodeKind::ArrayDecl,
    NodeKind::PtrDecl,
    NodeKind::TypeDecl,
    NodeKind::Decl,
];
const LOOPS_AND_BRANCHES: [NodeKind; 4] = [NodeKind::For, NodeKind::While, NodeKind::If, NodeKind::Break];

fn report(criterion: usize, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "criterion {criterion}: {verdict}  {detail}");
    assert!(pass, "criterion {criterion} failed: {detail}");
}

fn data(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| Corpus::read_jsonl(BufReader::new(fs::File::open(data("corpus.jsonl")).unwrap())).unwrap())
}

struct SeedRun {
    seed: u64,
    mean_hinge: Vec<f64>,
    params: ModelParams,
}

struct Runs {
    runs: Vec<SeedRun>,
    elapsed: Duration,
}

fn runs() -> &'static Runs {
    static RUNS: OnceLock<Runs> = OnceLock::new();
    RUNS.get_or_init(|| {
        let start = Instant::now();
        let samples = build_training_set(&corpus().programs);
        let options = TrainOptions {
            shuffle: true,
            stop_on_convergence: false,
        };
        let runs = SEEDS
            .iter()
            .map(|&seed| {
                let hyper = Hyperparams {
                    epochs: PROTOCOL_EPOCHS,
                    seed,
                    ..Hyperparams::default()
                };
                let (params, report) = train_with(&samples, &hyper, options).unwrap();
                SeedRun {
                    seed,
                    mean_hinge: report.mean_hinge,
                    params,
                }
            })
            .collect();
        Runs {
            runs,
            elapsed: start.elapsed(),
        }
    })
}

// ---------------------------------------------------------------- criterion 1

const FD_STEP: f64 = 1e-5;
const FD_TOLERANCE: f64 = 1e-4;
const FD_INSTANCES: usize = 100;

/// `‖g − ĝ‖∞ / max(‖g‖∞, ‖ĝ‖∞)`.
fn relative_error(analytic: &[f64], numeric: &[f64]) -> f64 {
    let inf = |v: &mut dyn Iterator<Item = f64>| v.fold(0.0f64, |m, x| m.max(x.abs()));
    let scale = inf(&mut analytic.iter().copied()).max(inf(&mut numeric.iter().copied()));
    let diff = inf(&mut analytic.iter().zip(numeric).map(|(a, n)| a - n));
    if scale == 0.0 {
        0.0
    } else {
        diff / scale
    }
}

fn coder_entries(p: &mut ModelParams) -> Vec<&mut f64> {
    p.embeddings
        .iter_mut()
        .chain(p.w_left.iter_mut())
        .chain(p.w_right.iter_mut())
        .chain(p.bias.iter_mut())
        .collect()
}

fn dense_gradient(g: &Gradient, dim: usize) -> Vec<f64> {
    let mut rows = Array2::zeros((VOCAB_SIZE, dim));
    for (kind, row) in &g.embeddings {
        rows.row_mut(kind.id()).assign(row);
    }
    rows.iter().chain(g.w_left.iter()).chain(g.w_right.iter()).chain(g.bias.iter()).copied().collect()
}

fn random_kind(rng: &mut ChaCha8Rng) -> NodeKind {
    NodeKind::from_id(rng.random_range(0..VOCAB_SIZE)).unwrap()
}

/// Worst relative error over instances away from the hinge kink.
fn coder_fd(dim: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut done = 0;
    while done < FD_INSTANCES {
        let hyper = Hyperparams {
            dim,
            lambda: [0.0, 1e-4, 0.5][rng.random_range(0..3)],
            ..Hyperparams::default()
        };
        let mut params = init_params(&hyper, &mut rng);
        params.embeddings *= rng.random_range(0.5..3.0);
        let n = rng.random_range(1..=5);
        let leaves: Vec<usize> = (0..n).map(|_| rng.random_range(1..=6)).collect();
        let total: usize = leaves.iter().sum();
        let sample = TrainingSample {
            parent: random_kind(&mut rng),
            children: (0..n).map(|_| random_kind(&mut rng)).collect(),
            coefficients: leaves.iter().map(|&l| l as f64 / total as f64).collect(),
        };
        let negative = corrupt(&sample, &mut rng);
        if (hyper.margin + distance(&sample, &params) - distance(&negative, &params)).abs() < 1e-2 {
            continue;
        }
        done += 1;
        let analytic = dense_gradient(&loss_and_gradient(&negative, &params, &hyper).1, dim);
        let numeric: Vec<f64> = (0..analytic.len())
            .map(|i| {
                let mut plus = params.clone();
                *coder_entries(&mut plus)[i] += FD_STEP;
                let mut minus = params.clone();
                *coder_entries(&mut minus)[i] -= FD_STEP;
                (pair_loss(&negative, &plus, &hyper) - pair_loss(&negative, &minus, &hyper)) / (2.0 * FD_STEP)
            })
            .collect();
        worst = worst.max(relative_error(&analytic, &numeric));
    }
    worst
}

fn classifier_fd(dim: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for instance in 0..FD_INSTANCES {
        let rows = rng.random_range(2..=6);
        let classes = rng.random_range(2..=4);
        let inputs = Array2::from_shape_fn((rows, VOCAB_SIZE), |(_, c)| {
            f64::from(rng.random_range(0..4u32)) + f64::from(u8::from(c == NodeKind::Root.id()))
        });
        let labels: Vec<usize> = (0..rows).map(|_| rng.random_range(0..classes)).collect();
        let names: Vec<String> = (0..classes).map(|c| format!("c{c}")).collect();
        let arch = match instance % 3 {
            0 => Architecture::logistic(),
            1 => Architecture::feed_forward(vec![3], EmbeddingInit::Random { dim }, true),
            _ => {
                let table = Array2::from_shape_fn((VOCAB_SIZE, dim), |_| rng.random_range(-1.0..1.0));
                Architecture::feed_forward(vec![4, 3], EmbeddingInit::Pretrained(table), true)
            }
        };
        let mut model = ClassifierModel::new(&arch, names, &inputs, rng.random()).unwrap();
        let theta = model.flat_params();
        let analytic = model.flat_gradient(&inputs, &labels);
        let mut numeric = Vec::with_capacity(theta.len());
        for i in 0..theta.len() {
            let mut shifted = theta.clone();
            shifted[i] = theta[i] + FD_STEP;
            model.set_flat_params(&shifted);
            let up = model.batch_loss(&inputs, &labels);
            shifted[i] = theta[i] - FD_STEP;
            model.set_flat_params(&shifted);
            let down = model.batch_loss(&inputs, &labels);
            numeric.push((up - down) / (2.0 * FD_STEP));
        }
        worst = worst.max(relative_error(&analytic, &numeric));
    }
    worst
}

#[test]
fn criterion_1_gradients_match_finite_differences() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for (dim, seed) in [(2, 1001), (4, 1002)] {
        worst = worst.max(coder_fd(dim, seed)).max(classifier_fd(dim, seed + 10));
    }
    let elapsed = start.elapsed();
    report(
        1,
        worst < FD_TOLERANCE && elapsed < Duration::from_secs(60),
        &format!("max relative error {worst:.2e} (< 1e-4), {:.1}s (< 60s)", elapsed.as_secs_f64()),
    );
}

// ---------------------------------------------------------------- criterion 2

fn leaf(kind: NodeKind) -> AstNode {
    AstNode::leaf(kind)
}

#[test]
fn criterion_2_hand_cases() {
    let mut failures = Vec::new();
    let mut check = |name: &str, ok: bool| {
        if !ok {
            failures.push(name.to_owned());
        }
    };

    check("child_weight n=1", child_weight(1, 1).unwrap() == (0.5, 0.5));
    check("child_weight n=2", child_weight(2, 1).unwrap() == (1.0, 0.0) && child_weight(2, 2).unwrap() == (0.0, 1.0));
    check(
        "child_weight n=3",
        [(1, (1.0, 0.0)), (2, (0.5, 0.5)), (3, (0.0, 1.0))]
            .iter()
            .all(|&(i, w)| child_weight(3, i).unwrap() == w),
    );

    let pair = AstNode::new(NodeKind::BinaryOp, vec![leaf(NodeKind::Id), leaf(NodeKind::Constant)]);
    let pair_samples = extract_samples(&pair);
    check("l_i equal leaves", pair_samples.len() == 1 && pair_samples[0].coefficients == [0.5, 0.5]);
    check("single leaf has no samples", extract_samples(&leaf(NodeKind::Root)).is_empty());
    let two = AstNode::new(NodeKind::ExprList, vec![leaf(NodeKind::Id), leaf(NodeKind::Id)]);
    let three = AstNode::new(NodeKind::ExprList, vec![leaf(NodeKind::Id), leaf(NodeKind::Id), leaf(NodeKind::Id)]);
    let uneven = AstNode::new(NodeKind::Compound, vec![two, three]);
    check("l_i 2 and 3 leaves", extract_samples(&uneven)[0].coefficients == [0.4, 0.6]);

    check("hinge satisfied", hinge_loss(0.0, 2.0, 1.0) == 0.0);
    check("hinge substitution", hinge_loss(0.5, 1.0, 1.0) == 0.5);
    check("hinge tie", hinge_loss(0.7, 0.7, 1.0) == 1.0);

    let mut one = ModelParams::zeros(1);
    one.w_left[[0, 0]] = 2.0;
    one.w_right[[0, 0]] = 2.0;
    one.bias[0] = 0.5;
    one.embeddings[[NodeKind::Id.id(), 0]] = 0.25;
    let single = TrainingSample {
        parent: NodeKind::Return,
        children: vec![NodeKind::Id],
        coefficients: vec![1.0],
    };
    let coded = code_children(&single, &one)[0];
    check("coded tanh(1.0)", (coded - 1.0f64.tanh()).abs() < 1e-12 && (coded - 0.76159).abs() < 1e-5);
    check("coded zero params", code_children(&single, &ModelParams::zeros(3)).iter().all(|&x| x == 0.0));

    let mut two_dim = ModelParams::zeros(2);
    two_dim.embeddings[[NodeKind::Return.id(), 0]] = 1.0;
    check("distance squared norm", distance(&single, &two_dim) == 1.0);

    // d = 0 and d_c = 9, so the hinge is inactive and only the penalty remains.
    let mut params = ModelParams::zeros(1);
    params.w_left[[0, 0]] = 2.0;
    params.w_right[[0, 0]] = -1.0;
    params.embeddings[[NodeKind::If.id(), 0]] = 3.0;
    let negative = NegativeSample {
        base: &single,
        slot: Slot::Parent,
        replacement: NodeKind::If,
    };
    let free = Hyperparams {
        dim: 1,
        lambda: 0.0,
        ..Hyperparams::default()
    };
    check("objective all satisfied, λ=0", objective(&[negative], &params, &free) == 0.0);
    let penalized = Hyperparams { lambda: 0.5, ..free };
    // λ/(2M)·(‖W_l‖² + ‖W_r‖²) = 0.5/4·(4 + 1).
    check("objective penalty only", objective(&[negative], &params, &penalized) == 0.625);

    report(
        2,
        failures.is_empty(),
        &if failures.is_empty() {
            "all hand cases reproduced".to_owned()
        } else {
            format!("mismatched: {}", failures.join(", "))
        },
    );
}

// ---------------------------------------------------------------- criterion 3

#[test]
fn criterion_3_trivial_solution_guard() {
    let hyper = Hyperparams::default();
    let zeros = ModelParams::zeros(hyper.dim);
    let samples = build_training_set(&corpus().programs);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let trivial = samples.iter().all(|s| {
        let negative = corrupt(s, &mut rng);
        distance(s, &zeros) == 0.0 && pair_loss(&negative, &zeros, &hyper) == hyper.margin
    });
    let finals: Vec<f64> = runs().runs.iter().map(|r| *r.mean_hinge.last().unwrap()).collect();
    let escaped = finals.iter().all(|&h| h < hyper.margin);
    report(
        3,
        trivial && escaped,
        &format!(
            "zero params give d=0, loss=Δ on all {} samples: {trivial}; final mean hinge per seed {:.4?} (< {})",
            samples.len(),
            finals,
            hyper.margin
        ),
    );
}

// ---------------------------------------------------------------- criterion 4

#[test]
fn criterion_4_training_descent() {
    let runs = runs();
    let ratios: Vec<f64> = runs.runs.iter().map(|r| r.mean_hinge[PROTOCOL_EPOCHS - 1] / r.mean_hinge[0]).collect();
    let passing = ratios.iter().filter(|&&r| r <= 0.5).count();
    let labels = corpus().labels();
    let per_label_ok = labels.len() == 4
        && labels
            .iter()
            .all(|l| corpus().programs.iter().filter(|p| &p.label == l).count() >= 50);
    report(
        4,
        passing >= 4 && per_label_ok && runs.elapsed < Duration::from_secs(600),
        &format!(
            "epoch-40/epoch-1 hinge ratios {ratios:.3?}; {passing}/5 ≤ 0.5 (need 4); corpus 4×≥50: {per_label_ok}; {:.1}s (< 600s)",
            runs.elapsed.as_secs_f64()
        ),
    );
}

// ---------------------------------------------------------------- criterion 5

fn top5(params: &ModelParams, kind: NodeKind) -> Vec<NodeKind> {
    nearest_neighbors(params, kind, 5).unwrap().into_iter().map(|(k, _)| k).collect()
}

#[test]
fn criterion_5_neighbor_structure() {
    let mut good = 0;
    let mut details = Vec::new();
    for run in &runs().runs {
        let id_top = top5(&run.params, NodeKind::Id);
        let tops: HashMap<NodeKind, Vec<NodeKind>> =
            LOOPS_AND_BRANCHES.iter().map(|&k| (k, top5(&run.params, k))).collect();
        let mutual = LOOPS_AND_BRANCHES
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| LOOPS_AND_BRANCHES[i + 1..].iter().map(move |&b| (a, b)))
            .filter(|(a, b)| tops[a].contains(b) && tops[b].contains(a))
            .count();
        let constant = id_top.contains(&NodeKind::Constant);
        good += usize::from(constant && mutual >= 1);
        details.push(format!("seed {}: Constant {constant}, mutual pairs {mutual}", run.seed));
    }
    report(5, good >= 3, &format!("{good}/5 runs (need 3) [{}]", details.join("; ")));
}

// ---------------------------------------------------------------- criterion 6

fn co_cluster_rate(assign: &[usize], pairs: &[(NodeKind, NodeKind)]) -> f64 {
    pairs.iter().filter(|(a, b)| assign[a.id()] == assign[b.id()]).count() as f64 / pairs.len() as f64
}

#[test]
fn criterion_6_clustering_structure() {
    let within_pairs: Vec<(NodeKind, NodeKind)> = CONTROL_FLOW
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| CONTROL_FLOW[i + 1..].iter().map(move |&b| (a, b)))
        .collect();
    let cross_pairs: Vec<(NodeKind, NodeKind)> =
        CONTROL_FLOW.iter().flat_map(|&a| DECLARATIONS.iter().map(move |&b| (a, b))).collect();
    let (mut within, mut cross) = (0.0, 0.0);
    for run in &runs().runs {
        let clustering = kmeans(&run.params, 3, 16, 42).unwrap();
        within += co_cluster_rate(&clustering.assignment, &within_pairs);
        cross += co_cluster_rate(&clustering.assignment, &cross_pairs);
    }
    let n = runs().runs.len() as f64;
    let (within, cross) = (within / n, cross / n);
    report(
        6,
        within - cross >= 0.2,
        &format!("within {within:.3}, cross {cross:.3}, gap {:.3} (≥ 0.2)", within - cross),
    );
}

// ---------------------------------------------------------------- criterion 7

#[test]
fn criterion_7_classification() {
    let start = Instant::now();
    let (mut guess, mut logistic, mut pretrained, mut random) = (0.0, 0.0, 0.0, 0.0);
    let chosen = &runs().runs[..3];
    for run in chosen {
        let config = ProtocolConfig {
            model_seed: run.seed,
            ..ProtocolConfig::default()
        };
        let result = run_protocol(corpus(), &run.params, &config).unwrap();
        guess += result.random_guess.accuracy;
        logistic += result.logistic.test.accuracy;
        pretrained += result.pretrained.test.accuracy;
        random += result.random_init.test.accuracy;
    }
    let n = chosen.len() as f64;
    let (guess, logistic, pretrained, random) = (guess / n, logistic / n, pretrained / n, random / n);
    let elapsed = start.elapsed() + runs().elapsed;
    let a = logistic - guess >= 0.30;
    let b = pretrained >= random && pretrained >= logistic - 0.02;
    report(
        7,
        a && b && elapsed < Duration::from_secs(900),
        &format!(
            "mean test accuracy: guess {:.2}%, logistic {:.2}%, pretrained {:.2}%, random init {:.2}%; (a) {a} (b) {b}; {:.1}s (< 900s)",
            100.0 * guess,
            100.0 * logistic,
            100.0 * pretrained,
            100.0 * random,
            elapsed.as_secs_f64()
        ),
    );
}

// ---------------------------------------------------------------- criterion 8

fn nodevec(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_nodevec")).args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

/// Every file under `dir` plus the stdout of each command, in a fixed order.
fn pipeline(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let p = |name: &str| dir.join(name).to_str().unwrap().to_owned();
    let corpus = data("corpus.jsonl");
    let corpus = corpus.to_str().unwrap();
    let mut outputs = vec![
        ("parse".to_owned(), nodevec(&["parse", data("golden/doubles.c").to_str().unwrap()])),
        (
            "corpus-build".to_owned(),
            nodevec(&["corpus-build", data("corpus").to_str().unwrap(), "--out", &p("corpus.jsonl")]),
        ),
        (
            "train".to_owned(),
            nodevec(&[
                "train", "--corpus", corpus, "--out", &p("model.json"), "--loss-log", &p("loss.csv"),
                "--dim", "8", "--epochs", "2", "--seed", "7",
            ]),
        ),
        ("nn".to_owned(), nodevec(&["nn", "--checkpoint", &p("model.json"), "--symbol", "If"])),
        (
            "cluster".to_owned(),
            nodevec(&["cluster", "--checkpoint", &p("model.json"), "--report-dir", &p("report")]),
        ),
        (
            "classify".to_owned(),
            nodevec(&[
                "classify", "--corpus", corpus, "--checkpoint", &p("model.json"), "--out-dir", &p("classify"),
                "--epochs", "3", "--hidden", "8", "--seed", "7",
            ]),
        ),
        ("export".to_owned(), nodevec(&["export", "--checkpoint", &p("model.json"), "--out", &p("vectors.txt")])),
    ];
    let mut files = Vec::new();
    let mut stack = vec![dir.to_owned()];
    while let Some(d) = stack.pop() {
        for entry in fs::read_dir(d).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else {
                files.push(path);
            }
        }
    }
    files.sort();
    for f in files {
        let name = f.strip_prefix(dir).unwrap().display().to_string();
        outputs.push((name, fs::read(f).unwrap()));
    }
    outputs
}

#[test]
fn criterion_8_determinism() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let first = pipeline(a.path());
    let second = pipeline(b.path());
    let names: Vec<&str> = first.iter().map(|(n, _)| n.as_str()).collect();
    let differing: Vec<&str> = first
        .iter()
        .zip(&second)
        .filter(|(x, y)| x != y)
        .map(|(x, _)| x.0.as_str())
        .collect();
    report(
        8,
        first.len() == second.len() && differing.is_empty() && first.len() >= 14,
        &format!("{} artifacts compared byte-for-byte, differing: {differing:?} [{}]", first.len(), names.join(", ")),
    );
}

// ---------------------------------------------------------------- criterion 9

fn c_files(dir: &Path) -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "c"))
        .collect();
    files.sort();
    files
}

#[test]
fn criterion_9_parser_golden_suite() {
    let snippet = "double doubles(double doublee){ return 2 * doublee; }";
    let snippet_ok = parse_source(snippet).map(|t| dump_ast(&t)).ok()
        == Some(fs::read_to_string(data("golden/doubles.json")).unwrap().trim_end().to_owned());

    let golden = c_files(&data("golden"));
    let mismatched: Vec<String> = golden
        .iter()
        .filter(|src| {
            let expected = fs::read_to_string(src.with_extension("json")).unwrap();
            parse_file(src).map(|t| dump_ast(&t)).ok().as_deref() != Some(expected.trim_end())
        })
        .map(|p| p.display().to_string())
        .collect();

    let invalid = c_files(&data("invalid"));
    let mispositioned: Vec<String> = invalid
        .iter()
        .filter(|src| {
            let text = fs::read_to_string(src).unwrap();
            let spec = text.lines().next().unwrap().trim_start_matches("/* expect ").trim_end_matches(" */");
            let (l, c) = spec.split_once(':').unwrap();
            let expected = (l.parse().unwrap(), c.parse().unwrap());
            !matches!(parse_file(src), Err(e @ (CParseError::Lex(_) | CParseError::Parse(_))) if e.position() == Some(expected))
        })
        .map(|p| p.display().to_string())
        .collect();

    let others = golden.len() - 1;
    report(
        9,
        snippet_ok && others >= 20 && mismatched.is_empty() && !invalid.is_empty() && mispositioned.is_empty(),
        &format!(
            "snippet {snippet_ok}; {} golden pairs, mismatched {mismatched:?}; {} invalid fixtures, wrong or missing position {mispositioned:?}",
            golden.len(),
            invalid.len()
        ),
    );
}

// ---------------------------------------------------------------- criterion 10

fn inertia(points: &Array2<f64>, assignment: &[usize], k: usize) -> f64 {
    (0..k)
        .map(|c| {
            let members: Vec<usize> = (0..points.nrows()).filter(|&i| assignment[i] == c).collect();
            let mut mean = Array1::<f64>::zeros(points.ncols());
            for &i in &members {
                mean += &points.row(i);
            }
            mean /= members.len() as f64;
            members.iter().map(|&i| (&points.row(i) - &mean).mapv(|x| x * x).sum()).sum::<f64>()
        })
        .sum()
}

/// Minimum inertia over every partition into exactly `k` nonempty clusters.
fn exhaustive(points: &Array2<f64>, k: usize) -> f64 {
    fn walk(points: &Array2<f64>, k: usize, used: usize, current: &mut Vec<usize>, best: &mut f64) {
        let (i, n) = (current.len(), points.nrows());
        if n - i < k - used {
            return;
        }
        if i == n {
            *best = best.min(inertia(points, current, k));
            return;
        }
        for c in 0..(used + 1).min(k) {
            current.push(c);
            walk(points, k, used.max(c + 1), current, best);
            current.pop();
        }
    }
    let mut best = f64::INFINITY;
    walk(points, k, 0, &mut Vec::new(), &mut best);
    best
}

fn random_tree(rng: &mut ChaCha8Rng, depth: usize) -> AstNode {
    let kind = random_kind(rng);
    if depth == 0 || rng.random_bool(0.35) {
        return AstNode::leaf(kind);
    }
    let n = rng.random_range(1..=4);
    AstNode::new(kind, (0..n).map(|_| random_tree(rng, depth - 1)).collect())
}

fn walk_tree(node: &AstNode, counts: &mut [u32], internal: &mut usize) {
    counts[node.kind.id()] += 1;
    *internal += usize::from(!node.children.is_empty());
    for c in &node.children {
        walk_tree(c, counts, internal);
    }
}

#[test]
fn criterion_10_brute_force_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut failures = Vec::new();

    let mut kmeans_cases = 0;
    for case in 0..30 {
        let n = rng.random_range(4..=12);
        let k = rng.random_range(2..=3);
        let points = Array2::from_shape_fn((n, 2), |(i, _)| (i % k) as f64 * 4.0 + rng.random_range(-1.0..1.0));
        let best = exhaustive(&points, k);
        let got = kmeans_points(&points, k, 16, case).unwrap().inertia;
        if (got - best).abs() > 1e-9 * best.max(1.0) {
            failures.push(format!("k-means case {case}: {got} vs {best}"));
        }
        kmeans_cases += 1;
    }

    for case in 0..100 {
        let (rows, classes) = (rng.random_range(1..=8), rng.random_range(2..=5));
        let mut probs = Array2::<f64>::from_shape_fn((rows, classes), |_| rng.random_range(0.01..1.0));
        for mut row in probs.rows_mut() {
            let s = row.sum();
            row /= s;
        }
        let labels: Vec<usize> = (0..rows).map(|_| rng.random_range(0..classes)).collect();
        let direct = labels.iter().enumerate().map(|(r, &t)| -probs[[r, t]].ln()).sum::<f64>() / rows as f64;
        if (cross_entropy(&probs, &labels).unwrap() - direct).abs() >= 1e-12 {
            failures.push(format!("cross-entropy case {case}"));
        }
    }

    for case in 0..100 {
        let tree = random_tree(&mut rng, 5);
        let mut counts = vec![0u32; VOCAB_SIZE];
        let mut internal = 0;
        walk_tree(&tree, &mut counts, &mut internal);
        if histogram(&tree) != counts {
            failures.push(format!("histogram case {case}"));
        }
        if extract_samples(&tree).len() != internal {
            failures.push(format!("sample count case {case}"));
        }
    }

    report(
        10,
        failures.is_empty(),
        &format!("{kmeans_cases} k-means, 100 cross-entropy, 100 histogram/sample-count fixtures; failures {failures:?}"),
    );
}
