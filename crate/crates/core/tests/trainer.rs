use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use ndarray::Array2;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nodevec::ast::{Corpus, VOCAB_SIZE};
use nodevec::coder::{distance, gradient, init_params, pair_loss, Hyperparams, ModelParams};
use nodevec::sampling::{build_training_set, corrupt, TrainingSample};
use nodevec::trainer::{load_checkpoint, save_checkpoint, train_with, TrainOptions, Trainer};

fn corpus() -> Corpus {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/corpus.jsonl");
    Corpus::read_jsonl(BufReader::new(File::open(path).unwrap())).unwrap()
}

fn small_set() -> Vec<TrainingSample> {
    let corpus = corpus();
    build_training_set(&corpus.programs[..6])
}

fn fixed_epochs() -> TrainOptions {
    TrainOptions {
        shuffle: true,
        stop_on_convergence: false,
    }
}

fn flat(p: &ModelParams) -> Vec<f64> {
    p.embeddings
        .iter()
        .chain(p.w_left.iter())
        .chain(p.w_right.iter())
        .chain(p.bias.iter())
        .copied()
        .collect()
}

/// Straight-line SGD with momentum over dense parameter vectors, drawing
/// randomness in the trainer's documented order.
fn reference_run(samples: &[TrainingSample], hyper: &Hyperparams) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(hyper.seed);
    let mut params = init_params(hyper, &mut rng);
    let dim = hyper.dim;
    let mut velocity = vec![0.0; flat(&params).len()];
    for _ in 0..hyper.epochs {
        let mut order: Vec<usize> = (0..samples.len()).collect();
        order.shuffle(&mut rng);
        for idx in order {
            let negative = corrupt(&samples[idx], &mut rng);
            let g = gradient(&negative, &params, hyper);
            let mut rows = Array2::zeros((VOCAB_SIZE, dim));
            for (kind, row) in &g.embeddings {
                rows.row_mut(kind.id()).assign(row);
            }
            let g_flat: Vec<f64> = rows
                .iter()
                .chain(g.w_left.iter())
                .chain(g.w_right.iter())
                .chain(g.bias.iter())
                .copied()
                .collect();
            let mut theta = flat(&params);
            for ((t, v), gi) in theta.iter_mut().zip(&mut velocity).zip(&g_flat) {
                *v = hyper.momentum * *v + gi;
                *t -= hyper.learning_rate * *v;
            }
            let mut it = theta.into_iter();
            params.embeddings.iter_mut().for_each(|x| *x = it.next().unwrap());
            params.w_left.iter_mut().for_each(|x| *x = it.next().unwrap());
            params.w_right.iter_mut().for_each(|x| *x = it.next().unwrap());
            params.bias.iter_mut().for_each(|x| *x = it.next().unwrap());
        }
    }
    flat(&params)
}

#[test]
fn zero_momentum_is_plain_sgd() {
    let hyper = Hyperparams {
        dim: 5,
        momentum: 0.0,
        epochs: 3,
        seed: 17,
        ..Hyperparams::default()
    };
    let samples = small_set();
    let (params, _) = train_with(&samples, &hyper, fixed_epochs()).unwrap();
    assert_eq!(flat(&params), reference_run(&samples, &hyper));
}

#[test]
fn momentum_matches_dense_reference() {
    let hyper = Hyperparams {
        dim: 4,
        epochs: 3,
        seed: 5,
        ..Hyperparams::default()
    };
    let samples = small_set();
    let (params, _) = train_with(&samples, &hyper, fixed_epochs()).unwrap();
    assert_eq!(flat(&params), reference_run(&samples, &hyper));
}

#[test]
fn resume_equals_uninterrupted() {
    let dir = tempfile::tempdir().unwrap();
    let samples = small_set();
    let hyper = Hyperparams {
        dim: 6,
        epochs: 5,
        seed: 3,
        ..Hyperparams::default()
    };
    let mut straight = Trainer::new(hyper.clone(), fixed_epochs()).unwrap();
    straight.run(&samples).unwrap();

    let mut first = Trainer::new(Hyperparams { epochs: 2, ..hyper.clone() }, fixed_epochs()).unwrap();
    first.run(&samples).unwrap();
    let mut cp = first.checkpoint();
    cp.hyperparams.epochs = 5;
    let path = dir.path().join("half.json");
    save_checkpoint(&cp, &path).unwrap();
    let mut resumed = Trainer::from_checkpoint(&load_checkpoint(&path).unwrap()).unwrap();
    resumed.run(&samples).unwrap();

    assert_eq!(resumed.checkpoint(), straight.checkpoint());
}

#[test]
fn zero_epochs_keep_initialization() {
    let hyper = Hyperparams {
        dim: 3,
        epochs: 0,
        seed: 8,
        ..Hyperparams::default()
    };
    let (params, report) = train_with(&small_set(), &hyper, fixed_epochs()).unwrap();
    let init = init_params(&hyper, &mut ChaCha8Rng::seed_from_u64(8));
    assert_eq!(params, init);
    assert_eq!(report.epochs_run, 0);
    assert!(report.mean_hinge.is_empty());
}

#[test]
fn same_seed_same_checkpoint_bytes() {
    let samples = small_set();
    let hyper = Hyperparams {
        dim: 4,
        epochs: 2,
        seed: 21,
        ..Hyperparams::default()
    };
    let bytes = || {
        let mut t = Trainer::new(hyper.clone(), TrainOptions::default()).unwrap();
        t.run(&samples).unwrap();
        let mut buf = Vec::new();
        t.checkpoint().to_writer(&mut buf).unwrap();
        buf
    };
    assert_eq!(bytes(), bytes());
}

#[test]
fn zero_parameters_are_the_trivial_solution() {
    let hyper = Hyperparams::default();
    let params = ModelParams::zeros(hyper.dim);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for sample in small_set().iter().take(200) {
        assert_eq!(distance(sample, &params), 0.0);
        let negative = corrupt(sample, &mut rng);
        assert_eq!(pair_loss(&negative, &params, &hyper), hyper.margin);
    }
}

#[test]
fn default_run_stays_finite_on_bundled_corpus() {
    let samples = build_training_set(&corpus().programs);
    let hyper = Hyperparams {
        epochs: 3,
        ..Hyperparams::default()
    };
    let (params, report) = train_with(&samples, &hyper, fixed_epochs()).unwrap();
    assert!(params.is_finite());
    assert!(report.mean_hinge.iter().all(|h| h.is_finite()));
    assert!(report.mean_hinge[2] < hyper.margin);
}
