//! Library results against brute-force or straight-line recomputation.

use std::collections::HashMap;

use ndarray::{Array1, Array2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nodevec::analysis::kmeans_points;
use nodevec::ast::{AstNode, NodeKind, VOCAB_SIZE};
use nodevec::classify::{cross_entropy, histogram, split_labels};
use nodevec::sampling::{corrupt, extract_samples, Slot, TrainingSample};

/// Relabels clusters by first appearance so equal partitions compare equal.
fn canonical(assignment: &[usize]) -> Vec<usize> {
    let mut seen = HashMap::new();
    assignment
        .iter()
        .map(|&c| {
            let next = seen.len();
            *seen.entry(c).or_insert(next)
        })
        .collect()
}

fn inertia(points: &Array2<f64>, assignment: &[usize], k: usize) -> f64 {
    let dim = points.ncols();
    let mut total = 0.0;
    for c in 0..k {
        let members: Vec<usize> = (0..points.nrows()).filter(|&i| assignment[i] == c).collect();
        let mut mean = Array1::<f64>::zeros(dim);
        for &i in &members {
            mean += &points.row(i);
        }
        mean /= members.len() as f64;
        for &i in &members {
            total += points.row(i).iter().zip(&mean).map(|(a, b)| (a - b) * (a - b)).sum::<f64>();
        }
    }
    total
}

/// Minimum-inertia partition into exactly `k` nonempty clusters, by
/// enumerating restricted growth strings.
fn brute_force(points: &Array2<f64>, k: usize) -> (f64, Vec<usize>) {
    fn walk(i: usize, used: usize, k: usize, current: &mut Vec<usize>, points: &Array2<f64>, best: &mut (f64, Vec<usize>)) {
        let n = points.nrows();
        if n - i < k - used {
            return;
        }
        if i == n {
            let cost = inertia(points, current, k);
            if cost < best.0 - 1e-12 {
                *best = (cost, current.clone());
            }
            return;
        }
        for c in 0..(used + 1).min(k) {
            current.push(c);
            walk(i + 1, used.max(c + 1), k, current, points, best);
            current.pop();
        }
    }
    let mut best = (f64::INFINITY, Vec::new());
    walk(0, 0, k, &mut Vec::new(), points, &mut best);
    best
}

#[test]
fn kmeans_matches_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for case in 0..40 {
        let n = rng.random_range(4..=12);
        let k = rng.random_range(2..=3.min(n - 1));
        let dim = rng.random_range(1..=3);
        let centers = Array2::from_shape_fn((k, dim), |_| rng.random_range(-3.0..3.0));
        let points = Array2::from_shape_fn((n, dim), |(i, j)| centers[[i % k, j]] + rng.random_range(-1.0..1.0));
        let (best, partition) = brute_force(&points, k);
        let result = kmeans_points(&points, k, 16, case).unwrap();
        assert!(
            (result.inertia - best).abs() <= 1e-9 * best.max(1.0),
            "case {case}: k-means {} vs optimum {best}",
            result.inertia
        );
        assert_eq!(canonical(&result.assignment), partition, "case {case}");
    }
}

#[test]
fn kmeans_on_uniform_points_reaches_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for case in 0..20 {
        let n = rng.random_range(5..=10);
        let points = Array2::from_shape_fn((n, 2), |_| rng.random_range(0.0..1.0));
        for k in 2..=3 {
            let (best, _) = brute_force(&points, k);
            let result = kmeans_points(&points, k, 16, case).unwrap();
            assert!((result.inertia - best).abs() <= 1e-9, "case {case} k={k}: {} vs {best}", result.inertia);
        }
    }
}

fn random_tree(rng: &mut ChaCha8Rng, depth: usize) -> AstNode {
    let kind = NodeKind::from_id(rng.random_range(0..VOCAB_SIZE)).unwrap();
    if depth == 0 || rng.random_bool(0.35) {
        return AstNode::leaf(kind);
    }
    let n = rng.random_range(1..=4);
    AstNode::new(kind, (0..n).map(|_| random_tree(rng, depth - 1)).collect())
}

fn count_leaves(node: &AstNode) -> usize {
    if node.children.is_empty() {
        1
    } else {
        node.children.iter().map(count_leaves).sum()
    }
}

fn count_internal(node: &AstNode) -> usize {
    let own = usize::from(!node.children.is_empty());
    own + node.children.iter().map(count_internal).sum::<usize>()
}

fn tally(node: &AstNode, counts: &mut [u32]) {
    counts[node.kind.id()] += 1;
    for child in &node.children {
        tally(child, counts);
    }
}

#[test]
fn histograms_and_sample_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let tree = random_tree(&mut rng, 5);
        let mut counts = vec![0u32; VOCAB_SIZE];
        tally(&tree, &mut counts);
        assert_eq!(histogram(&tree), counts);

        let samples = extract_samples(&tree);
        assert_eq!(samples.len(), count_internal(&tree));
        if let Some(first) = samples.first() {
            assert_eq!(first.parent, tree.kind);
            let total = count_leaves(&tree) as f64;
            for (child, &coeff) in tree.children.iter().zip(&first.coefficients) {
                assert_eq!(coeff, count_leaves(child) as f64 / total);
            }
        }
    }
}

#[test]
fn cross_entropy_matches_direct_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let rows = rng.random_range(1..=8);
        let classes = rng.random_range(2..=5);
        let mut probs = Array2::<f64>::from_shape_fn((rows, classes), |_| rng.random_range(0.01..1.0));
        for mut row in probs.rows_mut() {
            let s = row.sum();
            row /= s;
        }
        let labels: Vec<usize> = (0..rows).map(|_| rng.random_range(0..classes)).collect();
        let mut direct = 0.0;
        for (r, &t) in labels.iter().enumerate() {
            direct += -probs[[r, t]].ln();
        }
        direct /= rows as f64;
        let got = cross_entropy(&probs, &labels).unwrap();
        assert!((got - direct).abs() < 1e-12, "{got} vs {direct}");
    }
}

#[test]
fn corruption_frequencies() {
    // Parent plus two children: each slot should be hit a third of the time.
    let sample = TrainingSample {
        parent: NodeKind::BinaryOp,
        children: vec![NodeKind::Id, NodeKind::Constant],
        coefficients: vec![0.5, 0.5],
    };
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let draws = 10_000;
    let mut slots = [0usize; 3];
    let mut replacements = vec![0usize; VOCAB_SIZE];
    for _ in 0..draws {
        let negative = corrupt(&sample, &mut rng);
        assert_ne!(negative.replacement, negative.original());
        let i = match negative.slot {
            Slot::Parent => 0,
            Slot::Child(c) => c + 1,
        };
        slots[i] += 1;
        replacements[negative.replacement.id()] += 1;
    }
    for count in slots {
        let share = count as f64 / draws as f64;
        assert!((share - 1.0 / 3.0).abs() < 0.02, "slot share {share}");
    }
    // Every kind is a possible replacement.
    assert!(replacements.iter().all(|&c| c > 0));
}

#[test]
fn split_sizes_follow_three_one_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let mut labels = Vec::new();
        let classes = rng.random_range(1..=4);
        let mut sizes = Vec::new();
        for c in 0..classes {
            let n = rng.random_range(5..=40);
            sizes.push(n);
            labels.extend(std::iter::repeat_n(format!("l{c}"), n));
        }
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let spec = split_labels(&refs, rng.random()).unwrap();
        let train_expected: usize = sizes.iter().map(|&n| (3.0 * n as f64 / 5.0).round() as usize).sum();
        let cv_expected: usize = sizes.iter().map(|&n| (n as f64 / 5.0).round() as usize).sum();
        assert_eq!(spec.train.len(), train_expected);
        assert_eq!(spec.cv.len(), cv_expected);
        assert_eq!(spec.train.len() + spec.cv.len() + spec.test.len(), labels.len());
        let mut all: Vec<usize> = spec.train.iter().chain(&spec.cv).chain(&spec.test).copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..labels.len()).collect::<Vec<_>>());
    }
}
