use ndarray::{Array1, Array2};
use proptest::prelude::*;

use nodevec::analysis::{neighbor_list, Metric};
use nodevec::ast::{dump_ast, leaf_count, load_ast, AstNode, NodeKind, VOCAB_SIZE};
use nodevec::classify::histogram;
use nodevec::coder::{child_weight, ModelParams};
use nodevec::embeddings::{read_embeddings, write_embeddings, EmbeddingTable};
use nodevec::sampling::extract_samples;

fn kind() -> impl Strategy<Value = NodeKind> {
    (0..VOCAB_SIZE).prop_map(|i| NodeKind::from_id(i).unwrap())
}

fn tree() -> impl Strategy<Value = AstNode> {
    kind()
        .prop_map(AstNode::leaf)
        .prop_recursive(5, 64, 5, |inner| {
            (kind(), prop::collection::vec(inner, 1..5)).prop_map(|(k, children)| AstNode::new(k, children))
        })
}

fn table(dim: usize) -> impl Strategy<Value = Array2<f64>> {
    prop::collection::vec(-10.0..10.0f64, VOCAB_SIZE * dim)
        .prop_map(move |v| Array2::from_shape_vec((VOCAB_SIZE, dim), v).unwrap())
}

proptest! {
    #[test]
    fn leaf_count_is_additive(t in tree()) {
        if t.children.is_empty() {
            prop_assert_eq!(leaf_count(&t), 1);
        } else {
            prop_assert_eq!(leaf_count(&t), t.children.iter().map(leaf_count).sum::<usize>());
        }
    }

    #[test]
    fn dump_load_round_trip(t in tree()) {
        let text = dump_ast(&t);
        let back = load_ast(&text).unwrap();
        prop_assert_eq!(dump_ast(&back), text);
        prop_assert_eq!(back, t);
    }

    #[test]
    fn coefficients_are_leaf_shares(t in tree()) {
        for sample in extract_samples(&t) {
            let sum: f64 = sample.coefficients.iter().sum();
            prop_assert!((sum - 1.0).abs() < 1e-12);
            prop_assert!(sample.coefficients.iter().all(|&c| c > 0.0 && c <= 1.0));
            prop_assert_eq!(sample.children.len(), sample.coefficients.len());
        }
    }

    #[test]
    fn histogram_sums_to_size(t in tree()) {
        prop_assert_eq!(histogram(&t).iter().map(|&c| c as usize).sum::<usize>(), t.size());
    }

    #[test]
    fn child_weights_interpolate(n in 1usize..64, pick in 0usize..64) {
        let i = pick % n + 1;
        let (l, r) = child_weight(n, i).unwrap();
        prop_assert!((l + r - 1.0).abs() < 1e-15);
        prop_assert!((0.0..=1.0).contains(&l) && (0.0..=1.0).contains(&r));
        if n > 1 {
            prop_assert_eq!(l, (n - i) as f64 / (n - 1) as f64);
        }
    }

    #[test]
    fn neighbor_ranking_ignores_translation(
        embeddings in table(3),
        shift in prop::collection::vec(-50.0..50.0f64, 3),
        query in kind(),
    ) {
        let mut params = ModelParams::zeros(3);
        params.embeddings = embeddings;
        let before = neighbor_list(&params, query, Metric::Euclidean);
        let offset = Array1::from(shift);
        for mut row in params.embeddings.rows_mut() {
            row += &offset;
        }
        let after = neighbor_list(&params, query, Metric::Euclidean);
        let original: std::collections::HashMap<NodeKind, f64> = before.ranked.iter().copied().collect();
        prop_assert_eq!(after.ranked.len(), VOCAB_SIZE - 1);
        for ((k0, d0), (k1, d1)) in before.ranked.iter().zip(&after.ranked) {
            prop_assert!((d0 - d1).abs() <= 1e-9 * (1.0 + d0));
            // Only kinds tied before the shift may trade places under rounding.
            if k0 != k1 {
                prop_assert!((original[k1] - d0).abs() <= 1e-9 * (1.0 + d0));
            }
        }
    }

    #[test]
    fn export_round_trip_is_exact(embeddings in table(4)) {
        let mut params = ModelParams::zeros(4);
        params.embeddings = embeddings;
        let mut buf = Vec::new();
        write_embeddings(&EmbeddingTable::from_params(&params), &mut buf).unwrap();
        let back = read_embeddings(&buf[..]).unwrap();
        prop_assert_eq!(back, EmbeddingTable::from_params(&params));
    }
}
