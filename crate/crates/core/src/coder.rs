//! The coding model.
//!
//! A parent's vector should be reconstructable from its children through one
//! tanh layer:
//!
//! ```text
//! vec(p) ≈ tanh( Σ_i l_i · W_i · vec(c_i) + b )
//! ```
//!
//! where `l_i` is child `i`'s share of the parent's leaves and `W_i` is
//! interpolated between two global matrices by the child's position (the
//! "continuous binary tree"). Coding quality is the squared Euclidean
//! distance `d`; training ranks each sample against a corrupted copy with
//! the hinge `max(0, Δ + d − d_c)` plus an ℓ2 penalty on `W_l` and `W_r`.

use std::collections::BTreeMap;

use ndarray::{Array1, Array2, ArrayView1, Zip};
use rand::distr::{Distribution, Uniform};
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ast::{NodeKind, VOCAB_SIZE};
use crate::sampling::{NegativeSample, SampleView};

#[derive(Debug, Error, PartialEq)]
pub enum CoderError {
    #[error("child position {position} out of range for {count} children")]
    PositionOutOfRange { count: usize, position: usize },
    #[error("invalid hyperparameter: {0}")]
    InvalidHyperparams(String),
}

/// Training hyperparameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Hyperparams {
    /// Embedding dimension `N_f`.
    pub dim: usize,
    /// Margin `Δ`.
    pub margin: f64,
    /// ℓ2 coefficient `λ`.
    pub lambda: f64,
    /// Step size `α`.
    pub learning_rate: f64,
    /// Momentum decay `ε`.
    pub momentum: f64,
    /// Epoch cap.
    pub epochs: usize,
    pub seed: u64,
}

impl Default for Hyperparams {
    fn default() -> Self {
        Hyperparams {
            dim: 30,
            margin: 1.0,
            lambda: 1e-4,
            learning_rate: 0.003,
            momentum: 0.9,
            epochs: 200,
            seed: 42,
        }
    }
}

impl Hyperparams {
    pub fn validate(&self) -> Result<(), CoderError> {
        let bad = |msg: String| Err(CoderError::InvalidHyperparams(msg));
        if self.dim < 1 {
            return bad("dim must be at least 1".into());
        }
        if !(self.margin >= 0.0 && self.margin.is_finite()) {
            return bad(format!("margin must be finite and >= 0, got {}", self.margin));
        }
        if !(self.lambda >= 0.0 && self.lambda.is_finite()) {
            return bad(format!("lambda must be finite and >= 0, got {}", self.lambda));
        }
        // A zero step size is allowed: it freezes the model.
        if !(self.learning_rate >= 0.0 && self.learning_rate.is_finite()) {
            return bad(format!("learning rate must be >= 0, got {}", self.learning_rate));
        }
        if !(0.0..1.0).contains(&self.momentum) {
            return bad(format!("momentum must lie in [0, 1), got {}", self.momentum));
        }
        Ok(())
    }

    /// Number of penalized weights, `2·N_f²`.
    pub fn weight_count(&self) -> f64 {
        2.0 * (self.dim * self.dim) as f64
    }
}

/// Embedding table plus the coding layer.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelParams {
    /// `VOCAB_SIZE × N_f`, row `k` is the vector of the kind with id `k`.
    pub embeddings: Array2<f64>,
    pub w_left: Array2<f64>,
    pub w_right: Array2<f64>,
    pub bias: Array1<f64>,
}

impl ModelParams {
    pub fn zeros(dim: usize) -> Self {
        ModelParams {
            embeddings: Array2::zeros((VOCAB_SIZE, dim)),
            w_left: Array2::zeros((dim, dim)),
            w_right: Array2::zeros((dim, dim)),
            bias: Array1::zeros(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.bias.len()
    }

    pub fn vector(&self, kind: NodeKind) -> ArrayView1<'_, f64> {
        self.embeddings.row(kind.id())
    }

    pub fn is_finite(&self) -> bool {
        self.embeddings.iter().all(|x| x.is_finite())
            && self.w_left.iter().all(|x| x.is_finite())
            && self.w_right.iter().all(|x| x.is_finite())
            && self.bias.iter().all(|x| x.is_finite())
    }

    /// `‖W_l‖²_F + ‖W_r‖²_F`.
    pub fn weight_norm_sq(&self) -> f64 {
        self.w_left.iter().map(|x| x * x).sum::<f64>()
            + self.w_right.iter().map(|x| x * x).sum::<f64>()
    }
}

/// Half-width of the uniform initialization range, `sqrt(6 / (2·N_f))`.
pub fn init_radius(dim: usize) -> f64 {
    (6.0 / (2.0 * dim as f64)).sqrt()
}

/// Draws every entry uniformly from `[-r, r]`, in the order embeddings,
/// `W_l`, `W_r`, `b` (each row-major).
pub fn init_params<R: Rng + ?Sized>(hyper: &Hyperparams, rng: &mut R) -> ModelParams {
    let dim = hyper.dim;
    let r = init_radius(dim);
    let uniform = Uniform::new_inclusive(-r, r).expect("valid range");
    let mut draw = |shape: (usize, usize)| {
        Array2::from_shape_simple_fn(shape, || uniform.sample(rng))
    };
    let embeddings = draw((VOCAB_SIZE, dim));
    let w_left = draw((dim, dim));
    let w_right = draw((dim, dim));
    let bias = draw((1, dim)).into_shape_with_order(dim).expect("row to vector");
    ModelParams {
        embeddings,
        w_left,
        w_right,
        bias,
    }
}

/// Coefficients of `W_l` and `W_r` in the weight of child `position`
/// (1-based) among `count` children.
pub fn child_weight(count: usize, position: usize) -> Result<(f64, f64), CoderError> {
    if count == 0 || position == 0 || position > count {
        return Err(CoderError::PositionOutOfRange { count, position });
    }
    if count == 1 {
        return Ok((0.5, 0.5));
    }
    let span = (count - 1) as f64;
    Ok(((count - position) as f64 / span, (position - 1) as f64 / span))
}

fn weights_for(count: usize) -> impl Iterator<Item = (f64, f64)> {
    (1..=count).map(move |i| child_weight(count, i).expect("position in range"))
}

struct Forward {
    coded: Array1<f64>,
}

fn forward<S: SampleView + ?Sized>(sample: &S, params: &ModelParams) -> Forward {
    let mut pre = params.bias.clone();
    let count = sample.child_count();
    for (i, ((left, right), &share)) in weights_for(count).zip(sample.coefficients()).enumerate() {
        let v = params.vector(sample.child(i));
        if left != 0.0 {
            pre.scaled_add(share * left, &params.w_left.dot(&v));
        }
        if right != 0.0 {
            pre.scaled_add(share * right, &params.w_right.dot(&v));
        }
    }
    pre.mapv_inplace(f64::tanh);
    Forward { coded: pre }
}

/// `tanh(Σ l_i (left_i·W_l + right_i·W_r)·vec(c_i) + b)`.
pub fn code_children<S: SampleView + ?Sized>(sample: &S, params: &ModelParams) -> Array1<f64> {
    forward(sample, params).coded
}

/// Squared Euclidean distance between `vec(p)` and the coded children.
pub fn distance<S: SampleView + ?Sized>(sample: &S, params: &ModelParams) -> f64 {
    let coded = code_children(sample, params);
    squared_gap(params.vector(sample.parent()), &coded)
}

fn squared_gap(target: ArrayView1<'_, f64>, coded: &Array1<f64>) -> f64 {
    target
        .iter()
        .zip(coded)
        .map(|(t, c)| (t - c) * (t - c))
        .sum()
}

/// `max(0, Δ + d − d_c)`.
pub fn hinge_loss(d: f64, d_c: f64, delta: f64) -> f64 {
    (delta + (d - d_c)).max(0.0)
}

/// `λ/(2M)·(‖W_l‖²_F + ‖W_r‖²_F)` with `M = 2·N_f²`.
pub fn penalty(params: &ModelParams, hyper: &Hyperparams) -> f64 {
    hyper.lambda / (2.0 * hyper.weight_count()) * params.weight_norm_sq()
}

/// Hinge on a (sample, corrupted sample) pair.
pub fn pair_hinge(negative: &NegativeSample<'_>, params: &ModelParams, margin: f64) -> f64 {
    hinge_loss(distance(negative.base, params), distance(negative, params), margin)
}

/// The per-pair term: hinge plus the full ℓ2 penalty. [`gradient`] is its
/// exact derivative.
pub fn pair_loss(negative: &NegativeSample<'_>, params: &ModelParams, hyper: &Hyperparams) -> f64 {
    pair_hinge(negative, params, hyper.margin) + penalty(params, hyper)
}

/// `(1/2N)·Σ J + λ/(2M)·(‖W_l‖²_F + ‖W_r‖²_F)`.
pub fn objective(pairs: &[NegativeSample<'_>], params: &ModelParams, hyper: &Hyperparams) -> f64 {
    let total: f64 = pairs
        .iter()
        .map(|pair| pair_hinge(pair, params, hyper.margin))
        .sum();
    total / (2.0 * pairs.len() as f64) + penalty(params, hyper)
}

/// Gradient of [`pair_loss`]. Embedding rows are stored only for the
/// symbols the pair touches.
#[derive(Clone, Debug, PartialEq)]
pub struct Gradient {
    pub embeddings: BTreeMap<NodeKind, Array1<f64>>,
    pub w_left: Array2<f64>,
    pub w_right: Array2<f64>,
    pub bias: Array1<f64>,
}

impl Gradient {
    pub fn zeros(dim: usize) -> Self {
        Gradient {
            embeddings: BTreeMap::new(),
            w_left: Array2::zeros((dim, dim)),
            w_right: Array2::zeros((dim, dim)),
            bias: Array1::zeros(dim),
        }
    }

    fn row(&mut self, kind: NodeKind) -> &mut Array1<f64> {
        let dim = self.bias.len();
        self.embeddings
            .entry(kind)
            .or_insert_with(|| Array1::zeros(dim))
    }

    /// Embedding gradient for `kind`; zero if untouched.
    pub fn embedding(&self, kind: NodeKind) -> Array1<f64> {
        self.embeddings
            .get(&kind)
            .cloned()
            .unwrap_or_else(|| Array1::zeros(self.bias.len()))
    }

    pub fn is_finite(&self) -> bool {
        self.embeddings.values().flatten().all(|x| x.is_finite())
            && self.w_left.iter().all(|x| x.is_finite())
            && self.w_right.iter().all(|x| x.is_finite())
            && self.bias.iter().all(|x| x.is_finite())
    }
}

// Adds `sign · ∂d/∂Θ` for one sample.
fn accumulate_distance<S: SampleView + ?Sized>(
    sample: &S,
    params: &ModelParams,
    sign: f64,
    grad: &mut Gradient,
) {
    let coded = forward(sample, params).coded;
    let residual = &params.vector(sample.parent()) - &coded;

    grad.row(sample.parent()).scaled_add(2.0 * sign, &residual);

    // ∂d/∂pre = -2·residual ⊙ (1 − coded²)
    let mut delta = residual;
    Zip::from(&mut delta)
        .and(&coded)
        .for_each(|r, &y| *r *= -2.0 * sign * (1.0 - y * y));

    grad.bias += &delta;
    let back_left = params.w_left.t().dot(&delta);
    let back_right = params.w_right.t().dot(&delta);

    let count = sample.child_count();
    for (i, ((left, right), &share)) in weights_for(count).zip(sample.coefficients()).enumerate() {
        let child = sample.child(i);
        let v = params.vector(child);
        if left != 0.0 {
            grad.row(child).scaled_add(share * left, &back_left);
            outer_add(&mut grad.w_left, share * left, &delta, v);
        }
        if right != 0.0 {
            grad.row(child).scaled_add(share * right, &back_right);
            outer_add(&mut grad.w_right, share * right, &delta, v);
        }
    }
}

fn outer_add(target: &mut Array2<f64>, scale: f64, col: &Array1<f64>, row: ArrayView1<'_, f64>) {
    for (mut target_row, &c) in target.rows_mut().into_iter().zip(col) {
        let s = scale * c;
        if s != 0.0 {
            target_row.scaled_add(s, &row);
        }
    }
}

/// Pair hinge and the exact gradient of [`pair_loss`].
///
/// The hinge's kink counts as flat: a pair that meets the margin exactly
/// contributes only the ℓ2 term.
pub fn loss_and_gradient(
    negative: &NegativeSample<'_>,
    params: &ModelParams,
    hyper: &Hyperparams,
) -> (f64, Gradient) {
    let d = distance(negative.base, params);
    let d_c = distance(negative, params);
    let hinge = hinge_loss(d, d_c, hyper.margin);
    let mut grad = Gradient::zeros(params.dim());
    if hinge > 0.0 {
        accumulate_distance(negative.base, params, 1.0, &mut grad);
        accumulate_distance(negative, params, -1.0, &mut grad);
    }
    if hyper.lambda > 0.0 {
        let scale = hyper.lambda / hyper.weight_count();
        grad.w_left.scaled_add(scale, &params.w_left);
        grad.w_right.scaled_add(scale, &params.w_right);
    }
    (hinge, grad)
}

pub fn gradient(negative: &NegativeSample<'_>, params: &ModelParams, hyper: &Hyperparams) -> Gradient {
    loss_and_gradient(negative, params, hyper).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::NodeKind::*;
    use crate::sampling::{Slot, TrainingSample};
    use ndarray::array;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn hyper(dim: usize) -> Hyperparams {
        Hyperparams {
            dim,
            ..Hyperparams::default()
        }
    }

    #[test]
    fn child_weight_cases() {
        assert_eq!(child_weight(3, 1), Ok((1.0, 0.0)));
        assert_eq!(child_weight(3, 2), Ok((0.5, 0.5)));
        assert_eq!(child_weight(3, 3), Ok((0.0, 1.0)));
        assert_eq!(child_weight(1, 1), Ok((0.5, 0.5)));
        assert_eq!(child_weight(2, 1), Ok((1.0, 0.0)));
        assert_eq!(child_weight(2, 2), Ok((0.0, 1.0)));
        assert!(child_weight(3, 0).is_err());
        assert!(child_weight(3, 4).is_err());
        assert!(child_weight(0, 1).is_err());
    }

    #[test]
    fn child_weights_sum_to_one() {
        for n in 1..40 {
            for i in 1..=n {
                let (l, r) = child_weight(n, i).unwrap();
                assert!(l >= 0.0 && r >= 0.0);
                assert!((l + r - 1.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn init_radius_for_default_dim() {
        assert!((init_radius(30) - 0.316_227_766_016_838).abs() < 1e-12);
    }

    #[test]
    fn init_is_deterministic_and_bounded() {
        let h = hyper(6);
        let a = init_params(&h, &mut ChaCha8Rng::seed_from_u64(1));
        let b = init_params(&h, &mut ChaCha8Rng::seed_from_u64(1));
        assert_eq!(a, b);
        let r = init_radius(6);
        assert!(a.embeddings.iter().chain(a.w_left.iter()).all(|x| x.abs() <= r));
        assert_ne!(a, init_params(&h, &mut ChaCha8Rng::seed_from_u64(2)));
    }

    #[test]
    fn init_entries_have_zero_mean() {
        let h = hyper(30);
        let p = init_params(&h, &mut ChaCha8Rng::seed_from_u64(5));
        let all: Vec<f64> = p
            .embeddings
            .iter()
            .chain(p.w_left.iter())
            .chain(p.w_right.iter())
            .chain(p.bias.iter())
            .copied()
            .collect();
        let n = all.len() as f64;
        let mean = all.iter().sum::<f64>() / n;
        let sigma = init_radius(30) / 3f64.sqrt();
        assert!(mean.abs() < 3.0 * sigma / n.sqrt(), "mean {mean}");
    }

    #[test]
    fn zero_params_code_to_zero() {
        let sample = TrainingSample {
            parent: If,
            children: vec![BinaryOp, Compound],
            coefficients: vec![0.5, 0.5],
        };
        let params = ModelParams::zeros(4);
        assert_eq!(code_children(&sample, &params), Array1::<f64>::zeros(4));
        assert_eq!(distance(&sample, &params), 0.0);
    }

    #[test]
    fn hand_computed_coding() {
        let mut params = ModelParams::zeros(1);
        params.w_left[[0, 0]] = 2.0;
        params.w_right[[0, 0]] = 2.0;
        params.bias[0] = 0.5;
        params.embeddings[[Id.id(), 0]] = 0.25;
        let sample = TrainingSample {
            parent: Return,
            children: vec![Id],
            coefficients: vec![1.0],
        };
        let coded = code_children(&sample, &params);
        assert_eq!(coded[0], 1.0f64.tanh());
        assert!((coded[0] - 0.76159).abs() < 1e-5);
    }

    #[test]
    fn squared_distance_by_hand() {
        let mut params = ModelParams::zeros(2);
        params.embeddings[[Return.id(), 0]] = 1.0;
        let sample = TrainingSample {
            parent: Return,
            children: vec![Id],
            coefficients: vec![1.0],
        };
        assert_eq!(distance(&sample, &params), 1.0);
    }

    #[test]
    fn distance_zero_when_parent_equals_code() {
        let h = hyper(3);
        let mut params = init_params(&h, &mut ChaCha8Rng::seed_from_u64(8));
        let sample = TrainingSample {
            parent: Return,
            children: vec![Id, Constant],
            coefficients: vec![0.5, 0.5],
        };
        let coded = code_children(&sample, &params);
        params.embeddings.row_mut(Return.id()).assign(&coded);
        assert_eq!(distance(&sample, &params), 0.0);
    }

    #[test]
    fn hinge_cases() {
        assert_eq!(hinge_loss(0.0, 2.0, 1.0), 0.0);
        assert_eq!(hinge_loss(0.5, 1.0, 1.0), 0.5);
        assert_eq!(hinge_loss(0.7, 0.7, 1.0), 1.0);
        assert_eq!(hinge_loss(0.7, 0.7, 0.25), 0.25);
    }

    #[test]
    fn penalty_only_objective() {
        let h = Hyperparams {
            dim: 1,
            lambda: 0.5,
            margin: 0.0,
            ..Hyperparams::default()
        };
        let mut params = ModelParams::zeros(1);
        params.w_left[[0, 0]] = 2.0;
        params.w_right[[0, 0]] = 1.0;
        let sample = TrainingSample {
            parent: Return,
            children: vec![Id],
            coefficients: vec![1.0],
        };
        let neg = NegativeSample {
            base: &sample,
            slot: Slot::Child(0),
            replacement: Constant,
        };
        // All vectors are zero so both distances vanish; Δ = 0 leaves only
        // λ/(2M)·(4 + 1) with M = 2.
        assert_eq!(objective(&[neg], &params, &h), 0.5 / 4.0 * 5.0);
    }

    #[test]
    fn satisfied_margins_give_zero_objective() {
        let h = Hyperparams {
            dim: 1,
            lambda: 0.0,
            margin: 1.0,
            ..Hyperparams::default()
        };
        let mut params = ModelParams::zeros(1);
        params.embeddings[[If.id(), 0]] = 2.0;
        let sample = TrainingSample {
            parent: Return,
            children: vec![Id],
            coefficients: vec![1.0],
        };
        let neg = NegativeSample {
            base: &sample,
            slot: Slot::Parent,
            replacement: If,
        };
        assert_eq!(objective(&[neg], &params, &h), 0.0);
        let g = gradient(&neg, &params, &h);
        assert_eq!(g, Gradient::zeros(1));
    }

    #[test]
    fn zero_params_pair_loss_is_margin() {
        let h = hyper(5);
        let params = ModelParams::zeros(5);
        let sample = TrainingSample {
            parent: For,
            children: vec![Assignment, BinaryOp, UnaryOp, Compound],
            coefficients: vec![0.25; 4],
        };
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let neg = crate::sampling::corrupt(&sample, &mut rng);
        assert_eq!(pair_loss(&neg, &params, &h), h.margin);
    }

    #[test]
    fn inactive_hinge_keeps_only_penalty_gradient() {
        let h = Hyperparams {
            dim: 2,
            lambda: 0.2,
            ..Hyperparams::default()
        };
        let mut params = ModelParams::zeros(2);
        params.embeddings[[Goto.id(), 0]] = 3.0;
        params.w_left = array![[1.0, 2.0], [3.0, 4.0]];
        let sample = TrainingSample {
            parent: Label,
            children: vec![Goto],
            coefficients: vec![1.0],
        };
        let neg = NegativeSample {
            base: &sample,
            slot: Slot::Parent,
            replacement: Goto,
        };
        let (hinge, g) = loss_and_gradient(&neg, &params, &h);
        assert_eq!(hinge, 0.0);
        assert!(g.embeddings.is_empty());
        assert_eq!(g.w_left, &params.w_left * (0.2 / 8.0));
        assert_eq!(g.bias, Array1::<f64>::zeros(2));
    }

    #[test]
    fn invalid_hyperparams() {
        for h in [
            Hyperparams { dim: 0, ..Hyperparams::default() },
            Hyperparams { margin: -1.0, ..Hyperparams::default() },
            Hyperparams { lambda: -1e-3, ..Hyperparams::default() },
            Hyperparams { learning_rate: -0.1, ..Hyperparams::default() },
            Hyperparams { momentum: 1.0, ..Hyperparams::default() },
            Hyperparams { momentum: f64::NAN, ..Hyperparams::default() },
        ] {
            assert!(h.validate().is_err(), "{h:?}");
        }
        assert!(Hyperparams::default().validate().is_ok());
    }
}
