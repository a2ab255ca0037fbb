//! Program classification on top of node-kind features.
//!
//! Two model families share one implementation: softmax layers `y = f(W·x + b)`
//! stacked behind an input layer.
//!
//! * Logistic regression: standardized node-kind counts, no hidden layers.
//! * Feed-forward net: the input layer averages the embeddings of all nodes
//!   in the program (the table may be a trained coder's, or random), then
//!   tanh hidden layers, then softmax. The table is fine-tuned by default.

use std::fmt::Write as _;
use std::io::{self, Write};

use ndarray::{Array1, Array2, ArrayView1, Axis, Zip};
use rand::distr::{Distribution, Uniform};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ast::{AstNode, Corpus, LabeledProgram, VOCAB_SIZE};
use crate::coder::{init_radius, ModelParams};

/// Probability rows must sum to one within this tolerance.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum ClassifyError {
    #[error("label `{label}` has {count} programs, at least 5 are needed for a 3:1:1 split")]
    TooFewPrograms { label: String, count: usize },
    #[error("probability row {row} sums to {sum}, not 1")]
    NotNormalized { row: usize, sum: f64 },
    #[error("probability row {row} has a negative, non-finite or zero-for-the-true-class entry")]
    NonPositive { row: usize },
    #[error("{0} feature rows but {1} labels")]
    LengthMismatch(usize, usize),
    #[error("embedding-mean features need trained parameters")]
    MissingParams,
    #[error("inputs have width {found}, the model expects {expected}")]
    Width { expected: usize, found: usize },
    #[error("classifier training diverged in epoch {0}")]
    Divergence(usize),
    #[error("label {label} out of range for {classes} classes")]
    LabelOutOfRange { label: usize, classes: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FeatureMode {
    /// Node-kind histogram (bag of nodes).
    Counts,
    /// Mean embedding over all nodes.
    EmbedMean,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FeatureVector {
    Counts(Vec<u32>),
    EmbedMean(Array1<f64>),
}

impl FeatureVector {
    pub fn to_dense(&self) -> Array1<f64> {
        match self {
            FeatureVector::Counts(c) => c.iter().map(|&x| f64::from(x)).collect(),
            FeatureVector::EmbedMean(v) => v.clone(),
        }
    }
}

/// Node-kind histogram, indexed by kind id.
pub fn histogram(ast: &AstNode) -> Vec<u32> {
    let mut counts = vec![0u32; VOCAB_SIZE];
    for node in ast.iter() {
        counts[node.kind.id()] += 1;
    }
    counts
}

pub fn featurize(program: &LabeledProgram, mode: FeatureMode, params: Option<&ModelParams>) -> Result<FeatureVector, ClassifyError> {
    match mode {
        FeatureMode::Counts => Ok(FeatureVector::Counts(histogram(&program.ast))),
        FeatureMode::EmbedMean => {
            let params = params.ok_or(ClassifyError::MissingParams)?;
            let mut sum = Array1::zeros(params.dim());
            let mut n = 0usize;
            for node in program.ast.iter() {
                sum += &params.vector(node.kind);
                n += 1;
            }
            Ok(FeatureVector::EmbedMean(sum / n as f64))
        }
    }
}

/// Stacks histograms of every program into a `programs × VOCAB_SIZE` matrix.
pub fn count_matrix(programs: &[LabeledProgram]) -> Array2<f64> {
    let mut m = Array2::zeros((programs.len(), VOCAB_SIZE));
    for (mut row, p) in m.outer_iter_mut().zip(programs) {
        for (dst, c) in row.iter_mut().zip(histogram(&p.ast)) {
            *dst = f64::from(c);
        }
    }
    m
}

/// Index sets of a train/cross-validation/test partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSpec {
    pub train: Vec<usize>,
    pub cv: Vec<usize>,
    pub test: Vec<usize>,
}

/// Stratified 3:1:1 split of `corpus`, seeded.
pub fn split(corpus: &Corpus, seed: u64) -> Result<SplitSpec, ClassifyError> {
    let labels: Vec<&str> = corpus.programs.iter().map(|p| p.label.as_str()).collect();
    split_labels(&labels, seed)
}

pub fn split_labels(labels: &[&str], seed: u64) -> Result<SplitSpec, ClassifyError> {
    let mut distinct: Vec<&str> = labels.to_vec();
    distinct.sort_unstable();
    distinct.dedup();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spec = SplitSpec {
        train: Vec::new(),
        cv: Vec::new(),
        test: Vec::new(),
    };
    for label in distinct {
        let mut members: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] == label).collect();
        let n = members.len();
        if n < 5 {
            return Err(ClassifyError::TooFewPrograms {
                label: label.to_owned(),
                count: n,
            });
        }
        members.shuffle(&mut rng);
        let n_train = (3 * n + 2) / 5;
        let n_cv = (n + 2) / 5;
        spec.train.extend_from_slice(&members[..n_train]);
        spec.cv.extend_from_slice(&members[n_train..n_train + n_cv]);
        spec.test.extend_from_slice(&members[n_train + n_cv..]);
    }
    spec.train.sort_unstable();
    spec.cv.sort_unstable();
    spec.test.sort_unstable();
    Ok(spec)
}

/// `−(1/N)·Σ_i log y_i[t_i]`.
///
/// Rows must be nonnegative and sum to one; the true class must have
/// positive probability. Zeros elsewhere contribute nothing.
pub fn cross_entropy(probabilities: &Array2<f64>, labels: &[usize]) -> Result<f64, ClassifyError> {
    if probabilities.nrows() != labels.len() {
        return Err(ClassifyError::LengthMismatch(probabilities.nrows(), labels.len()));
    }
    let mut total = 0.0;
    for (row, (p, &label)) in probabilities.outer_iter().zip(labels).enumerate() {
        if label >= p.len() {
            return Err(ClassifyError::LabelOutOfRange {
                label,
                classes: p.len(),
            });
        }
        if p.iter().any(|&x| !(x >= 0.0 && x.is_finite())) || p[label] <= 0.0 {
            return Err(ClassifyError::NonPositive { row });
        }
        let sum = p.sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(ClassifyError::NotNormalized { row, sum });
        }
        total -= p[label].ln();
    }
    Ok(total / labels.len() as f64)
}

fn log_softmax(logits: &Array1<f64>) -> Array1<f64> {
    let max = logits.fold(f64::NEG_INFINITY, |m, &x| m.max(x));
    let log_norm = logits.iter().map(|&x| (x - max).exp()).sum::<f64>().ln() + max;
    logits.mapv(|x| x - log_norm)
}

/// Index of the largest entry, lowest index on ties.
pub fn argmax(values: ArrayView1<'_, f64>) -> usize {
    values
        .iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |best, (i, &v)| if v > best.1 { (i, v) } else { best })
        .0
}

/// Anything that assigns class log-probabilities to an input row.
pub trait Predictor {
    fn classes(&self) -> usize;
    fn log_proba(&self, input: ArrayView1<'_, f64>) -> Array1<f64>;

    fn proba(&self, input: ArrayView1<'_, f64>) -> Array1<f64> {
        self.log_proba(input).mapv(f64::exp)
    }

    fn predict(&self, input: ArrayView1<'_, f64>) -> usize {
        argmax(self.log_proba(input).view())
    }
}

/// Uniform prediction over all classes: the random-guess baseline.
#[derive(Clone, Copy, Debug)]
pub struct UniformGuess {
    pub classes: usize,
}

impl Predictor for UniformGuess {
    fn classes(&self) -> usize {
        self.classes
    }

    fn log_proba(&self, _input: ArrayView1<'_, f64>) -> Array1<f64> {
        Array1::from_elem(self.classes, -(self.classes as f64).ln())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Evaluation {
    pub accuracy: f64,
    pub cross_entropy: f64,
}

pub fn evaluate<P: Predictor + ?Sized>(model: &P, inputs: &Array2<f64>, labels: &[usize]) -> Evaluation {
    let mut correct = 0usize;
    let mut xent = 0.0;
    for (row, &label) in inputs.outer_iter().zip(labels) {
        let logp = model.log_proba(row);
        if argmax(logp.view()) == label {
            correct += 1;
        }
        xent -= logp[label];
    }
    let n = labels.len().max(1) as f64;
    Evaluation {
        accuracy: correct as f64 / n,
        cross_entropy: xent / n,
    }
}

/// Where the embedding table of a feed-forward net comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum EmbeddingInit {
    /// Copied from a trained coder.
    Pretrained(Array2<f64>),
    /// Drawn with the coder's own initialization rule.
    Random { dim: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub enum InputSpec {
    /// Z-scored with training-set statistics.
    Standardized,
    /// Mean embedding of all nodes; inputs must be node-kind counts.
    EmbeddingMean { init: EmbeddingInit, fine_tune: bool },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Architecture {
    pub input: InputSpec,
    /// Widths of the tanh hidden layers; empty for logistic regression.
    pub hidden: Vec<usize>,
}

impl Architecture {
    pub fn logistic() -> Self {
        Architecture {
            input: InputSpec::Standardized,
            hidden: Vec::new(),
        }
    }

    pub fn feed_forward(hidden: Vec<usize>, init: EmbeddingInit, fine_tune: bool) -> Self {
        Architecture {
            input: InputSpec::EmbeddingMean { init, fine_tune },
            hidden,
        }
    }

    pub fn describe(&self) -> String {
        let input = match &self.input {
            InputSpec::Standardized => "standardized features".to_owned(),
            InputSpec::EmbeddingMean { init, fine_tune } => format!(
                "mean embedding ({}, {})",
                match init {
                    EmbeddingInit::Pretrained(_) => "pretrained",
                    EmbeddingInit::Random { .. } => "random init",
                },
                if *fine_tune { "fine-tuned" } else { "frozen" }
            ),
        };
        if self.hidden.is_empty() {
            format!("softmax regression on {input}")
        } else {
            format!("feed-forward {:?} tanh on {input}", self.hidden)
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassifierConfig {
    pub epochs: usize,
    pub learning_rate: f64,
    pub momentum: f64,
    pub batch_size: usize,
    pub seed: u64,
}

impl Default for ClassifierConfig {
    fn default() -> Self {
        ClassifierConfig {
            epochs: 100,
            learning_rate: 0.05,
            momentum: 0.9,
            batch_size: 16,
            seed: 42,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum InputLayer {
    Standardize { mean: Array1<f64>, scale: Array1<f64> },
    EmbeddingMean { table: Array2<f64>, trainable: bool },
}

impl InputLayer {
    fn width(&self) -> usize {
        match self {
            InputLayer::Standardize { mean, .. } => mean.len(),
            InputLayer::EmbeddingMean { table, .. } => table.nrows(),
        }
    }

    fn output_width(&self) -> usize {
        match self {
            InputLayer::Standardize { mean, .. } => mean.len(),
            InputLayer::EmbeddingMean { table, .. } => table.ncols(),
        }
    }

    fn apply(&self, x: ArrayView1<'_, f64>) -> Array1<f64> {
        match self {
            InputLayer::Standardize { mean, scale } => (&x - mean) / scale,
            InputLayer::EmbeddingMean { table, .. } => {
                let total = x.sum();
                if total == 0.0 {
                    Array1::zeros(table.ncols())
                } else {
                    table.t().dot(&x) / total
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
struct Dense {
    /// `out × in`.
    weight: Array2<f64>,
    bias: Array1<f64>,
}

/// A trained (or freshly initialized) softmax classifier.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassifierModel {
    pub architecture: Architecture,
    pub labels: Vec<String>,
    input: InputLayer,
    layers: Vec<Dense>,
}

struct Grads {
    table: Option<Array2<f64>>,
    layers: Vec<(Array2<f64>, Array1<f64>)>,
}

impl ClassifierModel {
    /// Initializes a model; the standardizer, if any, is fitted on `inputs`.
    pub fn new(
        architecture: &Architecture,
        labels: Vec<String>,
        inputs: &Array2<f64>,
        seed: u64,
    ) -> Result<Self, ClassifyError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let input = match &architecture.input {
            InputSpec::Standardized => {
                let mean = inputs.mean_axis(Axis(0)).unwrap_or_else(|| Array1::zeros(inputs.ncols()));
                let scale = inputs
                    .std_axis(Axis(0), 0.0)
                    .mapv(|s| if s > 0.0 { s } else { 1.0 });
                InputLayer::Standardize { mean, scale }
            }
            InputSpec::EmbeddingMean { init, fine_tune } => {
                if inputs.ncols() != VOCAB_SIZE {
                    return Err(ClassifyError::Width {
                        expected: VOCAB_SIZE,
                        found: inputs.ncols(),
                    });
                }
                let table = match init {
                    EmbeddingInit::Pretrained(table) => table.clone(),
                    EmbeddingInit::Random { dim } => {
                        let r = init_radius(*dim);
                        let uniform = Uniform::new_inclusive(-r, r).expect("valid range");
                        Array2::from_shape_simple_fn((VOCAB_SIZE, *dim), || uniform.sample(&mut rng))
                    }
                };
                InputLayer::EmbeddingMean {
                    table,
                    trainable: *fine_tune,
                }
            }
        };
        let mut widths = vec![input.output_width()];
        widths.extend(&architecture.hidden);
        widths.push(labels.len());
        let layers = widths
            .windows(2)
            .map(|w| {
                let (fan_in, fan_out) = (w[0], w[1]);
                let r = (6.0 / (fan_in + fan_out) as f64).sqrt();
                let uniform = Uniform::new_inclusive(-r, r).expect("valid range");
                Dense {
                    weight: Array2::from_shape_simple_fn((fan_out, fan_in), || uniform.sample(&mut rng)),
                    bias: Array1::zeros(fan_out),
                }
            })
            .collect();
        Ok(ClassifierModel {
            architecture: architecture.clone(),
            labels,
            input,
            layers,
        })
    }

    pub fn input_width(&self) -> usize {
        self.input.width()
    }

    /// Output of the input layer; for embedding-mean models this is the
    /// program's mean embedding under the current table.
    pub fn encode(&self, input: ArrayView1<'_, f64>) -> Array1<f64> {
        self.input.apply(input)
    }

    fn activations(&self, input: ArrayView1<'_, f64>) -> Vec<Array1<f64>> {
        let mut acts = vec![self.input.apply(input)];
        let last = self.layers.len() - 1;
        for (i, layer) in self.layers.iter().enumerate() {
            let mut z = layer.weight.dot(acts.last().expect("nonempty")) + &layer.bias;
            if i < last {
                z.mapv_inplace(f64::tanh);
            }
            acts.push(z);
        }
        acts
    }

    fn zero_grads(&self) -> Grads {
        Grads {
            table: match &self.input {
                InputLayer::EmbeddingMean { table, trainable: true } => Some(Array2::zeros(table.raw_dim())),
                _ => None,
            },
            layers: self
                .layers
                .iter()
                .map(|l| (Array2::zeros(l.weight.raw_dim()), Array1::zeros(l.bias.len())))
                .collect(),
        }
    }

    // Adds the gradient of −log p[label] for one example; returns the loss.
    fn backprop(&self, input: ArrayView1<'_, f64>, label: usize, grads: &mut Grads) -> f64 {
        let acts = self.activations(input);
        let logits = acts.last().expect("nonempty");
        let logp = log_softmax(logits);
        let loss = -logp[label];
        let mut delta = logp.mapv(f64::exp);
        delta[label] -= 1.0;

        for i in (0..self.layers.len()).rev() {
            let below = &acts[i];
            let (gw, gb) = &mut grads.layers[i];
            for (mut row, &d) in gw.outer_iter_mut().zip(&delta) {
                row.scaled_add(d, below);
            }
            *gb += &delta;
            let back = self.layers[i].weight.t().dot(&delta);
            if i > 0 {
                delta = back;
                Zip::from(&mut delta).and(below).for_each(|d, &a| *d *= 1.0 - a * a);
            } else if let Some(gt) = grads.table.as_mut() {
                let total = input.sum();
                if total > 0.0 {
                    for (mut row, &count) in gt.outer_iter_mut().zip(input) {
                        if count != 0.0 {
                            row.scaled_add(count / total, &back);
                        }
                    }
                }
            }
        }
        loss
    }

    fn batch_grads(&self, inputs: &Array2<f64>, labels: &[usize], rows: &[usize]) -> (f64, Grads) {
        let mut grads = self.zero_grads();
        let mut loss = 0.0;
        for &r in rows {
            loss += self.backprop(inputs.row(r), labels[r], &mut grads);
        }
        let scale = 1.0 / rows.len() as f64;
        if let Some(t) = grads.table.as_mut() {
            *t *= scale;
        }
        for (w, b) in &mut grads.layers {
            *w *= scale;
            *b *= scale;
        }
        (loss * scale, grads)
    }

    /// Mean cross-entropy over all rows.
    pub fn batch_loss(&self, inputs: &Array2<f64>, labels: &[usize]) -> f64 {
        evaluate(self, inputs, labels).cross_entropy
    }

    /// Trainable parameters flattened: table (if trainable), then each
    /// layer's weight and bias.
    pub fn flat_params(&self) -> Vec<f64> {
        let mut out = Vec::new();
        if let InputLayer::EmbeddingMean { table, trainable: true } = &self.input {
            out.extend(table.iter());
        }
        for l in &self.layers {
            out.extend(l.weight.iter());
            out.extend(l.bias.iter());
        }
        out
    }

    pub fn set_flat_params(&mut self, values: &[f64]) {
        let mut it = values.iter().copied();
        if let InputLayer::EmbeddingMean { table, trainable: true } = &mut self.input {
            table.iter_mut().for_each(|x| *x = it.next().expect("enough values"));
        }
        for l in &mut self.layers {
            l.weight.iter_mut().for_each(|x| *x = it.next().expect("enough values"));
            l.bias.iter_mut().for_each(|x| *x = it.next().expect("enough values"));
        }
    }

    /// Gradient of [`ClassifierModel::batch_loss`] in [`ClassifierModel::flat_params`] order.
    pub fn flat_gradient(&self, inputs: &Array2<f64>, labels: &[usize]) -> Vec<f64> {
        let rows: Vec<usize> = (0..labels.len()).collect();
        let (_, grads) = self.batch_grads(inputs, labels, &rows);
        let mut out = Vec::new();
        if let Some(t) = &grads.table {
            out.extend(t.iter());
        }
        for (w, b) in &grads.layers {
            out.extend(w.iter());
            out.extend(b.iter());
        }
        out
    }
}

impl Predictor for ClassifierModel {
    fn classes(&self) -> usize {
        self.labels.len()
    }

    fn log_proba(&self, input: ArrayView1<'_, f64>) -> Array1<f64> {
        let acts = self.activations(input);
        log_softmax(acts.last().expect("nonempty"))
    }
}

/// Per-epoch learning-curve point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EpochMetrics {
    pub epoch: usize,
    pub train_xent: f64,
    pub cv_xent: f64,
    pub train_acc: f64,
    pub cv_acc: f64,
}

#[derive(Clone, Debug)]
pub struct TrainedClassifier {
    pub model: ClassifierModel,
    pub curves: Vec<EpochMetrics>,
}

/// Inputs and labels for one part of a split.
#[derive(Clone, Debug, PartialEq)]
pub struct Dataset {
    pub inputs: Array2<f64>,
    pub labels: Vec<usize>,
}

impl Dataset {
    pub fn new(inputs: Array2<f64>, labels: Vec<usize>) -> Result<Self, ClassifyError> {
        if inputs.nrows() != labels.len() {
            return Err(ClassifyError::LengthMismatch(inputs.nrows(), labels.len()));
        }
        Ok(Dataset { inputs, labels })
    }

    pub fn subset(&self, rows: &[usize]) -> Dataset {
        Dataset {
            inputs: self.inputs.select(Axis(0), rows),
            labels: rows.iter().map(|&r| self.labels[r]).collect(),
        }
    }
}

/// Minibatch gradient descent with momentum on mean cross-entropy.
pub fn train_classifier(
    train: &Dataset,
    cv: Option<&Dataset>,
    labels: Vec<String>,
    architecture: &Architecture,
    config: &ClassifierConfig,
) -> Result<TrainedClassifier, ClassifyError> {
    let classes = labels.len();
    if let Some(&bad) = train.labels.iter().find(|&&l| l >= classes) {
        return Err(ClassifyError::LabelOutOfRange { label: bad, classes });
    }
    let mut model = ClassifierModel::new(architecture, labels, &train.inputs, config.seed)?;
    let mut velocity = model.zero_grads();
    // The shuffling stream is separate from the initialization stream.
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(1);

    let mut order: Vec<usize> = (0..train.labels.len()).collect();
    let mut curves = Vec::with_capacity(config.epochs);
    let batch = config.batch_size.max(1);
    for epoch in 1..=config.epochs {
        order.shuffle(&mut rng);
        for rows in order.chunks(batch) {
            let (loss, grads) = model.batch_grads(&train.inputs, &train.labels, rows);
            if !loss.is_finite() {
                return Err(ClassifyError::Divergence(epoch));
            }
            step(&mut model, &mut velocity, &grads, config);
        }
        let on_train = evaluate(&model, &train.inputs, &train.labels);
        if !on_train.cross_entropy.is_finite() {
            return Err(ClassifyError::Divergence(epoch));
        }
        let on_cv = cv.map(|d| evaluate(&model, &d.inputs, &d.labels));
        curves.push(EpochMetrics {
            epoch,
            train_xent: on_train.cross_entropy,
            cv_xent: on_cv.map_or(f64::NAN, |e| e.cross_entropy),
            train_acc: on_train.accuracy,
            cv_acc: on_cv.map_or(f64::NAN, |e| e.accuracy),
        });
    }
    Ok(TrainedClassifier { model, curves })
}

fn step(model: &mut ClassifierModel, velocity: &mut Grads, grads: &Grads, config: &ClassifierConfig) {
    let (mu, lr) = (config.momentum, config.learning_rate);
    let update = |p: &mut f64, v: &mut f64, g: &f64| {
        *v = mu * *v + *g;
        *p -= lr * *v;
    };
    if let (InputLayer::EmbeddingMean { table, trainable: true }, Some(vt), Some(gt)) =
        (&mut model.input, velocity.table.as_mut(), grads.table.as_ref())
    {
        Zip::from(table).and(vt).and(gt).for_each(update);
    }
    for ((layer, (vw, vb)), (gw, gb)) in model.layers.iter_mut().zip(&mut velocity.layers).zip(&grads.layers) {
        Zip::from(&mut layer.weight).and(vw).and(gw).for_each(update);
        Zip::from(&mut layer.bias).and(vb).and(gb).for_each(update);
    }
}

/// Settings of the pretrained-versus-random comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct ProtocolConfig {
    /// Seed of the 3:1:1 split; held fixed across model seeds.
    pub split_seed: u64,
    pub model_seed: u64,
    pub hidden: Vec<usize>,
    pub fine_tune: bool,
    pub logistic: ClassifierConfig,
    pub deep: ClassifierConfig,
}

impl Default for ProtocolConfig {
    fn default() -> Self {
        ProtocolConfig {
            split_seed: 1,
            model_seed: 42,
            hidden: vec![64; 4],
            fine_tune: true,
            logistic: ClassifierConfig {
                epochs: 100,
                learning_rate: 0.05,
                ..ClassifierConfig::default()
            },
            deep: ClassifierConfig {
                epochs: 300,
                learning_rate: 0.005,
                ..ClassifierConfig::default()
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunResult {
    pub name: String,
    pub architecture: String,
    pub test: Evaluation,
    pub curves: Vec<EpochMetrics>,
}

#[derive(Clone, Debug)]
pub struct ProtocolResult {
    pub split: SplitSpec,
    pub random_guess: Evaluation,
    pub logistic: RunResult,
    pub pretrained: RunResult,
    pub random_init: RunResult,
    pub seed: u64,
}

impl ProtocolResult {
    pub fn runs(&self) -> [&RunResult; 3] {
        [&self.logistic, &self.pretrained, &self.random_init]
    }
}

/// Splits the corpus, then trains and tests logistic regression on counts
/// and the same feed-forward net with pretrained and with random embeddings.
pub fn run_protocol(corpus: &Corpus, pretrained: &ModelParams, config: &ProtocolConfig) -> Result<ProtocolResult, ClassifyError> {
    let split_spec = split(corpus, config.split_seed)?;
    let labels = corpus.labels();
    let all = Dataset::new(count_matrix(&corpus.programs), corpus.label_indices())?;
    let train = all.subset(&split_spec.train);
    let cv = all.subset(&split_spec.cv);
    let test = all.subset(&split_spec.test);

    let run = |name: &str, arch: Architecture, cfg: &ClassifierConfig| -> Result<RunResult, ClassifyError> {
        let cfg = ClassifierConfig {
            seed: config.model_seed,
            ..cfg.clone()
        };
        let trained = train_classifier(&train, Some(&cv), labels.clone(), &arch, &cfg)?;
        Ok(RunResult {
            name: name.to_owned(),
            architecture: arch.describe(),
            test: evaluate(&trained.model, &test.inputs, &test.labels),
            curves: trained.curves,
        })
    };

    let logistic = run("logistic regression", Architecture::logistic(), &config.logistic)?;
    let pretrained_run = run(
        "feed-forward, pretrained embeddings",
        Architecture::feed_forward(
            config.hidden.clone(),
            EmbeddingInit::Pretrained(pretrained.embeddings.clone()),
            config.fine_tune,
        ),
        &config.deep,
    )?;
    let random_run = run(
        "feed-forward, random embeddings",
        Architecture::feed_forward(
            config.hidden.clone(),
            EmbeddingInit::Random { dim: pretrained.dim() },
            config.fine_tune,
        ),
        &config.deep,
    )?;
    Ok(ProtocolResult {
        random_guess: evaluate(&UniformGuess { classes: labels.len() }, &test.inputs, &test.labels),
        split: split_spec,
        logistic,
        pretrained: pretrained_run,
        random_init: random_run,
        seed: config.model_seed,
    })
}

/// CSV `epoch,train_xent,cv_xent,train_acc,cv_acc` after a `# seed=` line.
pub fn write_curves<W: Write>(curves: &[EpochMetrics], seed: u64, mut writer: W) -> io::Result<()> {
    writeln!(writer, "# seed={seed}")?;
    writeln!(writer, "epoch,train_xent,cv_xent,train_acc,cv_acc")?;
    for m in curves {
        writeln!(
            writer,
            "{},{},{},{},{}",
            m.epoch, m.train_xent, m.cv_xent, m.train_acc, m.cv_acc
        )?;
    }
    Ok(())
}

/// Method/accuracy table for the test set.
pub fn summary_table(result: &ProtocolResult) -> String {
    let mut out = format!("# seed={}\n", result.seed);
    writeln!(out, "Accuracy of program classification (test set, {} programs)", result.split.test.len()).expect("write to String");
    writeln!(out, "The deep rows use a feed-forward net over mean node embeddings.\n").expect("write to String");
    writeln!(out, "{:<40} {:>9} {:>14}", "Method", "Accuracy", "Cross-entropy").expect("write to String");
    let mut row = |name: &str, e: &Evaluation| {
        writeln!(out, "{:<40} {:>8.2}% {:>14.4}", name, 100.0 * e.accuracy, e.cross_entropy).expect("write to String");
    };
    row("Random guess", &result.random_guess);
    for run in result.runs() {
        row(&run.name, &run.test);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::NodeKind;
    use ndarray::array;

    #[test]
    fn root_only_features() {
        let program = LabeledProgram {
            label: "x".into(),
            source_id: "x".into(),
            ast: AstNode::leaf(NodeKind::Root),
        };
        match featurize(&program, FeatureMode::Counts, None).unwrap() {
            FeatureVector::Counts(c) => {
                assert_eq!(c.iter().sum::<u32>(), 1);
                assert_eq!(c[NodeKind::Root.id()], 1);
            }
            other => panic!("{other:?}"),
        }
        let mut params = ModelParams::zeros(3);
        params.embeddings.row_mut(NodeKind::Root.id()).assign(&array![0.1, -0.2, 0.3]);
        assert_eq!(
            featurize(&program, FeatureMode::EmbedMean, Some(&params)).unwrap(),
            FeatureVector::EmbedMean(array![0.1, -0.2, 0.3])
        );
        assert_eq!(
            featurize(&program, FeatureMode::EmbedMean, None),
            Err(ClassifyError::MissingParams)
        );
    }

    #[test]
    fn split_per_label_three_one_one() {
        let labels: Vec<&str> = ["a", "b", "c", "d"].iter().flat_map(|l| [*l; 5]).collect();
        let s = split_labels(&labels, 3).unwrap();
        assert_eq!((s.train.len(), s.cv.len(), s.test.len()), (12, 4, 4));
        for l in ["a", "b", "c", "d"] {
            let count = |set: &[usize]| set.iter().filter(|&&i| labels[i] == l).count();
            assert_eq!((count(&s.train), count(&s.cv), count(&s.test)), (3, 1, 1));
        }
        let mut all: Vec<usize> = s.train.iter().chain(&s.cv).chain(&s.test).copied().collect();
        all.sort();
        assert_eq!(all, (0..20).collect::<Vec<_>>());
        assert_eq!(s, split_labels(&labels, 3).unwrap());
    }

    #[test]
    fn split_needs_five_per_label() {
        let labels = ["a", "a", "a", "a", "b", "b", "b", "b", "b"];
        assert_eq!(
            split_labels(&labels, 0),
            Err(ClassifyError::TooFewPrograms {
                label: "a".into(),
                count: 4
            })
        );
    }

    #[test]
    fn cross_entropy_closed_forms() {
        let onehot = array![[1.0, 0.0, 0.0], [0.0, 0.0, 1.0]];
        assert_eq!(cross_entropy(&onehot, &[0, 2]).unwrap(), 0.0);
        let uniform = Array2::from_elem((3, 4), 0.25);
        assert!((cross_entropy(&uniform, &[0, 1, 3]).unwrap() - 4f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn cross_entropy_rejects_bad_rows() {
        assert!(matches!(
            cross_entropy(&array![[0.5, 0.6]], &[0]),
            Err(ClassifyError::NotNormalized { .. })
        ));
        assert!(matches!(
            cross_entropy(&array![[1.5, -0.5]], &[0]),
            Err(ClassifyError::NonPositive { .. })
        ));
        assert!(matches!(
            cross_entropy(&array![[1.0, 0.0]], &[1]),
            Err(ClassifyError::NonPositive { .. })
        ));
        assert!(matches!(
            cross_entropy(&array![[1.0, 0.0]], &[0, 1]),
            Err(ClassifyError::LengthMismatch(1, 2))
        ));
    }

    #[test]
    fn uniform_guess_on_balanced_classes() {
        let inputs = Array2::zeros((8, 1));
        let labels = [0, 1, 2, 3, 3, 2, 1, 0];
        let e = evaluate(&UniformGuess { classes: 4 }, &inputs, &labels);
        assert_eq!(e.accuracy, 0.25);
        assert!((e.cross_entropy - 4f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn argmax_ties_take_lowest_index() {
        assert_eq!(argmax(array![0.2, 0.5, 0.5].view()), 1);
        assert_eq!(argmax(array![1.0, 1.0].view()), 0);
    }

    #[test]
    fn separable_toy_set_is_learned() {
        // Two classes split by the sign of the first coordinate.
        let inputs = array![
            [2.0, 1.0], [1.5, -1.0], [3.0, 0.0], [1.0, 2.0], [2.5, -2.0],
            [-2.0, 1.0], [-1.5, -1.0], [-3.0, 0.5], [-1.0, 2.0], [-2.5, -2.0]
        ];
        let labels = vec![0, 0, 0, 0, 0, 1, 1, 1, 1, 1];
        let data = Dataset::new(inputs, labels).unwrap();
        let trained = train_classifier(
            &data,
            None,
            vec!["pos".into(), "neg".into()],
            &Architecture::logistic(),
            &ClassifierConfig {
                epochs: 200,
                ..ClassifierConfig::default()
            },
        )
        .unwrap();
        assert_eq!(evaluate(&trained.model, &data.inputs, &data.labels).accuracy, 1.0);
        assert_eq!(trained.curves.len(), 200);
    }

    #[test]
    fn embedding_input_matches_featurize() {
        let ast = AstNode::new(
            NodeKind::BinaryOp,
            vec![AstNode::leaf(NodeKind::Id), AstNode::leaf(NodeKind::Id)],
        );
        let program = LabeledProgram {
            label: "x".into(),
            source_id: "x".into(),
            ast,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let params = crate::coder::init_params(
            &crate::coder::Hyperparams {
                dim: 5,
                ..Default::default()
            },
            &mut rng,
        );
        let counts = count_matrix(std::slice::from_ref(&program));
        let model = ClassifierModel::new(
            &Architecture::feed_forward(vec![3], EmbeddingInit::Pretrained(params.embeddings.clone()), true),
            vec!["x".into(), "y".into()],
            &counts,
            0,
        )
        .unwrap();
        let FeatureVector::EmbedMean(expected) = featurize(&program, FeatureMode::EmbedMean, Some(&params)).unwrap() else {
            unreachable!()
        };
        let got = model.encode(counts.row(0));
        for (a, b) in got.iter().zip(&expected) {
            assert!((a - b).abs() < 1e-15);
        }
    }
}
