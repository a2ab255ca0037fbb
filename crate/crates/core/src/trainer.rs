//! Stochastic gradient descent with momentum over (sample, negative) pairs.
//!
//! Every epoch draws a fresh negative for each sample. One velocity buffer
//! runs over the whole stream and carries across epochs; every parameter,
//! touched by the current pair or not, takes a momentum step each sample.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::Path;
use std::time::{Duration, Instant};

use ndarray::{Array1, Array2, Zip};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ast::{vocabulary, vocabulary_fingerprint, VOCAB_SIZE};
use crate::coder::{init_params, loss_and_gradient, penalty, CoderError, Gradient, Hyperparams, ModelParams};
use crate::sampling::{corrupt, TrainingSample};

/// Relative improvement below which an epoch counts as stalled.
pub const CONVERGENCE_TOLERANCE: f64 = 1e-4;
/// Consecutive stalled epochs that end training.
pub const CONVERGENCE_PATIENCE: usize = 3;

const CHECKPOINT_FORMAT: &str = "nodevec-checkpoint";
const CHECKPOINT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum TrainError {
    #[error("no training samples")]
    NoSamples,
    #[error(transparent)]
    Hyperparams(#[from] CoderError),
    #[error("non-finite {what} in epoch {epoch} at sample {sample}")]
    NonFinite {
        what: &'static str,
        epoch: usize,
        sample: usize,
    },
}

#[derive(Debug, Error)]
pub enum CheckpointError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("malformed checkpoint: {0}")]
    Format(#[from] serde_json::Error),
    #[error("unsupported checkpoint {format} version {version}")]
    Version { format: String, version: u32 },
    #[error("checkpoint was written for a different node vocabulary")]
    Vocabulary,
    #[error("checkpoint matrix `{0}` has the wrong shape")]
    Shape(&'static str),
}

/// Switches on top of the plain algorithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrainOptions {
    /// Visit samples in a fresh seeded permutation each epoch. Off replays
    /// them in corpus order.
    pub shuffle: bool,
    /// Stop before the epoch cap once [`has_converged`] holds.
    pub stop_on_convergence: bool,
}

impl Default for TrainOptions {
    fn default() -> Self {
        TrainOptions {
            shuffle: true,
            stop_on_convergence: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EpochStats {
    /// 1-based.
    pub epoch: usize,
    pub mean_hinge: f64,
    pub objective: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrainReport {
    pub mean_hinge: Vec<f64>,
    pub objective: Vec<f64>,
    pub epochs_run: usize,
    pub converged: bool,
    pub wall_time: Duration,
    pub seed: u64,
}

/// True iff the last [`CONVERGENCE_PATIENCE`] epochs each improved the
/// loss by less than [`CONVERGENCE_TOLERANCE`] relative to the epoch
/// before.
pub fn has_converged(history: &[f64]) -> bool {
    if history.len() <= CONVERGENCE_PATIENCE {
        return false;
    }
    history[history.len() - CONVERGENCE_PATIENCE - 1..]
        .windows(2)
        .all(|w| {
            let (prev, cur) = (w[0], w[1]);
            let improvement = if prev == 0.0 { 0.0 } else { (prev - cur) / prev.abs() };
            improvement < CONVERGENCE_TOLERANCE
        })
}

pub struct Trainer {
    hyper: Hyperparams,
    options: TrainOptions,
    params: ModelParams,
    velocity: ModelParams,
    rng: ChaCha8Rng,
    epoch: usize,
    mean_hinge: Vec<f64>,
    objective: Vec<f64>,
}

impl Trainer {
    /// Fresh run: the parameters are the first draws of the seeded stream.
    pub fn new(hyper: Hyperparams, options: TrainOptions) -> Result<Self, TrainError> {
        hyper.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(hyper.seed);
        let params = init_params(&hyper, &mut rng);
        let velocity = ModelParams::zeros(hyper.dim);
        Ok(Trainer {
            hyper,
            options,
            params,
            velocity,
            rng,
            epoch: 0,
            mean_hinge: Vec::new(),
            objective: Vec::new(),
        })
    }

    pub fn from_checkpoint(cp: &Checkpoint) -> Result<Self, CheckpointError> {
        let dim = cp.hyperparams.dim;
        let mut rng = ChaCha8Rng::seed_from_u64(cp.rng.seed);
        rng.set_stream(cp.rng.stream);
        rng.set_word_pos(cp.rng.word_pos.parse().map_err(|_| CheckpointError::Shape("rng.word_pos"))?);
        Ok(Trainer {
            hyper: cp.hyperparams.clone(),
            options: cp.options,
            params: cp.params.to_params(dim)?,
            velocity: cp.velocity.to_params(dim)?,
            rng,
            epoch: cp.epoch,
            mean_hinge: cp.history.mean_hinge.clone(),
            objective: cp.history.objective.clone(),
        })
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn hyperparams(&self) -> &Hyperparams {
        &self.hyper
    }

    /// Completed epochs.
    pub fn epoch(&self) -> usize {
        self.epoch
    }

    pub fn history(&self) -> (&[f64], &[f64]) {
        (&self.mean_hinge, &self.objective)
    }

    pub fn checkpoint(&self) -> Checkpoint {
        Checkpoint {
            format: CHECKPOINT_FORMAT.to_owned(),
            version: CHECKPOINT_VERSION,
            vocabulary: vocabulary_fingerprint(),
            hyperparams: self.hyper.clone(),
            options: self.options,
            epoch: self.epoch,
            rng: RngState {
                seed: self.hyper.seed,
                stream: self.rng.get_stream(),
                word_pos: self.rng.get_word_pos().to_string(),
            },
            params: ParamsRecord::from_params(&self.params),
            velocity: ParamsRecord::from_params(&self.velocity),
            history: History {
                mean_hinge: self.mean_hinge.clone(),
                objective: self.objective.clone(),
            },
        }
    }

    pub fn run_epoch(&mut self, samples: &[TrainingSample]) -> Result<EpochStats, TrainError> {
        if samples.is_empty() {
            return Err(TrainError::NoSamples);
        }
        let epoch = self.epoch + 1;
        let mut order: Vec<usize> = (0..samples.len()).collect();
        if self.options.shuffle {
            order.shuffle(&mut self.rng);
        }

        let mut hinge_sum = 0.0;
        for &idx in &order {
            let negative = corrupt(&samples[idx], &mut self.rng);
            let (hinge, grad) = loss_and_gradient(&negative, &self.params, &self.hyper);
            if !hinge.is_finite() {
                return Err(TrainError::NonFinite { what: "loss", epoch, sample: idx });
            }
            if !grad.is_finite() {
                return Err(TrainError::NonFinite { what: "gradient", epoch, sample: idx });
            }
            hinge_sum += hinge;
            if !self.apply(&grad) {
                return Err(TrainError::NonFinite { what: "parameter", epoch, sample: idx });
            }
        }

        let n = samples.len() as f64;
        let stats = EpochStats {
            epoch,
            mean_hinge: hinge_sum / n,
            objective: hinge_sum / (2.0 * n) + penalty(&self.params, &self.hyper),
        };
        self.epoch = epoch;
        self.mean_hinge.push(stats.mean_hinge);
        self.objective.push(stats.objective);
        Ok(stats)
    }

    /// Runs until the epoch cap, or convergence if enabled.
    pub fn run(&mut self, samples: &[TrainingSample]) -> Result<TrainReport, TrainError> {
        let start = Instant::now();
        let mut converged = self.options.stop_on_convergence && has_converged(&self.mean_hinge);
        while self.epoch < self.hyper.epochs && !converged {
            self.run_epoch(samples)?;
            converged = self.options.stop_on_convergence && has_converged(&self.mean_hinge);
        }
        Ok(TrainReport {
            mean_hinge: self.mean_hinge.clone(),
            objective: self.objective.clone(),
            epochs_run: self.epoch,
            converged,
            wall_time: start.elapsed(),
            seed: self.hyper.seed,
        })
    }

    pub fn into_params(self) -> ModelParams {
        self.params
    }

    // velocity ← ε·velocity + grad; params ← params − α·velocity.
    // Returns false if any updated entry is non-finite.
    fn apply(&mut self, grad: &Gradient) -> bool {
        let momentum = self.hyper.momentum;
        let rate = self.hyper.learning_rate;
        let mut finite = true;
        let mut step = |param: &mut f64, vel: &mut f64, g: &f64| {
            *vel = momentum * *vel + *g;
            *param -= rate * *vel;
            finite &= param.is_finite();
        };
        Zip::from(&mut self.params.w_left)
            .and(&mut self.velocity.w_left)
            .and(&grad.w_left)
            .for_each(&mut step);
        Zip::from(&mut self.params.w_right)
            .and(&mut self.velocity.w_right)
            .and(&grad.w_right)
            .for_each(&mut step);
        Zip::from(&mut self.params.bias)
            .and(&mut self.velocity.bias)
            .and(&grad.bias)
            .for_each(&mut step);
        // Rows the pair does not touch have zero gradient but still coast
        // on their velocity.
        let zero = Array1::zeros(self.hyper.dim);
        for (kind, (param_row, vel_row)) in vocabulary().iter().zip(
            self.params
                .embeddings
                .rows_mut()
                .into_iter()
                .zip(self.velocity.embeddings.rows_mut()),
        ) {
            let g = grad.embeddings.get(kind).unwrap_or(&zero);
            Zip::from(param_row).and(vel_row).and(g).for_each(&mut step);
        }
        finite
    }
}

/// Trains from a fresh initialization with default options.
pub fn train(samples: &[TrainingSample], hyper: &Hyperparams) -> Result<(ModelParams, TrainReport), TrainError> {
    train_with(samples, hyper, TrainOptions::default())
}

pub fn train_with(
    samples: &[TrainingSample],
    hyper: &Hyperparams,
    options: TrainOptions,
) -> Result<(ModelParams, TrainReport), TrainError> {
    if samples.is_empty() {
        return Err(TrainError::NoSamples);
    }
    let mut trainer = Trainer::new(hyper.clone(), options)?;
    let report = trainer.run(samples)?;
    Ok((trainer.into_params(), report))
}

/// Row-major matrix with explicit dimensions.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f64>,
}

impl Matrix {
    fn from_array(a: &Array2<f64>) -> Self {
        Matrix {
            rows: a.nrows(),
            cols: a.ncols(),
            data: a.iter().copied().collect(),
        }
    }

    fn from_vector(v: &Array1<f64>) -> Self {
        Matrix {
            rows: 1,
            cols: v.len(),
            data: v.to_vec(),
        }
    }

    fn to_array(&self, shape: (usize, usize), name: &'static str) -> Result<Array2<f64>, CheckpointError> {
        if (self.rows, self.cols) != shape || self.data.len() != self.rows * self.cols {
            return Err(CheckpointError::Shape(name));
        }
        Array2::from_shape_vec(shape, self.data.clone()).map_err(|_| CheckpointError::Shape(name))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamsRecord {
    pub embeddings: Matrix,
    pub w_left: Matrix,
    pub w_right: Matrix,
    pub bias: Matrix,
}

impl ParamsRecord {
    pub fn from_params(p: &ModelParams) -> Self {
        ParamsRecord {
            embeddings: Matrix::from_array(&p.embeddings),
            w_left: Matrix::from_array(&p.w_left),
            w_right: Matrix::from_array(&p.w_right),
            bias: Matrix::from_vector(&p.bias),
        }
    }

    pub fn to_params(&self, dim: usize) -> Result<ModelParams, CheckpointError> {
        let bias = self.bias.to_array((1, dim), "bias")?;
        Ok(ModelParams {
            embeddings: self.embeddings.to_array((VOCAB_SIZE, dim), "embeddings")?,
            w_left: self.w_left.to_array((dim, dim), "w_left")?,
            w_right: self.w_right.to_array((dim, dim), "w_right")?,
            bias: bias.row(0).to_owned(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RngState {
    pub seed: u64,
    pub stream: u64,
    /// 128-bit word position, in decimal.
    pub word_pos: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct History {
    pub mean_hinge: Vec<f64>,
    pub objective: Vec<f64>,
}

/// Everything needed to continue a run bit-identically.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub format: String,
    pub version: u32,
    pub vocabulary: String,
    pub hyperparams: Hyperparams,
    pub options: TrainOptions,
    /// Completed epochs.
    pub epoch: usize,
    pub rng: RngState,
    pub params: ParamsRecord,
    pub velocity: ParamsRecord,
    pub history: History,
}

impl Checkpoint {
    pub fn params(&self) -> Result<ModelParams, CheckpointError> {
        self.params.to_params(self.hyperparams.dim)
    }

    pub fn to_writer<W: Write>(&self, mut writer: W) -> Result<(), CheckpointError> {
        serde_json::to_writer(&mut writer, self)?;
        writer.write_all(b"\n")?;
        writer.flush()?;
        Ok(())
    }

    pub fn from_reader<R: io::Read>(reader: R) -> Result<Self, CheckpointError> {
        let cp: Checkpoint = serde_json::from_reader(reader)?;
        if cp.format != CHECKPOINT_FORMAT || cp.version != CHECKPOINT_VERSION {
            return Err(CheckpointError::Version {
                format: cp.format,
                version: cp.version,
            });
        }
        if cp.vocabulary != vocabulary_fingerprint() {
            return Err(CheckpointError::Vocabulary);
        }
        let dim = cp.hyperparams.dim;
        cp.params.to_params(dim)?;
        cp.velocity.to_params(dim)?;
        Ok(cp)
    }
}

pub fn save_checkpoint(cp: &Checkpoint, path: &Path) -> Result<(), CheckpointError> {
    cp.to_writer(BufWriter::new(File::create(path)?))
}

pub fn load_checkpoint(path: &Path) -> Result<Checkpoint, CheckpointError> {
    Checkpoint::from_reader(BufReader::new(File::open(path)?))
}

/// CSV with columns `epoch,mean_hinge,objective`, after a `# seed=` line.
pub fn write_loss_log<W: Write>(mean_hinge: &[f64], objective: &[f64], seed: u64, mut writer: W) -> io::Result<()> {
    writeln!(writer, "# seed={seed}")?;
    writeln!(writer, "epoch,mean_hinge,objective")?;
    for (i, (h, o)) in mean_hinge.iter().zip(objective).enumerate() {
        writeln!(writer, "{},{},{}", i + 1, h, o)?;
    }
    Ok(())
}
