//! Learning vector representations of AST node kinds, and the analyses and
//! classifiers built on top of them.
//!
//! The pipeline runs: [`ast`] documents, [`sampling`] of parent/children
//! windows, the tree-based [`coder`], the momentum [`trainer`], then
//! [`analysis`] (neighbors, k-means) and [`classify`].

pub mod analysis;
pub mod ast;
pub mod classify;
pub mod coder;
pub mod embeddings;
pub mod sampling;
pub mod trainer;

pub use ast::{AstNode, Corpus, LabeledProgram, NodeKind, VOCAB_SIZE};
pub use coder::{Hyperparams, ModelParams};
pub use sampling::{NegativeSample, TrainingSample};
pub use trainer::{Checkpoint, TrainReport, Trainer};
