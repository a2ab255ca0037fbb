//! Training samples (a parent kind with its direct children) and negative
//! samples produced by substituting a single symbol.

use std::fmt::Write as _;
use std::io::{self, Write};

use rand::Rng;

use crate::ast::{leaf_count, AstNode, LabeledProgram, NodeKind, VOCAB_SIZE};

/// A non-leaf node and its ordered children, with each child's share of the
/// parent's leaves.
#[derive(Clone, Debug, PartialEq)]
pub struct TrainingSample {
    pub parent: NodeKind,
    pub children: Vec<NodeKind>,
    pub coefficients: Vec<f64>,
}

/// Read access to the symbols of a sample, shared by positive samples and
/// their corrupted copies.
pub trait SampleView {
    fn parent(&self) -> NodeKind;
    fn child(&self, i: usize) -> NodeKind;
    fn coefficients(&self) -> &[f64];

    fn child_count(&self) -> usize {
        self.coefficients().len()
    }
}

impl SampleView for TrainingSample {
    fn parent(&self) -> NodeKind {
        self.parent
    }

    fn child(&self, i: usize) -> NodeKind {
        self.children[i]
    }

    fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }
}

/// A symbol position in a sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    Parent,
    /// 0-based child index.
    Child(usize),
}

/// A sample with exactly one symbol replaced. Coefficients are the base's:
/// the tree shape, and with it every leaf count, is unchanged.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NegativeSample<'a> {
    pub base: &'a TrainingSample,
    pub slot: Slot,
    pub replacement: NodeKind,
}

impl NegativeSample<'_> {
    /// The symbol that was replaced.
    pub fn original(&self) -> NodeKind {
        match self.slot {
            Slot::Parent => self.base.parent,
            Slot::Child(i) => self.base.children[i],
        }
    }
}

impl SampleView for NegativeSample<'_> {
    fn parent(&self) -> NodeKind {
        match self.slot {
            Slot::Parent => self.replacement,
            _ => self.base.parent,
        }
    }

    fn child(&self, i: usize) -> NodeKind {
        match self.slot {
            Slot::Child(j) if j == i => self.replacement,
            _ => self.base.children[i],
        }
    }

    fn coefficients(&self) -> &[f64] {
        &self.base.coefficients
    }
}

/// One sample per non-leaf node, in preorder.
pub fn extract_samples(ast: &AstNode) -> Vec<TrainingSample> {
    let mut samples = Vec::new();
    collect(ast, &mut samples);
    samples
}

// Returns the leaf count of `node`. The parent's sample is reserved before
// the children are visited so the output stays in preorder.
fn collect(node: &AstNode, out: &mut Vec<TrainingSample>) -> usize {
    if node.is_leaf() {
        return 1;
    }
    let slot = out.len();
    out.push(TrainingSample {
        parent: node.kind,
        children: node.children.iter().map(|c| c.kind).collect(),
        coefficients: Vec::new(),
    });
    let leaves: Vec<usize> = node.children.iter().map(|c| collect(c, out)).collect();
    let total: usize = leaves.iter().sum();
    out[slot].coefficients = leaves
        .iter()
        .map(|&n| n as f64 / total as f64)
        .collect();
    debug_assert_eq!(total, leaf_count(node));
    total
}

/// Replaces one uniformly chosen symbol (parent or any child) with a
/// uniformly chosen different symbol.
pub fn corrupt<'a, R: Rng + ?Sized>(sample: &'a TrainingSample, rng: &mut R) -> NegativeSample<'a> {
    let position = rng.random_range(0..=sample.children.len());
    let slot = if position == 0 {
        Slot::Parent
    } else {
        Slot::Child(position - 1)
    };
    let mut negative = NegativeSample {
        base: sample,
        slot,
        replacement: sample.parent,
    };
    let original = negative.original().id();
    let mut pick = rng.random_range(0..VOCAB_SIZE - 1);
    if pick >= original {
        pick += 1;
    }
    negative.replacement = NodeKind::from_id(pick).expect("id in vocabulary");
    negative
}

/// Concatenation of [`extract_samples`] over all programs, in order.
pub fn build_training_set(corpus: &[LabeledProgram]) -> Vec<TrainingSample> {
    corpus
        .iter()
        .flat_map(|program| extract_samples(&program.ast))
        .collect()
}

/// Writes `parent<TAB>child:coeff,child:coeff,...`, one sample per line.
pub fn write_sample_dump<W: Write>(samples: &[TrainingSample], mut writer: W) -> io::Result<()> {
    let mut line = String::new();
    for sample in samples {
        line.clear();
        line.push_str(sample.parent.name());
        line.push('\t');
        for (i, (child, coeff)) in sample.children.iter().zip(&sample.coefficients).enumerate() {
            if i > 0 {
                line.push(',');
            }
            write!(line, "{}:{}", child.name(), coeff).expect("write to String");
        }
        line.push('\n');
        writer.write_all(line.as_bytes())?;
    }
    Ok(())
}
