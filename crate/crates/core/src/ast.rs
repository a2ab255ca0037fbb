//! Node-kind vocabulary, AST trees and their JSON interchange format.
//!
//! A tree document is an object `{"kind": <name>, "children": [...]}`.
//! [`dump_ast`] writes the canonical form: compact, `kind` before
//! `children`, so two documents are byte-equal iff the trees are equal.
//!
//! A corpus is JSON Lines, one [`LabeledProgram`] per line.

use std::collections::BTreeSet;
use std::fmt;
use std::io::{BufRead, Write};

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};
use sha2::{Digest, Sha256};
use thiserror::Error;

macro_rules! node_kinds {
    ($($variant:ident => $name:literal),+ $(,)?) => {
        /// The type label of an AST node.
        ///
        /// Identifier spellings, literal values and operator lexemes are not
        /// part of a node: every identifier is `ID`, every literal `Constant`.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        #[repr(u8)]
        pub enum NodeKind {
            $($variant),+
        }

        impl NodeKind {
            /// Every kind, ordered by id.
            pub const ALL: &'static [NodeKind] = &[$(NodeKind::$variant),+];

            /// The symbolic name used in interchange documents.
            pub fn name(self) -> &'static str {
                match self {
                    $(NodeKind::$variant => $name),+
                }
            }

            pub fn from_name(name: &str) -> Option<NodeKind> {
                match name {
                    $($name => Some(NodeKind::$variant),)+
                    _ => None,
                }
            }
        }
    };
}

node_kinds! {
    Id => "ID",
    Constant => "Constant",
    BinaryOp => "BinaryOp",
    UnaryOp => "UnaryOp",
    ArrayRef => "ArrayRef",
    Assignment => "Assignment",
    StructRef => "StructRef",
    ExprList => "ExprList",
    FuncCall => "FuncCall",
    Cast => "Cast",
    TernaryOp => "TernaryOp",
    CompoundLiteral => "CompoundLiteral",
    If => "If",
    For => "For",
    While => "While",
    DoWhile => "DoWhile",
    Break => "Break",
    Continue => "Continue",
    Case => "Case",
    Default => "Default",
    Switch => "Switch",
    Goto => "Goto",
    Label => "Label",
    Return => "Return",
    Compound => "Compound",
    EmptyStatement => "EmptyStatement",
    FuncDef => "FuncDef",
    Decl => "Decl",
    DeclList => "DeclList",
    TypeDecl => "TypeDecl",
    FuncDecl => "FuncDecl",
    ArrayDecl => "ArrayDecl",
    PtrDecl => "PtrDecl",
    ParamList => "ParamList",
    IdentifierType => "IdentifierType",
    Typedef => "Typedef",
    Typename => "Typename",
    Struct => "Struct",
    Union => "Union",
    Enum => "Enum",
    Enumerator => "Enumerator",
    EnumeratorList => "EnumeratorList",
    InitList => "InitList",
    Root => "Root",
}

/// Number of node kinds.
pub const VOCAB_SIZE: usize = NodeKind::ALL.len();

impl NodeKind {
    /// Contiguous index in `0..VOCAB_SIZE`, stable across runs.
    pub fn id(self) -> usize {
        self as usize
    }

    pub fn from_id(id: usize) -> Option<NodeKind> {
        NodeKind::ALL.get(id).copied()
    }
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for NodeKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for NodeKind {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct KindVisitor;

        impl Visitor<'_> for KindVisitor {
            type Value = NodeKind;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a node kind name")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<NodeKind, E> {
                NodeKind::from_name(v)
                    .ok_or_else(|| E::custom(format!("unknown node kind `{v}`")))
            }
        }

        deserializer.deserialize_str(KindVisitor)
    }
}

/// The closed, ordered node-kind vocabulary.
pub fn vocabulary() -> &'static [NodeKind] {
    NodeKind::ALL
}

/// Hex SHA-256 over the newline-joined kind names.
///
/// Stored in checkpoints so a model is never loaded against a reordered or
/// resized vocabulary.
pub fn vocabulary_fingerprint() -> String {
    let mut hasher = Sha256::new();
    for kind in vocabulary() {
        hasher.update(kind.name().as_bytes());
        hasher.update(b"\n");
    }
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[derive(Debug, Error)]
pub enum AstError {
    #[error("malformed document at line {line}, column {column}: {message}")]
    Malformed {
        message: String,
        line: usize,
        column: usize,
    },
    #[error("corpus line {line}: {message}")]
    Corpus { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for AstError {
    fn from(err: serde_json::Error) -> Self {
        if err.is_io() {
            return AstError::Io(err.into());
        }
        // serde_json appends its own position to the message; keep only ours.
        let message = err.to_string();
        let message = match message.rfind(" at line ") {
            Some(pos) => message[..pos].to_owned(),
            None => message,
        };
        AstError::Malformed {
            message,
            line: err.line(),
            column: err.column(),
        }
    }
}

/// An ordered tree of node kinds.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AstNode {
    pub kind: NodeKind,
    pub children: Vec<AstNode>,
}

impl AstNode {
    pub fn new(kind: NodeKind, children: Vec<AstNode>) -> Self {
        AstNode { kind, children }
    }

    pub fn leaf(kind: NodeKind) -> Self {
        AstNode {
            kind,
            children: Vec::new(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Preorder traversal.
    pub fn iter(&self) -> Preorder<'_> {
        Preorder { stack: vec![self] }
    }

    /// Total number of nodes.
    pub fn size(&self) -> usize {
        self.iter().count()
    }
}

pub struct Preorder<'a> {
    stack: Vec<&'a AstNode>,
}

impl<'a> Iterator for Preorder<'a> {
    type Item = &'a AstNode;

    fn next(&mut self) -> Option<&'a AstNode> {
        let node = self.stack.pop()?;
        self.stack.extend(node.children.iter().rev());
        Some(node)
    }
}

/// Number of leaf descendants; a leaf counts itself.
pub fn leaf_count(node: &AstNode) -> usize {
    if node.is_leaf() {
        1
    } else {
        node.children.iter().map(leaf_count).sum()
    }
}

pub fn load_ast(text: &str) -> Result<AstNode, AstError> {
    Ok(serde_json::from_str(text)?)
}

/// Canonical compact document for `node`.
pub fn dump_ast(node: &AstNode) -> String {
    serde_json::to_string(node).expect("AST serialization is infallible")
}

/// One program of a classification corpus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabeledProgram {
    pub label: String,
    pub source_id: String,
    pub ast: AstNode,
}

/// A set of labeled programs and the labels they are drawn from.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Corpus {
    pub programs: Vec<LabeledProgram>,
}

impl Corpus {
    pub fn new(programs: Vec<LabeledProgram>) -> Self {
        Corpus { programs }
    }

    /// Sorted distinct labels.
    pub fn labels(&self) -> Vec<String> {
        self.programs
            .iter()
            .map(|p| p.label.clone())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Label of each program as an index into [`Corpus::labels`].
    pub fn label_indices(&self) -> Vec<usize> {
        let labels = self.labels();
        self.programs
            .iter()
            .map(|p| labels.binary_search(&p.label).expect("label present"))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.programs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.programs.is_empty()
    }

    pub fn read_jsonl<R: BufRead>(reader: R) -> Result<Corpus, AstError> {
        let mut programs = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let program: LabeledProgram =
                serde_json::from_str(&line).map_err(|err| AstError::Corpus {
                    line: idx + 1,
                    message: AstError::from(err).to_string(),
                })?;
            programs.push(program);
        }
        Ok(Corpus { programs })
    }

    pub fn write_jsonl<W: Write>(&self, mut writer: W) -> Result<(), AstError> {
        for program in &self.programs {
            serde_json::to_writer(&mut writer, program)?;
            writer.write_all(b"\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_leaves() -> AstNode {
        AstNode::new(
            NodeKind::BinaryOp,
            vec![AstNode::leaf(NodeKind::Id), AstNode::leaf(NodeKind::Constant)],
        )
    }

    #[test]
    fn vocabulary_is_closed_and_contiguous() {
        let vocab = vocabulary();
        assert_eq!(vocab.len(), 44);
        for (idx, kind) in vocab.iter().enumerate() {
            assert_eq!(kind.id(), idx);
            assert_eq!(NodeKind::from_id(idx), Some(*kind));
            assert_eq!(NodeKind::from_name(kind.name()), Some(*kind));
        }
        let names: BTreeSet<_> = vocab.iter().map(|k| k.name()).collect();
        assert_eq!(names.len(), 44);
        assert_eq!(vocab[NodeKind::Id.id()].name(), "ID");
        assert_eq!(NodeKind::from_id(44), None);
    }

    #[test]
    fn fingerprint_is_stable() {
        assert_eq!(vocabulary_fingerprint(), vocabulary_fingerprint());
        assert_eq!(vocabulary_fingerprint().len(), 64);
    }

    #[test]
    fn leaf_counts() {
        assert_eq!(leaf_count(&AstNode::leaf(NodeKind::Root)), 1);
        assert_eq!(leaf_count(&two_leaves()), 2);
        let nested = AstNode::new(
            NodeKind::Return,
            vec![two_leaves()],
        );
        assert_eq!(leaf_count(&nested), 2);
    }

    #[test]
    fn root_leaf_document() {
        let root = load_ast(r#"{"kind": "Root", "children": []}"#).unwrap();
        assert_eq!(root, AstNode::leaf(NodeKind::Root));
        assert_eq!(dump_ast(&root), r#"{"kind":"Root","children":[]}"#);
    }

    #[test]
    fn load_accepts_any_key_order_and_whitespace() {
        let text = "{ \"children\" : [ {\"children\":[],\"kind\":\"ID\"} ],\n \"kind\": \"Return\" }";
        let tree = load_ast(text).unwrap();
        assert_eq!(
            dump_ast(&tree),
            r#"{"kind":"Return","children":[{"kind":"ID","children":[]}]}"#
        );
    }

    #[test]
    fn unknown_kind_reports_name_and_position() {
        let err = load_ast("{\"kind\":\"Root\",\"children\":[\n{\"kind\":\"Pragma\",\"children\":[]}]}")
            .unwrap_err();
        match err {
            AstError::Malformed { message, line, column } => {
                assert!(message.contains("Pragma"), "{message}");
                assert_eq!(line, 2);
                assert!(column > 0);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn malformed_documents_are_rejected() {
        for text in [
            "",
            "{",
            r#"{"kind":"Root"}"#,
            r#"{"kind":"Root","children":[],"extra":1}"#,
            r#"{"kind":3,"children":[]}"#,
            r#"[]"#,
        ] {
            assert!(matches!(load_ast(text), Err(AstError::Malformed { .. })), "{text}");
        }
    }

    #[test]
    fn preorder_iteration() {
        let tree = AstNode::new(NodeKind::Compound, vec![two_leaves(), AstNode::leaf(NodeKind::Break)]);
        let kinds: Vec<_> = tree.iter().map(|n| n.kind).collect();
        assert_eq!(
            kinds,
            vec![
                NodeKind::Compound,
                NodeKind::BinaryOp,
                NodeKind::Id,
                NodeKind::Constant,
                NodeKind::Break
            ]
        );
        assert_eq!(tree.size(), 5);
    }

    #[test]
    fn corpus_round_trip() {
        let corpus = Corpus::new(vec![
            LabeledProgram {
                label: "b".into(),
                source_id: "b/1.c".into(),
                ast: two_leaves(),
            },
            LabeledProgram {
                label: "a".into(),
                source_id: "a/1.c".into(),
                ast: AstNode::leaf(NodeKind::Root),
            },
        ]);
        let mut buf = Vec::new();
        corpus.write_jsonl(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with(r#"{"label":"b","source_id":"b/1.c","ast":{"kind":"BinaryOp""#));
        let back = Corpus::read_jsonl(text.as_bytes()).unwrap();
        assert_eq!(back, corpus);
        assert_eq!(back.labels(), vec!["a".to_string(), "b".to_string()]);
        assert_eq!(back.label_indices(), vec![1, 0]);
    }

    #[test]
    fn corpus_errors_carry_line_numbers() {
        let text = "{\"label\":\"a\",\"source_id\":\"x\",\"ast\":{\"kind\":\"Root\",\"children\":[]}}\nnot json\n";
        match Corpus::read_jsonl(text.as_bytes()) {
            Err(AstError::Corpus { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }
}
