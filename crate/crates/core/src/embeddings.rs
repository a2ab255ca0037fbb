//! Plain-text embedding tables: a `V N_f` header, then one line per symbol
//! holding its name and `N_f` space-separated values.
//!
//! Values are written with Rust's shortest round-trip formatting, so reading
//! a file back yields the exact bits that were written.

use std::io::{self, BufRead, Write};

use ndarray::Array2;
use thiserror::Error;

use crate::ast::NodeKind;
use crate::coder::ModelParams;

#[derive(Debug, Error)]
pub enum EmbeddingFormatError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Symbol names with their vectors, one row per name.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingTable {
    pub names: Vec<String>,
    pub vectors: Array2<f64>,
}

impl EmbeddingTable {
    pub fn from_params(params: &ModelParams) -> Self {
        EmbeddingTable {
            names: NodeKind::ALL.iter().map(|k| k.name().to_owned()).collect(),
            vectors: params.embeddings.clone(),
        }
    }

    pub fn get(&self, name: &str) -> Option<ndarray::ArrayView1<'_, f64>> {
        self.names.iter().position(|n| n == name).map(|i| self.vectors.row(i))
    }
}

pub fn write_embeddings<W: Write>(table: &EmbeddingTable, mut writer: W) -> io::Result<()> {
    writeln!(writer, "{} {}", table.vectors.nrows(), table.vectors.ncols())?;
    for (name, row) in table.names.iter().zip(table.vectors.outer_iter()) {
        write!(writer, "{name}")?;
        for v in row {
            write!(writer, " {v}")?;
        }
        writeln!(writer)?;
    }
    Ok(())
}

pub fn read_embeddings<R: BufRead>(reader: R) -> Result<EmbeddingTable, EmbeddingFormatError> {
    let malformed = |line: usize, message: String| EmbeddingFormatError::Malformed { line, message };
    let mut lines = reader.lines();
    let header = lines.next().ok_or_else(|| malformed(1, "empty file".into()))??;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|e| malformed(1, format!("bad header: {e}")))?;
    let [rows, cols] = dims[..] else {
        return Err(malformed(1, format!("header must be `V N_f`, found `{header}`")));
    };

    let mut names = Vec::with_capacity(rows);
    let mut data = Vec::with_capacity(rows * cols);
    for (i, line) in lines.enumerate() {
        let line = line?;
        let number = i + 2;
        if line.trim().is_empty() {
            continue;
        }
        if names.len() == rows {
            return Err(malformed(number, format!("more than {rows} rows")));
        }
        let mut fields = line.split_whitespace();
        let name = fields.next().expect("line is not blank");
        let before = data.len();
        for field in fields {
            let value: f64 = field
                .parse()
                .map_err(|e| malformed(number, format!("bad value `{field}`: {e}")))?;
            data.push(value);
        }
        if data.len() - before != cols {
            return Err(malformed(number, format!("expected {cols} values, found {}", data.len() - before)));
        }
        names.push(name.to_owned());
    }
    if names.len() != rows {
        return Err(malformed(rows + 1, format!("expected {rows} rows, found {}", names.len())));
    }
    let vectors = Array2::from_shape_vec((rows, cols), data).expect("shape checked per row");
    Ok(EmbeddingTable { names, vectors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coder::{init_params, Hyperparams};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn round_trip_is_exact() {
        let params = init_params(
            &Hyperparams {
                dim: 7,
                ..Default::default()
            },
            &mut ChaCha8Rng::seed_from_u64(5),
        );
        let table = EmbeddingTable::from_params(&params);
        let mut buf = Vec::new();
        write_embeddings(&table, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("44 7\nID "));
        let back = read_embeddings(&buf[..]).unwrap();
        assert_eq!(back, table);
        assert_eq!(back.get("ID").unwrap(), params.vector(NodeKind::Id));
    }

    #[test]
    fn bad_files_are_rejected() {
        for (text, line) in [
            ("", 1),
            ("2\n", 1),
            ("1 2\nA 1.0\n", 2),
            ("1 1\nA x\n", 2),
            ("2 1\nA 1\n", 3),
            ("1 1\nA 1\nB 2\n", 3),
        ] {
            match read_embeddings(text.as_bytes()) {
                Err(EmbeddingFormatError::Malformed { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }
}
