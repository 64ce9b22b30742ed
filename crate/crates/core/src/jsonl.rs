//! Line-delimited JSON helpers shared by the record formats.

use std::io::{BufRead, Write};

use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonlError {
    #[error("line {line}: {message}")]
    Schema { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Lazily decodes one record per non-blank line.
pub fn records<T: DeserializeOwned, R: BufRead>(input: R) -> impl Iterator<Item = Result<T, JsonlError>> {
    input
        .lines()
        .enumerate()
        .filter(|(_, l)| !matches!(l, Ok(s) if s.trim().is_empty()))
        .map(|(i, line)| {
            let line = line?;
            serde_json::from_str(&line).map_err(|e| JsonlError::Schema {
                line: i + 1,
                message: e.to_string(),
            })
        })
}

pub fn write_record<T: Serialize, W: Write>(out: &mut W, record: &T) -> std::io::Result<()> {
    serde_json::to_writer(&mut *out, record)?;
    out.write_all(b"\n")
}
