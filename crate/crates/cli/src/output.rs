//! Output formats and the atomic sink.

use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// JSON document carrying a `schema` version field.
pub fn json<T: Serialize>(body: &T) -> String {
    let mut value = serde_json::to_value(body).expect("plain data serialises");
    if let serde_json::Value::Object(map) = &mut value {
        map.insert("schema".into(), 1.into());
    }
    serde_json::to_string_pretty(&value).expect("plain data serialises") + "\n"
}

/// CSV with a header row taken from the first record's field names.
pub fn csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("flat rows serialise");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 input")
}

/// Writes `content` to `path` through a temporary file in the same
/// directory and a rename, so readers never see a partial file.
pub fn write_atomic(path: &Path, content: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(content.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Sends `content` to `path`, or to stdout when absent.
pub fn emit(path: Option<&Path>, content: &str) -> std::io::Result<()> {
    match path {
        Some(p) => write_atomic(p, content),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(content.as_bytes())?;
            out.flush()
        }
    }
}
