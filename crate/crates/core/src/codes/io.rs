//! Code files: a text format with a `n q [d] [r]` header followed by one
//! space-separated word per line, and an equivalent JSON document.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Code;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CodeFormat {
    Text,
    Json,
}

/// Serialised code with optional claimed parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub schema: u32,
    pub n: usize,
    pub q: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    pub words: Vec<Vec<u32>>,
}

impl CodeFile {
    pub fn from_code(code: &Code, d: Option<u32>, r: Option<u32>) -> Self {
        CodeFile {
            schema: 1,
            n: code.n(),
            q: code.q(),
            d,
            r,
            words: code.words().iter().map(|w| w.symbols().to_vec()).collect(),
        }
    }

    /// Validates the words into a [`Code`].
    pub fn to_code(&self) -> Result<Code> {
        Code::new(self.n, self.q, self.words.clone())
    }

    pub fn render(&self, format: CodeFormat) -> String {
        match format {
            CodeFormat::Json => serde_json::to_string_pretty(self).expect("plain data serialises") + "\n",
            CodeFormat::Text => {
                let mut out = format!("{} {}", self.n, self.q);
                match (self.d, self.r) {
                    (Some(d), Some(r)) => write!(out, " {d} {r}").unwrap(),
                    (Some(d), None) => write!(out, " {d}").unwrap(),
                    (None, Some(r)) => write!(out, " - {r}").unwrap(),
                    (None, None) => {}
                }
                out.push('\n');
                for w in &self.words {
                    let line: Vec<String> = w.iter().map(u32::to_string).collect();
                    out.push_str(&line.join(" "));
                    out.push('\n');
                }
                out
            }
        }
    }
}

/// Parses either format; JSON is recognised by a leading `{`.
///
/// Blank lines and lines starting with `#` are ignored in the text format;
/// `-` in the header marks an absent optional field.
pub fn parse_code(input: &str) -> Result<CodeFile> {
    let trimmed = input.trim_start();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty code file".into()));
    }
    if trimmed.starts_with('{') {
        let file: CodeFile = serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
        if file.schema != 1 {
            return Err(Error::Parse(format!("unsupported schema {}", file.schema)));
        }
        return Ok(file);
    }
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| Error::Parse("missing header".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if !(2..=4).contains(&fields.len()) {
        return Err(Error::Parse(format!("line {hline}: header must be `n q [d] [r]`")));
    }
    let num = |s: &str, line: usize| -> Result<u32> {
        s.parse()
            .map_err(|_| Error::Parse(format!("line {line}: `{s}` is not a non-negative integer")))
    };
    let opt = |i: usize| -> Result<Option<u32>> {
        match fields.get(i) {
            None | Some(&"-") => Ok(None),
            Some(s) => num(s, hline).map(Some),
        }
    };
    let n = num(fields[0], hline)? as usize;
    let q = num(fields[1], hline)?;
    let (d, r) = (opt(2)?, opt(3)?);
    let words = lines
        .map(|(i, l)| {
            let w = l.split_whitespace().map(|s| num(s, i)).collect::<Result<Vec<u32>>>()?;
            if w.len() != n {
                return Err(Error::Parse(format!(
                    "line {i}: expected {n} symbols, found {}",
                    w.len()
                )));
            }
            Ok(w)
        })
        .collect::<Result<Vec<_>>>()?;
    if words.is_empty() {
        return Err(Error::Parse("code file has no words".into()));
    }
    Ok(CodeFile {
        schema: 1,
        n,
        q,
        d,
        r,
        words,
    })
}
