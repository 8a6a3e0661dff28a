//! Canonical corpus files: one byte per symbol using the decoded character,
//! EOS written as a line break. Sidecar metadata uses `key=value` lines.

use super::SymbolSeq;
use crate::error::{GktError, Result};
use std::fs;
use std::path::Path;

pub fn write_corpus(path: &Path, s: &SymbolSeq) -> Result<()> {
    fs::write(path, s.to_text())?;
    Ok(())
}

pub fn read_corpus(path: &Path) -> Result<SymbolSeq> {
    let text = fs::read_to_string(path)
        .map_err(|e| GktError::Data(format!("{}: {e}", path.display())))?;
    SymbolSeq::from_text(&text)
        .map_err(|e| GktError::Data(format!("{}: not a canonical corpus file: {e}", path.display())))
}

pub fn write_metadata(path: &Path, entries: &[(String, String)]) -> Result<()> {
    let mut out = String::new();
    for (k, v) in entries {
        out.push_str(k);
        out.push('=');
        out.push_str(v);
        out.push('\n');
    }
    fs::write(path, out)?;
    Ok(())
}

pub fn read_metadata(path: &Path) -> Result<Vec<(String, String)>> {
    let text = fs::read_to_string(path)
        .map_err(|e| GktError::Data(format!("{}: {e}", path.display())))?;
    let mut entries = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            GktError::Data(format!(
                "{}:{}: metadata line without '='",
                path.display(),
                lineno + 1
            ))
        })?;
        entries.push((k.to_string(), v.to_string()));
    }
    Ok(entries)
}
