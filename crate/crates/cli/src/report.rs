use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde_json::{json, Value};

use crate::args::Format;
use crate::commands::Outcome;

/// `{version, config, result, notes, elapsed_ms}` with sorted keys.
pub fn envelope(out: &Outcome, elapsed_ms: u128) -> Value {
    json!({
        "version": env!("CARGO_PKG_VERSION"),
        "config": out.config,
        "result": out.result,
        "notes": out.notes,
        "elapsed_ms": elapsed_ms as u64,
    })
}

pub fn render(out: &Outcome, format: Format, elapsed_ms: u128) -> String {
    match format {
        Format::Table => {
            let mut s = out.text.clone();
            for n in &out.notes {
                s.push('\n');
                s.push_str(n);
            }
            s
        }
        Format::Auto if out.scalar => out.text.clone(),
        _ => serde_json::to_string_pretty(&envelope(out, elapsed_ms)).expect("JSON values serialize"),
    }
}

pub fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "{text}")?;
            Ok(())
        }
    }
}
