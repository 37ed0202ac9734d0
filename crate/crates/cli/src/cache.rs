//! On-disk persistence of memoized LR coefficients.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use quotbwb_core::schur::{lr_cache_seed, lr_cache_snapshot};
use quotbwb_core::Partition;

pub const HEADER: &str = "quotbwb-lrcache v1";

/// One cached coefficient `c^γ_{α,β}`.
pub type Entry = (Partition, Partition, Partition, u64);

pub fn parse(text: &str) -> Result<Vec<Entry>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h.trim() == HEADER => {}
        Some(h) if h.starts_with("quotbwb-lrcache") => bail!("unsupported cache version `{}`", h.trim()),
        _ => bail!("missing cache header `{HEADER}`"),
    }
    let mut out = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let n = i + 2;
        let fields: Vec<&str> = line.split('|').collect();
        if fields.len() != 4 {
            bail!("cache line {n}: expected alpha|beta|gamma|coeff");
        }
        let part = |s: &str| s.parse::<Partition>().with_context(|| format!("cache line {n}"));
        let coeff = fields[3].trim().parse::<u64>().with_context(|| format!("cache line {n}: bad coefficient"))?;
        out.push((part(fields[0])?, part(fields[1])?, part(fields[2])?, coeff));
    }
    Ok(out)
}

pub fn render(entries: &[Entry]) -> String {
    let mut sorted = entries.to_vec();
    sorted.sort();
    let mut s = format!("{HEADER}\n");
    for (a, b, c, v) in sorted {
        writeln!(s, "{a}|{b}|{c}|{v}").unwrap();
    }
    s
}

/// Merges a cache file into the in-process memo; a missing file is an empty cache.
pub fn load(path: &Path) -> Result<usize> {
    if !path.exists() {
        return Ok(0);
    }
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let entries = parse(&text)?;
    for (a, b, c, v) in &entries {
        lr_cache_seed(a, b, c, *v);
    }
    Ok(entries.len())
}

/// Writes the current memo, sorted.
pub fn store(path: &Path) -> Result<usize> {
    let entries = lr_cache_snapshot();
    fs::write(path, render(&entries)).with_context(|| format!("writing {}", path.display()))?;
    Ok(entries.len())
}
