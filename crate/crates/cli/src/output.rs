//! Output plumbing: significant-digit formatting, format selection, and the
//! stdout-or-file sink. All renderers emit LF line endings and are
//! deterministic for identical inputs.

use std::fs::File;
use std::io::{self, IsTerminal, Write};
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutFormat {
    Table,
    Csv,
    Json,
}

/// Table on an interactive terminal, csv when redirected or written to a file.
pub fn resolve_format(requested: Option<OutFormat>, out: Option<&Path>) -> OutFormat {
    if let Some(f) = requested {
        return f;
    }
    if out.is_some() || !io::stdout().is_terminal() {
        OutFormat::Csv
    } else {
        OutFormat::Table
    }
}

/// Render with `digits` significant digits, in the style of printf's %g:
/// fixed notation for moderate exponents, scientific otherwise, trailing
/// zeros trimmed.
pub fn fmt_sig(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let digits = digits.clamp(1, 17);
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exponent) = sci.split_once('e').expect("exponential format");
    let exponent: i32 = exponent.parse().expect("exponent digits");
    if exponent >= -4 && exponent < digits as i32 {
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        format!("{}e{exponent}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Write `content` to the chosen sink, creating the file when `--out` is set.
pub fn emit(out: Option<&PathBuf>, content: &str) -> io::Result<()> {
    match out {
        Some(path) => {
            let mut file = File::create(path)?;
            file.write_all(content.as_bytes())
        }
        None => io::stdout().write_all(content.as_bytes()),
    }
}

/// Two-column key/value table block.
pub fn kv_table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut s = String::new();
    for (k, v) in rows {
        s.push_str(&format!("{k:<width$}  {v}\n"));
    }
    s
}
