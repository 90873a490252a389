use std::fmt::Write as _;
use std::path::Path;

use interp_core::linalg::{Matrix, C64};

use crate::error::{CliError, CliResult};

/// Shortest round-trip decimal form; exponent notation for very small or
/// very large magnitudes.
pub fn fmt_f64(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || (1e-4..1e15).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn fmt_fixed(x: f64) -> String {
    // avoid printing `-0.000000`
    let x = if x.abs() < 5e-7 { 0.0 } else { x };
    format!("{x:.6}")
}

pub fn fmt_complex_pretty(z: C64) -> String {
    let im = fmt_fixed(z.im);
    let sign = if im.starts_with('-') { "" } else { "+" };
    format!("{}{sign}{im}i", fmt_fixed(z.re))
}

pub fn matrix_pretty(m: &Matrix) -> String {
    let cells: Vec<Vec<String>> = m
        .rows()
        .map(|r| r.iter().map(|&z| fmt_complex_pretty(z)).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
    let mut out = format!("{n}x{n}\n", n = m.n());
    for row in cells {
        out.push('[');
        for cell in row {
            let _ = write!(out, " {cell:>width$}");
        }
        out.push_str(" ]\n");
    }
    out
}

pub fn matrix_json(m: &Matrix) -> String {
    let mut s = serde_json::to_string(m).expect("matrix serialises");
    s.push('\n');
    s
}

pub fn matrix_csv(m: &Matrix) -> String {
    let mut out = String::from("row,col,re,im\n");
    for (i, row) in m.rows().enumerate() {
        for (j, z) in row.iter().enumerate() {
            let _ = writeln!(out, "{i},{j},{},{}", fmt_f64(z.re), fmt_f64(z.im));
        }
    }
    out
}

/// Writes to `out` when given, otherwise to stdout.
pub fn emit(text: &str, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display()))),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::io(format!("cannot write to stdout: {e}")))
        }
    }
}
