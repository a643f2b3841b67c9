//! Text output helpers shared by the CSV/JSON emitters.
//!
//! All numeric file output goes through [`fmt_f64`]: 17 significant digits,
//! which round-trips every finite f64 exactly and keeps emitted files
//! byte-identical across runs and platforms.

/// Formats with 17 significant digits (scientific notation).
pub fn fmt_f64(x: f64) -> String {
    format!("{:.16e}", x)
}

/// One CSV line: fields joined by commas, LF terminated.
pub fn csv_line<I, S>(fields: I) -> String
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut line = String::new();
    for (i, f) in fields.into_iter().enumerate() {
        if i > 0 {
            line.push(',');
        }
        line.push_str(f.as_ref());
    }
    line.push('\n');
    line
}
