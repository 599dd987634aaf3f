//! Row-based output rendering.
//!
//! Every subcommand produces a list of [`Row`]s — ordered
//! `(column, value)` pairs whose values are already strings — and the
//! same rows are serialized as JSON lines, RFC-4180 CSV, or an aligned
//! text table. Integers are rendered as decimal strings before they reach
//! this module, so no format ever passes through floating point.

use std::io::Write;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Output serialization selected with `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// One JSON object per line; every value is a string.
    Json,
    /// RFC-4180 CSV with a header record.
    Csv,
    /// Whitespace-aligned columns for reading in a terminal.
    Table,
}

/// One output record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    cells: Vec<(&'static str, String)>,
}

impl Row {
    #[must_use]
    pub fn new() -> Self {
        Row { cells: Vec::new() }
    }

    /// Appends a column; order of calls is the column order.
    #[must_use]
    pub fn cell(mut self, key: &'static str, value: impl ToString) -> Self {
        self.cells.push((key, value.to_string()));
        self
    }
}

impl Default for Row {
    fn default() -> Self {
        Self::new()
    }
}

/// Serializes `rows` to `out`. No rows means no output in every format,
/// keeping the three formats row-equivalent.
pub fn render(rows: &[Row], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    if rows.is_empty() {
        return Ok(());
    }
    match format {
        Format::Json => render_json(rows, out),
        Format::Csv => render_csv(rows, out),
        Format::Table => render_table(rows, out),
    }
}

fn render_json(rows: &[Row], out: &mut dyn Write) -> std::io::Result<()> {
    for row in rows {
        let mut object = serde_json::Map::new();
        for (key, value) in &row.cells {
            object.insert((*key).to_string(), serde_json::Value::String(value.clone()));
        }
        serde_json::to_writer(&mut *out, &object)?;
        writeln!(out)?;
    }
    Ok(())
}

fn render_csv(rows: &[Row], out: &mut dyn Write) -> std::io::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(rows[0].cells.iter().map(|(key, _)| *key))?;
    for row in rows {
        debug_assert!(row
            .cells
            .iter()
            .map(|(key, _)| *key)
            .eq(rows[0].cells.iter().map(|(key, _)| *key)));
        writer.write_record(row.cells.iter().map(|(_, value)| value.as_str()))?;
    }
    writer.flush()
}

fn render_table(rows: &[Row], out: &mut dyn Write) -> std::io::Result<()> {
    let columns = rows[0].cells.len();
    let mut widths: Vec<usize> = rows[0]
        .cells
        .iter()
        .map(|(key, _)| key.chars().count())
        .collect();
    for row in rows {
        for (i, (_, value)) in row.cells.iter().enumerate() {
            widths[i] = widths[i].max(value.chars().count());
        }
    }
    let write_line = |out: &mut dyn Write, cells: Vec<&str>| -> std::io::Result<()> {
        for (i, text) in cells.iter().enumerate() {
            if i + 1 == columns {
                writeln!(out, "{text}")?;
            } else {
                write!(out, "{:<width$}  ", text, width = widths[i])?;
            }
        }
        Ok(())
    };
    write_line(out, rows[0].cells.iter().map(|(key, _)| *key).collect())?;
    for row in rows {
        write_line(out, row.cells.iter().map(|(_, v)| v.as_str()).collect())?;
    }
    Ok(())
}

/// Renders a recurrence as `s_n = 10 s_{n-1} - s_{n-2}`, where
/// `coefficients[i]` multiplies `s_{n-1-i}`.
#[must_use]
pub fn format_recurrence(coefficients: &[BigRational]) -> String {
    let mut text = String::from("s_n =");
    let mut any = false;
    for (i, c) in coefficients.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        text.push_str(if !any {
            if c.is_negative() {
                " -"
            } else {
                " "
            }
        } else if c.is_negative() {
            " - "
        } else {
            " + "
        });
        if !magnitude.is_one() {
            if magnitude.is_integer() {
                text.push_str(&magnitude.to_string());
            } else {
                text.push_str(&format!("({magnitude})"));
            }
            text.push(' ');
        }
        text.push_str(&format!("s_{{n-{}}}", i + 1));
        any = true;
    }
    if !any {
        text.push_str(" 0");
    }
    text
}
