//! Line-oriented relation format.
//!
//! ```text
//! <rows> <cols>
//! <row labels…>
//! <col labels…>
//! <ascending column indices of row 0>
//! …
//! ```
//!
//! Lines starting with `#` are comments. Rows must be non-empty.

use std::fmt::Write;

use super::Relation;
use crate::error::{Error, Result};

pub(super) fn write(r: &Relation) -> Result<String> {
    for l in r.row_labels().iter().chain(r.col_labels()) {
        if l.is_empty() || l.starts_with('#') || l.chars().any(char::is_whitespace) {
            return Err(Error::Malformed(format!(
                "label `{l}` cannot be written in the text format"
            )));
        }
    }
    let mut out = String::new();
    writeln!(out, "{} {}", r.n_rows(), r.n_cols()).unwrap();
    writeln!(out, "{}", r.row_labels().join(" ")).unwrap();
    writeln!(out, "{}", r.col_labels().join(" ")).unwrap();
    for row in r.rows() {
        let line: Vec<String> = row.iter().map(usize::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    Ok(out)
}

pub(super) fn parse(input: &str) -> Result<Relation> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.starts_with('#'));

    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `<rows> <cols>` header"))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    if dims.len() != 2 {
        return Err(Error::parse(ln, "header must be `<rows> <cols>`"));
    }
    let n_rows = parse_count(ln, dims[0])?;
    let n_cols = parse_count(ln, dims[1])?;

    let mut labels = |what: &str, n: usize| -> Result<Vec<String>> {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::parse(ln, format!("missing {what} label line")))?;
        let found: Vec<String> = line.split_whitespace().map(str::to_string).collect();
        if found.len() != n {
            return Err(Error::parse(
                ln,
                format!("expected {n} {what} labels, found {}", found.len()),
            ));
        }
        Ok(found)
    };
    let row_labels = labels("row", n_rows)?;
    let col_labels = labels("column", n_cols)?;

    let mut rows = Vec::with_capacity(n_rows);
    let mut last_line = ln;
    for label in &row_labels {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::parse(last_line, format!("missing line for row `{label}`")))?;
        last_line = ln;
        if line.is_empty() {
            return Err(Error::parse(ln, format!("row `{label}` is empty")));
        }
        let mut row = Vec::new();
        for tok in line.split_whitespace() {
            let c = parse_count(ln, tok)?;
            if c >= n_cols {
                return Err(Error::parse(ln, format!("column index {c} out of range")));
            }
            if row.last().is_some_and(|&p| p >= c) {
                return Err(Error::parse(
                    ln,
                    "column indices must be strictly ascending",
                ));
            }
            row.push(c);
        }
        rows.push(row);
    }
    if let Some((ln, _)) = lines.find(|(_, l)| !l.is_empty()) {
        return Err(Error::parse(ln, "trailing content after last row"));
    }
    Relation::new(row_labels, col_labels, rows).map_err(|e| match e {
        Error::Parse { .. } => e,
        other => Error::parse(last_line, other.to_string()),
    })
}

fn parse_count(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| {
        Error::parse(
            line,
            format!("expected a non-negative integer, got `{tok}`"),
        )
    })
}
