//! The text Cayley-table format:
//!
//! ```text
//! elements: x e f g h
//! 5
//! 1 1 1 3 4
//! ...
//! ```
//!
//! The `elements:` line is optional (names default to `0..n`). Blank lines
//! and lines starting with `#` are ignored. A census file holds several
//! tables separated by blank lines.

use super::CayleyTable;
use crate::error::{Error, Result};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses exactly one table.
pub fn parse_table(text: &str) -> Result<CayleyTable> {
    let mut tables = parse_tables(text)?;
    match tables.len() {
        1 => Ok(tables.remove(0)),
        0 => Err(parse_error(1, "no table found")),
        k => Err(parse_error(1, format!("expected one table, found {k}"))),
    }
}

/// Parses every table in a (possibly multi-table) file.
pub fn parse_tables(text: &str) -> Result<Vec<CayleyTable>> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let mut tables = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let (mut lineno, mut line) = lines[i];
        let mut names: Option<Vec<String>> = None;
        if let Some(rest) = line.strip_prefix("elements:") {
            names = Some(rest.split_whitespace().map(String::from).collect());
            i += 1;
            (lineno, line) = *lines
                .get(i)
                .ok_or_else(|| parse_error(lineno, "missing order line after elements"))?;
        }
        let n: usize = line
            .parse()
            .map_err(|_| parse_error(lineno, format!("expected the order, found {line:?}")))?;
        if n == 0 {
            return Err(parse_error(lineno, "order must be positive"));
        }
        if let Some(names) = &names {
            if names.len() != n {
                return Err(parse_error(
                    lineno,
                    format!("{} element names for order {n}", names.len()),
                ));
            }
        }
        let mut cells = Vec::with_capacity(n * n);
        for r in 0..n {
            i += 1;
            let (row_line, row) = *lines
                .get(i)
                .ok_or_else(|| parse_error(lineno + r + 1, format!("missing row {}", r + 1)))?;
            let entries = row
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| parse_error(row_line, format!("bad entry {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if entries.len() != n {
                return Err(parse_error(
                    row_line,
                    format!("expected {n} entries, found {}", entries.len()),
                ));
            }
            if let Some(bad) = entries.iter().find(|&&e| e >= n) {
                return Err(parse_error(row_line, format!("entry {bad} out of range")));
            }
            cells.extend(entries);
        }
        i += 1;
        let names = names.unwrap_or_else(|| super::default_names(n));
        tables
            .push(CayleyTable::new(names, cells).map_err(|e| parse_error(lineno, e.to_string()))?);
    }
    Ok(tables)
}

/// `# count: K` followed by the tables separated by blank lines.
pub fn format_census<'a>(tables: impl ExactSizeIterator<Item = &'a CayleyTable>) -> String {
    let mut out = format!("# count: {}\n", tables.len());
    for t in tables {
        out.push('\n');
        out.push_str(&t.to_string());
    }
    out
}
