//! Shared helpers for the line-oriented input formats.

use dashu_int::IBig;

use crate::error::{Error, Result};

/// Non-empty lines with `#` comments stripped, paired with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub(crate) fn parse_count(field: &str, line: usize) -> Result<usize> {
    field.parse().map_err(|_| Error::parse(line, format!("expected a count, found `{field}`")))
}

pub(crate) fn parse_u64(field: &str, line: usize) -> Result<u64> {
    field.parse().map_err(|_| Error::parse(line, format!("expected a nonnegative integer, found `{field}`")))
}

pub(crate) fn parse_int(field: &str, line: usize) -> Result<IBig> {
    field.parse().map_err(|_| Error::parse(line, format!("expected an integer, found `{field}`")))
}
