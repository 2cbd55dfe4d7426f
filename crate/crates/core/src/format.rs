//! Text and JSON formats for semigroups.
//!
//! Cayley-table text: the order on the first line, then one row per element
//! with the space-separated ids of the products, then optional `zero <id>` and
//! `label <id> <string>` lines. Writing is canonical, so parsing a written
//! table and writing it again reproduces the same bytes.

use std::fmt::Write as _;

use crate::constructions::ReesMatrixSpec;
use crate::error::{Error, Result};
use crate::semigroup::{Associativity, Semigroup};

/// Writes the Cayley table; label lines are emitted for labels that differ from the id.
pub fn write_cayley(s: &Semigroup) -> String {
    let n = s.order();
    let mut out = String::with_capacity(n * n * 3);
    writeln!(out, "{n}").unwrap();
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| s.mul(a, b).to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    if let Some(z) = s.zero() {
        writeln!(out, "zero {z}").unwrap();
    }
    for a in 0..n {
        let label = s.label(a);
        if label != a.to_string() {
            writeln!(out, "label {a} {label}").unwrap();
        }
    }
    out
}

/// Parses the Cayley text format and rejects tables that are not associative.
pub fn parse_cayley(text: &str) -> Result<Semigroup> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end())).filter(|(_, l)| !l.trim().is_empty());
    let (line, first) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
    let n: usize = first.trim().parse().map_err(|_| Error::Parse { line, msg: format!("bad order {first:?}") })?;
    if n == 0 {
        return Err(Error::Parse { line, msg: "order must be positive".into() });
    }
    let mut table = Vec::with_capacity(n * n);
    for _ in 0..n {
        let (line, row) = lines.next().ok_or(Error::Parse { line: line + 1, msg: "missing table row".into() })?;
        let entries: Vec<usize> = row
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse { line, msg: format!("bad id {t:?}") }))
            .collect::<Result<_>>()?;
        if entries.len() != n {
            return Err(Error::Parse { line, msg: format!("expected {n} entries, found {}", entries.len()) });
        }
        if let Some(&bad) = entries.iter().find(|&&x| x >= n) {
            return Err(Error::Parse { line, msg: format!("id {bad} out of range") });
        }
        table.extend(entries);
    }
    let mut s = Semigroup::from_table(n, table)?;
    if let Associativity::Fails { a, b, c } = s.verify_associativity() {
        return Err(Error::InvalidStructure(format!("not associative at ({a}, {b}, {c})")));
    }
    let mut zero = None;
    let mut labels: Option<Vec<String>> = None;
    for (line, l) in lines {
        let mut parts = l.splitn(3, ' ');
        let parse_id = |t: Option<&str>| -> Result<usize> {
            t.and_then(|t| t.parse().ok())
                .filter(|&id| id < n)
                .ok_or_else(|| Error::Parse { line, msg: format!("bad element id in {l:?}") })
        };
        match parts.next() {
            Some("zero") => zero = Some(parse_id(parts.next())?),
            Some("label") => {
                let id = parse_id(parts.next())?;
                let text = parts.next().ok_or_else(|| Error::Parse { line, msg: "missing label".into() })?;
                labels.get_or_insert_with(|| (0..n).map(|a| a.to_string()).collect())[id] = text.to_string();
            }
            _ => return Err(Error::Parse { line, msg: format!("unexpected line {l:?}") }),
        }
    }
    if let Some(z) = zero {
        s = s.with_zero(z)?;
    }
    if let Some(labels) = labels {
        s = s.with_labels(labels)?;
    }
    Ok(s)
}

/// `{rows, cols, structure, with_zero}` with `structure[j][i] = p_ji ∈ {0, 1}`.
pub fn parse_rees_json(text: &str) -> Result<ReesMatrixSpec> {
    let spec: ReesMatrixSpec = serde_json::from_str(text)?;
    spec.validate()?;
    Ok(spec)
}

pub fn write_rees_json(spec: &ReesMatrixSpec) -> String {
    serde_json::to_string_pretty(spec).expect("plain data serializes")
}
