//! The plain-text system format.
//!
//! ```text
//! group: B4
//! sp: 3               # comma-separated 1-based indices, or "-" for empty
//! sigma:
//!   1 0 0 0           # one weight per line
//!   0 0 2 2
//! A:
//!   D1: 1 0           # name, then one integer per spherical root
//!   D2: 1 -1
//! ```
//!
//! `#` starts a comment and blank lines are ignored. Indices and weight
//! coordinates refer to the group as written; `D2` and `D3` are read into
//! their normalized forms and written back as `A1xA1` and `A3`.
//!
//! ```
//! use wonder_systems::format::{emit_system, parse_system};
//!
//! let text = "group: A1\nsp: -\nsigma:\n  1\nA:\n  D+: 1\n  D-: 1\n";
//! let sys = parse_system(text).unwrap();
//! assert_eq!(emit_system(&sys), text);
//! ```

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::rootsystem::{RootSystem, Weight};
use crate::system::{ARow, SphericalSystem};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Start,
    Group,
    Sp,
    Sigma,
    A,
}

/// Parses one system document.
pub fn parse_system(text: &str) -> Result<SphericalSystem> {
    let mut rs: Option<RootSystem> = None;
    let mut sp_line: Option<(usize, String)> = None;
    let mut sigma_lines: Vec<(usize, String)> = Vec::new();
    let mut row_lines: Vec<(usize, String)> = Vec::new();
    let mut section = Section::Start;

    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let header = |key: &str| line.strip_prefix(key).map(str::trim);
        match section {
            Section::Start => {
                let value = header("group:").ok_or_else(|| parse_error(line_no, "expected `group:`"))?;
                rs = Some(RootSystem::parse(value).map_err(|e| parse_error(line_no, e.to_string()))?);
                section = Section::Group;
            }
            Section::Group => {
                let value = header("sp:").ok_or_else(|| parse_error(line_no, "expected `sp:`"))?;
                sp_line = Some((line_no, value.to_string()));
                section = Section::Sp;
            }
            Section::Sp => {
                if header("sigma:") != Some("") {
                    return Err(parse_error(line_no, "expected `sigma:` on a line of its own"));
                }
                section = Section::Sigma;
            }
            Section::Sigma => {
                if let Some(rest) = header("A:") {
                    if !rest.is_empty() {
                        return Err(parse_error(line_no, "expected `A:` on a line of its own"));
                    }
                    section = Section::A;
                } else {
                    sigma_lines.push((line_no, line.to_string()));
                }
            }
            Section::A => row_lines.push((line_no, line.to_string())),
        }
    }
    if section == Section::Start {
        return Err(parse_error(1, "empty document"));
    }
    if matches!(section, Section::Group | Section::Sp) {
        let missing = if section == Section::Group { "sp:" } else { "sigma:" };
        return Err(parse_error(text.lines().count().max(1), format!("missing `{missing}`")));
    }
    let rs = rs.expect("group line parsed");
    let n = rs.rank();

    let (sp_no, sp_text) = sp_line.expect("sp line parsed");
    let mut sp = BTreeSet::new();
    if sp_text != "-" {
        for part in sp_text.split(',') {
            let part = part.trim();
            let i: usize = part
                .parse()
                .map_err(|_| parse_error(sp_no, format!("bad simple root index {part:?}")))?;
            if i == 0 || i > n {
                return Err(parse_error(sp_no, format!("simple root index {i} out of range 1..={n}")));
            }
            if !sp.insert(rs.input_label(i - 1)) {
                return Err(parse_error(sp_no, format!("simple root {i} listed twice")));
            }
        }
    }

    let mut sigma = Vec::with_capacity(sigma_lines.len());
    for (line_no, line) in &sigma_lines {
        let values = parse_ints(*line_no, line)?;
        if values.len() != n {
            return Err(parse_error(
                *line_no,
                format!("weight has {} coefficients, expected {n}", values.len()),
            ));
        }
        let mut w = vec![0; n];
        for (k, c) in values.into_iter().enumerate() {
            w[rs.input_label(k)] = c;
        }
        sigma.push(Weight::new(w));
    }

    let mut rows = Vec::with_capacity(row_lines.len());
    for (line_no, line) in &row_lines {
        let (name, rest) = line
            .split_once(':')
            .ok_or_else(|| parse_error(*line_no, "expected `name: values`"))?;
        let name = name.trim();
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(parse_error(*line_no, format!("bad color name {name:?}")));
        }
        let values = parse_ints(*line_no, rest)?;
        if values.len() != sigma.len() {
            return Err(parse_error(
                *line_no,
                format!("row {name} has {} entries, expected {}", values.len(), sigma.len()),
            ));
        }
        if rows.iter().any(|r: &ARow| r.name == name) {
            return Err(parse_error(*line_no, format!("duplicate color name {name}")));
        }
        rows.push(ARow::new(name, values));
    }

    SphericalSystem::new(rs, sp, sigma, rows).map_err(|e| parse_error(1, e.to_string()))
}

fn parse_ints(line_no: usize, text: &str) -> Result<Vec<i64>> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| parse_error(line_no, format!("bad integer {t:?}")))
        })
        .collect()
}

/// Splits a stream of documents at each `group:` line and parses them.
pub fn parse_systems(text: &str) -> Result<Vec<SphericalSystem>> {
    let lines: Vec<&str> = text.lines().collect();
    let starts: Vec<usize> = lines
        .iter()
        .enumerate()
        .filter(|(_, l)| l.split('#').next().unwrap_or("").trim().starts_with("group:"))
        .map(|(k, _)| k)
        .collect();
    let mut out = Vec::with_capacity(starts.len());
    for (idx, &start) in starts.iter().enumerate() {
        let end = starts.get(idx + 1).copied().unwrap_or(lines.len());
        let doc = lines[start..end].join("\n");
        let sys = parse_system(&doc).map_err(|e| match e {
            Error::Parse { line, message } => parse_error(line + start, message),
            other => other,
        })?;
        out.push(sys);
    }
    Ok(out)
}

/// Writes a system in the text format.
pub fn emit_system(sys: &SphericalSystem) -> String {
    let mut out = String::new();
    out.push_str(&format!("group: {}\n", sys.root_system().spec()));
    let sp: Vec<String> = sys.sp().iter().map(|i| (i + 1).to_string()).collect();
    out.push_str(&format!("sp: {}\n", if sp.is_empty() { "-".to_string() } else { sp.join(",") }));
    out.push_str("sigma:\n");
    for w in sys.sigma() {
        let cs: Vec<String> = w.iter().map(i64::to_string).collect();
        out.push_str(&format!("  {}\n", cs.join(" ")));
    }
    out.push_str("A:\n");
    for row in sys.a_rows() {
        let vs: Vec<String> = row.values.iter().map(i64::to_string).collect();
        if vs.is_empty() {
            out.push_str(&format!("  {}:\n", row.name));
        } else {
            out.push_str(&format!("  {}: {}\n", row.name, vs.join(" ")));
        }
    }
    out
}
