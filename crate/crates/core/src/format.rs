//! Plain-text poset format and Graphviz export.
//!
//! ```text
//! poset v1
//! points 3
//! label 0 bottom
//! cover 0 1
//! cover 0 2
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. `cover i j` states
//! `i < j`; the order is the transitive closure of the listed covers.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::pointset::MAX_POINTS;
use crate::poset::Poset;

const HEADER: &str = "poset v1";

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn index(line: usize, tok: Option<&str>, n: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, "missing point index"))?;
    let i: usize = tok
        .parse()
        .map_err(|_| parse_err(line, format!("bad point index `{tok}`")))?;
    if i >= n {
        return Err(parse_err(
            line,
            format!("point {i} out of range (points {n})"),
        ));
    }
    Ok(i)
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut seen_header = false;
    let mut n: Option<usize> = None;
    let mut labels: Vec<(usize, String)> = Vec::new();
    let mut covers = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if !seen_header {
            if trimmed != HEADER {
                return Err(parse_err(line, format!("expected `{HEADER}`")));
            }
            seen_header = true;
            continue;
        }
        let (keyword, rest) = trimmed
            .split_once(char::is_whitespace)
            .unwrap_or((trimmed, ""));
        match keyword {
            "points" => {
                if n.is_some() {
                    return Err(parse_err(line, "duplicate `points` line"));
                }
                let count: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(line, "bad point count"))?;
                if count > MAX_POINTS {
                    return Err(Error::Capacity(format!(
                        "{count} points exceeds the limit of {MAX_POINTS}"
                    )));
                }
                n = Some(count);
            }
            "label" => {
                let n = n.ok_or_else(|| parse_err(line, "`label` before `points`"))?;
                let rest = rest.trim_start();
                let (idx, text) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                let i = index(line, Some(idx), n)?;
                let text = text.trim();
                if text.is_empty() {
                    return Err(parse_err(line, "empty label"));
                }
                labels.push((i, text.to_string()));
            }
            "cover" => {
                let n = n.ok_or_else(|| parse_err(line, "`cover` before `points`"))?;
                let mut toks = rest.split_whitespace();
                let i = index(line, toks.next(), n)?;
                let j = index(line, toks.next(), n)?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens after cover"));
                }
                covers.push((i, j));
            }
            other => return Err(parse_err(line, format!("unknown keyword `{other}`"))),
        }
    }
    if !seen_header {
        return Err(parse_err(0, "empty input"));
    }
    let n = n.ok_or_else(|| parse_err(0, "missing `points` line"))?;
    let mut p = Poset::from_covers(n, &covers)?;
    for (i, text) in labels {
        p.set_label(i, text);
    }
    Ok(p)
}

/// Canonical text: labels, then the covers of the transitive reduction, both
/// in ascending order.
pub fn write_poset(p: &Poset) -> String {
    let mut out = format!("{HEADER}\npoints {}\n", p.len());
    for i in 0..p.len() {
        if let Some(label) = p.label(i) {
            writeln!(out, "label {i} {label}").unwrap();
        }
    }
    for (i, j) in p.covers() {
        writeln!(out, "cover {i} {j}").unwrap();
    }
    out
}

/// Hasse diagram in DOT, edges pointing upwards.
pub fn to_dot(p: &Poset) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
    for i in 0..p.len() {
        let name = p
            .label(i)
            .map(str::to_string)
            .unwrap_or_else(|| i.to_string());
        writeln!(
            out,
            "  {i} [label=\"{}\"];",
            name.replace('\\', "\\\\").replace('"', "\\\"")
        )
        .unwrap();
    }
    for (i, j) in p.covers() {
        writeln!(out, "  {i} -> {j};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_labels() {
        let text = "# diamond\n\nposet v1\npoints 4\nlabel 0 bottom point\ncover 0 1\ncover 0 2\n  cover 1 3\ncover 2 3\n";
        let p = parse_poset(text).unwrap();
        assert_eq!(p.len(), 4);
        assert!(p.leq(0, 3));
        assert!(!p.leq(1, 2));
        assert_eq!(p.label(0), Some("bottom point"));
    }

    #[test]
    fn round_trip_is_exact() {
        let text = "poset v1\npoints 4\nlabel 3 top\ncover 0 1\ncover 0 2\ncover 1 3\ncover 2 3\n";
        let p = parse_poset(text).unwrap();
        assert_eq!(write_poset(&p), text);
    }

    #[test]
    fn redundant_covers_are_reduced() {
        let p = parse_poset("poset v1\npoints 3\ncover 0 1\ncover 1 2\ncover 0 2\n").unwrap();
        assert_eq!(
            write_poset(&p),
            "poset v1\npoints 3\ncover 0 1\ncover 1 2\n"
        );
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_poset("poset v1\npoints 2\ncover 0 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        assert!(matches!(
            parse_poset("poset v2\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_poset("poset v1\ncover 0 1\n").unwrap_err(),
            Error::Parse { line: 2, .. }
        ));
        assert!(matches!(
            parse_poset("poset v1\npoints 2\nedge 0 1\n").unwrap_err(),
            Error::Parse { line: 3, .. }
        ));
        assert!(matches!(
            parse_poset("poset v1\npoints 200\n").unwrap_err(),
            Error::Capacity(_)
        ));
    }

    #[test]
    fn cycles_are_rejected() {
        let err = parse_poset("poset v1\npoints 2\ncover 0 1\ncover 1 0\n").unwrap_err();
        assert!(matches!(err, Error::Cycle(_)));
    }

    #[test]
    fn dot_lists_covers() {
        let p = Poset::chain(3).unwrap();
        let dot = to_dot(&p);
        assert!(dot.contains("0 -> 1;"));
        assert!(dot.contains("1 -> 2;"));
        assert!(!dot.contains("0 -> 2;"));
    }
}
