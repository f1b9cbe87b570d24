//! Edge-list documents and report serialization.
//!
//! An edge list is a header `p <num_vertices>` followed by one `u v` pair per
//! line, 0-based. Lines starting with `#` and blank lines are ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verification::VerificationReport;

fn parse_count(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        reason: format!("{what} {tok:?} is not a non-negative integer"),
    })
}

/// Parses an edge-list document. Errors carry the 1-based line number.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut num_vertices = None;
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        match (num_vertices, toks.as_slice()) {
            (None, ["p", n]) => num_vertices = Some(parse_count(n, line, "vertex count")?),
            (None, _) => {
                return Err(Error::Parse {
                    line,
                    reason: "expected header \"p <num_vertices>\"".into(),
                })
            }
            (Some(_), ["p", ..]) => {
                return Err(Error::Parse {
                    line,
                    reason: "repeated header".into(),
                })
            }
            (Some(n), [a, b]) => {
                let u = parse_count(a, line, "vertex")?;
                let v = parse_count(b, line, "vertex")?;
                for w in [u, v] {
                    if w >= n {
                        let err = Error::VertexOutOfRange {
                            vertex: w,
                            num_vertices: n,
                        };
                        return Err(err.at_line(line));
                    }
                }
                if u == v {
                    return Err(Error::SelfLoop(u).at_line(line));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(Error::DuplicateEdge(u.min(v), u.max(v)).at_line(line));
                }
                edges.push((u, v));
            }
            (Some(_), _) => {
                return Err(Error::Parse {
                    line,
                    reason: format!("expected \"u v\", found {body:?}"),
                })
            }
        }
    }
    let n = num_vertices.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        reason: "missing header \"p <num_vertices>\"".into(),
    })?;
    Graph::new(n, edges)
}

/// Writes `g` as an edge-list document with edges in ascending order.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("p {}\n", g.num_vertices());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

/// Formats `x` with 12 significant digits.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-4..=15).contains(&magnitude) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn report_json(report: &VerificationReport) -> String {
    serde_json::to_string_pretty(report).expect("report is serializable")
}

/// CSV of the index entries, one row per grid point.
pub fn report_csv(report: &VerificationReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::InvalidParams(format!("csv: {e}"));
    w.write_record([
        "family",
        "params",
        "index",
        "branch",
        "closed_form",
        "direct",
        "abs_diff",
        "status",
        "reason",
    ])
    .map_err(csv_err)?;
    let opt = |x: Option<f64>| x.map(sig12).unwrap_or_default();
    for e in &report.entries {
        let params: Vec<String> = e
            .spec
            .params()
            .into_iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let branch = match e.branch {
            Some(crate::formulas::Branch::Even(k)) => format!("EVEN({k})"),
            Some(crate::formulas::Branch::Odd(k)) => format!("ODD({k})"),
            None => String::new(),
        };
        let reason = match &e.status {
            crate::verification::Status::Skipped(r) => r.clone(),
            _ => String::new(),
        };
        w.write_record([
            e.spec.family().name().to_string(),
            params.join(";"),
            e.index.to_string(),
            branch,
            opt(e.closed_form),
            sig12(e.direct),
            opt(e.abs_diff),
            e.status.label().to_string(),
            reason,
        ])
        .map_err(csv_err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidParams(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
