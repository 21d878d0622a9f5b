//! Text file formats and report serialization.
//!
//! Digraph file: line 1 is the vertex count, each following line one
//! arc "u v" (0-indexed). Scheme file: line 1 is "n d", then n rows of
//! n class labels; an optional trailing "labels:" line maps class
//! indices to distance pairs.

use std::fmt::Write as _;

use thiserror::Error;

use crate::attached::{AttachedScheme, WdrdViolation};
use crate::classify::{ClassificationReport, LemmaReport, LemmaStatus, Verdict};
use crate::digraph::{Digraph, DistancePair};
use crate::families::UnionCandidate;
use crate::ppoly::{PPolyProfile, SchemeType};
use crate::scheme::{PartitionError, RelationPartition};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

fn err(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError {
        line,
        reason: reason.into(),
    }
}

/// Parses the digraph file format, reporting loops, duplicate arcs and
/// range errors with their line number.
pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, l)| (idx + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first_no, first) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let n: usize = first
        .parse()
        .map_err(|_| err(first_no, format!("expected vertex count, got '{first}'")))?;
    if n == 0 {
        return Err(err(first_no, "vertex count must be positive"));
    }
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (no, line) in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| err(no, format!("expected 'u v', got '{line}'")))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| err(no, format!("expected 'u v', got '{line}'")))?;
        if it.next().is_some() {
            return Err(err(no, format!("expected 'u v', got '{line}'")));
        }
        if u == v {
            return Err(err(no, format!("loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(err(no, format!("vertex out of range in '{line}'")));
        }
        if !seen.insert((u, v)) {
            return Err(err(no, format!("duplicate arc {u} -> {v}")));
        }
        arcs.push((u, v));
    }
    Digraph::from_arcs(n, &arcs).map_err(|e| err(1, e.to_string()))
}

pub fn serialize_digraph(g: &Digraph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses the scheme file format into a validated partition. A trailing
/// "labels:" sidecar line is ignored.
pub fn parse_scheme(text: &str) -> Result<RelationPartition, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, l)| (idx + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first_no, first) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let header: Vec<&str> = first.split_whitespace().collect();
    let (n, d) = match header.as_slice() {
        [n, d] => (
            n.parse::<usize>()
                .map_err(|_| err(first_no, "expected 'n d' header"))?,
            d.parse::<usize>()
                .map_err(|_| err(first_no, "expected 'n d' header"))?,
        ),
        _ => return Err(err(first_no, "expected 'n d' header")),
    };
    let mut label = Vec::with_capacity(n * n);
    for row in 0..n {
        let (no, line) = lines
            .next()
            .ok_or_else(|| err(first_no, format!("expected {n} label rows, got {row}")))?;
        let entries: Result<Vec<usize>, _> =
            line.split_whitespace().map(|t| t.parse::<usize>()).collect();
        let entries = entries.map_err(|_| err(no, format!("bad label row '{line}'")))?;
        if entries.len() != n {
            return Err(err(no, format!("expected {n} labels, got {}", entries.len())));
        }
        label.extend(entries);
    }
    if let Some((no, line)) = lines.next() {
        if !line.starts_with("labels:") {
            return Err(err(no, format!("unexpected trailing line '{line}'")));
        }
    }
    RelationPartition::new(n, d, label).map_err(|e: PartitionError| err(first_no, e.to_string()))
}

pub fn serialize_partition(p: &RelationPartition) -> String {
    let n = p.n();
    let mut out = format!("{} {}\n", n, p.d());
    for x in 0..n {
        let row: Vec<String> = (0..n).map(|y| p.label(x, y).to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

/// Scheme file plus the sidecar line mapping class indices to distance
/// pairs.
pub fn serialize_attached(a: &AttachedScheme) -> String {
    let mut out = serialize_partition(a.scheme.partition());
    let labels: Vec<String> = a.labels.iter().map(DistancePair::to_string).collect();
    writeln!(out, "labels: {}", labels.join(" ")).unwrap();
    out
}

pub fn serialize_wdrd_violation(v: &WdrdViolation) -> String {
    format!(
        "not weakly distance-regular\nh={} i={} j={} pair_a=({},{}) pair_b=({},{}) count_a={} count_b={}\n",
        v.h,
        v.i,
        v.j,
        v.witness.pair_a.0,
        v.witness.pair_a.1,
        v.witness.pair_b.0,
        v.witness.pair_b.1,
        v.witness.count_a,
        v.witness.count_b
    )
}

pub fn serialize_profile(p: &PPolyProfile) -> String {
    let ordering: Vec<String> = p.ordering.iter().map(usize::to_string).collect();
    let mut out = String::new();
    writeln!(out, "ordering: {}", ordering.join(",")).unwrap();
    writeln!(out, "g: {}", p.girth).unwrap();
    writeln!(out, "d: {}", p.diameter).unwrap();
    writeln!(out, "type: {}", p.scheme_type.as_str()).unwrap();
    writeln!(out, "stable: {}", p.stable).unwrap();
    writeln!(out, "k1: {}", p.k1).unwrap();
    writeln!(out, "kg: {}", p.kg).unwrap();
    // Reported feasibility flag: short-type digraphs of valency above 1
    // are expected to have girth at most 8.
    if p.scheme_type == SchemeType::Short && p.k1 > 1 {
        writeln!(out, "expect_girth_le_8: true").unwrap();
    }
    out
}

fn positions_str(positions: &[usize]) -> String {
    positions
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn serialize_menu(menu: &[UnionCandidate]) -> String {
    let mut out = String::new();
    for c in menu {
        writeln!(out, "case={} positions={}", c.case_tag, positions_str(&c.positions)).unwrap();
    }
    out
}

pub fn serialize_report(r: &ClassificationReport) -> String {
    let mut out = String::new();
    writeln!(out, "FOUND").unwrap();
    for u in &r.found {
        writeln!(out, "positions={}", positions_str(u)).unwrap();
    }
    writeln!(out, "PREDICTED").unwrap();
    out.push_str(&serialize_menu(&r.predicted));
    writeln!(out, "VERDICT").unwrap();
    match &r.verdict {
        Verdict::Match => writeln!(out, "match").unwrap(),
        Verdict::Mismatch {
            found_not_predicted,
            predicted_not_found,
        } => {
            for u in found_not_predicted {
                writeln!(out, "found_minus_predicted positions={}", positions_str(u)).unwrap();
            }
            for u in predicted_not_found {
                writeln!(out, "predicted_minus_found positions={}", positions_str(u)).unwrap();
            }
        }
    }
    writeln!(out, "REJECTIONS").unwrap();
    for (u, reason) in &r.rejections {
        writeln!(out, "positions={} reason={}", positions_str(u), reason.as_str()).unwrap();
    }
    out
}

pub fn serialize_lemma_report(r: &LemmaReport) -> String {
    let mut out = String::new();
    for c in &r.checks {
        match c.status {
            LemmaStatus::Violated { i } => {
                writeln!(out, "{}: violated i={i}", c.id).unwrap()
            }
            other => writeln!(out, "{}: {}", c.id, other.as_str()).unwrap(),
        }
    }
    out
}
