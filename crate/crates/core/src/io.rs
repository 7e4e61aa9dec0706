//! Text formats: edge lists, certificates and result documents.
//!
//! Edge lists start with a header line `n m` followed by `m` lines `u v`
//! using 1-based ids. Blank lines and lines starting with `#` are ignored.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::verify::{Kind, VerifyReport};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| parse_error(1, "missing `n m` header"))?;
    let (n, m) = two_numbers(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        last_line = line_no;
        let (u, v) = two_numbers(line_no, line)?;
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(parse_error(line_no, format!("vertex {w} outside 1..={n}")));
            }
        }
        if u == v {
            return Err(parse_error(line_no, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_error(line_no, format!("duplicate edge {u} {v}")));
        }
        edges.push((u - 1, v - 1));
    }
    if edges.len() != m {
        return Err(parse_error(
            last_line,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::build(n, &edges)
}

fn two_numbers(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut parts = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let token = parts
            .next()
            .ok_or_else(|| parse_error(line_no, format!("missing {what}")))?;
        token
            .parse()
            .map_err(|_| parse_error(line_no, format!("`{token}` is not a non-negative integer")))
    };
    let a = next("first number")?;
    let b = next("second number")?;
    if let Some(extra) = parts.next() {
        return Err(parse_error(line_no, format!("unexpected token `{extra}`")));
    }
    Ok((a, b))
}

/// Header plus edges in lexicographic order, 1-based.
pub fn serialize_graph(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.n(), graph.m());
    for (u, v) in graph.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

/// Hex SHA-256 of the raw input bytes.
pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Certificate status inside a [`ResultDocument`], with a 1-based witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyStatus {
    pub kind: Kind,
    pub pass: bool,
    pub witness: Option<usize>,
}

impl From<&VerifyReport> for VerifyStatus {
    fn from(report: &VerifyReport) -> Self {
        VerifyStatus {
            kind: report.kind,
            pass: report.pass,
            witness: report.witness.map(|w| w + 1),
        }
    }
}

/// One solver run, serialized as a JSON object.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub algorithm: String,
    /// SHA-256 of the input file.
    pub input_sha256: String,
    /// Sorted, 1-based.
    pub members: Vec<usize>,
    pub size: usize,
    pub verify: VerifyStatus,
    pub wall_time_seconds: f64,
}

impl ResultDocument {
    pub fn new(algorithm: &str, input: &[u8], set: &VertexSet, report: &VerifyReport, seconds: f64) -> Self {
        ResultDocument {
            algorithm: algorithm.to_string(),
            input_sha256: digest(input),
            members: set.iter().map(|v| v + 1).collect(),
            size: set.len(),
            verify: report.into(),
            wall_time_seconds: seconds,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result documents always serialize") + "\n"
    }

    pub fn from_json(text: &str) -> Result<ResultDocument> {
        serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.to_string()))
    }

    /// Members as a 0-based set over `n` vertices.
    pub fn to_set(&self, n: usize) -> Result<VertexSet> {
        one_based_set(n, &self.members, 1)
    }
}

fn one_based_set(n: usize, ids: &[usize], line: usize) -> Result<VertexSet> {
    let mut set = VertexSet::new(n);
    for &id in ids {
        if id == 0 || id > n {
            return Err(parse_error(line, format!("vertex {id} outside 1..={n}")));
        }
        set.insert(id - 1);
    }
    Ok(set)
}

/// Reads a certificate: either a result document or whitespace-separated
/// 1-based ids, with `#` comments allowed.
pub fn parse_certificate(text: &str, n: usize) -> Result<VertexSet> {
    if text.trim_start().starts_with('{') {
        return ResultDocument::from_json(text)?.to_set(n);
    }
    let mut set = VertexSet::new(n);
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let ids: Vec<usize> = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| parse_error(idx + 1, format!("`{t}` is not a vertex id"))))
            .collect::<Result<_>>()?;
        for v in one_based_set(n, &ids, idx + 1)?.iter() {
            set.insert(v);
        }
    }
    Ok(set)
}
