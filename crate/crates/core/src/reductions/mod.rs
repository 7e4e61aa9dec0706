//! Hardness constructions with forward maps and certificate extractors.
//!
//! Each construction returns a [`ReductionArtifact`]: the output graph, a
//! provenance label for every output vertex, and the affine relation between
//! the source and target optima.

pub mod domset;
pub mod fourcopy;
pub mod gadget;
pub mod subcubic;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::verify;

pub use domset::{build_domset_to_ntds, extract_domset_from_ntds, forward_domset_to_ntds};
pub use fourcopy::{build_fourcopy, extract_domset_fourcopy, forward_fourcopy};
pub use gadget::{gadget_search, GadgetContract, GadgetSpec};
pub use subcubic::{build_subcubic_gadget, extract_domset_subcubic, forward_ntd_subcubic};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReductionKind {
    /// Five pendant-path vertices per source vertex.
    DomsetToNtds,
    /// Four copies of the vertex set with a biclique between two of them.
    FourCopy,
    /// Degree-bounded gadgets keeping the maximum degree at 3.
    Subcubic,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 3] = [
        ReductionKind::DomsetToNtds,
        ReductionKind::FourCopy,
        ReductionKind::Subcubic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::DomsetToNtds => "domset2ntds",
            ReductionKind::FourCopy => "fourcopy",
            ReductionKind::Subcubic => "subcubic",
        }
    }

    /// Runs the matching construction.
    pub fn build(self, source: &Graph) -> Result<ReductionArtifact> {
        match self {
            ReductionKind::DomsetToNtds => Ok(build_domset_to_ntds(source)),
            ReductionKind::FourCopy => build_fourcopy(source),
            ReductionKind::Subcubic => build_subcubic_gadget(source),
        }
    }

    /// Maps an NTD-set of the output back to a dominating set of the source.
    pub fn extract(self, artifact: &ReductionArtifact, certificate: &VertexSet) -> Result<VertexSet> {
        match self {
            ReductionKind::DomsetToNtds => extract_domset_from_ntds(artifact, certificate),
            ReductionKind::FourCopy => extract_domset_fourcopy(artifact, certificate),
            ReductionKind::Subcubic => extract_domset_subcubic(artifact, certificate),
        }
    }

    /// Maps a dominating set of the source to an NTD-set of the output.
    pub fn forward(self, artifact: &ReductionArtifact, dominating: &VertexSet) -> Result<VertexSet> {
        match self {
            ReductionKind::DomsetToNtds => forward_domset_to_ntds(artifact, dominating),
            ReductionKind::FourCopy => forward_fourcopy(artifact, dominating),
            ReductionKind::Subcubic => forward_ntd_subcubic(artifact, dominating),
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReductionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<ReductionKind> {
        ReductionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::BadParams(format!("unknown reduction kind `{s}`")))
    }
}

/// `target = slope · source + intercept`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub slope: usize,
    pub intercept: usize,
}

impl Relation {
    pub fn apply(self, source_optimum: usize) -> usize {
        self.slope * source_optimum + self.intercept
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.slope, self.intercept)
    }
}

/// What an output vertex stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// The source vertex itself.
    Original,
    /// Pendant-path vertices `a, b, c, x, y`, indexed 0 to 4.
    Tail(u8),
    /// Copy 1 to 4.
    Copy(u8),
    /// Attachment gadget vertex 1 to 4.
    Attach(u8),
    /// Split port 1 or 2.
    Split(u8),
    /// Split gadget inner vertex 1 to 6.
    Inner(u8),
}

const TAIL_NAMES: [&str; 5] = ["a", "b", "c", "x", "y"];

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::Original => f.write_str("v"),
            Role::Tail(k) => f.write_str(TAIL_NAMES[k as usize]),
            Role::Copy(k) => write!(f, "copy{k}"),
            Role::Attach(k) => write!(f, "x{k}"),
            Role::Split(k) => write!(f, "v{k}"),
            Role::Inner(k) => write!(f, "y{k}"),
        }
    }
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Role> {
        if s == "v" {
            return Ok(Role::Original);
        }
        if let Some(k) = TAIL_NAMES.iter().position(|&t| t == s) {
            return Ok(Role::Tail(k as u8));
        }
        let bad = || Error::BadParams(format!("unknown role `{s}`"));
        let split = |prefix: &str, max: u8| -> Option<u8> {
            let k: u8 = s.strip_prefix(prefix)?.parse().ok()?;
            (1..=max).contains(&k).then_some(k)
        };
        if let Some(k) = split("copy", 4) {
            return Ok(Role::Copy(k));
        }
        if let Some(k) = split("x", 4) {
            return Ok(Role::Attach(k));
        }
        if let Some(k) = split("v", 2) {
            return Ok(Role::Split(k));
        }
        if let Some(k) = split("y", 6) {
            return Ok(Role::Inner(k));
        }
        Err(bad())
    }
}

/// Source vertex and role of one output vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Provenance {
    pub source: usize,
    pub role: Role,
}

/// Output of a construction.
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionArtifact {
    pub kind: ReductionKind,
    pub source: Graph,
    pub output: Graph,
    /// Indexed by output vertex.
    pub provenance: Vec<Provenance>,
    pub relation: Relation,
    index: HashMap<Provenance, usize>,
}

impl ReductionArtifact {
    fn new(
        kind: ReductionKind,
        source: &Graph,
        output: Graph,
        provenance: Vec<Provenance>,
        relation: Relation,
    ) -> ReductionArtifact {
        let index: HashMap<Provenance, usize> =
            provenance.iter().enumerate().map(|(v, &p)| (p, v)).collect();
        assert_eq!(index.len(), provenance.len(), "provenance labels are unique");
        assert_eq!(provenance.len(), output.n(), "every output vertex is labeled");
        ReductionArtifact {
            kind,
            source: source.clone(),
            output,
            provenance,
            relation,
            index,
        }
    }

    /// Output vertex with the given label.
    pub fn vertex(&self, source: usize, role: Role) -> Option<usize> {
        self.index.get(&Provenance { source, role }).copied()
    }

    fn expect_vertex(&self, source: usize, role: Role) -> usize {
        self.vertex(source, role)
            .unwrap_or_else(|| panic!("artifact has no vertex {role} for source {source}"))
    }

    /// The provenance sidecar: a header comment naming the kind and relation,
    /// then `vertex-id<TAB>source-id<TAB>role` per output vertex, 1-based.
    pub fn sidecar(&self) -> String {
        let mut out = format!(
            "# kind={} relation={} source-n={}\n",
            self.kind, self.relation, self.source.n()
        );
        for (v, p) in self.provenance.iter().enumerate() {
            out.push_str(&format!("{}\t{}\t{}\n", v + 1, p.source + 1, p.role));
        }
        out
    }

    /// Fails with [`Error::NotNtd`] unless `set` is an NTD-set of the output.
    fn require_ntd(&self, set: &VertexSet) -> Result<()> {
        let report = verify::is_ntd(&self.output, set)?;
        match report.witness {
            None => Ok(()),
            Some(w) => Err(Error::NotNtd(w)),
        }
    }

    /// Fails with [`Error::NotDominating`] unless `set` dominates the source.
    fn require_dominating(&self, set: &VertexSet) -> Result<()> {
        let report = verify::is_dominating(&self.source, set)?;
        match report.witness {
            None => Ok(()),
            Some(w) => Err(Error::NotDominating(w)),
        }
    }
}

/// Parsed sidecar header and labels.
#[derive(Clone, Debug, PartialEq)]
pub struct Sidecar {
    pub kind: ReductionKind,
    pub relation: Relation,
    pub source_n: usize,
    pub provenance: Vec<Provenance>,
}

pub fn parse_sidecar(text: &str) -> Result<Sidecar> {
    let mut header = None;
    let mut provenance = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| Error::Parse { line: line_no, message };
        let line = raw.trim_end();
        if let Some(rest) = line.strip_prefix('#') {
            if header.is_none() {
                header = Some(parse_header(rest).map_err(err)?);
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 {
            return Err(err(format!("expected 3 tab-separated fields, found {}", fields.len())));
        }
        let vertex: usize = fields[0].parse().map_err(|_| err(format!("bad vertex id `{}`", fields[0])))?;
        if vertex != provenance.len() + 1 {
            return Err(err(format!("vertex ids must run 1, 2, …; found {vertex}")));
        }
        let source: usize = match fields[1].parse() {
            Ok(s) if s >= 1 => s,
            _ => return Err(err(format!("bad source id `{}`", fields[1]))),
        };
        let role: Role = fields[2].parse().map_err(|_| err(format!("bad role `{}`", fields[2])))?;
        provenance.push(Provenance { source: source - 1, role });
    }
    let (kind, relation, source_n) = header.ok_or(Error::Parse {
        line: 1,
        message: "missing `# kind=… relation=…` header".into(),
    })?;
    Ok(Sidecar {
        kind,
        relation,
        source_n,
        provenance,
    })
}

fn parse_header(text: &str) -> std::result::Result<(ReductionKind, Relation, usize), String> {
    let mut kind = None;
    let mut relation = None;
    let mut source_n = None;
    for token in text.split_whitespace() {
        match token.split_once('=') {
            Some(("kind", v)) => kind = Some(v.parse::<ReductionKind>().map_err(|e| e.to_string())?),
            Some(("relation", v)) => {
                let inner = v
                    .strip_prefix('(')
                    .and_then(|v| v.strip_suffix(')'))
                    .ok_or_else(|| format!("bad relation `{v}`"))?;
                let (a, b) = inner.split_once(',').ok_or_else(|| format!("bad relation `{v}`"))?;
                relation = Some(Relation {
                    slope: a.parse().map_err(|_| format!("bad slope `{a}`"))?,
                    intercept: b.parse().map_err(|_| format!("bad intercept `{b}`"))?,
                });
            }
            Some(("source-n", v)) => source_n = Some(v.parse().map_err(|_| format!("bad source-n `{v}`"))?),
            _ => return Err(format!("unexpected header token `{token}`")),
        }
    }
    Ok((
        kind.ok_or("header lacks kind")?,
        relation.ok_or("header lacks relation")?,
        source_n.ok_or("header lacks source-n")?,
    ))
}
