//! Certificate checks for the three domination conditions.
//!
//! Every check returns a [`VerifyReport`]; a failing report always names the
//! least-index vertex that violates the condition.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{self, OracleOptions};

/// Which domination condition a set is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Every vertex outside the set has a neighbor inside.
    Dominating,
    /// Every vertex has a neighbor inside the set.
    Total,
    /// Dominating, and `N(D)` induces a subgraph without isolated vertices.
    Ntd,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::Dominating, Kind::Total, Kind::Ntd];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Dominating => "dominating",
            Kind::Total => "total",
            Kind::Ntd => "ntd",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        match s {
            "dominating" => Ok(Kind::Dominating),
            "total" => Ok(Kind::Total),
            "ntd" => Ok(Kind::Ntd),
            other => Err(Error::BadParams(format!("unknown condition `{other}`"))),
        }
    }
}

/// Outcome of a certificate check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub kind: Kind,
    pub pass: bool,
    /// Present exactly when `pass` is false.
    pub witness: Option<usize>,
}

impl VerifyReport {
    fn from_witness(kind: Kind, witness: Option<usize>) -> VerifyReport {
        VerifyReport {
            kind,
            pass: witness.is_none(),
            witness,
        }
    }
}

fn check_members(graph: &Graph, set: &VertexSet) -> Result<()> {
    match set.iter().find(|&v| v >= graph.n()) {
        Some(v) => Err(Error::IndexOutOfRange { vertex: v, n: graph.n() }),
        None => Ok(()),
    }
}

/// Passes iff `N[D] = V`; the witness is the least undominated vertex.
pub fn is_dominating(graph: &Graph, set: &VertexSet) -> Result<VerifyReport> {
    check_members(graph, set)?;
    let covered = graph.closed_neighborhood(set);
    let witness = graph.vertices().find(|&v| !covered.contains(v));
    Ok(VerifyReport::from_witness(Kind::Dominating, witness))
}

/// Passes iff `N(D) = V`; the witness is the least vertex without a neighbor in `D`.
pub fn is_total_dominating(graph: &Graph, set: &VertexSet) -> Result<VerifyReport> {
    check_members(graph, set)?;
    let covered = graph.open_neighborhood(set);
    let witness = graph.vertices().find(|&v| !covered.contains(v));
    Ok(VerifyReport::from_witness(Kind::Total, witness))
}

/// Neighborhood total domination check.
///
/// The witness is the least undominated vertex when `D` does not dominate,
/// otherwise the least vertex of `N(D)` with no neighbor in `N(D)`.
/// Graphs with isolated vertices are rejected.
pub fn is_ntd(graph: &Graph, set: &VertexSet) -> Result<VerifyReport> {
    if let Some(v) = graph.isolated_vertex() {
        return Err(Error::IsolatedVertexInInput(v));
    }
    let dom = is_dominating(graph, set)?;
    if !dom.pass {
        return Ok(VerifyReport::from_witness(Kind::Ntd, dom.witness));
    }
    let open = graph.open_neighborhood(set);
    let witness = open
        .iter()
        .find(|&v| !graph.neighbors(v).iter().any(|&w| open.contains(w)));
    Ok(VerifyReport::from_witness(Kind::Ntd, witness))
}

/// Dispatches to the check matching `kind`.
pub fn check(graph: &Graph, set: &VertexSet, kind: Kind) -> Result<VerifyReport> {
    match kind {
        Kind::Dominating => is_dominating(graph, set),
        Kind::Total => is_total_dominating(graph, set),
        Kind::Ntd => is_ntd(graph, set),
    }
}

/// `(γ, γ_nt, γ_t)` from exhaustive search, with the chain `γ ≤ γ_nt ≤ γ_t`
/// asserted.
pub fn check_chain(graph: &Graph, options: &OracleOptions) -> Result<(usize, usize, usize)> {
    if let Some(v) = graph.isolated_vertex() {
        return Err(Error::IsolatedVertexInInput(v));
    }
    let gamma = oracle::exact_min(graph, Kind::Dominating, options)?.0;
    let gamma_nt = oracle::exact_min(graph, Kind::Ntd, options)?.0;
    let gamma_t = oracle::exact_min(graph, Kind::Total, options)?.0;
    if gamma <= gamma_nt && gamma_nt <= gamma_t {
        Ok((gamma, gamma_nt, gamma_t))
    } else {
        Err(Error::ChainViolated {
            gamma,
            gamma_nt,
            gamma_t,
        })
    }
}

/// Necessary condition on any NTD-set at a pendant vertex `v` with support `u`:
/// either `v ∈ D` or `|N[u] ∩ D| ≥ 2`.
pub fn pendant_condition(graph: &Graph, set: &VertexSet, v: usize) -> Result<bool> {
    if v >= graph.n() {
        return Err(Error::IndexOutOfRange { vertex: v, n: graph.n() });
    }
    if graph.degree(v) != 1 {
        return Err(Error::NotPendant(v));
    }
    if set.contains(v) {
        return Ok(true);
    }
    let support = graph.neighbors(v)[0];
    let inside = set.contains(support) as usize
        + graph
            .neighbors(support)
            .iter()
            .filter(|&&w| set.contains(w))
            .count();
    Ok(inside >= 2)
}
