//! Degree-3 construction: an attachment gadget on every vertex of degree at
//! most 2, a split gadget in place of every vertex of degree 3.
//! `γ_nt(output) = γ(source) + n + 2s` where `s` counts degree-3 vertices.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::gadget::GadgetSpec;
use super::{Provenance, ReductionArtifact, ReductionKind, Relation, Role};

pub fn build_subcubic_gadget(source: &Graph) -> Result<ReductionArtifact> {
    build_subcubic_with(source, &GadgetSpec::attachment(), &GadgetSpec::split())
}

/// Builds the construction with the given gadgets.
///
/// Source vertex `v` keeps index `v` as its first port; the remaining gadget
/// vertices follow, source vertex by source vertex. A degree-3 vertex sends
/// the edges to its two smallest neighbors to `v1` and the third to `v2`.
pub fn build_subcubic_with(source: &Graph, attach: &GadgetSpec, split: &GadgetSpec) -> Result<ReductionArtifact> {
    for v in source.vertices() {
        if source.degree(v) > 3 {
            return Err(Error::DegreeTooHigh {
                vertex: v,
                degree: source.degree(v),
                cap: 3,
            });
        }
    }
    let n = source.n();
    let mut provenance: Vec<Provenance> = Vec::new();
    let mut local_to_global: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut edges = Vec::new();
    let mut next = n;
    for v in 0..n {
        let gadget = if source.degree(v) == 3 { split } else { attach };
        let mut map = Vec::with_capacity(gadget.size());
        for local in 0..gadget.size() {
            if local == 0 {
                map.push(v);
            } else {
                map.push(next);
                next += 1;
            }
        }
        for &(i, j) in &gadget.edges {
            edges.push((map[i], map[j]));
        }
        local_to_global.push(map);
    }
    provenance.resize(next, Provenance { source: 0, role: Role::Original });
    for v in 0..n {
        let gadget = if source.degree(v) == 3 { split } else { attach };
        for (local, &global) in local_to_global[v].iter().enumerate() {
            provenance[global] = Provenance { source: v, role: gadget.roles[local] };
        }
    }

    let endpoint = |u: usize, w: usize| -> usize {
        if source.degree(u) == 3 {
            let slot = source.neighbors(u).iter().position(|&x| x == w).expect("w is a neighbor of u");
            let port = if slot < 2 { split.ports[0] } else { split.ports[1] };
            local_to_global[u][port]
        } else {
            local_to_global[u][attach.ports[0]]
        }
    };
    for (u, w) in source.edges() {
        edges.push((endpoint(u, w), endpoint(w, u)));
    }

    let s = source.vertices().filter(|&v| source.degree(v) == 3).count();
    let output = Graph::build(next, &edges).expect("construction edges are simple");
    Ok(ReductionArtifact::new(
        ReductionKind::Subcubic,
        source,
        output,
        provenance,
        Relation { slope: 1, intercept: n + 2 * s },
    ))
}

/// NTD-set of the output of size `|D| + (n − s) + 3s` built from a
/// dominating set `D` of the source.
///
/// Degree at most 2: `x2`, plus `v` when `v ∈ D`. Degree 3 with `v ∈ D`:
/// `v1, v2, y5, y6`. Degree 3 with `v ∉ D`, where `a, b` are the neighbors on
/// `v1` and `c` the one on `v2`: `y1, y3, y6` when only `c` dominates `v`,
/// and `y2, y4, y5` otherwise.
pub fn forward_ntd_subcubic(artifact: &ReductionArtifact, dominating: &VertexSet) -> Result<VertexSet> {
    forward_with(artifact, dominating)
}

pub(crate) fn forward_with(artifact: &ReductionArtifact, dominating: &VertexSet) -> Result<VertexSet> {
    artifact.require_dominating(dominating)?;
    let source = &artifact.source;
    let mut nd = VertexSet::new(artifact.output.n());
    let mut take = |v: usize, roles: &[Role]| {
        for &role in roles {
            nd.insert(artifact.expect_vertex(v, role));
        }
    };
    for v in source.vertices() {
        let chosen = dominating.contains(v);
        if source.degree(v) <= 2 {
            if chosen {
                take(v, &[Role::Original, Role::Attach(2)]);
            } else {
                take(v, &[Role::Attach(2)]);
            }
            continue;
        }
        if chosen {
            take(v, &[Role::Split(1), Role::Split(2), Role::Inner(5), Role::Inner(6)]);
            continue;
        }
        let nbrs = source.neighbors(v);
        let (a, b, c) = (dominating.contains(nbrs[0]), dominating.contains(nbrs[1]), dominating.contains(nbrs[2]));
        if !a && !b && c {
            take(v, &[Role::Inner(1), Role::Inner(3), Role::Inner(6)]);
        } else {
            take(v, &[Role::Inner(2), Role::Inner(4), Role::Inner(5)]);
        }
    }
    Ok(nd)
}

/// Number of members of `set` inside the gadget of each source vertex.
pub fn gadget_counts(artifact: &ReductionArtifact, set: &VertexSet) -> Vec<usize> {
    let mut rho = vec![0; artifact.source.n()];
    for w in set.iter() {
        rho[artifact.provenance[w].source] += 1;
    }
    rho
}

/// Dominating set of the source of size at most `|ND'| − n − 2s`: `v` is
/// kept when its gadget holds at least 2 members (degree at most 2) or at
/// least 4 (degree 3).
pub fn extract_domset_subcubic(artifact: &ReductionArtifact, certificate: &VertexSet) -> Result<VertexSet> {
    artifact.require_ntd(certificate)?;
    let rho = gadget_counts(artifact, certificate);
    let source = &artifact.source;
    let keep = source.vertices().filter(|&v| {
        let threshold = if source.degree(v) == 3 { 4 } else { 2 };
        rho[v] >= threshold
    });
    Ok(VertexSet::from_iter(source.n(), keep))
}
