//! Four-copy construction: copies `V1..V4` of the source vertices, `V1`
//! joined to `V3` and `V2` to `V4` along closed neighborhoods, and a complete
//! bipartite graph between `V1` and `V2`. `γ_nt(output) = 2γ(source)`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::{Provenance, ReductionArtifact, ReductionKind, Relation, Role};

/// Copy `k` (1 to 4) of `v` sits at `(k − 1)·n + v`.
///
/// Sources with isolated vertices are refused, since those would leave
/// isolated vertices in the output.
pub fn build_fourcopy(source: &Graph) -> Result<ReductionArtifact> {
    if let Some(v) = source.isolated_vertex() {
        return Err(Error::IsolatedVertexInInput(v));
    }
    let n = source.n();
    let copy = |k: usize, v: usize| (k - 1) * n + v;
    let mut edges = Vec::new();
    for (u, v) in source.edges() {
        edges.push((copy(1, u), copy(3, v)));
        edges.push((copy(3, u), copy(1, v)));
        edges.push((copy(2, u), copy(4, v)));
        edges.push((copy(4, u), copy(2, v)));
    }
    for v in 0..n {
        edges.push((copy(1, v), copy(3, v)));
        edges.push((copy(2, v), copy(4, v)));
    }
    for u in 0..n {
        for w in 0..n {
            edges.push((copy(1, u), copy(2, w)));
        }
    }
    let output = Graph::build(4 * n, &edges).expect("construction edges are simple");
    let provenance = (1..=4u8)
        .flat_map(|k| (0..n).map(move |v| Provenance { source: v, role: Role::Copy(k) }))
        .collect();
    Ok(ReductionArtifact::new(
        ReductionKind::FourCopy,
        source,
        output,
        provenance,
        Relation { slope: 2, intercept: 0 },
    ))
}

/// `{v_1, v_2 : v ∈ D}`.
pub fn forward_fourcopy(artifact: &ReductionArtifact, dominating: &VertexSet) -> Result<VertexSet> {
    artifact.require_dominating(dominating)?;
    let set = dominating
        .iter()
        .flat_map(|v| [artifact.expect_vertex(v, Role::Copy(1)), artifact.expect_vertex(v, Role::Copy(2))]);
    Ok(VertexSet::from_iter(artifact.output.n(), set))
}

/// Moves an NTD-set of the output into `V1 ∪ V2` without growing it.
///
/// A member `u_3` is traded for an unchosen neighbor `z` in `V1`; if `z`
/// then has no chosen neighbor, nothing in `V2` is chosen, so `u_4` must be,
/// and `u_4` is traded for `u_2`. When every `V1` neighbor of `u_3` is
/// already chosen, `u_3` is dropped if some `V2` vertex is chosen, and
/// otherwise `u_4` is traded for `u_2` first. Members of `V4` are handled the
/// same way with the two sides exchanged. Each step shrinks
/// `D ∩ (V3 ∪ V4)` or fills `V2`, so the loop ends.
pub fn normalize_fourcopy_certificate(artifact: &ReductionArtifact, certificate: &VertexSet) -> Result<VertexSet> {
    artifact.require_ntd(certificate)?;
    let n = artifact.source.n();
    let g = &artifact.output;
    let mut d = certificate.clone();
    loop {
        let Some(member) = d.iter().find(|&w| w >= 2 * n) else {
            break;
        };
        // near/far: the copy joined to `member`, and the opposite biclique side.
        let (near, far, twin) = if member < 3 * n { (1, 2, 4) } else { (2, 1, 3) };
        let u = artifact.provenance[member].source;
        let in_near = |w: usize| artifact.provenance[w].role == Role::Copy(near);
        let far_chosen = |d: &VertexSet| d.iter().any(|w| artifact.provenance[w].role == Role::Copy(far));
        let twin_vertex = artifact.expect_vertex(u, Role::Copy(twin));
        let far_vertex = artifact.expect_vertex(u, Role::Copy(far));

        let swap_twin = |d: &mut VertexSet| -> Result<()> {
            if !d.remove(twin_vertex) {
                return Err(Error::Internal(format!(
                    "copy {twin} of source vertex {u} expected in the certificate"
                )));
            }
            d.insert(far_vertex);
            Ok(())
        };

        match g.neighbors(member).iter().copied().find(|&z| in_near(z) && !d.contains(z)) {
            Some(z) => {
                d.remove(member);
                d.insert(z);
                if !g.neighbors(z).iter().any(|&w| d.contains(w)) {
                    debug_assert!(!far_chosen(&d));
                    swap_twin(&mut d)?;
                }
            }
            None => {
                if far_chosen(&d) {
                    d.remove(member);
                } else {
                    swap_twin(&mut d)?;
                }
            }
        }
    }
    Ok(d)
}

/// Dominating set of the source of size at most `|D| / 2`: the smaller of
/// the two biclique sides of the normalized certificate, ties going to `V1`.
pub fn extract_domset_fourcopy(artifact: &ReductionArtifact, certificate: &VertexSet) -> Result<VertexSet> {
    let normalized = normalize_fourcopy_certificate(artifact, certificate)?;
    let n = artifact.source.n();
    let side = |k: u8| -> Vec<usize> {
        normalized
            .iter()
            .filter(|&w| artifact.provenance[w].role == Role::Copy(k))
            .map(|w| artifact.provenance[w].source)
            .collect()
    };
    let (first, second) = (side(1), side(2));
    let smaller = if first.len() <= second.len() { first } else { second };
    Ok(VertexSet::from_iter(n, smaller))
}
