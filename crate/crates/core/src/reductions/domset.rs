//! Dominating set to NTD-set: every source vertex `v` gets the tail
//! `v - a - b - c` with pendants `x` on `b` and `y` on `c`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::{Provenance, ReductionArtifact, ReductionKind, Relation, Role};

const A: u8 = 0;
const B: u8 = 1;
const C: u8 = 2;
const X: u8 = 3;
const Y: u8 = 4;

/// Output has `6n` vertices: the source ones first, then `a, b, c, x, y` of
/// each source vertex in turn. `γ_nt(output) = γ(source) + 2n`.
pub fn build_domset_to_ntds(source: &Graph) -> ReductionArtifact {
    let n = source.n();
    let tail = |v: usize, k: u8| n + 5 * v + k as usize;
    let mut edges = source.edge_list();
    let mut provenance: Vec<Provenance> = (0..n)
        .map(|v| Provenance { source: v, role: Role::Original })
        .collect();
    for v in 0..n {
        for k in 0..5 {
            provenance.push(Provenance { source: v, role: Role::Tail(k) });
        }
        edges.push((v, tail(v, A)));
        edges.push((tail(v, A), tail(v, B)));
        edges.push((tail(v, B), tail(v, C)));
        edges.push((tail(v, B), tail(v, X)));
        edges.push((tail(v, C), tail(v, Y)));
    }
    let output = Graph::build(6 * n, &edges).expect("construction edges are simple");
    ReductionArtifact::new(
        ReductionKind::DomsetToNtds,
        source,
        output,
        provenance,
        Relation { slope: 1, intercept: 2 * n },
    )
}

/// `D ∪ {b_v, c_v : v ∈ V}`.
pub fn forward_domset_to_ntds(artifact: &ReductionArtifact, dominating: &VertexSet) -> Result<VertexSet> {
    artifact.require_dominating(dominating)?;
    let mut set = VertexSet::from_iter(artifact.output.n(), dominating.iter());
    for v in artifact.source.vertices() {
        set.insert(artifact.expect_vertex(v, Role::Tail(B)));
        set.insert(artifact.expect_vertex(v, Role::Tail(C)));
    }
    Ok(set)
}

/// Rewrites an NTD-set of the output, without growing it, into one that
/// holds every `b_v, c_v` and no `a_v, x_v, y_v`.
///
/// For each source vertex in turn: a chosen `x_v` or `y_v` is traded for the
/// missing members of `b_v, c_v` (or simply dropped), then a chosen `a_v` is
/// dropped when `v` is already chosen and otherwise swapped for `v`.
pub fn normalize_domset_certificate(artifact: &ReductionArtifact, certificate: &VertexSet) -> Result<VertexSet> {
    artifact.require_ntd(certificate)?;
    let mut s = certificate.clone();
    for v in artifact.source.vertices() {
        let [a, b, c, x, y] = [A, B, C, X, Y].map(|k| artifact.expect_vertex(v, Role::Tail(k)));
        match (s.contains(x), s.contains(y)) {
            (true, false) => {
                s.remove(x);
            }
            (true, true) => {
                s.remove(x);
                s.remove(y);
                s.insert(b);
                s.insert(c);
            }
            (false, true) => {
                s.remove(y);
                s.insert(c);
            }
            (false, false) => {}
        }
        if s.contains(a) {
            s.remove(a);
            s.insert(v);
        }
        if !(s.contains(b) && s.contains(c)) {
            return Err(Error::Internal(format!(
                "normalized certificate lacks b or c of source vertex {v}"
            )));
        }
    }
    Ok(s)
}

/// Dominating set of the source of size at most `|S'| − 2n`.
pub fn extract_domset_from_ntds(artifact: &ReductionArtifact, certificate: &VertexSet) -> Result<VertexSet> {
    let normalized = normalize_domset_certificate(artifact, certificate)?;
    let n = artifact.source.n();
    Ok(VertexSet::from_iter(n, normalized.iter().filter(|&v| v < n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::verify;

    #[test]
    fn sizes_and_relation() {
        let k1 = build_domset_to_ntds(&generate::path(1));
        assert_eq!((k1.output.n(), k1.output.m()), (6, 5));
        assert_eq!(k1.relation, Relation { slope: 1, intercept: 2 });
        let k2 = build_domset_to_ntds(&generate::path(2));
        assert_eq!(k2.output.n(), 12);
        assert_eq!(k2.relation.to_string(), "(1,4)");
        assert_eq!(build_domset_to_ntds(&generate::path(3)).output.n(), 18);
    }

    #[test]
    fn tails_are_wired_as_described() {
        let art = build_domset_to_ntds(&generate::path(1));
        let [a, b, c, x, y] = [A, B, C, X, Y].map(|k| art.vertex(0, Role::Tail(k)).unwrap());
        assert!(art.output.has_edge(0, a));
        assert!(art.output.has_edge(a, b));
        assert!(art.output.has_edge(b, c));
        assert!(art.output.has_edge(b, x));
        assert!(art.output.has_edge(c, y));
        assert_eq!(art.output.degree(x), 1);
        assert_eq!(art.output.degree(y), 1);
    }

    #[test]
    fn extractor_examples() {
        let art = build_domset_to_ntds(&generate::path(1));
        let cert = VertexSet::from_iter(6, [0, 2, 3]);
        assert_eq!(extract_domset_from_ntds(&art, &cert).unwrap().to_vec(), vec![0]);

        let p3 = generate::path(3);
        let art = build_domset_to_ntds(&p3);
        let d = VertexSet::from_iter(3, [1]);
        let forward = forward_domset_to_ntds(&art, &d).unwrap();
        assert!(verify::is_ntd(&art.output, &forward).unwrap().pass);
        assert_eq!(extract_domset_from_ntds(&art, &forward).unwrap(), d);
    }

    #[test]
    fn rejects_bad_inputs() {
        let art = build_domset_to_ntds(&generate::path(3));
        let not_dominating = VertexSet::from_iter(3, [0]);
        assert_eq!(forward_domset_to_ntds(&art, &not_dominating), Err(Error::NotDominating(2)));
        let not_ntd = VertexSet::from_iter(18, [1]);
        assert!(matches!(extract_domset_from_ntds(&art, &not_ntd), Err(Error::NotNtd(_))));
    }
}
