//! Brute-force reference computations shared by the integration tests.
//!
//! Everything here is written against adjacency bitmasks directly, without
//! the library's verifiers or search, so it can serve as an independent check.

#![allow(dead_code)]

use ntd::{Graph, Kind, VertexSet};

pub fn masks(graph: &Graph) -> Vec<u32> {
    assert!(graph.n() <= 20, "reference search is for tiny graphs");
    graph
        .vertices()
        .map(|v| graph.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect()
}

pub fn satisfies(adj: &[u32], set: u32, kind: Kind) -> bool {
    let n = adj.len();
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let open = (0..n).filter(|&v| set >> v & 1 == 1).fold(0u32, |acc, v| acc | adj[v]);
    match kind {
        Kind::Dominating => (open | set) == all,
        Kind::Total => open == all,
        Kind::Ntd => {
            (open | set) == all && (0..n).filter(|&v| open >> v & 1 == 1).all(|v| adj[v] & open != 0)
        }
    }
}

/// Minimum size of a set satisfying `kind`, by plain enumeration of all
/// `2^n` subsets.
pub fn minimum(graph: &Graph, kind: Kind) -> Option<usize> {
    let adj = masks(graph);
    (0u32..1 << graph.n())
        .filter(|&s| satisfies(&adj, s, kind))
        .map(|s| s.count_ones() as usize)
        .min()
}

/// All subsets of minimum size satisfying `kind`.
pub fn all_minimum(graph: &Graph, kind: Kind) -> Vec<VertexSet> {
    let adj = masks(graph);
    let Some(best) = minimum(graph, kind) else {
        return Vec::new();
    };
    (0u32..1 << graph.n())
        .filter(|&s| s.count_ones() as usize == best && satisfies(&adj, s, kind))
        .map(|s| VertexSet::from_iter(graph.n(), (0..graph.n()).filter(|&v| s >> v & 1 == 1)))
        .collect()
}

pub fn as_mask(set: &VertexSet) -> u32 {
    set.iter().fold(0, |acc, v| acc | 1 << v)
}

/// `H(Δ)`-style bound the approximation is held to: `2(ln(Δ+1)+1)`.
pub fn approx_factor(max_degree: usize) -> f64 {
    2.0 * (((max_degree + 1) as f64).ln() + 1.0)
}
