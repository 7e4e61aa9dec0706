//! Greedy approximation for minimum NTD-sets.
//!
//! A greedy dominating set `D` is extended by one neighbor for every member
//! of `D` that has no neighbor inside `D`. The result is total dominating,
//! hence an NTD-set, and at most twice the size of `D`, which keeps it within
//! `2(ln(Δ+1)+1)` of the optimum.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{self, OracleOptions};
use crate::verify::{self, Kind};

/// How the augmenting set is chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Augment {
    /// Every lonely member of `D` gets a neighbor; each pick maximizes the
    /// number of lonely members it serves.
    #[default]
    Covering,
    /// Only neighbors with no neighbor outside `D`, drawn from the shrinking
    /// candidate pool `V'`. Falls back to [`Augment::Covering`] when the
    /// outcome fails the NTD check.
    Literal,
}

/// Result of [`approx_ntds_with`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxOutcome {
    /// `D ∪ S`.
    pub set: VertexSet,
    /// The greedy dominating set `D`.
    pub dominating: VertexSet,
    /// The augmenting set `S`.
    pub added: VertexSet,
    /// Members of `D` without a neighbor in `D`.
    pub lonely: usize,
    /// Set when the literal rule failed and the covering rule was used instead.
    pub repaired: bool,
}

/// Greedy dominating set over closed neighborhoods.
///
/// Each round takes the vertex covering the most still-uncovered vertices,
/// ties going to the least index.
pub fn greedy_dominating(graph: &Graph) -> Result<VertexSet> {
    if let Some(v) = graph.isolated_vertex() {
        return Err(Error::IsolatedVertexInInput(v));
    }
    let n = graph.n();
    let mut covered = vec![false; n];
    let mut uncovered = n;
    let gain = |v: usize, covered: &[bool]| {
        (!covered[v]) as usize + graph.neighbors(v).iter().filter(|&&w| !covered[w]).count()
    };
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> =
        graph.vertices().map(|v| (graph.degree(v) + 1, Reverse(v))).collect();
    let mut chosen = VertexSet::new(n);
    while uncovered > 0 {
        let (stored, Reverse(v)) = heap.pop().expect("an uncovered vertex can always cover itself");
        let current = gain(v, &covered);
        if current < stored {
            if current > 0 {
                heap.push((current, Reverse(v)));
            }
            continue;
        }
        chosen.insert(v);
        for w in std::iter::once(v).chain(graph.neighbors(v).iter().copied()) {
            if !covered[w] {
                covered[w] = true;
                uncovered -= 1;
            }
        }
    }
    Ok(chosen)
}

/// Approximate minimum NTD-set using the default augmentation.
pub fn approx_ntds(graph: &Graph) -> Result<VertexSet> {
    Ok(approx_ntds_with(graph, Augment::Covering)?.set)
}

pub fn approx_ntds_with(graph: &Graph, mode: Augment) -> Result<ApproxOutcome> {
    let n = graph.n();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let dominating = greedy_dominating(graph)?;
    let lonely: Vec<usize> = dominating
        .iter()
        .filter(|&u| !graph.neighbors(u).iter().any(|&w| dominating.contains(w)))
        .collect();

    if mode == Augment::Literal {
        let added = literal_augment(graph, &dominating, &lonely);
        let set = dominating.union(&added);
        if verify::is_ntd(graph, &set)?.pass {
            return Ok(ApproxOutcome {
                set,
                dominating,
                added,
                lonely: lonely.len(),
                repaired: false,
            });
        }
        let added = covering_augment(graph, &lonely);
        return Ok(ApproxOutcome {
            set: dominating.union(&added),
            dominating,
            added,
            lonely: lonely.len(),
            repaired: true,
        });
    }

    let added = covering_augment(graph, &lonely);
    Ok(ApproxOutcome {
        set: dominating.union(&added),
        dominating,
        added,
        lonely: lonely.len(),
        repaired: false,
    })
}

fn covering_augment(graph: &Graph, lonely: &[usize]) -> VertexSet {
    let n = graph.n();
    let mut pending = VertexSet::from_iter(n, lonely.iter().copied());
    let mut added = VertexSet::new(n);
    for &u in lonely {
        if !pending.contains(u) {
            continue;
        }
        let pick = graph
            .neighbors(u)
            .iter()
            .copied()
            .max_by_key(|&w| {
                let served = graph.neighbors(w).iter().filter(|&&x| pending.contains(x)).count();
                (served, Reverse(w))
            })
            .expect("graph has no isolated vertex");
        added.insert(pick);
        for &x in graph.neighbors(pick) {
            pending.remove(x);
        }
    }
    added
}

fn literal_augment(graph: &Graph, dominating: &VertexSet, lonely: &[usize]) -> VertexSet {
    let n = graph.n();
    let mut pending = VertexSet::from_iter(n, lonely.iter().copied());
    let paired: Vec<usize> = dominating.iter().filter(|u| !pending.contains(*u)).collect();
    let paired = VertexSet::from_iter(n, paired);
    let reached = graph.open_neighborhood(&paired);
    let mut pool: Vec<bool> = (0..n).map(|v| !pending.contains(v) && !reached.contains(v)).collect();
    let mut added = VertexSet::new(n);
    for &u in lonely {
        if !pending.contains(u) {
            continue;
        }
        let pick = graph.neighbors(u).iter().copied().find(|&w| {
            pool[w] && graph.neighbors(w).iter().all(|&x| dominating.contains(x))
        });
        match pick {
            Some(w) => {
                added.insert(w);
                for &a in graph.neighbors(w) {
                    if pending.contains(a) {
                        for &x in graph.neighbors(a) {
                            pool[x] = false;
                        }
                    }
                }
                for &x in graph.neighbors(w) {
                    pending.remove(x);
                }
            }
            None => {
                pending.remove(u);
            }
        }
    }
    added
}

/// Approximation size against the exact optimum.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioReport {
    pub approx: usize,
    pub optimum: usize,
    pub ratio: f64,
    /// `2(ln(Δ+1)+1)`.
    pub bound: f64,
}

pub fn ratio_bound(max_degree: usize) -> f64 {
    2.0 * (((max_degree + 1) as f64).ln() + 1.0)
}

pub fn ratio_report(graph: &Graph, options: &OracleOptions) -> Result<RatioReport> {
    let approx = approx_ntds(graph)?.len();
    let (optimum, _) = oracle::exact_min(graph, Kind::Ntd, options)?;
    Ok(RatioReport {
        approx,
        optimum,
        ratio: approx as f64 / optimum as f64,
        bound: ratio_bound(graph.max_degree()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_dominating(&generate::star(5)).unwrap().to_vec(), vec![0]);
        assert_eq!(greedy_dominating(&generate::path(3)).unwrap().to_vec(), vec![1]);
        assert_eq!(greedy_dominating(&generate::path(5)).unwrap().to_vec(), vec![1, 3]);
        assert!(matches!(
            greedy_dominating(&Graph::empty(2)),
            Err(Error::IsolatedVertexInInput(0))
        ));
    }

    #[test]
    fn augmentation_examples() {
        assert_eq!(approx_ntds(&generate::star(5)).unwrap().to_vec(), vec![0, 1]);
        assert_eq!(approx_ntds(&generate::path(3)).unwrap().to_vec(), vec![0, 1]);
        let k3 = approx_ntds_with(&generate::complete(3), Augment::Covering).unwrap();
        assert_eq!(k3.dominating.to_vec(), vec![0]);
        assert_eq!(k3.added.to_vec(), vec![1]);
    }

    #[test]
    fn preconditions() {
        assert_eq!(approx_ntds(&generate::path(1)), Err(Error::TooSmall { n: 1, min: 2 }));
        let two_edges = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(approx_ntds(&two_edges), Err(Error::Disconnected));
    }

    #[test]
    fn ratio_examples() {
        let opts = OracleOptions::default();
        let k3 = ratio_report(&generate::complete(3), &opts).unwrap();
        assert_eq!((k3.approx, k3.optimum), (2, 1));
        assert!((k3.bound - 4.197).abs() < 1e-3);
        let p5 = ratio_report(&generate::path(5), &opts).unwrap();
        assert_eq!(p5.optimum, 3);
        assert!(p5.approx == 3 || p5.approx == 4);
        let star = ratio_report(&generate::star(5), &opts).unwrap();
        assert_eq!((star.approx, star.optimum), (2, 2));
        assert!((star.bound - 5.219).abs() < 1e-3);
    }

    #[test]
    fn literal_mode_always_ends_with_an_ntd_set() {
        for seed in 0..200 {
            let g = generate::random_connected(9, 0.2, seed).unwrap();
            let out = approx_ntds_with(&g, Augment::Literal).unwrap();
            assert!(verify::is_ntd(&g, &out.set).unwrap().pass, "seed {seed}");
        }
    }
}
