//! Bi-compatible elimination orderings.
//!
//! Recognition runs three lexicographic breadth-first sweeps, each later
//! sweep breaking ties in favour of the vertex that came last in the previous
//! one, and certifies the final sweep with [`is_bco`]. The certificate is the
//! only acceptance criterion: an ordering that fails it is never returned.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An ordering `σ = (v_1, …, v_n)` certified as a BCO, with its reach arrays.
///
/// All indices are 0-based positions in `σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BcOrdering {
    /// `sigma[i]` is the vertex at position `i`.
    pub sigma: Vec<usize>,
    /// Inverse of `sigma`.
    pub position: Vec<usize>,
    /// `ell[i]`: largest position among `i` and the later neighbors of `sigma[i]`.
    pub ell: Vec<usize>,
    /// `fdeg[i]`: number of neighbors of `sigma[i]` at later positions.
    pub fdeg: Vec<usize>,
}

impl BcOrdering {
    /// Wraps `sigma` after certifying it.
    pub fn new(graph: &Graph, sigma: Vec<usize>) -> Result<BcOrdering> {
        if !is_bco(graph, &sigma) {
            return Err(Error::NotProperInterval);
        }
        let mut position = vec![0; sigma.len()];
        for (i, &v) in sigma.iter().enumerate() {
            position[v] = i;
        }
        let (ell, fdeg) = compute_ell(graph, &sigma);
        Ok(BcOrdering {
            sigma,
            position,
            ell,
            fdeg,
        })
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    /// Adjacency between the vertices at positions `i < j`, in O(1).
    ///
    /// Valid for connected graphs, where later neighbors of a position form a
    /// contiguous run ending at `ell`.
    #[inline]
    pub fn adjacent_positions(&self, i: usize, j: usize) -> bool {
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        lo != hi && self.ell[lo] >= hi
    }
}

/// Computes a BCO of a connected proper interval graph.
pub fn recognize_and_order(graph: &Graph) -> Result<BcOrdering> {
    let n = graph.n();
    if n == 0 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    // All sweeps run on a copy numbered in breadth-first order, where
    // neighbors sit close together in memory.
    let (visit, local) = graph.breadth_first_copy(0);
    if visit.len() < n {
        return Err(Error::Disconnected);
    }
    let identity: Vec<usize> = (0..n).collect();
    let mut sweeper = Sweeper::default();
    let first = sweeper.run(&local, &identity);
    let second = sweeper.run_plus(&local, &first);
    let third = sweeper.run_plus(&local, &second);
    let found = if is_bco(&local, &third) {
        third
    } else {
        let fourth = sweeper.run_plus(&local, &third);
        if !is_bco(&local, &fourth) {
            return Err(Error::NotProperInterval);
        }
        fourth
    };
    let (ell, fdeg) = compute_ell(&local, &found);
    let sigma: Vec<usize> = found.iter().map(|&i| visit[i]).collect();
    let mut position = vec![0; n];
    for (i, &v) in sigma.iter().enumerate() {
        position[v] = i;
    }
    Ok(BcOrdering {
        sigma,
        position,
        ell,
        fdeg,
    })
}

/// Whether `sigma` and its reverse are both perfect elimination orderings.
///
/// Returns false when `sigma` is not a permutation of the vertices.
pub fn is_bco(graph: &Graph, sigma: &[usize]) -> bool {
    let n = graph.n();
    if sigma.len() != n {
        return false;
    }
    let mut position = vec![usize::MAX; n];
    for (i, &v) in sigma.iter().enumerate() {
        if v >= n || position[v] != usize::MAX {
            return false;
        }
        position[v] = i;
    }
    if !is_peo(graph, &position) {
        return false;
    }
    let reversed: Vec<usize> = position.iter().map(|&p| n - 1 - p).collect();
    is_peo(graph, &reversed)
}

/// Standard linear-time PEO test: for every vertex, its later neighbors other
/// than the earliest one must all be adjacent to that earliest one.
fn is_peo(graph: &Graph, position: &[usize]) -> bool {
    let n = graph.n();
    const NONE: usize = usize::MAX;
    let mut parent = vec![NONE; n];
    for v in 0..n {
        parent[v] = graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| position[w] > position[v])
            .min_by_key(|&w| position[w])
            .unwrap_or(NONE);
    }
    // Group the vertices by parent (counting sort) so each parent's
    // neighborhood is marked once.
    let mut start = vec![0usize; n + 1];
    for &p in &parent {
        if p != NONE {
            start[p + 1] += 1;
        }
    }
    for i in 0..n {
        start[i + 1] += start[i];
    }
    let mut children = vec![0usize; start[n]];
    let mut cursor = start.clone();
    for (v, &p) in parent.iter().enumerate() {
        if p != NONE {
            children[cursor[p]] = v;
            cursor[p] += 1;
        }
    }
    let mut mark = vec![NONE; n];
    for p in 0..n {
        let kids = &children[start[p]..start[p + 1]];
        if kids.is_empty() {
            continue;
        }
        for &w in graph.neighbors(p) {
            mark[w] = p;
        }
        for &v in kids {
            let ok = graph
                .neighbors(v)
                .iter()
                .filter(|&&w| position[w] > position[v] && w != p)
                .all(|&w| mark[w] == p);
            if !ok {
                return false;
            }
        }
    }
    true
}

/// `ℓ` and forward-degree arrays for an ordering, both indexed by position.
pub fn compute_ell(graph: &Graph, sigma: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = sigma.len();
    let mut position = vec![0; n];
    for (i, &v) in sigma.iter().enumerate() {
        position[v] = i;
    }
    let mut ell = vec![0; n];
    let mut fdeg = vec![0; n];
    for (i, &v) in sigma.iter().enumerate() {
        let mut reach = i;
        let mut forward = 0;
        for &w in graph.neighbors(v) {
            let j = position[w];
            if j > i {
                forward += 1;
                reach = reach.max(j);
            }
        }
        ell[i] = reach;
        fdeg[i] = forward;
    }
    (ell, fdeg)
}

/// LexBFS+: ties go to the vertex appearing last in `previous`.
pub fn lex_bfs_plus(graph: &Graph, previous: &[usize]) -> Vec<usize> {
    let reversed: Vec<usize> = previous.iter().rev().copied().collect();
    lex_bfs(graph, &reversed)
}

/// Lexicographic breadth-first search by partition refinement.
///
/// Among vertices with equal labels the one earliest in `preference` is
/// visited first. Classes are contiguous runs of one doubly linked list; a
/// pivot's unvisited neighbors move, in preference order, into a fresh class
/// placed just before their old one, which keeps every class sorted by
/// preference and makes the next pivot simply the head of the list.
pub fn lex_bfs(graph: &Graph, preference: &[usize]) -> Vec<usize> {
    Sweeper::default().run(graph, preference)
}

/// Buffers for repeated LexBFS sweeps over graphs of one size.
#[derive(Default)]
struct Sweeper {
    offsets: Vec<usize>,
    cursor: Vec<usize>,
    by_rank: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
    class_of: Vec<usize>,
    visited: Vec<bool>,
    head: Vec<usize>,
    tail: Vec<usize>,
    size: Vec<usize>,
    split_stamp: Vec<usize>,
    split_into: Vec<usize>,
}

fn refill<T: Clone>(buf: &mut Vec<T>, len: usize, value: T) {
    buf.clear();
    buf.resize(len, value);
}

impl Sweeper {
    fn run(&mut self, graph: &Graph, preference: &[usize]) -> Vec<usize> {
        const NONE: usize = usize::MAX;
        let n = graph.n();
        if n == 0 {
            return Vec::new();
        }
        let Sweeper {
            offsets,
            cursor,
            by_rank,
            next,
            prev,
            class_of,
            visited,
            head,
            tail,
            size,
            split_stamp,
            split_into,
        } = self;

        // Adjacency re-sorted by preference rank, built by bucketing.
        offsets.clear();
        offsets.push(0);
        for v in 0..n {
            offsets.push(offsets[v] + graph.degree(v));
        }
        cursor.clear();
        cursor.extend_from_slice(&offsets[..n]);
        refill(by_rank, offsets[n], 0);
        for &u in preference {
            for &w in graph.neighbors(u) {
                by_rank[cursor[w]] = u;
                cursor[w] += 1;
            }
        }

        refill(next, n, NONE);
        refill(prev, n, NONE);
        for pair in preference.windows(2) {
            next[pair[0]] = pair[1];
            prev[pair[1]] = pair[0];
        }
        let mut list_head = preference[0];

        refill(class_of, n, 0);
        refill(visited, n, false);
        refill(head, 1, list_head);
        refill(tail, 1, preference[n - 1]);
        refill(size, 1, n);
        refill(split_stamp, 1, NONE);
        refill(split_into, 1, NONE);
        let mut order = Vec::with_capacity(n);

        for step in 0..n {
            let pivot = list_head;
            visited[pivot] = true;
            order.push(pivot);

            let c = class_of[pivot];
            size[c] -= 1;
            if size[c] > 0 {
                head[c] = next[pivot];
            }
            list_head = next[pivot];
            if list_head != NONE {
                prev[list_head] = NONE;
            }

            for &w in &by_rank[offsets[pivot]..offsets[pivot + 1]] {
                if visited[w] {
                    continue;
                }
                let old = class_of[w];
                if split_stamp[old] != step {
                    split_stamp[old] = step;
                    split_into[old] = head.len();
                    head.push(NONE);
                    tail.push(NONE);
                    size.push(0);
                    split_stamp.push(NONE);
                    split_into.push(NONE);
                }
                let fresh = split_into[old];

                // Detach w from its class bookkeeping.
                if size[old] > 1 {
                    if head[old] == w {
                        head[old] = next[w];
                    }
                    if tail[old] == w {
                        tail[old] = prev[w];
                    }
                }
                size[old] -= 1;

                // Relink w at the end of the fresh class, which sits right
                // before what remains of the old one.
                if size[fresh] == 0 {
                    if size[old] > 0 && head[old] != next[w] {
                        let anchor = head[old];
                        unlink(w, next, prev, &mut list_head);
                        insert_before(anchor, w, next, prev, &mut list_head);
                    }
                    head[fresh] = w;
                } else {
                    let anchor = tail[fresh];
                    if next[anchor] != w {
                        unlink(w, next, prev, &mut list_head);
                        insert_after(anchor, w, next, prev);
                    }
                }
                tail[fresh] = w;
                size[fresh] += 1;
                class_of[w] = fresh;
            }
        }
        order
    }

    /// LexBFS+ from `previous`: ties go to the vertex appearing last in it.
    fn run_plus(&mut self, graph: &Graph, previous: &[usize]) -> Vec<usize> {
        let reversed: Vec<usize> = previous.iter().rev().copied().collect();
        self.run(graph, &reversed)
    }
}

fn unlink(w: usize, next: &mut [usize], prev: &mut [usize], list_head: &mut usize) {
    const NONE: usize = usize::MAX;
    let (p, q) = (prev[w], next[w]);
    if p != NONE {
        next[p] = q;
    } else {
        *list_head = q;
    }
    if q != NONE {
        prev[q] = p;
    }
    next[w] = NONE;
    prev[w] = NONE;
}

fn insert_before(anchor: usize, w: usize, next: &mut [usize], prev: &mut [usize], list_head: &mut usize) {
    const NONE: usize = usize::MAX;
    let p = prev[anchor];
    prev[w] = p;
    next[w] = anchor;
    prev[anchor] = w;
    if p != NONE {
        next[p] = w;
    } else {
        *list_head = w;
    }
}

fn insert_after(anchor: usize, w: usize, next: &mut [usize], prev: &mut [usize]) {
    const NONE: usize = usize::MAX;
    let q = next[anchor];
    next[w] = q;
    prev[w] = anchor;
    next[anchor] = w;
    if q != NONE {
        prev[q] = w;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn paths_order_as_paths() {
        let p4 = generate::path(4);
        let ord = recognize_and_order(&p4).unwrap();
        assert!(ord.sigma == vec![0, 1, 2, 3] || ord.sigma == vec![3, 2, 1, 0]);
    }

    #[test]
    fn orderings_certify_on_the_original_labels() {
        for seed in 0..50 {
            let g = generate::random_proper_interval(30, 0.6, seed, true).unwrap();
            let ord = recognize_and_order(&g).unwrap();
            assert!(is_bco(&g, &ord.sigma));
            assert_eq!(BcOrdering::new(&g, ord.sigma.clone()).unwrap(), ord);
        }
    }

    #[test]
    fn complete_graphs_accept_every_order() {
        let k3 = generate::complete(3);
        assert!(recognize_and_order(&k3).is_ok());
        for sigma in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            assert!(is_bco(&k3, &sigma));
        }
    }

    #[test]
    fn rejects_non_proper_interval_graphs() {
        assert_eq!(recognize_and_order(&generate::cycle(4)), Err(Error::NotProperInterval));
        // The claw is an interval graph but not a proper one.
        assert_eq!(recognize_and_order(&generate::star(4)), Err(Error::NotProperInterval));
        assert_eq!(recognize_and_order(&Graph::empty(2)), Err(Error::Disconnected));
    }

    #[test]
    fn bco_check_examples() {
        let p4 = generate::path(4);
        assert!(is_bco(&p4, &[0, 1, 2, 3]));
        assert!(!is_bco(&p4, &[1, 0, 2, 3]));
        assert!(!is_bco(&p4, &[0, 1, 2]));
        assert!(!is_bco(&p4, &[0, 1, 1, 3]));
    }

    #[test]
    fn ell_examples() {
        let (ell, fdeg) = compute_ell(&generate::path(4), &[0, 1, 2, 3]);
        assert_eq!(ell, vec![1, 2, 3, 3]);
        assert_eq!(fdeg, vec![1, 1, 1, 0]);
        assert_eq!(compute_ell(&generate::complete(3), &[0, 1, 2]).0, vec![2, 2, 2]);
        assert_eq!(compute_ell(&generate::path(5), &[0, 1, 2, 3, 4]).0, vec![1, 2, 3, 4, 4]);
    }

    #[test]
    fn lex_bfs_respects_preference() {
        // On K_n every vertex ties, so the preference order comes back as is.
        let k4 = generate::complete(4);
        assert_eq!(lex_bfs(&k4, &[2, 0, 3, 1]), vec![2, 0, 3, 1]);
        assert_eq!(lex_bfs_plus(&k4, &[2, 0, 3, 1]), vec![1, 3, 0, 2]);
        // Neighbors of the pivot jump ahead of non-neighbors.
        let p4 = generate::path(4);
        assert_eq!(lex_bfs(&p4, &[1, 3, 0, 2]), vec![1, 0, 2, 3]);
    }
}
