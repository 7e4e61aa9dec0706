//! Immutable simple undirected graphs and vertex subsets.
//!
//! Vertices are the dense indices `0..n`. Adjacency is stored in compressed
//! sparse row form with every neighbor list sorted, which keeps neighborhood
//! scans linear and edge queries logarithmic.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph: no loops, no parallel edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Malformed input is rejected rather than repaired: an endpoint outside
    /// `0..n`, a loop, or the same edge listed twice (in either orientation)
    /// is an error naming the offending pair.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::IndexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..n].to_vec();
        let mut targets = vec![0usize; offsets[n]];
        for &(u, v) in edges {
            targets[cursor[u]] = v;
            cursor[u] += 1;
            targets[cursor[v]] = u;
            cursor[v] += 1;
        }
        for v in 0..n {
            let list = &mut targets[offsets[v]..offsets[v + 1]];
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (v.min(w[0]), v.max(w[0]));
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Graph { offsets, targets })
    }

    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Sorted open neighborhood of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// Least-index vertex with no neighbor, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        self.vertices().find(|&v| self.degree(v) == 0)
    }

    /// `N(S)`: every vertex adjacent to some member of `set`.
    ///
    /// A member of `set` belongs to the result only if it has a neighbor in
    /// `set`.
    pub fn open_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for u in set.iter() {
            for &w in self.neighbors(u) {
                out.insert(w);
            }
        }
        out
    }

    /// `N[S] = N(S) ∪ S`.
    pub fn closed_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.open_neighborhood(set);
        for u in set.iter() {
            out.insert(u);
        }
        out
    }

    /// Isomorphic copy in which vertex `i` is the old vertex `order[i]`.
    ///
    /// `order` must be a permutation of `0..n`. Neighbor lists come out sorted
    /// without a sort, since each is filled in increasing new index.
    pub fn relabel(&self, order: &[usize]) -> Graph {
        let n = self.n();
        assert_eq!(order.len(), n, "relabel needs a permutation of the vertices");
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            assert!(rank[v] == usize::MAX, "relabel needs a permutation of the vertices");
            rank[v] = i;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for &v in order {
            offsets.push(offsets.last().unwrap() + self.degree(v));
        }
        let mut cursor = offsets[..n].to_vec();
        let mut targets = vec![0usize; self.targets.len()];
        for (i, &v) in order.iter().enumerate() {
            for &w in self.neighbors(v) {
                let r = rank[w];
                targets[cursor[r]] = i;
                cursor[r] += 1;
            }
        }
        Graph { offsets, targets }
    }

    /// Subgraph induced by `set`, with the map from old to new indices.
    ///
    /// New indices follow the order of the old ones.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut map = vec![None; self.n()];
        for (new, old) in set.iter().enumerate() {
            map[old] = Some(new);
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .filter_map(|(u, v)| Some((map[u]?, map[v]?)))
            .collect();
        let graph = Graph::build(set.len(), &edges)?;
        Ok((graph, map))
    }

    /// Connected components, each sorted, listed by least member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        let mut queue = VecDeque::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            let mut part = Vec::new();
            while let Some(u) = queue.pop_front() {
                part.push(u);
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
    }

    /// Breadth-first visit order of the component of `root`, neighbors taken
    /// in increasing index.
    pub fn bfs_order(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n()];
        let mut order = vec![root];
        seen[root] = true;
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
        order
    }

    /// Breadth-first visit order from `root` together with the component of
    /// `root` renumbered in that order, built in the same single pass.
    ///
    /// A vertex's neighbors all have ranks by the time it leaves the queue,
    /// so its new row can be written out right away.
    pub fn breadth_first_copy(&self, root: usize) -> (Vec<usize>, Graph) {
        let mut rank = vec![usize::MAX; self.n()];
        let mut order = vec![root];
        rank[root] = 0;
        let mut offsets = vec![0];
        let mut targets = Vec::with_capacity(self.targets.len());
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            let row_start = targets.len();
            for &w in self.neighbors(u) {
                if rank[w] == usize::MAX {
                    rank[w] = order.len();
                    order.push(w);
                }
                targets.push(rank[w]);
            }
            targets[row_start..].sort_unstable();
            offsets.push(targets.len());
        }
        (order, Graph { offsets, targets })
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// A proper 2-coloring, if the graph is bipartite.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edge_list())
            .finish()
    }
}

/// A subset of `0..n` with constant-time membership and a cached size.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
    len: usize,
}

impl VertexSet {
    pub fn new(n: usize) -> VertexSet {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(64)],
            len: 0,
        }
    }

    pub fn full(n: usize) -> VertexSet {
        VertexSet::from_iter(n, 0..n)
    }

    /// Panics if a member is not below `n`.
    pub fn from_iter(n: usize, members: impl IntoIterator<Item = usize>) -> VertexSet {
        let mut set = VertexSet::new(n);
        for v in members {
            set.insert(v);
        }
        set
    }

    /// Like [`VertexSet::from_iter`] but reports out-of-range members.
    pub fn try_from_iter(n: usize, members: impl IntoIterator<Item = usize>) -> Result<VertexSet> {
        let mut set = VertexSet::new(n);
        for v in members {
            if v >= n {
                return Err(Error::IndexOutOfRange { vertex: v, n });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Size of the ground set.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Returns whether `v` was newly inserted.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.n, "vertex {v} outside a set over {} vertices", self.n);
        let (w, b) = (v / 64, 1u64 << (v % 64));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        self.len += fresh as usize;
        fresh
    }

    /// Returns whether `v` was present.
    pub fn remove(&mut self, v: usize) -> bool {
        if !self.contains(v) {
            return false;
        }
        self.words[v / 64] &= !(1u64 << (v % 64));
        self.len -= 1;
        true
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.n, other.n, "sets over different universes");
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        let len = words.iter().map(|w| w.count_ones() as usize).sum();
        VertexSet {
            n: self.n,
            words,
            len,
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
