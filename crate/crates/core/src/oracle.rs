//! Exhaustive minimum-set search.
//!
//! Subsets are tried by increasing cardinality, and within one cardinality in
//! lexicographic order of their sorted members; the first hit is returned, so
//! certificates are reproducible. The search walks a depth-first tree over
//! 64-bit vertex masks and cuts a branch as soon as some vertex can no longer
//! be covered by any later choice.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::verify::Kind;

/// Hard ceiling imposed by the 64-bit mask representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug)]
pub struct OracleOptions {
    /// Graphs above this many vertices are refused with [`Error::TooLarge`].
    pub limit: usize,
    /// Prune with the pendant-vertex necessary condition (NTD and total only).
    pub pendant_pruning: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            limit: 24,
            pendant_pruning: true,
        }
    }
}

impl OracleOptions {
    pub fn with_limit(limit: usize) -> Self {
        OracleOptions {
            limit,
            ..OracleOptions::default()
        }
    }
}

/// `⌈n / (Δ + 1)⌉`, a lower bound on γ and hence on γ_nt and γ_t.
pub fn lower_bound(graph: &Graph, _kind: Kind) -> usize {
    graph.n().div_ceil(graph.max_degree() + 1)
}

/// Minimum-cardinality set satisfying `kind`, lexicographically first.
pub fn exact_min(graph: &Graph, kind: Kind, options: &OracleOptions) -> Result<(usize, VertexSet)> {
    exact_min_with_required(graph, kind, &VertexSet::new(graph.n()), options)
}

/// Minimum-cardinality set satisfying `kind` among those containing `required`.
pub fn exact_min_with_required(
    graph: &Graph,
    kind: Kind,
    required: &VertexSet,
    options: &OracleOptions,
) -> Result<(usize, VertexSet)> {
    let search = Search::new(graph, kind, required, options)?;
    let start = lower_bound(graph, kind).max(required.len());
    for k in start..=graph.n() {
        let mut found = None;
        search.run(k, &mut |mask| {
            found = Some(mask);
            false
        });
        if let Some(mask) = found {
            return Ok((k, mask_to_set(graph.n(), mask)));
        }
    }
    Err(Error::Infeasible)
}

/// Every minimum-cardinality set satisfying `kind`, in lexicographic order.
pub fn all_minimum(graph: &Graph, kind: Kind, options: &OracleOptions) -> Result<Vec<VertexSet>> {
    let (k, _) = exact_min(graph, kind, options)?;
    let search = Search::new(graph, kind, &VertexSet::new(graph.n()), options)?;
    let mut out = Vec::new();
    search.run(k, &mut |mask| {
        out.push(mask_to_set(graph.n(), mask));
        true
    });
    Ok(out)
}

/// Every set of any size satisfying `kind`. Exponential; meant for graphs of
/// a dozen vertices or so.
pub fn all_satisfying(graph: &Graph, kind: Kind, options: &OracleOptions) -> Result<Vec<VertexSet>> {
    let search = Search::new(graph, kind, &VertexSet::new(graph.n()), options)?;
    let mut out = Vec::new();
    for k in 0..=graph.n() {
        search.run(k, &mut |mask| {
            out.push(mask_to_set(graph.n(), mask));
            true
        });
    }
    Ok(out)
}

fn mask_to_set(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

struct PendantRule {
    leaf: usize,
    support_closed: u64,
}

struct Search {
    n: usize,
    kind: Kind,
    all: u64,
    max_closed: u32,
    open: Vec<u64>,
    closed: Vec<u64>,
    /// `cover[v]`: the masks a chosen `v` contributes to coverage.
    cover: Vec<u64>,
    /// `expired[s]`: vertices whose every possible coverer is below `s`.
    expired: Vec<u64>,
    /// Pendant rules bucketed by the index after which they are decided.
    pendant_by_deadline: Vec<Vec<PendantRule>>,
    required: u64,
}

impl Search {
    fn new(graph: &Graph, kind: Kind, required: &VertexSet, options: &OracleOptions) -> Result<Search> {
        let n = graph.n();
        let limit = options.limit.min(MAX_VERTICES);
        if n > limit {
            return Err(Error::TooLarge { n, limit });
        }
        if kind != Kind::Dominating {
            if let Some(v) = graph.isolated_vertex() {
                return Err(Error::IsolatedVertexInInput(v));
            }
        }
        if let Some(v) = required.iter().find(|&v| v >= n) {
            return Err(Error::IndexOutOfRange { vertex: v, n });
        }
        let open: Vec<u64> = graph
            .vertices()
            .map(|v| graph.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        let closed: Vec<u64> = open.iter().enumerate().map(|(v, m)| m | 1 << v).collect();
        let cover = match kind {
            Kind::Total => open.clone(),
            _ => closed.clone(),
        };
        // A vertex is coverable only by members of its (open or closed)
        // neighborhood; once the next choice is past the largest of them the
        // vertex must already be covered.
        let mut expired = vec![0u64; n + 1];
        for v in 0..n {
            let coverers = match kind {
                Kind::Total => open[v],
                _ => closed[v],
            };
            let last = 63 - coverers.leading_zeros() as usize;
            for slot in expired.iter_mut().skip(last + 1) {
                *slot |= 1 << v;
            }
        }
        let mut pendant_by_deadline: Vec<Vec<PendantRule>> = (0..n).map(|_| Vec::new()).collect();
        if options.pendant_pruning && kind != Kind::Dominating {
            for leaf in 0..n {
                if graph.degree(leaf) == 1 {
                    let support = graph.neighbors(leaf)[0];
                    let support_closed = closed[support];
                    let deadline = 63 - support_closed.leading_zeros() as usize;
                    pendant_by_deadline[deadline].push(PendantRule { leaf, support_closed });
                }
            }
        }
        let required_mask = required.iter().fold(0u64, |m, v| m | 1 << v);
        Ok(Search {
            n,
            kind,
            all: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            max_closed: (graph.max_degree() + 1) as u32,
            open,
            closed,
            cover,
            expired,
            pendant_by_deadline,
            required: required_mask,
        })
    }

    /// Visits every accepted `k`-subset in lexicographic order; the visitor
    /// returns `false` to stop.
    fn run(&self, k: usize, visit: &mut dyn FnMut(u64) -> bool) {
        if k > self.n || (self.required.count_ones() as usize) > k {
            return;
        }
        self.descend(0, k, 0, 0, visit);
    }

    fn descend(&self, start: usize, left: usize, chosen: u64, covered: u64, visit: &mut dyn FnMut(u64) -> bool) -> bool {
        if left == 0 {
            if self.required & !chosen == 0 && self.accepts(chosen) {
                return visit(chosen);
            }
            return true;
        }
        let uncovered = (self.all & !covered).count_ones();
        if uncovered > left as u32 * self.max_closed {
            return true;
        }
        let must_have = (self.required & !chosen).count_ones() as usize;
        for v in start..=self.n - left {
            // Skipping over a required vertex closes every deeper branch.
            if v > start && self.required >> (v - 1) & 1 == 1 {
                break;
            }
            let rest_required = must_have - (self.required >> v & 1) as usize;
            if rest_required > left - 1 {
                continue;
            }
            let next_chosen = chosen | 1 << v;
            let next_covered = covered | self.cover[v];
            if self.expired[v + 1] & !next_covered != 0 {
                continue;
            }
            if !self.pendant_rules_hold(start, v + 1, next_chosen) {
                continue;
            }
            if !self.descend(v + 1, left - 1, next_chosen, next_covered, visit) {
                return false;
            }
        }
        true
    }

    /// Checks pendant rules whose deadline falls in `[from, to)`; choosing
    /// from index `to` on can no longer change them.
    fn pendant_rules_hold(&self, from: usize, to: usize, chosen: u64) -> bool {
        self.pendant_by_deadline[from.min(self.n)..to.min(self.n)]
            .iter()
            .flatten()
            .all(|rule| chosen >> rule.leaf & 1 == 1 || (rule.support_closed & chosen).count_ones() >= 2)
    }

    fn accepts(&self, chosen: u64) -> bool {
        let mut open_nb = 0u64;
        let mut closed_nb = 0u64;
        let mut rest = chosen;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            open_nb |= self.open[v];
            closed_nb |= self.closed[v];
        }
        match self.kind {
            Kind::Dominating => closed_nb == self.all,
            Kind::Total => open_nb == self.all,
            Kind::Ntd => {
                if closed_nb != self.all {
                    return false;
                }
                let mut rest = open_nb;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if self.open[v] & open_nb == 0 {
                        return false;
                    }
                }
                true
            }
        }
    }
}
