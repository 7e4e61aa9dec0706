//! Linear-time minimum NTD-set on connected proper interval graphs.
//!
//! The solver walks a certified BCO once. Every guard is an O(1) lookup in
//! the reach array `ell`, the forward-degree array `fdeg`, or the `dom`
//! flags, so the walk costs O(n) on top of the O(n + m) ordering.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::pig::ordering::{recognize_and_order, BcOrdering};

/// One iteration of the solver. Indices are 0-based positions in `σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub iteration: usize,
    /// Position considered in this iteration.
    pub position: usize,
    /// Case number, 1 to 5.
    pub case: u8,
    /// Positions added to the solution, in the order they were added.
    pub picked: Vec<usize>,
    /// Position considered next, or `None` when the solver returned.
    pub next: Option<usize>,
}

/// The full sequence of solver decisions.
///
/// The text form has one line per iteration, with 1-based positions:
///
/// ```text
/// iter=1 i=1 case=1 picked=2,4 next=7
/// iter=2 i=7 case=4 picked=7 next=return
/// ```
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolverTrace {
    pub steps: Vec<TraceStep>,
}

impl SolverTrace {
    /// Union of every picked position, mapped through `sigma` to vertices.
    pub fn picked_vertices(&self, sigma: &[usize]) -> VertexSet {
        VertexSet::from_iter(
            sigma.len(),
            self.steps.iter().flat_map(|s| s.picked.iter().map(|&p| sigma[p])),
        )
    }

    /// Whether the considered position strictly increases and the trace
    /// stops with a Case 4 return or a position past the end.
    pub fn terminates_properly(&self, n: usize) -> bool {
        let increasing = self.steps.windows(2).all(|w| w[0].position < w[1].position);
        let linked = self
            .steps
            .windows(2)
            .all(|w| w[0].next == Some(w[1].position));
        let ends = match self.steps.last() {
            None => true,
            Some(last) => match last.next {
                None => last.case == 4,
                Some(next) => next >= n,
            },
        };
        increasing && linked && ends
    }
}

impl fmt::Display for SolverTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            let picked: Vec<String> = step.picked.iter().map(|p| (p + 1).to_string()).collect();
            let next = match step.next {
                Some(p) => (p + 1).to_string(),
                None => "return".to_string(),
            };
            writeln!(
                f,
                "iter={} i={} case={} picked={} next={}",
                step.iteration,
                step.position + 1,
                step.case,
                picked.join(","),
                next
            )?;
        }
        Ok(())
    }
}

impl FromStr for SolverTrace {
    type Err = Error;

    fn from_str(text: &str) -> Result<SolverTrace> {
        let mut steps = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            steps.push(parse_step(line).map_err(|message| Error::Parse {
                line: idx + 1,
                message,
            })?);
        }
        Ok(SolverTrace { steps })
    }
}

fn parse_step(line: &str) -> std::result::Result<TraceStep, String> {
    let mut fields = [None; 5];
    const KEYS: [&str; 5] = ["iter", "i", "case", "picked", "next"];
    for token in line.split_whitespace() {
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, found `{token}`"))?;
        let slot = KEYS
            .iter()
            .position(|&k| k == key)
            .ok_or_else(|| format!("unknown key `{key}`"))?;
        fields[slot] = Some(value);
    }
    let get = |k: usize| fields[k].ok_or_else(|| format!("missing `{}`", KEYS[k]));
    let one_based = |s: &str| -> std::result::Result<usize, String> {
        match s.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(format!("bad position `{s}`")),
        }
    };
    let iteration = get(0)?
        .parse()
        .map_err(|_| format!("bad iteration `{}`", fields[0].unwrap_or("")))?;
    let position = one_based(get(1)?)?;
    let case: u8 = match get(2)?.parse() {
        Ok(c @ 1..=5) => c,
        _ => return Err(format!("bad case `{}`", fields[2].unwrap_or(""))),
    };
    let picked_text = get(3)?;
    let picked = if picked_text.is_empty() {
        Vec::new()
    } else {
        picked_text.split(',').map(one_based).collect::<std::result::Result<_, _>>()?
    };
    let next = match get(4)? {
        "return" => None,
        s => Some(one_based(s)?),
    };
    Ok(TraceStep {
        iteration,
        position,
        case,
        picked,
        next,
    })
}

/// Minimum NTD-set of a connected proper interval graph, with its trace.
///
/// Graphs on one or two vertices return every vertex and an empty trace.
pub fn mntds_pig(graph: &Graph) -> Result<(VertexSet, SolverTrace)> {
    let n = graph.n();
    if n == 0 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    if n <= 2 {
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        return Ok((VertexSet::full(n), SolverTrace::default()));
    }
    let ordering = recognize_and_order(graph)?;
    Ok(solve_ordered(graph, &ordering))
}

/// Runs the solver on an already certified ordering of a connected graph
/// with at least three vertices.
pub fn solve_ordered(graph: &Graph, ordering: &BcOrdering) -> (VertexSet, SolverTrace) {
    debug_assert_eq!(graph.n(), ordering.len());
    let mut walk = Walk::new(ordering);
    walk.run();
    (walk.solution, walk.trace)
}

/// Minimum NTD-set of a proper interval graph that may be disconnected: each
/// component is solved on its own and the answers are combined.
pub fn mntds_pig_components(graph: &Graph) -> Result<VertexSet> {
    if let Some(v) = graph.isolated_vertex() {
        return Err(Error::IsolatedVertexInInput(v));
    }
    let mut result = VertexSet::new(graph.n());
    for component in graph.components() {
        let members = VertexSet::from_iter(graph.n(), component.iter().copied());
        let (sub, map) = graph.induced_subgraph(&members)?;
        let back: Vec<usize> = {
            let mut back = vec![0; sub.n()];
            for (old, new) in map.iter().enumerate() {
                if let Some(new) = new {
                    back[*new] = old;
                }
            }
            back
        };
        let (part, _) = mntds_pig(&sub)?;
        for v in part.iter() {
            result.insert(back[v]);
        }
    }
    Ok(result)
}

struct Walk<'a> {
    ord: &'a BcOrdering,
    /// `first[p]`: earliest position adjacent to `p`, or `p` itself.
    first: Vec<usize>,
    dom: Vec<bool>,
    solution: VertexSet,
    trace: SolverTrace,
}

impl<'a> Walk<'a> {
    fn new(ord: &'a BcOrdering) -> Walk<'a> {
        let mut first = Vec::with_capacity(ord.len());
        let mut lo = 0;
        for p in 0..ord.len() {
            while ord.ell[lo] < p {
                lo += 1;
            }
            first.push(lo);
        }
        Walk {
            ord,
            first,
            dom: vec![false; ord.len()],
            solution: VertexSet::new(ord.len()),
            trace: SolverTrace::default(),
        }
    }

    fn n(&self) -> usize {
        self.ord.len()
    }

    fn add(&mut self, position: usize) {
        let v = self.ord.sigma[position];
        if self.solution.insert(v) {
            // Closed neighborhoods are runs of consecutive positions.
            let (lo, hi) = (self.first[position], self.ord.ell[position]);
            self.dom[lo..=hi].fill(true);
        }
    }

    /// Index considered after picking position `x`.
    ///
    /// Jumps past `ell[x]` when `x` has at least two forward neighbors or its
    /// two sequence neighbors are adjacent; otherwise stops at `ell[x]`, or
    /// moves one step when `x` has no forward neighbor.
    fn after(&self, x: usize) -> usize {
        let ell = &self.ord.ell;
        let bridged = x >= 1 && x + 1 < self.n() && ell[x - 1] >= x + 1;
        if self.ord.fdeg[x] >= 2 || bridged {
            ell[x] + 1
        } else if ell[x] > x {
            ell[x]
        } else {
            x + 1
        }
    }

    fn record(&mut self, position: usize, case: u8, picked: Vec<usize>, next: Option<usize>) {
        let iteration = self.trace.steps.len() + 1;
        self.trace.steps.push(TraceStep {
            iteration,
            position,
            case,
            picked,
            next,
        });
    }

    fn run(&mut self) {
        let n = self.n();
        let ell = &self.ord.ell;
        let fdeg = &self.ord.fdeg;
        let mut i = 0;

        // The first vertex is pendant exactly when it has one neighbor, which
        // in a BCO is the second vertex.
        if fdeg[0] == 1 {
            let reach2 = ell[1];
            let reach3 = ell[2];
            debug_assert!(reach2 > 1, "the support of a pendant first vertex reaches further");
            if ell[reach2] == ell[reach3] {
                self.add(1);
                self.add(reach2);
                let next = ell[reach2] + 1;
                self.record(0, 1, vec![1, reach2], Some(next));
                i = next;
            } else {
                self.add(0);
                self.add(reach3);
                let next = self.after(reach3);
                self.record(0, 2, vec![0, reach3], Some(next));
                i = next;
            }
        }

        while i < n {
            let j = ell[i];
            if !self.dom[i] {
                self.add(j);
                let next = self.after(j);
                self.record(i, 3, vec![j], Some(next));
                i = next;
            } else if fdeg[i] == 0 || (fdeg[i] == 1 && j == n - 1) {
                self.add(i);
                self.record(i, 4, vec![i], None);
                return;
            } else {
                let p = ell[i + 1];
                self.add(p);
                let next = self.after(p);
                self.record(i, 5, vec![p], Some(next));
                i = next;
            }
        }
    }
}
