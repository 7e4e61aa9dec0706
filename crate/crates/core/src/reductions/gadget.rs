//! Gadgets for the degree-3 construction and the search that certifies them.
//!
//! A gadget is a small graph over fixed local roles. Its ports are the local
//! vertices that also carry host edges. A [`GadgetContract`] lists what the
//! construction needs from a gadget; [`gadget_search`] enumerates edge sets
//! by increasing size, then lexicographically, and returns the first one
//! meeting every property.
//!
//! Two families of checks are run:
//!
//! * local checks enumerate every subset `X` of the gadget that could be the
//!   trace of an NTD-set on it, assuming the most helpful possible outside
//!   world at the ports, so they hold for every host;
//! * forward checks build the full construction over each probe host and
//!   confirm that the forward rules produce NTD-sets for every dominating set
//!   of the host.

use crate::error::{Error, Result};
use crate::generate;
use crate::graph::{Graph, VertexSet};
use crate::verify;

use super::subcubic::{build_subcubic_with, forward_with};
use super::Role;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetKind {
    /// Hung off a host vertex of degree at most 2 by one edge.
    Attachment,
    /// Replaces a host vertex of degree 3 by two ports.
    Split,
}

/// A gadget over local vertices `0..roles.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetSpec {
    pub kind: GadgetKind,
    pub roles: Vec<Role>,
    /// Local vertices that carry host edges.
    pub ports: Vec<usize>,
    /// Local edges, each `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl GadgetSpec {
    pub fn size(&self) -> usize {
        self.roles.len()
    }

    /// Local index of `role`.
    pub fn local(&self, role: Role) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }

    pub fn edge_names(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|&(i, j)| (self.roles[i].to_string(), self.roles[j].to_string()))
            .collect()
    }

    /// The attachment gadget: port `v` and `x1..x4`, with `v - x1` and the
    /// diamond `x1 x2 x3 x4` minus `x1 x4`.
    pub fn attachment() -> GadgetSpec {
        GadgetSpec {
            kind: GadgetKind::Attachment,
            roles: attachment_roles(),
            ports: vec![0],
            edges: vec![(0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)],
        }
    }

    /// The split gadget: ports `v1, v2` and `y1..y6`, forming the path
    /// `y5 - y3 - y1 - y2 - y4 - y6` with `v1` on `y1` and `v2` on `y2`.
    pub fn split() -> GadgetSpec {
        GadgetSpec {
            kind: GadgetKind::Split,
            roles: split_roles(),
            ports: vec![0, 1],
            edges: vec![(0, 2), (1, 3), (2, 3), (2, 4), (3, 5), (4, 6), (5, 7)],
        }
    }
}

fn attachment_roles() -> Vec<Role> {
    std::iter::once(Role::Original)
        .chain((1..=4).map(Role::Attach))
        .collect()
}

fn split_roles() -> Vec<Role> {
    [Role::Split(1), Role::Split(2)]
        .into_iter()
        .chain((1..=6).map(Role::Inner))
        .collect()
}

/// Properties a gadget must have.
#[derive(Clone, Debug)]
pub struct GadgetContract {
    pub name: String,
    pub kind: GadgetKind,
    pub roles: Vec<Role>,
    pub ports: Vec<usize>,
    /// Edges every candidate contains.
    pub required: Vec<(usize, usize)>,
    /// Per local vertex, the most gadget edges it may carry.
    pub caps: Vec<usize>,
    /// Every NTD trace on the gadget has at least this many members.
    pub min_rho: usize,
    /// Traces containing a port have at least this many members; smaller
    /// traces never dominate every port from inside.
    pub min_rho_with_port: usize,
    /// Hosts over which the forward rules are checked.
    pub probes: Vec<(String, Graph)>,
    /// Gadget used for the other vertex class while probing.
    pub partner: Option<GadgetSpec>,
}

impl GadgetContract {
    /// Contract for the attachment gadget.
    ///
    /// The port gains exactly one edge, every gadget vertex stays within
    /// degree 3, each trace has a member, traces holding the port have two,
    /// and a single member never dominates the port.
    pub fn attachment() -> GadgetContract {
        GadgetContract {
            name: "attachment".into(),
            kind: GadgetKind::Attachment,
            roles: attachment_roles(),
            ports: vec![0],
            required: vec![(0, 1)],
            caps: vec![1, 3, 3, 3, 3],
            min_rho: 1,
            min_rho_with_port: 2,
            probes: probe_hosts().into_iter().filter(|(_, g)| g.max_degree() <= 2).collect(),
            partner: None,
        }
    }

    /// Contract for the split gadget.
    ///
    /// `v1` keeps two host edges and gains one gadget edge, `v2` keeps one
    /// and gains at most two. Each trace has three members, traces holding a
    /// port have four, and three members never dominate both ports.
    pub fn split() -> GadgetContract {
        GadgetContract {
            name: "split".into(),
            kind: GadgetKind::Split,
            roles: split_roles(),
            ports: vec![0, 1],
            required: vec![(0, 2), (1, 3), (2, 4), (3, 5)],
            caps: vec![1, 2, 3, 3, 3, 3, 3, 3],
            min_rho: 3,
            min_rho_with_port: 4,
            probes: probe_hosts().into_iter().filter(|(_, g)| g.max_degree() == 3).collect(),
            partner: Some(GadgetSpec::attachment()),
        }
    }

    fn size(&self) -> usize {
        self.roles.len()
    }
}

/// Connected hosts of maximum degree at most 3 on up to four vertices.
pub fn probe_hosts() -> Vec<(String, Graph)> {
    vec![
        ("K1".into(), generate::path(1)),
        ("K2".into(), generate::path(2)),
        ("P3".into(), generate::path(3)),
        ("K3".into(), generate::complete(3)),
        ("P4".into(), generate::path(4)),
        ("K1,3".into(), generate::star(4)),
        ("C4".into(), generate::cycle(4)),
        ("paw".into(), generate::paw()),
        ("diamond".into(), generate::diamond()),
        ("K4".into(), generate::complete(4)),
    ]
}

/// First gadget, in enumeration order, that meets `contract`.
pub fn gadget_search(contract: &GadgetContract) -> Result<GadgetSpec> {
    let k = contract.size();
    if k > 16 {
        return Err(Error::BadParams("gadgets are limited to 16 local vertices".into()));
    }
    let mut degree = vec![0usize; k];
    for &(i, j) in &contract.required {
        degree[i] += 1;
        degree[j] += 1;
    }
    if degree.iter().zip(&contract.caps).any(|(d, c)| d > c) {
        return Err(Error::NoConformingGadget(contract.name.clone()));
    }
    let free: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .filter(|p| !contract.required.contains(p))
        .filter(|&(i, j)| degree[i] < contract.caps[i] && degree[j] < contract.caps[j])
        .collect();

    for size in 0..=free.len() {
        let mut chosen = Vec::with_capacity(size);
        if let Some(layout) = combos(contract, &free, size, 0, &mut degree, &mut chosen) {
            return Ok(layout);
        }
    }
    Err(Error::NoConformingGadget(contract.name.clone()))
}

/// Lexicographic walk over `size`-subsets of `free[from..]` within the caps.
fn combos(
    contract: &GadgetContract,
    free: &[(usize, usize)],
    size: usize,
    from: usize,
    degree: &mut [usize],
    chosen: &mut Vec<(usize, usize)>,
) -> Option<GadgetSpec> {
    if chosen.len() == size {
        let mut edges: Vec<(usize, usize)> = contract.required.iter().chain(chosen.iter()).copied().collect();
        edges.sort_unstable();
        let layout = GadgetSpec {
            kind: contract.kind,
            roles: contract.roles.clone(),
            ports: contract.ports.clone(),
            edges,
        };
        return conforms(contract, &layout).then_some(layout);
    }
    let remaining = size - chosen.len();
    for idx in from..free.len() {
        if free.len() - idx < remaining {
            break;
        }
        let (i, j) = free[idx];
        if degree[i] == contract.caps[i] || degree[j] == contract.caps[j] {
            continue;
        }
        degree[i] += 1;
        degree[j] += 1;
        chosen.push((i, j));
        let found = combos(contract, free, size, idx + 1, degree, chosen);
        chosen.pop();
        degree[i] -= 1;
        degree[j] -= 1;
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Whether `layout` meets every local and forward property of `contract`.
pub fn conforms(contract: &GadgetContract, layout: &GadgetSpec) -> bool {
    local_properties_hold(contract, layout) && forward_rules_hold(contract, layout)
}

fn local_properties_hold(contract: &GadgetContract, layout: &GadgetSpec) -> bool {
    let k = layout.size();
    let mut adj = vec![0u32; k];
    for &(i, j) in &layout.edges {
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
    }
    let port_mask: u32 = layout.ports.iter().map(|&p| 1u32 << p).sum();
    for x in 0u32..(1 << k) {
        if !is_local_trace(&adj, port_mask, x) {
            continue;
        }
        let rho = x.count_ones() as usize;
        if rho < contract.min_rho {
            return false;
        }
        if x & port_mask != 0 && rho < contract.min_rho_with_port {
            return false;
        }
        if rho < contract.min_rho_with_port {
            let inside = layout.ports.iter().all(|&p| x & (1 << p) != 0 || adj[p] & x != 0);
            if inside {
                return false;
            }
        }
    }
    true
}

/// Whether `x` could be the trace on the gadget of an NTD-set of some host.
///
/// Ports are assumed to be dominated from outside and to have an outside
/// neighbor in the open neighborhood of the set; interior vertices see only
/// the gadget.
fn is_local_trace(adj: &[u32], port_mask: u32, x: u32) -> bool {
    let k = adj.len();
    let mut reached = port_mask;
    for (w, &a) in adj.iter().enumerate() {
        if a & x != 0 {
            reached |= 1 << w;
        }
    }
    for (w, &a) in adj.iter().enumerate().take(k) {
        let bit = 1u32 << w;
        if port_mask & bit != 0 {
            continue;
        }
        if x & bit == 0 && reached & bit == 0 {
            return false;
        }
        if reached & bit != 0 && a & reached == 0 {
            return false;
        }
    }
    true
}

fn forward_rules_hold(contract: &GadgetContract, layout: &GadgetSpec) -> bool {
    let (attach, split) = match contract.kind {
        GadgetKind::Attachment => (layout.clone(), contract.partner.clone().unwrap_or_else(GadgetSpec::split)),
        GadgetKind::Split => (contract.partner.clone().unwrap_or_else(GadgetSpec::attachment), layout.clone()),
    };
    for (_, host) in &contract.probes {
        let Ok(artifact) = build_subcubic_with(host, &attach, &split) else {
            return false;
        };
        let n = host.n();
        for mask in 1u32..(1 << n) {
            let d = VertexSet::from_iter(n, (0..n).filter(|&v| mask & (1 << v) != 0));
            if !verify::is_dominating(host, &d).map(|r| r.pass).unwrap_or(false) {
                continue;
            }
            let Ok(nd) = forward_with(&artifact, &d) else {
                return false;
            };
            match verify::is_ntd(&artifact.output, &nd) {
                Ok(report) if report.pass => {}
                _ => return false,
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_gadgets_conform() {
        assert!(conforms(&GadgetContract::attachment(), &GadgetSpec::attachment()));
        assert!(conforms(&GadgetContract::split(), &GadgetSpec::split()));
    }

    #[test]
    fn search_reproduces_the_canonical_gadgets() {
        assert_eq!(gadget_search(&GadgetContract::attachment()).unwrap(), GadgetSpec::attachment());
        assert_eq!(gadget_search(&GadgetContract::split()).unwrap(), GadgetSpec::split());
    }

    #[test]
    fn the_star_plus_edge_attachment_fails() {
        // x2 joined to x1, x3, x4, plus x3 x4.
        let candidate = GadgetSpec {
            edges: vec![(0, 1), (1, 2), (2, 3), (2, 4), (3, 4)],
            ..GadgetSpec::attachment()
        };
        assert!(!conforms(&GadgetContract::attachment(), &candidate));
    }

    #[test]
    fn impossible_contracts_are_reported() {
        let contract = GadgetContract {
            name: "rho at least 9".into(),
            min_rho: 9,
            min_rho_with_port: 9,
            ..GadgetContract::split()
        };
        assert_eq!(
            gadget_search(&contract),
            Err(Error::NoConformingGadget("rho at least 9".into()))
        );
    }

    #[test]
    fn degrees_stay_within_three() {
        for layout in [GadgetSpec::attachment(), GadgetSpec::split()] {
            let g = Graph::build(layout.size(), &layout.edges).unwrap();
            assert!(g.max_degree() <= 3);
        }
        let split = Graph::build(8, &GadgetSpec::split().edges).unwrap();
        assert_eq!(split.degree(0), 1);
        assert!(split.degree(1) <= 2);
    }
}
