//! Deterministic graph generators.
//!
//! Every random generator takes an explicit seed and uses ChaCha8, so a
//! `(kind, parameters, seed)` triple always names the same graph.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::build(n, &edges).expect("path edges are simple")
}

/// Cycle on `n ≥ 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Graph::build(n, &edges).expect("cycle edges are simple")
}

/// Star on `n` vertices: center 0 joined to `1..n`.
pub fn star(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::build(n, &edges).expect("star edges are simple")
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::build(n, &edges).expect("complete edges are simple")
}

/// Triangle 0-1-2 with pendant 3 attached to 2.
pub fn paw() -> Graph {
    Graph::build(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
}

/// `K4` minus the edge 0-3.
pub fn diamond() -> Graph {
    Graph::build(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParams(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges)
}

/// Connected random graph: a random recursive tree plus independent extra
/// edges with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParams(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adjacent = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        adjacent[u][v] = true;
        edges.push((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !adjacent[u][v] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges)
}

/// Connected proper interval graph sampled through its ordering.
///
/// A nondecreasing reach array `ℓ` with `ℓ(i) ≥ i + 1` (for all but the last
/// position) is drawn first; position `i` is then joined to every position in
/// `i+1..=ℓ(i)`. Such an ordering is bi-compatible by construction. Each
/// reach extends the forced `i + 1` by a geometric number of extra steps with
/// continuation probability `density`, so the expected edge count is linear
/// in `n` for any fixed density. Labels are shuffled unless `shuffle` is off.
pub fn random_proper_interval(n: usize, density: f64, seed: u64, shuffle: bool) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParams("random-pig needs at least one vertex".into()));
    }
    if !(0.0..1.0).contains(&density) {
        return Err(Error::BadParams(format!("density {density} outside [0, 1)")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reach = vec![0usize; n];
    let mut prev = 0;
    for (i, slot) in reach.iter_mut().enumerate().take(n - 1) {
        let mut extra = 0;
        while rng.gen_bool(density) {
            extra += 1;
        }
        prev = prev.max(i + 1 + extra).min(n - 1);
        *slot = prev;
    }
    reach[n - 1] = n - 1;

    let mut label: Vec<usize> = (0..n).collect();
    if shuffle {
        label.shuffle(&mut rng);
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for k in i + 1..=reach[i] {
            edges.push((label[i], label[k]));
        }
    }
    Graph::build(n, &edges)
}

/// Connected graph of maximum degree at most 3: a random tree grown under the
/// degree cap, then extra edges offered in random order.
pub fn random_subcubic(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParams("random-subcubic needs at least one vertex".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| degree[u] < 3).collect();
        let u = *open.choose(&mut rng).expect("a tree with max degree 3 always has a free slot");
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u, v));
    }
    let mut present: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|p| !present.contains(p))
        .collect();
    pairs.shuffle(&mut rng);
    let extra = rng.gen_range(0..=n / 2);
    for (u, v) in pairs.into_iter() {
        if edges.len() >= n - 1 + extra {
            break;
        }
        if degree[u] < 3 && degree[v] < 3 {
            degree[u] += 1;
            degree[v] += 1;
            present.insert((u, v));
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges)
}

/// A generator request as accepted by the command line.
#[derive(Clone, Debug, PartialEq)]
pub enum GenKind {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    RandomGnp { n: usize, p: f64, seed: u64 },
    RandomPig { n: usize, density: f64, seed: u64 },
    RandomSubcubic { n: usize, seed: u64 },
}

impl GenKind {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            GenKind::Path(n) => Ok(path(n)),
            GenKind::Cycle(n) if n < 3 => Err(Error::BadParams("cycle needs n >= 3".into())),
            GenKind::Cycle(n) => Ok(cycle(n)),
            GenKind::Star(n) => Ok(star(n)),
            GenKind::Complete(n) => Ok(complete(n)),
            GenKind::RandomGnp { n, p, seed } => gnp(n, p, seed),
            GenKind::RandomPig { n, density, seed } => random_proper_interval(n, density, seed, true),
            GenKind::RandomSubcubic { n, seed } => random_subcubic(n, seed),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pig;

    #[test]
    fn named_graphs() {
        assert_eq!(path(4).edge_list(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(cycle(4).m(), 4);
        assert_eq!(star(5).degree(0), 4);
        assert_eq!(complete(4).m(), 6);
        assert_eq!(paw().max_degree(), 3);
        assert_eq!(diamond().m(), 5);
    }

    #[test]
    fn seeds_are_deterministic() {
        assert_eq!(gnp(12, 0.3, 5).unwrap(), gnp(12, 0.3, 5).unwrap());
        assert_eq!(
            random_proper_interval(40, 0.5, 9, true).unwrap(),
            random_proper_interval(40, 0.5, 9, true).unwrap()
        );
        assert_eq!(random_subcubic(20, 3).unwrap(), random_subcubic(20, 3).unwrap());
    }

    #[test]
    fn random_pig_is_recognized() {
        let g = GenKind::RandomPig { n: 10, density: 0.4, seed: 7 }.generate().unwrap();
        assert!(g.is_connected());
        assert!(pig::recognize_and_order(&g).is_ok());
    }

    #[test]
    fn random_subcubic_respects_the_cap() {
        for seed in 0..50 {
            let g = random_subcubic(8, seed).unwrap();
            assert!(g.max_degree() <= 3);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn random_connected_is_connected() {
        for seed in 0..50 {
            assert!(random_connected(9, 0.2, seed).unwrap().is_connected());
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(gnp(3, 1.5, 0), Err(Error::BadParams(_))));
        assert!(matches!(GenKind::Cycle(2).generate(), Err(Error::BadParams(_))));
        assert!(matches!(random_proper_interval(5, 1.0, 0, true), Err(Error::BadParams(_))));
    }
}
