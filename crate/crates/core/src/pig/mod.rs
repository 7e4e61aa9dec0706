//! Proper interval graphs: BCO recognition and the linear-time solver.

pub mod bench;
pub mod ordering;
pub mod solver;

pub use bench::{fit_linear, fit_linear_relative, mntds_pig_linear_bench, BenchSample, LinearFit};
pub use ordering::{compute_ell, is_bco, lex_bfs, lex_bfs_plus, recognize_and_order, BcOrdering};
pub use solver::{mntds_pig, mntds_pig_components, solve_ordered, SolverTrace, TraceStep};
