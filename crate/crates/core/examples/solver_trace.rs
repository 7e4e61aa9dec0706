//! Print the case-by-case decisions of the proper-interval solver.

use ntd::generate;
use ntd::pig::{self, SolverTrace};

fn main() -> ntd::Result<()> {
    for (name, graph) in [
        ("P4", generate::path(4)),
        ("P5", generate::path(5)),
        ("K3", generate::complete(3)),
        ("random", generate::random_proper_interval(15, 0.4, 3, false)?),
    ] {
        let (set, trace) = pig::mntds_pig(&graph)?;
        println!("{name}: {:?}", set.to_vec());
        print!("{trace}");
        let parsed: SolverTrace = trace.to_string().parse()?;
        assert_eq!(parsed, trace);
    }
    Ok(())
}
