//! Greedy approximation on general graphs, compared with the exact optimum.

use ntd::approx::{self, Augment};
use ntd::generate;
use ntd::oracle::OracleOptions;

fn main() -> ntd::Result<()> {
    for seed in 0..8 {
        let graph = generate::random_connected(14, 0.25, seed)?;
        let run = approx::approx_ntds_with(&graph, Augment::Covering)?;
        let report = approx::ratio_report(&graph, &OracleOptions::default())?;
        println!(
            "seed {seed}: greedy {} + {} added = {}, optimum {}, ratio {:.2} (bound {:.2})",
            run.dominating.len(),
            run.added.len(),
            run.set.len(),
            report.optimum,
            report.ratio,
            report.bound
        );
    }
    let literal = approx::approx_ntds_with(&generate::path(7), Augment::Literal)?;
    println!("literal rule on P7: {:?} (fell back: {})", literal.set.to_vec(), literal.repaired);
    Ok(())
}
