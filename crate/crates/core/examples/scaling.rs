//! Time the proper-interval solver on growing inputs and fit a line to
//! time against n + m.
//!
//! `cargo run --release --example scaling`

use ntd::pig;

fn main() -> ntd::Result<()> {
    let mut points = Vec::new();
    for n in [10_000, 30_000, 100_000, 300_000, 1_000_000] {
        let sample = pig::mntds_pig_linear_bench(n, 0.5, 7, 3)?;
        println!("n={:>8} m={:>8} {:.4}s size {}", sample.n, sample.m, sample.seconds, sample.solution_size);
        points.push(((sample.n + sample.m) as f64, sample.seconds));
    }
    if let Some(fit) = pig::fit_linear_relative(&points) {
        println!(
            "seconds ~ {:.3e}*(n+m) + {:.3e}, worst relative residual {:.3}",
            fit.slope,
            fit.intercept,
            fit.max_relative_residual()
        );
    }
    Ok(())
}
