//! Recognize a proper interval graph, order it, and solve it in linear time.
//!
//! Run with `cargo run --example proper_interval`.

use ntd::generate;
use ntd::pig;
use ntd::verify;

fn main() -> ntd::Result<()> {
    let graph = generate::random_proper_interval(12, 0.5, 7, true)?;
    let ordering = pig::recognize_and_order(&graph)?;
    println!("vertices in order: {:?}", ordering.sigma);
    println!("reach per position: {:?}", ordering.ell);

    let (set, _) = pig::mntds_pig(&graph)?;
    let report = verify::is_ntd(&graph, &set)?;
    println!("minimum NTD-set: {:?} (size {}, valid: {})", set.to_vec(), set.len(), report.pass);

    // A 4-cycle has no such ordering.
    match pig::recognize_and_order(&generate::cycle(4)) {
        Ok(_) => println!("C4 unexpectedly accepted"),
        Err(e) => println!("C4: {e}"),
    }
    Ok(())
}
