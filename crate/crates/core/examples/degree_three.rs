//! The degree-3 construction: each vertex of a subcubic graph gets a gadget
//! and the optimum grows by n plus two per degree-3 vertex.

use ntd::oracle::{self, OracleOptions};
use ntd::reductions::{self, subcubic};
use ntd::{generate, Kind};

fn main() -> ntd::Result<()> {
    let options = OracleOptions::with_limit(26);
    for (name, source) in [("K2", generate::path(2)), ("P4", generate::path(4)), ("K1,3", generate::star(4))] {
        let artifact = reductions::build_subcubic_gadget(&source)?;
        let (gamma, d) = oracle::exact_min(&source, Kind::Dominating, &options)?;
        let forward = subcubic::forward_ntd_subcubic(&artifact, &d)?;
        let (optimum, best) = oracle::exact_min(&artifact.output, Kind::Ntd, &options)?;
        let back = subcubic::extract_domset_subcubic(&artifact, &best)?;
        println!(
            "{name}: output {} vertices, max degree {}; forward {} optimum {} predicted {}; extracted {:?}; members per gadget {:?}",
            artifact.output.n(),
            artifact.output.max_degree(),
            forward.len(),
            optimum,
            artifact.relation.apply(gamma),
            back.to_vec(),
            subcubic::gadget_counts(&artifact, &best)
        );
    }
    Ok(())
}
