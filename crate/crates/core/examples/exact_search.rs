//! Exhaustive minimum dominating, total dominating and NTD-sets.

use ntd::generate;
use ntd::oracle::{self, OracleOptions};
use ntd::verify;
use ntd::Kind;

fn main() -> ntd::Result<()> {
    let options = OracleOptions::default();
    for (name, graph) in [
        ("P5", generate::path(5)),
        ("C6", generate::cycle(6)),
        ("K1,4", generate::star(5)),
        ("paw", generate::paw()),
        ("diamond", generate::diamond()),
    ] {
        let (gamma, gamma_nt, gamma_t) = verify::check_chain(&graph, &options)?;
        let (_, witness) = oracle::exact_min(&graph, Kind::Ntd, &options)?;
        let count = oracle::all_minimum(&graph, Kind::Ntd, &options)?.len();
        println!(
            "{name:8} dominating {gamma}  ntd {gamma_nt}  total {gamma_t}  first ntd set {:?}  ({count} minimum)",
            witness.to_vec()
        );
    }
    Ok(())
}
