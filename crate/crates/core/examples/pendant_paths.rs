//! The pendant-path construction: a dominating set of G becomes an NTD-set
//! of the output two vertices per source vertex larger, and back.

use ntd::oracle::{self, OracleOptions};
use ntd::reductions::{self, ReductionKind};
use ntd::{generate, verify, Kind};

fn main() -> ntd::Result<()> {
    let source = generate::paw();
    let artifact = ReductionKind::DomsetToNtds.build(&source)?;
    println!("source n={} m={}, output n={} m={}", source.n(), source.m(), artifact.output.n(), artifact.output.m());

    let options = OracleOptions::with_limit(32);
    let (gamma, d) = oracle::exact_min(&source, Kind::Dominating, &options)?;
    let forward = reductions::forward_domset_to_ntds(&artifact, &d)?;
    println!("dominating set {:?} -> NTD-set of size {}", d.to_vec(), forward.len());

    let (gamma_nt, best) = oracle::exact_min(&artifact.output, Kind::Ntd, &options)?;
    println!("optimum: {gamma_nt} = {gamma} + 2*{} is {}", source.n(), artifact.relation.apply(gamma) == gamma_nt);

    let back = reductions::extract_domset_from_ntds(&artifact, &best)?;
    println!("extracted {:?}, dominating: {}", back.to_vec(), verify::is_dominating(&source, &back)?.pass);
    print!("{}", artifact.sidecar().lines().take(4).collect::<Vec<_>>().join("\n"));
    println!("\n...");
    Ok(())
}
