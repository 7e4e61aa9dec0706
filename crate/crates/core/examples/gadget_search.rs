//! Enumerate candidate gadgets and keep the first one meeting its contract.

use ntd::reductions::gadget::{self, GadgetContract, GadgetSpec};

fn main() -> ntd::Result<()> {
    for (contract, canonical) in [
        (GadgetContract::attachment(), GadgetSpec::attachment()),
        (GadgetContract::split(), GadgetSpec::split()),
    ] {
        let found = gadget::gadget_search(&contract)?;
        let edges: Vec<String> = found.edge_names().into_iter().map(|(a, b)| format!("{a}-{b}")).collect();
        println!("{}: {} (matches built-in: {})", contract.name, edges.join(" "), found == canonical);
    }
    let mut impossible = GadgetContract::attachment();
    impossible.min_rho = 9;
    println!("impossible contract: {}", gadget::gadget_search(&impossible).unwrap_err());
    Ok(())
}
