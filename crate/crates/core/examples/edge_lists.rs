//! Read and write edge lists, certificates and result documents.

use ntd::io::{self, ResultDocument};
use ntd::{pig, verify};

fn main() -> ntd::Result<()> {
    let text = "# a path with a chord\n5 5\n1 2\n2 3\n3 4\n4 5\n2 4\n";
    let graph = io::parse_graph(text)?;
    print!("{}", io::serialize_graph(&graph));

    let (set, _) = pig::mntds_pig(&graph)?;
    let report = verify::is_ntd(&graph, &set)?;
    let doc = ResultDocument::new("pig", text.as_bytes(), &set, &report, 0.0);
    print!("{}", doc.to_json());

    let cert = io::parse_certificate("2, 4  # hand-written\n", graph.n())?;
    println!("hand-written certificate passes: {}", verify::is_ntd(&graph, &cert)?.pass);

    if let Err(e) = io::parse_graph("3 1\n1 4\n") {
        println!("rejected: {e}");
    }
    Ok(())
}
