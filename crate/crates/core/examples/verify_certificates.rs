//! Check candidate sets against the three domination conditions.

use ntd::generate;
use ntd::{verify, Kind, VertexSet};

fn main() -> ntd::Result<()> {
    let p5 = generate::path(5);
    for members in [vec![1, 3], vec![0, 3, 4], vec![1, 2, 3], vec![0, 4]] {
        let set = VertexSet::try_from_iter(p5.n(), members.iter().copied())?;
        let verdicts: Vec<String> = [Kind::Dominating, Kind::Total, Kind::Ntd]
            .into_iter()
            .map(|kind| {
                let report = verify::check(&p5, &set, kind).expect("P5 has no isolated vertex");
                match report.witness {
                    None => format!("{}: yes", kind.name()),
                    Some(w) => format!("{}: no (vertex {w})", kind.name()),
                }
            })
            .collect();
        println!("{members:?}  {}", verdicts.join(", "));
    }
    Ok(())
}
