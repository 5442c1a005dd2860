//! Symmetric m-diagrams: enumeration against the closed-form counts.
use diagramalg::diagrams::Family;
use diagramalg::irreps::{enumerate_symmetric, symmetric_count};
use diagramalg::partitions::rank_set;

fn main() -> diagramalg::Result<()> {
    for w in enumerate_symmetric(Family::Partition, 3, 1)? {
        println!("{w:<20} {}", w.to_diagram());
    }
    println!();
    for f in
        [Family::Partition, Family::Brauer, Family::RookBrauer, Family::Rook, Family::TemperleyLieb, Family::Motzkin]
    {
        let k = 6;
        let row: Vec<String> = rank_set(f, k)
            .into_iter()
            .map(|m| {
                let n = enumerate_symmetric(f, k, m).unwrap().len();
                format!("m={m}:{n}/{}", symmetric_count(f, k, m).unwrap())
            })
            .collect();
        println!("{:<16} {}", f.to_string(), row.join(" "));
    }
    Ok(())
}
