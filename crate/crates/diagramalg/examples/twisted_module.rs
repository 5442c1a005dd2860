//! An irreducible module on symmetric diagrams tensor Specht vectors, and the
//! matrices of the Brauer generators on it.
use diagramalg::diagrams::Family;
use diagramalg::irreps::{BasisChoice, Irrep};
use diagramalg::partitions::IntPartition;

fn main() -> diagramalg::Result<()> {
    let irr = Irrep::new(Family::Brauer, 4, &IntPartition::parse("1,1")?)?;
    println!("dimension {}", irr.dim());
    for w in irr.symmetric_diagrams() {
        println!("  w = {w}");
    }
    for g in Family::Brauer.generators(4) {
        println!("\n<{g}>");
        print!("{}", irr.matrix(&g, BasisChoice::Twisted)?);
    }
    Ok(())
}
