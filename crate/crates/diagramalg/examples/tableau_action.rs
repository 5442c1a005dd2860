//! Set-partition tableaux and the combinatorial action of a diagram.
use diagramalg::diagrams::{Diagram, Family};
use diagramalg::irreps::{
    act_natural, act_tableau, enumerate_sspt, tableau_from_pair, SymmetricMDiagram, TableauVector,
};
use diagramalg::partitions::IntPartition;
use diagramalg::symrep::standard_tableaux;

fn main() -> diagramalg::Result<()> {
    let top = vec![vec![1, 2], vec![3, 5, 6], vec![4], vec![7, 13], vec![8, 9, 10], vec![11], vec![12]];
    let props = vec![vec![1, 2], vec![4], vec![8, 9, 10], vec![12], vec![7, 13]];
    let w = SymmetricMDiagram::new(13, top, &props)?;
    let ts = standard_tableaux(&IntPartition::parse("3,2")?);
    let tab = tableau_from_pair(&w, &ts[3])?;
    println!("T = {tab}");

    let d = Diagram::parse(
        "1 5' | 2 2' | 3 1' 3' | 4 | 5 6 7 8' | 8 12 4' | 9 12' | 10 11 | 13 13' | 6' | 7' | 9' 10' | 11'",
        13,
    )?;
    match act_tableau(&d, &tab)? {
        Some((image, deleted)) => println!("d(T) = n^{deleted} {image}   standard: {}", image.is_standard()),
        None => println!("d(T) = 0"),
    }
    for (t, c) in act_natural(&d, &TableauVector::basis(tab))?.combo {
        println!("  {c} * N[{t}]");
    }

    println!("\nstandard tableaux for rook-Brauer k = 3, shape [1]:");
    for t in enumerate_sspt(Family::RookBrauer, 3, &IntPartition::parse("1")?)? {
        println!("  {t}");
    }
    Ok(())
}
