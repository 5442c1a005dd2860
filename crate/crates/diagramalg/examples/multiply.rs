//! Stack two partition diagrams and evaluate the product at a number.
use diagramalg::coeff::{rat, Element};
use diagramalg::diagrams::{Diagram, Family};

fn main() -> diagramalg::Result<()> {
    let k = 12;
    let d1 =
        Diagram::parse("1 2' | 2 3 5 | 4 1' | 6 7 | 8 9' | 9 11 6' | 10 12 11' | 3' 5' | 4' | 7' 12' | 8' 10'", k)?;
    let d2 =
        Diagram::parse("1 2 2' | 3 6 | 4 | 5 6' 7' | 7 8 | 9 10' 11' | 10 12 | 11 8' | 1' 3' 4' | 5' | 9' 12'", k)?;

    let r = d1.concat(&d2)?;
    println!("d1 d2 = n^{} <{}>", r.deleted, r.product);
    println!("rank {} * {} -> {}", d1.rank(), d2.rank(), r.product.rank());

    let a = Element::from_diagram(Family::Partition, d1)?;
    let b = Element::from_diagram(Family::Partition, d2)?;
    let ab = a.add(&b)?.multiply(&a)?;
    println!("(d1 + d2) d1 = {ab}");
    for (d, c) in ab.evaluate(&rat(5, 2))? {
        println!("  at n = 5/2: {c} * <{d}>");
    }
    Ok(())
}
