//! Diagram bases of every family, their generators, and a sample basis.
use diagramalg::diagrams::{enumerate_basis, Diagram, Family};

fn main() -> diagramalg::Result<()> {
    println!("{:<18} {:>6} {:>6} {:>6} {:>6}", "family", "k=1", "k=2", "k=3", "k=4");
    for f in Family::ALL {
        let sizes: Vec<String> =
            (1..=4).map(|k| enumerate_basis(f, k).map(|b| b.len().to_string())).collect::<Result<_, _>>()?;
        println!("{:<18} {:>6} {:>6} {:>6} {:>6}", f.to_string(), sizes[0], sizes[1], sizes[2], sizes[3]);
    }

    println!("\nMotzkin generators for k = 3:");
    for g in Family::Motzkin.generators(3) {
        println!("  {g}   planar: {}", g.is_planar());
    }

    println!("\nTemperley-Lieb k = 3:");
    for d in enumerate_basis(Family::TemperleyLieb, 3)? {
        println!("  {d}");
    }

    let crossing = Diagram::parse("1 2' | 2 1'", 2)?;
    println!("\n<{crossing}> is planar: {}", crossing.is_planar());
    Ok(())
}
