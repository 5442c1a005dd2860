//! Class diagrams, fixed points and character values, checked against traces.
use diagramalg::characters::{character_oracle, class_diagram, f_coeff, fixed_points, irr_character, ClassLabel};
use diagramalg::diagrams::Family;
use diagramalg::partitions::IntPartition;

fn main() -> diagramalg::Result<()> {
    let p = |s: &str| IntPartition::parse(s);
    let label = ClassLabel { kappa: p("6,5,2,1")?, s: 4, family: Family::Partition };
    println!("{}", class_diagram(&label)?);

    let kappa = p("2,1")?;
    println!("\nF^([1],[2,1]) = {}", f_coeff(Family::Partition, &kappa, &p("1")?)?);
    for w in &fixed_points(Family::Partition, 3, 1, &kappa)?[&p("1")?] {
        println!("  fixed: {}", w.to_diagram());
    }

    println!();
    for f in [Family::Partition, Family::Brauer, Family::Motzkin] {
        let k = 4;
        let label = ClassLabel::for_k(f, k, if f.is_planar() { p("1,1")? } else { p("2")? })?;
        let lam = if f.is_planar() { p("2")? } else { p("1,1")? };
        println!(
            "{f}: chi^{lam}({}, s={}) = {}, trace = {}",
            label.kappa,
            label.s,
            irr_character(f, k, &lam, &label)?,
            character_oracle(f, k, &lam, &label)?
        );
    }
    Ok(())
}
