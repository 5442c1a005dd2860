//! Young's natural representation and symmetric group characters.
use diagramalg::partitions::IntPartition;
use diagramalg::symrep::{act, rep_matrix, standard_tableaux, sym_character, Permutation, SpechtVector};

fn main() -> diagramalg::Result<()> {
    let shape = IntPartition::parse("3,2")?;
    let ts = standard_tableaux(&shape);
    for (i, t) in ts.iter().enumerate() {
        println!("t{} = {t}", i + 1);
    }

    let sigma = Permutation::from_cycles(5, &[vec![4, 3, 2]])?;
    let v = act(&sigma, &SpechtVector::basis(&ts[3])?)?;
    for (t, c) in &v.combo {
        println!("{sigma} n_t4 has {c} * n_{t}");
    }

    println!("\nmatrix of (1,2) on [2,1]:");
    for row in rep_matrix(&Permutation::from_cycles(3, &[vec![1, 2]])?, &IntPartition::parse("2,1")?)? {
        println!("  {}", row.iter().map(|x| format!("{x:>3}")).collect::<Vec<_>>().join(""));
    }

    println!("\ncharacter of S_4:");
    let parts = diagramalg::partitions::partitions_of(4);
    for l in &parts {
        let row: Vec<String> = parts.iter().map(|mu| format!("{:>3}", sym_character(l, mu).unwrap())).collect();
        println!("  {:<10}{}", l.to_string(), row.join(""));
    }
    Ok(())
}
