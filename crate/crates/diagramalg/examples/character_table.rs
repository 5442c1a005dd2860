//! A character table, its factorization through symmetric group tables, and
//! the determinant identity.
use diagramalg::characters::{character_table, table_determinant_check};
use diagramalg::diagrams::Family;
use num_bigint::BigInt;

fn show(name: &str, rows: &[String], cols: &[String], m: &[Vec<BigInt>]) {
    println!("{name}");
    println!("{:>10} {}", "", cols.iter().map(|c| format!("{c:>10}")).collect::<String>());
    for (r, vals) in rows.iter().zip(m) {
        println!("{r:>10} {}", vals.iter().map(|v| format!("{v:>10}")).collect::<String>());
    }
}

fn main() -> diagramalg::Result<()> {
    let f = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(Family::RookBrauer);
    let k = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(3);
    let t = character_table(f, k)?;
    let rows: Vec<String> = t.rows.iter().map(|r| r.to_string()).collect();
    let cols: Vec<String> = t.cols.iter().map(|c| c.kappa.to_string()).collect();
    let mus: Vec<String> = t.mus.iter().map(|m| m.to_string()).collect();
    show(&format!("characters of {f}, k = {k}"), &rows, &cols, &t.values);
    show("\nsymmetric group blocks", &rows, &mus, &t.block);
    show("\nfixed-point counts F", &mus, &cols, &t.f_matrix);
    println!("\nfactorization holds: {}", t.factorization_holds());
    let d = table_determinant_check(f, k)?;
    println!("|det| = {}, product of parts = {}", d.lhs, d.rhs);
    Ok(())
}
