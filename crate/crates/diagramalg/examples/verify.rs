//! Run every self-check for a few small algebras.
use diagramalg::diagrams::Family;
use diagramalg::verify::{run, Options, Suite};

fn main() -> diagramalg::Result<()> {
    let opts = Options { samples: 20, seed: 7 };
    for (f, k) in [(Family::Partition, 3), (Family::Brauer, 4), (Family::Motzkin, 4)] {
        for suite in Suite::ALL {
            println!("{}", run(suite, f, k, &opts)?);
        }
    }
    Ok(())
}
