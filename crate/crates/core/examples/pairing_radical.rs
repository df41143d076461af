//! Gram matrices of the skew pairing and their radicals, which carry the Serre relations.

use qdouble::algebra::format_element;
use qdouble::pairing::{PairingEngine, PairingSide};
use qdouble::rootdata::RootDatum;

fn main() -> qdouble::Result<()> {
    for (name, degrees) in [
        ("A2", vec![vec![2, 1], vec![1, 2]]),
        ("B2", vec![vec![2, 1], vec![1, 3]]),
    ] {
        let d = RootDatum::from_type(name)?;
        let p = PairingEngine::new(&d, PairingSide::W);
        for beta in degrees {
            let g = p.gram(&beta, 4)?;
            println!(
                "{name} degree {beta:?}: {} words, rank {}",
                g.cols.len(),
                g.rank()
            );
            for x in g.right_radical_basis() {
                println!("  radical: {}", format_element(&x));
            }
        }
    }
    Ok(())
}
