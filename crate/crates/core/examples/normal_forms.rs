//! Normal forms in U_{r,s} and B_{r,s}, and the Hopf structure of a Borel part.

use qdouble::algebra::{
    format_element, format_tensor, parse_element, AlgebraKind, HopfAlgebra, Presentation,
};
use qdouble::doubles::Doubles;
use qdouble::rootdata::RootDatum;

fn main() -> qdouble::Result<()> {
    let d = RootDatum::from_type("A2")?;
    let dbl = Doubles::new(&d);
    let comm = parse_element("E1 F1 - F1 E1")?;
    println!(
        "E1 F1 - F1 E1 = {}",
        format_element(&dbl.double_to_presentation(&dbl.double_from_element(&comm)?)?)
    );
    let heis = Presentation::free(&d, AlgebraKind::Heisenberg);
    for src in ["e1' f1", "e1' f2", "w1 e2' w1^-1", "e1' e1' f1"] {
        println!(
            "{src} = {}",
            format_element(&heis.normal_form(&parse_element(src)?)?)
        );
    }
    let geq = HopfAlgebra::new(Presentation::free(&d, AlgebraKind::UGeq))?;
    let x = parse_element("E1 E2")?;
    println!("Delta(E1 E2) = {}", format_tensor(&geq.coproduct(&x)?));
    println!("S(E1 E2) = {}", format_element(&geq.antipode(&x)?));
    Ok(())
}
