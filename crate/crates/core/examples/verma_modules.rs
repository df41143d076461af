//! H(lambda), the coaction, the extremal projector and a decomposition.

use qdouble::omodules::{ModuleVector, WeightModule};
use qdouble::rootdata::{RootDatum, Weight};

fn main() -> qdouble::Result<()> {
    let sl2 = RootDatum::sl2();
    let h = WeightModule::verma(&sl2, &Weight::from_ratios(&[(1, 2)]), 4)?;
    println!("H(1/2) at depth {}: dimension {}", h.depth(), h.dim());
    for k in 0..h.dim() {
        let m = ModuleVector::basis(k);
        println!("  rho({}) = {}", h.basis()[k].label, h.rho(&m)?.format(&h));
        println!(
            "  P({}) = {}",
            h.basis()[k].label,
            h.format_vector(&h.projector(&m)?)
        );
    }
    let a2 = RootDatum::from_type("A2")?;
    let parts = [Weight::from_ints(&[1, 0]), Weight::from_ints(&[0, 1])];
    let m = WeightModule::tensor_bminus(&a2, &parts, 3)?.scrambled(1)?;
    let rep = m.decompose()?;
    println!(
        "A2 module of dimension {}: summands {:?}, semisimple {}",
        m.dim(),
        rep.summands,
        rep.semisimple()
    );
    println!(
        "Hopf-module maps invert: {}",
        m.hopf_module_check()?.passed()
    );
    Ok(())
}
