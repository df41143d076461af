//! The rank-one action of U_{r,s} on B_{r,s} against the closed forms.

use qdouble::algebra::{format_element, AlgElement, Gen, Kind};
use qdouble::doubles::{closed_form_action_sl2, ActionFamily, Doubles, TargetSide};
use qdouble::rootdata::RootDatum;

fn main() -> qdouble::Result<()> {
    let dbl = Doubles::new(&RootDatum::sl2());
    let pow = |k: Kind, n: u32| AlgElement::word(vec![Gen::new(k, 0); n as usize]);
    let families = [
        (ActionFamily::EOnE, Kind::E, Kind::Ep, TargetSide::Plus),
        (ActionFamily::EOnF, Kind::E, Kind::Fl, TargetSide::Minus),
        (ActionFamily::FOnE, Kind::F, Kind::Ep, TargetSide::Plus),
        (ActionFamily::FOnF, Kind::F, Kind::Fl, TargetSide::Minus),
    ];
    for (family, actor, target, side) in families {
        let got = dbl.schrodinger_act(&pow(actor, 2), &pow(target, 3), side)?;
        let (c, p) = closed_form_action_sl2(family, 2, 3)?;
        let agrees = got == pow(target, p).scale(&c);
        println!(
            "{} (m=2, n=3) = {}  [closed form agrees: {agrees}]",
            family.name(),
            format_element(&got)
        );
    }
    Ok(())
}
