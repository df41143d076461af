//! Randomized invariants across the algebra, pairing, double and module layers.

use proptest::prelude::*;

use qdouble::algebra::{AlgElement, AlgebraKind, Gen, HopfAlgebra, Kind, Presentation, Word};
use qdouble::coeff::RatFunc;
use qdouble::doubles::Doubles;
use qdouble::omodules::{ModuleVector, WeightModule};
use qdouble::pairing::{PairingEngine, PairingSide};
use qdouble::rootdata::{RootDatum, Weight};

fn letters(n: usize, kinds: &[Kind]) -> Vec<Gen> {
    kinds
        .iter()
        .flat_map(|&k| (0..n).map(move |i| Gen::new(k, i as u8)))
        .collect()
}

fn words(gens: Vec<Gen>, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(gens), 0..=max)
}

fn coeff() -> impl Strategy<Value = RatFunc> {
    (-3i64..=3, -2i64..=2, -2i64..=2).prop_map(|(c, a, b)| RatFunc::rs(a, b).scale_int(c))
}

fn element(gens: Vec<Gen>, max: usize) -> impl Strategy<Value = AlgElement> {
    prop::collection::vec((words(gens, max), coeff()), 1..=3).prop_map(AlgElement::from_terms)
}

fn weight(rank: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec((-4i64..=4).prop_map(|k| (k, 2)), rank)
        .prop_map(|v| Weight::from_ratios(&v))
}

fn a2() -> RootDatum {
    RootDatum::from_type("A2").unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn euler_form_is_bilinear(a in weight(2), b in weight(2), c in weight(2)) {
        let d = RootDatum::from_type("B2").unwrap();
        let f = |x: &Weight, y: &Weight| d.euler_form(x, y).unwrap();
        prop_assert_eq!(f(&a.add(&b), &c), f(&a, &c) + f(&b, &c));
        prop_assert_eq!(f(&a, &b.add(&c)), f(&a, &b) + f(&a, &c));
    }

    #[test]
    fn borel_parts_are_hopf(w in words(letters(2, &[Kind::E, Kind::Kp, Kind::KpInv]), 4),
                            u in words(letters(2, &[Kind::F, Kind::K, Kind::KInv]), 4)) {
        let d = a2();
        for (kind, w) in [(AlgebraKind::UGeq, w), (AlgebraKind::ULeq, u)] {
            let h = HopfAlgebra::new(Presentation::free(&d, kind)).unwrap();
            let x = AlgElement::word(w);
            let dx = h.coproduct(&x).unwrap();
            prop_assert_eq!(h.delta_left(&dx).unwrap(), h.delta_right(&dx).unwrap());
            let unit = AlgElement::scalar(h.counit(&x).unwrap());
            prop_assert_eq!(h.antipode_convolution(&x, true).unwrap(), unit.clone());
            prop_assert_eq!(h.antipode_convolution(&x, false).unwrap(), unit);
        }
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(
        x in element(letters(2, &[Kind::Ep, Kind::Fl, Kind::W, Kind::Wp, Kind::WInv]), 4),
        y in element(letters(2, &[Kind::Ep, Kind::Fl, Kind::Wp, Kind::WpInv]), 4),
        c in coeff(),
    ) {
        let p = Presentation::free(&a2(), AlgebraKind::Heisenberg);
        let nx = p.normal_form(&x).unwrap();
        prop_assert_eq!(p.normal_form(&nx).unwrap(), nx.clone());
        let ny = p.normal_form(&y).unwrap();
        let combo = &x + &y.scale(&c);
        prop_assert_eq!(p.normal_form(&combo).unwrap(), &nx + &ny.scale(&c));
    }

    #[test]
    fn rank_one_normal_form_is_multiplicative(
        x in element(letters(1, &[Kind::E, Kind::F, Kind::K, Kind::Kp, Kind::KInv]), 3),
        y in element(letters(1, &[Kind::E, Kind::F, Kind::K, Kind::KpInv]), 3),
    ) {
        let p = Presentation::free(&RootDatum::sl2(), AlgebraKind::Double);
        let direct = p.normal_form(&(&x * &y)).unwrap();
        let staged = p.normal_form(&(&p.normal_form(&x).unwrap() * &p.normal_form(&y).unwrap())).unwrap();
        prop_assert_eq!(direct, staged);
    }

    #[test]
    fn pairing_recursions_agree(
        (raising, perm) in words(letters(2, &[Kind::Ep]), 4).prop_flat_map(|w| {
            let n = w.len();
            (Just(w), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        }),
    ) {
        let d = a2();
        for side in [PairingSide::W, PairingSide::U] {
            let p = PairingEngine::new(&d, side);
            let a: Word = raising.iter().map(|g| Gen::new(side.raising(), g.idx)).collect();
            let b: Word = perm.iter().map(|&k| Gen::new(side.lowering(), raising[k].idx)).collect();
            let first = p.pair_words(&a, &b).unwrap();
            prop_assert_eq!(p.pair_words_right_split(&a, &b).unwrap(), first.clone());
            p.clear_memo();
            prop_assert_eq!(p.pair_words(&a, &b).unwrap(), first);
        }
    }

    #[test]
    fn pairing_respects_degree(a in words(letters(2, &[Kind::Ep]), 3), b in words(letters(2, &[Kind::Fl]), 3)) {
        let d = a2();
        let p = PairingEngine::new(&d, PairingSide::W);
        let deg = |w: &Word| {
            let mut v = [0; 2];
            for g in w {
                v[g.idx as usize] += 1;
            }
            v
        };
        if deg(&a) != deg(&b) {
            prop_assert!(p.pair_words(&a, &b).unwrap().is_zero());
        }
    }

    #[test]
    fn double_product_matches_rewriting(w in words(letters(1, &[Kind::E, Kind::F, Kind::K, Kind::Kp]), 3)) {
        let dbl = Doubles::new(&RootDatum::sl2());
        let x = AlgElement::word(w);
        let by_product = dbl.double_to_presentation(&dbl.double_from_element(&x).unwrap()).unwrap();
        prop_assert_eq!(by_product, dbl.double_presentation().normal_form(&x).unwrap());
    }

    #[test]
    fn module_algebra_law_on_random_elements(
        h in prop::sample::select(letters(1, &[Kind::E, Kind::F, Kind::K, Kind::Kp])),
        x in words(letters(1, &[Kind::Ep, Kind::Fl, Kind::W, Kind::Wp]), 2),
        y in words(letters(1, &[Kind::Ep, Kind::Fl, Kind::W, Kind::Wp]), 2),
    ) {
        let dbl = Doubles::new(&RootDatum::sl2());
        let x = dbl.heis_from_element(&AlgElement::word(x)).unwrap();
        let y = dbl.heis_from_element(&AlgElement::word(y)).unwrap();
        let (l, r) = dbl.module_algebra_sides(h, &x, &y).unwrap();
        prop_assert_eq!(l, r);
    }
}

fn vector(dim: usize) -> impl Strategy<Value = ModuleVector> {
    prop::collection::vec((0..dim, coeff()), 1..=4).prop_map(ModuleVector::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn actions_are_linear(a in vector(7), b in vector(7), c in coeff()) {
        let m = WeightModule::verma(&RootDatum::sl2(), &Weight::from_ints(&[2]), 6).unwrap();
        let ab = &a + &b.scale(&c);
        for g in [Gen::new(Kind::Ep, 0), Gen::new(Kind::W, 0), Gen::new(Kind::Wp, 0)] {
            let lhs = m.act_gen(g, &ab).unwrap();
            let rhs = &m.act_gen(g, &a).unwrap() + &m.act_gen(g, &b).unwrap().scale(&c);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn projector_is_idempotent_onto_maximal_vectors(x in vector(13)) {
        let d = a2();
        let m = WeightModule::verma(&d, &Weight::from_ints(&[1, 0]), 3).unwrap();
        let p = m.projector(&x).unwrap();
        prop_assert_eq!(m.projector(&p).unwrap(), p.clone());
        for i in 0..2 {
            prop_assert!(m.act_gen(Gen::new(Kind::Ep, i), &p).unwrap().is_zero());
        }
    }

    #[test]
    fn rho_matches_its_closed_form(x in vector(7)) {
        let m = WeightModule::verma(&RootDatum::sl2(), &Weight::from_ratios(&[(-1, 2)]), 6).unwrap();
        prop_assert_eq!(m.rho(&x).unwrap(), m.rho_closed_sl2(&x).unwrap());
        prop_assert_eq!(m.projector(&x).unwrap(), m.projector_sl2(&x).unwrap());
    }
}
