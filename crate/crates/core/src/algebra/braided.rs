//! `B-` as a braided Hopf algebra over the torus: `Δ0`, the braided product
//! on `B- ⊗ B-` and the braided antipode.

use std::collections::HashMap;
use std::sync::Mutex;

use super::element::{AlgElement, TensorElement};
use super::gen::{word_degree, Gen, Kind, Word};
use super::hopf::HopfAlgebra;
use super::presentation::{AlgebraKind, Presentation};
use crate::coeff::{gauss_binomial, GaussMonomial, RatFunc};
use crate::error::{Error, Result};
use crate::rootdata::RootDatum;

/// Braided structure on the algebra generated by the `f_i`.
pub struct BraidedBminus {
    hopf: HopfAlgebra,
    delta_memo: Mutex<HashMap<Word, TensorElement>>,
    antipode_memo: Mutex<HashMap<Word, AlgElement>>,
}

impl std::fmt::Debug for BraidedBminus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BraidedBminus({})", self.hopf.pres().datum().name())
    }
}

impl BraidedBminus {
    pub fn new(datum: &RootDatum) -> BraidedBminus {
        let pres = Presentation::free(datum, AlgebraKind::WMinus);
        BraidedBminus {
            hopf: HopfAlgebra::new(pres).expect("B<= carries Hopf data"),
            delta_memo: Mutex::new(HashMap::new()),
            antipode_memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn pres(&self) -> &Presentation {
        self.hopf.pres()
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    fn rank(&self) -> usize {
        self.pres().rank()
    }

    pub fn check(&self, x: &AlgElement) -> Result<()> {
        for g in x.letters() {
            if g.kind != Kind::Fl {
                return Err(Error::NotInBminus(g.to_string()));
            }
        }
        self.pres().check_letters(x)
    }

    /// Scalar picked up when a word of degree `-beta` passes `c`:
    /// the torus element `w_beta` acting on `c`.
    pub fn braid_scalar(&self, passing: &[Gen], c: &[Gen]) -> RatFunc {
        let deg = word_degree(c, self.rank());
        let mut acc = RatFunc::one();
        for g in passing {
            if g.kind == Kind::Fl {
                acc = &acc * &self.pres().character(Gen::new(Kind::W, g.idx), &deg);
            }
        }
        acc
    }

    /// `(a ⊗ b)(c ⊗ d) = (w_b . c-scalar) ac ⊗ bd` in `B- ⊗ B-`.
    pub fn braided_mul(&self, x: &TensorElement, y: &TensorElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for (ws, cx) in x.terms() {
            for (vs, cy) in y.terms() {
                if ws.len() != 2 || vs.len() != 2 {
                    return Err(Error::MissingYDStructure(
                        "braided product needs arity 2".into(),
                    ));
                }
                for w in ws.iter().chain(vs.iter()) {
                    if let Some(g) = w.iter().find(|g| g.kind != Kind::Fl) {
                        return Err(Error::MissingYDStructure(format!("{g} outside B-")));
                    }
                }
                let c = &(cx * cy) * &self.braid_scalar(&ws[1], &vs[0]);
                let a = self
                    .pres()
                    .normal_word(&[ws[0].clone(), vs[0].clone()].concat())?;
                let b = self
                    .pres()
                    .normal_word(&[ws[1].clone(), vs[1].clone()].concat())?;
                out.add_scaled(&TensorElement::pure(&a, &b), &c);
            }
        }
        Ok(out)
    }

    fn word_delta0(&self, w: &[Gen]) -> Result<TensorElement> {
        if w.is_empty() {
            return Ok(TensorElement::unit(2));
        }
        if let Some(hit) = self.delta_memo.lock().expect("memo lock").get(w) {
            return Ok(hit.clone());
        }
        let (last, init) = w.split_last().expect("nonempty");
        let head = self.word_delta0(init)?;
        let g = AlgElement::gen(*last);
        let one = AlgElement::one();
        let gen = &TensorElement::pure(&g, &one) + &TensorElement::pure(&one, &g);
        let out = self.braided_mul(&head, &gen)?;
        self.delta_memo
            .lock()
            .expect("memo lock")
            .insert(w.to_vec(), out.clone());
        Ok(out)
    }

    /// `Δ0`, extended from `Δ0(f_i) = f_i ⊗ 1 + 1 ⊗ f_i` as a braided algebra map.
    pub fn delta0(&self, x: &AlgElement) -> Result<TensorElement> {
        self.check(x)?;
        let mut out = TensorElement::zero();
        for (w, c) in x.terms() {
            out.add_scaled(&self.word_delta0(w)?, c);
        }
        Ok(out)
    }

    /// `(π ⊗ id) Δ`, with `π` dropping the torus part.
    pub fn delta0_via_projection(&self, x: &AlgElement) -> Result<TensorElement> {
        self.check(x)?;
        let d = self.hopf.coproduct(x)?;
        Ok(project_first(&d))
    }

    /// Convolution inverse of the identity for `Δ0`.
    pub fn antipode(&self, x: &AlgElement) -> Result<AlgElement> {
        self.check(x)?;
        let mut out = AlgElement::zero();
        for (w, c) in x.terms() {
            out.add_scaled(&self.word_antipode(w)?, c);
        }
        Ok(out)
    }

    fn word_antipode(&self, w: &[Gen]) -> Result<AlgElement> {
        if w.is_empty() {
            return Ok(AlgElement::one());
        }
        if let Some(hit) = self.antipode_memo.lock().expect("memo lock").get(w) {
            return Ok(hit.clone());
        }
        // Σ S(x') x'' = 0 and the term x ⊗ 1 carries S(x)
        let mut acc = AlgElement::zero();
        for (ws, c) in self.word_delta0(w)?.terms() {
            if ws[0].len() == w.len() {
                continue;
            }
            let s = self.word_antipode(&ws[0])?;
            let prod = self.pres().mul(&s, &AlgElement::word(ws[1].clone()))?;
            acc.add_scaled(&prod, c);
        }
        // the coefficient of w ⊗ 1 in Δ0(w) is 1
        let out = -&acc;
        self.antipode_memo
            .lock()
            .expect("memo lock")
            .insert(w.to_vec(), out.clone());
        Ok(out)
    }

    /// `m (S ⊗ id) Δ0 (x)`.
    pub fn antipode_convolution(&self, x: &AlgElement) -> Result<AlgElement> {
        let mut out = AlgElement::zero();
        for (ws, c) in self.delta0(x)?.terms() {
            let s = self.antipode(&AlgElement::word(ws[0].clone()))?;
            out.add_scaled(&self.pres().mul(&s, &AlgElement::word(ws[1].clone()))?, c);
        }
        Ok(out)
    }

    pub fn counit(&self, x: &AlgElement) -> RatFunc {
        x.scalar_part()
    }
}

/// Drops torus letters in the first slot, i.e. applies `π ⊗ id` to a tensor
/// whose first slot is in `f`-then-torus normal order.
pub fn project_first(t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (ws, c) in t.terms() {
        let mut nws = ws.clone();
        nws[0].retain(|g| !g.is_torus());
        out.add_term(nws, c);
    }
    out
}

fn f_power(n: u32) -> Word {
    vec![Gen::new(Kind::Fl, 0); n as usize]
}

/// `Δ0(f^n) = Σ binom(n,p)_{rs^-1} (rs^-1)^{p(p-n)} f^p ⊗ f^{n-p}` in rank one.
pub fn sl2_delta0_closed(n: u32) -> Result<TensorElement> {
    let v = GaussMonomial::rs_inv();
    let mut out = TensorElement::zero();
    for p in 0..=n {
        let b = RatFunc::from_poly(gauss_binomial(n, p, GaussMonomial::rs_inv())?);
        let c = &b * &v.power_ratfunc(p as i64 * (p as i64 - n as i64));
        out.add_term(vec![f_power(p), f_power(n - p)], &c);
    }
    Ok(out)
}

/// `S(f^n) = (-1)^n (rs^-1)^{-n(n-1)/2} f^n` in rank one.
pub fn sl2_antipode_closed(n: u32) -> AlgElement {
    let n = n as i64;
    let sign = if n % 2 == 0 {
        RatFunc::one()
    } else {
        RatFunc::from_int(-1)
    };
    let c = &sign * &GaussMonomial::rs_inv().power_ratfunc(-n * (n - 1) / 2);
    AlgElement::term(c, f_power(n as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_element, parse_tensor};

    #[test]
    fn delta0_small_values() {
        let b = BraidedBminus::new(&RootDatum::sl2());
        let f = parse_element("f1").unwrap();
        assert_eq!(
            b.delta0(&f).unwrap(),
            parse_tensor("(f1) ox (1) + (1) ox (f1)").unwrap()
        );
        let f2 = parse_element("f1 f1").unwrap();
        let expect =
            parse_tensor("(f1^2) ox (1) + (1 + r^-1*s) (f1) ox (f1) + (1) ox (f1^2)").unwrap();
        assert_eq!(b.delta0(&f2).unwrap(), expect);
        assert_eq!(
            b.delta0(&AlgElement::one()).unwrap(),
            TensorElement::unit(2)
        );
        assert!(matches!(
            b.delta0(&parse_element("e1'").unwrap()),
            Err(Error::NotInBminus(_))
        ));
    }

    #[test]
    fn two_routes_to_delta0_agree() {
        let b = BraidedBminus::new(&RootDatum::from_type("A2").unwrap());
        for w in ["f1 f2", "f2 f1 f1", "f1 f2 f2 f1"] {
            let x = parse_element(w).unwrap();
            assert_eq!(b.delta0(&x).unwrap(), b.delta0_via_projection(&x).unwrap());
        }
    }

    #[test]
    fn antipode_small_values() {
        let b = BraidedBminus::new(&RootDatum::sl2());
        assert_eq!(
            b.antipode(&parse_element("f1").unwrap()).unwrap(),
            parse_element("-f1").unwrap()
        );
        assert_eq!(
            b.antipode(&parse_element("f1 f1").unwrap()).unwrap(),
            parse_element("r^-1*s f1 f1").unwrap()
        );
        assert_eq!(b.antipode(&AlgElement::one()).unwrap(), AlgElement::one());
    }

    #[test]
    fn closed_forms_in_rank_one() {
        let b = BraidedBminus::new(&RootDatum::sl2());
        for n in 1..=6 {
            let x = AlgElement::word(f_power(n));
            assert_eq!(b.delta0(&x).unwrap(), sl2_delta0_closed(n).unwrap());
            assert_eq!(b.antipode(&x).unwrap(), sl2_antipode_closed(n));
            assert!(b.antipode_convolution(&x).unwrap().is_zero());
        }
    }
}
