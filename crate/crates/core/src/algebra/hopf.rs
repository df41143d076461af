//! Coproduct, counit, antipode and inverse antipode on the Hopf algebras
//! `U>=`, `U<=`, their Heisenberg-notation copies and the quantum double.

use std::collections::HashMap;
use std::sync::Mutex;

use super::element::{AlgElement, TensorElement};
use super::gen::{Gen, Kind, Word};
use super::presentation::Presentation;
use crate::coeff::RatFunc;
use crate::error::{Error, Result};

/// Slotwise product of two tensors, each slot normal-formed in its presentation.
pub fn tensor_mul(
    pres: &[&Presentation],
    x: &TensorElement,
    y: &TensorElement,
) -> Result<TensorElement> {
    let mut out = TensorElement::zero();
    for (xs, c1) in x.terms() {
        for (ys, c2) in y.terms() {
            let c = c1 * c2;
            let mut acc = TensorElement::term(c, Vec::new());
            for (k, p) in pres.iter().enumerate() {
                let mut w = xs[k].clone();
                w.extend_from_slice(&ys[k]);
                let slot = p.normal_word(&w)?;
                acc = extend_slot(&acc, &slot);
            }
            out.add_scaled(&acc, &RatFunc::one());
        }
    }
    Ok(out)
}

/// Appends one more tensor factor.
pub fn extend_slot(t: &TensorElement, x: &AlgElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (ws, c) in t.terms() {
        for (w, c2) in x.terms() {
            let mut nws = ws.clone();
            nws.push(w.clone());
            out.add_term(nws, &(c * c2));
        }
    }
    out
}

/// Normal-forms every slot of a tensor.
pub fn tensor_normal_form(pres: &[&Presentation], t: &TensorElement) -> Result<TensorElement> {
    let mut out = TensorElement::zero();
    for (ws, c) in t.terms() {
        let mut acc = TensorElement::term(c.clone(), Vec::new());
        for (k, p) in pres.iter().enumerate() {
            acc = extend_slot(&acc, &p.normal_word(&ws[k])?);
        }
        out.add_scaled(&acc, &RatFunc::one());
    }
    Ok(out)
}

/// A presentation together with its Hopf structure maps.
pub struct HopfAlgebra {
    pres: Presentation,
    delta_memo: Mutex<HashMap<Word, TensorElement>>,
}

impl std::fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HopfAlgebra({:?})", self.pres)
    }
}

fn g1(k: Kind, i: u8) -> AlgElement {
    AlgElement::gen(Gen::new(k, i))
}

impl HopfAlgebra {
    pub fn new(pres: Presentation) -> Result<HopfAlgebra> {
        if !pres.kind().has_hopf() {
            return Err(Error::NoHopfData(pres.kind().name().into()));
        }
        Ok(HopfAlgebra {
            pres,
            delta_memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn pres(&self) -> &Presentation {
        &self.pres
    }

    pub fn generator_coproduct(&self, g: Gen) -> TensorElement {
        let one = AlgElement::one();
        let x = AlgElement::gen(g);
        match g.kind {
            Kind::E => {
                &TensorElement::pure(&x, &g1(Kind::Kp, g.idx)) + &TensorElement::pure(&one, &x)
            }
            Kind::F => {
                &TensorElement::pure(&x, &one) + &TensorElement::pure(&g1(Kind::K, g.idx), &x)
            }
            Kind::Ep => {
                &TensorElement::pure(&x, &one) + &TensorElement::pure(&g1(Kind::WpInv, g.idx), &x)
            }
            Kind::Fl => {
                &TensorElement::pure(&x, &one) + &TensorElement::pure(&g1(Kind::W, g.idx), &x)
            }
            _ => TensorElement::pure(&x, &x),
        }
    }

    pub fn generator_antipode(&self, g: Gen) -> AlgElement {
        let m1 = RatFunc::from_int(-1);
        let i = g.idx;
        match g.kind {
            Kind::E => AlgElement::term(m1, vec![g, Gen::new(Kind::KpInv, i)]),
            Kind::F => AlgElement::term(m1, vec![Gen::new(Kind::KInv, i), g]),
            Kind::Ep => AlgElement::term(m1, vec![Gen::new(Kind::Wp, i), g]),
            Kind::Fl => AlgElement::term(m1, vec![Gen::new(Kind::WInv, i), g]),
            _ => AlgElement::gen(g.inverse().expect("torus letter")),
        }
    }

    pub fn generator_antipode_inv(&self, g: Gen) -> AlgElement {
        let m1 = RatFunc::from_int(-1);
        let i = g.idx;
        match g.kind {
            Kind::E => AlgElement::term(m1, vec![Gen::new(Kind::KpInv, i), g]),
            Kind::F => AlgElement::term(m1, vec![g, Gen::new(Kind::KInv, i)]),
            Kind::Ep => AlgElement::term(m1, vec![g, Gen::new(Kind::Wp, i)]),
            Kind::Fl => AlgElement::term(m1, vec![g, Gen::new(Kind::WInv, i)]),
            _ => AlgElement::gen(g.inverse().expect("torus letter")),
        }
    }

    fn word_coproduct(&self, w: &[Gen]) -> Result<TensorElement> {
        if w.is_empty() {
            return Ok(TensorElement::unit(2));
        }
        if let Some(hit) = self.delta_memo.lock().expect("memo lock").get(w) {
            return Ok(hit.clone());
        }
        let (last, init) = w.split_last().expect("nonempty");
        let head = self.word_coproduct(init)?;
        let p = [&self.pres, &self.pres];
        let out = tensor_mul(&p, &head, &self.generator_coproduct(*last))?;
        self.delta_memo
            .lock()
            .expect("memo lock")
            .insert(w.to_vec(), out.clone());
        Ok(out)
    }

    pub fn coproduct(&self, x: &AlgElement) -> Result<TensorElement> {
        self.pres.check_letters(x)?;
        let mut out = TensorElement::zero();
        for (w, c) in x.terms() {
            out.add_scaled(&self.word_coproduct(w)?, c);
        }
        Ok(out)
    }

    /// `(Δ ⊗ id) Δ`.
    pub fn coproduct2(&self, x: &AlgElement) -> Result<TensorElement> {
        let d = self.coproduct(x)?;
        self.delta_left(&d)
    }

    /// Applies `Δ` to the first slot of an arity-2 tensor.
    pub fn delta_left(&self, t: &TensorElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for (ws, c) in t.terms() {
            for (vs, c2) in self.word_coproduct(&ws[0])?.terms() {
                out.add_term(vec![vs[0].clone(), vs[1].clone(), ws[1].clone()], &(c * c2));
            }
        }
        Ok(out)
    }

    /// Applies `Δ` to the last slot.
    pub fn delta_right(&self, t: &TensorElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for (ws, c) in t.terms() {
            let last = ws.len() - 1;
            for (vs, c2) in self.word_coproduct(&ws[last])?.terms() {
                let mut nws = ws[..last].to_vec();
                nws.push(vs[0].clone());
                nws.push(vs[1].clone());
                out.add_term(nws, &(c * c2));
            }
        }
        Ok(out)
    }

    pub fn counit(&self, x: &AlgElement) -> Result<RatFunc> {
        self.pres.check_letters(x)?;
        let mut acc = RatFunc::zero();
        for (w, c) in x.terms() {
            if w.iter().all(|g| g.is_torus()) {
                acc = &acc + c;
            }
        }
        Ok(acc)
    }

    fn anti_map(&self, x: &AlgElement, f: impl Fn(Gen) -> AlgElement) -> Result<AlgElement> {
        self.pres.check_letters(x)?;
        let mut out = AlgElement::zero();
        for (w, c) in x.terms() {
            let mut acc = AlgElement::one();
            for g in w.iter().rev() {
                acc = &acc * &f(*g);
            }
            out.add_scaled(&self.pres.normal_form(&acc)?, c);
        }
        Ok(out)
    }

    pub fn antipode(&self, x: &AlgElement) -> Result<AlgElement> {
        self.anti_map(x, |g| self.generator_antipode(g))
    }

    pub fn antipode_inv(&self, x: &AlgElement) -> Result<AlgElement> {
        self.anti_map(x, |g| self.generator_antipode_inv(g))
    }

    /// `m ∘ (S ⊗ id) ∘ Δ` (left) or `m ∘ (id ⊗ S) ∘ Δ` (right).
    pub fn antipode_convolution(&self, x: &AlgElement, left: bool) -> Result<AlgElement> {
        let mut out = AlgElement::zero();
        for (ws, c) in self.coproduct(x)?.terms() {
            let a = AlgElement::word(ws[0].clone());
            let b = AlgElement::word(ws[1].clone());
            let prod = if left {
                &self.antipode(&a)? * &b
            } else {
                &a * &self.antipode(&b)?
            };
            out.add_scaled(&self.pres.normal_form(&prod)?, c);
        }
        Ok(out)
    }

    pub fn mul(&self, x: &AlgElement, y: &AlgElement) -> Result<AlgElement> {
        self.pres.mul(x, y)
    }

    pub fn normal_form(&self, x: &AlgElement) -> Result<AlgElement> {
        self.pres.normal_form(x)
    }
}
