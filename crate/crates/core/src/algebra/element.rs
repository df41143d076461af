use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gen::{Gen, Word};
use crate::coeff::RatFunc;

/// Finite linear combination of words over the scalar field.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlgElement {
    terms: BTreeMap<Word, RatFunc>,
}

impl AlgElement {
    pub fn zero() -> Self {
        AlgElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::scalar(RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> Self {
        Self::term(c, Vec::new())
    }

    pub fn word(w: Word) -> Self {
        Self::term(RatFunc::one(), w)
    }

    pub fn gen(g: Gen) -> Self {
        Self::word(vec![g])
    }

    pub fn term(c: RatFunc, w: Word) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        AlgElement { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, RatFunc)>>(it: I) -> Self {
        let mut out = AlgElement::zero();
        for (w, c) in it {
            out.add_term(w, &c);
        }
        out
    }

    pub fn add_term(&mut self, w: Word, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &AlgElement, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        for (w, v) in &other.terms {
            self.add_term(w.clone(), &(v * c));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFunc)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, RatFunc> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[Gen]) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Coefficient of the empty word.
    pub fn scalar_part(&self) -> RatFunc {
        self.coeff(&[])
    }

    /// `Some(c)` if the element is a multiple of the unit.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        if self.terms.keys().all(|w| w.is_empty()) {
            Some(self.scalar_part())
        } else {
            None
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgElement {
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Gen> + '_ {
        self.terms.keys().flat_map(|w| w.iter().copied())
    }

    /// Substitutes every letter by an element; the map is extended multiplicatively.
    pub fn substitute<F: FnMut(Gen) -> AlgElement>(&self, mut f: F) -> AlgElement {
        let mut out = AlgElement::zero();
        for (w, c) in &self.terms {
            let mut acc = AlgElement::scalar(c.clone());
            for g in w {
                acc = &acc * &f(*g);
            }
            out = &out + &acc;
        }
        out
    }

    /// Applies a coefficient map (e.g. the parameter swap) termwise.
    pub fn map_coeffs<F: Fn(&RatFunc) -> RatFunc>(&self, f: F) -> AlgElement {
        AlgElement::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }
}

impl Add for &AlgElement {
    type Output = AlgElement;
    fn add(self, o: &AlgElement) -> AlgElement {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub for &AlgElement {
    type Output = AlgElement;
    fn sub(self, o: &AlgElement) -> AlgElement {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), &-c);
        }
        out
    }
}

impl Neg for &AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        AlgElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

/// Free (concatenation) product; apply a normal form afterwards.
impl Mul for &AlgElement {
    type Output = AlgElement;
    fn mul(self, o: &AlgElement) -> AlgElement {
        let mut out = AlgElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, &(c1 * c2));
            }
        }
        out
    }
}

impl Add for AlgElement {
    type Output = AlgElement;
    fn add(self, o: AlgElement) -> AlgElement {
        &self + &o
    }
}

impl Sub for AlgElement {
    type Output = AlgElement;
    fn sub(self, o: AlgElement) -> AlgElement {
        &self - &o
    }
}

impl Mul for AlgElement {
    type Output = AlgElement;
    fn mul(self, o: AlgElement) -> AlgElement {
        &self * &o
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_element(self))
    }
}

impl fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_element(self))
    }
}

/// Linear combination of word tuples (arity 2 or 3).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TensorElement {
    terms: BTreeMap<Vec<Word>, RatFunc>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(arity: usize) -> Self {
        Self::term(RatFunc::one(), vec![Vec::new(); arity])
    }

    pub fn term(c: RatFunc, ws: Vec<Word>) -> Self {
        let mut t = TensorElement::zero();
        t.add_term(ws, &c);
        t
    }

    /// `x ⊗ y`, bilinearly expanded.
    pub fn pure(x: &AlgElement, y: &AlgElement) -> Self {
        let mut t = TensorElement::zero();
        for (w1, c1) in x.terms() {
            for (w2, c2) in y.terms() {
                t.add_term(vec![w1.clone(), w2.clone()], &(c1 * c2));
            }
        }
        t
    }

    /// `x ⊗ y ⊗ z`.
    pub fn pure3(x: &AlgElement, y: &AlgElement, z: &AlgElement) -> Self {
        let mut t = TensorElement::zero();
        for (w1, c1) in x.terms() {
            for (w2, c2) in y.terms() {
                for (w3, c3) in z.terms() {
                    t.add_term(vec![w1.clone(), w2.clone(), w3.clone()], &(&(c1 * c2) * c3));
                }
            }
        }
        t
    }

    pub fn add_term(&mut self, ws: Vec<Word>, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&ws) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.terms.remove(&ws);
                }
            }
            None => {
                self.terms.insert(ws, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, c: &RatFunc) {
        for (ws, v) in &other.terms {
            self.add_term(ws.clone(), &(v * c));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn arity(&self) -> Option<usize> {
        self.terms.keys().next().map(|k| k.len())
    }

    pub fn coeff(&self, ws: &[Word]) -> RatFunc {
        self.terms.get(ws).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = TensorElement::zero();
        out.add_scaled(self, c);
        out
    }

    /// Applies a linear map to one tensor slot, given on words.
    pub fn map_slot<F: FnMut(&Word) -> AlgElement>(&self, slot: usize, mut f: F) -> TensorElement {
        let mut out = TensorElement::zero();
        for (ws, c) in &self.terms {
            for (w, c2) in f(&ws[slot]).terms() {
                let mut nws = ws.clone();
                nws[slot] = w.clone();
                out.add_term(nws, &(c * c2));
            }
        }
        out
    }

    /// Contracts the tensor into an algebra element by concatenating slots.
    pub fn concat(&self) -> AlgElement {
        AlgElement::from_terms(self.terms.iter().map(|(ws, c)| (ws.concat(), c.clone())))
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, o: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(o, &RatFunc::one());
        out
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, o: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(o, &RatFunc::from_int(-1));
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_tensor(self))
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_tensor(self))
    }
}
