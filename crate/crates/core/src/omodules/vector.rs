use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::coeff::RatFunc;

/// Sparse vector over `Q(r,s)` in the basis of a [`super::WeightModule`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleVector {
    coeffs: BTreeMap<usize, RatFunc>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        ModuleVector::default()
    }

    pub fn basis(k: usize) -> Self {
        let mut v = ModuleVector::zero();
        v.coeffs.insert(k, RatFunc::one());
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, RatFunc)>>(it: I) -> Self {
        let mut v = ModuleVector::zero();
        for (k, c) in it {
            v.add_term(k, &c);
        }
        v
    }

    pub fn add_term(&mut self, k: usize, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.get(&k) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, sum);
        }
    }

    pub fn add_scaled(&mut self, other: &ModuleVector, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        for (k, d) in &other.coeffs {
            self.add_term(*k, &(d * c));
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return ModuleVector::zero();
        }
        ModuleVector {
            coeffs: self.coeffs.iter().map(|(k, d)| (*k, d * c)).collect(),
        }
    }

    pub fn shift(&self, off: usize) -> Self {
        ModuleVector {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, d)| (k + off, d.clone()))
                .collect(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&usize, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, k: usize) -> RatFunc {
        self.coeffs.get(&k).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn format_with(&self, label: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, c)| {
                if c.is_one() {
                    label(*k)
                } else {
                    format!("({c}) {}", label(*k))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl Add for &ModuleVector {
    type Output = ModuleVector;
    fn add(self, o: &ModuleVector) -> ModuleVector {
        let mut v = self.clone();
        v.add_scaled(o, &RatFunc::one());
        v
    }
}

impl Sub for &ModuleVector {
    type Output = ModuleVector;
    fn sub(self, o: &ModuleVector) -> ModuleVector {
        let mut v = self.clone();
        v.add_scaled(o, &RatFunc::from_int(-1));
        v
    }
}

impl Neg for &ModuleVector {
    type Output = ModuleVector;
    fn neg(self) -> ModuleVector {
        self.scale(&RatFunc::from_int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_cancels() {
        let a = ModuleVector::from_terms([(0, RatFunc::r()), (2, RatFunc::one())]);
        let b = ModuleVector::basis(2);
        let d = &a - &b;
        assert_eq!(d, ModuleVector::basis(0).scale(&RatFunc::r()));
        assert!((&d - &d).is_zero());
        assert_eq!(b.shift(3), ModuleVector::basis(5));
        assert_eq!((-&b).coeff(2), RatFunc::from_int(-1));
    }
}
