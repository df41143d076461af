use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Every exponent is stored as an integer multiple of `1 / EXP_DENOM`.
///
/// The constant is divisible by the square of every weight-lattice index of the
/// supported finite types (up to rank 3), so bilinear values of two fractional
/// weights stay representable.
pub const EXP_DENOM: i64 = 720_720;

/// Exponent pair `r^(r/EXP_DENOM) s^(s/EXP_DENOM)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mono {
    pub r: i64,
    pub s: i64,
}

impl Mono {
    pub const ONE: Mono = Mono { r: 0, s: 0 };

    /// Monomial with integer exponents.
    pub fn int(r: i64, s: i64) -> Mono {
        Mono {
            r: r * EXP_DENOM,
            s: s * EXP_DENOM,
        }
    }

    /// Monomial with rational exponents; `None` if a denominator does not divide `EXP_DENOM`.
    pub fn rational(r: &BigRational, s: &BigRational) -> Option<Mono> {
        Some(Mono {
            r: to_units(r)?,
            s: to_units(s)?,
        })
    }

    pub fn inv(self) -> Mono {
        Mono {
            r: -self.r,
            s: -self.s,
        }
    }

    pub fn pow(self, k: i64) -> Mono {
        Mono {
            r: self.r * k,
            s: self.s * k,
        }
    }

    pub fn r_exp(self) -> BigRational {
        BigRational::new(BigInt::from(self.r), BigInt::from(EXP_DENOM))
    }

    pub fn s_exp(self) -> BigRational {
        BigRational::new(BigInt::from(self.s), BigInt::from(EXP_DENOM))
    }

    /// Degree-lexicographic key with the r-degree breaking ties.
    pub fn deglex(self) -> (i64, i64) {
        (self.r + self.s, self.r)
    }
}

impl std::ops::Mul for Mono {
    type Output = Mono;

    fn mul(self, o: Mono) -> Mono {
        Mono {
            r: self.r + o.r,
            s: self.s + o.s,
        }
    }
}

fn to_units(q: &BigRational) -> Option<i64> {
    let scaled = q * BigRational::from_integer(BigInt::from(EXP_DENOM));
    if scaled.is_integer() {
        scaled.to_integer().to_i64()
    } else {
        None
    }
}

/// Laurent polynomial in `r^(1/M)`, `s^(1/M)` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Mono, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Mono::ONE)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    pub fn term(c: BigRational, m: Mono) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn mono(m: Mono) -> Self {
        Self::term(BigRational::one(), m)
    }

    pub fn r() -> Self {
        Self::mono(Mono::int(1, 0))
    }

    pub fn s() -> Self {
        Self::mono(Mono::int(0, 1))
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, BigRational)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Mono, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Mono::ONE).is_some_and(|c| c.is_one())
    }

    pub fn as_monomial(&self) -> Option<(&Mono, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        match self.as_monomial() {
            Some((m, c)) if *m == Mono::ONE => Some(c.clone()),
            _ => None,
        }
    }

    /// Leading term under degree-lexicographic order.
    pub fn leading(&self) -> Option<(Mono, &BigRational)> {
        self.terms
            .iter()
            .max_by_key(|(m, _)| m.deglex())
            .map(|(m, c)| (*m, c))
    }

    /// Leading term under pure lexicographic order (r first).
    pub(crate) fn lex_leading(&self) -> Option<(Mono, &BigRational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn min_exponents(&self) -> Mono {
        let r = self.terms.keys().map(|m| m.r).min().unwrap_or(0);
        let s = self.terms.keys().map(|m| m.s).min().unwrap_or(0);
        Mono { r, s }
    }

    pub fn mul_mono(&self, m: Mono) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k * m, c.clone()))
                .collect(),
        }
    }

    /// Exchanges the roles of `r` and `s`.
    pub fn swap_rs(&self) -> Self {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Mono { r: m.s, s: m.r }, c.clone())),
        )
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if let Some((m, c)) = d.as_monomial() {
            return Some(self.mul_mono(m.inv()).scale(&c.recip()));
        }
        let (dl, dc) = d.lex_leading().expect("nonzero");
        let dmin = d.min_exponents();
        let amin = self.min_exponents();
        let bound = Mono {
            r: amin.r - dmin.r,
            s: amin.s - dmin.s,
        };
        let mut rem = self.clone();
        let mut q = LaurentPoly::zero();
        while let Some((rl, rc)) = rem.lex_leading() {
            let qm = Mono {
                r: rl.r - dl.r,
                s: rl.s - dl.s,
            };
            if qm.r < bound.r || qm.s < bound.s {
                return None;
            }
            let qc = rc / dc;
            rem = &rem - &d.mul_mono(qm).scale(&qc);
            q.add_term(qm, &qc);
        }
        Some(q)
    }

    /// Evaluates at rational `r`, `s`; exponents must be integral.
    pub fn eval(&self, r: &BigRational, s: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            if m.r % EXP_DENOM != 0 || m.s % EXP_DENOM != 0 {
                return None;
            }
            let rp = pow_q(r, m.r / EXP_DENOM)?;
            let sp = pow_q(s, m.s / EXP_DENOM)?;
            acc += c * rp * sp;
        }
        Some(acc)
    }

    /// Gcd of all exponents in each variable, used to compress representations.
    pub(crate) fn exponent_gcd(&self) -> (i64, i64) {
        let mut gr = 0i64;
        let mut gs = 0i64;
        for m in self.terms.keys() {
            gr = gr.gcd(&m.r);
            gs = gs.gcd(&m.s);
        }
        (gr, gs)
    }

    pub fn has_negative_leading_coefficient(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_negative())
    }
}

fn pow_q(x: &BigRational, e: i64) -> Option<BigRational> {
    if e >= 0 {
        Some(num_traits::pow(x.clone(), e as usize))
    } else if x.is_zero() {
        None
    } else {
        Some(num_traits::pow(x.recip(), (-e) as usize))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(*m1 * *m2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_poly(self))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_poly(self))
    }
}
