use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gcd::poly_gcd;
use super::laurent::{LaurentPoly, Mono};
use crate::error::{Error, Result};

/// Reduced quotient of Laurent polynomials in canonical form.
///
/// The denominator has no monomial factor, nonnegative exponents and a
/// deg-lex leading coefficient of one; zero is `0 / 1`. Equality is
/// therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc::from_poly(LaurentPoly::from_int(c))
    }

    pub fn from_rational(c: BigRational) -> Self {
        RatFunc::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn mono(m: Mono) -> Self {
        RatFunc::from_poly(LaurentPoly::mono(m))
    }

    /// `r^a s^b` for integer exponents.
    pub fn rs(a: i64, b: i64) -> Self {
        RatFunc::mono(Mono::int(a, b))
    }

    pub fn r() -> Self {
        RatFunc::rs(1, 0)
    }

    pub fn s() -> Self {
        RatFunc::rs(0, 1)
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_monomial(&self) -> Option<(Mono, BigRational)> {
        if !self.den.is_one() {
            return None;
        }
        self.num.as_monomial().map(|(m, c)| (*m, c.clone()))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if let Some((m, c)) = den.as_monomial() {
            return RatFunc {
                num: num.mul_mono(m.inv()).scale(&c.recip()),
                den: LaurentPoly::one(),
            };
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.as_constant().is_some() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        Self::normalize_unit(num, den)
    }

    /// Normalizes a coprime pair: shift the denominator to nonnegative exponents
    /// without monomial factor and make its leading coefficient one.
    fn normalize_unit(num: LaurentPoly, den: LaurentPoly) -> Self {
        if let Some((m, c)) = den.as_monomial() {
            return RatFunc {
                num: num.mul_mono(m.inv()).scale(&c.recip()),
                den: LaurentPoly::one(),
            };
        }
        let shift = den.min_exponents().inv();
        let (_, lc) = den.leading().expect("nonzero");
        let inv = lc.recip();
        RatFunc {
            num: num.mul_mono(shift).scale(&inv),
            den: den.mul_mono(shift).scale(&inv),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_unit(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &RatFunc) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 {
            self.inv().expect("nonzero base for negative power")
        } else {
            self.clone()
        };
        let mut acc = RatFunc::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Exchanges the roles of `r` and `s`.
    pub fn swap_rs(&self) -> Self {
        Self::normalize_unit(self.num.swap_rs(), self.den.swap_rs())
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self * &RatFunc::from_int(c)
    }

    /// Sanity evaluator at rational points; used only by tests.
    pub fn eval(&self, r: &BigRational, s: &BigRational) -> Option<BigRational> {
        let n = self.num.eval(r, s)?;
        let d = self.den.eval(r, s)?;
        if d.is_zero() {
            None
        } else {
            Some(n / d)
        }
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        RatFunc::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(&self.num + &o.num);
        }
        if self.den == o.den {
            return RatFunc::reduce(&self.num + &o.num, self.den.clone());
        }
        if o.den.is_one() {
            return RatFunc::reduce(&self.num + &(&o.num * &self.den), self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc::reduce(&(&self.num * &o.den) + &o.num, o.den.clone());
        }
        let g = poly_gcd(&self.den, &o.den);
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = o.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &b) + &(&o.num * &a);
        let den = &self.den * &b;
        RatFunc::reduce(num, den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(&self.num * &o.num);
        }
        // cross cancellation keeps the result reduced
        let g1 = poly_gcd(&self.num, &o.den);
        let g2 = poly_gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = o.den.div_exact(&g1).expect("gcd divides");
        let n2 = o.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        RatFunc::normalize_unit(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        self.checked_div(o).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                (&self).$m(&o)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::from_int(c)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_ratfunc(self))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_ratfunc(self))
    }
}
