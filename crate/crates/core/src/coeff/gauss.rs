use num_rational::BigRational;
use num_traits::One;

use super::laurent::{LaurentPoly, Mono};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Invertible monomial `v = r^a s^b` used as the base of Gaussian integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaussMonomial(pub Mono);

impl GaussMonomial {
    /// `v = r s^-1`
    pub fn rs_inv() -> Self {
        GaussMonomial(Mono::int(1, -1))
    }

    /// `v = r^-1 s`
    pub fn r_inv_s() -> Self {
        GaussMonomial(Mono::int(-1, 1))
    }

    /// `v = (r s^-1)^d`, the base attached to a node with symmetrizer `d`.
    pub fn rs_inv_pow(d: i64) -> Self {
        GaussMonomial(Mono::int(d, -d))
    }

    pub fn inverse(self) -> Self {
        GaussMonomial(self.0.inv())
    }

    pub fn power(self, k: i64) -> LaurentPoly {
        LaurentPoly::mono(self.0.pow(k))
    }

    pub fn power_ratfunc(self, k: i64) -> RatFunc {
        RatFunc::mono(self.0.pow(k))
    }
}

/// `(n)_v = 1 + v + ... + v^(n-1)`.
pub fn gauss_int(n: u32, v: GaussMonomial) -> LaurentPoly {
    LaurentPoly::from_terms((0..n as i64).map(|k| (v.0.pow(k), BigRational::one())))
}

/// `(n)_v^! = (1)_v (2)_v ... (n)_v`.
pub fn gauss_factorial(n: u32, v: GaussMonomial) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &gauss_int(k, v))
}

/// Gaussian binomial; the quotient of factorials is always a Laurent polynomial.
pub fn gauss_binomial(n: u32, k: u32, v: GaussMonomial) -> Result<LaurentPoly> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "binomial ({n} choose {k}) needs k <= n"
        )));
    }
    // Pascal recursion keeps everything polynomial.
    let mut row = vec![LaurentPoly::one()];
    for m in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        for j in 0..=(m + 1) {
            // binom(m+1, j) = binom(m, j) + v^(m+1-j) binom(m, j-1)
            let a = if j <= m {
                row[j as usize].clone()
            } else {
                LaurentPoly::zero()
            };
            let b = if j >= 1 {
                row[(j - 1) as usize].mul_mono(v.0.pow((m + 1 - j) as i64))
            } else {
                LaurentPoly::zero()
            };
            next.push(&a + &b);
        }
        row = next;
    }
    Ok(row[k as usize].clone())
}

/// Gaussian binomial through the defining quotient of factorials.
pub fn gauss_binomial_by_factorials(n: u32, k: u32, v: GaussMonomial) -> Result<LaurentPoly> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "binomial ({n} choose {k}) needs k <= n"
        )));
    }
    let den = &gauss_factorial(k, v) * &gauss_factorial(n - k, v);
    gauss_factorial(n, v)
        .div_exact(&den)
        .ok_or_else(|| Error::InvalidArgument("factorial quotient is not exact".into()))
}
