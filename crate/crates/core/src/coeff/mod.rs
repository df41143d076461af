//! Exact scalars: Laurent polynomials and rational functions in `r`, `s`
//! with fractional exponents, plus Gaussian integers, factorials and binomials.

mod gauss;
pub(crate) mod gcd;
mod laurent;
mod ratfunc;
pub(crate) mod text;

pub use gauss::{
    gauss_binomial, gauss_binomial_by_factorials, gauss_factorial, gauss_int, GaussMonomial,
};
pub use laurent::{LaurentPoly, Mono, EXP_DENOM};
pub use ratfunc::RatFunc;
pub use text::{format_poly, format_ratfunc};

/// Parses the scalar grammar, e.g. `(r^2*s^-1 - s)/(r*s^-1 - 1)` or `r^1/2*s`.
pub fn parse_ratfunc(src: &str) -> crate::error::Result<RatFunc> {
    crate::text::parse_scalar(src)
}
