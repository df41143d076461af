use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::laurent::{LaurentPoly, Mono, EXP_DENOM};
use super::ratfunc::RatFunc;

fn exp_str(units: i64) -> String {
    let q = BigRational::new(BigInt::from(units), BigInt::from(EXP_DENOM));
    q.to_string()
}

pub(crate) fn format_mono(m: Mono) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("r", m.r), ("s", m.s)] {
        if e == 0 {
            continue;
        }
        if e == EXP_DENOM {
            parts.push(name.to_string());
        } else {
            parts.push(format!("{name}^{}", exp_str(e)));
        }
    }
    parts.join("*")
}

/// Formats one term without its sign.
fn format_term_abs(m: Mono, c: &BigRational) -> String {
    let c = c.abs();
    if m == Mono::ONE {
        return c.to_string();
    }
    let mono = format_mono(m);
    if c.is_one() {
        mono
    } else {
        format!("{c}*{mono}")
    }
}

/// Terms in descending deg-lex order, e.g. `r^2*s^-1 + 3/2*r - 1`.
pub fn format_poly(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<(Mono, &BigRational)> = p.terms().map(|(m, c)| (*m, c)).collect();
    terms.sort_by_key(|t| std::cmp::Reverse(t.0.deglex()));
    let mut out = String::new();
    for (k, (m, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&format_term_abs(*m, c));
    }
    out
}

pub fn format_ratfunc(x: &RatFunc) -> String {
    if x.is_poly() {
        format_poly(x.numer())
    } else {
        format!("({})/({})", format_poly(x.numer()), format_poly(x.denom()))
    }
}
