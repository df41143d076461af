use num_traits::Signed;

use super::element::{AlgElement, TensorElement};
use super::gen::Gen;
use crate::coeff::{format_poly, RatFunc};
use crate::error::{Error, Result};

pub fn format_word(w: &[Gen]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let g = w[i];
        let mut j = i;
        while j < w.len() && w[j] == g {
            j += 1;
        }
        let n = (j - i) as i64;
        let e = if g.is_inverse_letter() { -n } else { n };
        if e == 1 {
            parts.push(g.base_name());
        } else {
            parts.push(format!("{}^{}", g.base_name(), e));
        }
        i = j;
    }
    parts.join(" ")
}

/// `(sign, coefficient text)`; an empty text means the unit coefficient.
fn format_coeff(c: &RatFunc) -> (bool, String) {
    let num = c.numer();
    let neg = num.leading().is_some_and(|(_, k)| k.is_negative());
    let abs_num = if neg { -num } else { num.clone() };
    let body = if c.is_poly() {
        if abs_num.is_one() {
            String::new()
        } else if abs_num.len() == 1 {
            format_poly(&abs_num)
        } else {
            format!("({})", format_poly(&abs_num))
        }
    } else {
        format!("({})/({})", format_poly(&abs_num), format_poly(c.denom()))
    };
    (neg, body)
}

fn join_terms(items: Vec<(bool, String)>) -> String {
    if items.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (neg, t)) in items.into_iter().enumerate() {
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&t);
    }
    out
}

fn sorted_terms(x: &AlgElement) -> Vec<(&Vec<Gen>, &RatFunc)> {
    let mut v: Vec<_> = x.terms().collect();
    v.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(b.0)));
    v
}

fn format_plain(x: &AlgElement) -> String {
    let items = sorted_terms(x)
        .into_iter()
        .map(|(w, c)| {
            let (neg, coef) = format_coeff(c);
            let text = match (coef.is_empty(), w.is_empty()) {
                (true, true) => "1".to_string(),
                (true, false) => format_word(w),
                (false, true) => coef,
                (false, false) => format!("{coef} {}", format_word(w)),
            };
            (neg, text)
        })
        .collect();
    join_terms(items)
}

/// Canonical element text; a shared non-trivial denominator is factored out.
pub fn format_element(x: &AlgElement) -> String {
    let mut dens = x.terms().map(|(_, c)| c.denom());
    if x.len() >= 2 {
        let first = dens.next().expect("nonempty");
        if !first.is_one() && dens.all(|d| d == first) {
            let den = RatFunc::from_poly(first.clone());
            let scaled = x.scale(&den);
            return format!("({})/({})", format_plain(&scaled), format_poly(first));
        }
    }
    format_plain(x)
}

pub fn format_tensor(t: &TensorElement) -> String {
    let items = t
        .terms()
        .map(|(ws, c)| {
            let (neg, coef) = format_coeff(c);
            let slots: Vec<String> = ws.iter().map(|w| format!("({})", format_word(w))).collect();
            let body = slots.join(" ox ");
            let text = if coef.is_empty() {
                body
            } else {
                format!("{coef} {body}")
            };
            (neg, text)
        })
        .collect();
    join_terms(items)
}

pub fn parse_element(src: &str) -> Result<AlgElement> {
    let v = crate::text::parse_general(src)?;
    let terms = crate::text::single_slot(&v).ok_or_else(|| Error::Parse {
        pos: 0,
        msg: "expected an element, found a tensor".into(),
    })?;
    Ok(AlgElement::from_terms(terms))
}

pub fn parse_tensor(src: &str) -> Result<TensorElement> {
    crate::text::parse_general(src)
}
