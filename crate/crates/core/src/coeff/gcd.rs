//! Bivariate polynomial gcd via the primitive remainder sequence over Z[x][y].
//!
//! Inputs are Laurent polynomials with rational coefficients; monomial content
//! is stripped, denominators cleared and the exponent lattice compressed, so
//! the dense recursion works on ordinary integer polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{LaurentPoly, Mono};

type UPoly = Vec<BigInt>;
type BPoly = Vec<UPoly>;

fn utrim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn umul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    utrim(&mut out);
    out
}

fn usub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => out.push(x - y),
            (Some(x), None) => out.push(x.clone()),
            (None, Some(y)) => out.push(-y),
            (None, None) => unreachable!(),
        }
    }
    utrim(&mut out);
    out
}

fn icontent(a: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
fn uprim(a: &UPoly) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut g = icontent(a);
    if a.last().expect("nonempty").is_negative() {
        g = -g;
    }
    a.iter().map(|c| c / &g).collect()
}

/// Pseudo-remainder of integer polynomials.
fn uprem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r[r.len() - 1].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &lr * bj;
        }
        r.pop();
        utrim(&mut r);
    }
    r
}

fn ugcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return uprim(b);
    }
    if b.is_empty() {
        return uprim(a);
    }
    let c = icontent(a).gcd(&icontent(b));
    let (mut a, mut b) = (uprim(a), uprim(b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = uprem(&a, &b);
        a = b;
        b = uprim(&r);
    }
    a.iter().map(|x| x * &c).collect()
}

/// Exact quotient; the caller guarantees divisibility.
fn udiv_exact(a: &UPoly, d: &UPoly) -> UPoly {
    let mut r = a.clone();
    let dd = d.len() - 1;
    let ld = &d[dd];
    if r.len() < d.len() {
        return Vec::new();
    }
    let mut q = vec![BigInt::zero(); r.len() - dd];
    while r.len() > dd {
        let k = r.len() - 1 - dd;
        let c = &r[r.len() - 1] / ld;
        for (j, dj) in d.iter().enumerate() {
            r[k + j] -= &c * dj;
        }
        q[k] = c;
        r.pop();
        utrim(&mut r);
    }
    utrim(&mut q);
    q
}

fn btrim(p: &mut BPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn bcontent(a: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        if c.is_empty() {
            continue;
        }
        g = ugcd(&g, c);
        if g.len() == 1 {
            break;
        }
    }
    g
}

fn bprimitive(a: &BPoly) -> (UPoly, BPoly) {
    let mut c = bcontent(a);
    if a.last()
        .and_then(|l| l.last())
        .is_some_and(|x| x.is_negative())
    {
        c = c.iter().map(|x| -x).collect();
    }
    let p = a
        .iter()
        .map(|u| {
            if u.is_empty() {
                Vec::new()
            } else {
                udiv_exact(u, &c)
            }
        })
        .collect();
    (c, p)
}

/// Pseudo-remainder in y.
fn bprem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r[r.len() - 1].clone();
        let mut next: BPoly = r.iter().map(|c| umul(c, lb)).collect();
        for (j, bj) in b.iter().enumerate() {
            next[k + j] = usub(&next[k + j], &umul(&lr, bj));
        }
        next.pop();
        btrim(&mut next);
        r = next;
    }
    r
}

fn bgcd(a: &BPoly, b: &BPoly) -> BPoly {
    let (ca, mut a) = bprimitive(a);
    let (cb, mut b) = bprimitive(b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = bprem(&a, &b);
        a = b;
        b = if r.is_empty() { r } else { bprimitive(&r).1 };
    }
    let c = ugcd(&ca, &cb);
    a.iter().map(|u| umul(u, &c)).collect()
}

/// Dense integer form in compressed exponents; `swap` puts `r` in the outer slot.
fn to_dense(p: &LaurentPoly, gr: i64, gs: i64, swap: bool) -> BPoly {
    let mut l = BigInt::one();
    for (_, c) in p.terms() {
        l = l.lcm(c.denom());
    }
    let mut out: BPoly = Vec::new();
    for (m, c) in p.terms() {
        let (mut i, mut j) = ((m.s / gs) as usize, (m.r / gr) as usize);
        if swap {
            std::mem::swap(&mut i, &mut j);
        }
        if out.len() <= i {
            out.resize(i + 1, Vec::new());
        }
        if out[i].len() <= j {
            out[i].resize(j + 1, BigInt::zero());
        }
        out[i][j] = (c * BigRational::from_integer(l.clone())).to_integer();
    }
    out
}

fn from_dense(p: &BPoly, gr: i64, gs: i64, swap: bool) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (i, u) in p.iter().enumerate() {
        for (j, c) in u.iter().enumerate() {
            let (ir, is) = if swap { (i, j) } else { (j, i) };
            out.add_term(
                Mono {
                    r: ir as i64 * gr,
                    s: is as i64 * gs,
                },
                &BigRational::from_integer(c.clone()),
            );
        }
    }
    out
}

fn degrees(p: &LaurentPoly) -> (i64, i64) {
    p.terms()
        .fold((0, 0), |(a, b), (m, _)| (a.max(m.r), b.max(m.s)))
}

/// Polynomial gcd of two Laurent polynomials, free of monomial factors and
/// with nonnegative exponents. The scalar normalization is unspecified.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return strip_mono(b);
    }
    if b.is_zero() {
        return strip_mono(a);
    }
    if a.as_monomial().is_some() || b.as_monomial().is_some() {
        return LaurentPoly::one();
    }
    let sa = strip_mono(a);
    let sb = strip_mono(b);
    if sa.div_exact(&sb).is_some() {
        return sb;
    }
    if sb.div_exact(&sa).is_some() {
        return sa;
    }
    let (ar, as_) = sa.exponent_gcd();
    let (br, bs) = sb.exponent_gcd();
    let gr = ar.gcd(&br).max(1);
    let gs = as_.gcd(&bs).max(1);
    let (ra, sa_deg) = degrees(&sa);
    let (rb, sb_deg) = degrees(&sb);
    // the outer variable should have the smaller degree
    let swap = ra.max(rb) / gr < sa_deg.max(sb_deg) / gs;
    let g = bgcd(&to_dense(&sa, gr, gs, swap), &to_dense(&sb, gr, gs, swap));
    let g = from_dense(&g, gr, gs, swap);
    if g.is_zero() {
        LaurentPoly::one()
    } else {
        g
    }
}

fn strip_mono(a: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return a.clone();
    }
    a.mul_mono(a.min_exponents().inv())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(ts: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            ts.iter()
                .map(|&(r, s, c)| (Mono::int(r, s), BigRational::from_integer(c.into()))),
        )
    }

    #[test]
    fn gcd_of_products() {
        // (r - s)(r + 2s) and (r - s)(r^2 + s)
        let a = &p(&[(1, 0, 1), (0, 1, -1)]) * &p(&[(1, 0, 1), (0, 1, 2)]);
        let b = &p(&[(1, 0, 1), (0, 1, -1)]) * &p(&[(2, 0, 1), (0, 1, 1)]);
        let g = poly_gcd(&a, &b);
        let expect = p(&[(1, 0, 1), (0, 1, -1)]);
        let q = g.div_exact(&expect).unwrap();
        assert!(q.as_constant().is_some(), "gcd {g:?}");
    }

    #[test]
    fn coprime_gives_constant() {
        let a = p(&[(1, 0, 1), (0, 0, 1)]);
        let b = p(&[(0, 1, 1), (0, 0, 1)]);
        assert!(poly_gcd(&a, &b).as_constant().is_some());
    }

    #[test]
    fn univariate_factor_in_content() {
        // (r + 1)(s - 2) and (r + 1)(s^2 + r)
        let a = &p(&[(1, 0, 1), (0, 0, 1)]) * &p(&[(0, 1, 1), (0, 0, -2)]);
        let b = &p(&[(1, 0, 1), (0, 0, 1)]) * &p(&[(0, 2, 1), (1, 0, 1)]);
        let g = poly_gcd(&a, &b);
        assert!(g
            .div_exact(&p(&[(1, 0, 1), (0, 0, 1)]))
            .unwrap()
            .as_constant()
            .is_some());
    }

    #[test]
    fn div_exact_rejects_non_multiples() {
        let a = p(&[(2, 0, 1), (0, 0, 1)]);
        let b = p(&[(1, 0, 1), (0, 0, 1)]);
        assert!(a.div_exact(&b).is_none());
        let c = &b * &p(&[(1, 0, 1), (0, 1, -3)]);
        assert_eq!(c.div_exact(&b).unwrap(), p(&[(1, 0, 1), (0, 1, -3)]));
    }
}
