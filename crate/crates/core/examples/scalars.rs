//! Exact arithmetic in Q(r, s) and Gaussian binomials in v = rs^-1.

use qdouble::coeff::{gauss_binomial, gauss_factorial, parse_ratfunc, GaussMonomial, RatFunc};

fn main() -> qdouble::Result<()> {
    let x = parse_ratfunc("(r^2*s^-1 - s)/(r*s^-1 - 1)")?;
    println!("(r^2 s^-1 - s)/(r s^-1 - 1) = {x}");
    let y = (&RatFunc::r() - &RatFunc::s()).inv()?;
    let z = (&RatFunc::s() - &RatFunc::r()).inv()?;
    println!("1/(r - s) + 1/(s - r) = {}", &y + &z);
    println!("r^1/2 * r^1/2 = {}", parse_ratfunc("r^1/2 * r^1/2")?);
    let v = GaussMonomial::rs_inv();
    println!("(4)!_v = {}", RatFunc::from_poly(gauss_factorial(4, v)));
    for k in 0..=4 {
        println!(
            "binom(4, {k})_v = {}",
            RatFunc::from_poly(gauss_binomial(4, k, v)?)
        );
    }
    Ok(())
}
