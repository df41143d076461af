//! Closed forms for the rank-one action of `U_{r,s}` on `B_{r,s}`.

use crate::coeff::{gauss_factorial, GaussMonomial, RatFunc};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionFamily {
    /// `E^m · e'^n`
    EOnE,
    /// `E^m · f^n`
    EOnF,
    /// `F^m · e'^n`
    FOnE,
    /// `F^m · f^n`
    FOnF,
}

impl ActionFamily {
    pub const ALL: [ActionFamily; 4] = [
        ActionFamily::EOnE,
        ActionFamily::EOnF,
        ActionFamily::FOnE,
        ActionFamily::FOnF,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ActionFamily::EOnE => "E^m.e'^n",
            ActionFamily::EOnF => "E^m.f^n",
            ActionFamily::FOnE => "F^m.e'^n",
            ActionFamily::FOnF => "F^m.f^n",
        }
    }
}

fn fact(n: i64) -> RatFunc {
    RatFunc::from_poly(gauss_factorial(n as u32, GaussMonomial::rs_inv()))
}

/// `(coefficient, power)` with `X^m · y^n = coefficient · y^power`, for `m <= n`.
pub fn closed_form_action_sl2(which: ActionFamily, m: u32, n: u32) -> Result<(RatFunc, u32)> {
    if m > n {
        return Err(Error::InvalidRange(format!(
            "closed forms need m <= n, got m = {m}, n = {n}"
        )));
    }
    if m == 0 {
        return Ok((RatFunc::one(), n));
    }
    let v = GaussMonomial::rs_inv();
    let (m, n) = (m as i64, n as i64);
    Ok(match which {
        ActionFamily::EOnE => {
            let ratio = fact(n + m - 1).checked_div(&fact(n - 1))?;
            let c = &(&ratio * &v.power_ratfunc(-n * m - m * (m - 1) / 2)) * &RatFunc::rs(-m, 0);
            (c, (n + m) as u32)
        }
        ActionFamily::EOnF => {
            let s_minus_r = &RatFunc::s() - &RatFunc::r();
            let c = fact(n).checked_div(&(&fact(n - m) * &s_minus_r.pow(m)))?;
            (c, (n - m) as u32)
        }
        ActionFamily::FOnE => {
            let sign = if m % 2 == 0 {
                RatFunc::one()
            } else {
                RatFunc::from_int(-1)
            };
            let c = &(&sign * &fact(n).checked_div(&fact(n - m))?) * &v.power_ratfunc(m);
            (c, (n - m) as u32)
        }
        ActionFamily::FOnF => {
            let mut c = RatFunc::one();
            for i in 0..m {
                c = &c * &(&RatFunc::one() - &v.power_ratfunc(-(n + i)));
            }
            (c, (n + m) as u32)
        }
    })
}
