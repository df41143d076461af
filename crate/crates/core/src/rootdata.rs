//! Finite-type Cartan data and the two-parameter Euler form.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::gen::{Gen, TorusFamily};
use crate::coeff::{Mono, RatFunc};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    name: String,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    euler: Vec<Vec<i64>>,
    weight_denominator: i64,
}

/// JSON form accepted by `--config`: either a type name or an explicit matrix.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DatumConfig {
    Named {
        #[serde(rename = "type")]
        type_name: String,
    },
    Explicit {
        cartan: Vec<Vec<i64>>,
        sym: Vec<i64>,
    },
}

impl DatumConfig {
    pub fn build(&self) -> Result<RootDatum> {
        match self {
            DatumConfig::Named { type_name } => RootDatum::from_type(type_name),
            DatumConfig::Explicit { cartan, sym } => {
                RootDatum::from_cartan(cartan.clone(), sym.clone())
            }
        }
    }
}

impl RootDatum {
    /// Built-in finite types of rank at most three.
    pub fn from_type(name: &str) -> Result<RootDatum> {
        let (cartan, sym): (Vec<Vec<i64>>, Vec<i64>) = match name.to_ascii_uppercase().as_str() {
            "A1" => (vec![vec![2]], vec![1]),
            "A2" => (vec![vec![2, -1], vec![-1, 2]], vec![1, 1]),
            "A3" | "D3" => (
                vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
                vec![1, 1, 1],
            ),
            "B2" => (vec![vec![2, -1], vec![-2, 2]], vec![2, 1]),
            "C2" => (vec![vec![2, -2], vec![-1, 2]], vec![1, 2]),
            "B3" => (
                vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]],
                vec![2, 2, 1],
            ),
            "C3" => (
                vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]],
                vec![1, 1, 2],
            ),
            "D2" => (vec![vec![2, 0], vec![0, 2]], vec![1, 1]),
            other => return Err(Error::InvalidDatum(format!("unknown type `{other}`"))),
        };
        let mut d = Self::from_cartan(cartan, sym)?;
        d.name = name.to_ascii_uppercase();
        Ok(d)
    }

    pub fn sl2() -> RootDatum {
        Self::from_type("A1").expect("built-in")
    }

    pub fn from_cartan(cartan: Vec<Vec<i64>>, sym: Vec<i64>) -> Result<RootDatum> {
        let n = cartan.len();
        if n == 0 || n > 8 {
            return Err(Error::InvalidDatum(format!("rank {n} unsupported")));
        }
        if sym.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: sym.len(),
            });
        }
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            if row[i] != 2 {
                return Err(Error::InvalidDatum(format!("a_{0}{0} must be 2", i + 1)));
            }
            for j in 0..n {
                if i != j {
                    if row[j] > 0 {
                        return Err(Error::InvalidDatum(format!(
                            "a_{}{} must be <= 0",
                            i + 1,
                            j + 1
                        )));
                    }
                    if (row[j] == 0) != (cartan[j][i] == 0) {
                        return Err(Error::InvalidDatum(format!(
                            "a_{0}{1} = 0 iff a_{1}{0} = 0",
                            i + 1,
                            j + 1
                        )));
                    }
                    if sym[i] * row[j] != sym[j] * cartan[j][i] {
                        return Err(Error::InvalidDatum(format!(
                            "d_i a_ij != d_j a_ji at ({}, {})",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        if sym.iter().any(|&d| d <= 0) {
            return Err(Error::InvalidDatum("symmetrizers must be positive".into()));
        }
        // finite type: the symmetrized matrix is positive definite
        let symm: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigRational::from_integer((sym[i] * cartan[i][j]).into()))
                    .collect()
            })
            .collect();
        for k in 1..=n {
            let minor: Vec<Vec<BigRational>> = symm[..k].iter().map(|r| r[..k].to_vec()).collect();
            if !det(minor).is_positive() {
                return Err(Error::InvalidDatum(
                    "Cartan matrix is not of finite type".into(),
                ));
            }
        }
        let a: Vec<Vec<BigRational>> = cartan
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect();
        let weight_denominator = det(a).abs().to_integer().to_i64().unwrap_or(1).max(1);
        if crate::coeff::EXP_DENOM % weight_denominator != 0 {
            return Err(Error::InvalidDatum(format!(
                "weight denominator {weight_denominator} is not supported"
            )));
        }
        let euler = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.cmp(&j) {
                        std::cmp::Ordering::Less => sym[i] * cartan[i][j],
                        std::cmp::Ordering::Equal => sym[i],
                        std::cmp::Ordering::Greater => 0,
                    })
                    .collect()
            })
            .collect();
        Ok(RootDatum {
            name: "custom".into(),
            cartan,
            sym,
            euler,
            weight_denominator,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn d(&self, i: usize) -> i64 {
        self.sym[i]
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.sym
    }

    pub fn euler_matrix(&self) -> &[Vec<i64>] {
        &self.euler
    }

    /// `<i, j>` on simple roots.
    pub fn euler(&self, i: usize, j: usize) -> i64 {
        self.euler[i][j]
    }

    /// Smallest `M` with all fundamental weights in `(1/M) Q`.
    pub fn weight_denominator(&self) -> i64 {
        self.weight_denominator
    }

    /// Bilinear extension of the Euler matrix to rational weights.
    pub fn euler_form(&self, lambda: &Weight, mu: &Weight) -> Result<BigRational> {
        let n = self.rank();
        for w in [lambda, mu] {
            if w.0.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: w.0.len(),
                });
            }
        }
        let mut acc = BigRational::zero();
        for i in 0..n {
            if lambda.0[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if self.euler[i][j] != 0 {
                    acc += &lambda.0[i]
                        * &mu.0[j]
                        * BigRational::from_integer(self.euler[i][j].into());
                }
            }
        }
        Ok(acc)
    }

    /// Integer Euler form on root-lattice vectors.
    pub fn euler_int(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc += x * y * self.euler[i][j];
            }
        }
        acc
    }

    /// `c_ij^k = (r_i s_i^-1)^(k(k-1)/2) r^(k<j,i>) s^(-k<i,j>)`.
    pub fn serre_coefficient(&self, i: usize, j: usize, k: u32) -> Result<RatFunc> {
        if i == j {
            return Err(Error::InvalidArgument(
                "Serre coefficient needs i != j".into(),
            ));
        }
        if i >= self.rank() || j >= self.rank() {
            return Err(Error::InvalidArgument("node index out of range".into()));
        }
        let top = 1 - self.a(i, j);
        if k as i64 > top {
            return Err(Error::InvalidArgument(format!(
                "k = {k} exceeds 1 - a_ij = {top}"
            )));
        }
        let k = k as i64;
        let di = self.d(i);
        let half = k * (k - 1) / 2;
        Ok(RatFunc::rs(
            di * half + k * self.euler(j, i),
            -di * half - k * self.euler(i, j),
        ))
    }

    /// Eigenvalue of `w_mu` (`Unprimed`) or `w_mu'` (`Primed`) on a vector of weight `lambda`.
    pub fn torus_eigenvalue(
        &self,
        kind: TorusFamily,
        mu: &Weight,
        lambda: &Weight,
    ) -> Result<RatFunc> {
        let lm = self.euler_form(lambda, mu)?;
        let ml = self.euler_form(mu, lambda)?;
        let (a, b) = match kind {
            TorusFamily::Unprimed => (lm, -ml),
            TorusFamily::Primed => (-ml, lm),
        };
        let m = Mono::rational(&a, &b).ok_or_else(|| {
            Error::InvalidArgument("weight denominator exceeds exponent resolution".into())
        })?;
        Ok(RatFunc::mono(m))
    }

    /// Conjugation character of a torus letter on an integer degree: `t x t^-1 = chi x`.
    pub fn torus_character(&self, t: Gen, beta: &[i64]) -> RatFunc {
        let (fam, sign) = t.torus_family().expect("torus letter");
        let i = t.idx as usize;
        let mut ei = vec![0i64; self.rank()];
        ei[i] = 1;
        let b_i = self.euler_int(beta, &ei);
        let i_b = self.euler_int(&ei, beta);
        let (a, b) = match fam {
            TorusFamily::Unprimed => (b_i, -i_b),
            TorusFamily::Primed => (-i_b, b_i),
        };
        RatFunc::rs(sign * a, sign * b)
    }

    /// `(r_i s_i^-1)`-type base used in Gaussian binomials at node `i`.
    pub fn node_base(&self, i: usize) -> crate::coeff::GaussMonomial {
        crate::coeff::GaussMonomial::rs_inv_pow(self.d(i))
    }

    /// `r_i - s_i`.
    pub fn r_minus_s(&self, i: usize) -> RatFunc {
        let d = self.d(i);
        &RatFunc::rs(d, 0) - &RatFunc::rs(0, d)
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        let mut v = vec![0i64; self.rank()];
        v[i] = 1;
        Weight::from_ints(&v)
    }

    /// Checks that a weight's coordinates have denominators dividing `M`.
    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.0.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: w.0.len(),
            });
        }
        let m = BigInt::from(self.weight_denominator);
        for c in &w.0 {
            if (&m % c.denom()).is_zero() {
                continue;
            }
            return Err(Error::InvalidArgument(format!(
                "weight coordinate {c} has denominator not dividing {m}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut d = BigRational::from_integer(1.into());
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        let piv = m[c][c].clone();
        d *= &piv;
        for r in c + 1..n {
            let f = &m[r][c] / &piv;
            if f.is_zero() {
                continue;
            }
            let pivot_row = m[c].clone();
            for (k, p) in pivot_row.iter().enumerate().skip(c) {
                m[r][k] -= &f * p;
            }
        }
    }
    d
}

/// Weight in simple-root coordinates with exact rational entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<BigRational>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![BigRational::zero(); rank])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight(
            v.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        )
    }

    pub fn from_ratios(v: &[(i64, i64)]) -> Self {
        Weight(
            v.iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn sub_int(&self, beta: &[i64]) -> Weight {
        Weight(
            self.0
                .iter()
                .zip(beta)
                .map(|(a, &b)| a - BigRational::from_integer(b.into()))
                .collect(),
        )
    }

    pub fn add_int(&self, beta: &[i64]) -> Weight {
        Weight(
            self.0
                .iter()
                .zip(beta)
                .map(|(a, &b)| a + BigRational::from_integer(b.into()))
                .collect(),
        )
    }

    /// Integer coordinates, if the weight lies in the root lattice.
    pub fn as_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    /// Parses `"1/2 a1 + a2"`, `"a1+a2"`, `"0"` or a bare coordinate list `"[1/2, 0]"`.
    pub fn parse(text: &str, rank: usize) -> Result<Weight> {
        let t = text.trim();
        if let Some(inner) = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')) {
            let coords: Result<Vec<BigRational>> =
                inner.split(',').map(|c| parse_rational(c.trim())).collect();
            let w = Weight(coords?);
            if w.rank() != rank {
                return Err(Error::DimensionMismatch {
                    expected: rank,
                    got: w.rank(),
                });
            }
            return Ok(w);
        }
        let mut w = Weight::zero(rank);
        if t == "0" {
            return Ok(w);
        }
        let normalized = t.replace('-', "+-");
        for part in normalized.split('+') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (coef_txt, root_txt) = match part.rfind('a') {
                Some(p) => (part[..p].trim(), &part[p + 1..]),
                None => {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: format!("expected a simple root in `{part}`"),
                    })
                }
            };
            let coef = match coef_txt {
                "" => BigRational::from_integer(1.into()),
                "-" => BigRational::from_integer((-1).into()),
                c => parse_rational(c.trim_end_matches('*').trim())?,
            };
            let i: usize = root_txt.trim().parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad root index in `{part}`"),
            })?;
            if i == 0 || i > rank {
                return Err(Error::InvalidArgument(format!(
                    "root a{i} out of range for rank {rank}"
                )));
            }
            w.0[i - 1] += coef;
        }
        Ok(w)
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse {
        pos: 0,
        msg: format!("bad rational `{s}`"),
    };
    let s = s.replace(' ', "");
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gen::Kind;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn euler_values() {
        let a1 = RootDatum::sl2();
        let al = a1.simple_root(0);
        assert_eq!(a1.euler_form(&al, &al).unwrap(), q(1));
        let a2 = RootDatum::from_type("A2").unwrap();
        assert_eq!(
            a2.euler_form(&a2.simple_root(0), &a2.simple_root(1))
                .unwrap(),
            q(-1)
        );
        assert_eq!(
            a2.euler_form(&a2.simple_root(1), &a2.simple_root(0))
                .unwrap(),
            q(0)
        );
        let b2 = RootDatum::from_type("B2").unwrap();
        assert_eq!(b2.euler(0, 1), -2);
        assert_eq!(b2.euler(1, 0), 0);
    }

    #[test]
    fn symmetrization_identity_on_builtins() {
        for t in ["A1", "A2", "A3", "B2", "C2", "B3", "C3"] {
            let d = RootDatum::from_type(t).unwrap();
            for i in 0..d.rank() {
                for j in 0..d.rank() {
                    assert_eq!(
                        d.euler(i, j) + d.euler(j, i),
                        d.d(i) * d.a(i, j),
                        "{t} ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn weight_denominators() {
        let m: Vec<i64> = ["A1", "A2", "A3", "B2"]
            .iter()
            .map(|t| RootDatum::from_type(t).unwrap().weight_denominator())
            .collect();
        assert_eq!(m, vec![2, 3, 4, 2]);
    }

    #[test]
    fn rejects_invalid_cartan() {
        assert!(RootDatum::from_cartan(vec![vec![2, -1], vec![0, 2]], vec![1, 1]).is_err());
        assert!(RootDatum::from_cartan(vec![vec![2, -3], vec![-3, 2]], vec![1, 1]).is_err());
        assert!(RootDatum::from_cartan(vec![vec![2, -1], vec![-2, 2]], vec![1, 1]).is_err());
    }

    #[test]
    fn serre_coefficients() {
        let a2 = RootDatum::from_type("A2").unwrap();
        assert!(a2.serre_coefficient(0, 1, 0).unwrap().is_one());
        assert_eq!(a2.serre_coefficient(0, 1, 1).unwrap(), RatFunc::s());
        assert_eq!(a2.serre_coefficient(1, 0, 1).unwrap(), RatFunc::rs(-1, 0));
        assert!(a2.serre_coefficient(0, 0, 1).is_err());
        assert!(a2.serre_coefficient(0, 1, 3).is_err());
    }

    #[test]
    fn torus_eigenvalues() {
        let d = RootDatum::sl2();
        let al = d.simple_root(0);
        assert_eq!(
            d.torus_eigenvalue(TorusFamily::Unprimed, &al, &al).unwrap(),
            RatFunc::rs(1, -1)
        );
        assert_eq!(
            d.torus_eigenvalue(TorusFamily::Primed, &al, &al).unwrap(),
            RatFunc::rs(-1, 1)
        );
        let z = Weight::zero(1);
        assert!(d
            .torus_eigenvalue(TorusFamily::Unprimed, &al, &z)
            .unwrap()
            .is_one());
        let half = Weight::from_ratios(&[(1, 2)]);
        let ev = d
            .torus_eigenvalue(TorusFamily::Unprimed, &al, &half)
            .unwrap();
        assert_eq!(ev.pow(2), RatFunc::rs(1, -1));
    }

    #[test]
    fn torus_character_matches_eigenvalue() {
        let d = RootDatum::from_type("B2").unwrap();
        let beta = [1i64, -2];
        for i in 0..2 {
            let w = d.torus_character(Gen::new(Kind::W, i as u8), &beta);
            let ev = d
                .torus_eigenvalue(
                    TorusFamily::Unprimed,
                    &d.simple_root(i),
                    &Weight::from_ints(&beta),
                )
                .unwrap();
            assert_eq!(w, ev);
        }
    }

    #[test]
    fn parse_weights() {
        let w = Weight::parse("1/2 a1 + a2", 2).unwrap();
        assert_eq!(w, Weight::from_ratios(&[(1, 2), (1, 1)]));
        assert_eq!(
            Weight::parse("a1-a2", 2).unwrap(),
            Weight::from_ints(&[1, -1])
        );
        assert_eq!(
            Weight::parse("[1/3, 0]", 2).unwrap(),
            Weight::from_ratios(&[(1, 3), (0, 1)])
        );
    }
}
