use std::collections::BTreeMap;

use super::{degrees_up_to, ModuleVector, WeightModule};
use crate::algebra::{format_word, AlgElement, Gen, Kind, Word};
use crate::coeff::{gauss_factorial, GaussMonomial, RatFunc};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rootdata::Weight;

/// An element of `B- ⊗ M`, keyed by the basis words of `B-`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BTensor {
    slots: BTreeMap<Word, ModuleVector>,
}

impl BTensor {
    pub fn zero() -> Self {
        BTensor::default()
    }

    pub fn add(&mut self, w: &[Gen], v: &ModuleVector, c: &RatFunc) {
        let slot = self.slots.entry(w.to_vec()).or_default();
        slot.add_scaled(v, c);
        if slot.is_zero() {
            self.slots.remove(w);
        }
    }

    pub fn add_tensor(&mut self, o: &BTensor, c: &RatFunc) {
        for (w, v) in &o.slots {
            self.add(w, v, c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &ModuleVector)> {
        self.slots.iter()
    }

    pub fn get(&self, w: &[Gen]) -> ModuleVector {
        self.slots.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn format(&self, m: &WeightModule) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .slots
            .iter()
            .map(|(w, v)| format!("({}) ox ({})", format_word(w), m.format_vector(v)))
            .collect();
        parts.join(" + ")
    }
}

/// Outcome of checking the Hopf-module maps on every basis vector.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HopfModuleReport {
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl HopfModuleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl WeightModule {
    fn max_height(&self, m: &ModuleVector) -> u32 {
        m.support().map(|k| self.basis[k].height).max().unwrap_or(0)
    }

    fn lowering_action(&self, x: &AlgElement, m: &ModuleVector) -> Result<ModuleVector> {
        self.act(x, m)
    }

    /// `ρ(m) = Σ f_{β,k} ⊗ e_{β,k}·m` over dual bases of every degree.
    pub fn rho(&self, m: &ModuleVector) -> Result<BTensor> {
        let mut out = BTensor::zero();
        let top = self.max_height(m).min(self.depth);
        for beta in degrees_up_to(self.datum.rank(), top) {
            let db = self.bminus.degree(&beta)?;
            for (e, f) in db.e.iter().zip(&db.f) {
                let em = self.act_word(e, m)?;
                if em.is_zero() {
                    continue;
                }
                for (w, c) in f.terms() {
                    out.add(w, &em, c);
                }
            }
        }
        Ok(out)
    }

    /// `ρ(m) = Σ (rs^-1)^{n(n-1)/2} f^n/(n)!_{rs^-1} ⊗ e'^n m`, rank one only.
    pub fn rho_closed_sl2(&self, m: &ModuleVector) -> Result<BTensor> {
        self.require_rank_one()?;
        let v = GaussMonomial::rs_inv();
        let ep = Gen::new(Kind::Ep, 0);
        let mut out = BTensor::zero();
        let mut cur = m.clone();
        let mut n = 0i64;
        while !cur.is_zero() {
            let c = v
                .power_ratfunc(n * (n - 1) / 2)
                .checked_div(&RatFunc::from_poly(gauss_factorial(n as u32, v)))?;
            out.add(&vec![Gen::new(Kind::Fl, 0); n as usize], &cur, &c);
            cur = self.act_gen(ep, &cur)?;
            n += 1;
        }
        Ok(out)
    }

    fn require_rank_one(&self) -> Result<()> {
        if self.datum.rank() != 1 {
            return Err(Error::InvalidArgument("closed form needs rank one".into()));
        }
        Ok(())
    }

    /// `Δ0(x)·t`, with `(a⊗b)(y⊗m) = (w_b on y) ay ⊗ bm` the braided product on `B- ⊗ M`.
    pub fn delta0_on(&self, x: &AlgElement, t: &BTensor) -> Result<BTensor> {
        let braided = self.bminus.braided();
        let mut out = BTensor::zero();
        for (ws, c) in braided.delta0(x)?.terms() {
            for (w, v) in t.terms() {
                let bm = self.act_word(&ws[1], v)?;
                if bm.is_zero() {
                    continue;
                }
                let scalar = c * &braided.braid_scalar(&ws[1], w);
                let prod = AlgElement::word([ws[0].as_slice(), w.as_slice()].concat());
                for (u, d) in self.bminus.reduce_words(&prod)? {
                    out.add(&u, &bm, &(&d * &scalar));
                }
            }
        }
        Ok(out)
    }

    /// `(π ⊗ id)(Δ(x)·t)` with `Δ` the coproduct of the Borel part and `π` dropping the torus.
    pub fn projected_delta_on(&self, x: &AlgElement, t: &BTensor) -> Result<BTensor> {
        let hopf = self.bminus.braided().hopf();
        let mut out = BTensor::zero();
        for (ws, c) in hopf.coproduct(x)?.terms() {
            for (w, v) in t.terms() {
                let mv = self.act(&AlgElement::word(ws[1].clone()), v)?;
                if mv.is_zero() {
                    continue;
                }
                let first = hopf
                    .pres()
                    .normal_word(&[ws[0].as_slice(), w.as_slice()].concat())?;
                let mut plain = AlgElement::zero();
                for (u, d) in first.terms() {
                    let stripped: Word = u.iter().copied().filter(|g| !g.is_torus()).collect();
                    plain.add_term(stripped, d);
                }
                for (u, d) in self.bminus.reduce_words(&plain)? {
                    out.add(&u, &mv, &(&d * c));
                }
            }
        }
        Ok(out)
    }

    /// Checks `ρ(x·m) = Δ0(x)ρ(m) = (π⊗id)(Δ(x)ρ(m))` for `x` in `B-`; `None` when `x·m` leaves the truncation.
    pub fn rho_compatible(&self, x: &AlgElement, m: &ModuleVector) -> Result<Option<bool>> {
        self.bminus.braided().check(x)?;
        let run = || -> Result<bool> {
            let lhs = self.rho(&self.act(x, m)?)?;
            let r = self.rho(m)?;
            let a = self.delta0_on(x, &r)?;
            let b = self.projected_delta_on(x, &r)?;
            Ok(lhs == a && a == b)
        };
        match run() {
            Ok(ok) => Ok(Some(ok)),
            Err(Error::TruncationLoss) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Coinvariants of weight `mu`: the `m` with `ρ(m) = 1 ⊗ m`, i.e. killed by every `e_{β,k}`, `β ≠ 0`.
    pub fn coinvariants(&self, mu: &Weight) -> Result<Vec<ModuleVector>> {
        let idx = self.weight_space(mu);
        if idx.is_empty() {
            return Ok(Vec::new());
        }
        let top = idx.iter().map(|&k| self.basis[k].height).max().unwrap_or(0);
        let mut rows: Vec<Vec<RatFunc>> = Vec::new();
        for beta in degrees_up_to(self.datum.rank(), top).into_iter().skip(1) {
            let target = self.weight_space(&mu.add_int(&beta));
            if target.is_empty() {
                continue;
            }
            let db = self.bminus.degree(&beta)?;
            for e in &db.e {
                let m = self.matrix_of(&idx, &target, |v| self.act_word(e, v))?;
                rows.extend(m.to_rows());
            }
        }
        if rows.is_empty() {
            return Ok(idx.iter().map(|&k| ModuleVector::basis(k)).collect());
        }
        Ok(Matrix::from_rows(rows)
            .kernel()
            .iter()
            .map(|v| self.combine(&idx, v))
            .collect())
    }

    /// `P(m) = Σ S(m_(-1)) m_(0)` with the braided antipode.
    pub fn projector(&self, m: &ModuleVector) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero();
        let top = self.max_height(m).min(self.depth);
        for beta in degrees_up_to(self.datum.rank(), top) {
            let db = self.bminus.degree(&beta)?;
            for (e, f) in db.e.iter().zip(&db.f) {
                let em = self.act_word(e, m)?;
                if em.is_zero() {
                    continue;
                }
                let s = self.bminus.braided().antipode(f)?;
                out = &out + &self.lowering_action(&s, &em)?;
            }
        }
        Ok(out)
    }

    /// `P(m) = Σ (-1)^n (rs^-1)^{-n(n-1)/2} f^n/(n)!_{r^-1 s} e'^n m`, rank one only.
    pub fn projector_sl2(&self, m: &ModuleVector) -> Result<ModuleVector> {
        self.require_rank_one()?;
        let v = GaussMonomial::rs_inv();
        let ep = Gen::new(Kind::Ep, 0);
        let mut out = ModuleVector::zero();
        let mut cur = m.clone();
        let mut n = 0i64;
        while !cur.is_zero() {
            let sign = if n % 2 == 0 {
                RatFunc::one()
            } else {
                RatFunc::from_int(-1)
            };
            let fact = RatFunc::from_poly(gauss_factorial(n as u32, GaussMonomial::r_inv_s()));
            let c = (&sign * &v.power_ratfunc(-n * (n - 1) / 2)).checked_div(&fact)?;
            let fn_m = self.act_word(&vec![Gen::new(Kind::Fl, 0); n as usize], &cur)?;
            out.add_scaled(&fn_m, &c);
            cur = self.act_gen(ep, &cur)?;
            n += 1;
        }
        Ok(out)
    }

    /// `m ↦ Σ m_(-1) ⊗ P(m_(0))`, landing in `B- ⊗ M^coB`.
    pub fn hopf_forward(&self, m: &ModuleVector) -> Result<BTensor> {
        let mut out = BTensor::zero();
        for (w, v) in self.rho(m)?.terms() {
            out.add(w, &self.projector(v)?, &RatFunc::one());
        }
        Ok(out)
    }

    /// `x ⊗ u ↦ x·u`.
    pub fn hopf_backward(&self, t: &BTensor) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero();
        for (w, v) in t.terms() {
            out = &out + &self.act_word(w, v)?;
        }
        Ok(out)
    }

    /// Runs the Hopf-module maps on every basis vector: `P(m)` must be coinvariant
    /// and the backward map must undo the forward one.
    pub fn hopf_module_check(&self) -> Result<HopfModuleReport> {
        let mut rep = HopfModuleReport::default();
        let n = self.datum.rank();
        for k in 0..self.dim() {
            let m = ModuleVector::basis(k);
            let run = || -> Result<(ModuleVector, ModuleVector)> {
                let back = self.hopf_backward(&self.hopf_forward(&m)?)?;
                Ok((back, self.projector(&m)?))
            };
            let (back, p) = match run() {
                Ok(x) => x,
                Err(Error::TruncationLoss) => {
                    rep.skipped += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            let maximal = (0..n)
                .map(|i| self.act_gen(Gen::new(Kind::Ep, i as u8), &p))
                .collect::<Result<Vec<_>>>()?;
            if back != m {
                rep.failures.push(format!(
                    "backward(forward({})) differs",
                    self.basis[k].label
                ));
            } else if maximal.iter().any(|v| !v.is_zero()) {
                rep.failures
                    .push(format!("P({}) is not coinvariant", self.basis[k].label));
            }
            rep.checked += 1;
        }
        Ok(rep)
    }
}
