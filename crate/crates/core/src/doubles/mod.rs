//! The quantum double `D = U>= ⊗ U<=`, the Heisenberg double `H = B<= # B>=`,
//! the Schrödinger representations, the diagonal action of `D` on `H` and the
//! comodule maps.
//!
//! Double elements are stored as sums of words `a b` with `a` a normal word of
//! `U>=` (letters `E`, `K'`) followed by a normal word `b` of `U<=` (letters
//! `F`, `K`). Heisenberg elements are stored as words `b a` with `b` in
//! `f`, `w` and `a` in `w'`, `e'`.

mod closed;

pub use closed::{closed_form_action_sl2, ActionFamily};

use std::collections::HashMap;
use std::sync::Mutex;

use crate::algebra::{
    AlgElement, AlgebraKind, Gen, HopfAlgebra, Kind, Presentation, TensorElement, Word,
};
use crate::error::{Error, Result};
use crate::pairing::{PairingEngine, PairingSide};
use crate::rootdata::RootDatum;

/// Which Schrödinger module a target lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TargetSide {
    /// `U>=`, written in `e'`, `w'`.
    Plus,
    /// `U<=`, written in `f`, `w`.
    Minus,
}

pub fn is_geq_letter(g: Gen) -> bool {
    matches!(g.kind, Kind::E | Kind::Kp | Kind::KpInv)
}

pub fn is_leq_letter(g: Gen) -> bool {
    matches!(g.kind, Kind::F | Kind::K | Kind::KInv)
}

pub fn is_plus_letter(g: Gen) -> bool {
    matches!(g.kind, Kind::Ep | Kind::Wp | Kind::WpInv)
}

pub fn is_minus_letter(g: Gen) -> bool {
    matches!(g.kind, Kind::Fl | Kind::W | Kind::WInv)
}

fn split_at_class(
    w: &[Gen],
    first: fn(Gen) -> bool,
    second: fn(Gen) -> bool,
) -> Option<(Word, Word)> {
    let k = w.iter().position(|g| !first(*g)).unwrap_or(w.len());
    if w[k..].iter().all(|g| second(*g)) {
        Some((w[..k].to_vec(), w[k..].to_vec()))
    } else {
        None
    }
}

/// All the structure needed to compute in the doubles of one root datum.
pub struct Doubles {
    datum: RootDatum,
    geq: HopfAlgebra,
    leq: HopfAlgebra,
    plus: HopfAlgebra,
    minus: HopfAlgebra,
    pair_u: PairingEngine,
    pair_w: PairingEngine,
    double_pres: Presentation,
    heis_pres: Presentation,
    act_memo: Mutex<HashMap<(Gen, TargetSide, Word), AlgElement>>,
}

impl std::fmt::Debug for Doubles {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Doubles({})", self.datum.name())
    }
}

impl Doubles {
    pub fn new(datum: &RootDatum) -> Doubles {
        let hopf = |k| {
            HopfAlgebra::new(Presentation::free(datum, k)).expect("Borel parts carry Hopf data")
        };
        Doubles {
            datum: datum.clone(),
            geq: hopf(AlgebraKind::UGeq),
            leq: hopf(AlgebraKind::ULeq),
            plus: hopf(AlgebraKind::WPlus),
            minus: hopf(AlgebraKind::WMinus),
            pair_u: PairingEngine::new(datum, PairingSide::U),
            pair_w: PairingEngine::new(datum, PairingSide::W),
            double_pres: Presentation::free(datum, AlgebraKind::Double),
            heis_pres: Presentation::free(datum, AlgebraKind::Heisenberg),
            act_memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn geq(&self) -> &HopfAlgebra {
        &self.geq
    }

    pub fn leq(&self) -> &HopfAlgebra {
        &self.leq
    }

    pub fn plus(&self) -> &HopfAlgebra {
        &self.plus
    }

    pub fn minus(&self) -> &HopfAlgebra {
        &self.minus
    }

    pub fn pairing_u(&self) -> &PairingEngine {
        &self.pair_u
    }

    pub fn pairing_w(&self) -> &PairingEngine {
        &self.pair_w
    }

    /// The rewriting presentation of `U_{r,s}`.
    pub fn double_presentation(&self) -> &Presentation {
        &self.double_pres
    }

    /// The rewriting presentation of `B_{r,s}`.
    pub fn heisenberg_presentation(&self) -> &Presentation {
        &self.heis_pres
    }

    // ---- letter dictionaries ----

    /// `U`-letters to Heisenberg letters, `E_i -> (s_i - r_i)^-1 w_i' e_i'`.
    pub fn u_to_w(&self, x: &AlgElement) -> Result<AlgElement> {
        let mut err = None;
        let out = x.substitute(|g| {
            let i = g.idx;
            match g.kind {
                Kind::E => match (-&self.datum.r_minus_s(i as usize)).inv() {
                    Ok(c) => {
                        AlgElement::term(c, vec![Gen::new(Kind::Wp, i), Gen::new(Kind::Ep, i)])
                    }
                    Err(e) => {
                        err = Some(e);
                        AlgElement::zero()
                    }
                },
                Kind::Kp => AlgElement::gen(Gen::new(Kind::Wp, i)),
                Kind::KpInv => AlgElement::gen(Gen::new(Kind::WpInv, i)),
                Kind::F => AlgElement::gen(Gen::new(Kind::Fl, i)),
                Kind::K => AlgElement::gen(Gen::new(Kind::W, i)),
                Kind::KInv => AlgElement::gen(Gen::new(Kind::WInv, i)),
                _ => AlgElement::gen(g),
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }

    /// Heisenberg letters to `U`-letters, `e_i' -> (s_i - r_i) K_i'^-1 E_i`.
    pub fn w_to_u(&self, x: &AlgElement) -> AlgElement {
        x.substitute(|g| {
            let i = g.idx;
            match g.kind {
                Kind::Ep => AlgElement::term(
                    -&self.datum.r_minus_s(i as usize),
                    vec![Gen::new(Kind::KpInv, i), Gen::new(Kind::E, i)],
                ),
                Kind::Wp => AlgElement::gen(Gen::new(Kind::Kp, i)),
                Kind::WpInv => AlgElement::gen(Gen::new(Kind::KpInv, i)),
                Kind::Fl => AlgElement::gen(Gen::new(Kind::F, i)),
                Kind::W => AlgElement::gen(Gen::new(Kind::K, i)),
                Kind::WInv => AlgElement::gen(Gen::new(Kind::KInv, i)),
                _ => AlgElement::gen(g),
            }
        })
    }

    // ---- the quantum double ----

    /// `a ⊗ b` from elements of `U>=` and `U<=`.
    pub fn double_pure(&self, a: &AlgElement, b: &AlgElement) -> Result<AlgElement> {
        let a = self.geq.normal_form(a)?;
        let b = self.leq.normal_form(b)?;
        Ok(&a * &b)
    }

    fn split_double(&self, w: &[Gen]) -> Result<(Word, Word)> {
        split_at_class(w, is_geq_letter, is_leq_letter).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "{} is not of the form a b",
                crate::algebra::format_word(w)
            ))
        })
    }

    /// `(a⊗b)(a'⊗b') = Σ φ(S^-1(a'_(1)), b_(1)) φ(a'_(3), b_(3)) a a'_(2) ⊗ b_(2) b'`.
    pub fn double_multiply(&self, x: &AlgElement, y: &AlgElement) -> Result<AlgElement> {
        let mut out = AlgElement::zero();
        for (wx, cx) in x.terms() {
            let (a, b) = self.split_double(wx)?;
            let db = self.leq.coproduct2(&AlgElement::word(b))?;
            for (wy, cy) in y.terms() {
                let (a2, b2) = self.split_double(wy)?;
                let da = self.geq.coproduct2(&AlgElement::word(a2))?;
                let c0 = cx * cy;
                for (xs, ca) in da.terms() {
                    let s1 = self.geq.antipode_inv(&AlgElement::word(xs[0].clone()))?;
                    let x3 = AlgElement::word(xs[2].clone());
                    for (ys, cb) in db.terms() {
                        let p1 = self.pair_u.pair(&s1, &AlgElement::word(ys[0].clone()))?;
                        if p1.is_zero() {
                            continue;
                        }
                        let p3 = self.pair_u.pair(&x3, &AlgElement::word(ys[2].clone()))?;
                        if p3.is_zero() {
                            continue;
                        }
                        let left = self
                            .geq
                            .pres()
                            .normal_word(&[a.clone(), xs[1].clone()].concat())?;
                        let right = self
                            .leq
                            .pres()
                            .normal_word(&[ys[1].clone(), b2.clone()].concat())?;
                        let c = &(&(&c0 * ca) * cb) * &(&p1 * &p3);
                        out.add_scaled(&(&left * &right), &c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Any word in `E, F, K, K'` brought to `a ⊗ b` form by the double product.
    pub fn double_from_element(&self, x: &AlgElement) -> Result<AlgElement> {
        self.double_pres.check_letters(x)?;
        let mut out = AlgElement::zero();
        for (w, c) in x.terms() {
            let mut acc = AlgElement::one();
            for g in w {
                acc = self.double_multiply(&acc, &AlgElement::gen(*g))?;
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }

    /// `a ⊗ b` form rewritten into the `F`-torus-`E` normal order.
    pub fn double_to_presentation(&self, x: &AlgElement) -> Result<AlgElement> {
        self.double_pres.normal_form(x)
    }

    /// Coproduct of a double element in `a ⊗ b` form, as a tensor of two such elements.
    pub fn double_coproduct(&self, x: &AlgElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for (w, c) in x.terms() {
            let (a, b) = self.split_double(w)?;
            let da = self.geq.coproduct(&AlgElement::word(a))?;
            let db = self.leq.coproduct(&AlgElement::word(b))?;
            for (xs, ca) in da.terms() {
                for (ys, cb) in db.terms() {
                    let ws = vec![
                        [xs[0].clone(), ys[0].clone()].concat(),
                        [xs[1].clone(), ys[1].clone()].concat(),
                    ];
                    out.add_term(ws, &(&(c * ca) * cb));
                }
            }
        }
        Ok(out)
    }

    // ---- the Heisenberg double ----

    fn split_heis(&self, w: &[Gen]) -> Result<(Word, Word)> {
        split_at_class(w, is_minus_letter, is_plus_letter).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "{} is not of the form b # a",
                crate::algebra::format_word(w)
            ))
        })
    }

    /// `b # a` from elements of `B<=` and `B>=`.
    pub fn heis_pure(&self, b: &AlgElement, a: &AlgElement) -> Result<AlgElement> {
        let b = self.minus.normal_form(b)?;
        let a = self.plus.normal_form(a)?;
        Ok(&b * &a)
    }

    /// `(b#a)(b'#a') = Σ φ(a_(1), b'_(1)) b b'_(2) # a_(2) a'`.
    pub fn heisenberg_multiply(&self, x: &AlgElement, y: &AlgElement) -> Result<AlgElement> {
        let mut out = AlgElement::zero();
        for (wx, cx) in x.terms() {
            let (b, a) = self.split_heis(wx)?;
            let da = self.plus.coproduct(&AlgElement::word(a))?;
            for (wy, cy) in y.terms() {
                let (b2, a2) = self.split_heis(wy)?;
                let db = self.minus.coproduct(&AlgElement::word(b2))?;
                let c0 = cx * cy;
                for (xs, ca) in da.terms() {
                    for (ys, cb) in db.terms() {
                        let p = self.pair_w.pair_words(&xs[0], &ys[0])?;
                        if p.is_zero() {
                            continue;
                        }
                        let left = self
                            .minus
                            .pres()
                            .normal_word(&[b.clone(), ys[1].clone()].concat())?;
                        let right = self
                            .plus
                            .pres()
                            .normal_word(&[xs[1].clone(), a2.clone()].concat())?;
                        let c = &(&(&c0 * ca) * cb) * &p;
                        out.add_scaled(&(&left * &right), &c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Any word in `e', f, w, w'` brought to `b # a` form by the Heisenberg product.
    pub fn heis_from_element(&self, x: &AlgElement) -> Result<AlgElement> {
        self.heis_pres.check_letters(x)?;
        let mut out = AlgElement::zero();
        for (w, c) in x.terms() {
            let mut acc = AlgElement::one();
            for g in w {
                acc = self.heisenberg_multiply(&acc, &AlgElement::gen(*g))?;
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }

    // ---- Schrödinger representations ----

    fn check_target(&self, x: &AlgElement, side: TargetSide) -> Result<()> {
        let ok = match side {
            TargetSide::Plus => is_plus_letter,
            TargetSide::Minus => is_minus_letter,
        };
        if x.letters().all(ok) {
            Ok(())
        } else {
            Err(Error::WrongSide)
        }
    }

    fn act_letter(&self, g: Gen, side: TargetSide, w: &[Gen]) -> Result<AlgElement> {
        let key = (g, side, w.to_vec());
        if let Some(hit) = self.act_memo.lock().expect("memo lock").get(&key) {
            return Ok(hit.clone());
        }
        let h = self.u_to_w(&AlgElement::gen(g))?;
        let x = AlgElement::word(w.to_vec());
        let out = match (is_geq_letter(g), side) {
            // (a⊗1)·x = Σ a_(1) x S(a_(2))
            (true, TargetSide::Plus) => {
                let mut acc = AlgElement::zero();
                for (ws, c) in self.plus.coproduct(&h)?.terms() {
                    let s = self.plus.antipode(&AlgElement::word(ws[1].clone()))?;
                    let prod = &(&AlgElement::word(ws[0].clone()) * &x) * &s;
                    acc.add_scaled(&self.plus.normal_form(&prod)?, c);
                }
                acc
            }
            // (1⊗b)·x = Σ φ(x_(1), S(b)) x_(2)
            (false, TargetSide::Plus) => {
                let sb = self.minus.antipode(&h)?;
                let mut acc = AlgElement::zero();
                for (ws, c) in self.plus.coproduct(&x)?.terms() {
                    let p = self.pair_w.pair(&AlgElement::word(ws[0].clone()), &sb)?;
                    if !p.is_zero() {
                        acc.add_term(ws[1].clone(), &(c * &p));
                    }
                }
                acc
            }
            // (a⊗1)·y = Σ φ(a, y_(1)) y_(2)
            (true, TargetSide::Minus) => {
                let mut acc = AlgElement::zero();
                for (ws, c) in self.minus.coproduct(&x)?.terms() {
                    let p = self.pair_w.pair(&h, &AlgElement::word(ws[0].clone()))?;
                    if !p.is_zero() {
                        acc.add_term(ws[1].clone(), &(c * &p));
                    }
                }
                acc
            }
            // (1⊗b)·y = Σ b_(1) y S(b_(2))
            (false, TargetSide::Minus) => {
                let mut acc = AlgElement::zero();
                for (ws, c) in self.minus.coproduct(&h)?.terms() {
                    let s = self.minus.antipode(&AlgElement::word(ws[1].clone()))?;
                    let prod = &(&AlgElement::word(ws[0].clone()) * &x) * &s;
                    acc.add_scaled(&self.minus.normal_form(&prod)?, c);
                }
                acc
            }
        };
        self.act_memo
            .lock()
            .expect("memo lock")
            .insert(key, out.clone());
        Ok(out)
    }

    fn act_word(&self, w: &[Gen], side: TargetSide, target: &AlgElement) -> Result<AlgElement> {
        let mut cur = target.clone();
        for g in w.iter().rev() {
            let mut next = AlgElement::zero();
            for (u, c) in cur.terms() {
                next.add_scaled(&self.act_letter(*g, side, u)?, c);
            }
            cur = next;
        }
        Ok(cur)
    }

    /// Schrödinger action of a double element (any words in `E, F, K, K'`).
    pub fn schrodinger_act(
        &self,
        x: &AlgElement,
        target: &AlgElement,
        side: TargetSide,
    ) -> Result<AlgElement> {
        self.double_pres.check_letters(x)?;
        self.check_target(target, side)?;
        let pres = match side {
            TargetSide::Plus => self.plus.pres(),
            TargetSide::Minus => self.minus.pres(),
        };
        let target = pres.normal_form(target)?;
        let mut out = AlgElement::zero();
        for (w, c) in x.terms() {
            out.add_scaled(&self.act_word(w, side, &target)?, c);
        }
        Ok(out)
    }

    /// `(a⊗b)·(b'#a') = Σ (a_(1)⊗b_(1))·b' # (a_(2)⊗b_(2))·a'`.
    pub fn double_act_on_heisenberg(&self, x: &AlgElement, h: &AlgElement) -> Result<AlgElement> {
        self.double_pres.check_letters(x)?;
        let mut out = AlgElement::zero();
        for (w, c) in x.terms() {
            let mut cur = h.clone();
            for g in w.iter().rev() {
                cur = self.letter_act_on_heisenberg(*g, &cur)?;
            }
            out.add_scaled(&cur, c);
        }
        Ok(out)
    }

    fn letter_act_on_heisenberg(&self, g: Gen, h: &AlgElement) -> Result<AlgElement> {
        let hopf = if is_geq_letter(g) {
            &self.geq
        } else {
            &self.leq
        };
        let dg = hopf.generator_coproduct(g);
        let mut out = AlgElement::zero();
        for (w, c) in h.terms() {
            let (b, a) = self.split_heis(w)?;
            let (b, a) = (AlgElement::word(b), AlgElement::word(a));
            for (gs, cg) in dg.terms() {
                let left = self.act_word(&gs[0], TargetSide::Minus, &b)?;
                if left.is_zero() {
                    continue;
                }
                let right = self.act_word(&gs[1], TargetSide::Plus, &a)?;
                out.add_scaled(&(&left * &right), &(c * cg));
            }
        }
        Ok(out)
    }

    // ---- comodule structures ----

    /// `a -> Σ a_(1) ⊗ 1 ⊗ a_(2)` for `a` in `B>=` (as `U>=`).
    pub fn comodule_plus(&self, a: &AlgElement) -> Result<TensorElement> {
        self.check_target(a, TargetSide::Plus)?;
        let d = self.plus.coproduct(a)?;
        self.d_slot_from_w(&d, TargetSide::Plus)
    }

    /// `b -> Σ 1 ⊗ b_(1) ⊗ b_(2)` for `b` in `B<=` (as `U<=`).
    pub fn comodule_minus(&self, b: &AlgElement) -> Result<TensorElement> {
        self.check_target(b, TargetSide::Minus)?;
        let d = self.minus.coproduct(b)?;
        self.d_slot_from_w(&d, TargetSide::Minus)
    }

    fn d_slot_from_w(&self, d: &TensorElement, side: TargetSide) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for (ws, c) in d.terms() {
            let u = self.w_to_u(&AlgElement::word(ws[0].clone()));
            let u = match side {
                TargetSide::Plus => self.geq.normal_form(&u)?,
                TargetSide::Minus => self.leq.normal_form(&u)?,
            };
            out.add_scaled(
                &TensorElement::pure(&u, &AlgElement::word(ws[1].clone())),
                c,
            );
        }
        Ok(out)
    }

    /// `b#a -> Σ (1⊗b_(1))(a_(1)⊗1) ⊗ b_(2)#a_(2)`.
    pub fn comodule_heisenberg(&self, h: &AlgElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for (w, c) in h.terms() {
            let (b, a) = self.split_heis(w)?;
            let db = self.comodule_minus(&AlgElement::word(b))?;
            let da = self.comodule_plus(&AlgElement::word(a))?;
            for (bs, cb) in db.terms() {
                for (as_, ca) in da.terms() {
                    let d = self.double_multiply(
                        &AlgElement::word(bs[0].clone()),
                        &AlgElement::word(as_[0].clone()),
                    )?;
                    let rest = AlgElement::word([bs[1].clone(), as_[1].clone()].concat());
                    out.add_scaled(&TensorElement::pure(&d, &rest), &(&(c * cb) * ca));
                }
            }
        }
        Ok(out)
    }

    /// Both sides of the Yetter-Drinfeld condition for a double letter `h` and
    /// a Heisenberg element `v`:
    /// `Σ h_(1) v_(-1) ⊗ h_(2)·v_(0)` and `Σ (h_(1)·v)_(-1) h_(2) ⊗ (h_(1)·v)_(0)`.
    pub fn yd_sides(&self, h: Gen, v: &AlgElement) -> Result<(TensorElement, TensorElement)> {
        let hx = self.double_from_element(&AlgElement::gen(h))?;
        let dh = self.double_coproduct(&hx)?;
        let dv = self.comodule_heisenberg(v)?;
        let mut lhs = TensorElement::zero();
        let mut rhs = TensorElement::zero();
        for (hs, ch) in dh.terms() {
            let h1 = AlgElement::word(hs[0].clone());
            let h2 = AlgElement::word(hs[1].clone());
            for (vs, cv) in dv.terms() {
                let d = self.double_multiply(&h1, &AlgElement::word(vs[0].clone()))?;
                let acted = self.double_act_on_heisenberg(&h2, &AlgElement::word(vs[1].clone()))?;
                lhs = &lhs + &TensorElement::pure(&d, &acted).scale(&(ch * cv));
            }
            let acted = self.double_act_on_heisenberg(&h1, v)?;
            for (vs, cv) in self.comodule_heisenberg(&acted)?.terms() {
                let d = self.double_multiply(&AlgElement::word(vs[0].clone()), &h2)?;
                rhs = &rhs
                    + &TensorElement::pure(&d, &AlgElement::word(vs[1].clone())).scale(&(ch * cv));
            }
        }
        Ok((lhs, rhs))
    }

    /// Both sides of the module-algebra law `h·(xy) = Σ (h_(1)·x)(h_(2)·y)` in `H`.
    pub fn module_algebra_sides(
        &self,
        h: Gen,
        x: &AlgElement,
        y: &AlgElement,
    ) -> Result<(AlgElement, AlgElement)> {
        let hx = AlgElement::gen(h);
        let lhs = self.double_act_on_heisenberg(&hx, &self.heisenberg_multiply(x, y)?)?;
        let hopf = if is_geq_letter(h) {
            &self.geq
        } else {
            &self.leq
        };
        let mut rhs = AlgElement::zero();
        for (hs, c) in hopf.generator_coproduct(h).terms() {
            let a = self.double_act_on_heisenberg(&AlgElement::word(hs[0].clone()), x)?;
            let b = self.double_act_on_heisenberg(&AlgElement::word(hs[1].clone()), y)?;
            rhs.add_scaled(&self.heisenberg_multiply(&a, &b)?, c);
        }
        Ok((lhs, rhs))
    }

    /// Both sides of the module-algebra law for one Schrödinger module.
    pub fn schrodinger_algebra_sides(
        &self,
        h: Gen,
        x: &AlgElement,
        y: &AlgElement,
        side: TargetSide,
    ) -> Result<(AlgElement, AlgElement)> {
        let hopf = match side {
            TargetSide::Plus => &self.plus,
            TargetSide::Minus => &self.minus,
        };
        let hx = AlgElement::gen(h);
        let lhs = self.schrodinger_act(&hx, &hopf.mul(x, y)?, side)?;
        let dh = if is_geq_letter(h) {
            &self.geq
        } else {
            &self.leq
        }
        .generator_coproduct(h);
        let mut rhs = AlgElement::zero();
        for (hs, c) in dh.terms() {
            let a = self.schrodinger_act(&AlgElement::word(hs[0].clone()), x, side)?;
            let b = self.schrodinger_act(&AlgElement::word(hs[1].clone()), y, side)?;
            rhs.add_scaled(&hopf.mul(&a, &b)?, c);
        }
        Ok((lhs, rhs))
    }

    /// Product in `B- ⊗ B+` braided by the action on `B-` and the coaction on `B+`:
    /// `(a⊗b)(c⊗d) = Σ a (b_(-1)·c) ⊗ b_(0) d`.
    pub fn braided_product_minus_plus(
        &self,
        x: &TensorElement,
        y: &TensorElement,
    ) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for (xs, cx) in x.terms() {
            for (ys, cy) in y.terms() {
                if xs.len() != 2 || ys.len() != 2 {
                    return Err(Error::MissingYDStructure(
                        "braided product needs arity 2".into(),
                    ));
                }
                let bad = |w: &Word, ok: fn(Gen) -> bool| w.iter().any(|g| !ok(*g) || g.is_torus());
                if bad(&xs[0], is_minus_letter) || bad(&ys[0], is_minus_letter) {
                    return Err(Error::MissingYDStructure(
                        "left factor must lie in B-".into(),
                    ));
                }
                if bad(&xs[1], is_plus_letter) || bad(&ys[1], is_plus_letter) {
                    return Err(Error::MissingYDStructure(
                        "right factor must lie in B+".into(),
                    ));
                }
                let a = AlgElement::word(xs[0].clone());
                let c = AlgElement::word(ys[0].clone());
                let d = AlgElement::word(ys[1].clone());
                for (bs, cb) in self
                    .comodule_plus(&AlgElement::word(xs[1].clone()))?
                    .terms()
                {
                    let moved = self.schrodinger_act(
                        &AlgElement::word(bs[0].clone()),
                        &c,
                        TargetSide::Minus,
                    )?;
                    if moved.is_zero() {
                        continue;
                    }
                    let left = self.minus.mul(&a, &moved)?;
                    let right = self.plus.mul(&AlgElement::word(bs[1].clone()), &d)?;
                    out = &out + &TensorElement::pure(&left, &right).scale(&(&(cx * cy) * cb));
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_element, parse_tensor};

    fn el(s: &str) -> AlgElement {
        parse_element(s).unwrap()
    }

    fn sl2() -> Doubles {
        Doubles::new(&RootDatum::sl2())
    }

    #[test]
    fn double_cross_relation() {
        let d = sl2();
        let ef = d.double_multiply(&el("E1"), &el("F1")).unwrap();
        let fe = d.double_multiply(&el("F1"), &el("E1")).unwrap();
        let expect = el("(K1 - K1')/(r - s)");
        assert_eq!(&ef - &fe, d.double_from_element(&expect).unwrap());
        let fk = d.double_multiply(&el("F1"), &el("K1'")).unwrap();
        assert_eq!(fk, el("r^-1*s K1' F1"));
        assert_eq!(
            d.double_multiply(&AlgElement::one(), &el("E1 F1")).unwrap(),
            el("E1 F1")
        );
    }

    #[test]
    fn heisenberg_relations() {
        let d = sl2();
        let p = d.heisenberg_multiply(&el("e1'"), &el("f1")).unwrap();
        assert_eq!(p, el("r^-1*s f1 e1' + 1"));
        let p = d.heisenberg_multiply(&el("e1'"), &el("w1")).unwrap();
        assert_eq!(p, el("r^-1*s w1 e1'"));
        assert_eq!(
            d.heisenberg_multiply(&AlgElement::one(), &el("f1 e1'"))
                .unwrap(),
            el("f1 e1'")
        );
    }

    #[test]
    fn heisenberg_torus_does_not_commute() {
        let d = sl2();
        let p = d.heisenberg_multiply(&el("w1'"), &el("w1")).unwrap();
        assert_eq!(p, el("r*s^-1 w1 w1'"));
    }

    #[test]
    fn torus_actions() {
        let d = sl2();
        let act = |x: &str, t: &str, side| d.schrodinger_act(&el(x), &el(t), side).unwrap();
        assert_eq!(act("K1", "e1'", TargetSide::Plus), el("r*s^-1 e1'"));
        assert_eq!(act("K1'", "e1'", TargetSide::Plus), el("r^-1*s e1'"));
        assert_eq!(act("K1'", "f1", TargetSide::Minus), el("r*s^-1 f1"));
        assert_eq!(act("K1", "f1", TargetSide::Minus), el("r^-1*s f1"));
        assert_eq!(act("1", "f1 f1", TargetSide::Minus), el("f1 f1"));
        assert!(d
            .schrodinger_act(&el("E1"), &el("f1"), TargetSide::Plus)
            .is_err());
    }

    #[test]
    fn generator_actions() {
        let d = sl2();
        assert_eq!(
            d.schrodinger_act(&el("E1"), &el("f1"), TargetSide::Minus)
                .unwrap(),
            el("1/(s - r)")
        );
        assert_eq!(
            d.schrodinger_act(&el("F1"), &el("e1'"), TargetSide::Plus)
                .unwrap(),
            el("-r*s^-1")
        );
        assert_eq!(
            d.schrodinger_act(&el("E1"), &el("e1'"), TargetSide::Plus)
                .unwrap(),
            el("r^-2*s e1' e1'")
        );
        assert_eq!(
            d.schrodinger_act(&el("F1"), &el("f1"), TargetSide::Minus)
                .unwrap(),
            el("(1 - r^-1*s) f1 f1")
        );
        assert_eq!(
            d.double_act_on_heisenberg(&el("F1"), &el("e1'")).unwrap(),
            el("-r*s^-1")
        );
        assert!(d
            .double_act_on_heisenberg(&el("E1"), &AlgElement::one())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn comodule_values() {
        let d = sl2();
        let de = d.comodule_plus(&el("e1'")).unwrap();
        assert_eq!(
            de,
            parse_tensor("(s - r) (K1'^-1 E1) ox (1) + (K1'^-1) ox (e1')").unwrap()
        );
        let df = d.comodule_minus(&el("f1")).unwrap();
        assert_eq!(df, parse_tensor("(F1) ox (1) + (K1) ox (f1)").unwrap());
        assert_eq!(
            d.comodule_heisenberg(&AlgElement::one()).unwrap(),
            TensorElement::unit(2)
        );
    }

    #[test]
    fn braided_minus_plus_products() {
        let d = sl2();
        let t = |s: &str| parse_tensor(s).unwrap();
        let p = d
            .braided_product_minus_plus(&t("(f1) ox (1)"), &t("(1) ox (e1')"))
            .unwrap();
        assert_eq!(p, t("(f1) ox (e1')"));
        let p = d
            .braided_product_minus_plus(&t("(1) ox (e1')"), &t("(f1) ox (1)"))
            .unwrap();
        assert_eq!(p, t("(1) ox (1) + r^-1*s (f1) ox (e1')"));
    }

    #[test]
    fn yd_and_module_algebra_in_rank_one() {
        let d = sl2();
        for h in ["E1", "F1", "K1", "K1'"] {
            let g = el(h).letters().next().unwrap();
            for v in ["e1'", "f1", "w1", "w1'", "f1 e1'"] {
                let (l, r) = d.yd_sides(g, &el(v)).unwrap();
                assert_eq!(l, r, "YD {h} {v}");
            }
            let (l, r) = d.module_algebra_sides(g, &el("e1'"), &el("f1")).unwrap();
            assert_eq!(l, r, "module algebra {h}");
        }
    }

    #[test]
    fn closed_forms_match_iterated_actions() {
        let d = sl2();
        let pow = |k: Kind, n: u32| AlgElement::word(vec![Gen::new(k, 0); n as usize]);
        for n in 0..=4 {
            for m in 0..=n {
                for w in ActionFamily::ALL {
                    let (actor, tk, side) = match w {
                        ActionFamily::EOnE => (Kind::E, Kind::Ep, TargetSide::Plus),
                        ActionFamily::EOnF => (Kind::E, Kind::Fl, TargetSide::Minus),
                        ActionFamily::FOnE => (Kind::F, Kind::Ep, TargetSide::Plus),
                        ActionFamily::FOnF => (Kind::F, Kind::Fl, TargetSide::Minus),
                    };
                    let got = d
                        .schrodinger_act(&pow(actor, m), &pow(tk, n), side)
                        .unwrap();
                    let (c, p) = closed_form_action_sl2(w, m, n).unwrap();
                    assert_eq!(got, pow(tk, p).scale(&c), "{} m={m} n={n}", w.name());
                }
            }
        }
    }
}
