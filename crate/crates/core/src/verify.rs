//! Verification suites: each runs a family of exact identity checks and
//! records one line per check.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::presentation::serre_relations;
use crate::algebra::{
    sl2_antipode_closed, sl2_delta0_closed, AlgElement, AlgebraKind, BraidedBminus, Gen,
    HopfAlgebra, Kind, Presentation, Word,
};
use crate::doubles::{closed_form_action_sl2, ActionFamily, Doubles, TargetSide};
use crate::error::{Error, Result};
use crate::omodules::{ModuleVector, WeightModule};
use crate::pairing::{words_of_degree, PairingEngine, PairingSide};
use crate::rootdata::{RootDatum, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Hopf,
    Pairing,
    Actions,
    Modules,
    Projector,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Hopf,
        Suite::Pairing,
        Suite::Actions,
        Suite::Modules,
        Suite::Projector,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Hopf => "hopf",
            Suite::Pairing => "pairing",
            Suite::Actions => "actions",
            Suite::Modules => "modules",
            Suite::Projector => "projector",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "all" => Suite::All,
            "hopf" => Suite::Hopf,
            "pairing" => Suite::Pairing,
            "actions" => Suite::Actions,
            "modules" => Suite::Modules,
            "projector" => Suite::Projector,
            _ => return Err(Error::InvalidArgument(format!("unknown suite `{s}`"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    /// What the check is about.
    pub topic: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub datum: String,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Fixed-width table, one row per check.
    pub fn table(&self) -> String {
        let w = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(4)
            .max(5);
        let t = self
            .checks
            .iter()
            .map(|c| c.topic.len())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut out = format!("{:<9} {:<w$} {:<t$} result\n", "suite", "check", "topic");
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{:<9} {:<w$} {:<t$} {verdict}",
                c.suite, c.name, c.topic
            ));
            if !c.detail.is_empty() {
                out.push_str(&format!("  {}", c.detail));
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "{} checks, {} failed\n",
            self.checks.len(),
            failed
        ));
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Truncation depth for module checks.
    pub depth: u32,
    /// Largest degree height for pairing and Hopf checks.
    pub height_cap: u32,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            depth: 4,
            height_cap: 3,
            seed: 1,
        }
    }
}

struct Recorder {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Recorder {
    fn new(suite: Suite) -> Recorder {
        Recorder {
            suite: suite.name(),
            checks: Vec::new(),
        }
    }

    fn push(
        &mut self,
        name: impl Into<String>,
        topic: &'static str,
        passed: bool,
        detail: impl Into<String>,
    ) {
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            topic,
            passed,
            detail: detail.into(),
        });
    }

    /// Records an equality; errors count as failures with the error as detail.
    fn eq<T: PartialEq>(
        &mut self,
        name: impl Into<String>,
        topic: &'static str,
        r: Result<(T, T)>,
    ) {
        match r {
            Ok((a, b)) => self.push(name, topic, a == b, ""),
            Err(e) => self.push(name, topic, false, e.to_string()),
        }
    }

    fn ok(&mut self, name: impl Into<String>, topic: &'static str, r: Result<(bool, String)>) {
        match r {
            Ok((p, d)) => self.push(name, topic, p, d),
            Err(e) => self.push(name, topic, false, e.to_string()),
        }
    }
}

/// Runs one suite (or all of them, in a fixed order).
pub fn run_suite(datum: &RootDatum, suite: Suite, opts: &VerifyOptions) -> Result<VerifyReport> {
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    let mut report = VerifyReport {
        datum: datum.name().to_string(),
        checks: Vec::new(),
    };
    for s in suites {
        let mut rec = Recorder::new(s);
        match s {
            Suite::Hopf => hopf_suite(datum, opts, &mut rec)?,
            Suite::Pairing => pairing_suite(datum, opts, &mut rec)?,
            Suite::Actions => actions_suite(datum, &mut rec)?,
            Suite::Modules => modules_suite(datum, opts, &mut rec)?,
            Suite::Projector => projector_suite(datum, opts, &mut rec)?,
            Suite::All => unreachable!(),
        }
        report.checks.extend(rec.checks);
    }
    Ok(report)
}

fn letters(n: usize, kinds: &[Kind]) -> Vec<Gen> {
    kinds
        .iter()
        .flat_map(|&k| (0..n).map(move |i| Gen::new(k, i as u8)))
        .collect()
}

/// The generators and all products of two of them.
fn short_words(gens: &[Gen]) -> Vec<Word> {
    let mut out: Vec<Word> = gens.iter().map(|g| vec![*g]).collect();
    for a in gens {
        for b in gens {
            out.push(vec![*a, *b]);
        }
    }
    out
}

fn hopf_suite(datum: &RootDatum, opts: &VerifyOptions, rec: &mut Recorder) -> Result<()> {
    let n = datum.rank();
    let families = [
        (AlgebraKind::UGeq, vec![Kind::E, Kind::Kp]),
        (AlgebraKind::ULeq, vec![Kind::F, Kind::K]),
        (
            AlgebraKind::Double,
            vec![Kind::E, Kind::F, Kind::K, Kind::Kp],
        ),
        (AlgebraKind::WPlus, vec![Kind::Ep, Kind::Wp]),
        (AlgebraKind::WMinus, vec![Kind::Fl, Kind::W]),
    ];
    for (kind, kinds) in families {
        let h = HopfAlgebra::new(Presentation::free(datum, kind))?;
        let words = short_words(&letters(n, &kinds));
        let coassoc = || -> Result<(bool, String)> {
            for w in &words {
                let x = AlgElement::word(w.clone());
                let d = h.coproduct(&x)?;
                if h.delta_left(&d)? != h.delta_right(&d)? {
                    return Ok((
                        false,
                        format!("fails on {}", crate::algebra::format_word(w)),
                    ));
                }
            }
            Ok((true, format!("{} words", words.len())))
        };
        rec.ok(
            format!("coassociativity {}", kind.name()),
            "Hopf structure",
            coassoc(),
        );
        let antipode = || -> Result<(bool, String)> {
            for w in &words {
                let x = AlgElement::word(w.clone());
                let unit = AlgElement::scalar(h.counit(&x)?);
                let l = h.antipode_convolution(&x, true)?;
                let r = h.antipode_convolution(&x, false)?;
                let back = h.antipode_inv(&h.antipode(&x)?)?;
                if l != unit || r != unit || back != h.normal_form(&x)? {
                    return Ok((
                        false,
                        format!("fails on {}", crate::algebra::format_word(w)),
                    ));
                }
            }
            Ok((true, format!("{} words", words.len())))
        };
        rec.ok(
            format!("antipode {}", kind.name()),
            "Hopf structure",
            antipode(),
        );
    }
    let b = BraidedBminus::new(datum);
    let f_words: Vec<Word> = (1..=opts.height_cap.min(3) as usize)
        .flat_map(|len| all_words(&letters(n, &[Kind::Fl]), len))
        .collect();
    let braided = || -> Result<(bool, String)> {
        for w in &f_words {
            let x = AlgElement::word(w.clone());
            if b.delta0(&x)? != b.delta0_via_projection(&x)?
                || !b.antipode_convolution(&x)?.is_zero()
            {
                return Ok((
                    false,
                    format!("fails on {}", crate::algebra::format_word(w)),
                ));
            }
        }
        Ok((true, format!("{} words", f_words.len())))
    };
    rec.ok(
        "braided coproduct and antipode of B-",
        "braided B-",
        braided(),
    );
    if n == 1 {
        for k in 1..=6u32 {
            let x = AlgElement::word(vec![Gen::new(Kind::Fl, 0); k as usize]);
            rec.eq(
                format!("delta0(f^{k}) closed form"),
                "braided B-",
                b.delta0(&x).and_then(|d| Ok((d, sl2_delta0_closed(k)?))),
            );
            rec.eq(
                format!("S(f^{k}) closed form"),
                "braided B-",
                b.antipode(&x).map(|s| (s, sl2_antipode_closed(k))),
            );
        }
    }
    Ok(())
}

fn all_words(gens: &[Gen], len: usize) -> Vec<Word> {
    let mut acc: Vec<Word> = vec![Vec::new()];
    for _ in 0..len {
        acc = acc
            .into_iter()
            .flat_map(|w| gens.iter().map(move |g| [w.clone(), vec![*g]].concat()))
            .collect();
    }
    acc
}

fn pairing_suite(datum: &RootDatum, opts: &VerifyOptions, rec: &mut Recorder) -> Result<()> {
    let n = datum.rank();
    let cap = opts.height_cap;
    let degrees: Vec<Vec<i64>> = crate::omodules::degrees_up_to(n, cap)
        .into_iter()
        .skip(1)
        .collect();
    for side in [PairingSide::U, PairingSide::W] {
        let p = PairingEngine::new(datum, side);
        let orders = || -> Result<(bool, String)> {
            for beta in degrees.iter().filter(|b| b.iter().sum::<i64>() <= 3) {
                for a in words_of_degree(beta, side.raising()) {
                    for b in words_of_degree(beta, side.lowering()) {
                        if p.pair_words(&a, &b)? != p.pair_words_right_split(&a, &b)? {
                            return Ok((false, format!("degree {beta:?}")));
                        }
                    }
                }
            }
            Ok((true, String::new()))
        };
        rec.ok(
            format!("recursion orders agree ({side:?})"),
            "skew pairing",
            orders(),
        );
        let duals = || -> Result<(bool, String)> {
            let mut dims = Vec::new();
            for beta in &degrees {
                let db = p.dual_basis(beta, cap)?;
                for (k, e) in db.e.iter().enumerate() {
                    for (l, f) in db.f.iter().enumerate() {
                        let v = p.pair(&AlgElement::word(e.clone()), f)?;
                        if v != if k == l {
                            crate::coeff::RatFunc::one()
                        } else {
                            crate::coeff::RatFunc::zero()
                        } {
                            return Ok((false, format!("degree {beta:?}")));
                        }
                    }
                }
                dims.push(db.dim());
            }
            Ok((true, format!("quotient dims {dims:?}")))
        };
        rec.ok(
            format!("dual bases up to height {cap} ({side:?})"),
            "skew pairing",
            duals(),
        );
    }
    let w = PairingEngine::new(datum, PairingSide::W);
    for (name, rel) in serre_relations(datum, AlgebraKind::WMinus)? {
        let check = || -> Result<(bool, String)> {
            let beta = crate::omodules::lowering_degree(rel.terms().next().expect("nonzero").0, n);
            let g = w.gram(&beta, beta.iter().sum::<i64>() as u32)?;
            let free = g.cols.len();
            let radical = free - g.rank();
            for a in &g.rows {
                if !w.pair(&AlgElement::word(a.clone()), &rel)?.is_zero() {
                    return Ok((false, "Serre element pairs nontrivially".into()));
                }
            }
            Ok((
                radical == 1,
                format!(
                    "degree {beta:?}, {free} words, rank {}, radical {radical}",
                    g.rank()
                ),
            ))
        };
        rec.ok(
            format!("{name} spans the radical"),
            "pairing radical",
            check(),
        );
    }
    Ok(())
}

fn actions_suite(datum: &RootDatum, rec: &mut Recorder) -> Result<()> {
    let d = Doubles::new(datum);
    let n = datum.rank();
    if n == 1 {
        let pow = |k: Kind, e: u32| AlgElement::word(vec![Gen::new(k, 0); e as usize]);
        for w in ActionFamily::ALL {
            let (actor, tk, side) = family_letters(w);
            let grid = || -> Result<(bool, String)> {
                for e in 0..=6 {
                    for m in 0..=e {
                        let got = d.schrodinger_act(&pow(actor, m), &pow(tk, e), side)?;
                        let (c, p) = closed_form_action_sl2(w, m, e)?;
                        if got != pow(tk, p).scale(&c) {
                            return Ok((false, format!("m={m} n={e}")));
                        }
                    }
                }
                Ok((true, "0 <= m <= n <= 6".into()))
            };
            rec.ok(
                format!("closed form {}", w.name()),
                "rank-one actions",
                grid(),
            );
        }
        let el = |s: &str| crate::algebra::parse_element(s);
        for (x, t, side, expect) in [
            ("K1", "e1'", TargetSide::Plus, "r*s^-1 e1'"),
            ("K1'", "e1'", TargetSide::Plus, "r^-1*s e1'"),
            ("K1'", "f1", TargetSide::Minus, "r*s^-1 f1"),
            ("K1", "f1", TargetSide::Minus, "r^-1*s f1"),
        ] {
            rec.eq(
                format!("{x} . {t}"),
                "rank-one actions",
                (|| Ok((d.schrodinger_act(&el(x)?, &el(t)?, side)?, el(expect)?)))(),
            );
        }
    }
    let hs = letters(n, &[Kind::E, Kind::F, Kind::K, Kind::Kp]);
    let vs = short_words(&letters(n, &[Kind::Ep, Kind::Fl, Kind::W, Kind::Wp]));
    let yd = || -> Result<(bool, String)> {
        let mut count = 0;
        for &h in &hs {
            for v in vs.iter().filter(|v| n == 1 || v.len() == 1) {
                let (l, r) = d.yd_sides(h, &d.heis_from_element(&AlgElement::word(v.clone()))?)?;
                if l != r {
                    return Ok((false, format!("{h} on {}", crate::algebra::format_word(v))));
                }
                count += 1;
            }
        }
        Ok((true, format!("{count} pairs")))
    };
    rec.ok("Yetter-Drinfeld condition", "module algebra", yd());
    let gens = letters(n, &[Kind::Ep, Kind::Fl, Kind::W, Kind::Wp]);
    let ma = || -> Result<(bool, String)> {
        let mut count = 0;
        for &h in &hs {
            for &x in &gens {
                for &y in &gens {
                    let (l, r) =
                        d.module_algebra_sides(h, &AlgElement::gen(x), &AlgElement::gen(y))?;
                    if l != r {
                        return Ok((false, format!("{h} on {x} {y}")));
                    }
                    count += 1;
                }
            }
        }
        Ok((true, format!("{count} triples")))
    };
    rec.ok("module-algebra law on B_{r,s}", "module algebra", ma());
    Ok(())
}

pub(crate) fn family_letters(w: ActionFamily) -> (Kind, Kind, TargetSide) {
    match w {
        ActionFamily::EOnE => (Kind::E, Kind::Ep, TargetSide::Plus),
        ActionFamily::EOnF => (Kind::E, Kind::Fl, TargetSide::Minus),
        ActionFamily::FOnE => (Kind::F, Kind::Ep, TargetSide::Plus),
        ActionFamily::FOnF => (Kind::F, Kind::Fl, TargetSide::Minus),
    }
}

/// Highest weights used by the module checks.
fn sample_weights(datum: &RootDatum) -> Vec<Weight> {
    let n = datum.rank();
    let mut a = vec![0; n];
    a[0] = 1;
    let mut b = vec![0; n];
    b[n - 1] = -1;
    vec![Weight::from_ints(&a), Weight::from_ints(&b)]
}

fn module_checks(m: &WeightModule, label: &str, rec: &mut Recorder) {
    rec.ok(
        format!("{label}: relations act as zero"),
        "category O",
        m.relations_act_as_zero().map(|r| match r {
            Ok((c, s)) => (true, format!("{c} evaluations, {s} past the truncation")),
            Err(msg) => (false, msg),
        }),
    );
    rec.ok(
        format!("{label}: weight condition"),
        "category O",
        m.weight_condition_holds().map(|b| (b, String::new())),
    );
    let co = || -> Result<(bool, String)> {
        for mu in m.weight_spaces().keys() {
            let a = m.maximal_vectors(mu)?;
            let b = m.coinvariants(mu)?;
            if a.len() != b.len() {
                return Ok((false, format!("weight {mu}")));
            }
        }
        Ok((true, String::new()))
    };
    rec.ok(
        format!("{label}: coinvariants = maximal vectors"),
        "coaction",
        co(),
    );
    rec.ok(
        format!("{label}: Hopf-module maps invert"),
        "coaction",
        m.hopf_module_check().map(|r| {
            (
                r.passed(),
                format!("{} vectors, {} at the boundary", r.checked, r.skipped),
            )
        }),
    );
}

fn modules_suite(datum: &RootDatum, opts: &VerifyOptions, rec: &mut Recorder) -> Result<()> {
    let n = datum.rank();
    let depth = if n == 1 {
        opts.depth
    } else {
        opts.depth.min(3)
    };
    let ws = sample_weights(datum);
    let h = WeightModule::verma(datum, &ws[0], depth)?;
    module_checks(&h, "H(lambda)", rec);
    rec.ok(
        "H(lambda): simple",
        "category O",
        h.decompose().map(|r| {
            (
                r.semisimple() && r.summands == vec![(ws[0].clone(), 1)],
                format!("{} interior weights", r.interior()),
            )
        }),
    );
    let compat = || -> Result<(bool, String)> {
        let mut tried = 0;
        let xs: Vec<Word> = (1..=2)
            .flat_map(|len| all_words(&letters(n, &[Kind::Fl]), len))
            .collect();
        for x in &xs {
            let x = AlgElement::word(x.clone());
            for k in 0..h.dim() {
                match h.rho_compatible(&x, &ModuleVector::basis(k))? {
                    Some(true) => tried += 1,
                    Some(false) => {
                        return Ok((
                            false,
                            format!(
                                "{} on {}",
                                crate::algebra::format_element(&x),
                                h.basis()[k].label
                            ),
                        ))
                    }
                    None => {}
                }
            }
        }
        Ok((true, format!("{tried} pairs")))
    };
    rec.ok(
        "H(lambda): coaction compatible with B-",
        "coaction",
        compat(),
    );
    let lower = ws[0].sub(&datum.simple_root(0));
    let sum =
        WeightModule::tensor_bminus(datum, &[ws[0].clone(), lower.clone(), ws[1].clone()], depth)?
            .scrambled(opts.seed)?;
    module_checks(&sum, "B- (x) V, dim V = 3", rec);
    let mut expect: Vec<(Weight, usize)> = vec![(ws[0].clone(), 1), (lower, 1), (ws[1].clone(), 1)];
    expect.sort();
    expect = merge(expect);
    rec.ok(
        "B- (x) V: summands recovered",
        "category O",
        sum.decompose().map(|r| {
            (
                r.semisimple() && r.summands == expect,
                format!("{:?}", r.summands),
            )
        }),
    );
    Ok(())
}

fn merge(v: Vec<(Weight, usize)>) -> Vec<(Weight, usize)> {
    let mut out: Vec<(Weight, usize)> = Vec::new();
    for (w, k) in v {
        match out.last_mut() {
            Some((lw, lk)) if *lw == w => *lk += k,
            _ => out.push((w, k)),
        }
    }
    out
}

fn projector_suite(datum: &RootDatum, opts: &VerifyOptions, rec: &mut Recorder) -> Result<()> {
    let n = datum.rank();
    let depth = if n == 1 {
        opts.depth.max(2)
    } else {
        opts.depth.min(3)
    };
    let ws = sample_weights(datum);
    let h = WeightModule::verma(datum, &ws[0], depth)?;
    let idem = || -> Result<(bool, String)> {
        for k in 0..h.dim() {
            let p = h.projector(&ModuleVector::basis(k))?;
            if h.projector(&p)? != p {
                return Ok((false, h.basis()[k].label.clone()));
            }
        }
        Ok((true, String::new()))
    };
    rec.ok("P o P = P", "projector", idem());
    let image = || -> Result<(bool, String)> {
        let top = ModuleVector::basis(0);
        if h.projector(&top)? != top {
            return Ok((false, "P(v) != v".into()));
        }
        for k in 1..h.dim() {
            if !h.projector(&ModuleVector::basis(k))?.is_zero() {
                return Ok((false, format!("P({}) != 0", h.basis()[k].label)));
            }
        }
        Ok((true, format!("kills {} lower basis vectors", h.dim() - 1)))
    };
    rec.ok("image of P is the span of v", "projector", image());
    if n == 1 {
        let closed = || -> Result<(bool, String)> {
            for k in 0..h.dim() {
                let m = ModuleVector::basis(k);
                if h.projector(&m)? != h.projector_sl2(&m)? || h.rho(&m)? != h.rho_closed_sl2(&m)? {
                    return Ok((false, h.basis()[k].label.clone()));
                }
            }
            Ok((true, String::new()))
        };
        rec.ok("P and rho match their closed forms", "projector", closed());
    }
    let sum = WeightModule::tensor_bminus(datum, &ws, depth)?.scrambled(opts.seed)?;
    let lands = || -> Result<(bool, String)> {
        let mut skipped = 0;
        for k in 0..sum.dim() {
            let p = match sum.projector(&ModuleVector::basis(k)) {
                Ok(p) => p,
                Err(Error::TruncationLoss) => {
                    skipped += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            for i in 0..n {
                if !sum.act_gen(Gen::new(Kind::Ep, i as u8), &p)?.is_zero() {
                    return Ok((false, sum.basis()[k].label.clone()));
                }
            }
        }
        Ok((true, format!("{skipped} at the boundary")))
    };
    rec.ok(
        "P lands in maximal vectors of a scrambled sum",
        "projector",
        lands(),
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_in_rank_one() {
        let r = run_suite(&RootDatum::sl2(), Suite::All, &VerifyOptions::default()).unwrap();
        if let Some(c) = r.failures().next() {
            panic!("{} {} {}", c.suite, c.name, c.detail);
        }
        assert!(r.table().contains("PASS"));
    }

    #[test]
    fn suite_names_parse() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
