//! Truncated modules in category O for `B_{r,s}`: the modules `H(λ)`, sums of
//! them, the coaction `ρ`, coinvariants, the projector onto maximal vectors and
//! the checks built on them.

mod bminus;
mod comodule;
mod decompose;
mod vector;

pub use bminus::{degrees_up_to, lowering_degree, GradedBminus};
pub use comodule::{BTensor, HopfModuleReport};
pub use decompose::{DecompositionReport, WeightSpaceCheck};
pub use vector::ModuleVector;

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{format_word, AlgElement, Gen, Kind, TorusFamily, Word};
use crate::coeff::RatFunc;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rootdata::{RootDatum, Weight};

pub const DEFAULT_DEPTH_CAP: u32 = 10;

/// One basis vector of a truncated module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisVector {
    pub weight: Weight,
    /// Largest height below a summand's highest weight among the components.
    pub height: u32,
    pub label: String,
}

/// A weight module with finitely many basis vectors and explicit action tables.
#[derive(Clone, Debug)]
pub struct WeightModule {
    datum: RootDatum,
    bminus: Arc<GradedBminus>,
    depth: u32,
    basis: Vec<BasisVector>,
    /// Highest weights of the summands the module was built from.
    built_from: Vec<Weight>,
    /// `f_act[i][b]`, `None` when the image leaves the truncation.
    f_act: Vec<Vec<Option<ModuleVector>>>,
    e_act: Vec<Vec<ModuleVector>>,
}

impl WeightModule {
    /// `H(λ)` truncated at depth `depth`.
    pub fn verma(datum: &RootDatum, lambda: &Weight, depth: u32) -> Result<WeightModule> {
        WeightModule::tensor_bminus(datum, std::slice::from_ref(lambda), depth)
    }

    /// `B- ⊗ V` for a weight-graded `V` with one basis vector per listed weight:
    /// `e·(x⊗v) = Σ φ(e, x_(1)) x_(2) ⊗ v`, `f·(x⊗v) = fx ⊗ v`, `t·(x⊗v) = t x t^-1 ⊗ t v`.
    pub fn tensor_bminus(
        datum: &RootDatum,
        weights: &[Weight],
        depth: u32,
    ) -> Result<WeightModule> {
        WeightModule::tensor_bminus_capped(datum, weights, depth, DEFAULT_DEPTH_CAP)
    }

    pub fn tensor_bminus_capped(
        datum: &RootDatum,
        weights: &[Weight],
        depth: u32,
        cap: u32,
    ) -> Result<WeightModule> {
        if depth > cap {
            return Err(Error::DepthCapExceeded { depth, cap });
        }
        for w in weights {
            datum.check_weight(w)?;
        }
        let bminus = Arc::new(GradedBminus::new(datum, depth));
        let n = datum.rank();
        let degrees = degrees_up_to(n, depth);
        let mut basis = Vec::new();
        let mut index: BTreeMap<(usize, Vec<i64>, Word), usize> = BTreeMap::new();
        let vname = |k: usize| {
            if weights.len() == 1 {
                "v".to_string()
            } else {
                format!("v{}", k + 1)
            }
        };
        for (k, lambda) in weights.iter().enumerate() {
            for beta in &degrees {
                let db = bminus.degree(beta)?;
                for w in &db.f_words {
                    index.insert((k, beta.clone(), w.clone()), basis.len());
                    let label = if w.is_empty() {
                        vname(k)
                    } else {
                        format!("{} {}", format_word(w), vname(k))
                    };
                    basis.push(BasisVector {
                        weight: lambda.sub_int(beta),
                        height: beta.iter().sum::<i64>() as u32,
                        label,
                    });
                }
            }
        }
        let mut f_act = vec![vec![None; basis.len()]; n];
        let mut e_act = vec![vec![ModuleVector::zero(); basis.len()]; n];
        for ((k, beta, w), &b) in &index {
            for i in 0..n {
                let fl = Gen::new(Kind::Fl, i as u8);
                if (basis[b].height) < depth {
                    let mut up = beta.clone();
                    up[i] += 1;
                    let mut fw = vec![fl];
                    fw.extend_from_slice(w);
                    let coords = bminus.reduce(&up, &AlgElement::word(fw))?;
                    f_act[i][b] = Some(bminus.embed(&index, *k, &up, &coords));
                }
                if beta[i] > 0 {
                    let mut down = beta.clone();
                    down[i] -= 1;
                    let d = bminus.pairing().partial(Gen::new(Kind::Ep, i as u8), w)?;
                    let coords = bminus.reduce(&down, &d)?;
                    e_act[i][b] = bminus.embed(&index, *k, &down, &coords);
                }
            }
        }
        Ok(WeightModule {
            datum: datum.clone(),
            bminus,
            depth,
            basis,
            built_from: weights.to_vec(),
            f_act,
            e_act,
        })
    }

    /// Block sum; all summands must share the root datum.
    pub fn direct_sum(parts: &[WeightModule]) -> Result<WeightModule> {
        let first = parts
            .first()
            .ok_or_else(|| Error::InvalidArgument("empty direct sum".into()))?;
        let n = first.datum.rank();
        let depth = parts.iter().map(|p| p.depth).max().unwrap_or(0);
        let mut basis = Vec::new();
        let mut built_from = Vec::new();
        let mut f_act = vec![Vec::new(); n];
        let mut e_act = vec![Vec::new(); n];
        let mut bminus = first.bminus.clone();
        for p in parts {
            if p.datum != first.datum {
                return Err(Error::InvalidArgument(
                    "direct sum over different root data".into(),
                ));
            }
            if p.depth == depth {
                bminus = p.bminus.clone();
            }
            let off = basis.len();
            basis.extend(p.basis.iter().cloned());
            built_from.extend(p.built_from.iter().cloned());
            for i in 0..n {
                f_act[i].extend(p.f_act[i].iter().map(|v| v.as_ref().map(|v| v.shift(off))));
                e_act[i].extend(p.e_act[i].iter().map(|v| v.shift(off)));
            }
        }
        Ok(WeightModule {
            datum: first.datum.clone(),
            bminus,
            depth,
            basis,
            built_from,
            f_act,
            e_act,
        })
    }

    /// The zero module.
    pub fn zero(datum: &RootDatum) -> WeightModule {
        let n = datum.rank();
        WeightModule {
            datum: datum.clone(),
            bminus: Arc::new(GradedBminus::new(datum, 0)),
            depth: 0,
            basis: Vec::new(),
            built_from: Vec::new(),
            f_act: vec![Vec::new(); n],
            e_act: vec![Vec::new(); n],
        }
    }

    /// Same module in a new basis: every weight space is mixed by a seeded
    /// unitriangular matrix with small integer entries.
    pub fn scrambled(&self, seed: u64) -> Result<WeightModule> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dim = self.dim();
        // new basis vector k = Σ_j p[j][k] old_j, p block-unitriangular
        let mut p: Vec<ModuleVector> = (0..dim).map(ModuleVector::basis).collect();
        let mut pinv: Vec<ModuleVector> = (0..dim).map(ModuleVector::basis).collect();
        for (_, idx) in self.weight_spaces() {
            if idx.len() < 2 {
                continue;
            }
            let k = idx.len();
            let mut m = Matrix::identity(k);
            for a in 0..k {
                for b in a + 1..k {
                    m.set(a, b, RatFunc::from_int(rng.gen_range(-2..=2)));
                }
            }
            // a random lower factor too, so the first vector also moves
            let mut l = Matrix::identity(k);
            for a in 1..k {
                l.set(a, 0, RatFunc::from_int(rng.gen_range(1..=2)));
            }
            let m = l.mul(&m)?;
            let inv = m.inverse()?;
            for (b, &col) in idx.iter().enumerate() {
                let mut v = ModuleVector::zero();
                let mut w = ModuleVector::zero();
                for (a, &row) in idx.iter().enumerate() {
                    v.add_term(row, m.get(a, b));
                    w.add_term(row, inv.get(a, b));
                }
                p[col] = v;
                pinv[col] = w;
            }
        }
        let to_new = |v: &ModuleVector| -> ModuleVector {
            let mut out = ModuleVector::zero();
            for (j, c) in v.terms() {
                out.add_scaled(&pinv[*j], c);
            }
            out
        };
        let n = self.datum.rank();
        let mut f_act = vec![vec![None; dim]; n];
        let mut e_act = vec![vec![ModuleVector::zero(); dim]; n];
        for i in 0..n {
            for k in 0..dim {
                let mut img = Some(ModuleVector::zero());
                let mut eimg = ModuleVector::zero();
                for (j, c) in p[k].terms() {
                    match (&mut img, &self.f_act[i][*j]) {
                        (Some(acc), Some(v)) => acc.add_scaled(v, c),
                        _ => img = None,
                    }
                    eimg.add_scaled(&self.e_act[i][*j], c);
                }
                f_act[i][k] = img.map(|v| to_new(&v));
                e_act[i][k] = to_new(&eimg);
            }
        }
        let basis = self
            .basis
            .iter()
            .enumerate()
            .map(|(k, b)| BasisVector {
                weight: b.weight.clone(),
                height: p[k]
                    .support()
                    .map(|j| self.basis[j].height)
                    .max()
                    .unwrap_or(b.height),
                label: format!("u{}", k + 1),
            })
            .collect();
        Ok(WeightModule {
            basis,
            f_act,
            e_act,
            ..self.clone()
        })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn bminus(&self) -> &GradedBminus {
        &self.bminus
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn built_from(&self) -> &[Weight] {
        &self.built_from
    }

    /// Weight spaces, ordered by weight.
    pub fn weight_spaces(&self) -> BTreeMap<Weight, Vec<usize>> {
        let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (k, b) in self.basis.iter().enumerate() {
            out.entry(b.weight.clone()).or_default().push(k);
        }
        out
    }

    pub fn weight_space(&self, mu: &Weight) -> Vec<usize> {
        self.weight_spaces().remove(mu).unwrap_or_default()
    }

    /// True when `f_i` can be applied to every component without leaving the truncation.
    pub fn f_defined(&self, m: &ModuleVector) -> bool {
        m.terms()
            .all(|(k, _)| self.f_act.iter().all(|row| row[*k].is_some()))
    }

    fn torus_scalar(&self, g: Gen, weight: &Weight) -> Result<RatFunc> {
        let (fam, sign) = g.torus_family().expect("torus letter");
        let ai = self.datum.simple_root(g.idx as usize);
        let v = self.datum.torus_eigenvalue(fam, &ai, weight)?;
        Ok(if sign > 0 { v } else { v.inv()? })
    }

    /// Action of one generator of `B_{r,s}`.
    pub fn act_gen(&self, g: Gen, m: &ModuleVector) -> Result<ModuleVector> {
        let i = g.idx as usize;
        if i >= self.datum.rank() {
            return Err(Error::ForeignGenerator(g.to_string()));
        }
        let mut out = ModuleVector::zero();
        match g.kind {
            Kind::Fl => {
                for (k, c) in m.terms() {
                    let img = self.f_act[i][*k].as_ref().ok_or(Error::TruncationLoss)?;
                    out.add_scaled(img, c);
                }
            }
            Kind::Ep => {
                for (k, c) in m.terms() {
                    out.add_scaled(&self.e_act[i][*k], c);
                }
            }
            Kind::W | Kind::WInv | Kind::Wp | Kind::WpInv => {
                for (k, c) in m.terms() {
                    out.add_term(*k, &(c * &self.torus_scalar(g, &self.basis[*k].weight)?));
                }
            }
            _ => return Err(Error::ForeignGenerator(g.to_string())),
        }
        Ok(out)
    }

    /// Applies a word, rightmost letter first.
    pub fn act_word(&self, w: &[Gen], m: &ModuleVector) -> Result<ModuleVector> {
        let mut cur = m.clone();
        for g in w.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = self.act_gen(*g, &cur)?;
        }
        Ok(cur)
    }

    /// Action of an element of `B_{r,s}` written in `e', f, w, w'`.
    pub fn act(&self, x: &AlgElement, m: &ModuleVector) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero();
        for (w, c) in x.terms() {
            out.add_scaled(&self.act_word(w, m)?, c);
        }
        Ok(out)
    }

    /// Matrix of a linear map on the span of `cols`, with rows indexed by `rows`.
    pub fn matrix_of(
        &self,
        cols: &[usize],
        rows: &[usize],
        f: impl Fn(&ModuleVector) -> Result<ModuleVector>,
    ) -> Result<Matrix> {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        let pos: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(a, &r)| (r, a)).collect();
        for (b, &c) in cols.iter().enumerate() {
            let img = f(&ModuleVector::basis(c))?;
            for (k, v) in img.terms() {
                let a = pos.get(k).ok_or_else(|| {
                    Error::InvalidArgument("image leaves the expected weight space".into())
                })?;
                m.set(*a, b, v.clone());
            }
        }
        Ok(m)
    }

    pub fn combine(&self, idx: &[usize], coeffs: &[RatFunc]) -> ModuleVector {
        let mut v = ModuleVector::zero();
        for (k, c) in idx.iter().zip(coeffs) {
            v.add_term(*k, c);
        }
        v
    }

    /// Basis of the maximal vectors (joint kernel of the `e_i'`) of weight `mu`.
    pub fn maximal_vectors(&self, mu: &Weight) -> Result<Vec<ModuleVector>> {
        let idx = self.weight_space(mu);
        if idx.is_empty() {
            return Ok(Vec::new());
        }
        let n = self.datum.rank();
        let mut rows: Vec<Vec<RatFunc>> = Vec::new();
        for i in 0..n {
            let up = self.weight_space(&mu.add(&self.datum.simple_root(i)));
            if up.is_empty() {
                continue;
            }
            let ep = Gen::new(Kind::Ep, i as u8);
            let m = self.matrix_of(&idx, &up, |v| self.act_gen(ep, v))?;
            rows.extend(m.to_rows());
        }
        if rows.is_empty() {
            return Ok((0..idx.len())
                .map(|k| ModuleVector::basis(idx[k]))
                .collect());
        }
        let m = Matrix::from_rows(rows);
        Ok(m.kernel().iter().map(|v| self.combine(&idx, v)).collect())
    }

    /// Maximal vectors of every weight.
    pub fn all_maximal_vectors(&self) -> Result<Vec<(Weight, Vec<ModuleVector>)>> {
        let mut out = Vec::new();
        for mu in self.weight_spaces().keys() {
            let k = self.maximal_vectors(mu)?;
            if !k.is_empty() {
                out.push((mu.clone(), k));
            }
        }
        Ok(out)
    }

    /// Every defining relation of `B_{r,s}` acting on every basis vector, skipping
    /// those whose evaluation leaves the truncation. Returns `(checked, skipped)` or
    /// the first failing relation.
    pub fn relations_act_as_zero(&self) -> Result<std::result::Result<(usize, usize), String>> {
        let pres = crate::algebra::Presentation::with_serre(
            &self.datum,
            crate::algebra::AlgebraKind::Heisenberg,
        )?;
        let mut checked = 0;
        let mut skipped = 0;
        for (name, rel) in pres.relations()? {
            for k in 0..self.dim() {
                match self.act(&rel, &ModuleVector::basis(k)) {
                    Ok(v) if v.is_zero() => checked += 1,
                    Ok(_) => return Ok(Err(format!("{name} on {}", self.basis[k].label))),
                    Err(Error::TruncationLoss) => skipped += 1,
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(Ok((checked, skipped)))
    }

    /// Checks that `w_μ` and `w'_μ` act by the weight characters on every basis vector.
    pub fn weight_condition_holds(&self) -> Result<bool> {
        for (k, b) in self.basis.iter().enumerate() {
            for i in 0..self.datum.rank() {
                for (kind, fam) in [
                    (Kind::W, TorusFamily::Unprimed),
                    (Kind::Wp, TorusFamily::Primed),
                ] {
                    let v = self.act_gen(Gen::new(kind, i as u8), &ModuleVector::basis(k))?;
                    let expect =
                        self.datum
                            .torus_eigenvalue(fam, &self.datum.simple_root(i), &b.weight)?;
                    if v != ModuleVector::basis(k).scale(&expect) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn format_vector(&self, m: &ModuleVector) -> String {
        m.format_with(|k| self.basis[k].label.clone())
    }
}
