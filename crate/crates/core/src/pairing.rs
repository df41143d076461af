//! The skew Hopf pairing, graded Gram matrices, radicals and dual bases.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::algebra::{AlgElement, Gen, Kind, Word};
use crate::coeff::RatFunc;
use crate::error::{Error, Result};
use crate::linalg::{independent_rows, Matrix};
use crate::rootdata::RootDatum;

pub const DEFAULT_HEIGHT_CAP: u32 = 6;

/// Which pair of Borel parts is being paired.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairingSide {
    /// `U>= x U<=` with `phi(E_i, F_j) = delta_ij / (s_i - r_i)`.
    U,
    /// `B+ x B-` in Heisenberg notation with `phi(e_i', f_j) = delta_ij`.
    W,
}

impl PairingSide {
    pub fn raising(self) -> Kind {
        match self {
            PairingSide::U => Kind::E,
            PairingSide::W => Kind::Ep,
        }
    }

    pub fn lowering(self) -> Kind {
        match self {
            PairingSide::U => Kind::F,
            PairingSide::W => Kind::Fl,
        }
    }
}

type Slot = Option<Gen>;

/// Generator coproducts as pairs of (at most single-letter) words.
fn letter_coproduct(g: Gen) -> Vec<(Slot, Slot)> {
    let t = |k: Kind| Some(Gen::new(k, g.idx));
    match g.kind {
        Kind::E => vec![(Some(g), t(Kind::Kp)), (None, Some(g))],
        Kind::F => vec![(Some(g), None), (t(Kind::K), Some(g))],
        Kind::Ep => vec![(Some(g), None), (t(Kind::WpInv), Some(g))],
        Kind::Fl => vec![(Some(g), None), (t(Kind::W), Some(g))],
        _ => vec![(Some(g), Some(g))],
    }
}

fn counit_letter(g: Slot) -> RatFunc {
    match g {
        None => RatFunc::one(),
        Some(g) if g.is_torus() => RatFunc::one(),
        Some(_) => RatFunc::zero(),
    }
}

fn counit_word(w: &[Gen]) -> RatFunc {
    if w.iter().all(|g| g.is_torus()) {
        RatFunc::one()
    } else {
        RatFunc::zero()
    }
}

/// Recursive, memoized evaluation of the pairing.
pub struct PairingEngine {
    datum: RootDatum,
    side: PairingSide,
    partial_memo: Mutex<HashMap<(Gen, Word), AlgElement>>,
    pair_memo: Mutex<HashMap<(Word, Word), RatFunc>>,
}

impl std::fmt::Debug for PairingEngine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PairingEngine({}, {:?})", self.datum.name(), self.side)
    }
}

impl Clone for PairingEngine {
    fn clone(&self) -> Self {
        PairingEngine::new(&self.datum, self.side)
    }
}

impl PairingEngine {
    pub fn new(datum: &RootDatum, side: PairingSide) -> PairingEngine {
        PairingEngine {
            datum: datum.clone(),
            side,
            partial_memo: Mutex::new(HashMap::new()),
            pair_memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn side(&self) -> PairingSide {
        self.side
    }

    pub fn clear_memo(&self) {
        self.partial_memo.lock().expect("memo lock").clear();
        self.pair_memo.lock().expect("memo lock").clear();
    }

    fn on_left(&self, g: Gen) -> bool {
        match self.side {
            PairingSide::U => matches!(g.kind, Kind::E | Kind::Kp | Kind::KpInv),
            PairingSide::W => matches!(g.kind, Kind::Ep | Kind::Wp | Kind::WpInv),
        }
    }

    fn on_right(&self, g: Gen) -> bool {
        match self.side {
            PairingSide::U => matches!(g.kind, Kind::F | Kind::K | Kind::KInv),
            PairingSide::W => matches!(g.kind, Kind::Fl | Kind::W | Kind::WInv),
        }
    }

    /// The generator table.
    pub fn generator_value(&self, a: Gen, b: Gen) -> Result<RatFunc> {
        if !self.on_left(a) || !self.on_right(b) {
            return Err(Error::UnpairedGenerators(a.to_string(), b.to_string()));
        }
        let (i, j) = (a.idx as usize, b.idx as usize);
        if a.is_torus() && b.is_torus() {
            let sa = a.torus_family().expect("torus").1;
            let sb = b.torus_family().expect("torus").1;
            let d = &self.datum;
            return Ok(RatFunc::rs(
                sa * sb * d.euler(i, j),
                -sa * sb * d.euler(j, i),
            ));
        }
        if a.is_torus() || b.is_torus() {
            return Ok(RatFunc::zero());
        }
        if i != j {
            return Ok(RatFunc::zero());
        }
        Ok(match self.side {
            PairingSide::U => {
                let d = self.datum.d(i);
                (&RatFunc::rs(0, d) - &RatFunc::rs(d, 0)).inv()?
            }
            PairingSide::W => RatFunc::one(),
        })
    }

    fn slot_value(&self, a: Slot, b: Slot) -> Result<RatFunc> {
        match (a, b) {
            (None, b) => Ok(counit_letter(b)),
            (a, None) => Ok(counit_letter(a)),
            (Some(a), Some(b)) => self.generator_value(a, b),
        }
    }

    /// `∂_x(y) = Σ φ(x, y_(1)) y_(2)` for a single letter `y`.
    fn partial_letter(&self, x: Slot, y: Gen) -> Result<AlgElement> {
        let mut out = AlgElement::zero();
        for (y1, y2) in letter_coproduct(y) {
            let c = self.slot_value(x, y1)?;
            if !c.is_zero() {
                out.add_term(y2.into_iter().collect(), &c);
            }
        }
        Ok(out)
    }

    /// `∂_x(w) = Σ φ(x, w_(1)) w_(2)` for a generator `x` and a word `w`.
    pub fn partial(&self, x: Gen, w: &[Gen]) -> Result<AlgElement> {
        if !self.on_left(x) {
            return Err(Error::UnpairedGenerators(
                x.to_string(),
                "right side".into(),
            ));
        }
        if let Some(y) = w.iter().find(|g| !self.on_right(**g)) {
            return Err(Error::UnpairedGenerators(x.to_string(), y.to_string()));
        }
        self.partial_inner(Some(x), w)
    }

    fn partial_inner(&self, x: Slot, w: &[Gen]) -> Result<AlgElement> {
        let Some(x) = x else {
            return Ok(AlgElement::word(w.to_vec()));
        };
        if w.is_empty() {
            return Ok(AlgElement::scalar(counit_letter(Some(x))));
        }
        let key = (x, w.to_vec());
        if let Some(hit) = self.partial_memo.lock().expect("memo lock").get(&key) {
            return Ok(hit.clone());
        }
        let (y, init) = w.split_last().expect("nonempty");
        let mut out = AlgElement::zero();
        for (x1, x2) in letter_coproduct(x) {
            let right = self.partial_letter(x2, *y)?;
            if right.is_zero() {
                continue;
            }
            let left = self.partial_inner(x1, init)?;
            out = &out + &(&left * &right);
        }
        self.partial_memo
            .lock()
            .expect("memo lock")
            .insert(key, out.clone());
        Ok(out)
    }

    /// Pairing of two words: `φ(a x, b) = φ(a, ∂_x b)`.
    pub fn pair_words(&self, a: &[Gen], b: &[Gen]) -> Result<RatFunc> {
        if let Some(g) = a.iter().find(|g| !self.on_left(**g)) {
            return Err(Error::UnpairedGenerators(
                g.to_string(),
                format!("{:?} pairing", self.side),
            ));
        }
        if let Some(g) = b.iter().find(|g| !self.on_right(**g)) {
            return Err(Error::UnpairedGenerators(
                format!("{:?} pairing", self.side),
                g.to_string(),
            ));
        }
        self.pair_inner(a, b)
    }

    fn pair_inner(&self, a: &[Gen], b: &[Gen]) -> Result<RatFunc> {
        if a.is_empty() {
            return Ok(counit_word(b));
        }
        if b.is_empty() {
            return Ok(counit_word(a));
        }
        // a torus-free word pairs to zero unless the degrees match
        let (da, db) = (
            crate::algebra::gen::word_degree(a, self.datum.rank()),
            crate::algebra::gen::word_degree(b, self.datum.rank()),
        );
        if da.iter().zip(&db).any(|(x, y)| x + y != 0) {
            return Ok(RatFunc::zero());
        }
        let key = (a.to_vec(), b.to_vec());
        if let Some(hit) = self.pair_memo.lock().expect("memo lock").get(&key) {
            return Ok(hit.clone());
        }
        let (x, init) = a.split_last().expect("nonempty");
        let d = self.partial_inner(Some(*x), b)?;
        let mut acc = RatFunc::zero();
        for (w, c) in d.terms() {
            let v = self.pair_inner(init, w)?;
            if !v.is_zero() {
                acc = &acc + &(c * &v);
            }
        }
        self.pair_memo
            .lock()
            .expect("memo lock")
            .insert(key, acc.clone());
        Ok(acc)
    }

    pub fn pair(&self, a: &AlgElement, b: &AlgElement) -> Result<RatFunc> {
        let mut acc = RatFunc::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                let v = self.pair_words(wa, wb)?;
                if !v.is_zero() {
                    acc = &acc + &(&(ca * cb) * &v);
                }
            }
        }
        Ok(acc)
    }

    /// Same value through the other recursion: split the right argument with axiom (1).
    pub fn pair_words_right_split(&self, a: &[Gen], b: &[Gen]) -> Result<RatFunc> {
        if b.is_empty() {
            return Ok(counit_word(a));
        }
        if a.is_empty() {
            return Ok(counit_word(b));
        }
        let (y, init) = b.split_last().expect("nonempty");
        // φ(a, b' y) = Σ φ(a_(1), b') φ(a_(2), y)
        let mut acc = RatFunc::zero();
        for (a1, a2) in word_coproduct(a) {
            let v2 = self.pair_words(&a2, &[*y])?;
            if v2.is_zero() {
                continue;
            }
            let v1 = self.pair_words_right_split(&a1, init)?;
            acc = &acc + &(&v1 * &v2);
        }
        Ok(acc)
    }

    fn check_height(&self, beta: &[i64], cap: u32) -> Result<()> {
        if beta.len() != self.datum.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.datum.rank(),
                got: beta.len(),
            });
        }
        if beta.iter().any(|&b| b < 0) {
            return Err(Error::InvalidArgument("degree must lie in Q+".into()));
        }
        let h: i64 = beta.iter().sum();
        if h as u32 > cap {
            return Err(Error::HeightCapExceeded {
                height: h as u32,
                cap,
            });
        }
        Ok(())
    }

    /// Gram matrix of free words of degree `beta` against degree `-beta`.
    pub fn gram(&self, beta: &[i64], cap: u32) -> Result<GradedGram> {
        self.check_height(beta, cap)?;
        let rows: Vec<Word> = words_of_degree(beta, self.side.raising());
        let cols: Vec<Word> = words_of_degree(beta, self.side.lowering());
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (i, a) in rows.iter().enumerate() {
            for (j, b) in cols.iter().enumerate() {
                m.set(i, j, self.pair_words(a, b)?);
            }
        }
        Ok(GradedGram {
            degree: beta.to_vec(),
            side: self.side,
            rows,
            cols,
            matrix: m,
        })
    }

    /// Dual bases of the quotients by the radicals.
    pub fn dual_basis(&self, beta: &[i64], cap: u32) -> Result<DualBasis> {
        let g = self.gram(beta, cap)?;
        DualBasis::from_gram(&g)
    }
}

/// Coproduct of a torus-or-generator word as a list of word pairs (unreduced).
fn word_coproduct(w: &[Gen]) -> Vec<(Word, Word)> {
    let mut acc: Vec<(Word, Word)> = vec![(Vec::new(), Vec::new())];
    for g in w {
        let mut next = Vec::new();
        for (a, b) in &acc {
            for (x1, x2) in letter_coproduct(*g) {
                let mut a2 = a.clone();
                a2.extend(x1);
                let mut b2 = b.clone();
                b2.extend(x2);
                next.push((a2, b2));
            }
        }
        acc = next;
    }
    acc
}

/// All words in the letters `kind_i` with multiplicities `beta`, lexicographically.
pub fn words_of_degree(beta: &[i64], kind: Kind) -> Vec<Word> {
    let mut out = Vec::new();
    let mut counts: Vec<i64> = beta.to_vec();
    let total: i64 = beta.iter().sum();
    let mut cur = Vec::new();
    fn rec(counts: &mut Vec<i64>, left: i64, kind: Kind, cur: &mut Word, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in 0..counts.len() {
            if counts[i] > 0 {
                counts[i] -= 1;
                cur.push(Gen::new(kind, i as u8));
                rec(counts, left - 1, kind, cur, out);
                cur.pop();
                counts[i] += 1;
            }
        }
    }
    rec(&mut counts, total, kind, &mut cur, &mut out);
    out
}

/// Gram matrix of the pairing in one degree.
#[derive(Clone, Debug)]
pub struct GradedGram {
    pub degree: Vec<i64>,
    pub side: PairingSide,
    pub rows: Vec<Word>,
    pub cols: Vec<Word>,
    pub matrix: Matrix,
}

fn combo(words: &[Word], v: &[RatFunc]) -> AlgElement {
    AlgElement::from_terms(words.iter().cloned().zip(v.iter().cloned()))
}

impl GradedGram {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Raising-side elements pairing to zero with every lowering word.
    pub fn radical_basis(&self) -> Vec<AlgElement> {
        self.matrix
            .left_kernel()
            .iter()
            .map(|v| combo(&self.rows, v))
            .collect()
    }

    /// Lowering-side elements pairing to zero with every raising word.
    pub fn right_radical_basis(&self) -> Vec<AlgElement> {
        self.matrix
            .kernel()
            .iter()
            .map(|v| combo(&self.cols, v))
            .collect()
    }

    /// Coefficient vector of a raising-side element in the row words.
    pub fn row_vector(&self, x: &AlgElement) -> Result<Vec<RatFunc>> {
        vector_in(&self.rows, x)
    }

    pub fn col_vector(&self, x: &AlgElement) -> Result<Vec<RatFunc>> {
        vector_in(&self.cols, x)
    }
}

pub(crate) fn vector_in(words: &[Word], x: &AlgElement) -> Result<Vec<RatFunc>> {
    let mut v = vec![RatFunc::zero(); words.len()];
    for (w, c) in x.terms() {
        let k = words.iter().position(|u| u == w).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "word {} outside the graded basis",
                crate::algebra::format_word(w)
            ))
        })?;
        v[k] = c.clone();
    }
    Ok(v)
}

/// Dual bases `e_k`, `f_k` with `φ(e_k, f_l) = δ_kl`, plus the reduction of
/// every lowering word onto the chosen basis words modulo the radical.
#[derive(Clone, Debug)]
pub struct DualBasis {
    pub degree: Vec<i64>,
    /// Raising basis words (a deg-lex section of the quotient).
    pub e: Vec<Word>,
    /// Lowering basis words.
    pub f_words: Vec<Word>,
    /// `f_k`, dual to `e_k`, as combinations of `f_words`.
    pub f: Vec<AlgElement>,
    /// All lowering words of the degree.
    pub all_f_words: Vec<Word>,
    /// `reduction[b][w]`: coefficient of basis word `b` in the class of word `w`.
    pub reduction: Matrix,
}

impl DualBasis {
    pub fn from_gram(g: &GradedGram) -> Result<DualBasis> {
        let rows = independent_rows(&g.matrix);
        let sub = g
            .matrix
            .submatrix(&rows, &(0..g.cols.len()).collect::<Vec<_>>());
        let cols = independent_rows(&sub.transpose());
        if rows.len() != cols.len() {
            return Err(Error::DegenerateQuotient(format!("{:?}", g.degree)));
        }
        let core = g.matrix.submatrix(&rows, &cols);
        let inv = core
            .inverse()
            .map_err(|_| Error::DegenerateQuotient(format!("{:?}", g.degree)))?;
        let f_words: Vec<Word> = cols.iter().map(|&j| g.cols[j].clone()).collect();
        let f = (0..rows.len())
            .map(|k| {
                let col: Vec<RatFunc> = (0..cols.len()).map(|b| inv.get(b, k).clone()).collect();
                combo(&f_words, &col)
            })
            .collect();
        let reduction = inv.mul(&sub)?;
        Ok(DualBasis {
            degree: g.degree.clone(),
            e: rows.iter().map(|&i| g.rows[i].clone()).collect(),
            f_words,
            f,
            all_f_words: g.cols.clone(),
            reduction,
        })
    }

    pub fn dim(&self) -> usize {
        self.e.len()
    }

    /// Class of a lowering element in the basis words, modulo the radical.
    pub fn reduce(&self, x: &AlgElement) -> Result<Vec<RatFunc>> {
        let v = vector_in(&self.all_f_words, x)?;
        self.reduction.mul_vec(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_element;
    use crate::coeff::{gauss_factorial, GaussMonomial};

    #[test]
    fn generator_values() {
        let d = RootDatum::sl2();
        let u = PairingEngine::new(&d, PairingSide::U);
        let e = parse_element("E1").unwrap();
        let f = parse_element("F1").unwrap();
        assert_eq!(
            u.pair(&e, &f).unwrap(),
            (&RatFunc::s() - &RatFunc::r()).inv().unwrap()
        );
        let kp = parse_element("K1'").unwrap();
        let k = parse_element("K1").unwrap();
        assert_eq!(u.pair(&kp, &k).unwrap(), RatFunc::rs(1, -1));
        let w = PairingEngine::new(&d, PairingSide::W);
        assert!(w
            .pair(&AlgElement::one(), &parse_element("f1").unwrap())
            .unwrap()
            .is_zero());
        assert!(w.pair(&e, &f).is_err());
    }

    #[test]
    fn square_by_hand() {
        // φ(e'e', ff) = φ(e', ∂_e'(ff)), ∂_e'(ff) = f + φ(w'^-1, w) f = (1 + r^-1 s) f
        let w = PairingEngine::new(&RootDatum::sl2(), PairingSide::W);
        let v = w
            .pair(
                &parse_element("e1' e1'").unwrap(),
                &parse_element("f1 f1").unwrap(),
            )
            .unwrap();
        assert_eq!(v, &RatFunc::one() + &RatFunc::rs(-1, 1));
    }

    #[test]
    fn sl2_gram_is_factorial() {
        let w = PairingEngine::new(&RootDatum::sl2(), PairingSide::W);
        for n in 0..=5 {
            let g = w.gram(&[n], 6).unwrap();
            assert_eq!(g.matrix.rows(), 1);
            let expect = RatFunc::from_poly(gauss_factorial(n as u32, GaussMonomial::r_inv_s()));
            assert_eq!(g.matrix.get(0, 0), &expect);
            assert!(g.radical_basis().is_empty());
        }
        assert!(matches!(
            w.gram(&[7], 6),
            Err(Error::HeightCapExceeded { .. })
        ));
    }

    #[test]
    fn recursion_orders_agree() {
        let d = RootDatum::from_type("A2").unwrap();
        for side in [PairingSide::U, PairingSide::W] {
            let p = PairingEngine::new(&d, side);
            let (ra, lo) = (side.raising(), side.lowering());
            for a in words_of_degree(&[2, 1], ra) {
                for b in words_of_degree(&[2, 1], lo) {
                    assert_eq!(
                        p.pair_words(&a, &b).unwrap(),
                        p.pair_words_right_split(&a, &b).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn a2_gram_and_radical() {
        let d = RootDatum::from_type("A2").unwrap();
        let w = PairingEngine::new(&d, PairingSide::W);
        let g = w.gram(&[1, 1], 6).unwrap();
        assert_eq!(g.rank(), 2);
        let g = w.gram(&[2, 1], 6).unwrap();
        assert_eq!((g.rows.len(), g.rank()), (3, 2));
        let rad = g.radical_basis();
        assert_eq!(rad.len(), 1);
        for b in &g.cols {
            assert!(w
                .pair(&rad[0], &AlgElement::word(b.clone()))
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn dual_bases_are_dual() {
        let d = RootDatum::from_type("A2").unwrap();
        let w = PairingEngine::new(&d, PairingSide::W);
        for beta in [[0, 0], [1, 0], [1, 1], [2, 1], [2, 2]] {
            let db = w.dual_basis(&beta, 6).unwrap();
            for (k, e) in db.e.iter().enumerate() {
                for (l, f) in db.f.iter().enumerate() {
                    let v = w.pair(&AlgElement::word(e.clone()), f).unwrap();
                    assert_eq!(v.is_one(), k == l);
                    assert_eq!(v.is_zero(), k != l);
                }
            }
        }
    }
}
