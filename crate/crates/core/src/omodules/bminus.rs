use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use super::ModuleVector;
use crate::algebra::{AlgElement, BraidedBminus, Gen, Kind, Word};
use crate::coeff::RatFunc;
use crate::error::Result;
use crate::pairing::{DualBasis, PairingEngine, PairingSide};
use crate::rootdata::RootDatum;

/// `B-` up to a height, graded by degree, with the dual bases of every
/// homogeneous piece against the raising side.
pub struct GradedBminus {
    pairing: PairingEngine,
    braided: BraidedBminus,
    depth: u32,
    pieces: Mutex<HashMap<Vec<i64>, Arc<DualBasis>>>,
}

impl std::fmt::Debug for GradedBminus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GradedBminus({}, depth {})",
            self.pairing.datum().name(),
            self.depth
        )
    }
}

impl GradedBminus {
    pub fn new(datum: &RootDatum, depth: u32) -> GradedBminus {
        GradedBminus {
            pairing: PairingEngine::new(datum, PairingSide::W),
            braided: BraidedBminus::new(datum),
            depth,
            pieces: Mutex::new(HashMap::new()),
        }
    }

    pub fn pairing(&self) -> &PairingEngine {
        &self.pairing
    }

    pub fn braided(&self) -> &BraidedBminus {
        &self.braided
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// The homogeneous piece of degree `-beta`.
    pub fn degree(&self, beta: &[i64]) -> Result<Arc<DualBasis>> {
        if let Some(hit) = self.pieces.lock().expect("cache lock").get(beta) {
            return Ok(hit.clone());
        }
        let db = Arc::new(self.pairing.dual_basis(beta, self.depth)?);
        self.pieces
            .lock()
            .expect("cache lock")
            .insert(beta.to_vec(), db.clone());
        Ok(db)
    }

    pub fn dim(&self, beta: &[i64]) -> Result<usize> {
        Ok(self.degree(beta)?.dim())
    }

    /// Coordinates of a homogeneous lowering element on the basis words of its degree.
    pub fn reduce(&self, beta: &[i64], x: &AlgElement) -> Result<Vec<RatFunc>> {
        self.degree(beta)?.reduce(x)
    }

    /// Basis words of every degree up to the depth.
    pub fn basis_words(&self) -> Result<Vec<(Vec<i64>, Word)>> {
        let mut out = Vec::new();
        for beta in degrees_up_to(self.pairing.datum().rank(), self.depth) {
            for w in &self.degree(&beta)?.f_words {
                out.push((beta.clone(), w.clone()));
            }
        }
        Ok(out)
    }

    /// Splits a lowering element into its homogeneous parts and reduces each onto basis words.
    pub fn reduce_words(&self, x: &AlgElement) -> Result<Vec<(Word, RatFunc)>> {
        let rank = self.pairing.datum().rank();
        let mut parts: BTreeMap<Vec<i64>, AlgElement> = BTreeMap::new();
        for (w, c) in x.terms() {
            parts
                .entry(lowering_degree(w, rank))
                .or_insert_with(AlgElement::zero)
                .add_term(w.clone(), c);
        }
        let mut out = Vec::new();
        for (beta, part) in parts {
            let db = self.degree(&beta)?;
            for (w, c) in db.f_words.iter().zip(db.reduce(&part)?) {
                if !c.is_zero() {
                    out.push((w.clone(), c));
                }
            }
        }
        Ok(out)
    }

    pub(crate) fn embed(
        &self,
        index: &BTreeMap<(usize, Vec<i64>, Word), usize>,
        summand: usize,
        beta: &[i64],
        coords: &[RatFunc],
    ) -> ModuleVector {
        let db = self.degree(beta).expect("degree already built");
        let mut v = ModuleVector::zero();
        for (w, c) in db.f_words.iter().zip(coords) {
            if !c.is_zero() {
                v.add_term(index[&(summand, beta.to_vec(), w.clone())], c);
            }
        }
        v
    }
}

/// Multiplicities of the `f_i` in a word.
pub fn lowering_degree(w: &[Gen], rank: usize) -> Vec<i64> {
    let mut d = vec![0; rank];
    for g in w {
        if g.kind == Kind::Fl {
            d[g.idx as usize] += 1;
        }
    }
    d
}

/// All `beta` in `N^rank` of height at most `depth`, by height and then lexicographically.
pub fn degrees_up_to(rank: usize, depth: u32) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for h in 0..=depth as i64 {
        let mut level = Vec::new();
        compositions(rank, h, &mut Vec::new(), &mut level);
        level.sort();
        level.reverse();
        out.extend(level);
    }
    out
}

fn compositions(parts: usize, total: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if parts == 0 {
        return;
    }
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for k in 0..=total {
        prefix.push(k);
        compositions(parts - 1, total - k, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_enumeration() {
        assert_eq!(
            degrees_up_to(1, 3),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        let d = degrees_up_to(2, 2);
        assert_eq!(
            d,
            vec![
                vec![0, 0],
                vec![1, 0],
                vec![0, 1],
                vec![2, 0],
                vec![1, 1],
                vec![0, 2]
            ]
        );
    }

    #[test]
    fn a2_dimensions_follow_kostant() {
        // partitions into positive roots a1, a2, a1+a2
        let b = GradedBminus::new(&RootDatum::from_type("A2").unwrap(), 4);
        assert_eq!(b.dim(&[1, 1]).unwrap(), 2);
        assert_eq!(b.dim(&[2, 1]).unwrap(), 2);
        assert_eq!(b.dim(&[2, 2]).unwrap(), 3);
        assert_eq!(b.dim(&[3, 0]).unwrap(), 1);
    }
}
