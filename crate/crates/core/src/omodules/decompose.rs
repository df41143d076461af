use super::{ModuleVector, WeightModule};
use crate::error::{Error, Result};
use crate::rootdata::Weight;

/// How `⊕_k B- ⊗ v_k → M` behaves on one weight space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpaceCheck {
    pub weight: Weight,
    pub dim: usize,
    pub domain_dim: usize,
    pub rank: usize,
    /// Set when part of the domain lies beyond the truncation.
    pub boundary: bool,
}

impl WeightSpaceCheck {
    pub fn bijective(&self) -> bool {
        self.dim == self.domain_dim && self.rank == self.dim
    }
}

/// Maximal vectors and the per-weight comparison with the free module they generate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    /// Highest weights and multiplicities of the maximal vectors.
    pub summands: Vec<(Weight, usize)>,
    pub spaces: Vec<WeightSpaceCheck>,
}

impl DecompositionReport {
    /// Every weight space away from the truncation boundary is hit bijectively.
    pub fn semisimple(&self) -> bool {
        self.spaces
            .iter()
            .filter(|s| !s.boundary)
            .all(WeightSpaceCheck::bijective)
    }

    pub fn interior(&self) -> usize {
        self.spaces.iter().filter(|s| !s.boundary).count()
    }
}

impl WeightModule {
    /// Compares `M` with `⊕ B- ⊗ v_k` over the maximal vectors `v_k`, weight by weight.
    pub fn decompose(&self) -> Result<DecompositionReport> {
        let maximal = self.all_maximal_vectors()?;
        let summands = maximal
            .iter()
            .map(|(w, vs)| (w.clone(), vs.len()))
            .collect();
        let mut spaces = Vec::new();
        for (nu, idx) in self.weight_spaces() {
            let mut images: Vec<ModuleVector> = Vec::new();
            let mut boundary = false;
            'outer: for (mu, vs) in &maximal {
                let Some(beta) = mu.sub(&nu).as_ints() else {
                    continue;
                };
                if beta.iter().any(|&b| b < 0) {
                    continue;
                }
                if beta.iter().sum::<i64>() > self.depth as i64 {
                    boundary = true;
                    break;
                }
                let db = self.bminus.degree(&beta)?;
                for w in &db.f_words {
                    for v in vs {
                        match self.act_word(w, v) {
                            Ok(img) => images.push(img),
                            Err(Error::TruncationLoss) => {
                                boundary = true;
                                break 'outer;
                            }
                            Err(e) => return Err(e),
                        }
                    }
                }
            }
            let rank = if images.is_empty() {
                0
            } else {
                let cols: Vec<usize> = (0..images.len()).collect();
                let m = self.matrix_of(&cols, &idx, |v| {
                    let j = v.support().next().expect("basis vector");
                    Ok(images[j].clone())
                })?;
                m.rank()
            };
            spaces.push(WeightSpaceCheck {
                weight: nu,
                dim: idx.len(),
                domain_dim: images.len(),
                rank,
                boundary,
            });
        }
        Ok(DecompositionReport { summands, spaces })
    }
}
