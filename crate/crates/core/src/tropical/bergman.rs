use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyperfield::Hyperfield;
use crate::matroid::{CovectorPoset, SignVector};
use crate::valuation::Valuation;

use super::RealTropProjPoint;

/// The real Bergman fan of a finite oriented matroid: one cone for each
/// chain `X_1 < … < X_l` of nonzero covectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BergmanFan {
    /// Length of the longest chain, the rank of the oriented matroid.
    pub rank: usize,
    #[serde(serialize_with = "serialize_vectors")]
    pub covectors: CovectorPoset,
    /// Chains as increasing index lists into `covectors.vectors`, sorted by
    /// length and then lexicographically.
    pub chains: Vec<Vec<usize>>,
}

fn serialize_vectors<S: serde::Serializer>(p: &CovectorPoset, s: S) -> std::result::Result<S::Ok, S::Error> {
    p.vectors.serialize(s)
}

/// Enumerates all chains of nonzero covectors of the poset.
pub fn bergman_fan(poset: &CovectorPoset, cap: usize) -> Result<BergmanFan> {
    let vs = &poset.vectors;
    // Indices are sorted by support size, so strictly larger elements
    // always have larger indices.
    let above: Vec<Vec<usize>> = (0..vs.len())
        .map(|i| {
            (i + 1..vs.len())
                .filter(|&j| vs[i] != vs[j] && vs[i].conforms_to(&vs[j]))
                .collect()
        })
        .collect();
    let mut chains = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..vs.len()).filter(|&i| !vs[i].is_zero()).map(|i| vec![i]).collect();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().expect("chains are nonempty");
        for &j in &above[last] {
            let mut longer = chain.clone();
            longer.push(j);
            stack.push(longer);
        }
        chains.push(chain);
        if chains.len() > cap {
            return Err(Error::CapExceeded {
                required: chains.len() as u128,
                cap: cap as u128,
            });
        }
    }
    chains.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let rank = chains.iter().map(Vec::len).max().unwrap_or(0);
    Ok(BergmanFan {
        rank,
        covectors: poset.clone(),
        chains,
    })
}

impl BergmanFan {
    /// Chains that cannot be refined or extended.
    pub fn maximal_chains(&self) -> Vec<&Vec<usize>> {
        let covers: BTreeSet<(usize, usize)> = self.covectors.covers.iter().copied().collect();
        let vs = &self.covectors.vectors;
        let has_upper: BTreeSet<usize> = covers.iter().map(|&(i, _)| i).collect();
        self.chains
            .iter()
            .filter(|c| {
                let first = c[0];
                let last = *c.last().expect("nonempty");
                let atom = vs
                    .iter()
                    .position(SignVector::is_zero)
                    .map_or(true, |z| covers.contains(&(z, first)));
                atom && !has_upper.contains(&last) && c.windows(2).all(|w| covers.contains(&(w[0], w[1])))
            })
            .collect()
    }
}

/// Membership in the support of the fan, by the level-set decomposition:
/// ordering the distinct finite valuations `v_1 < … < v_k` of `y`, the sign
/// pattern of the coordinates with valuation at most `v_j` must be a
/// covector for every `j`. Those covectors then form the chain whose cone
/// contains `y`.
pub fn bergman_member(y: &RealTropProjPoint, fan: &BergmanFan) -> Result<bool> {
    let n = fan.covectors.ground_size();
    if y.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: y.len() });
    }
    let levels: BTreeSet<&Valuation> = y.coords().iter().filter(|x| !x.is_zero()).map(|x| x.val()).collect();
    for level in levels {
        let mut x = SignVector::zero(n);
        for (i, c) in y.coords().iter().enumerate() {
            if !c.is_zero() && c.val() <= level {
                x.set(i, c.sign());
            }
        }
        if !fan.covectors.contains(&x) {
            return Ok(false);
        }
    }
    Ok(true)
}
