use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::combinatorics::{binomial, check_cap, combinations, indices_of, mask_of};
use crate::error::{Error, Result};
use crate::hyperfield::{normalize_projective, Hyperfield, Krasner, RealTropVal, Sign};

use super::gp::GrassmannPluecker;
use super::signvec::{SignVector, MAX_SIGN_VECTOR_LEN};

fn cocircuit_vectors<H: Hyperfield>(phi: &GrassmannPluecker<H>, cap: u128) -> Result<Vec<Vec<H>>> {
    let n = phi.ground_size();
    let r = phi.rank();
    check_cap(binomial(n, r - 1), cap)?;
    let mut out = Vec::new();
    let mut tuple = vec![0; r];
    for mu in combinations(n, r - 1) {
        tuple[..r - 1].copy_from_slice(&mu);
        let v: Vec<H> = (0..n)
            .map(|e| {
                tuple[r - 1] = e;
                phi.value(&tuple)
            })
            .collect();
        if v.iter().any(|x| !x.is_zero()) {
            out.push(v);
        }
    }
    Ok(out)
}

/// Signed cocircuits `±[e ↦ φ(μ, e)]` of a chirotope, without the zero
/// vector, sorted canonically.
pub fn cocircuits_from_chirotope(phi: &GrassmannPluecker<Sign>, cap: u128) -> Result<Vec<SignVector>> {
    if phi.ground_size() > MAX_SIGN_VECTOR_LEN {
        return Err(Error::Invalid("sign vectors hold at most 64 entries".into()));
    }
    let mut set = BTreeSet::new();
    for v in cocircuit_vectors(phi, cap)? {
        let x = SignVector::from_signs(&v);
        set.insert(x.to_string());
        set.insert(x.neg().to_string());
    }
    let mut out: Vec<SignVector> = set.iter().map(|s| s.parse().expect("well-formed")).collect();
    out.sort_by(SignVector::canonical_cmp);
    Ok(out)
}

/// Real tropical cocircuits `e ↦ φ(μ, e)`, normalized so that the first
/// nonzero entry is `(+, 0)`, deduplicated and sorted.
pub fn real_tropical_cocircuits(phi: &GrassmannPluecker<RealTropVal>, cap: u128) -> Result<Vec<Vec<RealTropVal>>> {
    let set: BTreeSet<Vec<RealTropVal>> = cocircuit_vectors(phi, cap)?
        .iter()
        .map(|v| normalize_projective(v))
        .collect::<Result<_>>()?;
    Ok(set.into_iter().collect())
}

/// A finite set of sign vectors with its conformal order, stored as a
/// covering relation `(lower, upper)` on indices into `vectors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CovectorPoset {
    pub vectors: Vec<SignVector>,
    pub covers: Vec<(usize, usize)>,
    #[serde(skip)]
    index: HashMap<SignVector, usize>,
}

impl CovectorPoset {
    /// Sorts and deduplicates the vectors and computes covering pairs.
    pub fn from_vectors(vectors: impl IntoIterator<Item = SignVector>) -> Self {
        let mut vectors: Vec<SignVector> = vectors.into_iter().collect::<HashSet<_>>().into_iter().collect();
        vectors.sort_by(SignVector::canonical_cmp);
        let index: HashMap<SignVector, usize> = vectors.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut covers = Vec::new();
        for (j, y) in vectors.iter().enumerate() {
            let below: Vec<usize> = (0..j)
                .filter(|&i| vectors[i] != *y && vectors[i].conforms_to(y))
                .collect();
            for &i in &below {
                let maximal = below
                    .iter()
                    .all(|&k| k == i || !vectors[i].conforms_to(&vectors[k]));
                if maximal {
                    covers.push((i, j));
                }
            }
        }
        covers.sort();
        CovectorPoset { vectors, covers, index }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn ground_size(&self) -> usize {
        self.vectors.first().map_or(0, SignVector::len)
    }

    pub fn index_of(&self, x: &SignVector) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &SignVector) -> bool {
        self.index.contains_key(x)
    }

    /// Upper covers of each element.
    pub fn up_sets(&self) -> Vec<Vec<usize>> {
        let mut up = vec![Vec::new(); self.vectors.len()];
        for &(i, j) in &self.covers {
            up[i].push(j);
        }
        up
    }
}

/// Smallest set containing `0` and the cocircuits that is closed under
/// composition.
pub fn covector_closure(cocircuits: &[SignVector], len: usize, cap: usize) -> Result<CovectorPoset> {
    if let Some(c) = cocircuits.iter().find(|c| c.len() != len) {
        return Err(Error::DimensionMismatch { expected: len, found: c.len() });
    }
    let zero = SignVector::zero(len);
    let mut seen: HashSet<SignVector> = HashSet::from([zero]);
    let mut queue = VecDeque::from([zero]);
    while let Some(x) = queue.pop_front() {
        for c in cocircuits {
            let y = x.compose(c);
            if seen.insert(y) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded {
                        required: seen.len() as u128,
                        cap: cap as u128,
                    });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(CovectorPoset::from_vectors(seen))
}

/// Result of checking the covector axioms on a finite set of sign vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CovectorReport {
    pub ok: bool,
    pub cov1: bool,
    pub cov2: bool,
    pub cov3: bool,
    pub cov4: bool,
    pub violations: Vec<String>,
}

const MAX_REPORTED: usize = 16;

pub fn check_covector_axioms(poset: &CovectorPoset) -> CovectorReport {
    let vs = &poset.vectors;
    let len = poset.ground_size();
    let mut report = CovectorReport {
        cov1: poset.contains(&SignVector::zero(len)),
        cov2: true,
        cov3: true,
        cov4: true,
        ..Default::default()
    };
    if !report.cov1 {
        report.violations.push("Cov1: zero vector missing".into());
    }
    let note = |report: &mut CovectorReport, msg: String| {
        if report.violations.len() < MAX_REPORTED {
            report.violations.push(msg);
        }
    };
    for x in vs {
        if !poset.contains(&x.neg()) {
            report.cov2 = false;
            note(&mut report, format!("Cov2: {} present but {} missing", x, x.neg()));
        }
    }
    for x in vs {
        for y in vs {
            let z = x.compose(y);
            if !poset.contains(&z) {
                report.cov3 = false;
                note(&mut report, format!("Cov3: {x} ∘ {y} = {z} missing"));
            }
        }
    }
    // Projections of all covectors onto a coordinate mask, built on demand.
    let full = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
    let mut projections: HashMap<u64, HashSet<(u64, u64)>> = HashMap::new();
    for x in vs {
        for y in vs {
            let sep = x.separation(y);
            if sep == 0 {
                continue;
            }
            let xy = x.compose(y);
            for e in indices_of(sep) {
                let mask = (full & !sep) | (1 << e);
                let target = xy.masked(full & !sep);
                let known = projections.entry(mask).or_insert_with(|| {
                    vs.iter()
                        .map(|z| (z.plus_mask() & mask, z.minus_mask() & mask))
                        .collect()
                });
                if !known.contains(&(target.plus_mask(), target.minus_mask())) {
                    report.cov4 = false;
                    note(&mut report, format!("Cov4: no eliminant for {x}, {y} at {e}"));
                }
            }
        }
    }
    report.ok = report.cov1 && report.cov2 && report.cov3 && report.cov4;
    report
}

/// Zero set of a covector, certified to be a flat of the underlying matroid.
pub fn covector_zero_flat(x: &SignVector, underlying: &GrassmannPluecker<Krasner>) -> Result<Vec<usize>> {
    if x.len() != underlying.ground_size() {
        return Err(Error::DimensionMismatch {
            expected: underlying.ground_size(),
            found: x.len(),
        });
    }
    let zeros = indices_of(x.zero_set());
    let closure = underlying.closure(&zeros);
    if mask_of(&closure) != x.zero_set() {
        return Err(Error::NotAFlat(format!("{zeros:?}")));
    }
    Ok(zeros)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperfield::sgn;
    use crate::matroid::gp_from_matrix;
    use crate::puiseux::{Matrix, PuiseuxPoly};
    use crate::Limits;

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    fn chirotope(rows: &[&[i64]]) -> GrassmannPluecker<Sign> {
        let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| PuiseuxPoly::from_int(x)).collect()).collect()).unwrap();
        gp_from_matrix(&m, None, &Limits::default()).unwrap().map(sgn)
    }

    #[test]
    fn cocircuits_of_the_line() {
        let phi = chirotope(&[&[1, 0, 1], &[0, 1, 1]]);
        let cc: Vec<String> = cocircuits_from_chirotope(&phi, 100).unwrap().iter().map(|v| v.to_string()).collect();
        let mut expected = vec!["0++", "0--", "+0+", "-0-", "+-0", "-+0"];
        expected.sort();
        let mut got = cc.clone();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn rank_one_cocircuits() {
        let phi = GrassmannPluecker::new(1, vec!["a".into(), "b".into()], [(vec![0], Sign::Plus), (vec![1], Sign::Plus)]).unwrap();
        let cc = cocircuits_from_chirotope(&phi, 100).unwrap();
        assert_eq!(cc, vec![sv("++"), sv("--")]);
    }

    #[test]
    fn closure_of_the_line() {
        let phi = chirotope(&[&[1, 0, 1], &[0, 1, 1]]);
        let cc = cocircuits_from_chirotope(&phi, 100).unwrap();
        let poset = covector_closure(&cc, 3, 1000).unwrap();
        assert_eq!(poset.len(), 13);
        assert!(check_covector_axioms(&poset).ok);
        let again = covector_closure(&poset.vectors, 3, 1000).unwrap();
        assert_eq!(again, poset);
        // Zero covers six rays; every sector covers two rays.
        assert_eq!(poset.covers.len(), 6 + 12);
        let empty = covector_closure(&[], 3, 10).unwrap();
        assert_eq!(empty.vectors, vec![SignVector::zero(3)]);
        assert!(check_covector_axioms(&empty).ok);
    }

    #[test]
    fn missing_cocircuit_breaks_elimination() {
        let phi = chirotope(&[&[1, 0, 1], &[0, 1, 1]]);
        let cc: Vec<SignVector> = cocircuits_from_chirotope(&phi, 100)
            .unwrap()
            .into_iter()
            .filter(|v| *v != sv("+-0") && *v != sv("-+0"))
            .collect();
        let poset = covector_closure(&cc, 3, 1000).unwrap();
        let report = check_covector_axioms(&poset);
        assert!(!report.cov4);
        assert!(report.cov1 && report.cov2 && report.cov3);
    }

    #[test]
    fn zero_sets_are_flats() {
        let phi = chirotope(&[&[1, 0, 1], &[0, 1, 1]]);
        let k = phi.underlying();
        assert_eq!(covector_zero_flat(&sv("000"), &k).unwrap(), vec![0, 1, 2]);
        assert_eq!(covector_zero_flat(&sv("0++"), &k).unwrap(), vec![0]);
        assert_eq!(covector_zero_flat(&sv("+-+"), &k).unwrap(), Vec::<usize>::new());
        // Parallel columns 0 and 2: {0} alone is not closed.
        let par = chirotope(&[&[1, 0, 2], &[0, 1, 0]]).underlying();
        assert!(matches!(covector_zero_flat(&sv("0++"), &par), Err(Error::NotAFlat(_))));
    }
}
