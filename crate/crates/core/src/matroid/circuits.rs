use std::collections::HashMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{binomial, check_cap, combinations, mask_of};
use crate::error::{Error, Result};
use crate::hyperfield::{hyper_sum, normalize_projective, Hyperfield, RealTropVal};
use crate::puiseux::{det_bounded, rank, Matrix, PuiseuxPoly};
use crate::Limits;

/// Canonical representative of a class of signed valuated circuits: the
/// first nonzero entry is `(+, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedValuatedCircuit {
    entries: Vec<RealTropVal>,
}

impl SignedValuatedCircuit {
    /// Normalizes an arbitrary nonzero representative.
    pub fn new(entries: &[RealTropVal]) -> Result<Self> {
        Ok(SignedValuatedCircuit {
            entries: normalize_projective(entries)?,
        })
    }

    pub fn entries(&self) -> &[RealTropVal] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &RealTropVal {
        &self.entries[i]
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.entries.len()).filter(|&i| !self.entries[i].is_zero()).collect()
    }

    pub fn support_mask(&self) -> u64 {
        mask_of(&self.support())
    }
}

impl Serialize for SignedValuatedCircuit {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[String; 2]> = self
            .entries
            .iter()
            .map(|x| [x.sign().to_string(), x.val().to_string()])
            .collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedValuatedCircuit {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<RealTropVal>::deserialize(deserializer)?;
        SignedValuatedCircuit::new(&entries).map_err(serde::de::Error::custom)
    }
}

/// Signed valuated circuits of the row space of a full-rank matrix, one per
/// minimal dependent set of columns, in order of (size, lexicographic support).
pub fn circuits_from_matrix(m: &Matrix<PuiseuxPoly>, limits: &Limits) -> Result<Vec<SignedValuatedCircuit>> {
    let r = m.rows();
    let n = m.cols();
    let found = rank(m);
    if found != r {
        return Err(Error::RankDeficient { rank: found, expected: r });
    }
    let required: u128 = (0..=(r + 1).min(n)).map(|k| binomial(n, k)).sum();
    check_cap(required, limits.enumeration_cap)?;

    let mut independent: HashMap<u64, bool> = HashMap::new();
    independent.insert(0, true);
    let mut circuits = Vec::new();
    for size in 1..=(r + 1).min(n) {
        for subset in combinations(n, size) {
            let mask = mask_of(&subset);
            let facets_independent = subset.iter().all(|&i| independent[&(mask & !(1 << i))]);
            if !facets_independent {
                independent.insert(mask, false);
                continue;
            }
            let is_independent = size <= r && rank(&m.select_columns(&subset)) == size;
            independent.insert(mask, is_independent);
            if !is_independent {
                circuits.push(circuit_coefficients(m, &subset, limits)?);
            }
        }
    }
    Ok(circuits)
}

/// Cramer coefficients of the unique dependence among `support`, a minimal
/// dependent set of columns spanning a space of dimension `|support| - 1`.
fn circuit_coefficients(
    m: &Matrix<PuiseuxPoly>,
    support: &[usize],
    limits: &Limits,
) -> Result<SignedValuatedCircuit> {
    let k = support.len() - 1;
    let columns = m.select_columns(support);
    let mut rows = Vec::with_capacity(k);
    for r in 0..m.rows() {
        if rows.len() == k {
            break;
        }
        rows.push(r);
        if rank(&columns.select_rows(&rows)) < rows.len() {
            rows.pop();
        }
    }
    debug_assert_eq!(rows.len(), k);
    let square_source = columns.select_rows(&rows);
    let mut entries = vec![RealTropVal::zero(); m.cols()];
    for (i, &e) in support.iter().enumerate() {
        let others: Vec<usize> = (0..support.len()).filter(|&j| j != i).collect();
        let d = det_bounded(&square_source.select_columns(&others), limits.max_det_size)?;
        entries[e] = d.signed_value().signed_by_parity(i);
    }
    SignedValuatedCircuit::new(&entries)
}

/// Result of checking the circuit axioms on a finite list of classes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CircuitReport {
    pub ok: bool,
    pub c0: bool,
    pub c2: bool,
    pub c3: bool,
    /// Size of the largest subset containing no circuit support.
    pub max_independent_size: usize,
    pub violations: Vec<String>,
}

const MAX_REPORTED: usize = 16;

/// Checks (C0), (C2), (C3) on normalized representatives and reports the
/// rank bound of (C4). Axiom (C1) holds by construction of the classes.
pub fn check_circuit_axioms(cs: &[SignedValuatedCircuit]) -> Result<CircuitReport> {
    let n = cs.first().map_or(0, SignedValuatedCircuit::len);
    if let Some(c) = cs.iter().find(|c| c.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: c.len() });
    }
    if n > 63 {
        return Err(Error::Invalid("ground sets are limited to 63 elements".into()));
    }
    let mut report = CircuitReport {
        c0: true,
        c2: true,
        c3: true,
        ..Default::default()
    };
    let note = |report: &mut CircuitReport, msg: String| {
        if report.violations.len() < MAX_REPORTED {
            report.violations.push(msg);
        }
    };

    for (i, c) in cs.iter().enumerate() {
        if c.support().is_empty() {
            report.c0 = false;
            note(&mut report, format!("C0: circuit {i} is zero"));
        }
    }

    let masks: Vec<u64> = cs.iter().map(SignedValuatedCircuit::support_mask).collect();
    for i in 0..cs.len() {
        for j in 0..cs.len() {
            if i != j && masks[i] & !masks[j] == 0 && cs[i] != cs[j] {
                report.c2 = false;
                note(&mut report, format!("C2: support of circuit {i} lies in support of circuit {j}"));
            }
        }
    }

    for (i, c) in cs.iter().enumerate() {
        for (j, c2) in cs.iter().enumerate() {
            if i == j {
                continue;
            }
            for e in 0..n {
                if c.get(e).is_zero() || c2.get(e).is_zero() {
                    continue;
                }
                // Rescale the second circuit so that its e-entry is -C_e.
                let alpha = c.get(e).neg().div(c2.get(e))?;
                let d: Vec<RealTropVal> = c2.entries().iter().map(|x| x.mul(&alpha)).collect();
                for f in 0..n {
                    if c.get(f).is_zero() || c.get(f).val() >= d[f].val() {
                        continue;
                    }
                    if !has_eliminant(cs, c.entries(), &d, e, f) {
                        report.c3 = false;
                        note(&mut report, format!("C3: no eliminant for circuits {i}, {j} at e={e}, f={f}"));
                    }
                }
            }
        }
    }

    report.max_independent_size = (0u64..1 << n)
        .filter(|s| masks.iter().all(|m| m & !s != 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0);
    report.ok = report.c0 && report.c2 && report.c3;
    Ok(report)
}

fn has_eliminant(cs: &[SignedValuatedCircuit], c: &[RealTropVal], d: &[RealTropVal], e: usize, f: usize) -> bool {
    cs.iter().any(|r| {
        if !r.get(e).is_zero() || r.get(f).is_zero() {
            return false;
        }
        let beta = c[f].div(r.get(f)).expect("nonzero entry");
        (0..c.len()).all(|g| {
            let x = r.get(g).mul(&beta);
            // |C''_g| < max(|C_g|, |D_g|); a zero entry counts as smaller.
            let bound = c[g].val().min(d[g].val());
            (!bound.is_infinite() && x.val() > bound)
                || hyper_sum(&[c[g].clone(), d[g].clone()]).expect("nonempty").contains(&x)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::{rational, Rational};

    fn matrix(rows: &[&[&str]]) -> Matrix<PuiseuxPoly> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| s.parse().unwrap()).collect()).collect()).unwrap()
    }

    fn rt(s: &str) -> RealTropVal {
        RealTropVal::parse_pair(s).unwrap()
    }

    /// Exact kernel of a rational 2×3 matrix of rank 2, via the cross product.
    fn kernel_2x3(a: [[i64; 3]; 2]) -> Vec<Rational> {
        let [r, s] = a;
        [
            r[1] * s[2] - r[2] * s[1],
            r[2] * s[0] - r[0] * s[2],
            r[0] * s[1] - r[1] * s[0],
        ]
        .iter()
        .map(|&x| rational(x, 1))
        .collect()
    }

    #[test]
    fn line_in_the_plane() {
        let cs = circuits_from_matrix(&matrix(&[&["1", "0", "1"], &["0", "1", "1"]]), &Limits::default()).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].entries(), &[rt("+:0"), rt("+:0"), rt("-:0")]);
        let kernel: Vec<RealTropVal> = kernel_2x3([[1, 0, 1], [0, 1, 1]])
            .into_iter()
            .map(|q| PuiseuxPoly::constant(q).signed_value())
            .collect();
        assert_eq!(cs[0], SignedValuatedCircuit::new(&kernel).unwrap());
        assert_eq!(serde_json::to_string(&cs[0]).unwrap(), r#"[["+","0"],["+","0"],["-","0"]]"#);
        let report = check_circuit_axioms(&cs).unwrap();
        assert!(report.ok);
        assert_eq!(report.max_independent_size, 2);
    }

    #[test]
    fn valued_dependence() {
        let cs = circuits_from_matrix(&matrix(&[&["1", "0", "1"], &["0", "1", "t"]]), &Limits::default()).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].entries(), &[rt("+:0"), rt("+:1"), rt("-:0")]);
    }

    #[test]
    fn independent_columns_have_no_circuits() {
        let cs = circuits_from_matrix(&matrix(&[&["1", "2"], &["0", "t"]]), &Limits::default()).unwrap();
        assert!(cs.is_empty());
    }

    #[test]
    fn loops_and_parallel_elements() {
        let cs = circuits_from_matrix(&matrix(&[&["1", "0", "2"], &["0", "0", "0"], &["0", "1", "0"]]), &Limits::default());
        assert!(matches!(cs, Err(Error::RankDeficient { .. })));
        let cs = circuits_from_matrix(&matrix(&[&["1", "0", "2", "0"], &["0", "1", "0", "0"]]), &Limits::default()).unwrap();
        // The zero column is a loop; columns 0 and 2 are parallel.
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0].support(), vec![3]);
        assert_eq!(cs[1].entries()[..3], [rt("+:0"), RealTropVal::zero(), rt("-:0")]);
    }

    #[test]
    fn deleting_a_class_breaks_elimination() {
        let cs = circuits_from_matrix(&matrix(&[&["1", "0", "1", "1"], &["0", "1", "1", "-1"]]), &Limits::default()).unwrap();
        assert_eq!(cs.len(), 4);
        assert!(check_circuit_axioms(&cs).unwrap().ok);
        let mut broken = cs.clone();
        broken.remove(0);
        let report = check_circuit_axioms(&broken).unwrap();
        assert!(!report.c3 && !report.ok);
        assert!(report.c0 && report.c2);
    }

    #[test]
    fn nested_supports_violate_c2() {
        let a = SignedValuatedCircuit::new(&[rt("+:0"), rt("+:0"), RealTropVal::zero()]).unwrap();
        let b = SignedValuatedCircuit::new(&[rt("+:0"), rt("-:0"), RealTropVal::zero()]).unwrap();
        let report = check_circuit_axioms(&[a, b]).unwrap();
        assert!(!report.c2);
    }
}
