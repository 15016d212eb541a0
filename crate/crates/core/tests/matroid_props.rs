mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;

use realtrop::hyperfield::{sgn, Sign};
use realtrop::matroid::{
    check_circuit_axioms, check_covector_axioms, check_gp_relations, circuits_from_matrix, cocircuits_from_chirotope,
    covector_closure, gp_from_matrix, pushforward_gp, real_tropical_cocircuits, AnyGp, SignVector,
};
use realtrop::hyperfield::Hom;
use realtrop::tropical::bergman_fan;
use realtrop::Limits;

fn shape() -> impl Strategy<Value = (u64, usize, usize)> {
    (any::<u64>(), 1usize..=4, 0usize..=3).prop_map(|(seed, rows, extra)| (seed, rows, rows + extra))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn realizable_data_satisfies_the_axioms((seed, rows, cols) in shape()) {
        let m = random_full_rank(&mut rng(seed), rows, cols, 0.3, false);
        let lim = Limits::default();
        let gp = gp_from_matrix(&m, None, &lim).unwrap();
        prop_assert!(check_gp_relations(&gp, lim.enumeration_cap).unwrap().ok);
        let circuits = circuits_from_matrix(&m, &lim).unwrap();
        let report = check_circuit_axioms(&circuits).unwrap();
        prop_assert!(report.ok, "{:?}", report.violations);
        if !circuits.is_empty() {
            prop_assert_eq!(report.max_independent_size, rows);
        }
        for hom in [Hom::Abs, Hom::Sgn, Hom::ToKrasner] {
            let pushed = pushforward_gp(&AnyGp::RealTropical(gp.clone()), hom).unwrap();
            prop_assert!(pushed.check_relations(lim.enumeration_cap).unwrap().ok);
        }
    }

    #[test]
    fn circuit_supports_match_minimal_dependent_sets((seed, rows, cols) in shape()) {
        let m = random_full_rank(&mut rng(seed), rows, cols, 0.4, false);
        let mut supports: Vec<u64> = circuits_from_matrix(&m, &Limits::default())
            .unwrap()
            .iter()
            .map(|c| c.support_mask())
            .collect();
        supports.sort();
        prop_assert_eq!(supports, circuit_supports_by_search(&m));
    }

    #[test]
    fn sign_cocircuits_match_the_sign_chirotope((seed, rows, cols) in shape()) {
        let m = random_full_rank(&mut rng(seed), rows, cols, 0.3, false);
        let lim = Limits::default();
        let gp = gp_from_matrix(&m, None, &lim).unwrap();
        let from_rt: BTreeSet<String> = real_tropical_cocircuits(&gp, lim.enumeration_cap)
            .unwrap()
            .iter()
            .flat_map(|v| {
                let x = SignVector::from_signs(&v.iter().map(sgn).collect::<Vec<Sign>>());
                [x.to_string(), x.neg().to_string()]
            })
            .collect();
        let from_signs: BTreeSet<String> = cocircuits_from_chirotope(&gp.map(sgn), lim.enumeration_cap)
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect();
        prop_assert_eq!(from_rt, from_signs);
    }

    #[test]
    fn covector_sets_are_symmetric_with_short_chains((seed, rows, cols) in shape()) {
        let m = random_full_rank(&mut rng(seed), rows, cols, 0.3, true);
        let lim = Limits::default();
        let chirotope = gp_from_matrix(&m, None, &lim).unwrap().map(sgn);
        let cocircuits = cocircuits_from_chirotope(&chirotope, lim.enumeration_cap).unwrap();
        let poset = covector_closure(&cocircuits, cols, lim.closure_cap).unwrap();
        prop_assert!(check_covector_axioms(&poset).ok);
        for x in &poset.vectors {
            prop_assert!(poset.contains(&x.neg()));
        }
        let fan = bergman_fan(&poset, lim.closure_cap).unwrap();
        prop_assert!(fan.chains.iter().all(|c| c.len() <= rows));
    }
}

#[test]
fn elimination_accepts_zero_entries_below_the_larger_side() {
    // These seeds once produced spurious (C3) failures: a candidate circuit
    // vanishing where only one side of the elimination was nonzero.
    let lim = Limits::default();
    for (seed, rows, cols) in [(456384612957533697u64, 2, 5), (677118042313291155, 4, 7)] {
        let m = random_full_rank(&mut rng(seed), rows, cols, 0.3, false);
        let report = check_circuit_axioms(&circuits_from_matrix(&m, &lim).unwrap()).unwrap();
        assert!(report.ok, "{:?}", report.violations);
    }
}
