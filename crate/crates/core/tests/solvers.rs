mod common;

use common::naive_has_two_factor;
use twofactor::graph::{complete, enumerate_nonisomorphic, to_graph6, two_kk_join_complement, wheel};
use twofactor::invariants::connectivity;
use twofactor::solver::{
    augment, exact_cycle_packing, exact_two_factor, greedy_cycle_packing, packing_feasible_by_theory,
    two_factor_via_proof, AugmentOutcome, ProofResult, SolverError, StartMode, MAX_TWO_FACTOR_ORDER,
};
use twofactor::theorem::{check_theorem, TheoremId, TheoremInstance};

#[test]
fn exact_two_factor_matches_edge_subset_search() {
    for n in 3..=7 {
        for g in enumerate_nonisomorphic(n, false).unwrap() {
            if n == 7 && g.size() > 13 {
                continue;
            }
            for k in 1..=n / 3 {
                let found = exact_two_factor(&g, k).unwrap();
                assert_eq!(found.is_some(), naive_has_two_factor(&g, k), "{} k={k}", to_graph6(&g));
                if let Some(f) = found {
                    f.system().validate(&g).unwrap();
                    assert!(f.system().is_spanning());
                    assert_eq!(f.cycle_count(), k);
                }
            }
        }
    }
}

#[test]
fn max_packing_dominates_every_packing() {
    for n in 3..=7 {
        for g in enumerate_nonisomorphic(n, true).unwrap() {
            for k in 1..=2 {
                let plain = exact_cycle_packing(&g, k, false).unwrap();
                let max = exact_cycle_packing(&g, k, true).unwrap();
                assert_eq!(plain.is_some(), max.is_some(), "{}", to_graph6(&g));
                let Some(max) = max else { continue };
                max.validate(&g).unwrap();
                assert_eq!(max.cycle_count(), k);
                if let Some(greedy) = greedy_cycle_packing(&g, k) {
                    greedy.validate(&g).unwrap();
                    assert!(greedy.total_order() <= max.total_order());
                }
                let spans = exact_two_factor(&g, k).unwrap().is_some();
                assert_eq!(spans, max.total_order() == n, "{}", to_graph6(&g));
            }
        }
    }
}

#[test]
fn theory_routes_never_claim_absent_packings() {
    for n in 3..=8 {
        for g in enumerate_nonisomorphic(n, false).unwrap() {
            for k in 1..=3 {
                let exists = exact_cycle_packing(&g, k, false).unwrap().is_some();
                for m in 1..=3 {
                    let v = packing_feasible_by_theory(&g, k, m);
                    if v.established.is_some() {
                        assert!(exists, "{} k={k}: {v} but no packing", to_graph6(&g));
                    }
                }
            }
        }
    }
}

#[test]
fn exceptional_families_are_excluded() {
    assert!(exact_cycle_packing(&two_kk_join_complement(3), 3, false).unwrap().is_none());
    assert!(packing_feasible_by_theory(&two_kk_join_complement(3), 3, 3).established.is_none());
    for n in [5, 6, 7] {
        let w = wheel(n).unwrap();
        assert!(exact_cycle_packing(&w, 2, false).unwrap().is_none());
        assert!(packing_feasible_by_theory(&w, 2, 3).established.is_none());
    }
}

#[test]
fn augment_strictly_grows_non_maximum_systems() {
    let mut improved = 0;
    for n in 6..=8 {
        for g in enumerate_nonisomorphic(n, true).unwrap() {
            let m = connectivity(&g);
            for k in 1..=2 {
                let Some(mut sys) = greedy_cycle_packing(&g, k) else { continue };
                for _ in 0..=n {
                    let before = sys.total_order();
                    let next = match augment(&g, &sys, m, k) {
                        Ok(AugmentOutcome::Improved { system, .. }) => system,
                        Ok(AugmentOutcome::NotMaximal { improvement: Some(system), .. }) => system,
                        Ok(_) | Err(SolverError::ContextUnavailable { .. }) => break,
                        Err(e) => panic!("{} k={k}: {e}", to_graph6(&g)),
                    };
                    next.validate(&g).unwrap();
                    assert_eq!(next.cycle_count(), k);
                    assert!(next.total_order() > before, "{} k={k}", to_graph6(&g));
                    improved += 1;
                    sys = next;
                }
            }
        }
    }
    assert!(improved > 1000, "{improved}");
}

#[test]
fn greedy_start_reaches_a_factor_under_the_hypothesis() {
    let mut factors = 0;
    let mut handed_off = 0;
    for n in 3..=8 {
        for g in enumerate_nonisomorphic(n, true).unwrap() {
            let m = connectivity(&g);
            for k in 1..=2 {
                let r = check_theorem(&g, &TheoremInstance::new(TheoremId::Main, k)).unwrap();
                if !r.hypothesis_holds {
                    continue;
                }
                match two_factor_via_proof(&g, m, k, StartMode::Greedy) {
                    Ok(run) => {
                        let ProofResult::Factor(f) = run.result else {
                            panic!("{} k={k}: {:?}", to_graph6(&g), run.result);
                        };
                        assert_eq!(f.cycle_count(), k);
                        factors += 1;
                    }
                    Err(SolverError::ContextUnavailable { .. }) if m.div_ceil(k) == 1 => handed_off += 1,
                    Err(e) => panic!("{} k={k}: {e}", to_graph6(&g)),
                }
            }
        }
    }
    assert!(factors > 1000);
    assert!(handed_off <= 1, "{handed_off}");
}

#[test]
fn capacity_limits_are_errors() {
    let big = complete(MAX_TWO_FACTOR_ORDER + 1);
    assert!(matches!(exact_two_factor(&big, 1), Err(SolverError::Capacity(_))));
    assert!(matches!(exact_cycle_packing(&big, 2, true), Err(SolverError::Capacity(_))));
    assert!(matches!(exact_two_factor(&complete(5), 0), Err(SolverError::InvalidArgument(_))));
}
