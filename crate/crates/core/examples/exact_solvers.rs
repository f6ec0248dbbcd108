//! Exact 2-factors with k cycles, maximum-order cycle packings and the
//! sufficient conditions for k disjoint cycles.
//!
//! cargo run --example exact_solvers

use twofactor::graph::{complete, complete_bipartite, petersen, two_kk_join_complement, wheel, Graph};
use twofactor::invariants::connectivity;
use twofactor::solver::{exact_cycle_packing, exact_two_factor, greedy_cycle_packing, packing_feasible_by_theory};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graphs: Vec<(&str, Graph)> = vec![
        ("K6", complete(6)),
        ("K3,3", complete_bipartite(3, 3)),
        ("K4,4", complete_bipartite(4, 4)),
        ("wheel(6)", wheel(6)?),
        ("2K3+co-K3", two_kk_join_complement(3)),
        ("Petersen", petersen()),
    ];
    for (name, g) in &graphs {
        println!("{name}");
        for k in 1..=3 {
            match exact_two_factor(g, k)? {
                Some(f) => println!("  k={k}: 2-factor with cycle lengths {:?}", f.cycle_lengths()),
                None => println!("  k={k}: no 2-factor"),
            }
        }
        let k = 2;
        if let Some(sys) = exact_cycle_packing(g, k, true)? {
            let greedy = greedy_cycle_packing(g, k).map(|s| s.total_order());
            println!("  max {k}-packing covers {} of {} (greedy: {greedy:?})", sys.total_order(), g.order());
        } else {
            println!("  no {k} disjoint cycles");
        }
        let verdict = packing_feasible_by_theory(g, k, connectivity(g));
        println!("  sufficient condition for {k} disjoint cycles: {verdict}");
    }
    Ok(())
}
