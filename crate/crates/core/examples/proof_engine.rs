//! The augmentation engine: start from a packing of k cycles and grow it
//! until it spans, printing each round. Also shows the context the engine
//! builds for a non-spanning maximum packing and its crossing certificates.
//!
//! cargo run --example proof_engine [graph6] [k]

use twofactor::graph::{complete_bipartite, from_graph6, to_graph6};
use twofactor::insertion::crossing_certificate;
use twofactor::invariants::connectivity;
use twofactor::solver::{build_proof_context, exact_cycle_packing, two_factor_via_proof, ProofResult, StartMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let g = from_graph6(&args.next().unwrap_or_else(|| "I~~~~~~~w".into()))?;
    let k: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2);
    let m = connectivity(&g);
    println!("{} n={} κ={m} k={k}", to_graph6(&g), g.order());

    for start in [StartMode::Greedy, StartMode::ExactMax] {
        let run = two_factor_via_proof(&g, m, k, start)?;
        for r in &run.rounds {
            println!("  {r}");
        }
        match run.result {
            ProofResult::Factor(f) => print!("{f}"),
            other => println!("  {other:?}"),
        }
    }

    // K3,5 has no 2-factor; its maximum 1-packing leaves two vertices out
    let h = complete_bipartite(3, 5);
    let sys = exact_cycle_packing(&h, 1, true)?.expect("K3,5 has a cycle");
    let ctx = build_proof_context(&h, &sys, connectivity(&h), 1)?;
    print!("\nK3,5 maximum cycle:\n{sys}");
    println!("  H0={:?} attachments={:?} X={:?} Y={:?}", ctx.component, ctx.attachments(), ctx.x_set, ctx.y_set);
    for (x, xp) in ctx.crossing_pairs() {
        println!("  ({x}, {xp}): {}", crossing_certificate(&h, &sys, &ctx, x, xp)?);
    }
    let run = two_factor_via_proof(&h, connectivity(&h), 1, StartMode::ExactMax)?;
    println!("  engine result: {:?}", run.result);
    Ok(())
}
