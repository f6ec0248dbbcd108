//! Connectivity, independence number and the degree-sum invariants σₘ and
//! σₜᵐ on a few graphs.
//!
//! cargo run --example invariants

use twofactor::graph::{complete_bipartite, cycle, petersen, wheel, Graph};
use twofactor::invariants::{connectivity, delta_t, independence_number, maximum_independent_set, sigma_m, sigma_t_m};

fn show(name: &str, g: &Graph) -> Result<(), Box<dyn std::error::Error>> {
    let alpha = independence_number(g);
    println!("{name}: n={} κ={} α={alpha}", g.order(), connectivity(g));
    for m in 2..=4 {
        print!("  σ{m}={}", sigma_m(g, m));
    }
    println!();
    for (t, m) in [(2, 3), (2, 4), (3, 4)] {
        print!("  σ{t}^{m}={}", sigma_t_m(g, t, m)?);
    }
    println!();
    let big = maximum_independent_set(g);
    if big.len() >= 2 {
        println!("  a maximum independent set {big:?} has Δ2 = {}", delta_t(g, &big, 2)?);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    show("C7", &cycle(7))?;
    show("K3,4", &complete_bipartite(3, 4))?;
    show("wheel(7)", &wheel(7)?)?;
    show("Petersen", &petersen())?;
    Ok(())
}
