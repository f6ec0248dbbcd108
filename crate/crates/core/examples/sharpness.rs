//! The extremal graphs showing each hypothesis cannot be dropped.
//!
//! cargo run --example sharpness

use twofactor::graph::complete_bipartite;
use twofactor::theorem::{check_theorem, sharpness_suite, TheoremId, TheoremInstance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for row in sharpness_suite()? {
        println!("{row}");
    }
    let k33 = complete_bipartite(3, 3);
    for theorem in [TheoremId::Main, TheoremId::Corollary8] {
        println!("{}", check_theorem(&k33, &TheoremInstance::new(theorem, 2).with_m(3))?);
    }
    Ok(())
}
