//! Named graphs, graph6 and edge-list I/O, and canonical forms.
//!
//! cargo run --example graph_formats

use twofactor::graph::{
    canonical_form, complete_bipartite, enumerate_nonisomorphic, from_edge_list, from_graph6, petersen, to_edge_list,
    to_graph6, two_kk_join_complement, wheel,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let named = [
        ("K3,4", complete_bipartite(3, 4)),
        ("wheel(6)", wheel(6)?),
        ("2K3+co-K3", two_kk_join_complement(3)),
        ("Petersen", petersen()),
    ];
    for (name, g) in &named {
        println!("{name:<10} n={:<2} e={:<2} graph6={}", g.order(), g.size(), to_graph6(g));
    }

    let g = from_graph6("Dhc")?;
    print!("Dhc as an edge list:\n{}", to_edge_list(&g));
    assert_eq!(from_edge_list(&to_edge_list(&g))?, g);

    let relabeled = g.relabel(&[4, 3, 2, 1, 0]);
    println!(
        "relabeled: {} -> canonical {} (same as original: {})",
        to_graph6(&relabeled),
        to_graph6(&canonical_form(&relabeled)),
        canonical_form(&relabeled) == canonical_form(&g)
    );

    for n in 1..=7 {
        println!("connected graphs on {n} vertices: {}", enumerate_nonisomorphic(n, true)?.len());
    }
    Ok(())
}
