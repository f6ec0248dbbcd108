//! Splicing a path of insertible vertices into a cycle-and-path system.
//!
//! cargo run --example path_insertion

use twofactor::cycles::{CycleSystem, Member, OrientedCycle, OrientedPath};
use twofactor::graph::Graph;
use twofactor::insertion::{cycle_from_degree_rich_path, insert_path, is_insertible};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // a triangle 0-1-2 and a path 3-4, plus vertices 5 and 6 seeing consecutive members
    let g =
        Graph::from_edges(7, [(0, 1), (1, 2), (2, 0), (3, 4), (5, 6), (5, 0), (5, 1), (6, 1), (6, 2), (6, 3), (6, 4)])?;
    let sys = CycleSystem::checked(
        &g,
        vec![Member::Cycle(OrientedCycle::new(vec![0, 1, 2])?), Member::Path(OrientedPath::new(vec![3, 4])?)],
    )?;
    print!("before:\n{sys}");
    for x in [5, 6] {
        println!("{x} insertible: {}", is_insertible(&g, &sys, x)?);
    }
    let trace = insert_path(&g, &sys, &OrientedPath::new(vec![5, 6])?)?;
    print!("{trace}");
    print!("after:\n{}", trace.result);
    trace.result.validate(&g)?;

    let k4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3), (0, 3)])?;
    let c = cycle_from_degree_rich_path(&k4, &OrientedPath::new(vec![0, 1, 2, 3])?)?;
    println!("cycle through a degree-rich path in K4: {:?}", c.vertices());
    Ok(())
}
