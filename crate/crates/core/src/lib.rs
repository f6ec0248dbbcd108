pub mod cycles;
pub mod graph;
pub mod insertion;
pub mod invariants;
pub mod solver;
pub mod theorem;
