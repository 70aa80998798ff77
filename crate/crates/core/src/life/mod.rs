//! Two-dimensional cellular automata on the nine-input array.

pub mod engine;
pub mod grid;
pub mod patterns;
pub mod rules;

pub use engine::{conway_pla, rule_pla, run, step, LifeEngine};
pub use grid::{trace_to_text, Boundary, CellGrid};
pub use rules::{conway_truth_table, direct_step, table_step};
