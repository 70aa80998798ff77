//! Logic synthesis front-end: expressions and tables to channel masks.

pub mod capacity;
pub mod expr;
pub mod spatial;
pub mod stdlib;
pub mod table;

pub use capacity::{estimate_capacity, modulator_counts, CapacityEstimate};
pub use expr::{parse_expr, BoolExpr};
pub use spatial::{plan_spatial, SpatialPlan};
pub use stdlib::{stdlib_function, StdFunction};
pub use table::{bundle_from_json, bundle_to_json, compile_mask, truth_table, NamedTable, TruthTable};
