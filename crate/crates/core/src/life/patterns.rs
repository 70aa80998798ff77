//! Bundled pattern files.

use crate::life::grid::{Boundary, CellGrid};

pub const PULSAR: &str = include_str!("../../patterns/pulsar.cells");
pub const GOSPER_GUN: &str = include_str!("../../patterns/gosper_gun.cells");
pub const GLIDER: &str = include_str!("../../patterns/glider.cells");
pub const BLINKER: &str = include_str!("../../patterns/blinker.cells");
pub const BLOCK: &str = include_str!("../../patterns/block.cells");

fn load(text: &str) -> CellGrid {
    CellGrid::parse_pattern(text, Boundary::Dead).expect("bundled pattern parses")
}

/// Pulsar on its 17x17 field.
pub fn pulsar() -> CellGrid {
    load(PULSAR)
}

/// Gosper glider gun centred on a 50x50 dead-boundary field.
pub fn gosper_gun() -> CellGrid {
    load(GOSPER_GUN).centered_in(50, 50).expect("gun fits 50x50")
}

pub fn glider() -> CellGrid {
    load(GLIDER)
}

pub fn blinker() -> CellGrid {
    load(BLINKER)
}

pub fn block() -> CellGrid {
    load(BLOCK)
}
