//! Arbitrary 8-input functions: each 16x16 bitmap is a truth table whose
//! row is A (high nibble) and column is B (low nibble). The simulated
//! output decisions redraw the letters.

use spectral_pla::channel::{minterm_of_channel, WavelengthGrid};
use spectral_pla::devices::DeviceParams;
use spectral_pla::sim::{PlaConfig, PlaSimulator};
use spectral_pla::synthesis::{NamedTable, TruthTable};

const LETTERS: [(&str, [&str; 16]); 4] = [
    ("H", [
        "................", ".##.........##..", ".##.........##..", ".##.........##..",
        ".##.........##..", ".##.........##..", ".#############..", ".#############..",
        ".##.........##..", ".##.........##..", ".##.........##..", ".##.........##..",
        ".##.........##..", ".##.........##..", "................", "................",
    ]),
    ("U", [
        "................", ".##.........##..", ".##.........##..", ".##.........##..",
        ".##.........##..", ".##.........##..", ".##.........##..", ".##.........##..",
        ".##.........##..", ".##.........##..", ".##.........##..", "..##.......##...",
        "...#########....", "....#######.....", "................", "................",
    ]),
    ("S", [
        "................", "...#########....", "..###.....###...", ".##.........#...",
        ".##.............", "..###...........", "...########.....", "......#######...",
        "...........###..", "............##..", ".#..........##..", "..###.....###...",
        "...#########....", "................", "................", "................",
    ]),
    ("T", [
        "................", ".#############..", ".#############..", "......##........",
        "......##........", "......##........", "......##........", "......##........",
        "......##........", "......##........", "......##........", "......##........",
        "......##........", "......##........", "................", "................",
    ]),
];

fn main() -> spectral_pla::Result<()> {
    let tables: Vec<NamedTable> = LETTERS
        .iter()
        .map(|(name, rows)| {
            let t = TruthTable::from_index_fn(8, |g| rows[g / 16].as_bytes()[g % 16] == b'#')?;
            Ok(NamedTable::new(*name, t))
        })
        .collect::<spectral_pla::Result<_>>()?;
    let cfg = PlaConfig::for_tables(&WavelengthGrid::default(), DeviceParams::default(), &tables)?;
    let sim = PlaSimulator::calibrated(cfg)?;
    let results: Vec<_> = (0..256).map(|g| sim.evaluate(&minterm_of_channel(g, 8)?)).collect::<Result<_, _>>()?;
    for (k, t) in tables.iter().enumerate() {
        println!("{} (mask {}, margin {:.2} dB)", t.name, t.table.to_hex(), sim.calibration()[k].margin_db);
        for row in 0..16 {
            let line: String = (0..16).map(|col| if results[row * 16 + col].decisions[k] { '#' } else { '.' }).collect();
            println!("  {line}");
        }
    }
    Ok(())
}
