//! Conway's Game of Life where every cell update is a 9-input PLA evaluation.
//! Usage: game_of_life [pulsar|gun|glider] [steps]

use spectral_pla::devices::DeviceParams;
use spectral_pla::life::patterns::{glider, gosper_gun, pulsar};
use spectral_pla::life::{conway_pla, Boundary, LifeEngine};

fn main() -> spectral_pla::Result<()> {
    let mut args = std::env::args().skip(1);
    let which = args.next().unwrap_or_else(|| "pulsar".into());
    let steps: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    let start = match which.as_str() {
        "gun" => gosper_gun(),
        "glider" => glider().centered_in(12, 12)?.with_boundary(Boundary::Toroidal),
        _ => pulsar(),
    };
    let engine = LifeEngine::new(conway_pla(DeviceParams::default())?)?;
    println!("rule margin {:.2} dB", engine.calibration().margin_db);
    for (k, g) in engine.run(&start, steps).iter().enumerate() {
        println!("step {k}: population {}", g.population());
        print!("{}", g.to_pattern());
    }
    Ok(())
}
