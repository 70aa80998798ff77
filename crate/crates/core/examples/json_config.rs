//! Builds a PLA from a JSON document and evaluates one input.
//! Usage: json_config [path] [input bits]

use spectral_pla::channel::InputVector;
use spectral_pla::sim::{PlaConfig, PlaSimulator};

const SAMPLE: &str = include_str!("ideal_half_adder.json");

fn main() -> spectral_pla::Result<()> {
    let mut args = std::env::args().skip(1);
    let text = match args.next() {
        Some(path) => std::fs::read_to_string(path)?,
        None => SAMPLE.to_string(),
    };
    let cfg = PlaConfig::from_json(&text)?;
    let sim = PlaSimulator::calibrated(cfg)?;
    let inputs: Vec<String> = match args.next() {
        Some(bits) => vec![bits],
        None => (0..1usize << sim.config().operand_count())
            .map(|g| format!("{g:0w$b}", w = sim.config().operand_count()))
            .collect(),
    };
    for bits in inputs {
        let r = sim.evaluate(&InputVector::parse(&bits)?)?;
        let cols: Vec<String> = r.names.iter().zip(&r.decisions).map(|(n, d)| format!("{n}={}", u8::from(*d))).collect();
        println!("{bits}: {}", cols.join(" "));
    }
    println!("{}", sim.config().to_json()?);
    Ok(())
}
