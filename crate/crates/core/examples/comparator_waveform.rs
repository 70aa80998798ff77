//! 4-bit comparator driven by 10 Gb/s NRZ streams. The high bits toggle,
//! the low three bits are held, and each output's eye decisions are printed.

use spectral_pla::channel::WavelengthGrid;
use spectral_pla::devices::DeviceParams;
use spectral_pla::sim::report::margin_summary;
use spectral_pla::sim::{run_waveform, waveforms_to_csv, PlaConfig, PlaSimulator};
use spectral_pla::synthesis::stdlib_function;

fn stream(s: &str) -> Vec<bool> {
    s.bytes().map(|b| b == b'1').collect()
}

fn main() -> spectral_pla::Result<()> {
    let cfg = PlaConfig::for_tables(&WavelengthGrid::default(), DeviceParams::default(), &stdlib_function("comparator4")?)?;
    let sim = PlaSimulator::calibrated(cfg)?;
    println!("{}", margin_summary(&sim));

    let a3 = stream("0110100111010010");
    let b3 = stream("0101110010110100");
    for (label, a_low, b_low) in [("A<B low", "010", "101"), ("A=B low", "101", "101"), ("A>B low", "110", "001")] {
        let held = |bits: &str| bits.bytes().map(|b| vec![b == b'1'; a3.len()]).collect::<Vec<_>>();
        let mut streams = vec![a3.clone()];
        streams.extend(held(a_low));
        streams.push(b3.clone());
        streams.extend(held(b_low));
        let waves = run_waveform(&sim, &streams, 10e9, 16, 0.3)?;
        println!("\n{label}: A3={}  B3={}", bits(&a3), bits(&b3));
        for w in &waves {
            println!("  {:>3} {}", w.name, bits(&w.decisions()));
        }
        if let Some(dir) = std::env::args().nth(1) {
            std::fs::write(format!("{dir}/{}.csv", label.replace(['<', '=', '>', ' '], "_")), waveforms_to_csv(&waves))?;
        }
    }
    Ok(())
}

fn bits(b: &[bool]) -> String {
    b.iter().map(|&x| if x { '1' } else { '0' }).collect()
}
