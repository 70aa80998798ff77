//! Extending past the wavelength budget with a spatial switch tree:
//! the 4-input worked example (2 wavelength + 2 spatial operands) and a
//! 9-input majority-of-nine function simulated on 2 ports x 256 channels.

use spectral_pla::channel::{minterm_of_channel, WavelengthGrid};
use spectral_pla::devices::DeviceParams;
use spectral_pla::sim::{PlaConfig, PlaSimulator};
use spectral_pla::synthesis::{plan_spatial, NamedTable, TruthTable};

fn main() -> spectral_pla::Result<()> {
    let small = plan_spatial(4, 2, &[])?;
    println!("4 inputs, {} ports x {} channels", small.port_count, small.channel_count());
    for p in 0..small.port_count {
        let sel: String = small.port_assignment[p].iter().map(|&b| if b { '1' } else { '0' }).collect();
        let cells: Vec<String> = (0..small.channel_count())
            .map(|c| format!("{:04b}", small.global_minterm(p, c)))
            .collect();
        println!("  port {p} (I3 I4 = {sel}): {}", cells.join(" "));
    }

    let majority = TruthTable::from_index_fn(9, |g| g.count_ones() >= 5)?;
    let plan = plan_spatial(9, 8, &[NamedTable::new("maj9", majority.clone())])?;
    let cfg = PlaConfig::from_plan(WavelengthGrid::default(), DeviceParams::default(), &plan)?;
    let sim = PlaSimulator::calibrated(cfg)?;
    let mut errors = 0;
    for g in 0..512 {
        let r = sim.evaluate(&minterm_of_channel(g, 9)?)?;
        errors += usize::from(r.decisions[0] != majority.get(g));
    }
    let masks: Vec<usize> = plan.port_masks[0].iter().map(|m| m.count_ones()).collect();
    println!("\nmaj9: channels selected per port {masks:?}, margin {:.2} dB, {errors} errors over 512 inputs", sim.calibration()[0].margin_db);
    Ok(())
}
