//! 4-bit adder and multiplier: decoded results for a few operand pairs and
//! the power distribution of every output port over all 256 inputs.

use spectral_pla::channel::{minterm_of_channel, WavelengthGrid};
use spectral_pla::devices::DeviceParams;
use spectral_pla::sim::report::{fmt_db, sweep};
use spectral_pla::sim::{PlaConfig, PlaSimulator};
use spectral_pla::synthesis::stdlib::decode_word;
use spectral_pla::synthesis::stdlib_function;

fn main() -> spectral_pla::Result<()> {
    for name in ["adder4", "multiplier4"] {
        let cfg = PlaConfig::for_tables(&WavelengthGrid::default(), DeviceParams::default(), &stdlib_function(name)?)?;
        let sim = PlaSimulator::calibrated(cfg)?;
        println!("{name}");
        for (a, b) in [(3, 5), (9, 7), (15, 15)] {
            let r = sim.evaluate(&minterm_of_channel(a * 16 + b, 8)?)?;
            println!("  {a} , {b} -> {}", decode_word(&r.decisions));
        }
        let report = sweep(&sim)?;
        println!("  port   high min (dBm)  low max (dBm)  threshold (dBm)  margin (dB)");
        for (k, cal) in sim.calibration().iter().enumerate() {
            let high = (0..256).filter(|&g| sim.config().expected(k, g)).count();
            println!(
                "  {:>4}   {:>13}  {:>13}  {:>15}  {:>11}   ({high} high inputs)",
                cal.name,
                fmt_db(10.0 * cal.min_high.log10()),
                fmt_db(10.0 * cal.max_low.log10()),
                fmt_db(10.0 * cal.threshold.log10()),
                fmt_db(cal.margin_db)
            );
        }
        println!("  mismatches: {}\n", report.mismatches(sim.config()).len());
    }
    Ok(())
}
