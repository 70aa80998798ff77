//! Walks one input through the cascade and prints the surviving channels
//! after every stage, showing the square-wave masks halving their period.

use spectral_pla::channel::{plus_set, InputVector, WavelengthGrid};
use spectral_pla::devices::{apply_edfa, apply_sm, detect, mw_to_dbm, DeviceParams, SpectralModulatorStage, SpectrumState};

fn main() -> spectral_pla::Result<()> {
    let n = 4;
    let grid = WavelengthGrid::for_operands(n)?;
    let params = DeviceParams::default();
    let x = InputVector::parse("1011")?;

    println!("'+' masks (channel 0 on the left):");
    for stage in 1..=n {
        let mask: String = plus_set(stage, n)?.iter().map(|b| if b { '+' } else { '-' }).collect();
        println!("  stage {stage}: {mask}");
    }

    let mut s = SpectrumState::source(&grid, &params);
    println!("\ninput {x}");
    for (j, &bit) in x.bits().iter().enumerate() {
        let stage = SpectralModulatorStage::new(j + 1, n)?;
        s = apply_sm(&s, &stage, bit, &params)?;
        if j + 1 == params.edfa_position {
            s = apply_edfa(&s, &grid, &params)?;
        }
        let row: Vec<String> = s.dbm().iter().map(|d| format!("{d:6.1}")).collect();
        println!("after stage {} (bit {}): {}", j + 1, u8::from(bit), row.join(" "));
    }
    println!("total detected power {:.2} dBm", mw_to_dbm(detect(&s)));
    Ok(())
}
