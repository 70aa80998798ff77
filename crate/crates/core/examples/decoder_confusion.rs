//! 8-input decoder over 256 channels: confusion matrix and per-row margins.

use spectral_pla::channel::WavelengthGrid;
use spectral_pla::devices::DeviceParams;
use spectral_pla::sim::{confusion_matrix, PlaConfig};
use spectral_pla::synthesis::stdlib_function;

fn main() -> spectral_pla::Result<()> {
    for (label, params) in [("default", DeviceParams::default()), ("ideal", DeviceParams::ideal())] {
        let cfg = PlaConfig::for_tables(&WavelengthGrid::default(), params, &stdlib_function("decoder")?)?;
        let m = confusion_matrix(&cfg)?;
        let margins = m.row_margins_db();
        let worst = (0..m.size()).min_by(|&a, &b| margins[a].total_cmp(&margins[b])).unwrap_or(0);
        println!("{label}: min margin {:.2} dB (input {worst})", m.min_margin_db());
        println!("  input 0: lit {:.2} dBm, ch1 {:.2} dBm, ch128 {:.2} dBm", m.dbm(0, 0), m.dbm(0, 1), m.dbm(0, 128));
        if let Some(path) = std::env::args().nth(1) {
            std::fs::write(format!("{path}.{label}.csv"), m.to_csv())?;
        }
    }
    Ok(())
}
